"""Equal-degree path detection, exhaustive extremal search and certificate checks."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import certificate_sweep_json, check_global_lemmas_json


def certificate_sweep(order, jobs=1):
    """Certificate report for every path-free class on `order` vertices, as a dict."""
    return _json.loads(certificate_sweep_json(order, jobs))


def check_global_lemmas(g):
    return _json.loads(check_global_lemmas_json(g))
