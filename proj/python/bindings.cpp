#include "eqdeg/canon.hpp"
#include "eqdeg/certificates.hpp"
#include "eqdeg/detector.hpp"
#include "eqdeg/enumerator.hpp"
#include "eqdeg/graph6.hpp"
#include "eqdeg/lambda.hpp"
#include "eqdeg/search.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace eqdeg;

namespace {

auto witness_or_none(const std::optional<Witness> &w) -> py::object
{
    if (!w)
        return py::none();
    return py::cast(w->vertices);
}

auto search_dict(const SearchResult &r) -> py::dict
{
    py::dict d;
    d["v"] = r.order;
    d["ell"] = r.length;
    d["p"] = r.p ? py::cast(*r.p) : py::none();
    d["extremal"] = r.extremal;
    d["histogram"] = r.histogram;
    d["enumerated"] = r.enumerated;
    d["seconds"] = r.seconds;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Equal-degree path detection, exhaustive extremal search and certificate checks";

    py::register_exception<Graph6Error>(m, "Graph6Error", PyExc_ValueError);
    py::register_exception<CertificateError>(m, "CertificateError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int order, const std::vector<Edge> &edges) { return Graph::from_edges(order, edges); }),
             py::arg("order"), py::arg("edges") = std::vector<Edge>{})
        .def_static("from_graph6", [](const std::string &text) { return from_graph6(text); })
        .def("to_graph6", [](const Graph &g) { return to_graph6(g); })
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("degree", &Graph::degree)
        .def("degrees", &Graph::degrees)
        .def("neighbors", [](const Graph &g, int v) { return g.neighbors(v).members(); })
        .def("adjacent", &Graph::adjacent)
        .def("edges", &Graph::edges)
        .def("complement", [](const Graph &g) { return complement(g); })
        .def("__eq__", &Graph::operator==)
        .def("__repr__", [](const Graph &g) {
            return "Graph(order=" + std::to_string(g.order()) + ", edges=" + std::to_string(g.edge_count()) +
                   ", graph6='" + to_graph6(g) + "')";
        });

    m.def("complete_bipartite", &complete_bipartite, py::arg("a"), py::arg("b"));
    m.def("half_graph", &half_graph, py::arg("n"));
    m.def("path_graph", &path_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("complete_graph", &complete_graph);
    m.def("star_graph", &star_graph);

    m.def(
        "find_equal_degree_path",
        [](const Graph &g, int length) { return witness_or_none(find_equal_degree_path(g, length)); },
        py::arg("g"), py::arg("length") = 3);
    m.def("has_equal_degree_path", &has_equal_degree_path, py::arg("g"), py::arg("length") = 3);
    m.def("path3_exists_between", &path3_exists_between);

    m.def("canonical_graph6", [](const Graph &g) { return to_graph6(canonical_graph(g)); });
    m.def("are_isomorphic", &are_isomorphic);
    m.def("automorphism_group_size", &automorphism_group_size);

    m.def(
        "count_graphs",
        [](int order, int min_edges, int max_edges, int jobs) {
            py::gil_scoped_release release;
            std::uint64_t total = 0;
            auto counts = enumerate_reduce<std::uint64_t>({order, min_edges, max_edges, jobs},
                                                          [](std::uint64_t &acc, const Graph &) { ++acc; });
            for (auto c : counts)
                total += c;
            return total;
        },
        py::arg("order"), py::arg("min_edges") = 0, py::arg("max_edges") = -1, py::arg("jobs") = 1);
    m.def(
        "enumerate_graph6",
        [](int order, int min_edges, int max_edges) {
            std::vector<std::string> codes;
            GraphEnumerator engine({order, min_edges, max_edges, 1});
            for (std::size_t t = 0; t < engine.task_count(); ++t)
                engine.run_task(t, [&](const Graph &g) { codes.push_back(to_graph6(g)); });
            return codes;
        },
        py::arg("order"), py::arg("min_edges") = 0, py::arg("max_edges") = -1);

    m.def(
        "compute_extremal",
        [](int order, int length, int jobs, bool fast) {
            SearchOptions options;
            options.order = order;
            options.length = length;
            options.jobs = jobs;
            options.fast = fast;
            SearchResult r;
            {
                py::gil_scoped_release release;
                r = compute_extremal(options);
            }
            return search_dict(r);
        },
        py::arg("order"), py::arg("length") = 3, py::arg("jobs") = 1, py::arg("fast") = false);
    m.def(
        "verify_theorem",
        [](int order, int jobs) {
            TheoremCheck check;
            {
                py::gil_scoped_release release;
                check = verify_theorem(order, jobs);
            }
            py::dict d;
            d["v"] = check.order;
            d["n"] = check.n;
            d["expected_p"] = check.expected_p;
            d["expected_graph6"] = check.expected_graph6;
            d["result"] = search_dict(check.result);
            d["holds"] = check.holds();
            return d;
        },
        py::arg("order"), py::arg("jobs") = 1);
    m.def(
        "certificate_sweep_json",
        [](int order, int jobs) {
            py::gil_scoped_release release;
            return certificate_sweep(order, jobs).to_json();
        },
        py::arg("order"), py::arg("jobs") = 1);
    m.def("check_global_lemmas_json", [](const Graph &g) { return check_global_lemmas(g).to_json(); });

    m.def("pair_partition", [](const Graph &g, int u, int v) {
        auto p = pair_partition(g, u, v);
        py::dict d;
        d["u"] = p.u;
        d["v"] = p.v;
        d["n"] = p.n;
        d["beta"] = p.beta;
        d["ind"] = p.ind;
        d["B"] = p.common.members();
        d["A_u"] = p.only_u.members();
        d["A_v"] = p.only_v.members();
        d["D"] = p.rest.members();
        d["x"] = p.x;
        d["c"] = p.c;
        d["zero_blocks"] = check_zero_blocks(g, p);
        return d;
    });

    m.def("lambda_closed", [](int n, int delta, int beta, int b_size) {
        return lambda_closed({n, delta, beta, b_size});
    });
    m.def("lambda_bruteforce", [](int n, int delta, int beta, int b_size) {
        return lambda_bruteforce({n, delta, beta, b_size});
    });
    m.def("lambda_case", [](int n, int delta, int beta, int b_size) {
        return static_cast<int>(lambda_case({n, delta, beta, b_size}));
    });
    m.def("lambda_grid", [](int lo, int hi) {
        std::vector<std::tuple<int, int, int, int>> out;
        for (const auto &i : lambda_grid(lo, hi))
            out.emplace_back(i.n, i.delta, i.beta, i.b_size);
        return out;
    });
}
