#pragma once

#include "eqdeg/graph.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eqdeg {

class Graph6Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Headerless graph6: one size byte (or '~' plus three 6-bit groups from 63
/// vertices up), then the upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ...
/// packed six bits per byte, most significant first, each byte offset by 63.
auto to_graph6(const Graph &g) -> std::string;

/// Accepts an optional ">>graph6<<" prefix and a trailing line terminator.
/// Throws Graph6Error on anything malformed.
auto from_graph6(std::string_view text) -> Graph;

/// One graph per line; blank lines are skipped.
auto read_graph6(std::istream &in) -> std::vector<Graph>;
auto read_graph6_file(const std::string &path) -> std::vector<Graph>;
auto write_graph6(std::ostream &out, const std::vector<Graph> &graphs) -> void;

} // namespace eqdeg
