#include "eqdeg/graph6.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace eqdeg {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

} // namespace

auto to_graph6(const Graph &g) -> std::string
{
    std::string out;
    int n = g.order();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
        out.push_back(static_cast<char>((n & 0x3f) + kBias));
    }

    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

auto from_graph6(std::string_view text) -> Graph
{
    if (text.starts_with(kHeader))
        text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw Graph6Error("graph6: empty input");
    for (char ch : text) {
        auto byte = static_cast<unsigned char>(ch);
        if (byte < 63 || byte > 126)
            throw Graph6Error("graph6: byte " + std::to_string(byte) + " outside 63..126");
    }

    std::size_t pos = 0;
    int n = 0;
    if (text[0] != '~') {
        n = text[0] - kBias;
        pos = 1;
    } else {
        if (text.size() < 4)
            throw Graph6Error("graph6: truncated extended size header");
        if (text[1] == '~')
            throw Graph6Error("graph6: orders above 64 are not supported");
        n = ((text[1] - kBias) << 12) | ((text[2] - kBias) << 6) | (text[3] - kBias);
        pos = 4;
        if (n < 63)
            throw Graph6Error("graph6: extended header used for order " + std::to_string(n));
    }
    if (n < 1 || n > kMaxOrder)
        throw Graph6Error("graph6: order " + std::to_string(n) + " outside 1..64");

    std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes)
        throw Graph6Error("graph6: expected " + std::to_string(bytes) + " payload bytes, found " +
                          std::to_string(text.size() - pos));

    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int value = text[pos + k / 6] - kBias;
            if ((value >> (5 - k % 6)) & 1) {
                rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
                rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
            }
        }
    }
    if (bits % 6 != 0) {
        int last = text.back() - kBias;
        if ((last & ((1 << (6 - bits % 6)) - 1)) != 0)
            throw Graph6Error("graph6: nonzero padding bits");
    }
    return Graph::from_rows(n, rows);
}

auto read_graph6(std::istream &in) -> std::vector<Graph>
{
    std::vector<Graph> graphs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        try {
            graphs.push_back(from_graph6(line));
        } catch (const Graph6Error &e) {
            throw Graph6Error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return graphs;
}

auto read_graph6_file(const std::string &path) -> std::vector<Graph>
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return read_graph6(in);
}

auto write_graph6(std::ostream &out, const std::vector<Graph> &graphs) -> void
{
    for (const auto &g : graphs)
        out << to_graph6(g) << '\n';
}

} // namespace eqdeg
