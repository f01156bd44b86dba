#include "cli.hpp"

#include "eqdeg/canon.hpp"
#include "eqdeg/certificates.hpp"
#include "eqdeg/detector.hpp"
#include "eqdeg/enumerator.hpp"
#include "eqdeg/graph6.hpp"
#include "eqdeg/lambda.hpp"
#include "eqdeg/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <regex>
#include <sstream>

namespace eqdeg::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The --out file when given, the data stream otherwise.
class Output {
public:
    Output(const std::string &path, std::ostream &fallback) : stream_(&fallback)
    {
        if (path.empty() || path == "-")
            return;
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_)
            throw UsageError("cannot open " + path + " for writing");
        stream_ = file_.get();
    }

    auto stream() -> std::ostream & { return *stream_; }

    auto finish() -> void
    {
        stream_->flush();
        if (!*stream_)
            throw UsageError("write failed");
    }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream *stream_;
};

auto read_inputs(const std::string &path, const std::vector<std::string> &inline_graphs) -> std::vector<Graph>
{
    std::vector<Graph> graphs;
    for (const auto &text : inline_graphs)
        graphs.push_back(from_graph6(text));
    if (path == "-") {
        auto more = read_graph6(std::cin);
        graphs.insert(graphs.end(), more.begin(), more.end());
    } else if (!path.empty()) {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw UsageError("cannot read " + path);
        auto more = read_graph6(in);
        graphs.insert(graphs.end(), more.begin(), more.end());
    }
    if (graphs.empty())
        throw UsageError("no input graphs; pass --in FILE or --graph G6");
    return graphs;
}

auto int_list(const std::string &text) -> std::vector<int>
{
    // "4,5,6" or "4..6", or a mix such as "1,3..5"
    std::vector<int> values;
    std::stringstream parts(text);
    std::string part;
    static const std::regex range(R"(\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*)");
    while (std::getline(parts, part, ',')) {
        std::smatch m;
        if (!std::regex_match(part, m, range))
            throw UsageError("cannot parse integer list '" + text + "'");
        int lo = std::stoi(m[1]);
        int hi = m[2].matched ? std::stoi(m[2]) : lo;
        if (hi < lo)
            throw UsageError("empty range in '" + text + "'");
        for (int v = lo; v <= hi; ++v)
            values.push_back(v);
    }
    if (values.empty())
        throw UsageError("empty integer list");
    return values;
}

auto witness_json(const std::optional<Witness> &w) -> Json
{
    return w ? Json(w->vertices) : Json(nullptr);
}

struct Common {
    std::string in;
    std::vector<std::string> graphs;
    std::string out;
    std::string format; // empty until parsed; then the subcommand's default
    int order = 0;
    int length = 3;
    int min_edges = 0;
    int max_edges = -1;
    int jobs = 1;
    bool timing = false;
};

auto add_input(CLI::App *cmd, Common &c) -> void
{
    cmd->add_option("--in", c.in, "graph6 file, one graph per line ('-' for stdin)");
    cmd->add_option("--graph", c.graphs, "graph6 string (repeatable)");
}

auto add_output(CLI::App *cmd, Common &c, std::vector<std::string> formats) -> void
{
    cmd->add_option("--out", c.out, "output file (default: stdout)");
    cmd->add_option("--format", c.format, "output format (default: " + formats.front() + ")")
        ->check(CLI::IsMember(formats));
    // Subcommands share Common, so the default is applied after parsing.
    cmd->parse_complete_callback([&c, first = formats.front()] {
        if (c.format.empty())
            c.format = first;
    });
}

auto add_jobs(CLI::App *cmd, Common &c) -> void
{
    cmd->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
}

auto detect(const Common &c, std::ostream &out) -> int
{
    auto graphs = read_inputs(c.in, c.graphs);
    Output sink(c.out, out);
    auto &os = sink.stream();
    bool any = false;
    Json doc;
    doc["schema"] = "detect-result/1";
    doc["length"] = c.length;
    doc["graphs"] = Json::array();
    if (c.format == "csv")
        os << "graph6,length,witness\n";
    for (const auto &g : graphs) {
        auto w = find_equal_degree_path(g, c.length);
        any = any || w.has_value();
        auto code = to_graph6(g);
        if (c.format == "json") {
            doc["graphs"].push_back({{"graph6", code}, {"witness", witness_json(w)}});
        } else if (c.format == "csv") {
            os << code << ',' << c.length << ',';
            if (w)
                for (std::size_t i = 0; i < w->vertices.size(); ++i)
                    os << (i ? " " : "") << w->vertices[i];
            os << '\n';
        } else if (!w) {
            os << code << '\n'; // g6: the graphs without a witness
        }
    }
    if (c.format == "json")
        os << doc.dump(2) << '\n';
    sink.finish();
    return any ? kOk : kNegative;
}

auto search(const Common &c, bool fast, const std::string &g6_out, std::ostream &out) -> int
{
    SearchOptions options;
    options.order = c.order;
    options.length = c.length;
    options.min_edges = c.min_edges;
    options.max_edges = c.max_edges;
    options.jobs = c.jobs;
    options.fast = fast;
    auto result = compute_extremal(options);

    Output sink(c.out, out);
    if (c.format == "json") {
        sink.stream() << result.to_json(c.timing) << '\n';
    } else {
        for (const auto &code : result.extremal)
            sink.stream() << code << '\n';
    }
    sink.finish();
    if (!g6_out.empty()) {
        Output extra(g6_out, out);
        for (const auto &code : result.extremal)
            extra.stream() << code << '\n';
        extra.finish();
    }
    return result.p ? kOk : kNegative;
}

auto verify(const Common &c, std::ostream &out) -> int
{
    auto check = verify_theorem(c.order, c.jobs);
    Json doc;
    doc["schema"] = "theorem-check/1";
    doc["v"] = check.order;
    doc["n"] = check.n;
    doc["expected_p"] = check.expected_p;
    doc["p"] = check.result.p ? Json(*check.result.p) : Json(nullptr);
    doc["expected_graph6"] = check.expected_graph6;
    doc["extremal"] = check.result.extremal;
    doc["enumerated"] = check.result.enumerated;
    doc["p_matches"] = check.p_matches;
    doc["unique_extremal"] = check.unique_extremal;
    doc["nothing_above"] = check.nothing_above;
    doc["holds"] = check.holds();
    doc["seconds"] = c.timing ? Json(check.result.seconds) : Json(nullptr);
    Output sink(c.out, out);
    sink.stream() << doc.dump(2) << '\n';
    sink.finish();
    return check.holds() ? kOk : kInternal;
}

auto certify(const Common &c, std::ostream &out, std::ostream &err) -> int
{
    CertificateReport report;
    if (c.order > 0) {
        report = certificate_sweep(c.order, c.jobs);
    } else {
        auto graphs = read_inputs(c.in, c.graphs);
        int order = graphs.front().order();
        report = CertificateReport::empty(order);
        std::size_t skipped = 0;
        for (const auto &g : graphs) {
            if (g.order() != order)
                throw UsageError("certify: all input graphs must have the same order");
            if (has_equal_degree_path3(g)) {
                ++skipped;
                continue;
            }
            certify_graph(g, report);
        }
        if (skipped > 0)
            err << "certify: skipped " << skipped << " graph(s) with an equal-degree path of length 3\n";
    }
    Output sink(c.out, out);
    sink.stream() << report.to_json() << '\n';
    sink.finish();
    return report.violation_count() == 0 ? kOk : kInternal;
}

auto lambda(const std::string &grid, const std::vector<int> &single, std::ostream &out, const std::string &path)
    -> int
{
    std::vector<LambdaInstance> instances;
    if (!grid.empty()) {
        static const std::regex spec(R"(\s*(?:n\s*=\s*)?(\d+)\s*(?:\.\.\s*(\d+))?\s*)");
        std::smatch m;
        if (!std::regex_match(grid, m, spec))
            throw UsageError("--grid expects n=LO..HI");
        int lo = std::stoi(m[1]);
        int hi = m[2].matched ? std::stoi(m[2]) : lo;
        instances = lambda_grid(lo, hi);
    } else if (single.size() == 4) {
        instances.push_back(LambdaInstance{single[0], single[1], single[2], single[3]});
    } else {
        throw UsageError("lambda: pass --grid n=LO..HI or --instance N DELTA BETA B_SIZE");
    }

    Output sink(path, out);
    auto &os = sink.stream();
    os << "n,delta,beta,b_size,case,closed,oracle,equal\n";
    bool all_equal = true;
    for (const auto &inst : instances) {
        auto closed = lambda_closed(inst);
        auto oracle = lambda_bruteforce(inst);
        all_equal = all_equal && closed == oracle;
        os << inst.n << ',' << inst.delta << ',' << inst.beta << ',' << inst.b_size << ','
           << static_cast<int>(lambda_case(inst)) << ',' << closed << ',' << oracle << ','
           << (closed == oracle ? "true" : "false") << '\n';
    }
    sink.finish();
    return all_equal ? kOk : kInternal;
}

auto construct(const std::string &family, const std::vector<int> &sizes, const Common &c, std::ostream &out) -> int
{
    auto need = [&](std::size_t count) {
        if (sizes.size() != count)
            throw UsageError("construct " + family + " takes " + std::to_string(count) + " size value(s)");
    };
    Graph g;
    if (family == "complete-bipartite") {
        need(2);
        g = complete_bipartite(sizes[0], sizes[1]);
    } else {
        need(1);
        int s = sizes[0];
        if (family == "half")
            g = half_graph(s);
        else if (family == "path")
            g = path_graph(s);
        else if (family == "cycle")
            g = cycle_graph(s);
        else if (family == "complete")
            g = complete_graph(s);
        else if (family == "empty")
            g = empty_graph(s);
        else if (family == "star")
            g = star_graph(s);
        else
            throw UsageError("unknown family " + family);
    }
    Output sink(c.out, out);
    if (c.format == "g6") {
        sink.stream() << to_graph6(g) << '\n';
    } else {
        Json doc;
        doc["graph6"] = to_graph6(g);
        doc["order"] = g.order();
        doc["edges"] = g.edge_count();
        doc["degrees"] = g.degrees();
        doc["witness"] = witness_json(find_equal_degree_path(g, c.length));
        doc["length"] = c.length;
        sink.stream() << doc.dump(2) << '\n';
    }
    sink.finish();
    return kOk;
}

auto table(const std::string &lengths, const std::string &orders, const Common &c, std::ostream &out) -> int
{
    auto rows = build_table(int_list(lengths), int_list(orders), c.jobs);
    Output sink(c.out, out);
    if (c.format == "csv")
        sink.stream() << table_to_csv(rows, c.timing);
    else
        sink.stream() << table_to_json(rows, c.timing) << '\n';
    sink.finish();
    return kOk;
}

auto enumerate(const Common &c, bool free_only, std::ostream &out) -> int
{
    EnumerationOptions options{c.order, c.min_edges, c.max_edges, c.jobs};
    Output sink(c.out, out);
    auto &os = sink.stream();
    auto keep = [&](const Graph &g) { return !free_only || !has_equal_degree_path(g, c.length); };
    if (c.jobs == 1) {
        GraphEnumerator engine(options);
        for (std::size_t t = 0; t < engine.task_count(); ++t)
            engine.run_task(t, [&](const Graph &g) {
                if (keep(g))
                    os << to_graph6(g) << '\n';
            });
    } else {
        auto parts = enumerate_reduce<std::string>(options, [&](std::string &acc, const Graph &g) {
            if (keep(g)) {
                acc += to_graph6(g);
                acc += '\n';
            }
        });
        for (const auto &part : parts)
            os << part;
    }
    sink.finish();
    return kOk;
}

} // namespace

auto run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) -> int
{
    CLI::App app("Equal-degree path detection, extremal search and certificate checking", "eqdeg");
    app.require_subcommand(1);
    Common c;

    auto *detect_cmd = app.add_subcommand("detect", "Find an equal-degree path of a given length");
    add_input(detect_cmd, c);
    detect_cmd->add_option("--length", c.length, "path length")->capture_default_str();
    add_output(detect_cmd, c, {"json", "csv", "g6"});

    bool fast = false;
    std::string g6_out;
    auto *search_cmd = app.add_subcommand("search", "Exact extremal edge count by exhaustive search");
    search_cmd->add_option("--vertices", c.order, "number of vertices")->required();
    search_cmd->add_option("--length", c.length, "path length")->capture_default_str();
    search_cmd->add_option("--min-edges", c.min_edges, "smallest edge count searched");
    search_cmd->add_option("--max-edges", c.max_edges, "largest edge count searched");
    search_cmd->add_flag("--fast", fast, "skip graphs below the best edge count so far");
    search_cmd->add_option("--g6-out", g6_out, "also write the extremal graphs here");
    add_jobs(search_cmd, c);
    add_output(search_cmd, c, {"json", "g6"});

    auto *verify_cmd = app.add_subcommand("verify", "Check the extremal value and graph for length 3");
    verify_cmd->add_option("--vertices", c.order, "number of vertices (5..11)")->required();
    add_jobs(verify_cmd, c);
    add_output(verify_cmd, c, {"json"});

    auto *certify_cmd = app.add_subcommand("certify", "Run the counting certificates");
    auto *certify_order = certify_cmd->add_option("--vertices", c.order, "sweep every class on this many vertices");
    add_input(certify_cmd, c);
    certify_cmd->get_option("--in")->excludes(certify_order);
    certify_cmd->get_option("--graph")->excludes(certify_order);
    add_jobs(certify_cmd, c);
    add_output(certify_cmd, c, {"json"});

    std::string grid;
    std::vector<int> instance;
    auto *lambda_cmd = app.add_subcommand("lambda", "Closed form against exhaustive maximisation");
    auto *grid_opt = lambda_cmd->add_option("--grid", grid, "n=LO..HI");
    lambda_cmd->add_option("--instance", instance, "N DELTA BETA B_SIZE")->expected(4)->excludes(grid_opt);
    add_output(lambda_cmd, c, {"csv"});

    std::string family;
    std::vector<int> sizes;
    auto *construct_cmd = app.add_subcommand("construct", "Build a named graph");
    construct_cmd->add_option("--family", family, "complete-bipartite|half|path|cycle|complete|empty|star")
        ->required();
    construct_cmd->add_option("--size", sizes, "size parameter(s)")->required();
    construct_cmd->add_option("--length", c.length, "path length for the witness field")->capture_default_str();
    add_output(construct_cmd, c, {"json", "g6"});

    std::string lengths = "3";
    std::string orders;
    auto *table_cmd = app.add_subcommand("table", "Extremal values over a grid of lengths and orders");
    table_cmd->add_option("--length", lengths, "lengths, e.g. 1..4 or 2,4")->capture_default_str();
    table_cmd->add_option("--vertices", orders, "orders, e.g. 4..8")->required();
    add_jobs(table_cmd, c);
    add_output(table_cmd, c, {"csv", "json"});

    bool free_only = false;
    auto *enumerate_cmd = app.add_subcommand("enumerate", "Write one graph6 line per isomorphism class");
    enumerate_cmd->add_option("--vertices", c.order, "number of vertices")->required();
    enumerate_cmd->add_option("--min-edges", c.min_edges, "smallest edge count");
    enumerate_cmd->add_option("--max-edges", c.max_edges, "largest edge count");
    enumerate_cmd->add_flag("--property-free", free_only, "keep only graphs without the path");
    enumerate_cmd->add_option("--length", c.length, "path length for --property-free")->capture_default_str();
    add_jobs(enumerate_cmd, c);
    add_output(enumerate_cmd, c, {"g6"});

    for (auto *cmd : {search_cmd, verify_cmd, table_cmd})
        cmd->add_flag("--timing", c.timing, "report wall-clock seconds");

    std::vector<std::string> storage{"eqdeg"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &s : storage)
        argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*detect_cmd)
            return detect(c, out);
        if (*search_cmd)
            return search(c, fast, g6_out, out);
        if (*verify_cmd)
            return verify(c, out);
        if (*certify_cmd)
            return certify(c, out, err);
        if (*lambda_cmd)
            return lambda(grid, instance, out, c.out);
        if (*construct_cmd)
            return construct(family, sizes, c, out);
        if (*table_cmd)
            return table(lengths, orders, c, out);
        if (*enumerate_cmd)
            return enumerate(c, free_only, out);
    } catch (const UsageError &e) {
        err << "eqdeg: " << e.what() << '\n';
        return kUsage;
    } catch (const Graph6Error &e) {
        err << "eqdeg: malformed graph6: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument &e) {
        err << "eqdeg: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception &e) {
        err << "eqdeg: internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}

} // namespace eqdeg::cli
