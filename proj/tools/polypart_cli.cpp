// Command-line front end: partition counting (path classes, brute force, or
// both cross-checked), decomposition listings, count tables, identity
// verification sweeps, and graph export.
//
// Exit codes: 0 success, 2 usage error, 3 verification failure or
// count mismatch, 4 I/O failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polypart/graph_export.hpp"
#include "polypart/identities.hpp"
#include "polypart/oracle.hpp"
#include "polypart/path_engine.hpp"
#include "polypart/polygonal.hpp"
#include "polypart/representation.hpp"

namespace {

constexpr int kUsage = 2;
constexpr int kVerifyFail = 3;
constexpr int kIoFail = 4;

// "-" writes to stdout
int write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return std::cout.good() ? 0 : kIoFail;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open " << path << " for writing\n";
        return kIoFail;
    }
    out << text;
    out.flush();
    if (!out.good()) {
        std::cerr << "write to " << path << " failed\n";
        return kIoFail;
    }
    return 0;
}

int run_count(std::uint64_t s, std::uint64_t n, bool zero,
              const std::string& method) {
    const polypart::PolygonOrder order{s};
    if (zero && method != "oracle") {
        std::cerr << "--zero needs --method oracle; path-class counting is "
                     "positive-rank only\n";
        return kUsage;
    }
    if (method == "oracle") {
        std::cout << polypart::oracle::count_partitions(order, n, zero) << "\n";
        return 0;
    }
    if (method == "theorem") {
        std::cout << polypart::count_by_paths(order, n) << "\n";
        return 0;
    }
    const std::uint64_t classes = polypart::count_by_paths(order, n);
    const std::uint64_t brute = polypart::oracle::count_partitions(order, n, false);
    if (classes != brute) {
        std::cout << "theorem=" << classes << " oracle=" << brute << "\n";
        std::cerr << "count mismatch for s=" << s << " n=" << n << "\n";
        return kVerifyFail;
    }
    std::cout << classes << "\n";
    return 0;
}

int run_decompose(std::uint64_t s, std::uint64_t n, bool zero) {
    const polypart::PolygonOrder order{s};
    std::ostringstream out;
    for (const auto& d : polypart::oracle::decompositions(order, n, zero)) {
        out << d.parts[0] << "+" << d.parts[1] << "+" << d.parts[2];
        if (d.ranks[2] >= 1) {  // rank-0 parts have no vertex on the poset
            const polypart::Coord end = polypart::triple_to_vertex(
                polypart::triple_from_ranks(d.ranks[0], d.ranks[1], d.ranks[2]));
            out << " @ (" << end.i << "," << end.j << ")";
        }
        out << " ranks=(" << d.ranks[0] << "," << d.ranks[1] << "," << d.ranks[2]
            << ")\n";
    }
    std::cout << out.str();
    return 0;
}

int run_table(std::uint64_t s, std::uint64_t max, const std::string& format,
              const std::string& out_path) {
    const polypart::PolygonOrder order{s};
    const std::vector<std::uint64_t> counts = polypart::count_table(order, max);
    std::string text;
    if (format == "csv") {
        std::ostringstream out;
        out << "n,count\n";
        for (std::uint64_t n = 0; n <= max; ++n) out << n << "," << counts[n] << "\n";
        text = out.str();
    } else {
        nlohmann::ordered_json doc;
        doc["s"] = s;
        doc["max"] = max;
        doc["counts"] = nlohmann::ordered_json::array();
        for (std::uint64_t n = 0; n <= max; ++n)
            doc["counts"].push_back({n, counts[n]});
        text = doc.dump() + "\n";
    }
    return write_output(out_path, text);
}

void print_report(const polypart::IdentityReport& report) {
    std::cout << report.name << " over [" << report.range_lo << ", "
              << report.range_hi << "]: "
              << (report.pass() ? "PASS" : "FAIL") << " (" << report.failures.size()
              << " failures)\n";
    std::size_t shown = 0;
    for (const auto& f : report.failures) {
        if (++shown > 20) {
            std::cout << "  ...\n";
            break;
        }
        std::cout << "  input=" << f.input << " lhs=" << f.lhs << " rhs=" << f.rhs
                  << "\n";
    }
}

int run_verify(const std::string& suite, std::uint64_t max) {
    std::vector<polypart::IdentityReport> reports;
    if (suite == "hs") {
        reports.push_back(polypart::verify_hirschhorn_sellers(max));
    } else if (suite == "hset") {
        reports.push_back(polypart::verify_h_set(max));
        std::cout << "exceptions <= " << std::min<std::uint64_t>(max, 100) << ":";
        for (std::uint64_t m = 0; m <= std::min<std::uint64_t>(max, 100); ++m)
            if (polypart::legendre_exception(m)) std::cout << " " << m;
        std::cout << "\n";
    } else if (suite == "coverage") {
        reports.push_back(polypart::verify_triangular_coverage(max));
    } else if (suite == "oracle") {
        for (std::uint64_t s = 3; s <= 10; ++s)
            reports.push_back(
                polypart::verify_count_agreement(polypart::PolygonOrder{s}, max));
    } else {  // theorem1
        for (std::uint64_t s : {3, 4, 5})
            reports.push_back(
                polypart::verify_theorem1(polypart::PolygonOrder{s}, max));
    }
    bool all_pass = true;
    for (const auto& report : reports) {
        print_report(report);
        all_pass = all_pass && report.pass();
    }
    return all_pass ? 0 : kVerifyFail;
}

int run_graph(std::uint64_t s, std::uint64_t max, const std::string& format,
              const std::string& out_path) {
    const polypart::PolygonOrder order{s};
    const polypart::TruncatedGraph g = polypart::build_graph(order, max);
    const std::string text =
        format == "dot" ? polypart::to_dot(g) : polypart::to_json(g) + "\n";
    return write_output(out_path, text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partitions of n into three s-gonal numbers"};
    app.require_subcommand(1);

    std::uint64_t s = 4;
    std::uint64_t n = 0;
    std::uint64_t max = 0;
    bool zero = false;
    std::string method = "both";
    std::string format;
    std::string out_path = "-";
    std::string suite;

    auto* count = app.add_subcommand("count", "count partitions of n");
    count->add_option("--s", s, "polygon order (>= 3)")->required();
    count->add_option("--n", n, "number to partition")->required();
    count->add_flag("--zero", zero, "count with zero parts allowed (oracle only)");
    count->add_option("--method", method, "theorem|oracle|both")
        ->check(CLI::IsMember({"theorem", "oracle", "both"}));

    auto* decompose = app.add_subcommand("decompose", "list the partitions of n");
    decompose->add_option("--s", s, "polygon order (>= 3)")->required();
    decompose->add_option("--n", n, "number to partition")->required();
    decompose->add_flag("--zero", zero, "include zero parts");

    auto* table = app.add_subcommand("table", "emit counts for all n <= max");
    table->add_option("--s", s, "polygon order (>= 3)")->required();
    table->add_option("--max", max, "largest n")->required();
    table->add_option("--format", format, "csv|json")
        ->required()
        ->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--out", out_path, "output path, - for stdout");

    auto* verify = app.add_subcommand("verify", "run an identity sweep");
    verify->add_option("--suite", suite, "hs|hset|coverage|oracle|theorem1")
        ->required()
        ->check(CLI::IsMember({"hs", "hset", "coverage", "oracle", "theorem1"}));
    verify->add_option("--max", max, "sweep bound")->required();

    auto* graph = app.add_subcommand("graph", "export the truncated path graph");
    graph->add_option("--s", s, "polygon order (>= 3)")->required();
    graph->add_option("--max", max, "value bound (>= 3)")->required();
    graph->add_option("--format", format, "dot|json")
        ->required()
        ->check(CLI::IsMember({"dot", "json"}));
    graph->add_option("--out", out_path, "output path, - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    }

    try {
        if (app.got_subcommand(count)) return run_count(s, n, zero, method);
        if (app.got_subcommand(decompose)) return run_decompose(s, n, zero);
        if (app.got_subcommand(table)) return run_table(s, max, format, out_path);
        if (app.got_subcommand(verify)) return run_verify(suite, max);
        if (app.got_subcommand(graph)) return run_graph(s, max, format, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
