// ncover: approximate and exact N-distance vertex covers on edge-list graphs.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "ncover/cover.hpp"
#include "ncover/edge_list.hpp"
#include "ncover/extension.hpp"
#include "ncover/generate.hpp"
#include "ncover/oracle.hpp"
#include "ncover/reduction.hpp"
#include "ncover/trail.hpp"

namespace fs = std::filesystem;
using namespace ncover;

namespace {

constexpr int kUsageError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

TokenGraph load_graph(const std::string& path) {
    return parse_edge_list(read_file(path));
}

RandomSource make_rng(std::uint64_t seed, bool deterministic) {
    return deterministic ? RandomSource::deterministic(seed) : RandomSource::seeded(seed);
}

void emit(const std::optional<std::string>& out_path, const std::string& content) {
    if (out_path)
        write_file(*out_path, content);
    else
        std::cout << content;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

// Tokens for a stretched graph: original names plus fresh ones that are
// guaranteed not to collide.
TokenGraph stretched_tokens(const TokenGraph& base, const ExtendedGraph& ext) {
    TokenGraph tg;
    tg.graph = ext.graph;
    std::set<std::string> taken(base.tokens.begin(), base.tokens.end());
    for (VertexId v : ext.graph.vertices()) {
        if (base.graph.has_vertex(v)) {
            tg.tokens.push_back(base.token(v));
            continue;
        }
        std::string name = "x" + std::to_string(v);
        while (taken.contains(name))
            name.insert(name.begin(), 'x');
        taken.insert(name);
        tg.tokens.push_back(std::move(name));
    }
    return tg;
}

struct BenchTally {
    std::size_t holds = 0;
    std::size_t fails = 0;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"N-distance vertex cover toolkit"};
    app.require_subcommand(1);

    std::string graph_path;
    std::string cover_arg;
    std::string model = "gnp";
    std::optional<std::string> out_path;
    std::optional<std::string> trace_path;
    std::optional<std::string> csv_path;
    int n = 2;
    int k = 10;
    double p = 0.2;
    std::uint64_t seed = 0;
    bool deterministic = false;
    std::size_t oracle_limit = 20;

    auto add_graph = [&](CLI::App* cmd) {
        cmd->add_option("--graph", graph_path, "edge-list file")->required();
    };
    auto add_rng = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "base random seed");
        cmd->add_flag("--deterministic", deterministic,
                      "replace random choices with lexicographic tie-breaking");
    };

    CLI::App* solve = app.add_subcommand("solve", "approximate n-distance cover");
    add_graph(solve);
    solve->add_option("--n", n, "cover distance (>= 1)")->required();
    add_rng(solve);

    CLI::App* exact = app.add_subcommand("exact", "minimum n-distance cover by enumeration");
    add_graph(exact);
    exact->add_option("--n", n, "cover distance (>= 1)")->required();
    exact->add_option("--oracle-limit", oracle_limit, "max vertices the oracle accepts");

    CLI::App* verify = app.add_subcommand("verify", "check a cover; exit 1 with a witness if invalid");
    add_graph(verify);
    verify->add_option("--n", n, "cover distance (>= 1)")->required();
    verify->add_option("--cover", cover_arg, "comma-separated vertex tokens")->required();

    CLI::App* reduce_cmd = app.add_subcommand("reduce", "write the reduced graph");
    add_graph(reduce_cmd);
    reduce_cmd->add_option("--n", n, "trail length (>= 2)")->required();
    add_rng(reduce_cmd);
    reduce_cmd->add_option("--out", out_path, "output edge-list file (default stdout)");
    reduce_cmd->add_option("--trace", trace_path, "write the reduction trace here");

    CLI::App* extend_cmd = app.add_subcommand("extend", "write the stretched graph");
    add_graph(extend_cmd);
    extend_cmd->add_option("--n", n, "trail length (>= 2)")->required();
    add_rng(extend_cmd);
    extend_cmd->add_option("--out", out_path, "output edge-list file (default stdout)");

    CLI::App* trail_cmd = app.add_subcommand("trail", "find one n-trail");
    add_graph(trail_cmd);
    trail_cmd->add_option("--n", n, "trail length (>= 2)")->required();
    add_rng(trail_cmd);

    CLI::App* gen = app.add_subcommand("gen", "generate a graph");
    gen->add_option("--model", model, "gnp | path | cycle | star | tree");
    gen->add_option("--k", k, "vertex count (leaf count for star)");
    gen->add_option("--p", p, "edge probability for gnp");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--out", out_path, "output edge-list file (default stdout)");

    CLI::App* bench = app.add_subcommand("bench", "matching-bound report over a directory of graphs");
    bench->add_option("--graph", graph_path, "directory of .el files")->required();
    bench->add_option("--n", n, "trail length (>= 2)")->required();
    add_rng(bench);
    bench->add_option("--csv", csv_path, "append report rows here");
    bench->add_option("--out", out_path, "directory for eq8 counterexample copies");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*solve) {
            const TokenGraph tg = load_graph(graph_path);
            RandomSource rng = make_rng(seed, deterministic);
            const CoverSolution sol = solve_nmvc(tg.graph, n, rng);
            std::ostringstream out;
            for (VertexId v : sol.cover)
                out << tg.token(v) << '\n';
            out << "size=" << sol.cover.size() << " repaired=" << sol.repaired_count
                << " seed=" << sol.seed << '\n';
            std::cout << out.str();
            return 0;
        }
        if (*exact) {
            const TokenGraph tg = load_graph(graph_path);
            const OracleResult res = exact_nmvc(tg.graph, n, oracle_limit);
            std::ostringstream out;
            for (VertexId v : res.optimum)
                out << tg.token(v) << '\n';
            out << "size=" << res.size << '\n';
            std::cout << out.str();
            return 0;
        }
        if (*verify) {
            const TokenGraph tg = load_graph(graph_path);
            std::vector<VertexId> cover;
            for (const std::string& tok : split_commas(cover_arg)) {
                const auto id = tg.id_of(tok);
                if (!id)
                    throw std::runtime_error("unknown cover vertex '" + tok + "'");
                cover.push_back(*id);
            }
            const CoverCheck check = verify_cover(tg.graph, cover, n);
            if (check.covered) {
                std::cout << "valid\n";
                return 0;
            }
            std::cout << "invalid uncovered=" << tg.token(*check.witness) << '\n';
            return 1;
        }
        if (*reduce_cmd) {
            const TokenGraph tg = load_graph(graph_path);
            RandomSource rng = make_rng(seed, deterministic).derive("reduce");
            const ReductionResult res = reduce(tg.graph, n, rng);
            TokenGraph out{res.reduced, tg.tokens};
            emit(out_path, serialize_edge_list(out));
            if (trace_path)
                write_file(*trace_path, serialize_trace(
                    res.events, [&](VertexId v) { return tg.token(v); }));
            return 0;
        }
        if (*extend_cmd) {
            const TokenGraph tg = load_graph(graph_path);
            RandomSource rng = make_rng(seed, deterministic).derive("reduce");
            const ReductionResult res = reduce(tg.graph, n, rng);
            const ExtendedGraph ext = extend_graph(tg.graph, res.events, n);
            emit(out_path, serialize_edge_list(stretched_tokens(tg, ext)));
            return 0;
        }
        if (*trail_cmd) {
            const TokenGraph tg = load_graph(graph_path);
            RandomSource rng = make_rng(seed, deterministic).derive("trail");
            const ReductionState state(tg.graph, n);
            const auto trail = find_n_trail(state, n, rng);
            if (!trail) {
                std::cout << "no trail\n";
                return 1;
            }
            std::ostringstream out;
            out << "trail";
            for (VertexId v : trail->vertices)
                out << ' ' << tg.token(v);
            out << '\n';
            std::cout << out.str();
            return 0;
        }
        if (*gen) {
            const Graph g = generate(model, k, p, seed);
            emit(out_path, serialize_edge_list(with_decimal_tokens(g)));
            return 0;
        }
        if (*bench) {
            std::vector<fs::path> files;
            for (const auto& entry : fs::directory_iterator(graph_path))
                if (entry.is_regular_file() && entry.path().extension() == ".el")
                    files.push_back(entry.path());
            std::sort(files.begin(), files.end());
            if (csv_path && !fs::exists(*csv_path))
                write_file(*csv_path, matching_report_csv_header() + "\n");
            std::ofstream csv;
            if (csv_path) {
                csv.open(*csv_path, std::ios::app);
                if (!csv)
                    throw std::runtime_error("cannot write '" + *csv_path + "'");
            }
            BenchTally tally;
            for (const fs::path& file : files) {
                const TokenGraph tg = parse_edge_list(read_file(file.string()));
                const std::string id = file.stem().string();
                RandomSource rng = make_rng(seed, deterministic).derive("bench:" + id);
                RandomSource reduce_rng = rng.derive("reduce");
                const ReductionResult res = reduce(tg.graph, n, reduce_rng);
                const ExtendedGraph ext = extend_graph(tg.graph, res.events, n);
                RandomSource report_rng = rng.derive("report");
                const MatchingReport rep =
                    matching_report(tg.graph, res.reduced, ext.graph, n, report_rng, oracle_limit);
                if (csv_path)
                    csv << matching_report_csv_row(id, n, rep) << '\n';
                if (rep.eq8_holds) {
                    ++tally.holds;
                } else {
                    ++tally.fails;
                    if (out_path) {
                        fs::create_directories(*out_path);
                        fs::copy_file(file, fs::path(*out_path) / file.filename(),
                                      fs::copy_options::overwrite_existing);
                    }
                }
            }
            std::cout << "eq8 holds=" << tally.holds << " fails=" << tally.fails << '\n';
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}
