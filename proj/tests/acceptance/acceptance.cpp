// Acceptance suite: runs every criterion end to end and prints one
// pass/fail line each. Criterion budgets are wall-clock seconds.
//
// Usage: acceptance [path-to-cli] [path-to-data-dir]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ncover/cover.hpp"
#include "ncover/edge_list.hpp"
#include "ncover/extension.hpp"
#include "ncover/generate.hpp"
#include "ncover/oracle.hpp"
#include "ncover/reduction.hpp"
#include "ncover/trail.hpp"

namespace fs = std::filesystem;
using namespace ncover;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli;
std::string g_data;
int g_failures = 0;

void report(int id, const std::string& name, bool pass, double seconds,
            const std::string& detail) {
    std::cout << "[" << id << "] " << name << ": " << (pass ? "PASS" : "FAIL") << " ("
              << std::fixed << seconds << "s" << (detail.empty() ? "" : "; " + detail) << ")\n";
    if (!pass)
        ++g_failures;
}

struct Timer {
    Clock::time_point t0 = Clock::now();
    double seconds() const {
        return std::chrono::duration<double>(Clock::now() - t0).count();
    }
};

Graph fig1() {
    GraphBuilder b;
    for (int v = 1; v <= 13; ++v)
        b.add_vertex(v);
    const std::pair<int, int> edges[] = {{1, 2}, {2, 3}, {2, 9},  {2, 10}, {3, 4},  {3, 6},
                                         {4, 5}, {6, 7}, {6, 8},  {9, 11}, {9, 12}, {11, 13}};
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    return b.build();
}

std::vector<Edge> edges_of(std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<Edge> out;
    for (auto [a, b] : pairs)
        out.emplace_back(a, b);
    std::sort(out.begin(), out.end());
    return out;
}

struct Instance {
    std::string id;
    Graph g;
    int n;
    std::uint64_t seed;
};

// Seeded corpus: gnp, tree, path, and cycle instances up to 40 vertices
// with n cycling through 1..5.
std::vector<Instance> corpus() {
    static const char* models[] = {"gnp", "tree", "path", "cycle"};
    std::vector<Instance> out;
    out.reserve(1000);
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const std::uint64_t mix = i * 0x9e3779b97f4a7c15ULL;
        const char* model = models[i % 4];
        const int k = 3 + static_cast<int>((mix >> 8) % 38); // 3..40
        const int n = 1 + static_cast<int>(i % 5);
        const double p = 0.05 + 0.35 * static_cast<double>((mix >> 16) % 8) / 7.0;
        std::ostringstream id;
        id << "corpus-" << i << '-' << model << "-k" << k << "-n" << n;
        out.push_back({id.str(), generate(model, k, p, i), n, i});
    }
    return out;
}

void write_counterexample(const fs::path& dir, const Instance& inst, const std::string& note) {
    fs::create_directories(dir);
    std::ofstream out(dir / (inst.id + ".el"));
    out << "# " << note << '\n';
    out << serialize_edge_list(with_decimal_tokens(inst.g));
}

std::optional<std::string> run_command(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return std::nullopt;
    std::string out;
    char buf[4096];
    for (std::size_t got; (got = fread(buf, 1, sizeof buf, pipe)) > 0;)
        out.append(buf, got);
    pclose(pipe);
    return out;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void criterion1() {
    Timer timer;
    bool ok = true;
    std::string detail;

    const Graph g = fig1();
    RandomSource det = RandomSource::deterministic();
    const ReductionResult res = reduce(g, 3, det);
    ok = ok && res.events.size() == 1;
    if (ok) {
        const ReductionEvent& ev = res.events.front();
        ok = ok && ev.trail.vertices == std::vector<VertexId>{1, 2, 3, 4};
        ok = ok && ev.targets_from_start == std::vector<VertexId>{4, 6, 10, 11, 12};
        ok = ok && ev.targets_from_end == std::vector<VertexId>{1, 7, 8, 9, 10};
        ok = ok && ev.removed_from_start == edges_of({{1, 2}, {2, 3}, {2, 9}, {2, 10},
                                                      {3, 4}, {3, 6}, {9, 11}, {9, 12}});
        ok = ok && ev.removed_from_end == edges_of({{6, 7}, {6, 8}});
        ok = ok && ev.added == edges_of({{1, 4}, {1, 6}, {1, 10}, {1, 11}, {1, 12},
                                         {4, 7}, {4, 8}, {4, 9}, {4, 10}});
    }
    RandomSource det2 = RandomSource::deterministic();
    const CoverSolution sol = solve_nmvc(g, 3, det2);
    ok = ok && sol.cover == std::vector<VertexId>{1, 4, 11, 13} && sol.repaired_count == 0;

    const double secs = timer.seconds();
    report(1, "worked-example golden replay", ok && secs < 1.0, secs, detail);
}

void criterion2() {
    Timer timer;
    const Graph g = fig1();
    const bool ok = verify_cover(g, std::vector<VertexId>{4, 9}, 3).covered &&
                    verify_cover(g, std::vector<VertexId>{3, 9}, 2).covered;
    const double secs = timer.seconds();
    report(2, "verifier goldens", ok && secs < 1.0, secs, "");
}

void criterion3(const std::vector<Instance>& insts) {
    Timer timer;
    std::size_t failures = 0;
    for (const Instance& inst : insts) {
        RandomSource rng = RandomSource::seeded(inst.seed);
        const CoverSolution sol = solve_nmvc(inst.g, inst.n, rng);
        if (!verify_cover(inst.g, sol.cover, inst.n).covered)
            ++failures;
    }
    const double secs = timer.seconds();
    std::ostringstream detail;
    detail << insts.size() << " instances, " << failures << " invalid covers";
    report(3, "universal validity", failures == 0 && secs < 60.0, secs, detail.str());
}

void criterion4(const std::vector<Instance>& insts) {
    Timer timer;
    std::size_t checked = 0;
    std::size_t violations = 0;
    std::size_t flagged = 0;
    double ratio_sum = 0.0;
    for (const Instance& inst : insts) {
        if (inst.g.vertex_count() > 12)
            continue;
        RandomSource rng = RandomSource::seeded(inst.seed);
        const CoverSolution sol = solve_nmvc(inst.g, inst.n, rng);
        const OracleResult opt = exact_nmvc(inst.g, inst.n);
        ++checked;
        if (sol.cover.size() < opt.size)
            ++violations;
        const double ratio = static_cast<double>(sol.cover.size()) / static_cast<double>(opt.size);
        ratio_sum += ratio;
        if (ratio > 4.0)
            ++flagged; // informational: the quoted bound is relative to the stretched instance
    }
    const double secs = timer.seconds();
    std::ostringstream detail;
    detail << checked << " instances, mean ratio " << (ratio_sum / static_cast<double>(checked))
           << ", " << flagged << " above 4.0";
    report(4, "oracle dominance", violations == 0 && secs < 120.0, secs, detail.str());
}

void criterion5(const std::vector<Instance>& insts) {
    Timer timer;
    std::size_t checked = 0;
    std::size_t violations = 0;
    for (const Instance& inst : insts) {
        if (inst.g.vertex_count() > 10)
            continue;
        RandomSource rng = RandomSource::seeded(inst.seed);
        const MatchingCover mc = approx_vertex_cover(inst.g, rng);
        const OracleResult opt = exact_vc(inst.g);
        ++checked;
        if (mc.cover.size() != 2 * mc.picks.size() || mc.cover.size() > 2 * opt.size)
            ++violations;
    }
    const double secs = timer.seconds();
    std::ostringstream detail;
    detail << checked << " instances, " << violations << " violations";
    report(5, "classic 2-approximation", violations == 0 && secs < 60.0, secs, detail.str());
}

void criterion6(const std::vector<Instance>& insts) {
    Timer timer;
    std::size_t checked = 0;
    std::size_t violations = 0;
    for (const Instance& inst : insts) {
        if (inst.n < 2)
            continue; // no reduction, no synthetic edges
        RandomSource rng = RandomSource::seeded(inst.seed).derive("reduce");
        const ReductionResult res = reduce(inst.g, inst.n, rng);
        const ExtendedGraph ext = extend_graph(inst.g, res.events, inst.n);
        ++checked;
        bool ok = ext.contracted() == inst.g;
        for (const ReductionEvent& ev : res.events) {
            for (const Attachment& a : ev.attachments) {
                const auto trail = ext.attachment_trail(a, ev.n_at_event);
                ok = ok && trail.size() == static_cast<std::size_t>(ev.n_at_event);
                for (const Edge& e : trail)
                    ok = ok && ext.graph.has_edge(e.u, e.v);
            }
        }
        if (!ok)
            ++violations;
    }
    const double secs = timer.seconds();
    std::ostringstream detail;
    detail << checked << " instances, " << violations << " violations";
    report(6, "extension soundness", violations == 0, secs, detail.str());
}

void criterion7(const std::vector<Instance>& insts) {
    Timer timer;
    std::size_t holds = 0;
    std::size_t fails = 0;
    std::size_t evaluated = 0;
    for (const Instance& inst : insts) {
        if (inst.n < 2 || evaluated >= 200)
            continue;
        RandomSource rng = RandomSource::seeded(inst.seed).derive("reduce");
        const ReductionResult res = reduce(inst.g, inst.n, rng);
        const ExtendedGraph ext = extend_graph(inst.g, res.events, inst.n);
        RandomSource rep_rng = RandomSource::seeded(inst.seed).derive("report");
        const MatchingReport rep =
            matching_report(inst.g, res.reduced, ext.graph, inst.n, rep_rng);
        ++evaluated;
        if (rep.eq8_holds) {
            ++holds;
        } else {
            ++fails;
            write_counterexample("c7_counterexamples", inst, "matching bound failed here");
        }
    }

    // The hand-derived 7-path instance must satisfy the bound.
    const Graph p7 = make_path(7);
    RandomSource det = RandomSource::deterministic();
    const ReductionResult res = reduce(p7, 3, det);
    const ExtendedGraph ext = extend_graph(p7, res.events, 3);
    RandomSource det2 = RandomSource::deterministic();
    const MatchingReport rep = matching_report(p7, res.reduced, ext.graph, 3, det2);
    const bool p7_holds = rep.eq8_holds && rep.m_prime == 1 && rep.m_dprime == 3;

    const double secs = timer.seconds();
    std::ostringstream detail;
    detail << evaluated << " instances, eq8 holds=" << holds << " fails=" << fails
           << (fails ? " (counterexamples in c7_counterexamples/)" : "")
           << "; 7-path holds=" << (p7_holds ? "yes" : "no");
    report(7, "matching bound report", p7_holds, secs, detail.str());
}

void criterion8() {
    Timer timer;
    bool ok = true;
    std::string detail;
    if (g_cli.empty() || g_data.empty()) {
        report(8, "byte-identical reruns", false, timer.seconds(),
               "cli path or data dir not supplied");
        return;
    }
    const std::string fig = g_data + "/fig1.el";
    const fs::path bench_dir = "c8_bench_graphs";
    fs::create_directories(bench_dir);
    for (int i = 0; i < 3; ++i) {
        std::ostringstream cmd;
        cmd << g_cli << " gen --model gnp --k 12 --p 0.25 --seed " << 40 + i << " --out "
            << (bench_dir / ("g" + std::to_string(i) + ".el")).string();
        run_command(cmd.str());
    }
    const std::string commands[] = {
        g_cli + " solve --graph " + fig + " --n 3 --seed 7",
        g_cli + " solve --graph " + fig + " --n 3 --deterministic --seed 1",
        g_cli + " exact --graph " + fig + " --n 2",
        g_cli + " verify --graph " + fig + " --n 3 --cover v4,v9",
        g_cli + " reduce --graph " + fig + " --n 3 --seed 5",
        g_cli + " extend --graph " + fig + " --n 3 --seed 5",
        g_cli + " trail --graph " + fig + " --n 3 --seed 11",
        g_cli + " gen --model gnp --k 20 --p 0.3 --seed 9",
        g_cli + " bench --graph " + bench_dir.string() + " --n 3 --seed 2",
    };
    for (const std::string& cmd : commands) {
        const auto a = run_command(cmd);
        const auto b = run_command(cmd);
        if (!a || !b || *a != *b || a->empty()) {
            ok = false;
            detail = "output differs for: " + cmd;
            break;
        }
    }
    const double secs = timer.seconds();
    report(8, "byte-identical reruns", ok && secs < 10.0, secs, detail);
}

void criterion9(const std::vector<Instance>& insts) {
    Timer timer;
    std::size_t repaired_instances = 0;
    std::size_t repaired_total = 0;
    for (const Instance& inst : insts) {
        RandomSource rng = RandomSource::seeded(inst.seed);
        const CoverSolution sol = solve_nmvc(inst.g, inst.n, rng);
        if (sol.repaired_count > 0) {
            ++repaired_instances;
            repaired_total += static_cast<std::size_t>(sol.repaired_count);
            write_counterexample("c9_counterexamples", inst,
                                 "repair added vertices; n=" + std::to_string(inst.n) +
                                     " seed=" + std::to_string(inst.seed));
        }
    }
    const double secs = timer.seconds();
    std::ostringstream detail;
    detail << "repair fired on " << repaired_instances << " of " << insts.size()
           << " instances (" << repaired_total << " vertices added)"
           << (repaired_instances ? "; instances in c9_counterexamples/" : "");
    report(9, "repair tally", true, secs, detail.str());
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1)
        g_cli = argv[1];
    if (argc > 2)
        g_data = argv[2];
    std::cout.setf(std::ios::fixed);
    std::cout.precision(2);

    const std::vector<Instance> insts = corpus();
    criterion1();
    criterion2();
    criterion3(insts);
    criterion4(insts);
    criterion5(insts);
    criterion6(insts);
    criterion7(insts);
    criterion8();
    criterion9(insts);

    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
