// Command line front end: recognize / filter / build / verify / reduce /
// gen / render / bench. Machine-readable results go to stdout as JSON lines,
// prose diagnostics to stderr. Exit codes: 0 decision-yes or success,
// 1 decision-no, 2 usage or format error, 3 guard refusal.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "enpg/cobipartite.hpp"
#include "enpg/constructions.hpp"
#include "enpg/difference.hpp"
#include "enpg/graph.hpp"
#include "enpg/grid.hpp"
#include "enpg/io.hpp"
#include "enpg/split.hpp"
#include "enpg/svg.hpp"

using json = nlohmann::json;
using namespace enpg;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

void emit(const json& j) { std::cout << j.dump() << "\n"; }

void write_text(const std::string& path, const std::string& body) {
    if (path.empty() || path == "-") {
        std::cout << body;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << body;
}

CoBipartition cobipartition_of(const Graph& g) {
    const LabelSet* k = g.annotation("K");
    const LabelSet* k2 = g.annotation("K2");
    if (k && k2) return CoBipartition{*k, *k2};
    auto part = find_cobipartition(g);
    if (!part) throw std::invalid_argument("graph is not co-bipartite");
    return *part;
}

SplitPartition split_partition_of(const Graph& g) {
    const LabelSet* k = g.annotation("K");
    const LabelSet* s = g.annotation("S");
    if (k && s) {
        SplitPartition part{*k, *s};
        // normalize: no stable vertex may see all of K
        bool moved = true;
        while (moved) {
            moved = false;
            for (const auto& v : part.S) {
                bool all = true;
                for (const auto& u : part.K)
                    if (!g.has_edge(v, u)) { all = false; break; }
                if (all) {
                    part.K.insert(v);
                    part.S.erase(v);
                    moved = true;
                    break;
                }
            }
        }
        return part;
    }
    auto part = find_split_partition(g);
    if (!part) throw std::invalid_argument("graph is not a split graph");
    return *part;
}

json levels_json(const DegreeLevels& lv) {
    json jx = json::object(), jy = json::object();
    for (const auto& [v, l] : lv.x_levels) jx[v] = l;
    for (const auto& [v, l] : lv.y_levels) jy[v] = l;
    return {{"t", lv.t}, {"x_levels", jx}, {"y_levels", jy}};
}

json outcome_json(const CobipOutcome& out) {
    json j;
    j["decision"] = out.decision ? "yes" : "no";
    switch (out.kind) {
        case CobipKind::TypeI: j["kind"] = "TypeI"; break;
        case CobipKind::TypeII: j["kind"] = "TypeII"; break;
        case CobipKind::None: j["kind"] = "none"; break;
    }
    if (out.type_i) {
        j["certificate"] = {{"zed", out.type_i->zed}, {"levels", levels_json(out.type_i->levels)}};
    } else if (out.type_ii) {
        json comps = json::array();
        for (const auto& c : out.type_ii->components)
            comps.push_back({{"k_part", c.k_part},
                             {"k2_part", c.k2_part},
                             {"levels", levels_json(c.levels)}});
        j["certificate"] = {{"components", comps}, {"isolated", out.type_ii->isolated}};
    } else {
        json trace = json::array();
        for (const auto& e : out.refutation) {
            json t{{"zed", e.zed}, {"reason", e.reason}};
            if (e.twok2)
                t["twok2"] = {e.twok2->x1, e.twok2->y1, e.twok2->x2, e.twok2->y2};
            trace.push_back(t);
        }
        j["certificate"] = {{"refutation", trace}};
    }
    return j;
}

json witness_json(const SplitWitness& w) {
    const char* xs[2] = {"L", "R"};
    const char* ys[2] = {"H", "V"};
    json parts = json::object(), sigmas = json::object(), classes = json::object();
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            std::string key = std::string(xs[x]) + ys[y];
            parts[key] = w.k_parts[x][y];
            sigmas[key] = w.sigmas[x][y];
        }
    for (const auto& [s, a] : w.s_classes)
        classes[s] = {{"class", to_string(a.cls)}, {"lo", a.lo}, {"hi", a.hi}};
    return {{"k_parts", parts}, {"sigmas", sigmas}, {"s_classes", classes}};
}

double time_recognize_ms(const CobipGraph& g, int reps) {
    using clock = std::chrono::steady_clock;
    auto start = clock::now();
    for (int r = 0; r < reps; ++r) {
        auto out = recognize_cobipartite_compact(g);
        if (!out.decision) std::cerr << "unexpected refutation in bench\n";
    }
    auto stop = clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"one-bend grid path intersection toolkit"};
    app.require_subcommand(1);

    std::string graph_path, rep_path, witness_path, out_path, decomp_path, root_label;
    std::string model = "difference", sizes = "1000,10000,100000";
    int bends = 1, cycle_k = 0, gen_n = 10, gen_kn = 5, gen_kn2 = 5, max_tries = 2000;
    int bench_reps = 0;
    std::uint64_t seed = 1;
    std::size_t max_bf_k = 8, max_bf_s = 12;
    bool force = false;

    // recognize
    auto* rec = app.add_subcommand("recognize", "decide one-bend representability");
    auto* rec_cobip = rec->add_subcommand("cobip", "co-bipartite recognition with certificates");
    rec_cobip->add_option("graph", graph_path)->required();
    auto* rec_split = rec->add_subcommand("split", "split recognition by exhaustive witness search");
    rec_split->add_option("graph", graph_path)->required();
    rec_split->add_option("--max-bruteforce-k", max_bf_k);
    rec_split->add_option("--max-bruteforce-s", max_bf_s);
    rec_split->add_flag("--force", force, "override the search guard");
    rec_split->add_option("--witness-out", out_path, "write the found witness here");
    bool deterministic = false;
    rec_split->add_flag("--deterministic", deterministic,
                        "sequential search order (always on; flag kept for compatibility)");

    // filter
    auto* filt = app.add_subcommand("filter", "necessary-condition filters");
    auto* filt_split = filt->add_subcommand("split", "degree-class size bound");
    filt_split->add_option("graph", graph_path)->required();

    // build
    auto* build = app.add_subcommand("build", "construct representations");
    auto* build_cycle = build->add_subcommand("cycle");
    build_cycle->add_option("k", cycle_k)->required();
    build_cycle->add_option("-o,--out", out_path);
    auto* build_tree = build->add_subcommand("tree");
    build_tree->add_option("graph", graph_path)->required();
    build_tree->add_option("--root", root_label);
    build_tree->add_option("-o,--out", out_path);
    auto* build_cobip = build->add_subcommand("cobip");
    build_cobip->add_option("graph", graph_path)->required();
    build_cobip->add_option("-o,--out", out_path);
    auto* build_split = build->add_subcommand("split");
    build_split->add_option("graph", graph_path)->required();
    build_split->add_option("--witness", witness_path)->required();
    build_split->add_option("-o,--out", out_path);

    // verify
    auto* ver = app.add_subcommand("verify", "oracle check of a representation");
    ver->add_option("--bends", bends);
    ver->add_option("graph", graph_path)->required();
    ver->add_option("rep", rep_path)->required();

    // reduce
    auto* red = app.add_subcommand("reduce", "hardness reductions");
    auto* red_ham = red->add_subcommand("ham2split", "4-regular diamond-free to split");
    red_ham->add_option("graph", graph_path)->required();
    red_ham->add_option("-o,--out", out_path);

    // gen
    auto* gen = app.add_subcommand("gen", "instance generators");
    auto* gen_tree = gen->add_subcommand("tree");
    gen_tree->add_option("--n", gen_n);
    gen_tree->add_option("--seed", seed);
    gen_tree->add_option("-o,--out", out_path);
    auto* gen_cobip = gen->add_subcommand("cobip");
    int gen_total = 0;
    gen_cobip->add_option("--kn", gen_kn);
    gen_cobip->add_option("--kn2", gen_kn2);
    gen_cobip->add_option("--n", gen_total, "total size, split evenly over the sides");
    gen_cobip->add_option("--model", model)->check(CLI::IsMember({"difference", "two-components", "noise"}));
    gen_cobip->add_option("--seed", seed);
    gen_cobip->add_option("-o,--out", out_path);
    auto* gen_4reg = gen->add_subcommand("4reg");
    gen_4reg->add_option("--n", gen_n);
    gen_4reg->add_option("--seed", seed);
    gen_4reg->add_option("--max-tries", max_tries);
    gen_4reg->add_option("-o,--out", out_path);
    gen_4reg->add_option("--decomp-out", decomp_path);

    // render
    auto* rend = app.add_subcommand("render", "representation to SVG");
    rend->add_option("rep", rep_path)->required();
    rend->add_option("-o,--out", out_path)->required();

    // bench
    auto* bench = app.add_subcommand("bench", "timing checks");
    auto* bench_cobip = bench->add_subcommand("cobip", "recognition wall time per size");
    bench_cobip->add_option("--sizes", sizes);
    bench_cobip->add_option("--seed", seed);
    bench_cobip->add_option("--reps", bench_reps, "repetitions per size (0 = auto)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (rec_cobip->parsed()) {
            Graph g = read_graph_file(graph_path);
            auto out = recognize_cobipartite(g, cobipartition_of(g));
            emit(outcome_json(out));
            return out.decision ? kExitYes : kExitNo;
        }
        if (rec_split->parsed()) {
            Graph g = read_graph_file(graph_path);
            SplitPartition part = split_partition_of(g);
            BruteForceOptions opts{max_bf_k, max_bf_s, force};
            std::optional<SplitWitness> w;
            try {
                w = brute_force_split_recognize(g, part, opts);
            } catch (const std::length_error& e) {
                std::cerr << e.what() << " (use --force to override)\n";
                emit(json{{"decision", "refused"}, {"reason", e.what()}});
                return kExitGuard;
            }
            if (w) {
                emit(json{{"decision", "yes"}, {"witness", witness_json(*w)}});
                if (!out_path.empty()) {
                    std::ostringstream ss;
                    write_witness(ss, *w);
                    write_text(out_path, ss.str());
                }
                return kExitYes;
            }
            emit(json{{"decision", "no"}});
            return kExitNo;
        }
        if (filt_split->parsed()) {
            Graph g = read_graph_file(graph_path);
            auto res = split_size_filter(g, split_partition_of(g));
            if (res.pass) {
                emit(json{{"filter", "pass"}});
                return kExitYes;
            }
            emit(json{{"d", res.d}, {"count", res.count}, {"bound", res.bound}});
            return kExitNo;
        }
        if (build_cycle->parsed()) {
            auto rep = build_cycle_rep(cycle_k);
            std::ostringstream ss;
            write_rep(ss, rep);
            write_text(out_path, ss.str());
            return kExitYes;
        }
        if (build_tree->parsed()) {
            Graph g = read_graph_file(graph_path);
            Label root = root_label.empty() ? g.vertices().front() : root_label;
            auto rep = build_tree_rep(g, root);
            std::ostringstream ss;
            write_rep(ss, rep);
            write_text(out_path, ss.str());
            return kExitYes;
        }
        if (build_cobip->parsed()) {
            Graph g = read_graph_file(graph_path);
            auto out = recognize_cobipartite(g, cobipartition_of(g));
            if (!out.decision) {
                emit(outcome_json(out));
                std::cerr << "graph has no one-bend representation\n";
                return kExitNo;
            }
            auto rep = build_cobip_rep(out);
            std::ostringstream ss;
            write_rep(ss, rep);
            write_text(out_path, ss.str());
            return kExitYes;
        }
        if (build_split->parsed()) {
            Graph g = read_graph_file(graph_path);
            SplitPartition part = split_partition_of(g);
            SplitWitness w = read_witness_file(witness_path);
            auto chk = check_split_witness(g, part, w);
            if (!chk.ok) {
                emit(json{{"decision", "no"}, {"violated", chk.violated},
                          {"offenders", chk.offenders}});
                return kExitNo;
            }
            auto rep = build_split_rep(g, part, w);
            std::ostringstream ss;
            write_rep(ss, rep);
            write_text(out_path, ss.str());
            return kExitYes;
        }
        if (ver->parsed()) {
            Graph g = read_graph_file(graph_path);
            Representation rep = read_rep_file(rep_path);
            auto res = verify_rep(rep, g, bends);
            json j{{"ok", res.ok}};
            if (!res.ok) {
                j["message"] = res.message;
                if (res.offending_path) j["offending_path"] = *res.offending_path;
            }
            emit(j);
            return res.ok ? kExitYes : kExitNo;
        }
        if (red_ham->parsed()) {
            Graph g = read_graph_file(graph_path);
            Graph reduced = reduce_ham_decomp_to_split(g);
            std::ostringstream ss;
            write_graph(ss, reduced);
            write_text(out_path, ss.str());
            return kExitYes;
        }
        if (gen_tree->parsed()) {
            std::ostringstream ss;
            write_graph(ss, gen_random_tree(gen_n, seed));
            write_text(out_path, ss.str());
            return kExitYes;
        }
        if (gen_cobip->parsed()) {
            CobipModel m = model == "difference" ? CobipModel::Difference
                           : model == "noise"    ? CobipModel::Noise
                                                 : CobipModel::TwoComponents;
            if (gen_total > 0) {
                gen_kn = std::max(1, gen_total / 2);
                gen_kn2 = std::max(1, gen_total - gen_kn);
            }
            std::ostringstream ss;
            write_graph(ss, gen_random_cobip(gen_kn, gen_kn2, m, seed));
            write_text(out_path, ss.str());
            return kExitYes;
        }
        if (gen_4reg->parsed()) {
            auto [g, d] = gen_ham_decomposable_4regular(gen_n, seed, max_tries);
            std::ostringstream ss;
            write_graph(ss, g);
            write_text(out_path, ss.str());
            if (!decomp_path.empty()) {
                std::ostringstream ds;
                write_decomp(ds, d);
                write_text(decomp_path, ds.str());
            }
            return kExitYes;
        }
        if (rend->parsed()) {
            Representation rep = read_rep_file(rep_path);
            write_text(out_path, render_svg(rep));
            return kExitYes;
        }
        if (bench_cobip->parsed()) {
            std::vector<int> ns;
            std::stringstream ss(sizes);
            std::string tok;
            while (std::getline(ss, tok, ',')) ns.push_back(std::stoi(tok));
            for (int n : ns) {
                int side2 = std::min(32, std::max(1, n / 4));
                auto g = gen_random_cobip_compact(std::max(1, n - side2), side2,
                                                  CobipModel::Difference, seed);
                int reps = bench_reps > 0 ? bench_reps
                                          : std::max(3, static_cast<int>(1000000 / std::max(1, n)));
                // one warmup, then the timed runs
                time_recognize_ms(g, 1);
                double ms = time_recognize_ms(g, reps);
                emit(json{{"n", n}, {"cross_edges", g.cross_edge_count()}, {"ms", ms},
                          {"reps", reps}});
            }
            return kExitYes;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    std::cerr << "no subcommand executed\n";
    return kExitUsage;
}
