// liftgirth: bounds, constructions and searches for small high-girth lifts.

#include "liftgirth/bounds.hpp"
#include "liftgirth/constructors.hpp"
#include "liftgirth/error.hpp"
#include "liftgirth/nb_spectral.hpp"
#include "liftgirth/search.hpp"
#include "liftgirth/standard_graphs.hpp"
#include "liftgirth/universal_cover.hpp"

#include "trial_runner.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace lg = liftgirth;

namespace {

enum ExitCode { kOk = 0, kFailed = 1, kParse = 2, kPrecondition = 3, kBudget = 4 };

std::string fmt(const char* format, double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, format, x);
    return buf;
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw lg::Error("cannot write " + path);
    out << text;
}

lg::MultiGraph load_base(const std::string& path)
{
    return path.empty() ? lg::h23() : lg::read_graph_file(path);
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeConfig {
    std::string graph;
    int gmin = 3;
    int gmax = 30;
    std::string best_known;
    std::vector<int> tree;
    std::string csv;
    std::string plot_data;
    int balls = 0;
    bool verbose = false;
    double tol = 1e-10;
};

int cmd_analyze(const AnalyzeConfig& cfg)
{
    const auto h = load_base(cfg.graph);
    const auto cls = lg::validate(h);
    std::cout << "graph: " << h.vertex_count() << " vertices, " << h.edge_count() << " directed edges, "
              << (cls.admissible ? "admissible" : "not admissible") << "\n";
    if (!cls.admissible)
        throw lg::PreconditionError("analyze needs a connected graph with min degree >= 2 and max degree > 2");

    const auto s = lg::spectral_summary(h, cfg.tol);
    const auto eq = lg::rho_lambda_equality(h);
    std::cout << "rho            " << fmt("%.10f", s.rho) << "  (" << s.iterations << " iterations, residual "
              << fmt("%.2e", s.residual) << ")\n"
              << "Lambda         " << fmt("%.10f", s.lambda) << "\n"
              << "avg degree - 1 " << fmt("%.10f", s.avg_degree_minus_one) << "\n"
              << "rho == Lambda  " << (eq.equal ? "yes" : "no");
    if (eq.witness) {
        std::cout << "  (chain through vertices";
        for (const auto v : eq.witness->vertices)
            std::cout << " " << v;
        std::cout << ", mean " << fmt("%.10f", eq.witness->geometric_mean) << ")";
    }
    std::cout << "\n";

    if (cfg.balls > 0) {
        std::cout << "universal cover balls\n";
        for (lg::VertexId v = 0; v < h.vertex_count(); ++v) {
            const auto layers = lg::layer_counts(h, v, cfg.balls);
            lg::Count ball = 1;
            for (int r = 1; r <= cfg.balls; ++r) {
                ball += layers[static_cast<std::size_t>(r - 1)];
                std::cout << "  v=" << v << " r=" << r << " Delta=" << layers[static_cast<std::size_t>(r - 1)]
                          << " ball=" << ball << "\n";
            }
        }
    }

    const auto tree = cfg.tree.empty() ? lg::spanning_tree(h) : lg::spanning_tree_from_edges(h, cfg.tree);
    std::cout << "spanning tree: diameter " << tree.diameter << ", g0 = " << tree.g0() << "\n";
    const auto best = cfg.best_known.empty() ? lg::BestKnown{} : lg::read_best_known_file(cfg.best_known);
    const auto rows = lg::bounds_table(h, cfg.gmin, cfg.gmax, best, tree);

    auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
    std::printf("%4s %10s %10s %10s %14s %10s", "g", "moore_raw", "moore_adj", "es_bound", "ahl_n0", "best");
    if (cfg.verbose)
        std::printf(" %12s %10s", "moore_lemma", "es_ball");
    std::printf("\n");
    for (const auto& r : rows) {
        std::printf("%4d %10lld %10lld %10s %14.6f %10s", r.g, static_cast<long long>(r.moore_raw),
                    static_cast<long long>(r.moore_adjusted), opt(r.es_bound).c_str(), r.ahl_n0,
                    opt(r.best_known).c_str());
        if (cfg.verbose)
            std::printf(" %12s %10s", opt(r.moore_lemma_raw).c_str(), opt(r.es_ball).c_str());
        std::printf("\n");
    }
    std::fflush(stdout);

    if (!cfg.csv.empty())
        write_text(cfg.csv, lg::bounds_csv(rows));
    if (!cfg.plot_data.empty()) {
        std::string out = "g,ahl_n0,moore_adjusted,best_known,es_bound\n";
        for (const auto& r : rows) {
            auto o = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string(); };
            out += std::to_string(r.g) + "," + fmt("%.6f", r.ahl_n0) + "," + std::to_string(r.moore_adjusted) +
                   "," + o(r.best_known) + "," + o(r.es_bound) + "\n";
        }
        write_text(cfg.plot_data, out);
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// construct

struct ConstructConfig {
    std::string alg;
    int g = 0;
    int n = 0;
    int n_max = 0;
    int trials = 1000;
    std::uint64_t seed = 1;
    std::optional<std::uint64_t> trial_seed;
    int jobs = 1;
    std::string graph;
    std::string out;
    std::string map;
    std::string csv;
    std::string trial_csv;
    int budget = 1000;
    int max_steps = 10'000;
};

struct TrialResult {
    std::uint64_t seed = 0;
    bool success = false;
    bool budget_exhausted = false;
    int size = 0;
    std::optional<lg::Lift> witness;
};

bool is_h23_alg(const std::string& alg)
{
    return alg == "a" || alg == "b" || alg == "c" || alg == "gd" || alg == "gf";
}

TrialResult run_one(const ConstructConfig& cfg, const lg::MultiGraph& base, int n, std::uint64_t seed)
{
    TrialResult r;
    r.seed = seed;
    lg::Rng rng(seed);
    auto h23_lift = [&](lg::MultiGraph g) {
        auto map = lg::h23_cover_map(g);
        if (!map)
            throw lg::InternalError("construction output does not cover H23");
        return lg::Lift{std::move(g), std::move(*map)};
    };
    try {
        if (cfg.alg == "a" || cfg.alg == "b" || cfg.alg == "c") {
            const auto variant = cfg.alg == "a" ? lg::GreedyVariant::A
                                 : cfg.alg == "b" ? lg::GreedyVariant::B
                                                  : lg::GreedyVariant::C;
            auto res = lg::greedy_cycle(variant, n, cfg.g, rng);
            r.success = res.success;
            r.size = res.graph.vertex_count();
            if (res.success)
                r.witness = h23_lift(std::move(res.graph));
        } else if (cfg.alg == "gd" || cfg.alg == "gf") {
            auto g = lg::grow(cfg.alg == "gd" ? lg::GrowVariant::GD : lg::GrowVariant::GF, cfg.g, rng,
                              cfg.max_steps);
            r.success = true;
            r.size = g.vertex_count();
            r.witness = h23_lift(std::move(g));
        } else if (cfg.alg == "es") {
            r.witness = lg::es_construct(base, cfg.g, rng, {cfg.budget});
        } else {
            r.witness = lg::high_girth_cover(base, cfg.g, rng, {cfg.budget});
        }
        if (r.witness) {
            r.success = true;
            r.size = r.witness->graph.vertex_count();
        }
    } catch (const lg::BudgetError&) {
        r.success = false;
        r.budget_exhausted = true;
    }
    return r;
}

int cmd_construct(const ConstructConfig& cfg)
{
    if (is_h23_alg(cfg.alg) && !cfg.graph.empty())
        throw lg::PreconditionError("algorithm " + cfg.alg + " constructs lifts of H23 only; drop --graph");
    const auto base = load_base(cfg.graph);
    const bool greedy = cfg.alg == "a" || cfg.alg == "b" || cfg.alg == "c";

    std::vector<int> heights;
    if (greedy) {
        if (cfg.n > 0) {
            heights.push_back(cfg.n);
        } else {
            const int n0 = static_cast<int>(lg::moore_lift_bound(base, cfg.g).adjusted);
            const int n_max = cfg.n_max > 0 ? cfg.n_max : std::max(64, 8 * n0);
            for (int n = std::max(4, n0 + (4 - n0 % 4) % 4); n <= n_max; n += 4)
                heights.push_back(n);
        }
    } else {
        heights.push_back(0);
    }

    const int trials = cfg.trial_seed ? 1 : cfg.trials;
    std::vector<TrialResult> results;
    for (const int n : heights) {
        results = lg::cli::run_trials<TrialResult>(trials, cfg.jobs, [&](int i) {
            const auto seed = cfg.trial_seed ? *cfg.trial_seed : lg::derive_seed(cfg.seed, static_cast<std::uint64_t>(i));
            return run_one(cfg, base, n, seed);
        });
        if (std::any_of(results.begin(), results.end(), [](const TrialResult& r) { return r.success; }))
            break;
    }

    int successes = 0;
    const TrialResult* best = nullptr;
    for (const auto& r : results) {
        if (!r.success)
            continue;
        ++successes;
        if (!best || r.size < best->size)
            best = &r;
    }

    const std::string header = "g,alg,trials,successes,best_size,seed_of_best";
    const std::string row = std::to_string(cfg.g) + "," + cfg.alg + "," + std::to_string(trials) + "," +
                            std::to_string(successes) + "," + (best ? std::to_string(best->size) : "") + "," +
                            (best ? std::to_string(best->seed) : "");
    std::cout << header << "\n" << row << "\n";
    if (!cfg.csv.empty())
        write_text(cfg.csv, header + "\n" + row + "\n");
    if (!cfg.trial_csv.empty()) {
        std::string out = "trial,seed,success,size\n";
        for (std::size_t i = 0; i < results.size(); ++i)
            out += std::to_string(i) + "," + std::to_string(results[i].seed) + "," +
                   (results[i].success ? "1" : "0") + "," + std::to_string(results[i].size) + "\n";
        write_text(cfg.trial_csv, out);
    }
    if (best && best->witness) {
        const auto report = lg::verify_cover(best->witness->graph, base, best->witness->cover);
        if (!report.accepted)
            throw lg::InternalError("best witness fails cover verification");
        if (!cfg.out.empty())
            lg::write_graph_file(cfg.out, best->witness->graph);
        if (!cfg.map.empty())
            write_text(cfg.map, lg::serialize_cover_map(best->witness->cover));
    }
    if (successes == 0 && std::any_of(results.begin(), results.end(),
                                      [](const TrialResult& r) { return r.budget_exhausted; })) {
        std::cerr << "error: every trial failed and at least one exhausted its budget\n";
        return kBudget;
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// search

struct SearchConfig {
    int g = 0;
    int max_n = 16;
    bool certify = false;
    bool exact_girth = false;
    std::string out;
    std::string map;
    std::string lift;
};

int cmd_search(const SearchConfig& cfg)
{
    if (cfg.certify) {
        const auto c = lg::certify_lower_bound(cfg.g, cfg.max_n);
        if (c.refuted) {
            std::cout << c.line() << "\n";
            return kOk;
        }
        std::cout << "not refuted: height " << c.counterexample->n << " admits girth >= " << cfg.g << "\n";
        return kFailed;
    }
    const auto m = lg::minimum_size(cfg.g, cfg.max_n);
    if (!m.size) {
        std::cout << "g," << cfg.g << ",unresolved_up_to_height," << cfg.max_n << ",nodes," << m.nodes << "\n";
        return kOk;
    }
    const int height = *m.size / 2;
    std::cout << "g," << cfg.g << ",min_size," << *m.size << "\n";
    std::cout << "g," << cfg.g << ",refuted_up_to," << height - 1 << ",nodes," << m.nodes << "\n";
    auto witness = *m.witness;
    if (cfg.exact_girth) {
        bool found = false;
        lg::canonical_enumerate(height, cfg.g, [&](const lg::PermLiftH23& p) {
            if (lg::girth(p.lift().graph) != cfg.g)
                return true;
            witness = p;
            found = true;
            return false;
        });
        if (!found) {
            std::cout << "no minimum-size witness has girth exactly " << cfg.g << "\n";
            return kFailed;
        }
    }
    const auto lift = witness.lift();
    if (!cfg.out.empty())
        lg::write_graph_file(cfg.out, lift.graph);
    if (!cfg.map.empty())
        write_text(cfg.map, lg::serialize_cover_map(lift.cover));
    if (!cfg.lift.empty()) {
        const std::string base_name = "h23.g";
        write_text(cfg.lift, lg::serialize_lift(lg::h23(), witness.assignment(), base_name));
        const auto base_path = std::filesystem::path(cfg.lift).parent_path() / base_name;
        if (!std::filesystem::exists(base_path))
            lg::write_graph_file(base_path, lg::h23());
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyConfig {
    std::string graph;
    std::string base;
    std::string map;
    std::string lift;
    bool infer_h23 = false;
    int expect_girth = 0;
};

int cmd_verify(const VerifyConfig& cfg)
{
    lg::MultiGraph g;
    lg::MultiGraph h;
    lg::CoverMap m;
    if (!cfg.lift.empty()) {
        const auto file = lg::read_lift_file(cfg.lift);
        h = file.base;
        auto lift = lg::build_lift(h, file.assignment);
        g = std::move(lift.graph);
        m = std::move(lift.cover);
    } else {
        if (cfg.graph.empty())
            throw lg::PreconditionError("verify needs --graph (with --map or --infer-h23) or --lift");
        g = lg::read_graph_file(cfg.graph);
        h = load_base(cfg.base);
        if (cfg.infer_h23) {
            auto inferred = lg::h23_cover_map(g);
            if (!inferred) {
                std::cout << "cover: FAIL\n  no cover map onto H23 exists for this degree pattern\n";
                return kFailed;
            }
            m = std::move(*inferred);
        } else if (!cfg.map.empty()) {
            std::ifstream in(cfg.map, std::ios::binary);
            if (!in)
                throw lg::ParseError("cannot open " + cfg.map);
            std::stringstream buffer;
            buffer << in.rdbuf();
            m = lg::parse_cover_map(buffer.str());
        } else {
            throw lg::PreconditionError("verify needs --map or --infer-h23");
        }
    }

    const auto report = lg::verify_cover(g, h, m);
    std::cout << "cover: " << (report.accepted ? "PASS" : "FAIL") << "\n";
    if (report.accepted)
        std::cout << "height: " << report.height << "\n";
    for (const auto& msg : report.messages)
        std::cout << "  " << msg << "\n";
    if (!report.deficient_vertices.empty()) {
        std::cout << "  deficient vertices:";
        for (const auto v : report.deficient_vertices)
            std::cout << " " << v;
        std::cout << "\n";
    }
    if (!report.bad_edges.empty()) {
        std::cout << "  bad edges:";
        for (const auto e : report.bad_edges)
            std::cout << " " << e;
        std::cout << "\n";
    }
    const int gi = lg::girth(g);
    std::cout << "vertices: " << g.vertex_count() << "\n";
    std::cout << "girth: " << (gi == lg::kInfiniteGirth ? std::string("inf") : std::to_string(gi)) << "\n";
    if (lg::is_connected(g))
        std::cout << "diameter: " << lg::diameter(g) << "\n";
    else
        std::cout << "diameter: disconnected\n";
    bool ok = report.accepted;
    if (cfg.expect_girth > 0 && gi != cfg.expect_girth) {
        std::cout << "girth mismatch: expected " << cfg.expect_girth << "\n";
        ok = false;
    }
    return ok ? kOk : kFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bounds, constructions and exhaustive searches for high-girth lifts of small multigraphs"};
    app.require_subcommand(1);

    AnalyzeConfig analyze;
    auto* a = app.add_subcommand("analyze", "spectral summary and bounds table of a base graph");
    a->add_option("--graph", analyze.graph, "base graph file (default: built-in H23)");
    a->add_option("--gmin", analyze.gmin, "smallest girth in the table")->check(CLI::Range(3, 1000));
    a->add_option("--gmax", analyze.gmax, "largest girth in the table")->check(CLI::Range(3, 1000));
    a->add_option("--best-known", analyze.best_known, "CSV with header g,best_known");
    a->add_option("--tree", analyze.tree, "spanning tree as undirected edge ids")->delimiter(',');
    a->add_option("--csv", analyze.csv, "write the bounds table as CSV");
    a->add_option("--plot-data", analyze.plot_data, "write the lower/upper bound series as CSV");
    a->add_option("--balls", analyze.balls, "print universal-cover layer sizes up to this radius");
    a->add_option("--tol", analyze.tol, "relative tolerance of the power iteration");
    a->add_flag("--verbose", analyze.verbose, "also print the lemma-radius Moore value and the raw ES ball");

    ConstructConfig construct;
    auto* c = app.add_subcommand("construct", "run a randomized construction for many seeds");
    c->add_option("--alg", construct.alg, "a, b, c, gd, gf, es or 2lift")
        ->required()
        ->check(CLI::IsMember({"a", "b", "c", "gd", "gf", "es", "2lift"}));
    c->add_option("--g", construct.g, "target girth")->required()->check(CLI::Range(3, 1000));
    c->add_option("--n", construct.n, "cycle length for a/b/c (default: scan upward from the Moore bound)");
    c->add_option("--n-max", construct.n_max, "largest cycle length scanned by a/b/c");
    c->add_option("--trials", construct.trials, "number of trials")->check(CLI::PositiveNumber);
    c->add_option("--seed", construct.seed, "run seed; trial i uses derive_seed(seed, i)");
    c->add_option("--trial-seed", construct.trial_seed, "replay a single trial with this derived seed");
    c->add_option("--jobs", construct.jobs, "worker threads")->check(CLI::PositiveNumber);
    c->add_option("--graph", construct.graph, "base graph for es/2lift (default: built-in H23)");
    c->add_option("--out", construct.out, "write the smallest witness graph");
    c->add_option("--map", construct.map, "write the witness cover map");
    c->add_option("--csv", construct.csv, "write the summary row as CSV");
    c->add_option("--trial-csv", construct.trial_csv, "write one CSV row per trial");
    c->add_option("--budget", construct.budget, "2-lift samples per step (es, 2lift)")->check(CLI::PositiveNumber);
    c->add_option("--max-steps", construct.max_steps, "surgery steps per run (gd, gf)")->check(CLI::PositiveNumber);

    SearchConfig search;
    auto* s = app.add_subcommand("search", "exhaustive search over lifts of H23");
    s->add_option("--g", search.g, "target girth")->required()->check(CLI::Range(3, 1000));
    s->add_option("--max-n", search.max_n, "largest height searched")->check(CLI::PositiveNumber);
    s->add_flag("--certify", search.certify, "refute every height up to --max-n");
    s->add_flag("--exact-girth", search.exact_girth, "choose a minimum-size witness of girth exactly --g");
    s->add_option("--out", search.out, "write the witness graph");
    s->add_option("--map", search.map, "write the witness cover map");
    s->add_option("--lift", search.lift, "write the witness as a lift file over h23.g (created alongside if missing)");

    VerifyConfig verify;
    auto* v = app.add_subcommand("verify", "check a cover map and report girth and diameter");
    v->add_option("--graph", verify.graph, "covering graph file");
    v->add_option("--base", verify.base, "base graph file (default: built-in H23)");
    v->add_option("--map", verify.map, "cover map file");
    v->add_option("--lift", verify.lift, "lift file; verifies its canonical cover map");
    v->add_flag("--infer-h23", verify.infer_h23, "derive the cover map onto H23 from the degrees");
    v->add_option("--expect-girth", verify.expect_girth, "fail unless the girth equals this value");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    try {
        if (*a)
            return cmd_analyze(analyze);
        if (*c)
            return cmd_construct(construct);
        if (*s)
            return cmd_search(search);
        return cmd_verify(verify);
    } catch (const lg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const lg::StructuralError& e) {
        std::cerr << "invalid structure: " << e.what() << "\n";
        return kParse;
    } catch (const lg::PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return kPrecondition;
    } catch (const lg::BudgetError& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
}
