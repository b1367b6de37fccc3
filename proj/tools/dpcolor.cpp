// dpcolor: DP-coloring toolkit CLI.
// Subcommands: gen | validate | color | exact | sample | experiment.
// stdout is machine-parseable (key=value or CSV); diagnostics go to stderr.
// Exit codes: 0 computed/verified result, 1 reported failure (caps, NONE,
// violations, budget), 2 usage or input error.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "dpc/colorer.hpp"
#include "dpc/cover.hpp"
#include "dpc/exact.hpp"
#include "dpc/gen.hpp"
#include "dpc/graph.hpp"
#include "dpc/harness.hpp"
#include "dpc/rng.hpp"
#include "dpc/sampler.hpp"

namespace {

constexpr uint64_t kDefaultSeed = 12345; // fixed default; never wall-clock

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open `" + path + "`");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw std::runtime_error("cannot write `" + out_path + "`");
    out << text;
}

std::shared_ptr<const dpc::Graph> load_graph(const std::string& path) {
    return std::make_shared<dpc::Graph>(dpc::parse_graph(slurp(path)));
}

dpc::Cover load_or_make_cover(const std::string& cover_path,
                              std::shared_ptr<const dpc::Graph> g, int k, uint64_t seed) {
    if (!cover_path.empty())
        return dpc::parse_cover(slurp(cover_path), std::move(g));
    if (k < 1)
        throw std::runtime_error("supply --cover or --k to build a random cover");
    return dpc::random_cover(std::move(g), k, dpc::derive_seed(seed, 99));
}

std::string coloring_line(const dpc::NeighborhoodInstance& inst,
                          const dpc::PartialColoring& I) {
    std::ostringstream out;
    bool any = false;
    for (int v : inst.nbrs) {
        if (I.pick[v] < 0)
            continue;
        if (any)
            out << " ";
        out << v << ":" << I.pick[v];
        any = true;
    }
    if (!any)
        out << "-";
    return out.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"DP-coloring (correspondence coloring) toolkit"};
    app.require_subcommand(1);

    // --- gen ---
    auto* gen = app.add_subcommand("gen", "generate graphs and covers");
    gen->require_subcommand(1);
    auto* gen_graph = gen->add_subcommand("graph", "emit a graph in edge-list format");
    std::string family = "cycle";
    int gn = 5, gm = 5, gr = 4;
    double gp = 0.5, gd = 8.0;
    uint64_t seed = kDefaultSeed;
    std::string out_path;
    gen_graph->add_option("--family", family,
                          "cycle|complete|random_bipartite|random_triangle_free|random_kr_free");
    gen_graph->add_option("--n", gn, "vertex count (left part for bipartite)");
    gen_graph->add_option("--m", gm, "right part size (bipartite)");
    gen_graph->add_option("--p", gp, "edge probability (bipartite)");
    gen_graph->add_option("--d", gd, "target average degree (random families)");
    gen_graph->add_option("--r", gr, "forbidden clique size (random_kr_free)");
    gen_graph->add_option("--seed", seed, "rng seed");
    gen_graph->add_option("--out", out_path, "output file (default stdout)");

    auto* gen_cover = gen->add_subcommand("cover", "emit a random cover of a graph");
    std::string graph_path, cover_path;
    int ck = 2;
    std::string cmode = "perfect";
    double cdensity = 1.0;
    gen_cover->add_option("--graph", graph_path, "base graph file (- for stdin)")->required();
    gen_cover->add_option("--k", ck, "fold (list size)");
    gen_cover->add_option("--mode", cmode, "perfect|density");
    gen_cover->add_option("--p", cdensity, "pair keep probability (density mode)");
    gen_cover->add_option("--seed", seed, "rng seed");
    gen_cover->add_option("--out", out_path, "output file (default stdout)");

    // --- validate ---
    auto* val = app.add_subcommand("validate", "check cover axioms C1-C4");
    val->add_option("--graph", graph_path, "base graph file")->required();
    val->add_option("--cover", cover_path, "cover file")->required();

    // --- exact ---
    auto* exact = app.add_subcommand("exact", "exact small-instance computations");
    exact->require_subcommand(1);
    auto* chidp = exact->add_subcommand("chi-dp", "DP-chromatic number by cover enumeration");
    int kmax = 4;
    long long budget = 100000000LL;
    chidp->add_option("--graph", graph_path, "graph file")->required();
    chidp->add_option("--kmax", kmax, "largest fold to test");
    chidp->add_option("--budget", budget, "search-node budget");

    // --- color ---
    auto* color = app.add_subcommand("color", "two-phase randomized coloring pipelines");
    std::string mode = "tf";
    double eps = 0.5;
    int copt_k = 0, copt_ell = 0, copt_cap = -1, copt_r = 4;
    long long max_rounds = -1;
    bool dump_coloring = false;
    color->add_option("--graph", graph_path, "graph file")->required();
    color->add_option("--cover", cover_path, "cover file (default: random k-fold)");
    color->add_option("--mode", mode, "tf|kr");
    color->add_option("--eps", eps, "epsilon for the triangle-free parameters");
    color->add_option("--r", copt_r, "forbidden clique size (kr mode)");
    color->add_option("--k", copt_k, "fold override (0: from the formulas)");
    color->add_option("--ell", copt_ell, "survival threshold override");
    color->add_option("--degree-cap", copt_cap, "cross-degree cap override (-1: ell/8)");
    color->add_option("--seed", seed, "rng seed");
    color->add_option("--max-rounds", max_rounds, "resampling cap (-1: 100 |V|)");
    color->add_flag("--dump-coloring", dump_coloring, "print `u -> slot` lines");

    // --- sample ---
    auto* sample = app.add_subcommand("sample", "neighborhood independent-set samplers");
    std::string smode = "star";
    int focus = 0;
    long long trials = 1, steps = -1;
    unsigned long long threshold = 0;
    bool freq = false;
    int sk = 0;
    sample->add_option("--mode", smode, "enum|star|layered|glauber");
    sample->add_option("--graph", graph_path, "graph file")->required();
    sample->add_option("--cover", cover_path, "cover file");
    sample->add_option("--k", sk, "fold for a generated cover when --cover is absent");
    sample->add_option("--focus", focus, "focus vertex u");
    sample->add_option("--trials", trials, "number of draws");
    sample->add_option("--seed", seed, "rng seed");
    sample->add_option("--threshold", threshold, "layered ind threshold (0: ceil(D^(1/20)))");
    sample->add_option("--steps", steps, "glauber steps (-1: default burn-in)");
    sample->add_flag("--freq", freq, "aggregated frequency table instead of raw draws");

    // --- experiment ---
    auto* exp = app.add_subcommand("experiment", "Monte-Carlo and exact validation suites");
    exp->require_subcommand(1);
    exp->fallthrough();
    bool json = false;
    int threads = 1;
    exp->add_flag("--json", json, "emit the report as JSON");
    exp->add_option("--threads", threads, "trial parallelism (harness only)");

    auto* survival = exp->add_subcommand("survival", "list-survival probabilities");
    survival->fallthrough();
    int ell_i = 1;
    survival->add_option("--graph", graph_path)->required();
    survival->add_option("--cover", cover_path);
    survival->add_option("--k", sk, "fold for a generated cover");
    survival->add_option("--focus", focus);
    survival->add_option("--ell", ell_i);
    survival->add_option("--trials", trials);
    survival->add_option("--seed", seed);
    survival->add_option("--out", out_path);

    auto* negcorr = exp->add_subcommand("negcorr", "exact negative-correlation check");
    negcorr->fallthrough();
    negcorr->add_option("--graph", graph_path)->required();
    negcorr->add_option("--cover", cover_path);
    negcorr->add_option("--k", sk);
    negcorr->add_option("--focus", focus);
    negcorr->add_option("--seed", seed);
    negcorr->add_option("--out", out_path);

    auto* chernoff = exp->add_subcommand("chernoff", "Chernoff bound values and tails");
    chernoff->fallthrough();
    double che = 1.0, chdelta = 0.5;
    std::string side = "lower";
    bool empirical = false;
    chernoff->add_option("--e", che, "expectation");
    chernoff->add_option("--delta", chdelta);
    chernoff->add_option("--side", side, "lower|upper");
    chernoff->add_flag("--empirical", empirical, "pair with star-sampled tails");
    chernoff->add_option("--graph", graph_path);
    chernoff->add_option("--cover", cover_path);
    chernoff->add_option("--k", sk);
    chernoff->add_option("--focus", focus);
    chernoff->add_option("--trials", trials);
    chernoff->add_option("--seed", seed);
    chernoff->add_option("--out", out_path);

    auto* shearer = exp->add_subcommand("shearer", "median-alpha vs f(ind) on K_r-free samples");
    shearer->fallthrough();
    int sh_r = 4, sh_nmax = 18, sh_samples = 100;
    shearer->add_option("--r", sh_r);
    shearer->add_option("--nmax", sh_nmax);
    shearer->add_option("--samples", sh_samples);
    shearer->add_option("--seed", seed);
    shearer->add_option("--out", out_path);

    auto* factorial = exp->add_subcommand("factorial", "uncolored-tuple probability vs 1/ell!");
    factorial->fallthrough();
    double f_ell = 2.0;
    factorial->add_option("--graph", graph_path)->required();
    factorial->add_option("--cover", cover_path);
    factorial->add_option("--k", sk);
    factorial->add_option("--focus", focus);
    factorial->add_option("--ell", f_ell);
    factorial->add_option("--trials", trials);
    factorial->add_option("--seed", seed);
    factorial->add_option("--out", out_path);

    auto* sweep_cmd = exp->add_subcommand("sweep", "success-rate sweep over k multipliers");
    sweep_cmd->fallthrough();
    std::vector<int> sweep_d{8};
    std::vector<double> sweep_mult{1.0};
    int sweep_n = 100, sweep_trials = 10;
    sweep_cmd->add_option("--family", family, "cycle|random_triangle_free");
    sweep_cmd->add_option("--n", sweep_n);
    sweep_cmd->add_option("--d", sweep_d)->delimiter(',');
    sweep_cmd->add_option("--mult", sweep_mult)->delimiter(',');
    sweep_cmd->add_option("--trials", sweep_trials);
    sweep_cmd->add_option("--eps", eps);
    sweep_cmd->add_option("--seed", seed);
    sweep_cmd->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen_graph->parsed()) {
            dpc::Graph g = dpc::generate(family, gn, gm, gp, gd, gr, seed);
            emit(dpc::format_graph(g), out_path);
            return 0;
        }
        if (gen_cover->parsed()) {
            auto g = load_graph(graph_path);
            auto m = cmode == "perfect" ? dpc::CoverMode::perfect : dpc::CoverMode::density;
            if (cmode != "perfect" && cmode != "density")
                throw std::runtime_error("unknown cover mode `" + cmode + "`");
            dpc::Cover c = dpc::random_cover(g, ck, seed, m, cdensity);
            emit(dpc::format_cover(c), out_path);
            return 0;
        }
        if (val->parsed()) {
            auto g = load_graph(graph_path);
            dpc::Cover c = dpc::parse_cover(slurp(cover_path), g);
            auto violations = dpc::validate(c);
            for (const auto& v : violations)
                std::cout << "violation C" << v.axiom << " " << v.detail << "\n";
            if (violations.empty()) {
                std::cout << "valid\n";
                return 0;
            }
            return 1;
        }
        if (chidp->parsed()) {
            auto g = load_graph(graph_path);
            auto res = dpc::chi_dp(*g, kmax, dpc::SearchBudget{budget});
            if (res.status == dpc::TriState::budget) {
                std::cout << "chi_dp=budget_exceeded\n";
                return 1;
            }
            if (res.status == dpc::TriState::yes) {
                std::cout << "chi_dp=" << res.value << "\n";
                return 0;
            }
            std::cout << "chi_dp>" << kmax << "\n";
            if (res.witness)
                std::cout << dpc::format_cover(*res.witness);
            return 0;
        }
        if (color->parsed()) {
            auto g = load_graph(graph_path);
            dpc::PipelineOptions opt;
            opt.eps = eps;
            opt.seed = seed;
            opt.k = copt_k;
            opt.ell = copt_ell;
            opt.degree_cap = copt_cap;
            opt.max_rounds = max_rounds;
            dpc::Cover supplied;
            if (!cover_path.empty()) {
                supplied = dpc::parse_cover(slurp(cover_path), g);
                opt.cover = &supplied;
            }
            dpc::RunReport rep;
            if (mode == "tf")
                rep = dpc::color_triangle_free(*g, opt);
            else if (mode == "kr")
                rep = dpc::color_kr_free(*g, copt_r, opt);
            else
                throw std::runtime_error("unknown mode `" + mode + "`");
            if (rep.sub_threshold)
                std::cerr << "warning: k=" << rep.k
                          << " is below the formula recommendation; success is still "
                             "verified soundly\n";
            std::cout << "outcome=" << dpc::outcome_name(rep.outcome) << "\n"
                      << "k=" << rep.k << "\n"
                      << "ell=" << rep.ell << "\n"
                      << "degree_cap=" << rep.degree_cap << "\n"
                      << "sub_threshold=" << (rep.sub_threshold ? 1 : 0) << "\n"
                      << "phase1_rounds=" << rep.phase1_rounds << "\n"
                      << "phase2_rounds=" << rep.phase2_rounds << "\n"
                      << "completion=" << rep.completion << "\n";
            std::cerr << "phase1_ms=" << rep.phase1_ms << " phase2_ms=" << rep.phase2_ms
                      << "\n";
            if (rep.ok() && dump_coloring)
                for (size_t u = 0; u < rep.coloring.pick.size(); ++u)
                    std::cout << u << " -> " << rep.coloring.pick[u] << "\n";
            return rep.ok() ? 0 : 1;
        }
        if (sample->parsed()) {
            auto g = load_graph(graph_path);
            dpc::Cover c = load_or_make_cover(cover_path, g, sk, seed);
            dpc::PartialColoring empty(g->n());
            dpc::NeighborhoodInstance inst = dpc::make_instance(c, focus, empty);
            dpc::Rng rng(seed);
            std::map<std::string, long long> counts;
            for (long long t = 0; t < trials; ++t) {
                dpc::PartialColoring I;
                std::string suffix;
                if (smode == "enum") {
                    I = dpc::enum_uniform(inst, rng);
                } else if (smode == "star") {
                    I = dpc::star_sample(inst, rng);
                } else if (smode == "layered") {
                    unsigned long long th = threshold;
                    if (th == 0) {
                        double d = std::max(2, g->max_degree());
                        th = static_cast<unsigned long long>(std::ceil(std::pow(d, 0.05)));
                    }
                    auto [s, trace] = dpc::layered_sample(inst, th, rng);
                    I = s;
                    suffix = " | s=" + std::to_string(trace.s()) +
                             " t=" + std::to_string(trace.t());
                } else if (smode == "glauber") {
                    I = dpc::glauber_instance(inst, steps, rng);
                } else {
                    throw std::runtime_error("unknown sample mode `" + smode + "`");
                }
                std::string line = coloring_line(inst, I);
                if (freq)
                    ++counts[line];
                else
                    std::cout << line << suffix << "\n";
            }
            if (freq) {
                std::cout << "state,count\n";
                for (const auto& [k, v] : counts)
                    std::cout << "\"" << k << "\"," << v << "\n";
            }
            return 0;
        }
        // experiment group
        dpc::ExperimentReport rep;
        bool have_report = false;
        if (survival->parsed()) {
            auto g = load_graph(graph_path);
            dpc::Cover c = load_or_make_cover(cover_path, g, sk, seed);
            rep = dpc::survival_experiment(c, focus, ell_i, trials, seed);
            have_report = true;
        } else if (negcorr->parsed()) {
            auto g = load_graph(graph_path);
            dpc::Cover c = load_or_make_cover(cover_path, g, sk, seed);
            rep = dpc::negcorr_experiment(c, focus, seed);
            have_report = true;
        } else if (chernoff->parsed()) {
            if (empirical) {
                auto g = load_graph(graph_path);
                dpc::Cover c = load_or_make_cover(cover_path, g, sk, seed);
                rep = dpc::chernoff_empirical(c, focus, chdelta, trials, seed);
            } else {
                rep = dpc::chernoff_experiment(che, chdelta, side == "lower");
            }
            have_report = true;
        } else if (shearer->parsed()) {
            rep = dpc::shearer_experiment(sh_r, sh_nmax, sh_samples, seed);
            have_report = true;
        } else if (factorial->parsed()) {
            auto g = load_graph(graph_path);
            dpc::Cover c = load_or_make_cover(cover_path, g, sk, seed);
            rep = dpc::factorial_experiment(c, focus, f_ell, trials, seed);
            have_report = true;
        } else if (sweep_cmd->parsed()) {
            emit(dpc::sweep(family, sweep_n, sweep_d, sweep_mult, sweep_trials, eps, seed,
                            threads),
                 out_path);
            return 0;
        }
        if (have_report) {
            emit(json ? rep.to_json() + "\n" : rep.to_csv(), out_path);
            return rep.all_gates_pass() ? 0 : 1;
        }
        return 2;
    } catch (const dpc::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const dpc::BudgetExceeded& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
