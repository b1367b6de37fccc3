// Acceptance suite: runs the project's 12 release criteria and prints one
// PASS/FAIL line per criterion. Every random quantity derives from the
// master seed (--seed, default 20250808); failures print the sub-seed that
// reproduces them. Exit code is the number of failed criteria.
//
// Usage: acceptance [criterion numbers...] [--seed N]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dpc/colorer.hpp"
#include "dpc/cover.hpp"
#include "dpc/exact.hpp"
#include "dpc/gen.hpp"
#include "dpc/graph.hpp"
#include "dpc/harness.hpp"
#include "dpc/rng.hpp"
#include "dpc/sampler.hpp"
#include "oracles.hpp"

using namespace dpc;

namespace {

uint64_t g_master_seed = 20250808ULL;

struct Outcome {
    bool pass;
    std::string detail;
};

std::shared_ptr<const Graph> shared_graph(Graph g) {
    return std::make_shared<Graph>(std::move(g));
}

Cover fig1_cover(bool twisted) {
    auto g = shared_graph(gen_cycle(4));
    auto edges = g->edges();
    std::vector<std::vector<std::array<int, 2>>> pairs(edges.size());
    for (size_t e = 0; e < edges.size(); ++e) {
        bool twist = twisted && edges[e] == std::make_pair(0, 3);
        pairs[e] = twist ? std::vector<std::array<int, 2>>{{0, 1}, {1, 0}}
                         : std::vector<std::array<int, 2>>{{0, 0}, {1, 1}};
    }
    return Cover(g, std::vector<int>(4, 2), pairs);
}

// ---------------------------------------------------------------- criterion 1
Outcome fig1_reproduction() {
    auto t0 = std::chrono::steady_clock::now();
    Cover h1 = fig1_cover(false);
    Cover h2 = fig1_cover(true);
    FindResult r1 = find_coloring(h1);
    FindResult r2 = find_coloring(h2);
    double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    bool ok = r1.status == SearchStatus::found && is_coloring(h1, r1.coloring) &&
              r2.status == SearchStatus::none && ms < 1000.0;
    char buf[128];
    std::snprintf(buf, sizeof buf, "H1 colorable, H2 NONE, %.1f ms", ms);
    return {ok, buf};
}

// ---------------------------------------------------------------- criterion 2
std::vector<Graph> connected_census(int n_max) {
    std::vector<Graph> census;
    for (int n = 1; n <= n_max; ++n) {
        int pairs = n * (n - 1) / 2;
        std::vector<std::pair<int, int>> pv;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                pv.emplace_back(a, b);
        std::set<uint32_t> seen;
        for (uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            std::vector<std::pair<int, int>> es;
            for (int i = 0; i < pairs; ++i)
                if (mask & (1u << i))
                    es.push_back(pv[i]);
            Graph g(n, es);
            if (n > 1 && static_cast<int>(ball(g, 0, n).size()) != n)
                continue; // disconnected
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i)
                perm[i] = i;
            uint32_t canon = ~0u;
            do {
                uint32_t pm = 0;
                for (int i = 0; i < pairs; ++i) {
                    if (!(mask & (1u << i)))
                        continue;
                    int a = perm[pv[i].first], b = perm[pv[i].second];
                    if (a > b)
                        std::swap(a, b);
                    pm |= 1u << static_cast<uint32_t>(
                              std::lower_bound(pv.begin(), pv.end(), std::make_pair(a, b)) -
                              pv.begin());
                }
                canon = std::min(canon, pm);
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (seen.insert(canon).second && canon == mask)
                census.push_back(g);
        }
    }
    return census;
}

Outcome chi_dp_census() {
    // named values first
    for (int n : {3, 4, 5, 6}) {
        ChiDpResult r = chi_dp(gen_cycle(n), 4);
        if (r.status != TriState::yes || r.value != 3)
            return {false, "chi_DP(C" + std::to_string(n) + ") != 3"};
    }
    if (chi_dp(Graph(1, {}), 2).value != 1)
        return {false, "chi_DP(K1) != 1"};
    for (int n : {2, 3, 4}) {
        ChiDpResult r = chi_dp(gen_complete(n), 4);
        if (r.status != TriState::yes || r.value != n)
            return {false, "chi_DP(K" + std::to_string(n) + ") != " + std::to_string(n)};
    }
    // chain over the census, all values capped at 3 (4 encodes "> 3")
    auto census = connected_census(5);
    if (census.size() != 31)
        return {false, "census size " + std::to_string(census.size()) + " != 31"};
    for (size_t i = 0; i < census.size(); ++i) {
        const Graph& g = census[i];
        int chi = std::min(oracle::chromatic_number(g), 4);
        int chl = oracle::list_chromatic_number(g, 3);
        ChiDpResult r = chi_dp(g, 3);
        int cdp = r.status == TriState::yes ? r.value : 4;
        if (!(chi <= chl && chl <= cdp))
            return {false, "chain violated on census graph " + std::to_string(i)};
        int bound = g.max_degree() + 1;
        if (cdp <= 3 && cdp > bound)
            return {false, "Delta+1 bound violated on census graph " + std::to_string(i)};
        if (cdp == 4 && bound <= 3)
            return {false, "Delta+1 bound violated (>3) on census graph " + std::to_string(i)};
    }
    return {true, "cycles/complete values and chi <= chi_l <= chi_DP <= Delta+1 on 31 classes"};
}

// ---------------------------------------------------------------- criterion 3
Outcome cover_axioms() {
    // 1000 seeded random covers across graph families, folds and densities
    long long checked = 0;
    for (uint64_t s = 0; s < 250; ++s) {
        uint64_t seed = derive_seed(g_master_seed, 300 + s);
        auto g1 = shared_graph(gen_random_triangle_free(20, 4.0, seed));
        auto g2 = shared_graph(gen_random_bipartite(6, 7, 0.5, seed));
        auto g3 = shared_graph(gen_cycle(3 + static_cast<int>(s % 9)));
        auto g4 = shared_graph(gen_random_kr_free(15, 5.0, 4, seed));
        int k = 1 + static_cast<int>(s % 4);
        for (auto& g : {g1, g2, g3, g4}) {
            Cover c = s % 2 ? random_cover(g, k, seed + 7, CoverMode::density,
                                           0.25 * static_cast<double>(s % 5))
                            : random_cover(g, k, seed + 7);
            if (!validate(c).empty())
                return {false, "random cover failed validation at seed " +
                                   std::to_string(seed)};
            ++checked;
        }
    }
    // 12 single-fault mutants on the C4 base, each triggering exactly the
    // intended axiom
    auto g = shared_graph(gen_cycle(4));
    std::string base = "c 4 2\nL 0 2\nL 1 2\nL 2 2\nL 3 2\n";
    struct Mutant {
        char axiom;
        std::string lines;
    };
    std::vector<Mutant> mutants = {
        {'1', "m 0 2 1 0\n"},           // u-slot beyond the list
        {'1', "m 0 0 1 2\n"},           // v-slot beyond the list
        {'1', "m 0 -1 1 0\n"},          // negative slot
        {'1', "m 3 5 0 1\n"},           // far out of range on an edge
        {'3', "m 0 0 2 0\n"},           // diagonal 0-2
        {'3', "m 1 0 3 1\n"},           // diagonal 1-3
        {'3', "m 0 0 0 1\n"},           // self-pair
        {'3', "m 2 1 2 0\n"},           // self-pair
        {'4', "m 0 0 1 0\nm 0 0 1 1\n"}, // u endpoint twice
        {'4', "m 0 0 1 1\nm 0 1 1 1\n"}, // v endpoint twice
        {'4', "m 0 0 1 0\nm 0 0 1 0\n"}, // exact duplicate pair
        {'4', "m 2 0 3 0\nm 2 1 3 0\n"}, // v endpoint twice on another edge
    };
    for (size_t i = 0; i < mutants.size(); ++i) {
        Cover c = parse_cover(base + mutants[i].lines, g);
        auto v = validate(c);
        if (v.empty())
            return {false, "mutant " + std::to_string(i) + " not caught"};
        for (const auto& viol : v)
            if (viol.axiom != mutants[i].axiom)
                return {false, "mutant " + std::to_string(i) + " flagged C" +
                                   std::string(1, viol.axiom) + ", intended C" +
                                   std::string(1, mutants[i].axiom)};
    }
    return {true, std::to_string(checked) + " random covers valid; 12/12 mutants exact"};
}

// ------------------------------------------------------- star instance pool
// star-eligible instances with bounded state counts, built from K_{1,deg}
// bases with density-thinned matchings
Cover star_instance_cover(int leaves, int k, double density, uint64_t seed) {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= leaves; ++i)
        es.emplace_back(0, i);
    auto g = shared_graph(Graph(leaves + 1, es));
    return random_cover(g, k, seed, CoverMode::density, density);
}

// ---------------------------------------------------------------- criterion 4
Outcome star_exactness() {
    int chi_pass = 0;
    const long long trials = 100000;
    for (int inst_id = 0; inst_id < 20; ++inst_id) {
        uint64_t seed = derive_seed(g_master_seed, 400 + inst_id);
        int leaves = 2 + inst_id % 3;
        int k = leaves == 4 ? 2 : 2 + inst_id % 2; // worst case 81 states
        Cover c = star_instance_cover(leaves, k, 0.5 + 0.1 * (inst_id % 4), seed);
        NeighborhoodInstance inst = make_instance(c, 0, PartialColoring(c.base().n()));
        auto states = enumerate_states(inst);
        // closed form: every subset has probability prod 1/(|L_J(v)|+1)
        double prod = 1.0;
        for (const auto& l : inst.lists)
            prod *= 1.0 / (static_cast<double>(l.size()) + 1.0);
        double uniform = 1.0 / static_cast<double>(states.size());
        if (std::fabs(prod - uniform) > 1e-12)
            return {false, "closed form != uniform weight on instance " +
                               std::to_string(inst_id)};
        // frequency test
        std::map<std::vector<int>, int> index;
        for (size_t si = 0; si < states.size(); ++si)
            index[states[si]] = static_cast<int>(si);
        std::vector<long long> count(states.size(), 0);
        Rng rng(seed + 1);
        std::vector<int> key(inst.nbrs.size());
        for (long long t = 0; t < trials; ++t) {
            PartialColoring I = star_sample(inst, rng);
            for (size_t a = 0; a < inst.nbrs.size(); ++a) {
                key[a] = -1;
                int slot = I.pick[inst.nbrs[a]];
                if (slot >= 0) {
                    auto it = std::find(inst.lists[a].begin(), inst.lists[a].end(), slot);
                    key[a] = static_cast<int>(it - inst.lists[a].begin());
                }
            }
            ++count[index.at(key)];
        }
        double expect = static_cast<double>(trials) / static_cast<double>(states.size());
        double stat = 0.0;
        for (long long c2 : count)
            stat += (c2 - expect) * (c2 - expect) / expect;
        double p = chi_square_sf(stat, static_cast<int>(states.size()) - 1);
        if (p > 0.001)
            ++chi_pass;
    }
    bool ok = chi_pass >= 19;
    return {ok, "closed form exact on 20/20; chi-square p>0.001 on " +
                    std::to_string(chi_pass) + "/20"};
}

// ---------------------------------------------------------------- criterion 5
Outcome layered_uniformity() {
    const long long trials = 100000;
    double worst_tv = 0.0;
    for (int inst_id = 0; inst_id < 10; ++inst_id) {
        uint64_t seed = derive_seed(g_master_seed, 500 + inst_id);
        // dense little bases so the neighborhoods carry internal cross edges
        Graph base = inst_id % 2 ? gen_complete(3 + inst_id % 3)
                                 : gen_random_kr_free(6, 4.0, 4, seed);
        auto g = shared_graph(std::move(base));
        Cover c = random_cover(g, 2, seed + 3);
        NeighborhoodInstance inst = make_instance(c, 0, PartialColoring(g->n()));
        auto states = enumerate_states(inst);
        std::map<std::vector<int>, int> index;
        for (size_t si = 0; si < states.size(); ++si)
            index[states[si]] = static_cast<int>(si);
        std::vector<long long> count(states.size(), 0);
        Rng rng(seed + 4);
        unsigned long long threshold = 2;
        std::vector<int> key(inst.nbrs.size());
        for (long long t = 0; t < trials; ++t) {
            auto [I, trace] = layered_sample(inst, threshold, rng);
            if (trace.s() + trace.t() != c.list_size(0))
                return {false, "s+t != k at instance " + std::to_string(inst_id)};
            for (size_t a = 0; a < inst.nbrs.size(); ++a) {
                key[a] = -1;
                int slot = I.pick[inst.nbrs[a]];
                if (slot >= 0) {
                    auto it = std::find(inst.lists[a].begin(), inst.lists[a].end(), slot);
                    key[a] = static_cast<int>(it - inst.lists[a].begin());
                }
            }
            ++count[index.at(key)];
        }
        double tv = 0.0;
        double uniform = 1.0 / static_cast<double>(states.size());
        for (long long c2 : count)
            tv += std::fabs(static_cast<double>(c2) / trials - uniform);
        tv *= 0.5;
        worst_tv = std::max(worst_tv, tv);
        if (tv >= 0.02)
            return {false, "TV " + std::to_string(tv) + " at instance " +
                               std::to_string(inst_id) + " (seed " + std::to_string(seed) +
                               ")"};
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "10/10 instances, worst TV %.4f, s+t=k always",
                  worst_tv);
    return {true, buf};
}

// ---------------------------------------------------------------- criterion 6
Outcome negative_correlation() {
    for (int inst_id = 0; inst_id < 50; ++inst_id) {
        uint64_t seed = derive_seed(g_master_seed, 600 + inst_id);
        int leaves = 2 + inst_id % 3;
        int k = leaves == 4 ? 2 : 2 + inst_id % 2;
        Cover c = star_instance_cover(leaves, k, 0.4 + 0.15 * (inst_id % 4), seed);
        ExperimentReport rep = negcorr_experiment(c, 0, seed);
        if (!rep.all_gates_pass())
            return {false, "instance " + std::to_string(inst_id) + " (seed " +
                               std::to_string(seed) + ") failed"};
    }
    return {true, "50/50 instances: joint <= product for every |S| <= 4 (1e-12 slack)"};
}

// ---------------------------------------------------------------- criterion 7
Outcome shearer_bound() {
    auto t0 = std::chrono::steady_clock::now();
    ExperimentReport rep =
        shearer_experiment(4, 18, 100, derive_seed(g_master_seed, 700));
    double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    long long applicable = 0, passed = 0;
    for (const auto& [k, v] : rep.values) {
        if (k == "applicable")
            applicable = static_cast<long long>(v);
        if (k == "passed")
            passed = static_cast<long long>(v);
    }
    bool ok = rep.all_gates_pass() && passed == applicable && ms < 120000.0;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%lld/%lld samples, %.0f ms", passed, applicable, ms);
    return {ok, buf};
}

// ---------------------------------------------------------------- criterion 8
Outcome expectation_sandwich() {
    for (int inst_id = 0; inst_id < 20; ++inst_id) {
        uint64_t seed = derive_seed(g_master_seed, 800 + inst_id);
        int leaves = 2 + inst_id % 3;
        int k = leaves == 4 ? 2 : 2 + inst_id % 2;
        Cover c = star_instance_cover(leaves, k, 0.3 + 0.2 * (inst_id % 3), seed);
        NeighborhoodInstance inst = make_instance(c, 0, PartialColoring(c.base().n()));
        for (int x = 0; x < c.list_size(0); ++x) {
            double p = survival_probability(inst, x);
            double lo = survival_lower_bound(inst, x);
            double hi = survival_upper_bound(inst, x);
            if (!(lo <= p + 1e-12 && p <= hi + 1e-12))
                return {false, "sandwich violated at instance " + std::to_string(inst_id) +
                                   " slot " + std::to_string(x)};
        }
        // second path: the survival experiment re-derives the same numbers
        ExperimentReport rep = survival_experiment(c, 0, 1, 200, seed);
        if (!rep.all_gates_pass())
            return {false, "survival gates failed at instance " + std::to_string(inst_id)};
    }
    return {true, "exact Pr[x in L_I(u)] inside both exponential bounds, 20/20"};
}

// ---------------------------------------------------------------- criterion 9
Outcome lll_boundary() {
    for (int ell = 1; ell <= 64; ++ell)
        if (lll_boundary_product(ell) != 1.0)
            return {false, "4pd != 1 at ell " + std::to_string(ell)};
    return {true, "4 * ell^-2 * (ell^2/4) == 1 exactly for ell = 1..64"};
}

// --------------------------------------------------------------- criterion 10
Outcome pipeline_soundness() {
    long long runs = 0, successes = 0;
    for (int i = 0; i < 250; ++i) {
        uint64_t seed = derive_seed(g_master_seed, 1000 + i);
        struct Job {
            Graph g;
            bool kr;
        };
        std::vector<Job> jobs;
        jobs.push_back({gen_cycle(5 + i % 30), false});
        jobs.push_back({gen_random_triangle_free(30 + i % 30, 4.0 + i % 6, seed), false});
        jobs.push_back({gen_random_bipartite(8 + i % 6, 8 + (i / 2) % 6, 0.3, seed), false});
        jobs.push_back({gen_random_kr_free(30 + i % 20, 6.0 + i % 4, 4, seed), true});
        for (size_t j = 0; j < jobs.size(); ++j) {
            const Graph& g = jobs[j].g;
            int max_deg = g.max_degree();
            // mixed k, sub-threshold included
            int k;
            switch ((i + static_cast<int>(j)) % 4) {
            case 0: k = std::max(2, max_deg / 4); break;
            case 1: k = std::max(2, max_deg / 2); break;
            case 2: k = std::max(2, (2 * max_deg) / 3); break;
            default: k = max_deg + 1; break;
            }
            PipelineOptions opt;
            opt.k = k;
            opt.seed = seed + j;
            opt.max_rounds = 20LL * g.n();
            RunReport rep;
            try {
                rep = jobs[j].kr ? color_kr_free(g, 4, opt) : color_triangle_free(g, opt);
            } catch (const std::logic_error& e) {
                return {false, std::string("internal verification threw: ") + e.what()};
            }
            ++runs;
            if (rep.ok()) {
                ++successes;
                // the pipeline asserts this internally; re-verify from outside
                auto gp = shared_graph(g);
                Cover check = random_cover(gp, rep.k, derive_seed(opt.seed, 0));
                if (!is_coloring(check, rep.coloring))
                    return {false, "success failed is_coloring at run " +
                                       std::to_string(runs) + " (seed " +
                                       std::to_string(seed) + ")"};
            }
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%lld runs, %lld verified successes, 0 unsound", runs,
                  successes);
    return {true, buf};
}

// --------------------------------------------------------------- criterion 11
Outcome generous_regime() {
    int successes = 0;
    double worst_ms = 0.0;
    for (int i = 0; i < 100; ++i) {
        uint64_t seed = derive_seed(g_master_seed, 1100 + i);
        Graph g = gen_random_triangle_free(500, 32.0, seed);
        PipelineOptions opt;
        opt.k = g.max_degree() + 1;
        opt.seed = seed + 1;
        auto t0 = std::chrono::steady_clock::now();
        RunReport rep = color_triangle_free(g, opt);
        double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        worst_ms = std::max(worst_ms, ms);
        if (ms >= 10000.0)
            return {false, "run " + std::to_string(i) + " took " + std::to_string(ms) +
                               " ms (seed " + std::to_string(seed) + ")"};
        if (rep.ok())
            ++successes;
    }
    if (successes < 95)
        return {false, "only " + std::to_string(successes) + "/100 pipeline successes"};

    int lll_ok = 0;
    for (int i = 0; i < 100; ++i) {
        uint64_t seed = derive_seed(g_master_seed, 1200 + i);
        // bases of max degree 1 or 2 keep every cross-degree within ell/8
        int ell = i % 2 ? 8 : 16;
        Graph base;
        if (i % 2) {
            std::vector<std::pair<int, int>> es;
            for (int t = 0; t < 10; ++t)
                es.emplace_back(2 * t, 2 * t + 1);
            base = Graph(20, es);
        } else {
            base = gen_cycle(20);
        }
        auto g = shared_graph(std::move(base));
        Cover c = random_cover(g, ell, seed);
        ResidualCover rc = residual(c, PartialColoring(20));
        Rng rng(seed + 5);
        CompletionResult r = complete_lll(rc, ell, 100LL * 20, rng);
        if (r.status == CompletionStatus::success)
            ++lll_ok;
    }
    bool ok = lll_ok >= 99;
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "pipeline %d/100 (worst %.0f ms); complete_lll %d/100 within caps",
                  successes, worst_ms, lll_ok);
    return {ok, buf};
}

// --------------------------------------------------------------- criterion 12
Outcome reproducibility() {
    // replaying any sub-run from its recorded seed is byte-identical
    uint64_t seed = derive_seed(g_master_seed, 1300);
    Cover c = star_instance_cover(3, 2, 0.6, seed);
    std::string a = survival_experiment(c, 0, 2, 5000, seed).to_csv();
    std::string b = survival_experiment(c, 0, 2, 5000, seed).to_csv();
    if (a != b)
        return {false, "survival_experiment not reproducible"};

    std::string s1 = sweep("random_triangle_free", 40, {5, 8}, {1.0, 2.0}, 5, 0.5, seed, 1);
    std::string s2 = sweep("random_triangle_free", 40, {5, 8}, {1.0, 2.0}, 5, 0.5, seed, 1);
    if (s1 != s2)
        return {false, "sweep not reproducible"};

    Graph g = gen_random_triangle_free(80, 8.0, seed);
    PipelineOptions opt;
    opt.k = g.max_degree() + 1;
    opt.seed = seed;
    RunReport r1 = color_triangle_free(g, opt);
    RunReport r2 = color_triangle_free(g, opt);
    if (!(r1.outcome == r2.outcome && r1.phase1_rounds == r2.phase1_rounds &&
          r1.phase2_rounds == r2.phase2_rounds && r1.coloring == r2.coloring))
        return {false, "pipeline run not reproducible"};

    ExperimentReport e1 = shearer_experiment(4, 12, 20, seed);
    ExperimentReport e2 = shearer_experiment(4, 12, 20, seed);
    if (e1.to_csv() != e2.to_csv())
        return {false, "shearer_experiment not reproducible"};
    return {true, "replays byte-identical at threads=1 from recorded seeds"};
}

} // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) {
            g_master_seed = std::strtoull(argv[++i], nullptr, 10);
        } else {
            selected.push_back(std::atoi(argv[i]));
        }
    }
    struct Criterion {
        int id;
        const char* name;
        Outcome (*run)();
    };
    std::vector<Criterion> criteria = {
        {1, "Fig. 1 reproduction", fig1_reproduction},
        {2, "chi_DP census", chi_dp_census},
        {3, "cover axioms and fault mutants", cover_axioms},
        {4, "star-sampler exactness", star_exactness},
        {5, "layered-sampler uniformity", layered_uniformity},
        {6, "negative correlation", negative_correlation},
        {7, "Shearer-type bound", shearer_bound},
        {8, "expectation sandwich", expectation_sandwich},
        {9, "LLL boundary arithmetic", lll_boundary},
        {10, "pipeline soundness", pipeline_soundness},
        {11, "generous-regime completion", generous_regime},
        {12, "reproducibility", reproducibility},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        if (!selected.empty() &&
            std::find(selected.begin(), selected.end(), c.id) == selected.end())
            continue;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] criterion %2d (%s): %s\n", o.pass ? "PASS" : "FAIL", c.id,
                    c.name, o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) {
            ++failures;
            if (c.id == 7) {
                std::printf("ABORT: the Shearer-type inequality failed at desk scale; "
                            "the colorer's analysis depends on it unconditionally\n");
                return failures;
            }
        }
    }
    std::printf("%s (master seed %llu)\n", failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT",
                static_cast<unsigned long long>(g_master_seed));
    return failures;
}
