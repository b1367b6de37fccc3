#include "dpc/colorer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <set>

#include "dpc/sampler.hpp"

namespace dpc {

namespace {

// Incremental resampling state: per-slot block counts (picked neighbors
// matched to the slot), surviving-slot counts, uncovered-neighbor counts.
struct MtState {
    const Cover& c;
    PartialColoring I;
    std::vector<std::vector<int>> block;
    std::vector<int> alive;
    std::vector<int> uncovered_nbrs;

    explicit MtState(const Cover& c) : c(c), I(c.base().n()) {
        int n = c.base().n();
        block.resize(n);
        alive.resize(n);
        uncovered_nbrs.resize(n);
        for (int u = 0; u < n; ++u) {
            block[u].assign(c.list_size(u), 0);
            alive[u] = c.list_size(u);
            uncovered_nbrs[u] = c.base().degree(u);
        }
    }

    void set_pick(int u, int i) {
        I.pick[u] = i;
        const auto& nbrs = c.base().neighbors(u);
        const auto& eids = c.incident_edges(u);
        for (size_t a = 0; a < nbrs.size(); ++a) {
            int v = nbrs[a];
            --uncovered_nbrs[v];
            int j = c.partner_on_edge(eids[a], u, i);
            if (j >= 0 && block[v][j]++ == 0)
                --alive[v];
        }
    }

    void clear_pick(int u) {
        int i = I.pick[u];
        I.pick[u] = -1;
        const auto& nbrs = c.base().neighbors(u);
        const auto& eids = c.incident_edges(u);
        for (size_t a = 0; a < nbrs.size(); ++a) {
            int v = nbrs[a];
            ++uncovered_nbrs[v];
            int j = c.partner_on_edge(eids[a], u, i);
            if (j >= 0 && --block[v][j] == 0)
                ++alive[v];
        }
    }

    bool event_violated(int u, const Phase1Config& cfg) const {
        if (I.covers(u))
            return false;
        if (alive[u] < cfg.ell)
            return true;
        if (cfg.kr_events)
            return uncovered_nbrs[u] >= cfg.ell;
        int cap = cfg.effective_cap();
        const auto& nbrs = c.base().neighbors(u);
        const auto& eids = c.incident_edges(u);
        for (int i = 0; i < c.list_size(u); ++i) {
            if (block[u][i] > 0)
                continue;
            int d = 0;
            for (size_t a = 0; a < nbrs.size(); ++a) {
                int v = nbrs[a];
                if (I.covers(v))
                    continue;
                int j = c.partner_on_edge(eids[a], u, i);
                if (j >= 0 && block[v][j] == 0 && ++d > cap)
                    return true;
            }
        }
        return false;
    }

    // neighborhood instance under J = current picks, with N(u) already cleared
    NeighborhoodInstance build_instance(int u) const {
        NeighborhoodInstance inst;
        inst.cover = &c;
        inst.focus = u;
        inst.nbrs = c.base().neighbors(u);
        size_t deg = inst.nbrs.size();
        inst.lists.resize(deg);
        for (size_t a = 0; a < deg; ++a) {
            int v = inst.nbrs[a];
            for (int i = 0; i < c.list_size(v); ++i)
                if (block[v][i] == 0)
                    inst.lists[a].push_back(i);
        }
        std::vector<int> pos;
        for (size_t a = 0; a < deg; ++a) {
            for (size_t b = a + 1; b < deg; ++b) {
                int va = inst.nbrs[a], vb = inst.nbrs[b];
                if (!c.base().has_edge(va, vb))
                    continue;
                inst.neighborhood_independent = false;
                pos.assign(c.list_size(vb), -1);
                for (size_t q = 0; q < inst.lists[b].size(); ++q)
                    pos[inst.lists[b][q]] = static_cast<int>(q);
                for (size_t p = 0; p < inst.lists[a].size(); ++p) {
                    int j = c.partner(va, inst.lists[a][p], vb);
                    if (j >= 0 && pos[j] >= 0)
                        inst.internal.push_back({static_cast<int>(a), static_cast<int>(p),
                                                 static_cast<int>(b), pos[j]});
                }
            }
        }
        return inst;
    }
};

unsigned long long default_layered_threshold(int max_degree) {
    if (max_degree < 2)
        return 1;
    double t = std::pow(static_cast<double>(max_degree), 1.0 / 20.0);
    return static_cast<unsigned long long>(std::max(1.0, std::ceil(t - 1e-9)));
}

} // namespace

std::vector<int> violated_events(const Cover& c, const PartialColoring& I,
                                 const Phase1Config& cfg) {
    const Graph& g = c.base();
    std::vector<std::vector<int>> alive(g.n());
    for (int u = 0; u < g.n(); ++u)
        if (!I.covers(u))
            alive[u] = residual_list(c, I, u);
    std::vector<int> out;
    for (int u = 0; u < g.n(); ++u) {
        if (I.covers(u))
            continue;
        if (static_cast<int>(alive[u].size()) < cfg.ell) {
            out.push_back(u);
            continue;
        }
        if (cfg.kr_events) {
            int deg = 0;
            for (int v : g.neighbors(u))
                if (!I.covers(v))
                    ++deg;
            if (deg >= cfg.ell)
                out.push_back(u);
            continue;
        }
        int cap = cfg.effective_cap();
        bool bad = false;
        for (int i : alive[u]) {
            int d = 0;
            for (int v : g.neighbors(u)) {
                if (I.covers(v))
                    continue;
                int j = c.partner(u, i, v);
                if (j < 0)
                    continue;
                if (std::binary_search(alive[v].begin(), alive[v].end(), j) && ++d > cap) {
                    bad = true;
                    break;
                }
            }
            if (bad)
                break;
        }
        if (bad)
            out.push_back(u);
    }
    return out;
}

Phase1Result mt_phase1(const Cover& c, const Phase1Config& cfg) {
    if (cfg.ell < 1)
        throw std::invalid_argument("mt_phase1: ell must be >= 1");
    if (!validate(c).empty())
        throw std::invalid_argument("mt_phase1: cover fails validation");
    const Graph& g = c.base();
    int n = g.n();
    long long max_rounds = cfg.max_rounds >= 0 ? cfg.max_rounds : 100LL * n;
    unsigned long long threshold = cfg.layered_threshold > 0
                                       ? cfg.layered_threshold
                                       : default_layered_threshold(g.max_degree());
    Rng rng(cfg.seed);

    MtState st(c);
    {
        std::vector<int> region(n);
        std::iota(region.begin(), region.end(), 0);
        PartialColoring warm = glauber_sample(c, region, cfg.glauber_steps, rng);
        for (int u = 0; u < n; ++u)
            if (warm.covers(u))
                st.set_pick(u, warm.pick[u]);
    }

    std::set<int> violated;
    for (int u = 0; u < n; ++u)
        if (st.event_violated(u, cfg))
            violated.insert(u);

    std::vector<std::vector<int>> ball3(n);
    auto ball3_of = [&](int u) -> const std::vector<int>& {
        if (ball3[u].empty())
            ball3[u] = ball(g, u, 3);
        return ball3[u];
    };

    long long rounds = 0;
    while (!violated.empty() && rounds < max_rounds) {
        int u = *violated.begin();
        ++rounds;
        for (int v : g.neighbors(u))
            if (st.I.covers(v))
                st.clear_pick(v);
        NeighborhoodInstance inst = st.build_instance(u);
        PartialColoring drawn = inst.neighborhood_independent
                                    ? star_sample(inst, rng)
                                    : layered_sample(inst, threshold, rng).first;
        for (int v : g.neighbors(u))
            if (drawn.covers(v))
                st.set_pick(v, drawn.pick[v]);
        for (int w : ball3_of(u)) {
            if (st.event_violated(w, cfg))
                violated.insert(w);
            else
                violated.erase(w);
        }
    }

    Phase1Result res{violated.empty(), st.I, rounds};
    if (res.success) {
        if (!is_independent(c, res.I))
            throw std::logic_error("mt_phase1: produced a dependent set");
        if (!violated_events(c, res.I, cfg).empty())
            throw std::logic_error("mt_phase1: event bookkeeping disagrees with recheck");
    }
    return res;
}

namespace {

bool lll_preconditions_hold(const ResidualCover& rc, int ell) {
    const Cover& c = rc.cover;
    int cap = ell / 8;
    for (int u = 0; u < c.base().n(); ++u) {
        if (c.list_size(u) < ell)
            return false;
        for (int i = 0; i < c.list_size(u); ++i)
            if (cross_degree(c, u, i) > cap)
                return false;
    }
    return true;
}

} // namespace

CompletionResult complete_lll(const ResidualCover& rc, int ell, long long max_rounds,
                              Rng& rng) {
    if (ell < 1)
        throw std::invalid_argument("complete_lll: ell must be >= 1");
    const Cover& c = rc.cover;
    const Graph& g = c.base();
    int cap = ell / 8;
    for (int u = 0; u < g.n(); ++u) {
        if (c.list_size(u) < ell)
            throw std::invalid_argument("complete_lll: list at vertex " + std::to_string(u) +
                                        " shorter than ell");
        for (int i = 0; i < c.list_size(u); ++i)
            if (cross_degree(c, u, i) > cap)
                throw std::invalid_argument("complete_lll: cross-degree above ell/8 at vertex " +
                                            std::to_string(u));
    }
    CompletionResult res{CompletionStatus::success, PartialColoring(g.n()), 0, -1};
    if (g.n() == 0)
        return res;
    if (max_rounds < 0)
        max_rounds = 100LL * g.n();

    auto& pick = res.I.pick;
    for (int u = 0; u < g.n(); ++u)
        pick[u] = rng.below_int(c.list_size(u));
    auto conflicted = [&](int e) {
        auto [u, v] = c.edge(e);
        return c.partner_on_edge(e, u, pick[u]) == pick[v];
    };
    std::set<int> bad;
    for (int e = 0; e < c.edge_count(); ++e)
        if (conflicted(e))
            bad.insert(e);
    while (!bad.empty() && res.rounds < max_rounds) {
        int e = *bad.begin();
        ++res.rounds;
        auto [u, v] = c.edge(e);
        pick[u] = rng.below_int(c.list_size(u));
        pick[v] = rng.below_int(c.list_size(v));
        for (int w : {u, v})
            for (int f : c.incident_edges(w)) {
                if (conflicted(f))
                    bad.insert(f);
                else
                    bad.erase(f);
            }
    }
    if (!bad.empty())
        res.status = CompletionStatus::cap;
    return res;
}

CompletionResult greedy_complete(const ResidualCover& rc) {
    const Cover& c = rc.cover;
    const Graph& g = c.base();
    int n = g.n();
    CompletionResult res{CompletionStatus::success, PartialColoring(n), 0, -1};

    // removal order: repeatedly take the vertex of minimum current degree
    std::vector<int> deg(n), order;
    std::vector<char> removed(n, 0);
    for (int u = 0; u < n; ++u)
        deg[u] = g.degree(u);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int u = 0; u < n; ++u)
            if (!removed[u] && (best < 0 || deg[u] < deg[best]))
                best = u;
        removed[best] = 1;
        order.push_back(best);
        for (int v : g.neighbors(best))
            if (!removed[v])
                --deg[v];
    }
    // color in reverse removal order: back-degree <= degeneracy
    for (int t = n - 1; t >= 0; --t) {
        int u = order[t];
        std::vector<char> blocked(c.list_size(u), 0);
        for (int v : g.neighbors(u)) {
            if (res.I.pick[v] < 0)
                continue;
            int i = c.partner(v, res.I.pick[v], u);
            if (i >= 0)
                blocked[i] = 1;
        }
        int choice = -1;
        for (int i = 0; i < c.list_size(u); ++i)
            if (!blocked[i]) {
                choice = i;
                break;
            }
        if (choice < 0) {
            res.status = CompletionStatus::fail;
            res.stuck_vertex = u;
            return res;
        }
        res.I.pick[u] = choice;
    }
    return res;
}

const char* outcome_name(RunReport::Outcome o) {
    switch (o) {
    case RunReport::Outcome::success: return "success";
    case RunReport::Outcome::phase1_cap: return "phase1_cap";
    case RunReport::Outcome::phase2_cap: return "phase2_cap";
    }
    return "?";
}

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

// list-size target when the caller overrides k: half the expected number of
// surviving slots under one round of the star procedure
int explicit_k_ell(int max_degree, int k) {
    double expect = k * std::exp(-static_cast<double>(max_degree) / k);
    int ell = static_cast<int>(expect / 2.0);
    return std::clamp(ell, 1, k);
}

RunReport run_pipeline(const Graph& g, bool kr_mode, int r, const PipelineOptions& opt) {
    int max_deg = g.max_degree();
    RunReport rep{};
    // a supplied uniform cover pins k the same way an explicit --k does
    int cover_fold = opt.cover ? opt.cover->fold() : 0;
    int k_pinned = opt.k > 0 ? opt.k : (cover_fold > 0 ? cover_fold : 0);
    int k, ell;
    if (kr_mode) {
        if (k_pinned > 0) {
            k = k_pinned;
            ell = opt.ell > 0 ? opt.ell : explicit_k_ell(max_deg, k);
            rep.sub_threshold = max_deg >= 5 && r >= 4 && k < params_kr(max_deg, r).k;
        } else {
            CoverParams p = params_kr(max_deg, r); // throws for max_deg <= 4: explicit k required
            k = p.k;
            ell = opt.ell > 0 ? opt.ell : p.ell;
        }
    } else {
        bool formula = max_deg >= 2;
        CoverParams p{max_deg + 1, 1};
        if (formula)
            p = params_triangle_free(max_deg, opt.eps);
        k = k_pinned > 0 ? k_pinned : p.k;
        ell = opt.ell > 0 ? opt.ell : p.ell;
        rep.sub_threshold = formula && k < p.k;
    }
    rep.k = k;
    rep.ell = ell;

    Cover generated;
    const Cover* cov = opt.cover;
    if (!cov) {
        generated = random_cover(std::make_shared<Graph>(g), k,
                                 derive_seed(opt.seed, 0), CoverMode::perfect);
        cov = &generated;
    } else if (cov->base().n() != g.n()) {
        throw std::invalid_argument("pipeline: supplied cover is over a different graph");
    }

    Phase1Config cfg;
    cfg.ell = ell;
    cfg.degree_cap = opt.degree_cap;
    cfg.kr_events = kr_mode;
    cfg.max_rounds = opt.max_rounds;
    cfg.seed = derive_seed(opt.seed, 1);
    rep.degree_cap = cfg.effective_cap();

    auto t0 = std::chrono::steady_clock::now();
    Phase1Result p1 = mt_phase1(*cov, cfg);
    rep.phase1_ms = ms_since(t0);
    rep.phase1_rounds = p1.rounds;
    if (!p1.success) {
        rep.outcome = RunReport::Outcome::phase1_cap;
        return rep;
    }

    auto t1 = std::chrono::steady_clock::now();
    ResidualCover rc = residual(*cov, p1.I);
    CompletionResult comp;
    if (rc.cover.base().n() == 0) {
        rep.completion = "empty";
        comp.status = CompletionStatus::success;
        comp.I = PartialColoring(0);
    } else if (!kr_mode && lll_preconditions_hold(rc, ell)) {
        Rng rng(derive_seed(opt.seed, 2));
        comp = complete_lll(rc, ell, opt.max_rounds, rng);
        rep.completion = "lll";
    } else {
        comp = greedy_complete(rc);
        rep.completion = "greedy";
    }
    rep.phase2_ms = ms_since(t1);
    rep.phase2_rounds = comp.rounds;
    if (comp.status != CompletionStatus::success) {
        rep.outcome = RunReport::Outcome::phase2_cap;
        return rep;
    }
    rep.coloring = merge_residual(*cov, p1.I, rc, comp.I);
    if (!is_coloring(*cov, rep.coloring))
        throw std::logic_error("pipeline: produced coloring failed verification");
    rep.outcome = RunReport::Outcome::success;
    return rep;
}

} // namespace

RunReport color_triangle_free(const Graph& g, const PipelineOptions& opt) {
    if (!is_triangle_free(g))
        throw std::invalid_argument("color_triangle_free: input graph has a triangle");
    return run_pipeline(g, false, 0, opt);
}

RunReport color_kr_free(const Graph& g, int r, const PipelineOptions& opt) {
    if (r < 3)
        throw std::invalid_argument("color_kr_free: r must be >= 3");
    if (!is_kr_free(g, r))
        throw std::invalid_argument("color_kr_free: input graph contains a K_" +
                                    std::to_string(r));
    return run_pipeline(g, true, r, opt);
}

double lll_boundary_product(int ell) {
    if (ell < 1)
        throw std::invalid_argument("lll_boundary_product: ell must be >= 1");
    // 4 * p * d with p = 1/ell^2 and d = ell^2/4, in exact rationals
    long long num = 4LL * 1LL * (1LL * ell * ell);
    long long den = (1LL * ell * ell) * 4LL;
    long long g = std::gcd(num, den);
    num /= g;
    den /= g;
    return static_cast<double>(num) / static_cast<double>(den);
}

} // namespace dpc
