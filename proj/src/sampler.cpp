#include "dpc/sampler.hpp"

#include <algorithm>
#include <cmath>

#include "dpc/exact.hpp"

namespace dpc {

NeighborhoodInstance make_instance(const Cover& c, int u, const PartialColoring& J) {
    const Graph& g = c.base();
    if (u < 0 || u >= g.n())
        throw std::invalid_argument("make_instance: focus out of range");
    if (static_cast<int>(J.pick.size()) != g.n())
        throw std::invalid_argument("make_instance: J indexed by wrong vertex count");
    if (J.covers(u))
        throw std::invalid_argument("make_instance: J colors the focus vertex");
    for (int v : g.neighbors(u))
        if (J.covers(v))
            throw std::invalid_argument("make_instance: dom(J) meets N_G(u)");
    if (!is_independent(c, J))
        throw std::invalid_argument("make_instance: J is not independent");

    NeighborhoodInstance inst;
    inst.cover = &c;
    inst.focus = u;
    inst.nbrs = g.neighbors(u);
    inst.lists.resize(inst.nbrs.size());
    for (size_t a = 0; a < inst.nbrs.size(); ++a)
        inst.lists[a] = residual_list(c, J, inst.nbrs[a]);
    for (size_t a = 0; a < inst.nbrs.size(); ++a) {
        for (size_t b = a + 1; b < inst.nbrs.size(); ++b) {
            int va = inst.nbrs[a], vb = inst.nbrs[b];
            if (!g.has_edge(va, vb))
                continue;
            inst.neighborhood_independent = false;
            for (size_t p = 0; p < inst.lists[a].size(); ++p) {
                int j = c.partner(va, inst.lists[a][p], vb);
                if (j < 0)
                    continue;
                auto it = std::find(inst.lists[b].begin(), inst.lists[b].end(), j);
                if (it != inst.lists[b].end())
                    inst.internal.push_back({static_cast<int>(a), static_cast<int>(p),
                                             static_cast<int>(b),
                                             static_cast<int>(it - inst.lists[b].begin())});
            }
        }
    }
    return inst;
}

namespace {

// per neighbor a and position p, conflicting (b, q) with b < a
std::vector<std::vector<std::vector<std::pair<int, int>>>> back_conflicts(
    const NeighborhoodInstance& inst) {
    std::vector<std::vector<std::vector<std::pair<int, int>>>> back(inst.nbrs.size());
    for (size_t a = 0; a < inst.nbrs.size(); ++a)
        back[a].resize(inst.lists[a].size());
    for (auto [a, p, b, q] : inst.internal)
        back[b][q].emplace_back(a, p); // a < b by construction
    return back;
}

template <typename Visit>
void dfs_states(const NeighborhoodInstance& inst,
                const std::vector<std::vector<std::vector<std::pair<int, int>>>>& back,
                std::vector<int>& state, size_t a, Visit&& visit) {
    if (a == inst.nbrs.size()) {
        visit(state);
        return;
    }
    state[a] = -1;
    dfs_states(inst, back, state, a + 1, visit);
    for (size_t p = 0; p < inst.lists[a].size(); ++p) {
        bool ok = true;
        for (auto [b, q] : back[a][p])
            if (state[b] == q) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        state[a] = static_cast<int>(p);
        dfs_states(inst, back, state, a + 1, visit);
    }
    state[a] = -1;
}

} // namespace

std::vector<std::vector<int>> enumerate_states(const NeighborhoodInstance& inst,
                                               long long limit) {
    auto back = back_conflicts(inst);
    std::vector<std::vector<int>> out;
    std::vector<int> state(inst.nbrs.size(), -1);
    dfs_states(inst, back, state, 0, [&](const std::vector<int>& s) {
        if (static_cast<long long>(out.size()) >= limit)
            throw std::invalid_argument("instance exceeds enumeration limit of " +
                                        std::to_string(limit) + " states");
        out.push_back(s);
    });
    return out;
}

long long count_states(const NeighborhoodInstance& inst, long long limit) {
    auto back = back_conflicts(inst);
    long long count = 0;
    std::vector<int> state(inst.nbrs.size(), -1);
    try {
        dfs_states(inst, back, state, 0, [&](const std::vector<int>&) {
            if (++count > limit)
                throw std::overflow_error("limit");
        });
    } catch (const std::overflow_error&) {
        return limit + 1;
    }
    return count;
}

PartialColoring state_to_coloring(const NeighborhoodInstance& inst,
                                  const std::vector<int>& state) {
    PartialColoring I(inst.cover->base().n());
    for (size_t a = 0; a < inst.nbrs.size(); ++a)
        if (state[a] >= 0)
            I.pick[inst.nbrs[a]] = inst.lists[a][state[a]];
    return I;
}

PartialColoring enum_uniform(const NeighborhoodInstance& inst, Rng& rng, long long limit) {
    auto states = enumerate_states(inst, limit);
    return state_to_coloring(inst, states[rng.below(states.size())]);
}

PartialColoring star_sample(const NeighborhoodInstance& inst, Rng& rng) {
    if (!inst.neighborhood_independent)
        throw std::invalid_argument(
            "star_sample: base edge inside the neighborhood (not triangle-free at focus)");
    PartialColoring I(inst.cover->base().n());
    for (size_t a = 0; a < inst.nbrs.size(); ++a) {
        uint64_t idx = rng.below(inst.lists[a].size() + 1);
        if (idx < inst.lists[a].size())
            I.pick[inst.nbrs[a]] = inst.lists[a][idx];
    }
    return I;
}

namespace {

struct FlatElements {
    std::vector<int> offset;          // per neighbor
    std::vector<std::vector<int>> nb; // internal adjacency between element ids
    std::vector<int> owner;           // element -> neighbor index
    std::vector<int> pos;             // element -> position within its list
    int count = 0;
};

FlatElements flatten(const NeighborhoodInstance& inst) {
    FlatElements f;
    f.offset.resize(inst.nbrs.size());
    for (size_t a = 0; a < inst.nbrs.size(); ++a) {
        f.offset[a] = f.count;
        for (size_t p = 0; p < inst.lists[a].size(); ++p) {
            f.owner.push_back(static_cast<int>(a));
            f.pos.push_back(static_cast<int>(p));
            ++f.count;
        }
    }
    f.nb.resize(f.count);
    for (auto [a, p, b, q] : inst.internal) {
        int x = f.offset[a] + p, y = f.offset[b] + q;
        f.nb[x].push_back(y);
        f.nb[y].push_back(x);
    }
    return f;
}

} // namespace

std::pair<PartialColoring, LayeredTrace> layered_sample(const NeighborhoodInstance& inst,
                                                        unsigned long long threshold,
                                                        Rng& rng, long long enum_limit,
                                                        long long glauber_steps) {
    const Cover& c = *inst.cover;
    FlatElements flat = flatten(inst);

    // seed: uniform independent subset of the whole instance
    std::vector<char> in_I(flat.count, 0);
    if (count_states(inst, enum_limit) <= enum_limit) {
        auto states = enumerate_states(inst, enum_limit);
        const auto& st = states[rng.below(states.size())];
        for (size_t a = 0; a < st.size(); ++a)
            if (st[a] >= 0)
                in_I[flat.offset[a] + st[a]] = 1;
    } else {
        PartialColoring seed = glauber_instance(inst, glauber_steps, rng);
        for (size_t a = 0; a < inst.nbrs.size(); ++a) {
            int slot = seed.pick[inst.nbrs[a]];
            if (slot < 0)
                continue;
            auto it = std::find(inst.lists[a].begin(), inst.lists[a].end(), slot);
            in_I[flat.offset[a] + (it - inst.lists[a].begin())] = 1;
        }
    }

    // layers: element -> focus slot it is matched to (or -1)
    std::vector<std::vector<int>> layer(c.list_size(inst.focus));
    for (int e = 0; e < flat.count; ++e) {
        int v = inst.nbrs[flat.owner[e]];
        int slot = inst.lists[flat.owner[e]][flat.pos[e]];
        int x = c.partner(v, slot, inst.focus);
        if (x >= 0)
            layer[x].push_back(e);
    }

    LayeredTrace trace;
    long long s = 0, t = 0;
    std::vector<char> list_blocked(inst.nbrs.size(), 0);
    for (int x = 0; x < c.list_size(inst.focus); ++x) {
        for (int e : layer[x])
            in_I[e] = 0; // Q = I_{i-1} \ Lambda_i

        // F_i: layer elements with no neighbor in Q (same-list picks included)
        std::fill(list_blocked.begin(), list_blocked.end(), 0);
        for (int e = 0; e < flat.count; ++e)
            if (in_I[e])
                list_blocked[flat.owner[e]] = 1;
        std::vector<int> fi;
        for (int e : layer[x]) {
            if (list_blocked[flat.owner[e]])
                continue;
            bool blocked = false;
            for (int w : flat.nb[e])
                if (in_I[w]) {
                    blocked = true;
                    break;
                }
            if (!blocked)
                fi.push_back(e);
        }
        if (fi.size() > 62)
            throw std::invalid_argument("layered_sample: layer too large for exact sampling");

        std::vector<uint64_t> adj(fi.size(), 0);
        for (size_t i = 0; i < fi.size(); ++i)
            for (size_t j = i + 1; j < fi.size(); ++j) {
                const auto& nbi = flat.nb[fi[i]];
                if (std::find(nbi.begin(), nbi.end(), fi[j]) != nbi.end()) {
                    adj[i] |= 1ULL << j;
                    adj[j] |= 1ULL << i;
                }
            }
        IndCounter counter(std::move(adj));
        unsigned long long ind_fi = counter.ind(counter.full_mask());
        if (ind_fi > threshold)
            ++s;
        else
            ++t;
        uint64_t si = counter.sample(counter.full_mask(), rng);
        int picked = 0;
        for (size_t i = 0; i < fi.size(); ++i)
            if (si & (1ULL << i)) {
                in_I[fi[i]] = 1;
                ++picked;
            }
        trace.steps.push_back({x, ind_fi, picked, s, t});
    }
    if (s + t != c.list_size(inst.focus))
        throw std::logic_error("layered_sample: counter invariant violated");

    PartialColoring I(c.base().n());
    for (int e = 0; e < flat.count; ++e)
        if (in_I[e])
            I.pick[inst.nbrs[flat.owner[e]]] = inst.lists[flat.owner[e]][flat.pos[e]];
    return {std::move(I), std::move(trace)};
}

long long default_glauber_steps(long long total_list_size) {
    return 50 * total_list_size;
}

namespace {

// shared single-site chain; conflicts(v, slot) must say whether picking
// `slot` at v collides with the current picks of other vertices
template <typename Conflicts>
void glauber_core(const std::vector<int>& region, const std::vector<int>& sizes,
                  std::vector<int>& pick, long long steps, Rng& rng,
                  Conflicts&& conflicted) {
    std::vector<int> candidates;
    for (long long step = 0; step < steps; ++step) {
        int a = rng.below_int(static_cast<int>(region.size()));
        candidates.clear();
        for (int i = 0; i < sizes[a]; ++i)
            if (!conflicted(a, i))
                candidates.push_back(i);
        uint64_t idx = rng.below(candidates.size() + 1);
        pick[a] = idx < candidates.size() ? candidates[idx] : -1;
    }
}

} // namespace

PartialColoring glauber_sample(const Cover& c, const std::vector<int>& region,
                               long long steps, Rng& rng) {
    if (steps < 0) {
        long long total = 0;
        for (int v : region)
            total += c.list_size(v);
        steps = default_glauber_steps(total);
    }
    const Graph& g = c.base();
    std::vector<int> region_index(g.n(), -1);
    for (size_t a = 0; a < region.size(); ++a)
        region_index[region[a]] = static_cast<int>(a);
    std::vector<int> pick(region.size(), -1);
    std::vector<int> blocked, candidates;
    for (long long step = 0; step < steps; ++step) {
        int a = rng.below_int(static_cast<int>(region.size()));
        int v = region[a];
        blocked.assign(c.list_size(v), 0);
        const auto& nbrs = g.neighbors(v);
        const auto& eids = c.incident_edges(v);
        for (size_t w = 0; w < nbrs.size(); ++w) {
            int b = region_index[nbrs[w]];
            if (b < 0 || pick[b] < 0)
                continue;
            int i = c.partner_on_edge(eids[w], nbrs[w], pick[b]);
            if (i >= 0)
                blocked[i] = 1;
        }
        candidates.clear();
        for (int i = 0; i < c.list_size(v); ++i)
            if (!blocked[i])
                candidates.push_back(i);
        uint64_t idx = rng.below(candidates.size() + 1);
        pick[a] = idx < candidates.size() ? candidates[idx] : -1;
        if (pick[a] >= 0 && blocked[pick[a]])
            throw std::logic_error("glauber_sample: dependent pick");
    }
    PartialColoring I(g.n());
    for (size_t a = 0; a < region.size(); ++a)
        if (pick[a] >= 0)
            I.pick[region[a]] = pick[a];
    return I;
}

PartialColoring glauber_instance(const NeighborhoodInstance& inst, long long steps,
                                 Rng& rng) {
    if (steps < 0)
        steps = default_glauber_steps(inst.total_elements());
    auto back = back_conflicts(inst);
    // forward conflicts as well: conflict check must look both ways
    std::vector<std::vector<std::vector<std::pair<int, int>>>> conf(inst.nbrs.size());
    for (size_t a = 0; a < inst.nbrs.size(); ++a)
        conf[a].resize(inst.lists[a].size());
    for (auto [a, p, b, q] : inst.internal) {
        conf[b][q].emplace_back(a, p);
        conf[a][p].emplace_back(b, q);
    }
    std::vector<int> region(inst.nbrs.size());
    std::vector<int> sizes(inst.nbrs.size());
    for (size_t a = 0; a < inst.nbrs.size(); ++a) {
        region[a] = static_cast<int>(a);
        sizes[a] = static_cast<int>(inst.lists[a].size());
    }
    std::vector<int> pick(inst.nbrs.size(), -1);
    glauber_core(region, sizes, pick, steps, rng, [&](int a, int i) {
        for (auto [b, q] : conf[a][i])
            if (pick[b] == q)
                return true;
        return false;
    });
    PartialColoring I(inst.cover->base().n());
    for (size_t a = 0; a < inst.nbrs.size(); ++a)
        if (pick[a] >= 0)
            I.pick[inst.nbrs[a]] = inst.lists[a][pick[a]];
    return I;
}

namespace {

// guard against pow() jitter on exact-integer results before taking ceil
long long ceil_guarded(double x) {
    return static_cast<long long>(std::ceil(x - 1e-9));
}

} // namespace

CoverParams params_triangle_free(int max_degree, double eps) {
    if (max_degree < 2)
        throw std::invalid_argument("params_triangle_free: max degree must be >= 2");
    if (eps <= 0.0 || eps >= 1.0)
        throw std::invalid_argument("params_triangle_free: eps must satisfy 0 < eps < 1");
    double d = max_degree;
    CoverParams p;
    p.k = static_cast<int>(ceil_guarded((1.0 + eps) * d / std::log(d)));
    p.ell = static_cast<int>(ceil_guarded(std::pow(d, eps / 2.0)));
    return p;
}

CoverParams params_kr(int max_degree, int r) {
    if (max_degree < 5)
        throw std::invalid_argument("params_kr: max degree must be >= 5");
    if (r < 4)
        throw std::invalid_argument("params_kr: r must be >= 4");
    double d = max_degree;
    double l2 = std::log2(d);
    CoverParams p;
    p.k = static_cast<int>(ceil_guarded(200.0 * r * d * std::log2(l2) / l2));
    p.ell = static_cast<int>(ceil_guarded(std::pow(d, 0.9)));
    return p;
}

double f_lambda(double lambda, int r) {
    if (!(lambda > 2.0))
        throw std::invalid_argument("f_lambda: lambda must exceed 2");
    if (r < 4)
        throw std::invalid_argument("f_lambda: r must be >= 4");
    double l2 = std::log2(lambda);
    return l2 / (2.0 * r * std::log2(l2));
}

} // namespace dpc
