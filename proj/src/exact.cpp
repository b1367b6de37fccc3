#include "dpc/exact.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace dpc {

namespace {

// Backtracking state over a cover: per-slot block counts maintained
// incrementally, fail-first vertex selection.
struct ColoringSearch {
    const Cover& c;
    long long budget;
    long long nodes = 0;
    std::vector<std::vector<int>> block; // block[u][i]: picked neighbors matched to (u,i)
    std::vector<int> alive;              // unblocked slots per uncolored vertex
    PartialColoring I;

    explicit ColoringSearch(const Cover& c, long long budget)
        : c(c), budget(budget), I(c.base().n()) {
        int n = c.base().n();
        block.resize(n);
        alive.resize(n);
        for (int u = 0; u < n; ++u) {
            block[u].assign(c.list_size(u), 0);
            alive[u] = c.list_size(u);
        }
    }

    void apply(int u, int i, int delta) {
        for (int v : c.base().neighbors(u)) {
            if (I.covers(v))
                continue;
            int j = c.partner(u, i, v);
            if (j < 0)
                continue;
            block[v][j] += delta;
            if (delta > 0 && block[v][j] == 1)
                --alive[v];
            if (delta < 0 && block[v][j] == 0)
                ++alive[v];
        }
    }

    int next_vertex() const {
        int best = -1;
        for (int u = 0; u < c.base().n(); ++u) {
            if (I.covers(u))
                continue;
            if (best < 0 || alive[u] < alive[best])
                best = u;
        }
        return best;
    }

    // returns found / none / budget
    SearchStatus run() {
        int u = next_vertex();
        if (u < 0)
            return SearchStatus::found;
        if (alive[u] == 0)
            return SearchStatus::none;
        for (int i = 0; i < c.list_size(u); ++i) {
            if (block[u][i] > 0)
                continue;
            if (++nodes > budget)
                return SearchStatus::budget;
            I.pick[u] = i;
            apply(u, i, +1);
            SearchStatus s = run();
            if (s != SearchStatus::none)
                return s;
            apply(u, i, -1);
            I.pick[u] = -1;
        }
        return SearchStatus::none;
    }
};

} // namespace

FindResult find_coloring(const Cover& c, SearchBudget b) {
    ColoringSearch s(c, b.max_nodes);
    SearchStatus st = s.run();
    FindResult r{st, {}, s.nodes};
    if (st == SearchStatus::found)
        r.coloring = s.I;
    return r;
}

namespace {

std::vector<std::vector<int>> all_permutations(int k) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// BFS spanning forest edge ids
std::vector<char> forest_edges(const Graph& g, const std::vector<std::pair<int, int>>& edges) {
    auto eid = [&](int u, int v) {
        if (u > v)
            std::swap(u, v);
        auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
        return static_cast<int>(it - edges.begin());
    };
    std::vector<char> in_forest(edges.size(), 0);
    std::vector<char> seen(g.n(), 0);
    std::vector<int> queue;
    for (int root = 0; root < g.n(); ++root) {
        if (seen[root])
            continue;
        seen[root] = 1;
        queue.assign(1, root);
        for (size_t h = 0; h < queue.size(); ++h) {
            int u = queue[h];
            for (int v : g.neighbors(u))
                if (!seen[v]) {
                    seen[v] = 1;
                    in_forest[eid(u, v)] = 1;
                    queue.push_back(v);
                }
        }
    }
    return in_forest;
}

} // namespace

DpDecision is_k_dp_colorable(const Graph& g, int k, SearchBudget b) {
    if (k < 1)
        throw std::invalid_argument("is_k_dp_colorable: k must be >= 1");
    if (k > 6)
        throw std::invalid_argument("is_k_dp_colorable: k > 6 not supported (k! blowup)");
    auto base = std::make_shared<Graph>(g);
    auto edges = g.edges();
    auto in_forest = forest_edges(g, edges);
    std::vector<int> free_edges;
    for (size_t e = 0; e < edges.size(); ++e)
        if (!in_forest[e])
            free_edges.push_back(static_cast<int>(e));
    auto perms = all_permutations(k);
    const long long nperm = static_cast<long long>(perms.size());

    DpDecision out{TriState::yes, std::nullopt, 0, 0};
    std::vector<int> odo(free_edges.size(), 0);
    std::vector<std::vector<std::array<int, 2>>> pairs(edges.size());
    for (size_t e = 0; e < edges.size(); ++e) {
        pairs[e].resize(k);
        for (int i = 0; i < k; ++i)
            pairs[e][i] = {i, i}; // identity everywhere to start
    }
    bool done = false;
    while (!done) {
        for (size_t t = 0; t < free_edges.size(); ++t) {
            const auto& perm = perms[odo[t]];
            auto& pr = pairs[free_edges[t]];
            for (int i = 0; i < k; ++i)
                pr[i] = {i, perm[i]};
        }
        Cover cov(base, std::vector<int>(g.n(), k), pairs);
        ++out.covers_checked;
        FindResult fr = find_coloring(cov, SearchBudget{b.max_nodes - out.nodes});
        out.nodes += fr.nodes;
        if (fr.status == SearchStatus::budget) {
            out.status = TriState::budget;
            return out;
        }
        if (fr.status == SearchStatus::none) {
            out.status = TriState::no;
            out.witness = std::move(cov);
            return out;
        }
        // advance odometer
        done = true;
        for (size_t t = 0; t < free_edges.size(); ++t) {
            if (++odo[t] < nperm) {
                done = false;
                break;
            }
            odo[t] = 0;
        }
    }
    return out;
}

ChiDpResult chi_dp(const Graph& g, int k_max, SearchBudget b) {
    if (k_max < 1)
        throw std::invalid_argument("chi_dp: k_max must be >= 1");
    ChiDpResult out{TriState::no, 0, std::nullopt};
    long long spent = 0;
    for (int k = 1; k <= k_max; ++k) {
        DpDecision d = is_k_dp_colorable(g, k, SearchBudget{b.max_nodes - spent});
        spent += d.nodes;
        if (d.status == TriState::budget) {
            out.status = TriState::budget;
            return out;
        }
        if (d.status == TriState::yes) {
            out.status = TriState::yes;
            out.value = k;
            return out;
        }
        out.witness = std::move(d.witness);
    }
    return out; // chi_DP > k_max; witness is a failing k_max-fold cover
}

IndCounter::IndCounter(std::vector<uint64_t> adj_masks) : adj_(std::move(adj_masks)) {
    if (adj_.size() > 62)
        throw std::invalid_argument("IndCounter: more than 62 vertices");
}

int IndCounter::branch_vertex(uint64_t sub) const {
    int best = -1, best_deg = -1;
    uint64_t rest = sub;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        int deg = std::popcount(adj_[v] & sub);
        if (deg > best_deg) {
            best_deg = deg;
            best = v;
        }
    }
    return best;
}

unsigned long long IndCounter::ind(uint64_t sub) {
    if (sub == 0)
        return 1;
    // strip vertices isolated within sub
    int iso = 0;
    uint64_t rest = sub, core = sub;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if ((adj_[v] & sub) == 0) {
            ++iso;
            core &= ~(1ULL << v);
        }
    }
    unsigned long long base = 1;
    if (core) {
        auto it = memo_.find(core);
        if (it != memo_.end()) {
            base = it->second;
        } else {
            int v = branch_vertex(core);
            unsigned long long r =
                ind(core & ~(1ULL << v)) + ind(core & ~(adj_[v] | (1ULL << v)));
            memo_.emplace(core, r);
            base = r;
        }
    }
    return base << iso;
}

std::vector<unsigned long long> IndCounter::histogram(uint64_t sub) {
    if (sub == 0)
        return {1};
    int v = branch_vertex(sub);
    if (std::popcount(adj_[v] & sub) == 0) {
        // no edges remain: binomial row over the remaining vertices
        int c = std::popcount(sub);
        std::vector<unsigned long long> row(c + 1, 0);
        row[0] = 1;
        for (int i = 0; i < c; ++i)
            for (int j = i + 1; j > 0; --j)
                row[j] += row[j - 1];
        return row;
    }
    auto without = histogram(sub & ~(1ULL << v));
    auto with = histogram(sub & ~(adj_[v] | (1ULL << v)));
    std::vector<unsigned long long> out(std::max(without.size(), with.size() + 1), 0);
    for (size_t i = 0; i < without.size(); ++i)
        out[i] += without[i];
    for (size_t i = 0; i < with.size(); ++i)
        out[i + 1] += with[i];
    return out;
}

namespace {

IndCounter counter_of(const Graph& f, int size_limit) {
    if (f.n() > size_limit)
        throw std::invalid_argument("independent-set enumeration limited to " +
                                    std::to_string(size_limit) + " vertices");
    std::vector<uint64_t> adj(f.n(), 0);
    for (int u = 0; u < f.n(); ++u)
        for (int v : f.neighbors(u))
            adj[u] |= 1ULL << v;
    return IndCounter(std::move(adj));
}

} // namespace

unsigned long long ind_count(const Graph& f, int size_limit) {
    IndCounter ic = counter_of(f, size_limit);
    return ic.ind(ic.full_mask());
}

int median_alpha(const Graph& f, int size_limit) {
    IndCounter ic = counter_of(f, size_limit);
    auto hist = ic.histogram(ic.full_mask());
    unsigned long long total = 0;
    for (auto h : hist)
        total += h;
    // largest a with 2 * #(size >= a) >= total; a = 0 always qualifies
    unsigned long long tail = 0;
    for (int a = static_cast<int>(hist.size()) - 1; a >= 0; --a) {
        tail += hist[a];
        if (2 * tail >= total)
            return a;
    }
    return 0;
}

} // namespace dpc
