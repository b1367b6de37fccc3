#include "dpc/gen.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "dpc/rng.hpp"

namespace dpc {

Graph gen_cycle(int n) {
    if (n < 3)
        throw std::invalid_argument("cycle: n must be >= 3");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        es.emplace_back(i, (i + 1) % n);
    return Graph(n, es);
}

Graph gen_complete(int n) {
    if (n < 1)
        throw std::invalid_argument("complete: n must be >= 1");
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            es.emplace_back(u, v);
    return Graph(n, es);
}

Graph gen_random_bipartite(int a, int b, double p, uint64_t seed) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("random_bipartite: part sizes must be positive");
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("random_bipartite: p must be in [0, 1]");
    Rng rng(seed);
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v)
            if (rng.coin(p))
                es.emplace_back(u, a + v);
    return Graph(a + b, es);
}

namespace {

constexpr int kGenSizeLimit = 4000;

struct EdgeSet {
    int n;
    std::vector<char> mat; // n*n adjacency
    std::vector<std::pair<int, int>> list;

    explicit EdgeSet(int n) : n(n), mat(static_cast<size_t>(n) * n, 0) {}

    bool has(int u, int v) const { return mat[static_cast<size_t>(u) * n + v]; }
    void add(int u, int v) {
        mat[static_cast<size_t>(u) * n + v] = mat[static_cast<size_t>(v) * n + u] = 1;
        list.emplace_back(std::min(u, v), std::max(u, v));
    }
    void remove(int u, int v) {
        mat[static_cast<size_t>(u) * n + v] = mat[static_cast<size_t>(v) * n + u] = 0;
    }
    std::vector<std::pair<int, int>> live_edges() const {
        std::vector<std::pair<int, int>> out;
        for (auto [u, v] : list)
            if (has(u, v))
                out.emplace_back(u, v);
        return out;
    }
};

EdgeSet erdos_renyi(int n, double d, Rng& rng) {
    if (n < 1 || n > kGenSizeLimit)
        throw std::invalid_argument("generator: n out of range [1, 4000]");
    if (d < 0.0)
        throw std::invalid_argument("generator: expected degree must be nonnegative");
    double p = std::min(1.0, d / n);
    EdgeSet es(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.coin(p))
                es.add(u, v);
    return es;
}

// enumerate all r-cliques of the current edge set, ascending vertex tuples
void cliques_rec(const EdgeSet& es, int r, std::vector<int>& cur, int from,
                 std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == r) {
        out.push_back(cur);
        return;
    }
    for (int v = from; v < es.n; ++v) {
        bool ok = true;
        for (int u : cur)
            if (!es.has(u, v)) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        cur.push_back(v);
        cliques_rec(es, r, cur, v + 1, out);
        cur.pop_back();
    }
}

Graph delete_until_kr_free(int n, double d, int r, uint64_t seed) {
    Rng rng(seed);
    EdgeSet es = erdos_renyi(n, d, rng);
    std::vector<std::vector<int>> cliques;
    std::vector<int> cur;
    cliques_rec(es, r, cur, 0, cliques);
    // deleting an edge never creates a clique, so the list only shrinks
    while (!cliques.empty()) {
        size_t ci = rng.below(cliques.size());
        const auto& c = cliques[ci];
        int a = rng.below_int(r);
        int b = rng.below_int(r - 1);
        if (b >= a)
            ++b;
        int eu = std::min(c[a], c[b]), ev = std::max(c[a], c[b]);
        es.remove(eu, ev);
        std::vector<std::vector<int>> kept;
        kept.reserve(cliques.size());
        for (auto& k : cliques) {
            bool hit_u = std::binary_search(k.begin(), k.end(), eu);
            bool hit_v = std::binary_search(k.begin(), k.end(), ev);
            if (!(hit_u && hit_v))
                kept.push_back(std::move(k));
        }
        cliques.swap(kept);
    }
    return Graph(n, es.live_edges());
}

} // namespace

Graph gen_random_triangle_free(int n, double d, uint64_t seed) {
    return delete_until_kr_free(n, d, 3, seed);
}

Graph gen_random_kr_free(int n, double d, int r, uint64_t seed) {
    if (r < 3)
        throw std::invalid_argument("random_kr_free: r must be >= 3");
    return delete_until_kr_free(n, d, r, seed);
}

Graph generate(const std::string& family, int n, int m, double p, double d, int r,
               uint64_t seed) {
    if (family == "cycle")
        return gen_cycle(n);
    if (family == "complete")
        return gen_complete(n);
    if (family == "random_bipartite")
        return gen_random_bipartite(n, m, p, seed);
    if (family == "random_triangle_free")
        return gen_random_triangle_free(n, d, seed);
    if (family == "random_kr_free")
        return gen_random_kr_free(n, d, r, seed);
    throw std::invalid_argument("unknown family `" + family + "`");
}

} // namespace dpc
