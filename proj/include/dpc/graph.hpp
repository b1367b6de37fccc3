#ifndef DPC_GRAPH_HPP
#define DPC_GRAPH_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpc {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simple undirected graph on vertices 0..n-1. Adjacency lists are sorted,
// symmetric, self-loop free and duplicate free; max_degree is cached at
// construction. Immutable after construction.
class Graph {
public:
    Graph() = default;

    // Builds from an edge list; duplicate edges collapse, self-loops and
    // out-of-range endpoints are rejected.
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const { return m_; }
    int max_degree() const { return max_degree_; }
    int degree(int u) const { return static_cast<int>(adj_[u].size()); }
    const std::vector<int>& neighbors(int u) const { return adj_[u]; }
    bool has_edge(int u, int v) const;

    // edges as (u, v) with u < v, lexicographically sorted
    std::vector<std::pair<int, int>> edges() const;

private:
    std::vector<std::vector<int>> adj_;
    int m_ = 0;
    int max_degree_ = 0;
};

// Edge-list text format: `p <n> <m>` header, then m lines `e <u> <v>`
// (0-based); `#` comments and blank lines allowed.
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);

// N_G^d[u]: all vertices at distance <= d from u, sorted.
std::vector<int> ball(const Graph& g, int u, int d);

bool is_triangle_free(const Graph& g);

// Exact clique search: does g contain a clique on r vertices? Throws
// BudgetExceeded after max_nodes visited search nodes instead of guessing.
bool is_kr_free(const Graph& g, int r, long long max_nodes = 100000000LL);

// A witness r-clique, or empty if none.
std::vector<int> find_clique(const Graph& g, int r, long long max_nodes = 100000000LL);

} // namespace dpc

#endif
