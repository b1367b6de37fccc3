#include "dpc/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace dpc {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    if (n < 0)
        throw std::invalid_argument("graph: negative vertex count");
    adj_.assign(n, {});
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("graph: endpoint out of range");
        if (u == v)
            throw std::invalid_argument("graph: self-loop");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        max_degree_ = std::max(max_degree_, static_cast<int>(nb.size()));
        m_ += static_cast<int>(nb.size());
    }
    m_ /= 2;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(m_);
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v)
                es.emplace_back(u, v);
    return es;
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edge_list;
    auto fail = [&](const std::string& msg) {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#')
            continue;
        if (tag == "p") {
            if (n >= 0)
                fail("duplicate header");
            if (!(ls >> n >> m) || n < 0 || m < 0)
                fail("malformed header, expected `p <n> <m>`");
        } else if (tag == "e") {
            if (n < 0)
                fail("edge before header");
            int u, v;
            if (!(ls >> u >> v))
                fail("malformed edge line, expected `e <u> <v>`");
            if (u < 0 || u >= n || v < 0 || v >= n)
                fail("vertex index out of range [0, " + std::to_string(n) + ")");
            if (u == v)
                fail("self-loop at vertex " + std::to_string(u));
            edge_list.emplace_back(u, v);
        } else {
            fail("unknown directive `" + tag + "`");
        }
    }
    if (n < 0)
        throw ParseError("missing `p <n> <m>` header");
    if (static_cast<int>(edge_list.size()) != m)
        throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edge_list.size()) + " edge lines");
    return Graph(n, edge_list);
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << "p " << g.n() << " " << es.size() << "\n";
    for (auto [u, v] : es)
        out << "e " << u << " " << v << "\n";
    return out.str();
}

std::vector<int> ball(const Graph& g, int u, int d) {
    if (u < 0 || u >= g.n())
        throw std::invalid_argument("ball: vertex out of range");
    if (d < 0)
        throw std::invalid_argument("ball: negative radius");
    std::vector<int> dist(g.n(), -1);
    std::queue<int> q;
    dist[u] = 0;
    q.push(u);
    std::vector<int> out{u};
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (dist[v] == d)
            continue;
        for (int w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                out.push_back(w);
                q.push(w);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_triangle_free(const Graph& g) {
    // for each edge, intersect sorted neighborhoods
    for (int u = 0; u < g.n(); ++u) {
        const auto& nu = g.neighbors(u);
        for (int v : nu) {
            if (v < u)
                continue;
            const auto& nv = g.neighbors(v);
            auto a = nu.begin(), b = nv.begin();
            while (a != nu.end() && b != nv.end()) {
                if (*a == *b)
                    return false;
                (*a < *b) ? ++a : ++b;
            }
        }
    }
    return true;
}

namespace {

struct CliqueSearch {
    const Graph& g;
    int r;
    long long budget;
    long long visited = 0;
    std::vector<int> clique;

    explicit CliqueSearch(const Graph& g, int r, long long budget)
        : g(g), r(r), budget(budget) {}

    // extend current clique by vertices from cand (sorted ascending)
    bool extend(std::vector<int>& cand) {
        if (static_cast<int>(clique.size()) == r)
            return true;
        if (++visited > budget)
            throw BudgetExceeded("clique search: node budget exceeded");
        int need = r - static_cast<int>(clique.size());
        if (static_cast<int>(cand.size()) < need)
            return false;
        for (size_t idx = 0; idx + need <= cand.size(); ++idx) {
            int v = cand[idx];
            std::vector<int> next;
            next.reserve(cand.size() - idx);
            const auto& nv = g.neighbors(v);
            for (size_t j = idx + 1; j < cand.size(); ++j)
                if (std::binary_search(nv.begin(), nv.end(), cand[j]))
                    next.push_back(cand[j]);
            clique.push_back(v);
            if (extend(next))
                return true;
            clique.pop_back();
        }
        return false;
    }
};

} // namespace

std::vector<int> find_clique(const Graph& g, int r, long long max_nodes) {
    if (r < 1)
        throw std::invalid_argument("find_clique: r must be >= 1");
    if (r == 1)
        return g.n() > 0 ? std::vector<int>{0} : std::vector<int>{};
    CliqueSearch s(g, r, max_nodes);
    std::vector<int> cand(g.n());
    for (int i = 0; i < g.n(); ++i)
        cand[i] = i;
    if (s.extend(cand))
        return s.clique;
    return {};
}

bool is_kr_free(const Graph& g, int r, long long max_nodes) {
    if (r < 2)
        throw std::invalid_argument("is_kr_free: r must be >= 2");
    return find_clique(g, r, max_nodes).empty();
}

} // namespace dpc
