#include "dpc/cover.hpp"

#include <algorithm>
#include <sstream>

#include "dpc/rng.hpp"

namespace dpc {

Cover::Cover(std::shared_ptr<const Graph> base, std::vector<int> list_size,
             std::vector<std::vector<std::array<int, 2>>> pairs,
             std::vector<std::array<int, 4>> stray)
    : base_(std::move(base)),
      list_size_(std::move(list_size)),
      pairs_(std::move(pairs)),
      stray_(std::move(stray)) {
    const Graph& g = *base_;
    if (static_cast<int>(list_size_.size()) != g.n())
        throw std::invalid_argument("cover: list_size length != vertex count");
    edges_ = g.edges();
    if (pairs_.size() != edges_.size())
        throw std::invalid_argument("cover: one matching per base edge required");
    // compiled partner tables; ill-formed pairs are left to validate()
    fwd_.resize(edges_.size());
    rev_.resize(edges_.size());
    for (size_t e = 0; e < edges_.size(); ++e) {
        auto [u, v] = edges_[e];
        fwd_[e].assign(std::max(0, list_size_[u]), -1);
        rev_[e].assign(std::max(0, list_size_[v]), -1);
        for (auto [i, j] : pairs_[e]) {
            if (i < 0 || i >= list_size_[u] || j < 0 || j >= list_size_[v])
                continue;
            if (fwd_[e][i] == -1 && rev_[e][j] == -1) {
                fwd_[e][i] = j;
                rev_[e][j] = i;
            }
        }
    }
    incident_.resize(g.n());
    for (int u = 0; u < g.n(); ++u) {
        incident_[u].reserve(g.neighbors(u).size());
        for (int v : g.neighbors(u))
            incident_[u].push_back(edge_id(u, v));
    }
}

long long Cover::total_slots() const {
    long long t = 0;
    for (int s : list_size_)
        t += s;
    return t;
}

int Cover::fold() const {
    if (list_size_.empty())
        return 0;
    int k = list_size_[0];
    for (int s : list_size_)
        if (s != k)
            return -1;
    return k;
}

int Cover::edge_id(int u, int v) const {
    if (u > v)
        std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v))
        return -1;
    return static_cast<int>(it - edges_.begin());
}

int Cover::partner(int u, int i, int v) const {
    int e = edge_id(u, v);
    if (e < 0)
        return -1;
    if (u < v)
        return i < static_cast<int>(fwd_[e].size()) ? fwd_[e][i] : -1;
    return i < static_cast<int>(rev_[e].size()) ? rev_[e][i] : -1;
}

Cover cover_from_lists(std::shared_ptr<const Graph> g,
                       const std::vector<std::vector<int>>& lists) {
    const Graph& gr = *g;
    if (static_cast<int>(lists.size()) != gr.n())
        throw std::invalid_argument("cover_from_lists: one list per vertex required");
    std::vector<int> sizes(gr.n());
    for (int u = 0; u < gr.n(); ++u) {
        if (lists[u].empty())
            throw std::invalid_argument("cover_from_lists: empty list at vertex " +
                                        std::to_string(u));
        sizes[u] = static_cast<int>(lists[u].size());
    }
    auto slot_of = [&](int u, int color) {
        for (int i = 0; i < sizes[u]; ++i)
            if (lists[u][i] == color)
                return i;
        return -1;
    };
    auto edges = gr.edges();
    std::vector<std::vector<std::array<int, 2>>> pairs(edges.size());
    for (size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        for (int i = 0; i < sizes[u]; ++i) {
            int j = slot_of(v, lists[u][i]);
            if (j >= 0)
                pairs[e].push_back({i, j});
        }
    }
    return Cover(std::move(g), std::move(sizes), std::move(pairs));
}

Cover random_cover(std::shared_ptr<const Graph> g, int k, uint64_t seed, CoverMode mode,
                   double p) {
    if (k < 1)
        throw std::invalid_argument("random_cover: k must be >= 1");
    if (mode == CoverMode::density && (p < 0.0 || p > 1.0))
        throw std::invalid_argument("random_cover: density must be in [0, 1]");
    const Graph& gr = *g;
    Rng rng(seed);
    auto edges = gr.edges();
    std::vector<std::vector<std::array<int, 2>>> pairs(edges.size());
    for (size_t e = 0; e < edges.size(); ++e) {
        auto perm = rng.permutation(k);
        for (int i = 0; i < k; ++i) {
            if (mode == CoverMode::density && !rng.coin(p))
                continue;
            pairs[e].push_back({i, perm[i]});
        }
    }
    return Cover(std::move(g), std::vector<int>(gr.n(), k), std::move(pairs));
}

std::vector<CoverViolation> validate(const Cover& c) {
    std::vector<CoverViolation> out;
    auto text = [](int u, int i, int v, int j) {
        std::ostringstream s;
        s << "pair (" << u << "," << i << ")-(" << v << "," << j << ")";
        return s.str();
    };
    // C1: every matched cover vertex must lie inside its declared list
    for (int e = 0; e < c.edge_count(); ++e) {
        auto [u, v] = c.edge(e);
        for (auto [i, j] : c.raw_pairs(e)) {
            if (i < 0 || i >= c.list_size(u))
                out.push_back({'1', text(u, i, v, j) + ": slot " + std::to_string(i) +
                                        " outside L(" + std::to_string(u) + ")"});
            if (j < 0 || j >= c.list_size(v))
                out.push_back({'1', text(u, i, v, j) + ": slot " + std::to_string(j) +
                                        " outside L(" + std::to_string(v) + ")"});
        }
    }
    // C3: matchings may only sit on base edges
    for (auto [u, i, v, j] : c.stray_pairs())
        out.push_back({'3', text(u, i, v, j) + ": " + std::to_string(u) + (u == v ? "" : "-") +
                                (u == v ? " is a self-pair" : std::to_string(v) + " is not a base edge")});
    // C4: per edge, each endpoint slot may appear at most once
    for (int e = 0; e < c.edge_count(); ++e) {
        auto [u, v] = c.edge(e);
        std::vector<int> seen_u(std::max(0, c.list_size(u)), 0);
        std::vector<int> seen_v(std::max(0, c.list_size(v)), 0);
        for (auto [i, j] : c.raw_pairs(e)) {
            if (i >= 0 && i < c.list_size(u) && ++seen_u[i] == 2)
                out.push_back({'4', "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                        ": cover vertex (" + std::to_string(u) + "," +
                                        std::to_string(i) + ") matched twice"});
            if (j >= 0 && j < c.list_size(v) && ++seen_v[j] == 2)
                out.push_back({'4', "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                        ": cover vertex (" + std::to_string(v) + "," +
                                        std::to_string(j) + ") matched twice"});
        }
    }
    return out;
}

bool is_independent(const Cover& c, const PartialColoring& I) {
    const Graph& g = c.base();
    for (int u = 0; u < g.n(); ++u) {
        int i = I.pick[u];
        if (i < 0)
            continue;
        for (int v : g.neighbors(u)) {
            if (v < u)
                continue;
            int j = I.pick[v];
            if (j >= 0 && c.partner(u, i, v) == j)
                return false;
        }
    }
    return true;
}

bool is_coloring(const Cover& c, const PartialColoring& I) {
    const Graph& g = c.base();
    if (static_cast<int>(I.pick.size()) != g.n())
        throw std::invalid_argument("is_coloring: coloring indexed by wrong vertex count");
    for (int u = 0; u < g.n(); ++u) {
        int i = I.pick[u];
        if (i >= c.list_size(u))
            throw std::invalid_argument("is_coloring: pick outside declared list at vertex " +
                                        std::to_string(u));
        if (i < 0)
            return false;
    }
    return is_independent(c, I);
}

int cross_degree(const Cover& c, int u, int i) {
    if (u < 0 || u >= c.base().n() || i < 0 || i >= c.list_size(u))
        throw std::invalid_argument("cross_degree: unknown cover vertex");
    int d = 0;
    for (int v : c.base().neighbors(u))
        if (c.partner(u, i, v) >= 0)
            ++d;
    return d;
}

int residual_list_size(const Cover& c, const PartialColoring& I, int u) {
    return static_cast<int>(residual_list(c, I, u).size());
}

std::vector<int> residual_list(const Cover& c, const PartialColoring& I, int u) {
    std::vector<char> blocked(c.list_size(u), 0);
    for (int v : c.base().neighbors(u)) {
        int j = I.pick[v];
        if (j < 0)
            continue;
        int i = c.partner(v, j, u);
        if (i >= 0)
            blocked[i] = 1;
    }
    std::vector<int> out;
    for (int i = 0; i < c.list_size(u); ++i)
        if (!blocked[i])
            out.push_back(i);
    return out;
}

ResidualCover residual(const Cover& c, const PartialColoring& I) {
    if (!is_independent(c, I))
        throw std::invalid_argument("residual: I is not independent");
    const Graph& g = c.base();
    ResidualCover rc;
    std::vector<int> new_id(g.n(), -1);
    for (int u = 0; u < g.n(); ++u)
        if (!I.covers(u)) {
            new_id[u] = static_cast<int>(rc.orig_vertex.size());
            rc.orig_vertex.push_back(u);
        }
    int rn = static_cast<int>(rc.orig_vertex.size());
    std::vector<std::pair<int, int>> redges;
    for (auto [u, v] : c.base().edges())
        if (new_id[u] >= 0 && new_id[v] >= 0)
            redges.emplace_back(new_id[u], new_id[v]);
    auto rbase = std::make_shared<Graph>(rn, redges);

    rc.orig_slot.resize(rn);
    std::vector<std::vector<int>> slot_new(rn); // parent slot -> residual slot
    std::vector<int> sizes(rn);
    for (int ru = 0; ru < rn; ++ru) {
        int u = rc.orig_vertex[ru];
        auto alive = residual_list(c, I, u);
        rc.orig_slot[ru] = alive;
        slot_new[ru].assign(c.list_size(u), -1);
        for (size_t i = 0; i < alive.size(); ++i)
            slot_new[ru][alive[i]] = static_cast<int>(i);
        sizes[ru] = static_cast<int>(alive.size());
    }
    auto sorted_redges = rbase->edges();
    std::vector<std::vector<std::array<int, 2>>> rpairs(sorted_redges.size());
    for (size_t e = 0; e < sorted_redges.size(); ++e) {
        auto [ru, rv] = sorted_redges[e];
        int u = rc.orig_vertex[ru], v = rc.orig_vertex[rv];
        for (int oi : rc.orig_slot[ru]) {
            int oj = c.partner(u, oi, v);
            if (oj < 0)
                continue;
            int nj = slot_new[rv][oj];
            if (nj >= 0)
                rpairs[e].push_back({slot_new[ru][oi], nj});
        }
    }
    rc.cover = Cover(rbase, std::move(sizes), std::move(rpairs));
    return rc;
}

PartialColoring merge_residual(const Cover& parent, const PartialColoring& I,
                               const ResidualCover& rc, const PartialColoring& Iprime) {
    PartialColoring out = I;
    (void)parent;
    for (size_t ru = 0; ru < rc.orig_vertex.size(); ++ru) {
        int ri = Iprime.pick[ru];
        if (ri < 0)
            continue;
        int u = rc.orig_vertex[ru];
        if (out.pick[u] >= 0)
            throw std::invalid_argument("merge_residual: residual coloring overlaps dom(I)");
        out.pick[u] = rc.orig_slot[ru][ri];
    }
    return out;
}

std::string format_cover(const Cover& c) {
    std::ostringstream out;
    int k = c.fold();
    out << "c " << c.base().n() << " " << (k >= 0 ? std::to_string(k) : "*") << "\n";
    for (int u = 0; u < c.base().n(); ++u)
        out << "L " << u << " " << c.list_size(u) << "\n";
    for (int e = 0; e < c.edge_count(); ++e) {
        auto [u, v] = c.edge(e);
        for (auto [i, j] : c.raw_pairs(e))
            out << "m " << u << " " << i << " " << v << " " << j << "\n";
    }
    for (auto [u, i, v, j] : c.stray_pairs())
        out << "m " << u << " " << i << " " << v << " " << j << "\n";
    return out.str();
}

Cover parse_cover(const std::string& text, std::shared_ptr<const Graph> base) {
    const Graph& g = *base;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool got_header = false;
    int declared_fold = -1; // -1: ragged (`*`)
    std::vector<int> sizes(g.n(), -1);
    std::vector<std::vector<std::array<int, 2>>> pairs(g.edges().size());
    std::vector<std::array<int, 4>> stray;
    auto edges = g.edges();
    auto eid = [&](int u, int v) {
        if (u > v)
            std::swap(u, v);
        auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
        if (it == edges.end() || *it != std::make_pair(u, v))
            return -1;
        return static_cast<int>(it - edges.begin());
    };
    auto fail = [&](const std::string& msg) {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#')
            continue;
        if (tag == "c") {
            if (got_header)
                fail("duplicate header");
            int n;
            std::string fold;
            if (!(ls >> n >> fold))
                fail("malformed header, expected `c <n> <k-or-*>`");
            if (n != g.n())
                fail("cover declares " + std::to_string(n) + " vertices, graph has " +
                     std::to_string(g.n()));
            if (fold != "*") {
                try {
                    declared_fold = std::stoi(fold);
                } catch (...) {
                    fail("fold must be an integer or `*`");
                }
                if (declared_fold < 0)
                    fail("fold must be nonnegative");
            }
            got_header = true;
        } else if (tag == "L") {
            if (!got_header)
                fail("list line before header");
            int u, s;
            if (!(ls >> u >> s))
                fail("malformed list line, expected `L <u> <size>`");
            if (u < 0 || u >= g.n())
                fail("vertex index out of range");
            if (sizes[u] >= 0)
                fail("duplicate list line for vertex " + std::to_string(u));
            if (s < 0)
                fail("negative list size");
            sizes[u] = s;
        } else if (tag == "m") {
            if (!got_header)
                fail("matching line before header");
            int u, i, v, j;
            if (!(ls >> u >> i >> v >> j))
                fail("malformed matching line, expected `m <u> <i> <v> <j>`");
            if (u < 0 || u >= g.n() || v < 0 || v >= g.n())
                fail("vertex index out of range");
            int e = eid(u, v);
            if (e < 0) {
                stray.push_back({u, i, v, j});
            } else if (u <= v) {
                pairs[e].push_back({i, j});
            } else {
                pairs[e].push_back({j, i});
            }
        } else {
            fail("unknown directive `" + tag + "`");
        }
    }
    if (!got_header)
        throw ParseError("missing `c <n> <k-or-*>` header");
    for (int u = 0; u < g.n(); ++u) {
        if (sizes[u] < 0) {
            if (declared_fold < 0)
                throw ParseError("no list size for vertex " + std::to_string(u) +
                                 " and header fold is `*`");
            sizes[u] = declared_fold;
        }
    }
    return Cover(std::move(base), std::move(sizes), std::move(pairs), std::move(stray));
}

} // namespace dpc
