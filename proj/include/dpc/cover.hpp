#ifndef DPC_COVER_HPP
#define DPC_COVER_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dpc/graph.hpp"

namespace dpc {

// A partial assignment of cover vertices: pick[u] is a slot index into L(u),
// or -1 when u is uncolored. dom(I) = { u : pick[u] >= 0 }.
struct PartialColoring {
    std::vector<int> pick;

    PartialColoring() = default;
    explicit PartialColoring(int n) : pick(n, -1) {}

    int dom_size() const {
        int c = 0;
        for (int p : pick)
            if (p >= 0)
                ++c;
        return c;
    }
    bool covers(int u) const { return pick[u] >= 0; }
    bool full() const { return dom_size() == static_cast<int>(pick.size()); }

    bool operator==(const PartialColoring&) const = default;
};

// A DP-cover of a base graph: per-vertex list sizes (cover vertices are
// (u, slot) pairs, slot < list_size[u]) and one partial matching per base
// edge. Intra-list clique edges are implicit and never stored. The raw
// matching pairs are kept verbatim so that validate() can report axiom
// violations in parsed files; compiled partner tables index only the
// well-formed pairs. Immutable after construction.
class Cover {
public:
    Cover() = default;
    Cover(std::shared_ptr<const Graph> base, std::vector<int> list_size,
          std::vector<std::vector<std::array<int, 2>>> pairs,
          std::vector<std::array<int, 4>> stray = {});

    const Graph& base() const { return *base_; }
    std::shared_ptr<const Graph> base_ptr() const { return base_; }
    int list_size(int u) const { return list_size_[u]; }
    const std::vector<int>& list_sizes() const { return list_size_; }
    long long total_slots() const;
    // fold size if uniform, else -1
    int fold() const;

    int edge_count() const { return static_cast<int>(edges_.size()); }
    std::pair<int, int> edge(int e) const { return edges_[e]; }
    int edge_id(int u, int v) const; // -1 if uv is not a base edge
    const std::vector<std::array<int, 2>>& raw_pairs(int e) const { return pairs_[e]; }
    const std::vector<std::array<int, 4>>& stray_pairs() const { return stray_; }

    // slot of v matched to (u, i) across base edge uv, or -1 if unmatched
    int partner(int u, int i, int v) const;

    // same lookup given the edge id (hot-path variant, no edge search)
    int partner_on_edge(int e, int from, int slot) const {
        if (from == edges_[e].first)
            return slot < static_cast<int>(fwd_[e].size()) ? fwd_[e][slot] : -1;
        return slot < static_cast<int>(rev_[e].size()) ? rev_[e][slot] : -1;
    }

    // edge ids incident to u, aligned with base().neighbors(u)
    const std::vector<int>& incident_edges(int u) const { return incident_[u]; }

private:
    std::shared_ptr<const Graph> base_;
    std::vector<int> list_size_;
    std::vector<std::pair<int, int>> edges_; // u < v, lexicographic
    std::vector<std::vector<std::array<int, 2>>> pairs_;
    std::vector<std::array<int, 4>> stray_; // m-lines on non-edges (u,i,v,j)
    std::vector<std::vector<int>> fwd_, rev_; // compiled partner tables per edge
    std::vector<std::vector<int>> incident_;
};

// Canonical cover of a list assignment: cross matchings identify equal
// colors. L-colorings of g correspond bijectively to colorings of the result.
Cover cover_from_lists(std::shared_ptr<const Graph> g,
                       const std::vector<std::vector<int>>& lists);

enum class CoverMode { perfect, density };

// k-fold random cover. perfect: a uniform random perfect matching per edge;
// density: perfect matching thinned by keeping each pair with probability p.
Cover random_cover(std::shared_ptr<const Graph> g, int k, uint64_t seed,
                   CoverMode mode = CoverMode::perfect, double p = 1.0);

struct CoverViolation {
    char axiom;         // '1', '3' or '4'
    std::string detail; // human-readable witness
};

// Checks axioms C1-C4 against the raw matching data. C2 (lists induce
// cliques) is implicit in the representation and cannot be violated.
// Violations are data, not errors: empty result iff valid.
std::vector<CoverViolation> validate(const Cover& c);

// Independence of I in the cover graph H (no two picks cross-matched).
bool is_independent(const Cover& c, const PartialColoring& I);

// True iff dom(I) = V and I is independent. Throws if a pick is out of its
// declared list.
bool is_coloring(const Cover& c, const PartialColoring& I);

// deg* of cover vertex (u, i): number of cross edges incident to it.
int cross_degree(const Cover& c, int u, int i);

// number of slots of u not matched to any pick of I
int residual_list_size(const Cover& c, const PartialColoring& I, int u);
std::vector<int> residual_list(const Cover& c, const PartialColoring& I, int u);

// The induced instance after fixing an independent set I: base graph
// G - dom(I), surviving slots, induced matchings. Slot indices are
// renumbered; orig_vertex / orig_slot map back to the parent cover.
struct ResidualCover {
    Cover cover;
    std::vector<int> orig_vertex;            // residual vertex -> parent vertex
    std::vector<std::vector<int>> orig_slot; // residual (v, i) -> parent slot
};

ResidualCover residual(const Cover& c, const PartialColoring& I);

// I union I' where I' colors the residual; result indexed by the parent.
PartialColoring merge_residual(const Cover& parent, const PartialColoring& I,
                               const ResidualCover& rc, const PartialColoring& Iprime);

// Cover text format: header `c <n> <k-or-*>`, per-vertex `L <u> <size>`,
// per matched pair `m <u> <i> <v> <j>`. The base graph travels separately.
std::string format_cover(const Cover& c);
Cover parse_cover(const std::string& text, std::shared_ptr<const Graph> base);

} // namespace dpc

#endif
