#ifndef DPC_EXACT_HPP
#define DPC_EXACT_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dpc/cover.hpp"
#include "dpc/graph.hpp"

namespace dpc {

struct SearchBudget {
    long long max_nodes = 100000000LL;
};

enum class SearchStatus { found, none, budget };

struct FindResult {
    SearchStatus status;
    PartialColoring coloring; // valid iff status == found
    long long nodes = 0;
};

// Exhaustive backtracking for a full coloring of the cover. Vertex order is
// smallest-residual-list-first with lowest-index tie break, so results are
// deterministic. NONE is only reported after exhausting the space.
FindResult find_coloring(const Cover& c, SearchBudget b = {});

enum class TriState { yes, no, budget };

struct DpDecision {
    TriState status;
    std::optional<Cover> witness; // a non-colorable cover when status == no
    long long nodes = 0;
    long long covers_checked = 0;
};

// Does every k-fold cover of g admit a coloring? Enumerates covers with a
// perfect matching on every edge: deleting cross edges only adds colorings
// and every matching extends to a perfect one, so perfect matchings are the
// worst case. Per-list relabeling is gauge freedom, fixed by forcing the
// identity matching on a BFS spanning forest; (k!)^(m-n+c) covers remain.
DpDecision is_k_dp_colorable(const Graph& g, int k, SearchBudget b = {});

struct ChiDpResult {
    TriState status;           // yes: value is chi_DP; no: chi_DP > k_max
    int value = 0;             // smallest colorable k when status == yes
    std::optional<Cover> witness; // failing cover at k_max (status == no)
};

ChiDpResult chi_dp(const Graph& g, int k_max, SearchBudget b = {});

// --- independent-set counting (exact, bitmask graphs up to 62 vertices) ---

// Counter over adjacency masks; memoizes subproblems. ind() includes the
// empty set. Counts are exact in unsigned 64-bit.
class IndCounter {
public:
    explicit IndCounter(std::vector<uint64_t> adj_masks);

    int n() const { return static_cast<int>(adj_.size()); }
    uint64_t full_mask() const { return n() == 64 ? ~0ULL : (1ULL << n()) - 1; }
    unsigned long long ind(uint64_t sub);

    // histogram by set size within the induced subgraph
    std::vector<unsigned long long> histogram(uint64_t sub);

    // uniformly random independent subset of the induced subgraph
    template <typename RngT>
    uint64_t sample(uint64_t sub, RngT& rng) {
        uint64_t chosen = 0;
        while (sub) {
            int v = branch_vertex(sub);
            uint64_t without = ind(sub & ~(1ULL << v));
            uint64_t total = ind(sub);
            if (rng.below(total) < without) {
                sub &= ~(1ULL << v);
            } else {
                chosen |= 1ULL << v;
                sub &= ~(adj_[v] | (1ULL << v));
            }
        }
        return chosen;
    }

private:
    int branch_vertex(uint64_t sub) const;
    std::vector<uint64_t> adj_;
    std::unordered_map<uint64_t, unsigned long long> memo_;
};

// Number of independent sets in f, the empty set included.
unsigned long long ind_count(const Graph& f, int size_limit = 30);

// Median independent-set size: the largest a such that at least ind(f)/2
// independent sets have size >= a.
int median_alpha(const Graph& f, int size_limit = 30);

} // namespace dpc

#endif
