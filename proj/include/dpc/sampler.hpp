#ifndef DPC_SAMPLER_HPP
#define DPC_SAMPLER_HPP

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "dpc/cover.hpp"
#include "dpc/rng.hpp"

namespace dpc {

// The conditioned neighborhood of a focus vertex u: residual lists L_J(v)
// for v in N_G(u) under an independent conditioning set J that avoids
// N_G[u], plus the cross edges internal to the neighborhood. Samplers draw
// independent subsets of these lists.
struct NeighborhoodInstance {
    const Cover* cover = nullptr;
    int focus = -1;
    std::vector<int> nbrs;                    // N_G(u), sorted
    std::vector<std::vector<int>> lists;      // surviving slots per neighbor
    std::vector<std::array<int, 4>> internal; // (a, p, b, q): lists[a][p] ~ lists[b][q], a < b
    bool neighborhood_independent = true;     // no base edge inside N_G(u)

    long long total_elements() const {
        long long t = 0;
        for (const auto& l : lists)
            t += static_cast<long long>(l.size());
        return t;
    }
};

// Throws if J is not independent or dom(J) touches N_G[u].
NeighborhoodInstance make_instance(const Cover& c, int u, const PartialColoring& J);

constexpr long long kEnumLimit = 200;

// All independent subsets of the instance as per-neighbor position vectors
// (-1 = blank). Throws once the count exceeds `limit`.
std::vector<std::vector<int>> enumerate_states(const NeighborhoodInstance& inst,
                                               long long limit = kEnumLimit);

// Count only; returns limit + 1 as soon as the count would exceed it.
long long count_states(const NeighborhoodInstance& inst, long long limit);

PartialColoring state_to_coloring(const NeighborhoodInstance& inst,
                                  const std::vector<int>& state);

// Exact uniform sample by full enumeration; the oracle the fast samplers
// are tested against.
PartialColoring enum_uniform(const NeighborhoodInstance& inst, Rng& rng,
                             long long limit = kEnumLimit);

// One independent draw from L_J(v) + blank per neighbor. Requires the
// neighborhood to be independent in the base graph (checked), in which case
// every outcome is an independent subset and the distribution is exactly
// uniform: each subset has probability prod_v 1/(|L_J(v)|+1).
PartialColoring star_sample(const NeighborhoodInstance& inst, Rng& rng);

struct LayeredStep {
    int layer;                  // focus slot index
    unsigned long long ind_fi;  // independent sets in F_i
    int sampled_size;           // |S_i|
    long long s, t;             // counters after this step
};

struct LayeredTrace {
    std::vector<LayeredStep> steps;
    long long s() const { return steps.empty() ? 0 : steps.back().s; }
    long long t() const { return steps.empty() ? 0 : steps.back().t; }
};

// Sequential layer resampling over the focus list: seed with a uniform
// independent subset, then for each focus slot x_i rebuild I inside the
// layer of x_i by an exact uniform draw from F_i. Preserves the uniform
// distribution over independent subsets; the trace records the per-layer
// ind(F_i) counts and the s/t threshold counters. The seed is exact
// (enumeration) when the instance has at most enum_limit states, else a
// Glauber approximation.
std::pair<PartialColoring, LayeredTrace> layered_sample(const NeighborhoodInstance& inst,
                                                        unsigned long long threshold,
                                                        Rng& rng,
                                                        long long enum_limit = kEnumLimit,
                                                        long long glauber_steps = -1);

// Single-site chain on independent subsets of L(region): pick a region
// vertex uniformly, resample its pick uniformly from blank + the list
// elements not matched to any current pick. Stationary distribution is
// uniform; started from the empty state. Burn-in is a heuristic with no
// mixing guarantee (default 50 * total list size).
PartialColoring glauber_sample(const Cover& c, const std::vector<int>& region,
                               long long steps, Rng& rng);

// The same chain on a neighborhood instance (lists L_J, internal edges).
PartialColoring glauber_instance(const NeighborhoodInstance& inst, long long steps,
                                 Rng& rng);

long long default_glauber_steps(long long total_list_size);

struct CoverParams {
    int k;
    int ell;
};

// k = ceil((1+eps) D / ln D), ell = ceil(D^(eps/2)); D >= 2, 0 < eps < 1.
CoverParams params_triangle_free(int max_degree, double eps);

// k = ceil(200 r D log2 log2 D / log2 D), ell = ceil(D^(9/10)); D >= 5, r >= 4.
CoverParams params_kr(int max_degree, int r);

// f(lambda) = log2(lambda) / (2 r log2 log2 lambda); lambda > 2, r >= 4.
double f_lambda(double lambda, int r);

} // namespace dpc

#endif
