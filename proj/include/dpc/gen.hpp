#ifndef DPC_GEN_HPP
#define DPC_GEN_HPP

#include <cstdint>

#include "dpc/graph.hpp"

namespace dpc {

Graph gen_cycle(int n);
Graph gen_complete(int n);

// bipartition sizes a and b; each cross pair kept with probability p
Graph gen_random_bipartite(int a, int b, double p, uint64_t seed);

// G(n, d/n), then delete a uniformly random edge of a uniformly random
// remaining triangle until none remain
Graph gen_random_triangle_free(int n, double d, uint64_t seed);

// same with K_r in place of triangles
Graph gen_random_kr_free(int n, double d, int r, uint64_t seed);

// dispatcher for the CLI: family in {cycle, complete, random_bipartite,
// random_triangle_free, random_kr_free}
Graph generate(const std::string& family, int n, int m, double p, double d, int r,
               uint64_t seed);

} // namespace dpc

#endif
