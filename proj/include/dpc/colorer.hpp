#ifndef DPC_COLORER_HPP
#define DPC_COLORER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dpc/cover.hpp"
#include "dpc/graph.hpp"
#include "dpc/rng.hpp"

namespace dpc {

struct Phase1Config {
    int ell = 1;
    int degree_cap = -1;        // -1: floor(ell / 8)
    bool kr_events = false;     // residual-degree clause instead of cross-degree clause
    long long max_rounds = -1;  // -1: 100 * n
    uint64_t seed = 0;
    long long glauber_steps = -1;
    unsigned long long layered_threshold = 0; // 0: ceil(Delta^(1/20))

    int effective_cap() const { return degree_cap >= 0 ? degree_cap : ell / 8; }
};

// The bad events B_u, recomputed from scratch (no shared state with
// mt_phase1's bookkeeping). A vertex u is listed iff u is uncolored and
// either its residual list is shorter than ell, or — cross-degree mode —
// some surviving slot has residual cross-degree above the cap, or —
// kr mode — u keeps at least ell uncolored neighbors. Ascending order.
std::vector<int> violated_events(const Cover& c, const PartialColoring& I,
                                 const Phase1Config& cfg);

struct Phase1Result {
    bool success;
    PartialColoring I;
    long long rounds;
};

// Moser-Tardos loop over the events B_u: warm-start from Glauber, then
// repeatedly pick the lowest violated vertex and redraw I inside its
// neighborhood lists uniformly (star kernel when the neighborhood is
// independent, layered kernel otherwise). On success the returned set
// satisfies none of the events, re-verified via violated_events.
Phase1Result mt_phase1(const Cover& c, const Phase1Config& cfg);

enum class CompletionStatus { success, cap, fail };

struct CompletionResult {
    CompletionStatus status;
    PartialColoring I;     // over the residual cover's vertices
    long long rounds = 0;
    int stuck_vertex = -1; // greedy failure witness
};

// Moser-Tardos form of the one-shot LLL completion: one uniform pick per
// list; while some cross edge joins two picks, redraw both endpoints.
// Requires every list >= ell and every cross-degree <= floor(ell/8)
// (checked).
CompletionResult complete_lll(const ResidualCover& rc, int ell, long long max_rounds,
                              Rng& rng);

// Degeneracy-order greedy: succeeds whenever each list is longer than the
// vertex's back-degree; otherwise fails with the stuck vertex.
CompletionResult greedy_complete(const ResidualCover& rc);

struct PipelineOptions {
    double eps = 0.5;
    uint64_t seed = 0;
    int k = 0;              // 0: from the parameter formulas
    int ell = 0;            // 0: from the parameter formulas (or the explicit-k heuristic)
    int degree_cap = -1;    // -1: floor(ell/8); ell/2 mode is for experiments
    long long max_rounds = -1;
    const Cover* cover = nullptr; // supply a cover instead of generating one
};

struct RunReport {
    enum class Outcome { success, phase1_cap, phase2_cap };
    Outcome outcome;
    int k = 0, ell = 0, degree_cap = 0;
    bool sub_threshold = false; // k below the formula recommendation
    long long phase1_rounds = 0, phase2_rounds = 0;
    double phase1_ms = 0.0, phase2_ms = 0.0;
    std::string completion = "none"; // lll | greedy | empty | none
    PartialColoring coloring;        // full coloring iff outcome == success

    bool ok() const { return outcome == Outcome::success; }
};

const char* outcome_name(RunReport::Outcome o);

// Phase 1 with the cross-degree events at cap floor(ell/8), then the LLL
// completion on the residual. Rejects graphs with triangles.
RunReport color_triangle_free(const Graph& g, const PipelineOptions& opt);

// Phase 1 with the residual-degree events, then greedy completion (valid
// because the residual has max degree < ell <= every list). Rejects graphs
// containing K_r.
RunReport color_kr_free(const Graph& g, int r, const PipelineOptions& opt);

// 4pd with p = ell^-2 and d = ell^2/4, computed in exact integer rationals;
// equals 1 for every ell >= 1.
double lll_boundary_product(int ell);

} // namespace dpc

#endif
