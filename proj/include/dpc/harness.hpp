#ifndef DPC_HARNESS_HPP
#define DPC_HARNESS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dpc/cover.hpp"
#include "dpc/sampler.hpp"

namespace dpc {

struct Verdict {
    std::string check;
    std::string relation; // the inequality being checked, with numbers
    std::string status;   // pass | fail | info | na
};

struct ExperimentReport {
    std::string id;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::pair<std::string, double>> values;
    std::vector<Verdict> verdicts;

    void param(const std::string& k, const std::string& v) { params.emplace_back(k, v); }
    void value(const std::string& k, double v) { values.emplace_back(k, v); }
    bool all_gates_pass() const;
    std::string to_csv() const;
    std::string to_json() const;
};

struct Interval {
    double lo, hi;
};

// Wilson score interval at 99% (z = 2.5758293035489004)
Interval wilson_ci(long long successes, long long trials);

// upper tail of the chi-square distribution (regularized incomplete gamma)
double chi_square_sf(double stat, int df);

// Chernoff bounds for sums of negatively correlated indicators:
// lower: Pr[X <= (1-d)E] <= exp(-d^2 E / 2), 0 < d < 1
// upper: Pr[X >= (1+d)E] <= exp(-d E / 3), d > 1
double chernoff_bound(double expectation, double delta, bool lower);

// --- closed-form star-procedure probabilities (triangle-free focus) ---

// neighbors v of the focus whose surviving list meets N_H(x)
std::vector<int> ntilde(const NeighborhoodInstance& inst, int x);

// Pr[x survives] = prod over Ntilde(x) of (1 - 1/(|L_J(v)|+1))
double survival_probability(const NeighborhoodInstance& inst, int x);

// exp(-sum 1/|L_J(v)|) <= Pr[x survives] <= exp(-sum 1/(|L_J(v)|+1))
double survival_lower_bound(const NeighborhoodInstance& inst, int x);
double survival_upper_bound(const NeighborhoodInstance& inst, int x);

// Pr[every x in S is blocked], inclusion-exclusion over the star measure
double joint_absence_probability(const NeighborhoodInstance& inst,
                                 const std::vector<int>& S);

// the same by state enumeration (second, independent path)
double joint_absence_by_enumeration(const NeighborhoodInstance& inst,
                                    const std::vector<int>& S,
                                    long long limit = kEnumLimit);

// --- experiments (J = empty conditioning set) ---

// Estimates p0 = Pr[|L_I(u)| < ell] and p1 = Pr[some surviving x has
// residual cross-degree > ell/2] by star sampling; reports the exact
// per-slot survival probabilities, their exponential sandwich, exact
// E[|L_I(u)|], and the Delta^-3/8 reference bounds (informational: they
// are asymptotic claims).
ExperimentReport survival_experiment(const Cover& c, int u, int ell, long long trials,
                                     uint64_t seed);

// Exact check that the absence indicators are negatively correlated: for
// every S of focus slots with |S| <= 4, Pr[all absent] <= prod marginals.
ExperimentReport negcorr_experiment(const Cover& c, int u, uint64_t seed);

// Pure bound evaluation.
ExperimentReport chernoff_experiment(double expectation, double delta, bool lower);

// Empirical pairing: lower-tail frequency of X = |L_I(u)| against the bound.
ExperimentReport chernoff_empirical(const Cover& c, int u, double delta,
                                    long long trials, uint64_t seed);

// Samples K_r-free graphs, checks median alpha >= f(ind). A fail here
// falsifies the Shearer-type inequality and must abort any suite.
ExperimentReport shearer_experiment(int r, int n_max, int samples, uint64_t seed);

// Pr[ceil(ell) chosen neighbors all stay uncolored with lists >= ell]
// against 1/ceil(ell)!; report-only (asymptotic claim).
ExperimentReport factorial_experiment(const Cover& c, int u, double ell,
                                      long long trials, uint64_t seed);

// Success-rate sweep of the triangle-free pipeline over k multipliers.
// One instance per (family, n, d) from the master seed; per-trial seeds by
// splitmix. CSV: family,n,delta,mult,k,ell,trials,successes,mean_rounds.
std::string sweep(const std::string& family, int n, const std::vector<int>& degrees,
                  const std::vector<double>& multipliers, int trials, double eps,
                  uint64_t seed, int threads = 1);

} // namespace dpc

#endif
