#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nfl/domain.hpp"
#include "nfl/learners.hpp"
#include "nfl/montecarlo.hpp"
#include "nfl/risk.hpp"

namespace nfl {

// sqrt(ln|F| / (2n)): ceiling on the expected excess IID risk of empirical
// risk minimization over a finite class, for every situation.
double erm_bound(std::size_t class_size, std::uint64_t n);

// sqrt(ln m / n): ceiling on the expected excess IID risk of two-fold
// forward-validation over m candidate algorithms.
double fv_bound(std::size_t algo_count, std::uint64_t n);

// eta/8 + ln|F| / (eta n), the exponential-moment tradeoff whose minimizer
// yields erm_bound.
double eta_objective(double eta, std::size_t class_size, std::uint64_t n);

// The minimizing eta, sqrt(8 ln|F| / n); requires class_size >= 2.
double optimal_eta(std::size_t class_size, std::uint64_t n);

// Enumeration budget for the exact oracle: (2 * 2^bits)^n terms. Above the
// guard the oracle refuses instead of silently falling back to sampling.
// NFL_LAB_MAX_ENUM overrides the default of 10^7.
std::uint64_t max_enum_terms();
long double enumeration_terms(int bits, int n);
bool exact_oracle_feasible(int bits, int n);

enum class EvalMode { kExact, kMonteCarlo };

// Exact expected risks of a learner over every sample of length n: the
// brute-force oracle that grounds the derived values everywhere else.
struct ExpectedRisk {
    double iid{0.0};
    std::optional<double> ots;  // empty if any positive-weight sample exhausts the support
};

ExpectedRisk exact_expected_risk(const Learner& a, const StochasticSituation& d, int n,
                                 ExclusionMode mode = ExclusionMode::kPair);

struct ExpectedRiskEstimate {
    McEstimate iid;
    McEstimate ots;
    std::uint64_t ots_undefined{0};  // trials whose conditioning event had mass 0
};

ExpectedRiskEstimate mc_expected_risk(const Learner& a, const StochasticSituation& d, int n,
                                      std::uint64_t trials, std::uint64_t seed,
                                      ExclusionMode mode = ExclusionMode::kPair);

enum class Verdict { kSatisfied, kViolated, kInconclusive };

const char* verdict_name(Verdict v);

// SATISFIED iff lhs <= rhs + 3*stderr; VIOLATED iff lhs - 3*stderr > rhs.
Verdict judge(double lhs_estimate, double lhs_stderr, double rhs_bound);

struct BoundCertificate {
    std::string name;
    double lhs_estimate{0.0};
    double lhs_stderr{0.0};
    double rhs_bound{0.0};
    std::uint64_t trials{0};  // 0 in exact mode
    Verdict verdict{Verdict::kInconclusive};
};

BoundCertificate make_certificate(std::string name, double lhs, double lhs_stderr, double rhs,
                                  std::uint64_t trials);

// E[L_D(erm(F,S))] - min_{f in F} L_D(f) against erm_bound(|F|, n).
BoundCertificate certify_erm_bound(const StochasticSituation& d, const HypothesisClass& hypotheses,
                                   int n, EvalMode mode, std::uint64_t trials, std::uint64_t seed);

// max_{f in F} L_D(f) - E[L_D(anti_erm(F,S))] against the same bound.
BoundCertificate certify_anti_erm_bound(const StochasticSituation& d,
                                        const HypothesisClass& hypotheses, int n, EvalMode mode,
                                        std::uint64_t trials, std::uint64_t seed);

// E[L_D(fv(S))] - min_k E[L_D(A_k(S_1))] against fv_bound(m, n), where each
// A_k trains on the first half of the sample.
BoundCertificate certify_fv_bound(const std::vector<Learner>& algorithms,
                                  const StochasticSituation& d, int n, EvalMode mode,
                                  std::uint64_t trials, std::uint64_t seed);

}  // namespace nfl
