#pragma once

#include <cstdint>
#include <vector>

#include "nfl/domain.hpp"
#include "nfl/learners.hpp"
#include "nfl/montecarlo.hpp"
#include "nfl/risk.hpp"

namespace nfl {

// Each conditional p(x) = P(Y=1 | X=x) independently uniform on [0,1]: the
// maximum-entropy universe behind the conservation law.
struct UniformConditionalPrior {
    int bits{0};
};

// Situation with the given marginal and conditionals drawn i.i.d. uniform;
// a deterministic function of the seed.
StochasticSituation sample_situation_from_prior(const UniformConditionalPrior& prior,
                                                std::vector<double> marginal, std::uint64_t seed);

// Expected off-training-set risk of a learner when the conditionals follow
// the uniform prior, E over prior and over samples of size n. Exact mode sums
// over every instance sequence (marginal weights) and label sequence
// (Beta-integral marginal likelihood) and evaluates the posterior-expected
// OTS error in closed form; the law says the value is 1/2 whenever n < |X|.
//
// The OTS error here discounts seen *instances* (ExclusionMode::kInstance):
// that is the reading under which the conservation law is exact.
double expected_ots_risk_under_uniform_prior_exact(const Learner& a,
                                                   const std::vector<double>& marginal, int n);

McEstimate expected_ots_risk_under_uniform_prior_mc(const Learner& a,
                                                    const std::vector<double>& marginal, int n,
                                                    std::uint64_t trials, std::uint64_t seed);

// n * 2^-bits, the analytic ceiling on |E[OTS - IID]| for uniform marginals.
// Pure arithmetic; valid for dimensions far beyond what is enumerable.
double iid_ots_gap_bound(int bits, std::uint64_t n);

struct GapResult {
    double gap{0.0};       // |E[L_{D\S}(A(S)) - L_D(A(S))]|
    double bound{0.0};     // n * 2^-bits
    double stderr_of_mean{0.0};
    std::uint64_t trials{0};
    bool exact{false};
};

// Exact enumeration of the expected IID-OTS gap for a fixed situation with
// uniform marginal; requires bits <= 3, n <= 4 and n < 2^bits so the
// conditioning event always has mass.
GapResult iid_ots_gap_exact(const Learner& a, const StochasticSituation& d, int n,
                            ExclusionMode mode = ExclusionMode::kInstance);

GapResult iid_ots_gap_mc(const Learner& a, const StochasticSituation& d, int n,
                         std::uint64_t trials, std::uint64_t seed,
                         ExclusionMode mode = ExclusionMode::kInstance);

// The two scales of a paradoxical learning situation: epsilon is the
// Hoeffding radius sqrt(ln|F| / (2n)), delta the IID-OTS gap ceiling n*2^-bits.
struct ParadoxParams {
    double epsilon{0.0};
    double delta{0.0};
    int bits{0};
    std::size_t class_size{0};
    std::uint64_t n{0};
};

ParadoxParams paradox_params(int bits, std::size_t class_size, std::uint64_t n);

struct ParadoxTrialRow {
    std::uint64_t trial{0};
    std::uint64_t seed{0};
    double min_risk{0.0};  // best classifier in the drawn class
    double max_risk{0.0};  // worst classifier in the drawn class
};

struct ParadoxReport {
    ParadoxParams params;
    std::vector<ParadoxTrialRow> rows;
    McEstimate min_risk;
    McEstimate max_risk;
    double tolerance_min{0.0};  // epsilon*(1+delta) + 3*stderr
    double tolerance_max{0.0};
    bool satisfied{false};      // both means within tolerance of 1/2
};

// Draws `trials` pairs (random classifier class of the given size, situation
// from the uniform prior over a uniform marginal) and tallies the best- and
// worst-in-class IID risks. In a paradoxical situation both concentrate
// near 1/2: the class offers nothing to learn.
ParadoxReport verify_paradox_resolution(int bits, std::size_t class_size, std::uint64_t n,
                                        std::uint64_t trials, std::uint64_t seed);

}  // namespace nfl
