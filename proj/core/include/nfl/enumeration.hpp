#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "nfl/domain.hpp"
#include "nfl/fraction.hpp"

namespace nfl {

// Horizons above this make full predictor enumeration (2^(2^T - 1) rule
// tables) unreasonable at desk scale.
inline constexpr int kMaxPredictionHorizon = 4;

// A deterministic prediction rule over binary outcome sequences: one
// predicted next outcome for every history of length < horizon, the empty
// history included. Outcome 1 renders as 'T', 0 as 'N'.
struct Predictor {
    int horizon{0};
    std::vector<std::uint8_t> rule;  // size 2^horizon - 1, indexed by history_index

    // Dense index of a history: histories ordered by length, then by value
    // (first outcome most significant).
    static std::size_t history_index(int length, std::uint32_t history_bits);

    std::uint8_t predict(int length, std::uint32_t history_bits) const;
};

// Histogram of exact error levels against the count of learning situations
// attaining each level.
struct ErrorProfile {
    std::map<Fraction, std::uint64_t> histogram;

    std::uint64_t situations() const;
    // Rows error_level_num,error_level_den,count (no header), for golden files.
    std::string csv_rows() const;

    bool operator==(const ErrorProfile&) const = default;
};

// All 2^(2^horizon - 1) predictors in canonical rule-table order.
std::vector<Predictor> enumerate_predictors(int horizon);

// Per-outcome-sequence fraction of wrong predictions, tallied over all
// 2^horizon sequences.
ErrorProfile predictor_error_profile(const Predictor& p);

// Uniform average of the error fraction over all outcome sequences, exact.
Fraction expected_prediction_error(const Predictor& p);

// Same average for a probabilistic predictor: q[history_index] is the
// probability put on outcome 1, and a single prediction's error is q on
// outcome 0 and 1-q on outcome 1.
double probabilistic_predictor_expected_error(int horizon, std::span<const double> q);

// All classifiers that agree with the given labeling of the seen instances;
// there are exactly 2^(#unseen) of them, in canonical completion order.
std::vector<Classifier> remaining_situations(int bits, std::span<const Instance> seen,
                                             std::span<const Label> seen_labels);

// For each candidate learner output, the histogram of non-stochastic
// generalization errors over the remaining situations. The no-free-lunch
// statement under test: all histograms are identical.
std::vector<ErrorProfile> nonstochastic_nfl_check(int bits, std::span<const Instance> seen,
                                                  std::span<const Label> seen_labels,
                                                  std::span<const Classifier> learner_outputs);

}  // namespace nfl
