#pragma once

#include <optional>
#include <span>

#include "nfl/domain.hpp"
#include "nfl/fraction.hpp"

namespace nfl {

// What the off-training-set conditioning excludes. kPair drops the exact
// (instance, label) pairs of the sample; kInstance drops every instance that
// appears in the sample, whatever its label. The two readings coincide on
// deterministic situations when sample labels match the truth.
enum class ExclusionMode { kPair, kInstance };

// P(f(X) != Y) under the situation; exact sum over the finite domain.
double iid_risk(const Classifier& f, const StochasticSituation& d);

// P(f(X) != Y | excluded set misses (X,Y)). Empty when the conditioning event
// has probability zero; callers must handle that.
std::optional<double> ots_risk(const Classifier& f, const StochasticSituation& d, const Sample& s,
                               ExclusionMode mode = ExclusionMode::kPair);

// Number of sample points the classifier mislabels (0 on an empty sample).
std::size_t error_count(const Classifier& f, const Sample& s);

// error_count / n as an exact rational; throws on an empty sample.
Fraction empirical_risk(const Classifier& f, const Sample& s);

// Fraction of instances outside `seen` where f and truth disagree.
// Throws when `seen` covers the whole domain.
Fraction generalization_error_nonstochastic(const Classifier& f, const Classifier& truth,
                                            std::span<const Instance> seen);

RiskReport make_risk_report(const Classifier& f, const StochasticSituation& d, const Sample& s,
                            ExclusionMode mode = ExclusionMode::kPair);

}  // namespace nfl
