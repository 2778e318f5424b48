#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "nfl/domain.hpp"
#include "nfl/random.hpp"
#include "nfl/risk.hpp"

using namespace nfl;

namespace {

Sample sample_of(std::initializer_list<std::pair<const char*, int>> points) {
    Sample s;
    for (const auto& [bits, label] : points)
        s.add(Instance::from_string(bits), label_from_value(label));
    return s;
}

// m=1 fixture used across the spec examples: uniform marginal, p(0)=0.9,
// p(1)=0.2, f = (1, 0).
const StochasticSituation kTwoPoint = StochasticSituation::uniform_marginal(1, {0.9, 0.2});
const Classifier kTwoPointF = Classifier::from_string("10");

}  // namespace

TEST_CASE("iid risk evaluates the exact error mass") {
    // Perfect classifier under a deterministic all-T situation.
    const StochasticSituation sure = StochasticSituation::uniform_marginal(2, {1, 1, 1, 1});
    CHECK(iid_risk(Classifier::constant(2, Label::kT), sure) == 0.0);

    CHECK(iid_risk(kTwoPointF, kTwoPoint) == doctest::Approx(0.15).epsilon(1e-12));

    // p = 1/2 everywhere: any classifier has risk exactly 1/2.
    const StochasticSituation coin = StochasticSituation::uniform_marginal(2, {0.5, 0.5, 0.5, 0.5});
    Rng rng(7);
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<Label> table(4);
        for (auto& y : table) y = label_from_value(static_cast<int>(rng.below(2)));
        CHECK(iid_risk(Classifier(2, table), coin) == doctest::Approx(0.5).epsilon(1e-12));
    }

    CHECK_THROWS_AS(iid_risk(Classifier::constant(2, Label::kN), kTwoPoint), std::invalid_argument);
}

TEST_CASE("iid risk of a classifier and its complement sum to 1") {
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> conditional(8);
        for (auto& p : conditional) p = rng.uniform01();
        std::vector<double> marginal(8);
        double total = 0.0;
        for (auto& w : marginal) total += (w = rng.uniform01());
        for (auto& w : marginal) w /= total;
        marginal[7] = 1.0;
        for (int i = 0; i < 7; ++i) marginal[7] -= marginal[i];
        const StochasticSituation d(marginal, conditional);
        std::vector<Label> table(8);
        for (auto& y : table) y = label_from_value(static_cast<int>(rng.below(2)));
        const Classifier f(3, table);
        CHECK(iid_risk(f, d) + iid_risk(f.complement(), d) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("ots risk with the spec's m=1 example") {
    const Sample s = sample_of({{"0", 1}});
    // Pair mode drops only (0,1): mass 0.45 excluded, error mass 0.15 kept.
    const auto pair_mode = ots_risk(kTwoPointF, kTwoPoint, s, ExclusionMode::kPair);
    REQUIRE(pair_mode.has_value());
    CHECK(*pair_mode == doctest::Approx(0.15 / 0.55).epsilon(1e-12));
    // Instance mode drops instance 0 entirely: only (1, y) pairs remain, and
    // f errs on (1,1) with mass 0.5 * 0.2.
    const auto instance_mode = ots_risk(kTwoPointF, kTwoPoint, s, ExclusionMode::kInstance);
    REQUIRE(instance_mode.has_value());
    CHECK(*instance_mode == doctest::Approx(0.1 / 0.5).epsilon(1e-12));
}

TEST_CASE("ots risk with an empty sample equals iid risk in both modes") {
    const Sample empty;
    for (const auto mode : {ExclusionMode::kPair, ExclusionMode::kInstance}) {
        const auto risk = ots_risk(kTwoPointF, kTwoPoint, empty, mode);
        REQUIRE(risk.has_value());
        CHECK(*risk == iid_risk(kTwoPointF, kTwoPoint));
    }
}

TEST_CASE("ots risk is zero when the classifier is the deterministic truth") {
    const Classifier truth = Classifier::from_string("0110");
    const StochasticSituation d =
        StochasticSituation::deterministic(truth, {0.25, 0.25, 0.25, 0.25});
    const Sample s = sample_of({{"00", 0}, {"01", 1}});
    for (const auto mode : {ExclusionMode::kPair, ExclusionMode::kInstance}) {
        const auto risk = ots_risk(truth, d, s, mode);
        REQUIRE(risk.has_value());
        CHECK(*risk == 0.0);
    }
}

TEST_CASE("ots risk reports the undefined conditioning event") {
    // Instance mode with every positive-mass instance seen.
    const Sample s = sample_of({{"0", 1}, {"1", 0}});
    CHECK_FALSE(ots_risk(kTwoPointF, kTwoPoint, s, ExclusionMode::kInstance).has_value());
    // Pair mode: a deterministic situation whose only possible pairs are all seen.
    const Classifier truth = Classifier::from_string("01");
    const StochasticSituation det = StochasticSituation::deterministic(truth, {0.5, 0.5});
    const Sample exhaustive = sample_of({{"0", 0}, {"1", 1}});
    CHECK_FALSE(ots_risk(truth, det, exhaustive, ExclusionMode::kPair).has_value());
}

TEST_CASE("ots risk ignores the order of sample pairs") {
    const StochasticSituation d = StochasticSituation::uniform_marginal(2, {0.9, 0.3, 0.7, 0.1});
    const Classifier f = Classifier::from_string("1010");
    const Sample forward = sample_of({{"00", 1}, {"01", 0}, {"10", 1}});
    const Sample backward = sample_of({{"10", 1}, {"01", 0}, {"00", 1}});
    for (const auto mode : {ExclusionMode::kPair, ExclusionMode::kInstance})
        CHECK(*ots_risk(f, d, forward, mode) == *ots_risk(f, d, backward, mode));
}

TEST_CASE("empirical risk is an exact rational") {
    const Classifier f = Classifier::from_string("00");
    const Sample consistent = sample_of({{"0", 0}, {"1", 0}});
    CHECK(empirical_risk(f, consistent) == Fraction(0, 1));
    const Sample half = sample_of({{"0", 0}, {"0", 1}});
    CHECK(empirical_risk(f, half) == Fraction(1, 2));
    CHECK_THROWS_AS(empirical_risk(f, Sample{}), std::invalid_argument);

    // The six-seen demo: a classifier that matches the all-N sample has
    // empirical risk 0 whatever it does off-sample.
    Sample six_seen;
    for (std::uint32_t x = 0; x < 6; ++x) six_seen.add(Instance{x, 3}, Label::kN);
    CHECK(empirical_risk(Classifier::from_string("00000001"), six_seen) == Fraction(0, 1));
}

TEST_CASE("empirical risks of a classifier and its complement sum to 1") {
    const Classifier f = Classifier::from_string("0110");
    const Sample s = sample_of({{"00", 0}, {"01", 0}, {"10", 1}, {"11", 1}, {"00", 1}});
    const Fraction a = empirical_risk(f, s);
    const Fraction b = empirical_risk(f.complement(), s);
    CHECK(a + b == Fraction(1, 1));
}

TEST_CASE("deterministic situations reduce iid risk to weighted disagreement") {
    const Classifier truth = Classifier::from_string("0101");
    const std::vector<double> marginal{0.4, 0.3, 0.2, 0.1};
    const StochasticSituation d = StochasticSituation::deterministic(truth, marginal);
    const Classifier f = Classifier::from_string("0011");
    double expected = 0.0;
    for (std::uint32_t x = 0; x < 4; ++x)
        if (f.at_index(x) != truth.at_index(x)) expected += marginal[x];
    CHECK(iid_risk(f, d) == doctest::Approx(expected).epsilon(1e-15));
}

TEST_CASE("nonstochastic generalization error counts unseen disagreements") {
    // The m=3 six-seen configuration: instances 000..101 seen, 110 and 111 unseen.
    std::vector<Instance> seen;
    for (const char* text : {"000", "001", "010", "011", "100", "101"})
        seen.push_back(Instance::from_string(text));
    // f labels both unseen instances (N, T); the truth labels both N.
    const Classifier f = Classifier::from_string("00000001");
    const Classifier truth_all_n = Classifier::constant(3, Label::kN);
    CHECK(generalization_error_nonstochastic(f, truth_all_n, seen) == Fraction(1, 2));
    CHECK(generalization_error_nonstochastic(truth_all_n, truth_all_n, seen) == Fraction(0, 1));
    // Disagreeing on both unseen instances.
    const Classifier opposite = Classifier::from_string("00000011");
    CHECK(generalization_error_nonstochastic(opposite, truth_all_n, seen) == Fraction(1, 1));

    std::vector<Instance> everything = seen;
    everything.push_back(Instance::from_string("110"));
    everything.push_back(Instance::from_string("111"));
    CHECK_THROWS_AS(generalization_error_nonstochastic(f, truth_all_n, everything),
                    std::invalid_argument);
}

TEST_CASE("risk report bundles the three functionals") {
    const Sample s = sample_of({{"0", 1}});
    const RiskReport report = make_risk_report(kTwoPointF, kTwoPoint, s);
    CHECK(report.iid_risk == doctest::Approx(0.15));
    REQUIRE(report.ots_risk.has_value());
    CHECK(*report.ots_risk == doctest::Approx(0.15 / 0.55));
    CHECK(report.empirical_risk == Fraction(0, 1));
}
