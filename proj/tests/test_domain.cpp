#include <doctest.h>

#include <set>
#include <stdexcept>

#include "nfl/domain.hpp"

using namespace nfl;

TEST_CASE("instance encoding follows lexicographic feature order") {
    const Instance x = Instance::from_string("110");
    CHECK(x.index == 6);
    CHECK(x.bits == 3);
    CHECK(x.bit(0) == 1);
    CHECK(x.bit(2) == 0);
    CHECK(x.str() == "110");
    CHECK(Instance::from_string("000") < Instance::from_string("001"));
    CHECK(Instance::from_string("011") < Instance::from_string("100"));
    const int raw[3] = {1, 1, 0};
    CHECK(Instance::from_bits(raw) == x);
    CHECK_THROWS_AS(Instance::from_string("012"), std::invalid_argument);
}

TEST_CASE("hamming distance counts differing features") {
    CHECK(hamming_distance(Instance::from_string("000"), Instance::from_string("111")) == 3);
    CHECK(hamming_distance(Instance::from_string("101"), Instance::from_string("100")) == 1);
    CHECK_THROWS_AS(hamming_distance(Instance{0, 2}, Instance{0, 3}), std::invalid_argument);
}

TEST_CASE("classifier round-trips through its canonical string") {
    const Classifier f = Classifier::from_string("0110");
    CHECK(f.bits() == 2);
    CHECK(f.at(Instance::from_string("00")) == Label::kN);
    CHECK(f.at(Instance::from_string("01")) == Label::kT);
    CHECK(f.str() == "0110");
    CHECK(Classifier::from_string(f.str()) == f);
    CHECK(f.complement().str() == "1001");
    CHECK(f.complement().complement() == f);
    CHECK_THROWS_AS(Classifier::from_string("011"), std::invalid_argument);
    CHECK_THROWS_AS(Classifier(21, {}), std::invalid_argument);
}

TEST_CASE("stochastic situation validates its probabilities") {
    CHECK_THROWS_AS(StochasticSituation({0.5, 0.6}, {0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(StochasticSituation({0.5, 0.5}, {1.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(StochasticSituation({-0.5, 1.5}, {0.5, 0.5}), std::invalid_argument);
    const StochasticSituation d = StochasticSituation::uniform_marginal(1, {0.9, 0.2});
    CHECK(d.bits() == 1);
    CHECK(d.marginal(0) == doctest::Approx(0.5));
    CHECK_FALSE(d.is_deterministic());
    CHECK_THROWS_AS(d.to_classifier(), std::domain_error);
}

TEST_CASE("deterministic situations convert to classifiers and back") {
    const Classifier truth = Classifier::from_string("10");
    const StochasticSituation d = StochasticSituation::deterministic(truth, {0.25, 0.75});
    CHECK(d.is_deterministic());
    CHECK(d.to_classifier() == truth);
}

TEST_CASE("situation CSV round-trips") {
    const StochasticSituation d = StochasticSituation::uniform_marginal(2, {0.9, 0.2, 0.5, 0.0});
    const std::string csv = d.to_csv();
    CHECK(csv.rfind("instance_bits,marginal,p_conditional\n", 0) == 0);
    CHECK(csv.find("00,0.25,") != std::string::npos);
    const StochasticSituation back = StochasticSituation::from_csv(csv);
    CHECK(back.marginals() == d.marginals());
    CHECK(back.conditionals() == d.conditionals());
}

TEST_CASE("hypothesis class rejects duplicates and mixed dimensions") {
    const Classifier a = Classifier::from_string("00");
    const Classifier b = Classifier::from_string("01");
    CHECK_THROWS_AS(HypothesisClass({}), std::invalid_argument);
    CHECK_THROWS_AS(HypothesisClass({a, a}), std::invalid_argument);
    CHECK_THROWS_AS(HypothesisClass({a, Classifier::from_string("0101")}), std::invalid_argument);
    CHECK(HypothesisClass({a, b}).size() == 2);
}

TEST_CASE("all_classifiers enumerates the full function space in canonical order") {
    const HypothesisClass all = HypothesisClass::all_classifiers(2);
    REQUIRE(all.size() == 16);
    CHECK(all.at(0).str() == "0000");
    CHECK(all.at(1).str() == "0001");
    CHECK(all.at(15).str() == "1111");
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all.at(i - 1).str() < all.at(i).str());
}

TEST_CASE("random classes are seeded, distinct, and reproducible") {
    const HypothesisClass a = HypothesisClass::random_class(3, 6, 99);
    const HypothesisClass b = HypothesisClass::random_class(3, 6, 99);
    const HypothesisClass c = HypothesisClass::random_class(3, 6, 100);
    REQUIRE(a.size() == 6);
    std::set<std::string> tables;
    for (const auto& f : a.members()) tables.insert(f.str());
    CHECK(tables.size() == 6);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.at(i) == b.at(i));
    bool any_difference = false;
    for (std::size_t i = 0; i < a.size(); ++i) any_difference |= !(a.at(i) == c.at(i));
    CHECK(any_difference);
}
