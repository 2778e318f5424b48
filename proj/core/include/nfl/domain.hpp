#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nfl/fraction.hpp"

namespace nfl {

// Largest supported domain dimension for dense classifier tables (2^20 entries).
// Desk-scale experiments need bits <= 12; larger claims are checked analytically.
inline constexpr int kMaxDomainBits = 20;

// Binary label. Value 1 renders as 'T', value 0 as 'N' in reports.
enum class Label : std::uint8_t { kN = 0, kT = 1 };

constexpr int label_value(Label y) { return static_cast<int>(y); }
constexpr Label label_from_value(int v) { return v ? Label::kT : Label::kN; }
constexpr char label_char(Label y) { return y == Label::kT ? 'T' : 'N'; }

// Number of instances of a bits-dimensional binary feature domain.
std::uint32_t domain_size(int bits);

// A point of the domain {0,1}^bits, encoded so that the numeric index order
// equals lexicographic order of the feature vector (first feature most
// significant). All enumerations and serializations rely on that order.
struct Instance {
    std::uint32_t index{0};
    int bits{0};

    static Instance from_bits(std::span<const int> feature_bits);
    static Instance from_string(std::string_view text);  // e.g. "010"

    int bit(int position) const;  // feature value, position 0 first
    std::string str() const;

    friend constexpr bool operator==(const Instance& a, const Instance& b) {
        return a.index == b.index && a.bits == b.bits;
    }
    friend constexpr bool operator<(const Instance& a, const Instance& b) {
        return a.index < b.index;
    }
};

int hamming_distance(const Instance& a, const Instance& b);

// Total labeling of the domain, stored as a dense table in instance order.
class Classifier {
  public:
    Classifier(int bits, std::vector<Label> table);

    static Classifier constant(int bits, Label value);
    // Canonical text form: one '0'/'1' character per instance, in instance order.
    static Classifier from_string(std::string_view table);

    int bits() const { return bits_; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(table_.size()); }
    Label at_index(std::uint32_t index) const { return table_[index]; }
    Label at(const Instance& x) const;

    Classifier complement() const;
    std::string str() const;

    bool operator==(const Classifier& other) const = default;

  private:
    int bits_;
    std::vector<Label> table_;
};

// Ordered training data; duplicates allowed, order preserved (validation
// splits depend on it).
struct Sample {
    std::vector<std::pair<Instance, Label>> pairs;

    std::size_t size() const { return pairs.size(); }
    bool empty() const { return pairs.empty(); }
    void add(Instance x, Label y) { pairs.emplace_back(x, y); }

    Sample prefix(std::size_t count) const;
    Sample suffix_from(std::size_t start) const;
};

// Joint distribution over (instance, label): a marginal over instances plus
// one Bernoulli parameter p(x) = P(Y=1 | X=x) per instance.
class StochasticSituation {
  public:
    StochasticSituation(std::vector<double> marginal, std::vector<double> conditional);

    static StochasticSituation uniform_marginal(int bits, std::vector<double> conditional);
    // All-conditionals-deterministic situation matching a classifier.
    static StochasticSituation deterministic(const Classifier& truth, std::vector<double> marginal);

    int bits() const { return bits_; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(marginal_.size()); }
    double marginal(std::uint32_t index) const { return marginal_[index]; }
    double p_label1(std::uint32_t index) const { return conditional_[index]; }
    const std::vector<double>& marginals() const { return marginal_; }
    const std::vector<double>& conditionals() const { return conditional_; }

    bool is_deterministic() const;
    Classifier to_classifier() const;  // throws unless deterministic

    // CSV with header instance_bits,marginal,p_conditional.
    std::string to_csv() const;
    static StochasticSituation from_csv(std::string_view csv);

  private:
    int bits_;
    std::vector<double> marginal_;
    std::vector<double> conditional_;
};

// Finite, duplicate-free, ordered set of classifiers. The member order is the
// deterministic tie-breaking order used by every learner built on top.
class HypothesisClass {
  public:
    explicit HypothesisClass(std::vector<Classifier> members);

    // All 2^(2^bits) classifiers in canonical (serialized-string) order; bits <= 4.
    static HypothesisClass all_classifiers(int bits);
    // Distinct classifiers drawn uniformly at random, order = draw order.
    static HypothesisClass random_class(int bits, std::size_t count, std::uint64_t seed);

    std::size_t size() const { return members_.size(); }
    int bits() const { return members_.front().bits(); }
    const Classifier& at(std::size_t i) const { return members_[i]; }
    const std::vector<Classifier>& members() const { return members_; }

  private:
    std::vector<Classifier> members_;
};

// The three risk functionals of one classifier in one situation.
struct RiskReport {
    double iid_risk{0.0};
    std::optional<double> ots_risk;  // empty when the conditioning event has mass 0
    Fraction empirical_risk;
};

}  // namespace nfl
