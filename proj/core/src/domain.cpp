#include "nfl/domain.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

#include "nfl/random.hpp"

namespace nfl {

namespace {

void check_bits(int bits) {
    if (bits < 0 || bits > kMaxDomainBits)
        throw std::invalid_argument("domain dimension out of range [0, " +
                                    std::to_string(kMaxDomainBits) + "]: " + std::to_string(bits));
}

// Tolerance for "weights sum to 1" checks on construction.
constexpr double kMassTolerance = 1e-12;

}  // namespace

std::uint32_t domain_size(int bits) {
    check_bits(bits);
    return std::uint32_t{1} << bits;
}

Instance Instance::from_bits(std::span<const int> feature_bits) {
    const int m = static_cast<int>(feature_bits.size());
    check_bits(m);
    std::uint32_t index = 0;
    for (int b : feature_bits) {
        if (b != 0 && b != 1) throw std::invalid_argument("feature bit must be 0 or 1");
        index = (index << 1) | static_cast<std::uint32_t>(b);
    }
    return Instance{index, m};
}

Instance Instance::from_string(std::string_view text) {
    const int m = static_cast<int>(text.size());
    check_bits(m);
    std::uint32_t index = 0;
    for (char c : text) {
        if (c != '0' && c != '1') throw std::invalid_argument("instance string must be over {0,1}");
        index = (index << 1) | static_cast<std::uint32_t>(c - '0');
    }
    return Instance{index, m};
}

int Instance::bit(int position) const {
    if (position < 0 || position >= bits) throw std::out_of_range("feature position");
    return static_cast<int>((index >> (bits - 1 - position)) & 1u);
}

std::string Instance::str() const {
    std::string out(static_cast<std::size_t>(bits), '0');
    for (int i = 0; i < bits; ++i) out[static_cast<std::size_t>(i)] = bit(i) ? '1' : '0';
    return out;
}

int hamming_distance(const Instance& a, const Instance& b) {
    if (a.bits != b.bits) throw std::invalid_argument("hamming_distance: dimension mismatch");
    return std::popcount(a.index ^ b.index);
}

Classifier::Classifier(int bits, std::vector<Label> table) : bits_(bits), table_(std::move(table)) {
    if (table_.size() != domain_size(bits_))
        throw std::invalid_argument("classifier table must cover the whole domain");
}

Classifier Classifier::constant(int bits, Label value) {
    return Classifier(bits, std::vector<Label>(domain_size(bits), value));
}

Classifier Classifier::from_string(std::string_view table) {
    const std::size_t n = table.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("classifier string length must be a power of two");
    const int bits = std::countr_zero(n);
    check_bits(bits);
    std::vector<Label> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i] != '0' && table[i] != '1')
            throw std::invalid_argument("classifier string must be over {0,1}");
        labels[i] = label_from_value(table[i] - '0');
    }
    return Classifier(bits, std::move(labels));
}

Label Classifier::at(const Instance& x) const {
    if (x.bits != bits_) throw std::invalid_argument("classifier/instance dimension mismatch");
    return table_[x.index];
}

Classifier Classifier::complement() const {
    std::vector<Label> flipped(table_.size());
    for (std::size_t i = 0; i < table_.size(); ++i)
        flipped[i] = table_[i] == Label::kT ? Label::kN : Label::kT;
    return Classifier(bits_, std::move(flipped));
}

std::string Classifier::str() const {
    std::string out(table_.size(), '0');
    for (std::size_t i = 0; i < table_.size(); ++i)
        out[i] = static_cast<char>('0' + label_value(table_[i]));
    return out;
}

Sample Sample::prefix(std::size_t count) const {
    Sample out;
    out.pairs.assign(pairs.begin(), pairs.begin() + static_cast<std::ptrdiff_t>(std::min(count, pairs.size())));
    return out;
}

Sample Sample::suffix_from(std::size_t start) const {
    Sample out;
    if (start < pairs.size())
        out.pairs.assign(pairs.begin() + static_cast<std::ptrdiff_t>(start), pairs.end());
    return out;
}

StochasticSituation::StochasticSituation(std::vector<double> marginal, std::vector<double> conditional)
    : marginal_(std::move(marginal)), conditional_(std::move(conditional)) {
    const std::size_t n = marginal_.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("situation must cover a power-of-two domain");
    bits_ = std::countr_zero(n);
    check_bits(bits_);
    if (conditional_.size() != n)
        throw std::invalid_argument("marginal/conditional size mismatch");
    double mass = 0.0;
    for (double w : marginal_) {
        if (w < 0.0) throw std::invalid_argument("marginal weights must be nonnegative");
        mass += w;
    }
    if (std::abs(mass - 1.0) > kMassTolerance)
        throw std::invalid_argument("marginal weights must sum to 1");
    for (double p : conditional_)
        if (p < 0.0 || p > 1.0) throw std::invalid_argument("conditional must lie in [0,1]");
}

StochasticSituation StochasticSituation::uniform_marginal(int bits, std::vector<double> conditional) {
    const std::uint32_t n = domain_size(bits);
    return StochasticSituation(std::vector<double>(n, 1.0 / n), std::move(conditional));
}

StochasticSituation StochasticSituation::deterministic(const Classifier& truth, std::vector<double> marginal) {
    std::vector<double> conditional(truth.size());
    for (std::uint32_t i = 0; i < truth.size(); ++i)
        conditional[i] = static_cast<double>(label_value(truth.at_index(i)));
    return StochasticSituation(std::move(marginal), std::move(conditional));
}

bool StochasticSituation::is_deterministic() const {
    for (double p : conditional_)
        if (p != 0.0 && p != 1.0) return false;
    return true;
}

Classifier StochasticSituation::to_classifier() const {
    if (!is_deterministic())
        throw std::domain_error("situation is stochastic; no classifier representation");
    std::vector<Label> table(size());
    for (std::uint32_t i = 0; i < size(); ++i)
        table[i] = label_from_value(conditional_[i] == 1.0 ? 1 : 0);
    return Classifier(bits_, std::move(table));
}

std::string StochasticSituation::to_csv() const {
    std::string out = "instance_bits,marginal,p_conditional\n";
    char line[96];
    for (std::uint32_t i = 0; i < size(); ++i) {
        const Instance x{i, bits_};
        std::snprintf(line, sizeof line, "%s,%.17g,%.17g\n", x.str().c_str(), marginal_[i],
                      conditional_[i]);
        out += line;
    }
    return out;
}

StochasticSituation StochasticSituation::from_csv(std::string_view csv) {
    std::istringstream in{std::string(csv)};
    std::string line;
    if (!std::getline(in, line) || line.rfind("instance_bits", 0) != 0)
        throw std::invalid_argument("situation CSV must start with the header row");
    std::vector<std::pair<std::uint32_t, std::pair<double, double>>> rows;
    int bits = -1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string bits_text, marginal_text, conditional_text;
        if (!std::getline(fields, bits_text, ',') || !std::getline(fields, marginal_text, ',') ||
            !std::getline(fields, conditional_text))
            throw std::invalid_argument("malformed situation CSV row: " + line);
        const Instance x = Instance::from_string(bits_text);
        if (bits < 0) bits = x.bits;
        if (x.bits != bits) throw std::invalid_argument("inconsistent instance width in CSV");
        rows.emplace_back(x.index, std::make_pair(std::stod(marginal_text), std::stod(conditional_text)));
    }
    if (bits < 0) throw std::invalid_argument("situation CSV has no rows");
    const std::uint32_t n = domain_size(bits);
    if (rows.size() != n) throw std::invalid_argument("situation CSV must list every instance");
    std::vector<double> marginal(n, -1.0), conditional(n, -1.0);
    for (const auto& [index, values] : rows) {
        marginal[index] = values.first;
        conditional[index] = values.second;
    }
    for (double w : marginal)
        if (w < 0.0) throw std::invalid_argument("situation CSV must list every instance exactly once");
    return StochasticSituation(std::move(marginal), std::move(conditional));
}

HypothesisClass::HypothesisClass(std::vector<Classifier> members) : members_(std::move(members)) {
    if (members_.empty()) throw std::invalid_argument("hypothesis class must be nonempty");
    const int bits = members_.front().bits();
    std::set<std::string> seen;
    for (const Classifier& f : members_) {
        if (f.bits() != bits) throw std::invalid_argument("hypothesis class mixes domain dimensions");
        if (!seen.insert(f.str()).second)
            throw std::invalid_argument("hypothesis class contains duplicate classifiers");
    }
}

HypothesisClass HypothesisClass::all_classifiers(int bits) {
    if (bits < 0 || bits > 4)
        throw std::invalid_argument("all_classifiers: full enumeration limited to bits <= 4");
    const std::uint32_t n = domain_size(bits);
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<Classifier> members;
    members.reserve(count);
    // Ascending table id, instance 0 as the most significant table position,
    // equals ascending canonical string order.
    for (std::uint64_t id = 0; id < count; ++id) {
        std::vector<Label> table(n);
        for (std::uint32_t i = 0; i < n; ++i)
            table[i] = label_from_value(static_cast<int>((id >> (n - 1 - i)) & 1u));
        members.emplace_back(bits, std::move(table));
    }
    return HypothesisClass(std::move(members));
}

HypothesisClass HypothesisClass::random_class(int bits, std::size_t count, std::uint64_t seed) {
    const std::uint32_t n = domain_size(bits);
    if (count == 0) throw std::invalid_argument("random_class: count must be positive");
    if (bits <= 4 && count > (std::uint64_t{1} << n))
        throw std::invalid_argument("random_class: count exceeds number of distinct classifiers");
    Rng rng(seed);
    std::set<std::string> seen;
    std::vector<Classifier> members;
    members.reserve(count);
    while (members.size() < count) {
        std::vector<Label> table(n);
        for (std::uint32_t i = 0; i < n; ++i)
            table[i] = label_from_value(static_cast<int>(rng.below(2)));
        Classifier f(bits, std::move(table));
        if (seen.insert(f.str()).second) members.push_back(std::move(f));
    }
    return HypothesisClass(std::move(members));
}

}  // namespace nfl
