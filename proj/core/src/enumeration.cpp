#include "nfl/enumeration.hpp"

#include <cstdio>
#include <stdexcept>

#include "nfl/risk.hpp"

namespace nfl {

namespace {

void check_horizon(int horizon) {
    if (horizon < 1 || horizon > kMaxPredictionHorizon)
        throw std::invalid_argument("prediction horizon out of range [1, " +
                                    std::to_string(kMaxPredictionHorizon) + "]");
}

// Outcome of day `step` (0-based) in sequence `seq`, first day most significant.
int outcome_at(std::uint32_t seq, int horizon, int step) {
    return static_cast<int>((seq >> (horizon - 1 - step)) & 1u);
}

// History bits of the first `length` outcomes of `seq`.
std::uint32_t history_of(std::uint32_t seq, int horizon, int length) {
    return length == 0 ? 0u : seq >> (horizon - length);
}

}  // namespace

std::size_t Predictor::history_index(int length, std::uint32_t history_bits) {
    return (std::size_t{1} << length) - 1 + history_bits;
}

std::uint8_t Predictor::predict(int length, std::uint32_t history_bits) const {
    return rule[history_index(length, history_bits)];
}

std::uint64_t ErrorProfile::situations() const {
    std::uint64_t total = 0;
    for (const auto& [level, count] : histogram) total += count;
    return total;
}

std::string ErrorProfile::csv_rows() const {
    std::string out;
    char line[64];
    for (const auto& [level, count] : histogram) {
        std::snprintf(line, sizeof line, "%lld,%lld,%llu\n", static_cast<long long>(level.num),
                      static_cast<long long>(level.den), static_cast<unsigned long long>(count));
        out += line;
    }
    return out;
}

std::vector<Predictor> enumerate_predictors(int horizon) {
    check_horizon(horizon);
    const std::size_t table_size = (std::size_t{1} << horizon) - 1;
    const std::uint64_t count = std::uint64_t{1} << table_size;
    std::vector<Predictor> predictors;
    predictors.reserve(count);
    for (std::uint64_t id = 0; id < count; ++id) {
        Predictor p;
        p.horizon = horizon;
        p.rule.resize(table_size);
        for (std::size_t h = 0; h < table_size; ++h)
            p.rule[h] = static_cast<std::uint8_t>((id >> h) & 1u);
        predictors.push_back(std::move(p));
    }
    return predictors;
}

ErrorProfile predictor_error_profile(const Predictor& p) {
    check_horizon(p.horizon);
    if (p.rule.size() != (std::size_t{1} << p.horizon) - 1)
        throw std::invalid_argument("predictor rule table has wrong size");
    ErrorProfile profile;
    const std::uint32_t sequences = 1u << p.horizon;
    for (std::uint32_t seq = 0; seq < sequences; ++seq) {
        int errors = 0;
        for (int step = 0; step < p.horizon; ++step)
            if (p.predict(step, history_of(seq, p.horizon, step)) != outcome_at(seq, p.horizon, step))
                ++errors;
        profile.histogram[Fraction(errors, p.horizon)] += 1;
    }
    return profile;
}

Fraction expected_prediction_error(const Predictor& p) {
    check_horizon(p.horizon);
    const std::uint32_t sequences = 1u << p.horizon;
    std::int64_t total_errors = 0;
    for (std::uint32_t seq = 0; seq < sequences; ++seq)
        for (int step = 0; step < p.horizon; ++step)
            if (p.predict(step, history_of(seq, p.horizon, step)) != outcome_at(seq, p.horizon, step))
                ++total_errors;
    return Fraction(total_errors, static_cast<std::int64_t>(p.horizon) * sequences);
}

double probabilistic_predictor_expected_error(int horizon, std::span<const double> q) {
    check_horizon(horizon);
    if (q.size() != (std::size_t{1} << horizon) - 1)
        throw std::invalid_argument("probabilistic predictor table has wrong size");
    for (double v : q)
        if (v < 0.0 || v > 1.0)
            throw std::invalid_argument("prediction probability outside [0,1]");
    const std::uint32_t sequences = 1u << horizon;
    double total = 0.0;
    for (std::uint32_t seq = 0; seq < sequences; ++seq) {
        double errors = 0.0;
        for (int step = 0; step < horizon; ++step) {
            const double pt = q[Predictor::history_index(step, history_of(seq, horizon, step))];
            errors += outcome_at(seq, horizon, step) == 1 ? 1.0 - pt : pt;
        }
        total += errors / horizon;
    }
    return total / sequences;
}

std::vector<Classifier> remaining_situations(int bits, std::span<const Instance> seen,
                                             std::span<const Label> seen_labels) {
    if (seen.size() != seen_labels.size())
        throw std::invalid_argument("seen instances and labels differ in length");
    const std::uint32_t n = domain_size(bits);
    std::vector<int> fixed(n, -1);
    std::size_t distinct = 0;
    for (std::size_t i = 0; i < seen.size(); ++i) {
        const Instance& x = seen[i];
        if (x.bits != bits) throw std::invalid_argument("seen-instance dimension mismatch");
        const int v = label_value(seen_labels[i]);
        if (fixed[x.index] == -1) {
            fixed[x.index] = v;
            ++distinct;
        } else if (fixed[x.index] != v) {
            throw std::invalid_argument("seen instance labeled inconsistently");
        }
    }
    if (distinct == n) throw std::invalid_argument("no unseen instances remain");
    std::vector<std::uint32_t> unseen;
    for (std::uint32_t x = 0; x < n; ++x)
        if (fixed[x] == -1) unseen.push_back(x);
    const std::size_t u = unseen.size();
    std::vector<Classifier> completions;
    completions.reserve(std::size_t{1} << u);
    // Completion mask runs in canonical order: first unseen instance is the
    // most significant mask position, so ascending mask = ascending table string.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << u); ++mask) {
        std::vector<Label> table(n);
        for (std::uint32_t x = 0; x < n; ++x)
            if (fixed[x] != -1) table[x] = label_from_value(fixed[x]);
        for (std::size_t j = 0; j < u; ++j)
            table[unseen[j]] = label_from_value(static_cast<int>((mask >> (u - 1 - j)) & 1u));
        completions.emplace_back(bits, std::move(table));
    }
    return completions;
}

std::vector<ErrorProfile> nonstochastic_nfl_check(int bits, std::span<const Instance> seen,
                                                  std::span<const Label> seen_labels,
                                                  std::span<const Classifier> learner_outputs) {
    const std::vector<Classifier> truths = remaining_situations(bits, seen, seen_labels);
    std::vector<ErrorProfile> profiles;
    profiles.reserve(learner_outputs.size());
    for (const Classifier& output : learner_outputs) {
        if (output.bits() != bits)
            throw std::invalid_argument("learner output dimension mismatch");
        ErrorProfile profile;
        for (const Classifier& truth : truths)
            profile.histogram[generalization_error_nonstochastic(output, truth, seen)] += 1;
        profiles.push_back(std::move(profile));
    }
    return profiles;
}

}  // namespace nfl
