#include "nfl/risk.hpp"

#include <stdexcept>
#include <vector>

namespace nfl {

namespace {

void check_same_domain(const Classifier& f, const StochasticSituation& d) {
    if (f.bits() != d.bits()) throw std::invalid_argument("classifier/situation dimension mismatch");
}

double pair_mass(const StochasticSituation& d, std::uint32_t x, Label y) {
    const double p1 = d.p_label1(x);
    return d.marginal(x) * (y == Label::kT ? p1 : 1.0 - p1);
}

}  // namespace

double iid_risk(const Classifier& f, const StochasticSituation& d) {
    check_same_domain(f, d);
    double risk = 0.0;
    for (std::uint32_t x = 0; x < d.size(); ++x) {
        const double p1 = d.p_label1(x);
        risk += d.marginal(x) * (f.at_index(x) == Label::kT ? 1.0 - p1 : p1);
    }
    return risk;
}

std::optional<double> ots_risk(const Classifier& f, const StochasticSituation& d, const Sample& s,
                               ExclusionMode mode) {
    check_same_domain(f, d);
    // excluded[x] bit 0: pair (x, N) excluded; bit 1: pair (x, T) excluded.
    std::vector<std::uint8_t> excluded(d.size(), 0);
    for (const auto& [x, y] : s.pairs) {
        if (x.bits != d.bits()) throw std::invalid_argument("sample/situation dimension mismatch");
        if (mode == ExclusionMode::kInstance)
            excluded[x.index] = 3;
        else
            excluded[x.index] |= static_cast<std::uint8_t>(1u << label_value(y));
    }
    double error_mass = 0.0;
    double kept_mass = 0.0;
    for (std::uint32_t x = 0; x < d.size(); ++x) {
        for (int yv = 0; yv <= 1; ++yv) {
            if (excluded[x] & (1u << yv)) continue;
            const Label y = label_from_value(yv);
            const double mass = pair_mass(d, x, y);
            kept_mass += mass;
            if (f.at_index(x) != y) error_mass += mass;
        }
    }
    if (kept_mass <= 0.0) return std::nullopt;
    return error_mass / kept_mass;
}

std::size_t error_count(const Classifier& f, const Sample& s) {
    std::size_t errors = 0;
    for (const auto& [x, y] : s.pairs)
        if (f.at(x) != y) ++errors;
    return errors;
}

Fraction empirical_risk(const Classifier& f, const Sample& s) {
    if (s.empty()) throw std::invalid_argument("empirical_risk: empty sample");
    return Fraction(static_cast<std::int64_t>(error_count(f, s)),
                    static_cast<std::int64_t>(s.size()));
}

Fraction generalization_error_nonstochastic(const Classifier& f, const Classifier& truth,
                                            std::span<const Instance> seen) {
    if (f.bits() != truth.bits()) throw std::invalid_argument("classifier dimension mismatch");
    std::vector<bool> is_seen(f.size(), false);
    for (const Instance& x : seen) {
        if (x.bits != f.bits()) throw std::invalid_argument("seen-instance dimension mismatch");
        is_seen[x.index] = true;
    }
    std::int64_t unseen = 0;
    std::int64_t disagreements = 0;
    for (std::uint32_t x = 0; x < f.size(); ++x) {
        if (is_seen[x]) continue;
        ++unseen;
        if (f.at_index(x) != truth.at_index(x)) ++disagreements;
    }
    if (unseen == 0)
        throw std::invalid_argument("generalization error undefined: no unseen instances");
    return Fraction(disagreements, unseen);
}

RiskReport make_risk_report(const Classifier& f, const StochasticSituation& d, const Sample& s,
                            ExclusionMode mode) {
    RiskReport report;
    report.iid_risk = iid_risk(f, d);
    report.ots_risk = ots_risk(f, d, s, mode);
    report.empirical_risk = empirical_risk(f, s);
    return report;
}

}  // namespace nfl
