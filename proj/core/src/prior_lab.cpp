#include "nfl/prior_lab.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace nfl {

namespace {

constexpr int kExactConservationMaxBits = 3;
constexpr int kExactConservationMaxN = 4;

// Odometer over sequences of length n with digits in [0, base).
bool next_sequence(std::vector<std::uint32_t>& digits, std::uint32_t base) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < base) return true;
        digits[i] = 0;
    }
    return false;
}

double factorial(int k) {
    double out = 1.0;
    for (int i = 2; i <= k; ++i) out *= i;
    return out;
}

Sample make_sample(const std::vector<std::uint32_t>& xs, std::uint32_t labels, int bits) {
    Sample s;
    s.pairs.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const int y = static_cast<int>((labels >> i) & 1u);
        s.add(Instance{xs[i], bits}, label_from_value(y));
    }
    return s;
}

}  // namespace

StochasticSituation sample_situation_from_prior(const UniformConditionalPrior& prior,
                                                std::vector<double> marginal, std::uint64_t seed) {
    const std::uint32_t n = domain_size(prior.bits);
    if (marginal.size() != n) throw std::invalid_argument("marginal size mismatch");
    Rng rng(seed);
    std::vector<double> conditional(n);
    for (std::uint32_t x = 0; x < n; ++x) conditional[x] = rng.uniform01();
    return StochasticSituation(std::move(marginal), std::move(conditional));
}

double expected_ots_risk_under_uniform_prior_exact(const Learner& a,
                                                   const std::vector<double>& marginal, int n) {
    const std::size_t size = marginal.size();
    if (size == 0 || (size & (size - 1)) != 0)
        throw std::invalid_argument("marginal must cover a power-of-two domain");
    const int bits = std::countr_zero(size);
    if (bits > kExactConservationMaxBits || n > kExactConservationMaxN)
        throw std::invalid_argument("exact conservation limited to bits <= 3, n <= 4");
    if (n < 1) throw std::invalid_argument("sample size must be positive");
    if (static_cast<std::size_t>(n) >= size)
        throw std::invalid_argument("conservation law needs n < |X|");

    const auto k = static_cast<std::uint32_t>(size);
    double expectation = 0.0;
    double total_weight = 0.0;
    std::vector<std::uint32_t> xs(static_cast<std::size_t>(n), 0);
    do {
        double x_weight = 1.0;
        for (std::uint32_t x : xs) x_weight *= marginal[x];
        if (x_weight == 0.0) continue;

        double unseen_mass = 0.0;
        std::vector<bool> seen(size, false);
        for (std::uint32_t x : xs) seen[x] = true;
        for (std::uint32_t x = 0; x < k; ++x)
            if (!seen[x]) unseen_mass += marginal[x];
        if (unseen_mass <= 0.0)
            throw std::domain_error("OTS risk undefined: sample can exhaust the marginal support");

        for (std::uint32_t labels = 0; labels < (1u << n); ++labels) {
            // Marginal likelihood of the label sequence under the uniform
            // prior: product over instances of c1! c0! / (c1+c0+1)!.
            double y_weight = 1.0;
            std::vector<std::array<int, 2>> per_instance(size, {0, 0});
            for (std::size_t i = 0; i < xs.size(); ++i)
                ++per_instance[xs[i]][(labels >> i) & 1u];
            for (std::uint32_t x = 0; x < k; ++x) {
                const int c0 = per_instance[x][0];
                const int c1 = per_instance[x][1];
                if (c0 + c1 == 0) continue;
                y_weight *= factorial(c1) * factorial(c0) / factorial(c1 + c0 + 1);
            }

            const Sample s = make_sample(xs, labels, bits);
            const Classifier f = a(s);
            if (f.bits() != bits) throw std::invalid_argument("learner output dimension mismatch");

            // Posterior-expected OTS error: unseen conditionals keep their
            // prior, so each unseen instance contributes mean error 1/2.
            double error_mass = 0.0;
            for (std::uint32_t x = 0; x < k; ++x) {
                if (seen[x]) continue;
                const int c0 = per_instance[x][0];
                const int c1 = per_instance[x][1];
                const double posterior_mean = (c1 + 1.0) / (c0 + c1 + 2.0);
                error_mass += marginal[x] * (f.at_index(x) == Label::kT ? 1.0 - posterior_mean
                                                                        : posterior_mean);
            }
            total_weight += x_weight * y_weight;
            expectation += x_weight * y_weight * (error_mass / unseen_mass);
        }
    } while (next_sequence(xs, k));
    return expectation / total_weight;
}

McEstimate expected_ots_risk_under_uniform_prior_mc(const Learner& a,
                                                    const std::vector<double>& marginal, int n,
                                                    std::uint64_t trials, std::uint64_t seed) {
    const std::size_t size = marginal.size();
    if (size == 0 || (size & (size - 1)) != 0)
        throw std::invalid_argument("marginal must cover a power-of-two domain");
    const int bits = std::countr_zero(size);
    if (n < 1 || static_cast<std::size_t>(n) >= size)
        throw std::invalid_argument("conservation law needs 1 <= n < |X|");
    McAccumulator acc;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = derive_seed(seed, t);
        const StochasticSituation d =
            sample_situation_from_prior(UniformConditionalPrior{bits}, marginal, trial_seed);
        Rng rng(derive_seed(trial_seed, 1));
        const Sample s = SituationSampler(d).draw_sample(static_cast<std::size_t>(n), rng);
        const auto risk = ots_risk(a(s), d, s, ExclusionMode::kInstance);
        if (!risk)
            throw std::domain_error("OTS risk undefined on a sampled training set");
        acc.add(*risk);
    }
    return acc.estimate();
}

double iid_ots_gap_bound(int bits, std::uint64_t n) {
    return static_cast<double>(n) * std::ldexp(1.0, -bits);
}

namespace {

// The n * 2^-m ceiling is a uniform-marginal statement.
void require_uniform_marginal(const StochasticSituation& d) {
    const double weight = 1.0 / d.size();
    for (double w : d.marginals())
        if (std::abs(w - weight) > 1e-9)
            throw std::invalid_argument("gap bound requires a uniform marginal");
}

}  // namespace

GapResult iid_ots_gap_exact(const Learner& a, const StochasticSituation& d, int n,
                            ExclusionMode mode) {
    const int bits = d.bits();
    if (bits > kExactConservationMaxBits || n > kExactConservationMaxN)
        throw std::invalid_argument("exact gap limited to bits <= 3, n <= 4");
    if (n < 0 || static_cast<std::uint32_t>(n) >= d.size())
        throw std::invalid_argument("gap needs 0 <= n < 2^bits");
    require_uniform_marginal(d);

    const std::uint32_t k = d.size();
    double expectation = 0.0;
    double total_weight = 0.0;
    std::vector<std::uint32_t> xs(static_cast<std::size_t>(n), 0);
    do {
        double x_weight = 1.0;
        for (std::uint32_t x : xs) x_weight *= d.marginal(x);
        if (x_weight == 0.0) continue;
        const std::uint32_t label_count = n == 0 ? 1u : (1u << n);
        for (std::uint32_t labels = 0; labels < label_count; ++labels) {
            double y_weight = 1.0;
            for (std::size_t i = 0; i < xs.size(); ++i) {
                const double p1 = d.p_label1(xs[i]);
                y_weight *= ((labels >> i) & 1u) ? p1 : 1.0 - p1;
            }
            if (y_weight == 0.0) continue;
            const Sample s = make_sample(xs, labels, d.bits());
            const Classifier f = a(s);
            const auto ots = ots_risk(f, d, s, mode);
            if (!ots) throw std::domain_error("OTS risk undefined on an enumerated training set");
            total_weight += x_weight * y_weight;
            expectation += x_weight * y_weight * (*ots - iid_risk(f, d));
        }
    } while (n > 0 && next_sequence(xs, k));
    return GapResult{std::abs(expectation / total_weight),
                     iid_ots_gap_bound(d.bits(), static_cast<std::uint64_t>(n)), 0.0, 0, true};
}

GapResult iid_ots_gap_mc(const Learner& a, const StochasticSituation& d, int n,
                         std::uint64_t trials, std::uint64_t seed, ExclusionMode mode) {
    if (n < 1 || static_cast<std::uint32_t>(n) >= d.size())
        throw std::invalid_argument("gap needs 1 <= n < 2^bits");
    require_uniform_marginal(d);
    const SituationSampler sampler(d);
    McAccumulator acc;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, t));
        const Sample s = sampler.draw_sample(static_cast<std::size_t>(n), rng);
        const Classifier f = a(s);
        const auto ots = ots_risk(f, d, s, mode);
        if (!ots) throw std::domain_error("OTS risk undefined on a sampled training set");
        acc.add(*ots - iid_risk(f, d));
    }
    const McEstimate e = acc.estimate();
    return GapResult{std::abs(e.mean), iid_ots_gap_bound(d.bits(), static_cast<std::uint64_t>(n)),
                     e.stderr_of_mean, e.trials, false};
}

ParadoxParams paradox_params(int bits, std::size_t class_size, std::uint64_t n) {
    if (class_size < 1) throw std::invalid_argument("class size must be positive");
    if (n < 1) throw std::invalid_argument("sample size must be positive");
    ParadoxParams params;
    params.bits = bits;
    params.class_size = class_size;
    params.n = n;
    params.epsilon = std::sqrt(std::log(static_cast<double>(class_size)) / (2.0 * static_cast<double>(n)));
    params.delta = iid_ots_gap_bound(bits, n);
    return params;
}

ParadoxReport verify_paradox_resolution(int bits, std::size_t class_size, std::uint64_t n,
                                        std::uint64_t trials, std::uint64_t seed) {
    if (bits > 12)
        throw std::invalid_argument("paradox verification limited to bits <= 12 for exact risks");
    if (trials == 0) throw std::invalid_argument("trials must be positive");
    ParadoxReport report;
    report.params = paradox_params(bits, class_size, n);
    const std::vector<double> uniform(domain_size(bits), 1.0 / domain_size(bits));
    McAccumulator acc_min;
    McAccumulator acc_max;
    report.rows.reserve(trials);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = derive_seed(seed, t);
        const HypothesisClass f_class =
            HypothesisClass::random_class(bits, class_size, derive_seed(trial_seed, 0));
        const StochasticSituation d = sample_situation_from_prior(UniformConditionalPrior{bits},
                                                                  uniform, derive_seed(trial_seed, 1));
        double best = 1.0;
        double worst = 0.0;
        for (const Classifier& f : f_class.members()) {
            const double risk = iid_risk(f, d);
            best = std::min(best, risk);
            worst = std::max(worst, risk);
        }
        acc_min.add(best);
        acc_max.add(worst);
        report.rows.push_back(ParadoxTrialRow{t, trial_seed, best, worst});
    }
    report.min_risk = acc_min.estimate();
    report.max_risk = acc_max.estimate();
    const double radius = report.params.epsilon * (1.0 + report.params.delta);
    report.tolerance_min = radius + 3.0 * report.min_risk.stderr_of_mean;
    report.tolerance_max = radius + 3.0 * report.max_risk.stderr_of_mean;
    report.satisfied = std::abs(report.min_risk.mean - 0.5) <= report.tolerance_min &&
                       std::abs(report.max_risk.mean - 0.5) <= report.tolerance_max;
    return report;
}

}  // namespace nfl
