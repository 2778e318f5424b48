#include "nfl/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace nfl {

namespace {

bool next_sequence(std::vector<std::uint32_t>& digits, std::uint32_t base) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < base) return true;
        digits[i] = 0;
    }
    return false;
}

Sample make_sample(const std::vector<std::uint32_t>& xs, std::uint32_t labels, int bits) {
    Sample s;
    s.pairs.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        s.add(Instance{xs[i], bits}, label_from_value(static_cast<int>((labels >> i) & 1u)));
    return s;
}

// Enumerate every sample of length n under d and fold f(sample, weight).
template <typename Fold>
void for_each_sample(const StochasticSituation& d, int n, Fold&& fold) {
    if (n == 0) {
        fold(Sample{}, 1.0);
        return;
    }
    std::vector<std::uint32_t> xs(static_cast<std::size_t>(n), 0);
    do {
        double x_weight = 1.0;
        for (std::uint32_t x : xs) x_weight *= d.marginal(x);
        if (x_weight == 0.0) continue;
        for (std::uint32_t labels = 0; labels < (1u << n); ++labels) {
            double y_weight = 1.0;
            for (std::size_t i = 0; i < xs.size(); ++i) {
                const double p1 = d.p_label1(xs[i]);
                y_weight *= ((labels >> i) & 1u) ? p1 : 1.0 - p1;
            }
            if (y_weight == 0.0) continue;
            fold(make_sample(xs, labels, d.bits()), x_weight * y_weight);
        }
    } while (next_sequence(xs, d.size()));
}

double min_class_risk(const StochasticSituation& d, const HypothesisClass& hypotheses) {
    double best = 1.0;
    for (const Classifier& f : hypotheses.members()) best = std::min(best, iid_risk(f, d));
    return best;
}

double max_class_risk(const StochasticSituation& d, const HypothesisClass& hypotheses) {
    double worst = 0.0;
    for (const Classifier& f : hypotheses.members()) worst = std::max(worst, iid_risk(f, d));
    return worst;
}

void require_exact_feasible(int bits, int n) {
    if (!exact_oracle_feasible(bits, n))
        throw std::invalid_argument(
            "exact oracle refused: enumeration terms exceed the guard (set NFL_LAB_MAX_ENUM to raise)");
}

}  // namespace

double erm_bound(std::size_t class_size, std::uint64_t n) {
    if (class_size < 1 || n < 1) throw std::invalid_argument("erm_bound needs |F| >= 1, n >= 1");
    return std::sqrt(std::log(static_cast<double>(class_size)) / (2.0 * static_cast<double>(n)));
}

double fv_bound(std::size_t algo_count, std::uint64_t n) {
    if (algo_count < 1 || n < 1) throw std::invalid_argument("fv_bound needs m >= 1, n >= 1");
    return std::sqrt(std::log(static_cast<double>(algo_count)) / static_cast<double>(n));
}

double eta_objective(double eta, std::size_t class_size, std::uint64_t n) {
    if (eta <= 0.0) throw std::invalid_argument("eta must be positive");
    return eta / 8.0 +
           std::log(static_cast<double>(class_size)) / (eta * static_cast<double>(n));
}

double optimal_eta(std::size_t class_size, std::uint64_t n) {
    if (class_size < 2)
        throw std::invalid_argument("optimal_eta: minimization degenerates for |F| < 2");
    if (n < 1) throw std::invalid_argument("optimal_eta needs n >= 1");
    return std::sqrt(8.0 * std::log(static_cast<double>(class_size)) / static_cast<double>(n));
}

std::uint64_t max_enum_terms() {
    static const std::uint64_t guard = [] {
        if (const char* env = std::getenv("NFL_LAB_MAX_ENUM")) {
            const unsigned long long parsed = std::strtoull(env, nullptr, 10);
            if (parsed > 0) return static_cast<std::uint64_t>(parsed);
        }
        return std::uint64_t{10'000'000};
    }();
    return guard;
}

long double enumeration_terms(int bits, int n) {
    const long double per_draw = 2.0L * static_cast<long double>(domain_size(bits));
    long double terms = 1.0L;
    for (int i = 0; i < n; ++i) terms *= per_draw;
    return terms;
}

bool exact_oracle_feasible(int bits, int n) {
    return enumeration_terms(bits, n) <= static_cast<long double>(max_enum_terms());
}

ExpectedRisk exact_expected_risk(const Learner& a, const StochasticSituation& d, int n,
                                 ExclusionMode mode) {
    if (n < 0) throw std::invalid_argument("sample size must be nonnegative");
    require_exact_feasible(d.bits(), n);
    double expected_iid = 0.0;
    double expected_ots = 0.0;
    double total_weight = 0.0;
    bool ots_defined = true;
    for_each_sample(d, n, [&](const Sample& s, double weight) {
        const Classifier f = a(s);
        total_weight += weight;
        expected_iid += weight * iid_risk(f, d);
        if (ots_defined) {
            const auto ots = ots_risk(f, d, s, mode);
            if (ots)
                expected_ots += weight * *ots;
            else
                ots_defined = false;
        }
    });
    // Normalize away the quadrature dust in the weight mass so that, e.g., a
    // constant integrand comes back bit-exact.
    ExpectedRisk out;
    out.iid = expected_iid / total_weight;
    if (ots_defined) out.ots = expected_ots / total_weight;
    return out;
}

ExpectedRiskEstimate mc_expected_risk(const Learner& a, const StochasticSituation& d, int n,
                                      std::uint64_t trials, std::uint64_t seed,
                                      ExclusionMode mode) {
    if (n < 1) throw std::invalid_argument("sample size must be positive");
    if (trials == 0) throw std::invalid_argument("trials must be positive");
    const SituationSampler sampler(d);
    ExpectedRiskEstimate out;
    McAccumulator iid_acc;
    McAccumulator ots_acc;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, t));
        const Sample s = sampler.draw_sample(static_cast<std::size_t>(n), rng);
        const Classifier f = a(s);
        iid_acc.add(iid_risk(f, d));
        if (const auto ots = ots_risk(f, d, s, mode))
            ots_acc.add(*ots);
        else
            ++out.ots_undefined;
    }
    out.iid = iid_acc.estimate();
    out.ots = ots_acc.estimate();
    return out;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::kSatisfied: return "SATISFIED";
        case Verdict::kViolated: return "VIOLATED";
        case Verdict::kInconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

Verdict judge(double lhs_estimate, double lhs_stderr, double rhs_bound) {
    if (lhs_estimate <= rhs_bound + 3.0 * lhs_stderr) return Verdict::kSatisfied;
    if (lhs_estimate - 3.0 * lhs_stderr > rhs_bound) return Verdict::kViolated;
    return Verdict::kInconclusive;
}

BoundCertificate make_certificate(std::string name, double lhs, double lhs_stderr, double rhs,
                                  std::uint64_t trials) {
    BoundCertificate cert;
    cert.name = std::move(name);
    cert.lhs_estimate = lhs;
    cert.lhs_stderr = lhs_stderr;
    cert.rhs_bound = rhs;
    cert.trials = trials;
    cert.verdict = judge(lhs, lhs_stderr, rhs);
    return cert;
}

namespace {

// Exact-mode lhs as the normalized weighted sum of per-sample excesses, so a
// mathematically-zero gap (singleton class, single algorithm) is 0.0 exactly.
template <typename PerSampleExcess>
double exact_excess(const StochasticSituation& d, int n, PerSampleExcess&& excess) {
    double weighted = 0.0;
    double total_weight = 0.0;
    for_each_sample(d, n, [&](const Sample& s, double weight) {
        total_weight += weight;
        weighted += weight * excess(s);
    });
    return weighted / total_weight;
}

}  // namespace

BoundCertificate certify_erm_bound(const StochasticSituation& d, const HypothesisClass& hypotheses,
                                   int n, EvalMode mode, std::uint64_t trials, std::uint64_t seed) {
    const double rhs = erm_bound(hypotheses.size(), static_cast<std::uint64_t>(n));
    const double best = min_class_risk(d, hypotheses);
    const std::string name = "erm|F|=" + std::to_string(hypotheses.size()) + ",n=" + std::to_string(n);
    if (mode == EvalMode::kExact) {
        require_exact_feasible(d.bits(), n);
        const double lhs = exact_excess(
            d, n, [&](const Sample& s) { return iid_risk(erm(hypotheses, s), d) - best; });
        return make_certificate(name, lhs, 0.0, rhs, 0);
    }
    const SituationSampler sampler(d);
    McAccumulator acc;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, t));
        const Sample s = sampler.draw_sample(static_cast<std::size_t>(n), rng);
        acc.add(iid_risk(erm(hypotheses, s), d) - best);
    }
    const McEstimate e = acc.estimate();
    return make_certificate(name, e.mean, e.stderr_of_mean, rhs, e.trials);
}

BoundCertificate certify_anti_erm_bound(const StochasticSituation& d,
                                        const HypothesisClass& hypotheses, int n, EvalMode mode,
                                        std::uint64_t trials, std::uint64_t seed) {
    const double rhs = erm_bound(hypotheses.size(), static_cast<std::uint64_t>(n));
    const double worst = max_class_risk(d, hypotheses);
    const std::string name =
        "anti-erm|F|=" + std::to_string(hypotheses.size()) + ",n=" + std::to_string(n);
    if (mode == EvalMode::kExact) {
        require_exact_feasible(d.bits(), n);
        const double lhs = exact_excess(
            d, n, [&](const Sample& s) { return worst - iid_risk(anti_erm(hypotheses, s), d); });
        return make_certificate(name, lhs, 0.0, rhs, 0);
    }
    const SituationSampler sampler(d);
    McAccumulator acc;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, t));
        const Sample s = sampler.draw_sample(static_cast<std::size_t>(n), rng);
        acc.add(worst - iid_risk(anti_erm(hypotheses, s), d));
    }
    const McEstimate e = acc.estimate();
    return make_certificate(name, e.mean, e.stderr_of_mean, rhs, e.trials);
}

BoundCertificate certify_fv_bound(const std::vector<Learner>& algorithms,
                                  const StochasticSituation& d, int n, EvalMode mode,
                                  std::uint64_t trials, std::uint64_t seed) {
    if (algorithms.empty()) throw std::invalid_argument("certify_fv_bound needs algorithms");
    if (n <= 1) throw std::invalid_argument("forward validation needs n > 1");
    const double rhs = fv_bound(algorithms.size(), static_cast<std::uint64_t>(n));
    const std::string name =
        "fv m=" + std::to_string(algorithms.size()) + ",n=" + std::to_string(n);
    const int first_half = n / 2;

    if (mode == EvalMode::kExact) {
        // One enumeration serves both sides: each algorithm's expected risk
        // after training on the first half is a function of the same samples.
        require_exact_feasible(d.bits(), n);
        double total_weight = 0.0;
        double weighted_fv = 0.0;
        std::vector<double> weighted_k(algorithms.size(), 0.0);
        for_each_sample(d, n, [&](const Sample& s, double weight) {
            total_weight += weight;
            const ValidationResult fv = forward_validation(algorithms, s);
            weighted_fv += weight * iid_risk(fv.classifier, d);
            const Sample train = s.prefix(static_cast<std::size_t>(first_half));
            for (std::size_t k = 0; k < algorithms.size(); ++k)
                weighted_k[k] += weight * iid_risk(algorithms[k](train), d);
        });
        const double best = *std::min_element(weighted_k.begin(), weighted_k.end());
        return make_certificate(name, (weighted_fv - best) / total_weight, 0.0, rhs, 0);
    }

    const SituationSampler sampler(d);
    std::vector<double> fv_risks(trials);
    std::vector<std::vector<double>> half_risks(algorithms.size(), std::vector<double>(trials));
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, t));
        const Sample s = sampler.draw_sample(static_cast<std::size_t>(n), rng);
        const ValidationResult fv = forward_validation(algorithms, s);
        fv_risks[t] = iid_risk(fv.classifier, d);
        const Sample train = s.prefix(static_cast<std::size_t>(first_half));
        for (std::size_t k = 0; k < algorithms.size(); ++k)
            half_risks[k][t] = iid_risk(algorithms[k](train), d);
    }
    std::size_t best_k = 0;
    double best_mean = 2.0;
    for (std::size_t k = 0; k < algorithms.size(); ++k) {
        McAccumulator acc;
        for (double r : half_risks[k]) acc.add(r);
        if (acc.mean() < best_mean) {
            best_mean = acc.mean();
            best_k = k;
        }
    }
    McAccumulator paired;
    for (std::uint64_t t = 0; t < trials; ++t) paired.add(fv_risks[t] - half_risks[best_k][t]);
    const McEstimate e = paired.estimate();
    return make_certificate(name, e.mean, e.stderr_of_mean, rhs, e.trials);
}

}  // namespace nfl
