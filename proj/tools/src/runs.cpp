#include "nfl_lab/runs.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "nfl/bounds.hpp"
#include "nfl/enumeration.hpp"
#include "nfl/prior_lab.hpp"
#include "nfl_lab/csv.hpp"
#include "nfl_lab/learner_spec.hpp"
#include "nfl_lab/svg_plot.hpp"

namespace nfl_lab {

namespace {

using namespace nfl;

std::filesystem::path prepare_out_dir(const std::filesystem::path& out) {
    if (out.empty()) throw std::invalid_argument("output directory must be given");
    std::filesystem::create_directories(out);
    return out;
}

std::vector<double> uniform_weights(int bits) {
    return std::vector<double>(domain_size(bits), 1.0 / domain_size(bits));
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::stringstream in(text);
    std::string field;
    while (std::getline(in, field, ','))
        if (!field.empty()) values.push_back(std::stoi(field));
    if (values.empty()) throw std::invalid_argument("empty integer list: " + text);
    return values;
}

StochasticSituation load_situation_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read situation CSV: " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return StochasticSituation::from_csv(buffer.str());
}

const char* pass_text(bool ok) { return ok ? "pass" : "FAIL"; }

}  // namespace

int run_predict_tree(const PredictTreeConfig& config) {
    const auto out = prepare_out_dir(config.out);
    const auto predictors = enumerate_predictors(config.horizon);
    const ErrorProfile reference = predictor_error_profile(predictors.front());

    CsvWriter csv("predictor_id,error_level_num,error_level_den,count");
    bool universal = true;
    bool mean_half = true;
    for (std::size_t id = 0; id < predictors.size(); ++id) {
        const ErrorProfile profile = predictor_error_profile(predictors[id]);
        universal &= profile == reference;
        mean_half &= expected_prediction_error(predictors[id]) == Fraction(1, 2);
        for (const auto& [level, count] : profile.histogram)
            csv.row(fmt_u64(id), level.num, level.den, count);
    }
    csv.write(out / "report.csv");

    std::string summary;
    summary += "predict-tree horizon=" + std::to_string(config.horizon) + "\n";
    summary += "predictors: " + std::to_string(predictors.size()) + "\n";
    summary += "shared profile (error=num/den: situations):\n";
    for (const auto& [level, count] : reference.histogram)
        summary += "  " + level.str() + ": " + fmt_u64(count) + "\n";
    summary += std::string("profile universality: ") + pass_text(universal) + "\n";
    summary += std::string("expected error exactly 1/2 for every predictor: ") +
               pass_text(mean_half) + "\n";
    write_text_file(out / "summary.txt", summary);

    SvgPlot plot("Prediction error profile (shared by all " + std::to_string(predictors.size()) +
                     " predictors)",
                 "error level", "learning situations");
    std::vector<double> xs, ys;
    for (const auto& [level, count] : reference.histogram) {
        xs.push_back(level.value());
        ys.push_back(static_cast<double>(count));
    }
    plot.add_points(xs, ys, {}, "#1f77b4", "situation count");
    plot.write(out / "plot.svg");

    return universal && mean_half ? 0 : 1;
}

int run_classify_enum(const ClassifyEnumConfig& config) {
    const auto out = prepare_out_dir(config.out);
    if (config.bits > 3)
        throw std::invalid_argument("classify-enum sweeps every learner output; bits <= 3");

    std::vector<Instance> seen;
    std::vector<Label> labels;
    if (config.seen.empty()) {
        // Six-seen demo: first six instances in canonical order, all N.
        if (config.bits != 3)
            throw std::invalid_argument("default seen set is defined for --m 3");
        for (std::uint32_t x = 0; x < 6; ++x) {
            seen.push_back(Instance{x, 3});
            labels.push_back(Label::kN);
        }
    } else {
        for (const std::string& entry : config.seen) {
            const auto colon = entry.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("seen entry must be BITS:LABEL, got " + entry);
            seen.push_back(Instance::from_string(entry.substr(0, colon)));
            const std::string label_text = entry.substr(colon + 1);
            if (label_text == "T" || label_text == "1")
                labels.push_back(Label::kT);
            else if (label_text == "N" || label_text == "0")
                labels.push_back(Label::kN);
            else
                throw std::invalid_argument("seen label must be T/N/1/0, got " + entry);
        }
    }

    const auto truths = remaining_situations(config.bits, seen, labels);
    const HypothesisClass all = HypothesisClass::all_classifiers(config.bits);
    const auto profiles = nonstochastic_nfl_check(config.bits, seen, labels, all.members());
    bool universal = true;
    for (const ErrorProfile& p : profiles) universal &= p == profiles.front();

    // Expected histogram over u unseen instances: C(u, k) situations at k/u.
    const std::size_t unseen = domain_size(config.bits) - [&] {
        std::vector<bool> mask(domain_size(config.bits), false);
        for (const Instance& x : seen) mask[x.index] = true;
        return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), true));
    }();
    ErrorProfile expected;
    for (std::size_t k = 0; k <= unseen; ++k) {
        std::uint64_t binom = 1;
        for (std::size_t j = 0; j < k; ++j) binom = binom * (unseen - j) / (j + 1);
        expected.histogram[Fraction(static_cast<std::int64_t>(k),
                                    static_cast<std::int64_t>(unseen))] += binom;
    }
    const bool matches_binomial = profiles.front() == expected;

    CsvWriter csv("learner_output,error_level_num,error_level_den,count");
    for (std::size_t id = 0; id < profiles.size(); ++id)
        for (const auto& [level, count] : profiles[id].histogram)
            csv.row(all.at(id).str(), level.num, level.den, count);
    csv.write(out / "report.csv");

    // The situations table: every instance against every remaining truth.
    std::string table_header = "instance_bits,seen,sample_label";
    for (std::size_t j = 0; j < truths.size(); ++j)
        table_header += ",situation_" + std::to_string(j + 1);
    CsvWriter table(table_header);
    std::vector<int> seen_label(domain_size(config.bits), -1);
    for (std::size_t i = 0; i < seen.size(); ++i) seen_label[seen[i].index] = label_value(labels[i]);
    for (std::uint32_t x = 0; x < domain_size(config.bits); ++x) {
        std::string row = Instance{x, config.bits}.str();
        row += seen_label[x] >= 0 ? ",1," : ",0,";
        row += seen_label[x] >= 0 ? std::string(1, label_char(label_from_value(seen_label[x])))
                                  : std::string("-");
        for (const Classifier& truth : truths) row += std::string(",") + label_char(truth.at_index(x));
        table.raw_row(row);
    }
    table.write(out / "table.csv");

    std::string summary;
    summary += "classify-enum m=" + std::to_string(config.bits) +
               " seen=" + std::to_string(seen.size()) + "\n";
    summary += "remaining situations: " + std::to_string(truths.size()) + "\n";
    summary += "learner outputs checked: " + std::to_string(profiles.size()) + "\n";
    summary += "shared generalization-error histogram:\n";
    for (const auto& [level, count] : profiles.front().histogram)
        summary += "  " + level.str() + ": " + fmt_u64(count) + "\n";
    summary += std::string("histogram universality: ") + pass_text(universal) + "\n";
    summary += std::string("histogram matches the binomial profile: ") +
               pass_text(matches_binomial) + "\n";
    write_text_file(out / "summary.txt", summary);

    SvgPlot plot("Generalization errors over remaining situations", "error level",
                 "situations");
    std::vector<double> xs, ys;
    for (const auto& [level, count] : profiles.front().histogram) {
        xs.push_back(level.value());
        ys.push_back(static_cast<double>(count));
    }
    plot.add_points(xs, ys, {}, "#1f77b4", "situation count");
    plot.write(out / "plot.svg");

    return universal && matches_binomial ? 0 : 1;
}

int run_conservation(const ConservationConfig& config) {
    const auto out = prepare_out_dir(config.out);
    const auto learners = config.learners.empty()
                              ? default_learner_sweep(config.bits)
                              : parse_learner_list(config.learners, config.bits);
    const auto marginal = uniform_weights(config.bits);

    CsvWriter csv("learner,mode,n,trials,expected_ots_risk,stderr,abs_deviation,pass");
    SvgPlot plot("Expected OTS risk under the uniform conditional prior", "learner index",
                 "expected OTS risk");
    std::vector<double> xs, ys, errs;
    bool all_pass = true;
    std::string summary = "conservation m=" + std::to_string(config.bits) +
                          " n=" + std::to_string(config.n) + "\n";
    for (std::size_t i = 0; i < learners.size(); ++i) {
        const Learner& a = learners[i];
        double estimate = 0.0;
        double stderr_of_mean = 0.0;
        std::uint64_t trials = 0;
        bool pass = false;
        if (config.exact) {
            estimate = expected_ots_risk_under_uniform_prior_exact(a, marginal, config.n);
            pass = std::abs(estimate - 0.5) <= 1e-9;
        } else {
            const McEstimate e = expected_ots_risk_under_uniform_prior_mc(
                a, marginal, config.n, config.trials, derive_seed(config.seed, i));
            estimate = e.mean;
            stderr_of_mean = e.stderr_of_mean;
            trials = e.trials;
            pass = std::abs(estimate - 0.5) <= 3.0 * stderr_of_mean;
        }
        all_pass &= pass;
        csv.row(a.name(), config.exact ? "exact" : "mc", config.n, trials, estimate,
                stderr_of_mean, std::abs(estimate - 0.5), pass_text(pass));
        summary += "  " + a.name() + ": " + fmt_double(estimate) + " (" + pass_text(pass) + ")\n";
        xs.push_back(static_cast<double>(i));
        ys.push_back(estimate);
        errs.push_back(3.0 * stderr_of_mean);
    }
    csv.write(out / "report.csv");
    summary += std::string("conservation law: ") + pass_text(all_pass) + "\n";
    write_text_file(out / "summary.txt", summary);

    plot.add_hline(0.5, "#d62728", "1/2");
    plot.add_points(xs, ys, errs, "#1f77b4", "expected OTS risk");
    plot.write(out / "plot.svg");
    return all_pass ? 0 : 1;
}

int run_gap(const GapConfig& config) {
    const auto out = prepare_out_dir(config.out);

    // Domains beyond exact reach are reported analytically: the ceiling
    // n * 2^-m alone decides the question at that scale.
    if (config.bits > 12) {
        const double bound = iid_ots_gap_bound(config.bits, static_cast<std::uint64_t>(config.n));
        CsvWriter csv("m,n,bound");
        csv.row(config.bits, config.n, bound);
        csv.write(out / "report.csv");
        std::string summary = "gap (analytic only) m=" + std::to_string(config.bits) +
                              " n=" + std::to_string(config.n) + "\n";
        summary += "bound n*2^-m = " + fmt_double(bound) + "\n";
        write_text_file(out / "summary.txt", summary);
        SvgPlot plot("IID-OTS gap ceiling", "n", "bound");
        plot.add_points({static_cast<double>(config.n)}, {bound}, {}, "#1f77b4", "n*2^-m");
        plot.write(out / "plot.svg");
        return 0;
    }

    const StochasticSituation d =
        config.situation_csv
            ? load_situation_csv(*config.situation_csv)
            : sample_situation_from_prior(UniformConditionalPrior{config.bits},
                                          uniform_weights(config.bits),
                                          derive_seed(config.seed, 0xd));
    const auto learners = config.learners.empty()
                              ? std::vector<Learner>{Learner::constant(config.bits, Label::kN),
                                                     Learner::constant(config.bits, Label::kT),
                                                     Learner::knn(1),
                                                     Learner::erm(HypothesisClass::random_class(
                                                         config.bits, 4, 1212)),
                                                     Learner::anti_erm(HypothesisClass::random_class(
                                                         config.bits, 4, 1212))}
                              : parse_learner_list(config.learners, config.bits);

    CsvWriter csv("learner,exclusion,eval,n,gap,stderr,bound,pass");
    bool all_pass = true;
    std::string summary = "gap m=" + std::to_string(config.bits) + " n=" + std::to_string(config.n) +
                          (config.exact ? " exact\n" : " mc\n");
    std::vector<double> xs, ys, errs;
    double bound_level = 0.0;
    std::size_t index = 0;
    for (const Learner& a : learners) {
        for (const auto mode : {ExclusionMode::kInstance, ExclusionMode::kPair}) {
            const char* mode_name = mode == ExclusionMode::kInstance ? "instance" : "pair";
            const GapResult result =
                config.exact
                    ? iid_ots_gap_exact(a, d, config.n, mode)
                    : iid_ots_gap_mc(a, d, config.n, config.trials,
                                     derive_seed(config.seed, 0x100 + index), mode);
            const bool pass = result.gap <= result.bound + 3.0 * result.stderr_of_mean + 1e-12;
            all_pass &= pass;
            bound_level = result.bound;
            csv.row(a.name(), mode_name, result.exact ? "exact" : "mc", config.n, result.gap,
                    result.stderr_of_mean, result.bound, pass_text(pass));
            summary += "  " + a.name() + " [" + mode_name + "]: gap " + fmt_double(result.gap) +
                       " <= " + fmt_double(result.bound) + " (" + pass_text(pass) + ")\n";
            xs.push_back(static_cast<double>(index));
            ys.push_back(result.gap);
            errs.push_back(3.0 * result.stderr_of_mean);
            ++index;
        }
    }
    csv.write(out / "report.csv");
    summary += std::string("gap bound: ") + pass_text(all_pass) + "\n";
    write_text_file(out / "summary.txt", summary);

    SvgPlot plot("IID-OTS gap against the n*2^-m ceiling", "learner x exclusion mode", "|gap|");
    plot.add_hline(bound_level, "#d62728", "bound");
    plot.add_points(xs, ys, errs, "#1f77b4", "gap");
    plot.write(out / "plot.svg");
    return all_pass ? 0 : 1;
}

int run_bounds(const BoundsConfig& config) {
    const auto out = prepare_out_dir(config.out);
    const bool do_erm = config.kind == "erm" || config.kind == "all";
    const bool do_anti = config.kind == "anti-erm" || config.kind == "all";
    const bool do_fv = config.kind == "fv" || config.kind == "all";
    if (!do_erm && !do_anti && !do_fv)
        throw std::invalid_argument("bounds kind must be erm, anti-erm, fv or all");

    const StochasticSituation d =
        sample_situation_from_prior(UniformConditionalPrior{config.bits},
                                    uniform_weights(config.bits), derive_seed(config.seed, 0xb));
    const HypothesisClass hypotheses =
        HypothesisClass::random_class(config.bits, config.class_size, derive_seed(config.seed, 0xf));
    const std::vector<int> ks = parse_int_list(config.knn_ks);
    const int max_k = *std::max_element(ks.begin(), ks.end());
    std::vector<Learner> algorithms;
    for (int k : ks) algorithms.push_back(Learner::knn(k));

    const EvalMode mode = config.exact ? EvalMode::kExact : EvalMode::kMonteCarlo;
    CsvWriter csv("certificate,kind,model_size,n,eval,trials,lhs_estimate,lhs_stderr,rhs_bound,verdict");
    std::string summary = "bounds kind=" + config.kind + " m=" + std::to_string(config.bits) + "\n";
    bool any_violated = false;

    struct SeriesData {
        std::vector<double> xs, lhs, err, rhs;
    };
    SeriesData erm_series, anti_series, fv_series;

    std::size_t case_index = 0;
    for (int n : config.ns) {
        if (do_erm) {
            const BoundCertificate cert = certify_erm_bound(
                d, hypotheses, n, mode, config.trials, derive_seed(config.seed, 0x200 + case_index));
            any_violated |= cert.verdict == Verdict::kViolated;
            csv.row(cert.name, "erm", hypotheses.size(), n, config.exact ? "exact" : "mc",
                    cert.trials, cert.lhs_estimate, cert.lhs_stderr, cert.rhs_bound,
                    verdict_name(cert.verdict));
            summary += "  " + cert.name + ": " + verdict_name(cert.verdict) + "\n";
            erm_series.xs.push_back(n);
            erm_series.lhs.push_back(cert.lhs_estimate);
            erm_series.err.push_back(3.0 * cert.lhs_stderr);
            erm_series.rhs.push_back(cert.rhs_bound);
        }
        if (do_anti) {
            const BoundCertificate cert = certify_anti_erm_bound(
                d, hypotheses, n, mode, config.trials, derive_seed(config.seed, 0x300 + case_index));
            any_violated |= cert.verdict == Verdict::kViolated;
            csv.row(cert.name, "anti-erm", hypotheses.size(), n, config.exact ? "exact" : "mc",
                    cert.trials, cert.lhs_estimate, cert.lhs_stderr, cert.rhs_bound,
                    verdict_name(cert.verdict));
            summary += "  " + cert.name + ": " + verdict_name(cert.verdict) + "\n";
            anti_series.xs.push_back(n);
            anti_series.lhs.push_back(cert.lhs_estimate);
            anti_series.err.push_back(3.0 * cert.lhs_stderr);
            anti_series.rhs.push_back(cert.rhs_bound);
        }
        if (do_fv && n > 1 && n / 2 < max_k) {
            summary += "  fv n=" + std::to_string(n) + ": skipped (train half smaller than max k)\n";
        } else if (do_fv && n > 1) {
            const BoundCertificate cert = certify_fv_bound(
                algorithms, d, n, mode, config.trials, derive_seed(config.seed, 0x400 + case_index));
            any_violated |= cert.verdict == Verdict::kViolated;
            csv.row(cert.name, "fv", algorithms.size(), n, config.exact ? "exact" : "mc",
                    cert.trials, cert.lhs_estimate, cert.lhs_stderr, cert.rhs_bound,
                    verdict_name(cert.verdict));
            summary += "  " + cert.name + ": " + verdict_name(cert.verdict) + "\n";
            fv_series.xs.push_back(n);
            fv_series.lhs.push_back(cert.lhs_estimate);
            fv_series.err.push_back(3.0 * cert.lhs_stderr);
            fv_series.rhs.push_back(cert.rhs_bound);
        }
        ++case_index;
    }
    csv.write(out / "report.csv");
    summary += std::string("any certificate violated: ") + (any_violated ? "yes" : "no") + "\n";
    write_text_file(out / "summary.txt", summary);

    SvgPlot plot("Expected-risk gaps against their analytic bounds", "n", "gap / bound");
    if (!erm_series.xs.empty()) {
        plot.add_line(erm_series.xs, erm_series.rhs, "#d62728", "erm bound");
        plot.add_points(erm_series.xs, erm_series.lhs, erm_series.err, "#1f77b4", "erm gap");
    }
    if (!anti_series.xs.empty())
        plot.add_points(anti_series.xs, anti_series.lhs, anti_series.err, "#2ca02c",
                        "anti-erm gap");
    if (!fv_series.xs.empty()) {
        plot.add_line(fv_series.xs, fv_series.rhs, "#ff7f0e", "fv bound");
        plot.add_points(fv_series.xs, fv_series.lhs, fv_series.err, "#9467bd", "fv gap");
    }
    plot.write(out / "plot.svg");
    return any_violated ? 1 : 0;
}

int run_paradox(const ParadoxConfig& config) {
    const auto out = prepare_out_dir(config.out);

    // Beyond exact-risk reach only the scales themselves are reported.
    if (config.bits > 12) {
        const ParadoxParams params = paradox_params(config.bits, config.class_size, config.n);
        CsvWriter csv("m,class_size,n,epsilon,delta");
        csv.row(config.bits, config.class_size, config.n, params.epsilon, params.delta);
        csv.write(out / "report.csv");
        std::string summary = "paradox (analytic only) m=" + std::to_string(config.bits) +
                              " |F|=" + fmt_u64(config.class_size) + " n=" + fmt_u64(config.n) +
                              "\n";
        summary += "epsilon = " + fmt_double(params.epsilon) + "\n";
        summary += "delta   = " + fmt_double(params.delta) + "\n";
        write_text_file(out / "summary.txt", summary);
        SvgPlot plot("Paradoxical-situation scales", "quantity", "value");
        plot.add_points({0.0, 1.0}, {params.epsilon, params.delta}, {}, "#1f77b4",
                        "epsilon, delta");
        plot.write(out / "plot.svg");
        return 0;
    }

    const ParadoxReport report = verify_paradox_resolution(config.bits, config.class_size,
                                                           config.n, config.trials, config.seed);
    const double radius = report.params.epsilon * (1.0 + report.params.delta);
    CsvWriter csv("trial,seed,min_risk,max_risk,epsilon,delta,bound_satisfied");
    for (const auto& row : report.rows) {
        const bool row_ok =
            std::abs(row.min_risk - 0.5) <= radius && std::abs(row.max_risk - 0.5) <= radius;
        csv.row(row.trial, row.seed, row.min_risk, row.max_risk, report.params.epsilon,
                report.params.delta, row_ok ? "1" : "0");
    }
    csv.write(out / "report.csv");

    std::string summary = "paradox m=" + std::to_string(config.bits) + " |F|=" +
                          fmt_u64(config.class_size) + " n=" + fmt_u64(config.n) + " trials=" +
                          fmt_u64(config.trials) + "\n";
    summary += "epsilon = " + fmt_double(report.params.epsilon) + "\n";
    summary += "delta   = " + fmt_double(report.params.delta) + "\n";
    summary += "mean best-in-class risk  = " + fmt_double(report.min_risk.mean) + " +- " +
               fmt_double(report.min_risk.stderr_of_mean) + "\n";
    summary += "mean worst-in-class risk = " + fmt_double(report.max_risk.mean) + " +- " +
               fmt_double(report.max_risk.stderr_of_mean) + "\n";
    summary += "window around 1/2: eps*(1+delta) + 3*stderr = " +
               fmt_double(report.tolerance_min) + " / " + fmt_double(report.tolerance_max) + "\n";
    summary += std::string("paradox resolution: ") + pass_text(report.satisfied) + "\n";
    write_text_file(out / "summary.txt", summary);

    SvgPlot plot("Best and worst in-class risks under the uniform prior", "trial", "IID risk");
    std::vector<double> xs, mins, maxs;
    const std::size_t step = std::max<std::size_t>(1, report.rows.size() / 800);
    for (std::size_t i = 0; i < report.rows.size(); i += step) {
        xs.push_back(static_cast<double>(report.rows[i].trial));
        mins.push_back(report.rows[i].min_risk);
        maxs.push_back(report.rows[i].max_risk);
    }
    plot.add_hline(0.5, "#d62728", "1/2");
    plot.add_hline(0.5 - radius, "#999999", "1/2 - eps(1+delta)");
    plot.add_hline(0.5 + radius, "#999999", "1/2 + eps(1+delta)");
    plot.add_points(xs, mins, {}, "#1f77b4", "best in class");
    plot.add_points(xs, maxs, {}, "#2ca02c", "worst in class");
    plot.write(out / "plot.svg");
    return report.satisfied ? 0 : 1;
}

int run_cv_demo(const CvDemoConfig& config) {
    const auto out = prepare_out_dir(config.out);
    // Hamming-smooth situation: the label leans 0.85/0.15 by popcount, so the
    // neighbor count genuinely matters.
    std::vector<double> conditional(domain_size(config.bits));
    for (std::uint32_t x = 0; x < conditional.size(); ++x)
        conditional[x] =
            std::popcount(x) >= config.bits / 2 ? 0.85 : 0.15;
    const StochasticSituation d = StochasticSituation::uniform_marginal(config.bits, conditional);

    std::vector<Learner> algorithms;
    std::vector<int> ks = parse_int_list(config.knn_ks);
    for (int k : ks) algorithms.push_back(Learner::knn(k));

    const SituationSampler sampler(d);
    CsvWriter csv("trial,seed,selected,anti_selected,risk_selected,risk_anti_selected");
    std::vector<McAccumulator> risk_k(algorithms.size());
    McAccumulator risk_fv, risk_anti;
    std::vector<std::uint64_t> chosen_counts(algorithms.size(), 0);
    bool anti_always_max = true;
    for (std::uint64_t t = 0; t < config.trials; ++t) {
        const std::uint64_t trial_seed = derive_seed(config.seed, t);
        Rng rng(trial_seed);
        const Sample s = sampler.draw_sample(static_cast<std::size_t>(config.n), rng);
        const ValidationResult fv = config.folds >= 2 ? m_fold_cv(algorithms, s, config.folds)
                                                      : forward_validation(algorithms, s);
        const ValidationResult anti = anti_forward_validation(algorithms, s);
        Fraction worst = anti.validation_errors.front();
        for (const Fraction& e : anti.validation_errors)
            if (worst < e) worst = e;
        anti_always_max &= anti.validation_errors[anti.selected] == worst;

        const double fv_risk = iid_risk(fv.classifier, d);
        const double anti_risk = iid_risk(anti.classifier, d);
        risk_fv.add(fv_risk);
        risk_anti.add(anti_risk);
        ++chosen_counts[fv.selected];
        const Sample train = s.prefix(static_cast<std::size_t>(config.n) / 2);
        for (std::size_t k = 0; k < algorithms.size(); ++k)
            risk_k[k].add(iid_risk(algorithms[k](train), d));
        csv.row(t, trial_seed, algorithms[fv.selected].name(), algorithms[anti.selected].name(),
                fv_risk, anti_risk);
    }
    csv.write(out / "report.csv");

    double best_mean = 2.0;
    for (const auto& acc : risk_k) best_mean = std::min(best_mean, acc.mean());
    const double bound = fv_bound(algorithms.size(), static_cast<std::uint64_t>(config.n));
    const double lhs = risk_fv.mean() - best_mean;
    const bool cert_ok = judge(lhs, risk_fv.stderr_of_mean(), bound) != Verdict::kViolated;

    std::string summary = "cv-demo m=" + std::to_string(config.bits) + " n=" +
                          std::to_string(config.n) + " trials=" + fmt_u64(config.trials) +
                          (config.folds >= 2 ? " folds=" + std::to_string(config.folds)
                                             : " two-fold forward") +
                          "\n";
    for (std::size_t k = 0; k < algorithms.size(); ++k)
        summary += "  " + algorithms[k].name() + ": expected risk " + fmt_double(risk_k[k].mean()) +
                   ", selected " + fmt_u64(chosen_counts[k]) + "x\n";
    summary += "validation expected risk:      " + fmt_double(risk_fv.mean()) + "\n";
    summary += "anti-validation expected risk: " + fmt_double(risk_anti.mean()) + "\n";
    summary += "excess over best algorithm " + fmt_double(lhs) + " vs bound " + fmt_double(bound) +
               ": " + pass_text(cert_ok) + "\n";
    summary += std::string("anti-validation picks the max validation error in every trial: ") +
               pass_text(anti_always_max) + "\n";
    write_text_file(out / "summary.txt", summary);

    SvgPlot plot("Validation against fixed neighbor counts", "algorithm index", "expected IID risk");
    std::vector<double> xs, ys;
    for (std::size_t k = 0; k < algorithms.size(); ++k) {
        xs.push_back(static_cast<double>(k));
        ys.push_back(risk_k[k].mean());
    }
    plot.add_points(xs, ys, {}, "#1f77b4", "knn by k");
    plot.add_hline(risk_fv.mean(), "#2ca02c", "validation");
    plot.add_hline(risk_anti.mean(), "#d62728", "anti-validation");
    plot.add_hline(best_mean + bound, "#999999", "best + bound");
    plot.write(out / "plot.svg");
    return cert_ok && anti_always_max ? 0 : 1;
}

}  // namespace nfl_lab
