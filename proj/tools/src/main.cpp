#include <CLI11.hpp>
#include <cstdio>
#include <exception>
#include <string>

#include "nfl_lab/runs.hpp"

namespace {

// MC subcommands must be reproducible on purpose: a seed is not optional.
void require_seed_for_mc(bool is_mc, const CLI::Option* seed_option, const std::string& name) {
    if (is_mc && seed_option->count() == 0)
        throw CLI::ValidationError(name, "--seed is required for Monte-Carlo runs");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nfl-lab: enumeration checks, risk functionals and bound certificates for "
                 "finite-domain supervised learning"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from an INI/TOML file ([subcommand] sections)");

    nfl_lab::PredictTreeConfig predict;
    auto* predict_cmd = app.add_subcommand(
        "predict-tree", "Enumerate every predictor at horizon T; check the shared error profile");
    predict_cmd->add_option("--T", predict.horizon, "Prediction horizon (<= 4)")
        ->capture_default_str();
    predict_cmd->add_option("--out", predict.out, "Output directory")
        ->default_val("out/predict-tree");

    nfl_lab::ClassifyEnumConfig classify;
    auto* classify_cmd = app.add_subcommand(
        "classify-enum", "Remaining-situations sweep; histogram check for every learner output");
    classify_cmd->add_option("--m", classify.bits, "Feature bits (<= 3)")->capture_default_str();
    classify_cmd->add_option("--seen", classify.seen,
                             "Seen instances as BITS:LABEL (default: six-seen all-N demo)");
    classify_cmd->add_option("--out", classify.out, "Output directory")
        ->default_val("out/classify-enum");

    nfl_lab::ConservationConfig conservation;
    auto* conservation_cmd = app.add_subcommand(
        "conservation", "Expected OTS risk under the uniform conditional prior, per learner");
    conservation_cmd->add_option("--m", conservation.bits, "Feature bits")->capture_default_str();
    conservation_cmd->add_option("--n", conservation.n, "Sample size (< 2^m)")
        ->capture_default_str();
    conservation_cmd->add_option("--learners", conservation.learners,
                                 "Comma-separated learner specs (default sweep of 8)");
    auto* conservation_exact = conservation_cmd->add_flag("--exact", "Exact Beta-integral mode");
    auto* conservation_mc = conservation_cmd->add_flag("--mc", "Monte-Carlo mode");
    conservation_exact->excludes(conservation_mc);
    conservation_cmd->add_option("--trials", conservation.trials, "Monte-Carlo trials")
        ->capture_default_str();
    auto* conservation_seed = conservation_cmd->add_option("--seed", conservation.seed,
                                                           "Master seed (required with --mc)");
    conservation_cmd->add_option("--out", conservation.out, "Output directory")
        ->default_val("out/conservation");

    nfl_lab::GapConfig gap;
    auto* gap_cmd =
        app.add_subcommand("gap", "IID vs OTS expected-risk gap against the n*2^-m ceiling");
    gap_cmd->add_option("--m", gap.bits, "Feature bits (> 12 switches to analytic-only)")
        ->capture_default_str();
    gap_cmd->add_option("--n", gap.n, "Sample size")->capture_default_str();
    gap_cmd->add_option("--learners", gap.learners, "Comma-separated learner specs");
    std::string situation_path;
    gap_cmd->add_option("--situation", situation_path,
                        "Situation CSV (instance_bits,marginal,p_conditional)");
    auto* gap_exact = gap_cmd->add_flag("--exact", "Exact enumeration mode");
    auto* gap_mc = gap_cmd->add_flag("--mc", "Monte-Carlo mode");
    gap_exact->excludes(gap_mc);
    gap_cmd->add_option("--trials", gap.trials, "Monte-Carlo trials")->capture_default_str();
    auto* gap_seed = gap_cmd->add_option("--seed", gap.seed, "Master seed");
    gap_cmd->add_option("--out", gap.out, "Output directory")->default_val("out/gap");

    nfl_lab::BoundsConfig bounds;
    auto* bounds_cmd = app.add_subcommand(
        "bounds", "erm / anti-erm / forward-validation bound certificates over an n grid");
    bounds_cmd->add_option("--kind", bounds.kind, "erm | anti-erm | fv | all")
        ->capture_default_str();
    bounds_cmd->add_option("--m", bounds.bits, "Feature bits")->capture_default_str();
    bounds_cmd->add_option("--class-size", bounds.class_size, "|F| for erm/anti-erm")
        ->capture_default_str();
    bounds_cmd->add_option("--n", bounds.ns, "Sample sizes (repeatable)")->capture_default_str();
    bounds_cmd->add_option("--knn-ks", bounds.knn_ks, "Neighbor counts for the fv certificates")
        ->capture_default_str();
    auto* bounds_exact = bounds_cmd->add_flag("--exact", "Exact oracle mode");
    auto* bounds_mc = bounds_cmd->add_flag("--mc", "Monte-Carlo mode (default)");
    bounds_exact->excludes(bounds_mc);
    bounds_cmd->add_option("--trials", bounds.trials, "Monte-Carlo trials")->capture_default_str();
    auto* bounds_seed = bounds_cmd->add_option("--seed", bounds.seed, "Master seed");
    bounds_cmd->add_option("--out", bounds.out, "Output directory")->default_val("out/bounds");

    nfl_lab::ParadoxConfig paradox;
    auto* paradox_cmd = app.add_subcommand(
        "paradox", "Best/worst in-class risks under the prior against eps(1+delta)");
    paradox_cmd->add_option("--m", paradox.bits, "Feature bits (> 12 switches to analytic-only)")
        ->capture_default_str();
    paradox_cmd->add_option("--class-size", paradox.class_size, "|F|")->capture_default_str();
    paradox_cmd->add_option("--n", paradox.n, "Sample size")->capture_default_str();
    paradox_cmd->add_option("--trials", paradox.trials, "Monte-Carlo trials")
        ->capture_default_str();
    auto* paradox_seed = paradox_cmd->add_option("--seed", paradox.seed, "Master seed");
    paradox_cmd->add_option("--out", paradox.out, "Output directory")->default_val("out/paradox");

    nfl_lab::CvDemoConfig cv;
    auto* cv_cmd = app.add_subcommand(
        "cv-demo", "Neighbor-count selection by validation; anti-validation contrast");
    cv_cmd->add_option("--m", cv.bits, "Feature bits")->capture_default_str();
    cv_cmd->add_option("--n", cv.n, "Sample size")->capture_default_str();
    cv_cmd->add_option("--knn-ks", cv.knn_ks, "Neighbor counts")->capture_default_str();
    cv_cmd->add_option("--folds", cv.folds, "0 = two-fold forward validation, else M folds")
        ->capture_default_str();
    cv_cmd->add_option("--trials", cv.trials, "Monte-Carlo trials")->capture_default_str();
    auto* cv_seed = cv_cmd->add_option("--seed", cv.seed, "Master seed");
    cv_cmd->add_option("--out", cv.out, "Output directory")->default_val("out/cv-demo");

    CLI11_PARSE(app, argc, argv);

    try {
        if (predict_cmd->parsed()) return nfl_lab::run_predict_tree(predict);
        if (classify_cmd->parsed()) return nfl_lab::run_classify_enum(classify);
        if (conservation_cmd->parsed()) {
            conservation.exact = !static_cast<bool>(*conservation_mc);
            require_seed_for_mc(!conservation.exact, conservation_seed, "conservation");
            return nfl_lab::run_conservation(conservation);
        }
        if (gap_cmd->parsed()) {
            gap.exact = !static_cast<bool>(*gap_mc);
            if (!situation_path.empty()) gap.situation_csv = situation_path;
            require_seed_for_mc(!gap.exact, gap_seed, "gap");
            return nfl_lab::run_gap(gap);
        }
        if (bounds_cmd->parsed()) {
            bounds.exact = static_cast<bool>(*bounds_exact);
            require_seed_for_mc(!bounds.exact, bounds_seed, "bounds");
            return nfl_lab::run_bounds(bounds);
        }
        if (paradox_cmd->parsed()) {
            require_seed_for_mc(paradox.bits <= 12, paradox_seed, "paradox");
            return nfl_lab::run_paradox(paradox);
        }
        if (cv_cmd->parsed()) {
            require_seed_for_mc(true, cv_seed, "cv-demo");
            return nfl_lab::run_cv_demo(cv);
        }
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
