#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace nfl_lab {

// Every run writes report.csv, summary.txt and plot.svg into its out
// directory and returns a process exit code: 0 when all checks hold,
// 1 when any invariant check or certificate fails.

struct PredictTreeConfig {
    int horizon = 3;
    std::filesystem::path out;
};
int run_predict_tree(const PredictTreeConfig& config);

struct ClassifyEnumConfig {
    int bits = 3;
    // "INSTANCEBITS:LABEL" entries, e.g. "000:N"; empty = the six-seen demo
    // configuration (first six instances, all labeled N).
    std::vector<std::string> seen;
    std::filesystem::path out;
};
int run_classify_enum(const ClassifyEnumConfig& config);

struct ConservationConfig {
    int bits = 2;
    int n = 2;
    std::string learners;  // comma-separated specs; empty = default sweep
    bool exact = true;
    std::uint64_t trials = 2000;
    std::uint64_t seed = 0;
    std::filesystem::path out;
};
int run_conservation(const ConservationConfig& config);

struct GapConfig {
    int bits = 3;
    int n = 4;
    std::string learners;  // empty = constants, 1-nn, erm/anti-erm over a random class
    bool exact = true;
    std::uint64_t trials = 2000;
    std::uint64_t seed = 0;
    std::optional<std::filesystem::path> situation_csv;  // else drawn from the prior
    std::filesystem::path out;
};
int run_gap(const GapConfig& config);

struct BoundsConfig {
    std::string kind = "all";  // erm | anti-erm | fv | all
    int bits = 2;
    std::size_t class_size = 4;
    std::vector<int> ns = {2, 4, 8, 16, 32, 64};
    std::string knn_ks = "1,3,5";  // algorithms for the fv certificates
    bool exact = false;
    std::uint64_t trials = 2000;
    std::uint64_t seed = 0;
    std::filesystem::path out;
};
int run_bounds(const BoundsConfig& config);

struct ParadoxConfig {
    int bits = 10;
    std::size_t class_size = 4;
    std::uint64_t n = 277;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 0;
    std::filesystem::path out;
};
int run_paradox(const ParadoxConfig& config);

struct CvDemoConfig {
    int bits = 8;
    int n = 200;
    std::string knn_ks = "1,3,5";
    int folds = 0;  // 0 = two-fold forward validation; >= 2 = M-fold selection
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::filesystem::path out;
};
int run_cv_demo(const CvDemoConfig& config);

}  // namespace nfl_lab
