#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nfl/domain.hpp"
#include "nfl/fraction.hpp"

namespace nfl {

enum class LearnerKind {
    kErm,
    kAntiErm,
    kConstant,
    kKnn,
    kBayes,
    kForwardValidation,
    kAntiForwardValidation,
    kMFoldCv,
};

const char* learner_kind_name(LearnerKind kind);

// Finite model for the Bayes classifier: candidate conditional label
// distributions plus a prior with full support over them.
struct BayesModel {
    std::vector<std::vector<double>> candidate_conditionals;  // each of size 2^bits
    std::vector<double> prior;                                // positive, sums to 1

    BayesModel(std::vector<std::vector<double>> candidates, std::vector<double> prior_weights);
    int bits() const { return bits_; }

  private:
    int bits_;
};

// A learning algorithm as a value: a deterministic total map from samples to
// classifiers, tagged with its kind for reports. Model-dependent kinds are
// built by binding a model at construction.
class Learner {
  public:
    static Learner erm(HypothesisClass hypotheses, std::string name = {});
    static Learner anti_erm(HypothesisClass hypotheses, std::string name = {});
    static Learner constant(int bits, Label value, std::string name = {});
    static Learner knn(int neighbor_count, std::string name = {});
    static Learner bayes(BayesModel model, std::string name = {});
    static Learner forward_validation(std::vector<Learner> algorithms, std::string name = {});
    static Learner anti_forward_validation(std::vector<Learner> algorithms, std::string name = {});
    static Learner m_fold_cv(std::vector<Learner> algorithms, int folds, std::string name = {});

    Classifier operator()(const Sample& s) const { return apply_(s); }
    Classifier apply(const Sample& s) const { return apply_(s); }

    LearnerKind kind() const { return kind_; }
    const std::string& name() const { return name_; }

  private:
    Learner(LearnerKind kind, std::string name, std::function<Classifier(const Sample&)> apply)
        : kind_(kind), name_(std::move(name)), apply_(std::move(apply)) {}

    LearnerKind kind_;
    std::string name_;
    std::function<Classifier(const Sample&)> apply_;
};

// Member of F with the fewest errors on s; ties break to the lowest index in
// the class order. An empty sample returns the first member.
Classifier erm(const HypothesisClass& hypotheses, const Sample& s);

// Mirror image: most errors on s, same tie rule.
Classifier anti_erm(const HypothesisClass& hypotheses, const Sample& s);

// k-nearest-neighbor vote under Hamming distance on the feature bits.
// Distance ties break toward earlier sample positions, vote ties toward
// label 0. Requires 1 <= k <= n.
Classifier knn(int neighbor_count, const Sample& s);

// Bayes-optimal classifier for the posterior predictive distribution;
// predictive ties break toward label 0. Likelihoods are accumulated in log
// space. Throws when the sample is impossible under every candidate.
Classifier bayes(const BayesModel& model, const Sample& s);

// Outcome of a validation-style selection among trained candidates.
struct ValidationResult {
    Classifier classifier;
    std::size_t selected;                    // index into the algorithm list
    std::vector<Fraction> validation_errors;  // one per algorithm
};

// Train every algorithm on the first floor(n/2) points, keep the classifier
// with the smallest error on the rest; ties to the lowest index.
ValidationResult forward_validation(const std::vector<Learner>& algorithms, const Sample& s);

// Same split, selection by the largest validation error.
ValidationResult anti_forward_validation(const std::vector<Learner>& algorithms, const Sample& s);

// M contiguous folds (remainder spread over the first folds); each algorithm
// scored by its mean per-fold validation error, winner retrained on all of s.
ValidationResult m_fold_cv(const std::vector<Learner>& algorithms, const Sample& s, int folds);

}  // namespace nfl
