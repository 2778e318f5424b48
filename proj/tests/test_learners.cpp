#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "nfl/learners.hpp"
#include "nfl/random.hpp"
#include "nfl/risk.hpp"

using namespace nfl;

namespace {

Sample sample_of(std::initializer_list<std::pair<const char*, int>> points) {
    Sample s;
    for (const auto& [bits, label] : points)
        s.add(Instance::from_string(bits), label_from_value(label));
    return s;
}

Sample sample_from_codes(int bits, const std::vector<std::uint32_t>& xs, std::uint32_t labels) {
    Sample s;
    for (std::size_t i = 0; i < xs.size(); ++i)
        s.add(Instance{xs[i], bits}, label_from_value(static_cast<int>((labels >> i) & 1u)));
    return s;
}

bool is_member(const HypothesisClass& hypotheses, const Classifier& f) {
    for (const Classifier& member : hypotheses.members())
        if (member == f) return true;
    return false;
}

}  // namespace

TEST_CASE("erm picks the consistent classifier and breaks ties by class order") {
    const Classifier f1 = Classifier::from_string("01");
    const Classifier f2 = Classifier::from_string("10");
    const HypothesisClass hypotheses({f1, f2});
    const Sample s = sample_of({{"0", 0}, {"1", 1}});
    CHECK(erm(hypotheses, s) == f1);

    const HypothesisClass singleton({f2});
    CHECK(erm(singleton, s) == f2);
    CHECK(anti_erm(singleton, s) == f2);

    // Empty sample: every member has zero errors, first member wins.
    CHECK(erm(hypotheses, Sample{}) == f1);
}

TEST_CASE("erm over all sixteen m=2 classifiers, against the brute-force oracle") {
    const HypothesisClass all = HypothesisClass::all_classifiers(2);
    const Sample s = sample_of({{"00", 1}, {"01", 1}, {"10", 1}});
    // Independent oracle: scan error counts, track minimum and first argmin.
    std::size_t best_index = 0;
    std::size_t best_errors = s.size() + 1;
    for (std::size_t i = 0; i < all.size(); ++i) {
        const std::size_t errors = error_count(all.at(i), s);
        if (errors < best_errors) {
            best_errors = errors;
            best_index = i;
        }
    }
    const Classifier chosen = erm(all, s);
    CHECK(chosen == all.at(best_index));
    CHECK(best_errors == 0);
    // Both completions of the sample are minimizers; the all-ones classifier
    // is among them, and the selected one is the earlier in canonical order.
    CHECK(error_count(Classifier::from_string("1111"), s) == 0);
    CHECK(chosen.str() == "1110");
}

TEST_CASE("anti-erm maximizes training error") {
    const Classifier f1 = Classifier::from_string("01");
    const Classifier f2 = Classifier::from_string("10");
    const HypothesisClass hypotheses({f1, f2});
    const Sample s = sample_of({{"0", 0}, {"1", 1}});
    CHECK(anti_erm(hypotheses, s) == f2);
}

TEST_CASE("erm/anti-erm extremality over every m=2 sample up to length 4") {
    const HypothesisClass all = HypothesisClass::all_classifiers(2);
    for (int n = 1; n <= 4; ++n) {
        std::vector<std::uint32_t> xs(static_cast<std::size_t>(n), 0);
        bool more = true;
        while (more) {
            for (std::uint32_t labels = 0; labels < (1u << n); ++labels) {
                const Sample s = sample_from_codes(2, xs, labels);
                const std::size_t low = error_count(erm(all, s), s);
                const std::size_t high = error_count(anti_erm(all, s), s);
                bool extremal = true;
                for (const Classifier& f : all.members()) {
                    const std::size_t e = error_count(f, s);
                    extremal &= low <= e && e <= high;
                }
                CHECK(extremal);
                // Complement-closed class: the extremes mirror around n.
                CHECK(low + high == s.size());
            }
            more = false;
            for (std::size_t i = xs.size(); i-- > 0;) {
                if (++xs[i] < 4) {
                    more = true;
                    break;
                }
                xs[i] = 0;
            }
        }
    }
}

TEST_CASE("knn reproduces stored labels and majority votes") {
    const Sample s = sample_of({{"00", 1}, {"01", 0}, {"10", 0}});
    const Classifier one_nn = knn(1, s);
    CHECK(one_nn.at(Instance::from_string("00")) == Label::kT);
    CHECK(one_nn.at(Instance::from_string("01")) == Label::kN);
    CHECK(one_nn.at(Instance::from_string("10")) == Label::kN);
    // k = n: global majority everywhere (two 0s, one 1).
    const Classifier all_nn = knn(3, s);
    CHECK(all_nn == Classifier::constant(2, Label::kN));
    CHECK_THROWS_AS(knn(0, s), std::invalid_argument);
    CHECK_THROWS_AS(knn(4, s), std::invalid_argument);
    CHECK_THROWS_AS(knn(1, Sample{}), std::invalid_argument);
}

TEST_CASE("knn distance ties go to the earlier sample point") {
    const Sample s = sample_of({{"00", 0}, {"11", 1}});
    // 01 is Hamming-1 from both sample points; the first one wins.
    CHECK(knn(1, s).at(Instance::from_string("01")) == Label::kN);
    // Reversing the sample flips the verdict.
    const Sample reversed = sample_of({{"11", 1}, {"00", 0}});
    CHECK(knn(1, reversed).at(Instance::from_string("01")) == Label::kT);
}

TEST_CASE("knn vote ties resolve toward label 0") {
    const Sample s = sample_of({{"00", 1}, {"11", 0}});
    CHECK(knn(2, s).at(Instance::from_string("01")) == Label::kN);
}

TEST_CASE("bayes with a single candidate thresholds its conditional at 1/2") {
    const BayesModel model({{0.9, 0.2}}, {1.0});
    const Sample s = sample_of({{"0", 0}, {"1", 1}});
    CHECK(bayes(model, s) == Classifier::from_string("10"));
    // Regardless of the sample: the posterior cannot move.
    CHECK(bayes(model, Sample{}) == Classifier::from_string("10"));
}

TEST_CASE("bayes collapses onto the only candidate consistent with the sample") {
    const BayesModel model({{1.0, 0.0}, {0.0, 1.0}}, {0.5, 0.5});
    const Sample s = sample_of({{"0", 1}});
    CHECK(bayes(model, s) == Classifier::from_string("10"));
}

TEST_CASE("bayes two-candidate posterior matches the hand computation") {
    // Candidates p=0.9 and p=0.1 everywhere on m=1; sample (0,1),(1,1).
    // Posterior odds 0.81 : 0.01, predictive ~0.890 > 1/2 at every instance.
    const BayesModel model({{0.9, 0.9}, {0.1, 0.1}}, {0.5, 0.5});
    const Sample s = sample_of({{"0", 1}, {"1", 1}});
    CHECK(bayes(model, s) == Classifier::constant(1, Label::kT));
}

TEST_CASE("bayes rejects a sample impossible under every candidate") {
    const BayesModel model({{1.0, 1.0}}, {1.0});
    const Sample s = sample_of({{"0", 0}});
    CHECK_THROWS_AS(bayes(model, s), std::domain_error);
}

TEST_CASE("bayes posterior stays stable on long samples via log-space weights") {
    const BayesModel model({{0.9, 0.9}, {0.1, 0.1}}, {0.5, 0.5});
    Sample s;
    for (int i = 0; i < 400; ++i) s.add(Instance{static_cast<std::uint32_t>(i % 2), 1}, Label::kT);
    CHECK(bayes(model, s) == Classifier::constant(1, Label::kT));
}

TEST_CASE("bayes with deterministic candidates agrees with erm on noise-free samples") {
    // Candidates = all classifiers as deterministic conditionals; a sample
    // labeled by one of them leaves erm and bayes on the same classifier.
    for (int bits = 1; bits <= 2; ++bits) {
        const HypothesisClass all = HypothesisClass::all_classifiers(bits);
        std::vector<std::vector<double>> candidates;
        for (const Classifier& f : all.members()) {
            std::vector<double> conditional(f.size());
            for (std::uint32_t x = 0; x < f.size(); ++x)
                conditional[x] = static_cast<double>(label_value(f.at_index(x)));
            candidates.push_back(std::move(conditional));
        }
        const BayesModel model(candidates, std::vector<double>(candidates.size(),
                                                               1.0 / candidates.size()));
        Rng rng(42 + bits);
        for (int trial = 0; trial < 32; ++trial) {
            const Classifier& truth = all.at(rng.below(all.size()));
            Sample s;
            const int n = 1 + static_cast<int>(rng.below(4));
            for (int i = 0; i < n; ++i) {
                const Instance x{static_cast<std::uint32_t>(rng.below(truth.size())), bits};
                s.add(x, truth.at(x));
            }
            const Classifier via_bayes = bayes(model, s);
            const Classifier via_erm = erm(all, s);
            CHECK(error_count(via_bayes, s) == 0);
            CHECK(error_count(via_erm, s) == 0);
            // Both fill unseen instances with label 0 (posterior predictive
            // ties and the canonical-order tie rule coincide there).
            CHECK(via_bayes == via_erm);
        }
    }
}

TEST_CASE("forward validation selects by second-half error") {
    const Learner const0 = Learner::constant(2, Label::kN);
    const Learner fits_all = Learner::erm(HypothesisClass({Classifier::from_string("0011")}));
    const Sample s = sample_of({{"00", 0}, {"01", 0}, {"10", 1}, {"11", 1}});
    // Trained on the first two points; validated on the last two.
    const ValidationResult result = forward_validation({const0, fits_all}, s);
    CHECK(result.selected == 1);
    CHECK(result.validation_errors[0] == Fraction(1, 1));
    CHECK(result.validation_errors[1] == Fraction(0, 1));
    CHECK(result.classifier == Classifier::from_string("0011"));

    const ValidationResult anti = anti_forward_validation({const0, fits_all}, s);
    CHECK(anti.selected == 0);
    CHECK(anti.classifier == Classifier::constant(2, Label::kN));
}

TEST_CASE("forward validation with a single algorithm returns its half-trained output") {
    const Learner const1 = Learner::constant(1, Label::kT);
    const Sample s = sample_of({{"0", 0}, {"1", 1}, {"0", 0}});
    const ValidationResult result = forward_validation({const1}, s);
    CHECK(result.selected == 0);
    CHECK(result.classifier == Classifier::constant(1, Label::kT));
    const ValidationResult anti = anti_forward_validation({const1}, s);
    CHECK(anti.selected == 0);
    CHECK(anti.classifier == result.classifier);
    CHECK_THROWS_AS(forward_validation({const1}, sample_of({{"0", 0}})), std::invalid_argument);
}

TEST_CASE("odd samples train on the first (n-1)/2 points") {
    // n = 5: train on 2 points, validate on 3.
    const Learner memorizer = Learner::knn(1);
    const Sample s = sample_of({{"00", 1}, {"01", 1}, {"10", 0}, {"11", 0}, {"00", 1}});
    const ValidationResult result = forward_validation({memorizer}, s);
    // Trained only on (00,1),(01,1): everything votes 1.
    CHECK(result.classifier == Classifier::constant(2, Label::kT));
    CHECK(result.validation_errors[0] == Fraction(2, 3));
}

TEST_CASE("forward validation selection minimizes the recorded validation errors") {
    Rng rng(77);
    const std::vector<Learner> algos{Learner::constant(2, Label::kN),
                                     Learner::constant(2, Label::kT), Learner::knn(1)};
    for (int trial = 0; trial < 64; ++trial) {
        Sample s;
        const int n = 2 + static_cast<int>(rng.below(5));
        for (int i = 0; i < n; ++i)
            s.add(Instance{static_cast<std::uint32_t>(rng.below(4)), 2},
                  label_from_value(static_cast<int>(rng.below(2))));
        const ValidationResult result = forward_validation(algos, s);
        const Fraction best = *std::min_element(result.validation_errors.begin(),
                                                result.validation_errors.end());
        CHECK(result.validation_errors[result.selected] == best);
        const ValidationResult anti = anti_forward_validation(algos, s);
        const Fraction worst = *std::max_element(anti.validation_errors.begin(),
                                                 anti.validation_errors.end());
        CHECK(anti.validation_errors[anti.selected] == worst);
    }
}

TEST_CASE("m-fold cv never selects the constant-0 learner on a 90% positive sample") {
    const Learner const0 = Learner::constant(1, Label::kN);
    const Learner const1 = Learner::constant(1, Label::kT);
    // Majority-vote learner expressed as erm over the two constants.
    const Learner majority = Learner::erm(
        HypothesisClass({Classifier::constant(1, Label::kN), Classifier::constant(1, Label::kT)}),
        "majority");
    Sample s;
    for (int i = 0; i < 20; ++i)
        s.add(Instance{static_cast<std::uint32_t>(i % 2), 1},
              label_from_value(i % 10 == 0 ? 0 : 1));  // 2 zeros, 18 ones
    const ValidationResult result = m_fold_cv({const0, const1, majority}, s, 4);
    CHECK(result.selected != 0);
    CHECK(result.classifier == Classifier::constant(1, Label::kT));
    CHECK(result.validation_errors[0] > result.validation_errors[1]);
}

TEST_CASE("two-fold cv averages the forward validation of both orderings") {
    const Learner const0 = Learner::constant(1, Label::kN);
    const Learner const1 = Learner::constant(1, Label::kT);
    const Sample s = sample_of({{"0", 1}, {"1", 1}, {"0", 0}, {"1", 1}});
    const ValidationResult result = m_fold_cv({const0, const1}, s, 2);
    // const0 errs on 3 of 4 points, const1 on 1; fold averages (1/2+1)/2 and (0+1/2)/2.
    CHECK(result.validation_errors[0] == Fraction(3, 4));
    CHECK(result.validation_errors[1] == Fraction(1, 4));
    CHECK(result.selected == 1);
    CHECK_THROWS_AS(m_fold_cv({const0}, s, 1), std::invalid_argument);
    CHECK_THROWS_AS(m_fold_cv({const0}, s, 5), std::invalid_argument);
    // Single algorithm: index 0 regardless of errors.
    CHECK(m_fold_cv({const0}, s, 2).selected == 0);
}

TEST_CASE("validation learners output members of the trained candidate set") {
    Rng rng(11);
    const std::vector<Learner> algos{Learner::constant(2, Label::kN), Learner::knn(1),
                                     Learner::erm(HypothesisClass::all_classifiers(2))};
    for (int trial = 0; trial < 32; ++trial) {
        Sample s;
        const int n = 4 + static_cast<int>(rng.below(4));
        for (int i = 0; i < n; ++i)
            s.add(Instance{static_cast<std::uint32_t>(rng.below(4)), 2},
                  label_from_value(static_cast<int>(rng.below(2))));
        const Sample train = s.prefix(s.size() / 2);
        std::vector<Classifier> candidates;
        for (const Learner& a : algos) candidates.push_back(a(train));
        const ValidationResult result = forward_validation(algos, s);
        CHECK(std::count(candidates.begin(), candidates.end(), result.classifier) > 0);
    }
}

TEST_CASE("learner values are deterministic and carry kinds and names") {
    const HypothesisClass all = HypothesisClass::all_classifiers(2);
    const Learner a = Learner::erm(all);
    const Sample s = sample_of({{"00", 1}, {"01", 0}});
    CHECK(a(s) == a(s));
    CHECK(a.kind() == LearnerKind::kErm);
    CHECK(a.name() == "erm(|F|=16)");
    CHECK(Learner::knn(3).name() == "knn-3");
    CHECK(Learner::constant(2, Label::kT).name() == "constant-1");
    CHECK(is_member(all, a(s)));
    CHECK(std::string(learner_kind_name(LearnerKind::kAntiForwardValidation)) ==
          "anti-forward-validation");
}
