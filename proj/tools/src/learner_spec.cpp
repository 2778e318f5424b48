#include "nfl_lab/learner_spec.hpp"

#include <cstdint>
#include <stdexcept>

namespace nfl_lab {

namespace {

using nfl::Classifier;
using nfl::HypothesisClass;
using nfl::Label;
using nfl::Learner;

std::vector<std::string> split_top_level(const std::string& text, char separator) {
    std::vector<std::string> parts;
    std::string current;
    int depth = 0;
    for (char c : text) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == separator && depth == 0) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

std::string strip(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    const auto end = text.find_last_not_of(" \t");
    return text.substr(begin, end - begin + 1);
}

std::uint64_t parse_u64(const std::string& text, const char* what) {
    try {
        return std::stoull(text);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("learner spec: bad ") + what + ": " + text);
    }
}

double parse_probability(const std::string& text) {
    const double p = std::stod(text);
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("learner spec: probability outside [0,1]");
    return p;
}

HypothesisClass parse_class(const std::string& text, int bits, const std::string& full) {
    const auto fields = split_top_level(text, ':');
    if (fields.size() == 1 && fields[0] == "all") return HypothesisClass::all_classifiers(bits);
    if (fields.size() == 3 && fields[0] == "random")
        return HypothesisClass::random_class(bits, parse_u64(fields[1], "class size"),
                                             parse_u64(fields[2], "seed"));
    throw std::invalid_argument("learner spec: expected all or random:SIZE:SEED in " + full);
}

std::vector<Learner> parse_bracket_list(const std::string& spec, std::size_t open, int bits) {
    if (spec.back() != ']') throw std::invalid_argument("learner spec: missing ] in " + spec);
    const std::string inner = spec.substr(open + 1, spec.size() - open - 2);
    std::vector<Learner> algos;
    for (const std::string& part : split_top_level(inner, ';'))
        algos.push_back(parse_learner_spec(strip(part), bits));
    return algos;
}

}  // namespace

Learner parse_learner_spec(const std::string& raw, int bits) {
    const std::string spec = strip(raw);
    if (spec.empty()) throw std::invalid_argument("empty learner spec");
    if (spec == "constant-0") return Learner::constant(bits, Label::kN);
    if (spec == "constant-1") return Learner::constant(bits, Label::kT);
    if (spec.rfind("knn:", 0) == 0)
        return Learner::knn(static_cast<int>(parse_u64(spec.substr(4), "neighbor count")), spec);
    if (spec.rfind("erm:", 0) == 0)
        return Learner::erm(parse_class(spec.substr(4), bits, spec), spec);
    if (spec.rfind("anti-erm:", 0) == 0)
        return Learner::anti_erm(parse_class(spec.substr(9), bits, spec), spec);
    if (spec.rfind("bayes:pair:", 0) == 0) {
        const auto fields = split_top_level(spec.substr(11), ':');
        if (fields.size() != 2)
            throw std::invalid_argument("learner spec: bayes:pair needs two probabilities");
        const std::uint32_t size = nfl::domain_size(bits);
        const nfl::BayesModel model(
            {std::vector<double>(size, parse_probability(fields[0])),
             std::vector<double>(size, parse_probability(fields[1]))},
            {0.5, 0.5});
        return Learner::bayes(model, spec);
    }
    if (spec.rfind("fv[", 0) == 0)
        return Learner::forward_validation(parse_bracket_list(spec, 2, bits), spec);
    if (spec.rfind("anti-fv[", 0) == 0)
        return Learner::anti_forward_validation(parse_bracket_list(spec, 7, bits), spec);
    if (spec.rfind("cv:", 0) == 0) {
        const auto open = spec.find('[');
        if (open == std::string::npos)
            throw std::invalid_argument("learner spec: cv needs [SPEC;...] in " + spec);
        const int folds = static_cast<int>(parse_u64(spec.substr(3, open - 3), "fold count"));
        return Learner::m_fold_cv(parse_bracket_list(spec, open, bits), folds, spec);
    }
    throw std::invalid_argument("unrecognized learner spec: " + spec);
}

std::vector<Learner> parse_learner_list(const std::string& specs, int bits) {
    std::vector<Learner> learners;
    for (const std::string& part : split_top_level(specs, ','))
        if (!strip(part).empty()) learners.push_back(parse_learner_spec(part, bits));
    if (learners.empty()) throw std::invalid_argument("no learner specs given");
    return learners;
}

std::vector<Learner> default_learner_sweep(int bits) {
    const HypothesisClass f1(
        {Classifier::constant(bits, Label::kN), Classifier::constant(bits, Label::kT)});
    const HypothesisClass f2 = HypothesisClass::random_class(bits, 4, 2718);
    const std::uint32_t size = nfl::domain_size(bits);
    const nfl::BayesModel two_candidates(
        {std::vector<double>(size, 0.9), std::vector<double>(size, 0.1)}, {0.5, 0.5});
    return {Learner::erm(f1, "erm(constants)"),
            Learner::anti_erm(f1, "anti-erm(constants)"),
            Learner::erm(f2, "erm(random4)"),
            Learner::anti_erm(f2, "anti-erm(random4)"),
            Learner::constant(bits, Label::kN),
            Learner::constant(bits, Label::kT),
            Learner::knn(1),
            Learner::bayes(two_candidates, "bayes(0.9|0.1)")};
}

}  // namespace nfl_lab
