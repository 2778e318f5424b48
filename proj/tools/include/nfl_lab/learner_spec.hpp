#pragma once

#include <string>
#include <vector>

#include "nfl/learners.hpp"

namespace nfl_lab {

// Declarative learner syntax used by configs and --learners flags:
//   constant-0 | constant-1
//   knn:K
//   erm:all            erm:random:SIZE:SEED
//   anti-erm:all       anti-erm:random:SIZE:SEED
//   bayes:pair:P1:P2   (two flat-conditional candidates, uniform prior)
//   fv[SPEC;SPEC;...]  anti-fv[SPEC;...]   cv:M[SPEC;...]
nfl::Learner parse_learner_spec(const std::string& spec, int bits);

// Comma-separated list of specs (commas inside brackets stay untouched).
std::vector<nfl::Learner> parse_learner_list(const std::string& specs, int bits);

// The default sweep: erm/anti-erm over two classes, both constants, 1-nn,
// and a two-candidate Bayes learner.
std::vector<nfl::Learner> default_learner_sweep(int bits);

}  // namespace nfl_lab
