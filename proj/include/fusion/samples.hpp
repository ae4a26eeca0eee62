#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fusion/modules.hpp"

namespace fusion {

/// A faithful action used for offender experiments.
struct ActionSample {
  std::string label;
  unsigned p = 2;
  GModule module;
};

/// Faithful actions on abelian p-groups: full unitriangular groups where they
/// fit the acting-group bound, random subgroups of triangular automorphism
/// groups, and a few linear groups. p = 2: |G| <= 2^6 (linear groups up to
/// 2^8), |V| <= 2^6; p = 3: |G| <= 3^4, |V| <= 3^4. Deterministic in `seed`.
std::vector<ActionSample> offender_sample(unsigned p, std::uint64_t seed, std::size_t random_per_module = 4);

/// A pair (G, M) with a generating set for a submodule M0.
struct LambdaSample {
  std::string label;
  unsigned p = 2;
  GModule module;
  std::vector<IntVec> sub_gens;
};
/// Random pairs with |G| <= 72 and M a p-group of order <= 64.
std::vector<LambdaSample> lambda_sample(std::uint64_t seed, std::size_t count);

}  // namespace fusion
