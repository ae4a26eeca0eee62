#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusion/finab.hpp"
#include "fusion/fusion.hpp"
#include "fusion/limits.hpp"

namespace fusion {

/// Z(P) is a Sylow p-subgroup of C_G(P). When it is, C_G(P) = Z(P) x C'_G(P)
/// with C'_G(P) the p'-elements of C_G(P).
struct PCentric {
  bool centric = false;
  Subgroup centralizer;
  Subgroup center;
  Subgroup c_prime;  // set only when centric
};
/// TheoremViolation if P is p-centric but C_G(P) does not split as stated.
PCentric p_centric(const Subgroup& g, const Subgroup& p_sub, unsigned p);

/// L_S^c(G) on one representative of each F-centric class. Mor(P, Q) is the
/// set of cosets g C'_G(P) with g P g^-1 <= Q; a coset is named by its least
/// element.
class LinkingSystem {
 public:
  /// Checks that p-centric and F-centric agree on every subgroup of S;
  /// TheoremViolation otherwise.
  static LinkingSystem construct(FusionPtr f);

  const FusionSystem& fusion() const { return *f_; }
  std::size_t object_count() const { return objs_.size(); }
  const Subgroup& object(std::size_t i) const { return objs_[i].p; }
  const Subgroup& c_prime(std::size_t i) const { return objs_[i].c_prime; }
  const Subgroup& center(std::size_t i) const { return objs_[i].center; }
  /// Sorted coset names of Mor(P_i, P_j).
  const std::vector<Elem>& mor(std::size_t i, std::size_t j) const { return mor_[i * objs_.size() + j]; }
  std::size_t morphism_count() const;
  /// Subgroups of S on which p-centric and F-centric were compared.
  std::size_t centric_compared() const { return compared_; }

  /// Least element of g C'_G(P_i).
  Elem coset(std::size_t i, Elem g) const;
  /// psi o phi with phi in Mor(P_i, -) and psi composable with it.
  Elem compose(std::size_t i, Elem psi, Elem phi) const;
  /// delta_P(g) in Aut_L(P_i) for g in P_i.
  Elem delta(std::size_t i, Elem g) const { return coset(i, g); }
  /// pi(psi): the F-morphism c_g from P_i to P_j.
  FMorphism project(std::size_t i, std::size_t j, Elem psi) const;

 private:
  struct Obj {
    Subgroup p, center, c_prime;
  };
  FusionPtr f_;
  std::vector<Obj> objs_;
  std::vector<std::vector<Elem>> mor_;
  std::size_t compared_ = 0;
};

struct LinkingReport {
  std::size_t objects = 0;
  std::size_t morphisms = 0;
  std::size_t axiom_a = 0;          // pairs (P, Q) with a free Z(P)-action and fibers = orbits
  std::size_t axiom_b = 0;          // elements g of objects with pi(delta(g)) = c_g
  std::size_t axiom_c = 0;          // pairs (psi, g) with psi delta(g) = delta(pi(psi) g) psi
  std::size_t well_defined = 0;     // (phi, c) with c in C'(Q): c phi = phi as cosets
  std::size_t associativity = 0;    // composable triples checked
  std::size_t centric_agreement = 0;  // subgroups of S compared
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
/// Exhaustive on the skeleton, except associativity, which is checked on all
/// composable triples while their number stays below `triple_budget` and on a
/// deterministic subset otherwise.
LinkingReport verify_axioms(const LinkingSystem& l, std::size_t triple_budget = 2'000'000);

struct TheoremBReport {
  std::optional<std::size_t> out_sf;  // |Out(S, F)|, unset past the automorphism bound
  FinAb lim1, lim2;
  bool consistency = false;  // lim^2 = 0, and lim^1 = 0 for odd p
};
/// BoundExceeded when the limits do not fit `opt`.
TheoremBReport theorem_b_report(const FusionSystem& f, BarOptions opt = {}, std::size_t out_bound = 32);

}  // namespace fusion
