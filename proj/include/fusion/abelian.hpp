#pragma once

#include <functional>
#include <unordered_map>

#include "fusion/finab.hpp"
#include "fusion/group.hpp"

namespace fusion {

/// An abelian subgroup identified with its canonical invariant-factor form.
class AbelianIso {
 public:
  AbelianIso() = default;
  const Subgroup& subgroup() const { return sub_; }
  const FinAb& finab() const { return ab_; }
  /// Element generating the i-th invariant factor.
  Elem generator(std::size_t i) const { return gens_[i]; }
  IntVec to_vector(Elem e) const;
  Elem from_vector(const IntVec& v) const;

  friend AbelianIso as_finab(const Subgroup& a);

 private:
  Subgroup sub_;
  FinAb ab_;
  std::vector<Elem> gens_;
  std::unordered_map<Elem, IntVec> vec_;
  std::vector<std::int64_t> radix_;
  std::vector<Elem> by_code_;
};

/// Throws DomainError on non-abelian input.
AbelianIso as_finab(const Subgroup& a);

/// Matrix of the homomorphism f: A -> B through the isos. `f` must map
/// elements of A (root indices) to elements of B. Every element is checked;
/// throws DomainError if f is not a homomorphism.
FinAbHom induced_hom(const AbelianIso& a, const AbelianIso& b, const std::function<Elem(Elem)>& f);

}  // namespace fusion
