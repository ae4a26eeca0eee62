#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fusion/category.hpp"

namespace fusion {

/// Elements of a finite abelian group as mixed-radix integer codes, in the
/// same order as FinAb::elements().
class ElementCodec {
 public:
  ElementCodec() = default;
  explicit ElementCodec(const FinAb& m);
  std::uint32_t size() const { return size_; }
  std::uint32_t encode(const IntVec& v) const;
  IntVec decode(std::uint32_t c) const;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;

 private:
  FinAb m_;
  std::uint32_t size_ = 1;
};

/// M -> M/N for N generated by `gens`, with a section on generators.
struct QuotientMap {
  FinAb group;
  FinAbHom projection;
  std::vector<IntVec> lifts;  // lifts[i] maps to the i-th generator of the quotient
};
QuotientMap quotient_map(const FinAb& m, const std::vector<IntVec>& gens);

/// A G-module given by the matrix of every element of G.
GModule module_from_action(const Subgroup& g, const FinAb& m, const std::function<FinAbHom(Elem)>& act);
/// (Z/q)^n with G permuting coordinates, n the degree of G's root.
GModule permutation_module(const Subgroup& g, std::int64_t q);
/// Z/q on which g acts as multiplication by the sign of g.
GModule sign_module(const Subgroup& g, std::int64_t q);
GModule direct_sum(const GModule& a, const GModule& b);

/// A G-submodule M0 together with M and M/M0, all with induced actions.
struct SubmodulePair {
  GModule sub, whole, quotient;
  std::vector<IntVec> sub_basis;  // images in M of the generators of M0
};
/// M0 is the G-submodule generated by `gens`.
SubmodulePair submodule_pair(const GModule& m, const std::vector<IntVec>& gens);

/// A group of automorphisms of M given by generating matrices, realised as a
/// permutation group on the elements of M. BoundExceeded past `max_order`.
GModule module_from_matrices(const FinAb& m, const std::vector<FinAbHom>& gens, std::size_t max_order,
                             std::string name = {});

/// M as a module for G/H, H acting trivially. DomainError otherwise.
struct QuotientModule {
  Homomorphism to_quotient;
  GModule module;
};
QuotientModule quotient_module(const GModule& m, const Subgroup& h);
/// Kernel of the action.
Subgroup action_kernel(const GModule& m);
/// M as a module for H <= G.
GModule restrict_module(const GModule& m, const Subgroup& h);

}  // namespace fusion
