#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fusion/snf.hpp"

namespace fusion {

using IntVec = std::vector<std::int64_t>;
using IntMat = std::vector<IntVec>;  // row-major

/// A finite abelian group presented as a direct sum of cyclic groups
/// Z/m_1 + ... + Z/m_r, each m_i >= 2. When the moduli form a divisibility
/// chain the presentation is the canonical invariant-factor form.
class FinAb {
 public:
  FinAb() = default;
  /// Moduli equal to 1 are dropped; zero or negative moduli are rejected.
  static FinAb cyclic_sum(std::vector<std::int64_t> moduli);
  /// Canonical invariant factors of the sum of the given cyclic groups.
  static FinAb canonical(const std::vector<std::int64_t>& moduli);

  const std::vector<std::int64_t>& moduli() const { return m_; }
  std::size_t rank() const { return m_.size(); }
  BigInt order() const;
  bool is_trivial() const { return m_.empty(); }
  bool is_canonical() const;
  FinAb canonical_form() const { return canonical(m_); }
  /// Prime-power cyclic orders of the primary decomposition, sorted.
  std::vector<std::int64_t> elementary_divisors() const;

  IntVec reduce(IntVec v) const;
  IntVec zero() const { return IntVec(m_.size(), 0); }
  /// Every element, in lexicographic order of coordinate vectors.
  std::vector<IntVec> elements() const;

  bool operator==(const FinAb&) const = default;
  /// "0", "Z/2", "Z/2 + Z/4".
  std::string to_string() const;

 private:
  std::vector<std::int64_t> m_;
};

bool isomorphic(const FinAb& a, const FinAb& b);
/// Direct sum; moduli are concatenated.
FinAb direct_sum(const FinAb& a, const FinAb& b);

/// A homomorphism Z/a_1+... -> Z/b_1+... by an integer matrix with one row per
/// target summand and one column per source summand.
class FinAbHom {
 public:
  FinAbHom() = default;
  /// Reduces entries modulo the target and checks that each column is
  /// annihilated by its source modulus; throws DomainError otherwise.
  FinAbHom(FinAb source, FinAb target, IntMat matrix);
  static FinAbHom zero(FinAb source, FinAb target);
  static FinAbHom identity(const FinAb& a);

  const FinAb& source() const { return src_; }
  const FinAb& target() const { return tgt_; }
  const IntMat& matrix() const { return mat_; }
  std::int64_t entry(std::size_t i, std::size_t j) const { return mat_[i][j]; }

  IntVec operator()(const IntVec& x) const;
  /// this o inner
  FinAbHom compose(const FinAbHom& inner) const;
  FinAbHom operator+(const FinAbHom& o) const;
  FinAbHom operator-(const FinAbHom& o) const;
  bool is_zero() const;
  bool operator==(const FinAbHom&) const = default;

 private:
  FinAb src_, tgt_;
  IntMat mat_;
};

/// A subquotient in canonical form with representatives in the ambient group:
/// witnesses[i] maps to the generator of the i-th invariant factor.
struct SubFinAb {
  FinAb group;
  std::vector<IntVec> witnesses;
};

/// ker(g) / im(f) for A --f--> B --g--> C. Throws DomainError("not a complex")
/// unless g o f = 0.
SubFinAb subquotient_cohomology(const FinAbHom& f, const FinAbHom& g);
SubFinAb kernel(const FinAbHom& f);
SubFinAb image(const FinAbHom& f);
SubFinAb cokernel(const FinAbHom& f);

bool is_automorphism(const FinAbHom& f);
/// {m : s(m) = m for every s}. Each s must be an automorphism of M.
SubFinAb fixed_points(const FinAb& m, const std::vector<FinAbHom>& action);
/// Image of m -> sum_{g in P} g(m); `group_elements` lists the action of
/// every element of P, not just generators.
SubFinAb norm_image(const FinAb& m, const std::vector<FinAbHom>& group_elements);

}  // namespace fusion
