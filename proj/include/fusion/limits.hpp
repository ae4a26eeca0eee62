#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusion/category.hpp"
#include "fusion/complex.hpp"

namespace fusion {

enum class LambdaMethod { subgroup_complex, orbit_category };

struct BarOptions {
  std::size_t n_max = 4;
  /// Total number of generators (strings weighted by the rank of F(x_0))
  /// over all degrees before "complex too large"; checked before building.
  std::size_t max_strings = 20'000'000;
  /// How lambda() computes: `orbit_category` runs the bar complex of O_p(G);
  /// `subgroup_complex` uses G-invariant cochains on chains of nontrivial
  /// p-subgroups, C^0 = M^G and C^{j+1} = sum over classes of chains
  /// P_0 < ... < P_j of M^{N_G(P_0, ..., P_j)}. Both give lim over O_p(G) of F_M.
  LambdaMethod lambda_method = LambdaMethod::subgroup_complex;
};

/// Normalized bar complex: C^n is the product of F(x_0) over strings
/// x_0 -> ... -> x_n of nonidentity morphisms with F(x_0) != 0.
struct BarComplex {
  IntegerComplex complex;
  /// strings[n] lists degree-n strings flattened: n morphism ids each, or the
  /// object id for n = 0.
  std::vector<std::vector<std::uint32_t>> strings;
  /// First coordinate of each string's factor inside C^n.
  std::vector<std::vector<std::size_t>> offsets;
  std::size_t string_count(std::size_t n) const { return offsets[n].size(); }
};

BarComplex bar_complex(const FiniteCategory& c, const AbFunctor& f, BarOptions opt = {});

struct LimitResult {
  std::size_t k = 0;
  FinAb group;
  std::string category;
  double ms = 0;
};

LimitResult higher_limit(const FiniteCategory& c, const AbFunctor& f, std::size_t k, BarOptions opt = {});
/// lim^0, lim^1, ..., lim^k_max from one complex.
std::vector<LimitResult> higher_limits(const FiniteCategory& c, const AbFunctor& f, std::size_t k_max,
                                       BarOptions opt = {});
/// lim^0 as compatible families: elements (a_x) with F(f) a_y = a_x for all f: x -> y.
FinAb inverse_limit(const FiniteCategory& c, const AbFunctor& f);

/// Lambda^k(G; M) = lim^k over O_p(G) of F_M.
LimitResult lambda(const GModule& m, unsigned p, std::size_t k, BarOptions opt = {});
std::vector<LimitResult> lambdas(const GModule& m, unsigned p, std::size_t k_max, BarOptions opt = {});
/// The cochain complex used by LambdaMethod::subgroup_complex, degrees 0..n_max.
IntegerComplex subgroup_chain_complex(const GModule& m, unsigned p, std::size_t n_max);

/// One functor on O(F^c) that vanishes off the class of Q, with value an
/// Out_F(Q)-module. `direct` is lim^* over the orbit category, `lambda` is
/// Lambda^*(Out_F(Q); F(Q)) computed on the outer automorphism group.
struct OneClassCheck {
  std::size_t object = 0;  // lattice index of Q
  std::string value;       // "Z(Q)", "Z(Q)/p" or "F_p[Out]"
  std::size_t out_order = 0;
  std::vector<FinAb> direct, lambda;
  bool agree() const { return direct == lambda; }
};
/// Every F-centric class with values Z(Q), Z(Q)/pZ(Q) when it differs, and
/// the regular module F_p[Out_F(Q)] when |Out_F(Q)| <= `regular_bound`.
std::vector<OneClassCheck> one_class_checks(const FusionSystem& f, std::size_t k_max = 2,
                                            std::size_t regular_bound = 6, BarOptions opt = {});

/// The four vanishing and exactness properties of Lambda on one (G, M, M0).
struct LambdaProps {
  bool a_applies = false;  // p does not divide |G|; also run on a Sylow q-subgroup, q != p
  std::size_t a_checked = 0;
  bool b_kernel_p = false;       // p divides |C_G(M)|
  bool b_quotient = false;       // 1 < |C_G(M)| prime to p
  bool c_applies = false;        // O_p(G) != 1
  bool d_checked = false;
  std::vector<FinAb> sub, whole, quotient;  // Lambda^0..k of M0, M, M/M0
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
/// Degrees 0..k_max; the long exact sequence of (d) is checked for exactness
/// of orders through Lambda^k_max(M/M0).
LambdaProps check_lambda_props(const GModule& m, unsigned p, const std::vector<IntVec>& sub_gens,
                               std::size_t k_max = 3);

/// Orders |X_0|, |X_1|, ... along an exact sequence starting 0 -> X_0 admit
/// image orders i_0 = 1, i_{j+1} = |X_j| / i_j, each dividing its term.
bool exact_orders(const std::vector<BigInt>& orders);

/// k(p): 2 for p = 2, 1 for odd p.
struct KofP {
  unsigned value;
  explicit KofP(unsigned p) : value(p == 2 ? 2 : 1) {}
};

struct VanishingReport {
  struct Entry {
    std::size_t k;
    FinAb group;
    bool violation;  // nonzero at k >= k(p)
  };
  std::vector<Entry> entries;
  bool ok() const;
};
/// lim^k(Z_F) for k in [k_lo, k_hi]; throws TheoremViolation on a nonzero
/// group at k >= k(p) when `strict`.
VanishingReport verify_vanishing(const FusionSystem& f, std::size_t k_lo, std::size_t k_hi, bool strict = true,
                                 BarOptions opt = {});

/// A general setup (Gamma, S, Y): S Sylow in Gamma, Y normal in Gamma, Y <= S.
struct Setup {
  Subgroup gamma, s, y;
};
/// Checks the setup and builds F_S(Gamma); DomainError("setup invalid").
FusionPtr setup_system(const Setup& st, unsigned p, std::size_t lattice_bound = 128);

struct GammaStarResult {
  Subgroup gamma_star;
  std::size_t cz_gamma = 0;       // |C_{Z(Y)}(Gamma)|
  std::size_t cz_gamma_star = 0;  // |C_{Z(Y)}(Gamma*)|
  FinAb lim1_r;                   // lim^1(Z_F^R), R = I(Y,S) \ Q
  bool ses_check = false;
};
/// Throws DomainError("setup invalid") unless Y is a normal p-subgroup of
/// Gamma with C_Gamma(Y) <= Y and Y <= S.
void check_setup(const FusionSystem& f, const Subgroup& y);

/// Gamma* = <g in Gamma : gPg^-1 in Q for some P in Q> for F = F_S(Gamma).
/// Q must be an F-invariant interval inside I(Y,S) containing S whose
/// complement R in I(Y,S) is an F-invariant interval with no member of Q
/// below a member of R.
GammaStarResult gamma_star(const FusionSystem& f, const Subgroup& y, const Interval& q, BarOptions opt = {});

}  // namespace fusion
