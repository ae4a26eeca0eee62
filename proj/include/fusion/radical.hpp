#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusion/category.hpp"
#include "fusion/group.hpp"

namespace fusion {

inline constexpr std::size_t kRadicalLatticeBound = 128;

/// P_0 < P_1 < ... < P_k in G.
struct RadicalChain {
  Subgroup ambient;
  unsigned p = 2;
  std::vector<Subgroup> subgroups;
  std::size_t length() const { return subgroups.empty() ? 0 : subgroups.size() - 1; }
};

/// O_p(N_G(P)) = P.
bool is_radical(const Subgroup& g, const Subgroup& p_sub, unsigned p);

/// Radical p-subgroups of G, one per G-class, sorted by order. BoundExceeded
/// when a Sylow p-subgroup exceeds `lattice_bound`.
std::vector<Subgroup> radical_subgroups(const Subgroup& g, unsigned p,
                                        std::size_t lattice_bound = kRadicalLatticeBound);

/// Radical p-chains of length exactly k, one per G-class of chains.
std::vector<RadicalChain> radical_chains(const Subgroup& g, unsigned p, std::size_t k,
                                         std::size_t lattice_bound = kRadicalLatticeBound);
/// Radical p-chains of every length, by length then enumeration order.
std::vector<RadicalChain> all_radical_chains(const Subgroup& g, unsigned p,
                                             std::size_t lattice_bound = kRadicalLatticeBound);
/// Rechecks every chain condition from scratch.
bool is_radical_chain(const RadicalChain& c);

/// An elementary abelian p-group with an action of a p-group.
struct ModuleOverP {
  GModule module;
  unsigned p = 2;
  /// DomainError unless the acting group is a p-group and M has exponent p.
  static ModuleOverP make(GModule m, unsigned p);
};

/// Whether M contains a copy of F_p[P], via the norm map: for a p-group in
/// characteristic p this holds iff sum_{g in P} g is nonzero on M.
bool contains_free(const ModuleOverP& m);
/// Same, for M restricted to the p-subgroup P of its acting group.
bool contains_free(const GModule& m, const Subgroup& p_sub, unsigned p);

/// Whether some orbit of a group of order `order` acting on {0..points-1} by
/// the permutations `gens` has size `order`. The action need not be faithful.
bool free_orbit_check(std::size_t order, const std::vector<std::vector<Point>>& gens, std::size_t points);
/// P acting on the points of its root.
bool free_orbit_check(const Subgroup& p_sub);

/// Brute force: some v in M whose P-translates are linearly independent over
/// F_p, so that F_p[P] v is free of rank one.
bool free_submodule_search(const ModuleOverP& m);

struct FreeDetectReport {
  std::size_t modules = 0;       // norm criterion compared with the search
  std::size_t direct_sums = 0;   // free part of a sum from the summands
  std::size_t permutation = 0;   // free submodule of F_p[X] against a free orbit on X
  std::size_t with_free = 0;     // modules found to contain F_p[P]
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
/// Permutation modules on cosets of every subgroup of P and their sums,
/// Jordan blocks for cyclic P, and submodules and quotients generated by
/// single vectors, all of dimension <= `max_dim`. P runs over the groups of
/// order <= 8 for p = 2 and C_p otherwise.
FreeDetectReport free_detect(unsigned p, std::size_t max_dim = 6);

enum class AltKind { symmetric, alternating };

struct A3Report {
  unsigned m = 0;
  AltKind kind = AltKind::symmetric;
  std::size_t chains_total = 0;
  std::size_t chains_checked = 0;  // length >= 2
  std::vector<std::size_t> by_length;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
/// For every radical 2-chain of length >= 2 in Sigma_m or A_m: P_k / P_0 has no
/// free orbit on the P_0-orbits of {1..m}.
A3Report verify_a3(unsigned m, AltKind kind);

struct A4Entry {
  Subgroup p;
  std::size_t orbits = 0;
  std::size_t rank = 0;       // rk C_{V/Delta}(P), computed directly
  std::size_t fixed_rank = 0; // rk C_V(P)
  std::size_t image_rank = 0; // rk of the image of C_V(P) in V/Delta
  std::size_t hom_rank = 0;   // rk Hom(P/<Fr(P), Q_1..Q_r>, F_2)
  std::string branch;         // "orbits>=3", "orbits=2", "transitive"
  bool sequence_ok = false;   // rank = (orbits - 1) + hom_rank and image_rank = orbits - 1
  bool branch_ok = false;     // the conclusion of the branch
  bool ok() const { return sequence_ok && branch_ok; }
};
struct A4Report {
  unsigned m = 0;
  AltKind kind = AltKind::symmetric;
  std::vector<A4Entry> entries;        // one per radical 2-subgroup class
  std::size_t sequence_checked = 0;    // 2-subgroup classes checked against the exact sequence
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
/// C_{V/Delta}(P) for V = F_2^m and Delta spanned by the sum of all points,
/// over the radical 2-subgroups of Sigma_m or A_m.
A4Report verify_a4(unsigned m, AltKind kind);
/// One entry of the above, for any 2-subgroup P of the symmetric group on m points.
A4Entry a4_entry(const Subgroup& p_sub);

/// A radical chain 1 = P_0 < ... < P_k of G with F_p[P_k] inside M, if any.
std::optional<RadicalChain> free_chain_witness(const GModule& m, unsigned p, std::size_t k,
                                               std::size_t lattice_bound = kRadicalLatticeBound);

GroupPtr alt_or_sym(unsigned m, AltKind kind);

}  // namespace fusion
