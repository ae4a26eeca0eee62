#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fusion/abelian.hpp"
#include "fusion/category.hpp"
#include "fusion/fusion.hpp"
#include "fusion/modules.hpp"

namespace fusion {

/// A subgroup of a finite abelian group, as the sorted codes of its elements.
struct ModSubgroup {
  std::vector<std::uint32_t> codes;
  std::size_t order() const { return codes.size(); }
  bool contains(std::uint32_t c) const;
  bool contains(const ModSubgroup& u) const;
  bool operator==(const ModSubgroup&) const = default;
};

/// Subgroup of M generated by the given codes.
ModSubgroup span_codes(const ElementCodec& codec, const std::vector<std::uint32_t>& gens);
ModSubgroup module_sum(const ElementCodec& codec, const ModSubgroup& a, const ModSubgroup& b);
/// Every subgroup of M (M small).
std::vector<ModSubgroup> module_subgroups(const FinAb& m);

/// Precomputed action tables: image code of every module element under
/// every element of the acting group.
class ActionTable {
 public:
  explicit ActionTable(const GModule& m);
  const GModule& module() const { return *m_; }
  const ElementCodec& codec() const { return codec_; }
  std::uint32_t act(Elem g, std::uint32_t v) const;
  /// C_U(A) for A given by its elements; U defaults to M.
  ModSubgroup centralizer(std::span<const Elem> a) const;
  ModSubgroup centralizer(std::span<const Elem> a, const ModSubgroup& u) const;
  /// [A, U] = <a u - u>.
  ModSubgroup commutator(std::span<const Elem> a, const ModSubgroup& u) const;
  ModSubgroup whole() const;
  bool invariant(std::span<const Elem> a, const ModSubgroup& u) const;
  /// Elements of A acting trivially on U.
  Subgroup kernel_on(const Subgroup& a, const ModSubgroup& u) const;

 private:
  const GModule* m_;
  ElementCodec codec_;
  std::vector<std::uint32_t> table_;  // [position of g][code]
  std::vector<Elem> elems_;
};

bool is_faithful(const GModule& m);

/// d(S), the abelian subgroups of order d(S), and J(S) = <A(S)>.
struct ThompsonData {
  std::size_t d = 0;
  std::vector<Subgroup> a;
  Subgroup j;
};
/// Throws DomainError unless S is a p-group; BoundExceeded past the lattice bound.
ThompsonData thompson(const Subgroup& s, unsigned p, std::size_t lattice_bound = kDefaultLatticeBound);

/// All abelian subgroups of G, sorted.
std::vector<Subgroup> abelian_subgroups(const Subgroup& g);

struct OffenderRecord {
  Subgroup a;
  std::uint64_t score = 0;  // |A| |C_D(A)|
  bool quadratic = false;   // [A, [A, D]] = 1
  bool best = false;        // score(A) >= score(B) for all B <= A
};

struct OffenderScan {
  std::vector<OffenderRecord> records;     // every abelian subgroup, sorted
  std::vector<std::size_t> nontrivial_best;
  Subgroup j_d;                            // J_D(G)
};

/// Scores every abelian subgroup of the acting group. DomainError("action not
/// faithful") or when the module is not a p-group.
OffenderScan best_offenders(const GModule& m, unsigned p);
/// Whether the abelian subgroup A is a best offender, by comparing with all B <= A.
bool is_best_offender(const ActionTable& t, const Subgroup& a);
bool is_quadratic(const ActionTable& t, std::span<const Elem> a);
std::uint64_t offender_score(const ActionTable& t, const Subgroup& a);

/// The action of Gamma/C_Gamma(D) on D by conjugation, as a faithful module.
struct QuotientAction {
  Homomorphism to_quotient;  // Gamma -> Gamma / C_Gamma(D)
  AbelianIso d;
  GModule module;            // acting group: the image of to_quotient
};
/// DomainError unless D is a normal abelian p-subgroup of Gamma.
QuotientAction quotient_action(const Subgroup& gamma, const Subgroup& d, unsigned p);

/// J(Gamma, D): the preimage of J_D(Gamma/C_Gamma(D)).
Subgroup j_gamma_d(const Subgroup& gamma, const Subgroup& d, unsigned p);

struct TimmesfeldResult {
  Subgroup b;                    // C_A([A,V])
  std::uint64_t score_a = 0, score_b = 0;
  ModSubgroup commutator;        // [A, V]
  ModSubgroup cv_a, cv_b;
  bool nontrivial = false, quadratic = false, best = false, equal_scores = false, cv_formula = false,
       proper = false;
  bool ok() const { return nontrivial && quadratic && best && equal_scores && cv_formula && proper; }
};
/// Replacement B = C_A([A,V]) for a nontrivial best offender A acting
/// faithfully on V. DomainError when A is trivial, non-abelian, not a best
/// offender or the action is not faithful; TheoremViolation if a conclusion fails.
TimmesfeldResult timmesfeld(const GModule& m, const Subgroup& a, unsigned p);

enum class SetupKind { invalid, general, reduced };
const char* to_string(SetupKind k);

struct SetupInfo {
  SetupKind kind = SetupKind::invalid;
  Subgroup d;  // Z(Y)
  Subgroup v;  // Omega_1(D)
  std::string reason;  // why it is not reduced or not general
};
SetupInfo setup_classify(const Subgroup& gamma, const Subgroup& s, const Subgroup& y, unsigned p);

struct OffenderIntervals {
  Interval r;  // {R in I(Y,S) : J(R,D) = Y}
  Interval q;  // I(Y,S) minus R
};
/// F must be F_S(Gamma) for a general setup (Gamma,S,Y). DomainError
/// otherwise; TheoremViolation if R or Q is not an F-invariant interval.
OffenderIntervals offender_interval(const FusionSystem& f, const Subgroup& y);

/// V x| G as a permutation group on the elements of V.
struct AffineGroup {
  Subgroup gamma;
  Subgroup translations;              // the normal subgroup V
  std::vector<Elem> translation_of;   // element code -> translation
  Subgroup translations_by(const ModSubgroup& u) const;
};
AffineGroup affine_group(const GModule& m, std::size_t max_order = kDefaultMaxOrder);

/// Checks of the offender lemmas on one faithful action. Every entry of
/// `failures` describes a violated statement.
struct OffenderLemmaReport {
  std::size_t best_offenders = 0;
  std::size_t timmesfeld = 0;         // replacements verified
  std::size_t restriction = 0;        // (A, U) pairs: A/C_A(U) best on U
  std::size_t thompson_images = 0;    // A in A(S) with best image on D
  std::size_t nested_j = 0;           // U <= D pairs with J(Gamma,U) >= J(Gamma,D)
  std::size_t thompson_in_j = 0;      // J(Gamma) <= J(Gamma,D)
  std::size_t quadratic_groups = 0;   // quadratic subgroups found elementary abelian
  std::size_t idempotent = 0;         // J(J(Gamma,D),D) = J(Gamma,D)
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
struct LemmaBounds {
  std::size_t restriction_module = 32;  // largest |D| for the (A,U) scan
  std::size_t affine_order = 4096;      // largest |V x| G|
  std::size_t thompson_order = 256;     // largest |Gamma| for J(Gamma)
};
OffenderLemmaReport check_offender_lemmas(const GModule& m, unsigned p, LemmaBounds b = {});

}  // namespace fusion
