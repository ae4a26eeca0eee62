#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fusion/group.hpp"

namespace fusion {

/// c_g restricted to P, landing in Q.
struct FMorphism {
  Subgroup source;
  Subgroup target;
  Elem witness = 0;
  Elem operator()(Elem x) const { return source.root()->conj(witness, x); }
  /// Equal when the restrictions to the source agree pointwise.
  bool operator==(const FMorphism& o) const;
};

struct StatusFlags {
  bool fully_normalized = false;
  bool fully_centralized = false;
  bool f_centric = false;
};

struct FClass {
  std::vector<Subgroup> members;  // sorted
  Subgroup representative;        // a fully normalized member
};

struct FusionOptions {
  std::size_t lattice_bound = kDefaultLatticeBound;
  /// When false, any p-subgroup S of G is accepted; F_S(G) is then usually
  /// not saturated. Used to exercise the saturation checker.
  bool require_sylow = true;
};

/// The fusion system F_S(G) of a finite group G at a prime p.
class FusionSystem {
 public:
  /// S is the Sylow subgroup chosen by sylow().
  static std::shared_ptr<const FusionSystem> make(const Subgroup& g, unsigned p, FusionOptions opt = {});
  /// S must be a Sylow p-subgroup of G.
  static std::shared_ptr<const FusionSystem> make(const Subgroup& g, const Subgroup& s, unsigned p,
                                                  FusionOptions opt = {});

  const Subgroup& ambient() const { return g_; }
  const Subgroup& sylow() const { return s_; }
  unsigned prime() const { return p_; }
  const Lattice& lattice() const { return lat_; }
  std::size_t object_count() const { return lat_.subgroups.size(); }
  const Subgroup& object(std::size_t i) const { return lat_.subgroups[i]; }
  /// Throws DomainError when P is not a subgroup of S.
  std::size_t index_of(const Subgroup& p) const;

  std::size_t class_count() const { return classes_.size(); }
  std::size_t class_of(std::size_t obj) const { return obj_[obj].cls; }
  const std::vector<std::size_t>& class_members(std::size_t cls) const { return classes_[cls].members; }
  std::size_t class_rep(std::size_t cls) const { return classes_[cls].rep; }
  /// g with g P g^-1 = representative of P's class.
  Elem to_rep(std::size_t obj) const { return obj_[obj].to_rep; }

  StatusFlags flags(std::size_t obj) const { return obj_[obj].flags; }
  std::size_t centralizer_in_s_order(std::size_t obj) const { return obj_[obj].cs; }
  std::size_t normalizer_in_s_order(std::size_t obj) const { return obj_[obj].ns; }
  std::size_t centralizer_in_g_order(std::size_t obj) const { return classes_[obj_[obj].cls].cg.order(); }
  std::size_t normalizer_in_g_order(std::size_t obj) const { return classes_[obj_[obj].cls].ng.order(); }
  /// |Aut_F(P)| and |Aut_S(P)|.
  std::size_t aut_f_order(std::size_t obj) const;
  std::size_t aut_s_order(std::size_t obj) const;

  /// One witness per element of Hom_F(P, Q): elements g of G with
  /// g P g^-1 <= Q, pairwise distinct as maps on P.
  std::vector<Elem> hom(std::size_t p, std::size_t q) const;
  std::vector<FMorphism> hom_morphisms(std::size_t p, std::size_t q) const;
  /// Witnesses for Aut_F(P).
  std::vector<Elem> aut(std::size_t p) const { return hom(p, p); }

  /// Classes whose members are F-centric, in class order.
  std::vector<std::size_t> centric_classes() const;

 private:
  struct Obj {
    std::size_t cls = 0;
    Elem to_rep = 0;
    std::size_t cs = 0, ns = 0;
    StatusFlags flags;
  };
  struct Cls {
    std::vector<std::size_t> members;
    std::size_t rep = 0;
    Subgroup ng, cg;
    std::vector<Elem> aut_reps;  // one per coset of C_G(rep) in N_G(rep)
  };

  Subgroup g_, s_;
  unsigned p_ = 2;
  Lattice lat_;
  std::vector<Obj> obj_;
  std::vector<Cls> classes_;
};

using FusionPtr = std::shared_ptr<const FusionSystem>;

FClass f_class(const FusionSystem& f, const Subgroup& p);
StatusFlags status_flags(const FusionSystem& f, const Subgroup& p);
/// F-centric classes as FClass values.
std::vector<FClass> centric_objects(const FusionSystem& f);

struct SaturationViolation {
  std::string axiom;  // "I" or "II"
  Subgroup subgroup;
  std::optional<Elem> witness;
  std::string detail;
};
struct SaturationReport {
  bool saturated = true;
  std::vector<SaturationViolation> violations;
  std::size_t checked_axiom1 = 0;
  std::size_t checked_axiom2 = 0;
};
SaturationReport check_saturation(const FusionSystem& f);

/// A set of subgroups of S closed under P < Q < R betweenness.
struct Interval {
  std::vector<char> member;  // indexed by lattice position
  bool f_invariant = false;
  bool closed_under_overgroups = false;
  bool contains(std::size_t i) const { return member[i] != 0; }
  std::vector<std::size_t> members() const;
  std::size_t size() const;
};
/// Throws DomainError("not an interval") when betweenness fails.
Interval make_interval(const FusionSystem& f, const std::vector<std::size_t>& members);
Interval make_interval(const FusionSystem& f, const std::function<bool(const Subgroup&)>& pred);
/// I(Y, S) = { P <= S : P >= Y }.
Interval overgroup_interval(const FusionSystem& f, const Subgroup& y);
/// The F-centric subgroups.
Interval centric_interval(const FusionSystem& f);

/// F_{N_S(Q)}(N_G(Q)); Q must be fully normalized.
FusionPtr normalizer_system(const FusionSystem& f, const Subgroup& q);

struct OutSF {
  GroupPtr aut_s;                // Aut(S) acting on positions of S's element list
  Subgroup aut_sf;               // automorphisms preserving F
  Subgroup aut_f_s;              // Aut_F(S) = conjugation by N_G(S)
  Homomorphism to_out;           // Aut(S,F) -> Out(S,F)
  std::size_t out_order() const { return aut_sf.order() / aut_f_s.order(); }
};
/// Throws BoundExceeded when |S| exceeds `bound` (default 2^5).
OutSF fusion_preserving_out(const FusionSystem& f, std::size_t bound = 32);

}  // namespace fusion
