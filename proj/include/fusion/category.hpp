#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fusion/finab.hpp"
#include "fusion/fusion.hpp"

namespace fusion {

using MorId = std::uint32_t;

struct MorphismInfo {
  std::size_t src = 0, dst = 0;
  Elem witness = 0;  // a group element inducing the morphism
  bool identity = false;
};

/// A finite category whose objects stand for subgroups of one root group and
/// whose morphisms are orbits of conjugating elements. Built skeletal unless
/// requested otherwise; composition is tabulated.
class FiniteCategory {
 public:
  /// Canonical key of the morphism induced by witness g from object a to b.
  using KeyFn = std::function<std::vector<Elem>(std::size_t a, std::size_t b, Elem g)>;
  /// Candidate witnesses for morphisms a -> b (duplicates allowed).
  using WitnessFn = std::function<std::vector<Elem>(std::size_t a, std::size_t b)>;

  /// Enumerates, tabulates and validates (identity laws, associativity).
  /// Throws TheoremViolation when an axiom fails.
  static FiniteCategory build(std::string name, std::vector<Subgroup> objects, const WitnessFn& witnesses,
                              const KeyFn& key);

  const std::string& name() const { return name_; }
  std::size_t object_count() const { return objects_.size(); }
  const Subgroup& object(std::size_t i) const { return objects_[i]; }
  std::size_t morphism_count() const { return mor_.size(); }
  const MorphismInfo& morphism(MorId f) const { return mor_[f]; }
  std::span<const MorId> mor(std::size_t a, std::size_t b) const { return hom_[a * objects_.size() + b]; }
  std::span<const MorId> out_of(std::size_t a) const { return out_[a]; }
  std::span<const MorId> into(std::size_t b) const { return in_[b]; }
  MorId identity(std::size_t a) const { return id_[a]; }
  /// g o f for f: a -> b and g: b -> c.
  MorId compose(MorId g, MorId f) const;
  /// Aut_C(a) as morphism ids.
  std::span<const MorId> aut(std::size_t a) const { return mor(a, a); }

  /// Full subcategory on the listed objects (in the given order).
  FiniteCategory full_subcategory(const std::vector<std::size_t>& objects) const;

 private:
  void validate() const;

  std::string name_;
  std::vector<Subgroup> objects_;
  std::vector<MorphismInfo> mor_;
  std::vector<std::vector<MorId>> hom_, out_, in_;
  std::vector<MorId> id_;
  std::vector<std::uint32_t> in_pos_;          // position of f within into(dst f)
  std::vector<std::vector<MorId>> comp_;       // comp_[g][in_pos_[f]] = g o f
};

struct OrbitOptions {
  /// One object per F-class when true; every F-centric subgroup otherwise.
  bool skeletal = true;
};

/// O(F^c): F-centric objects, morphisms Inn(Q)\Hom_F(P,Q).
FiniteCategory orbit_category(const FusionSystem& f, OrbitOptions opt = {});
/// O_p(G): p-subgroups of G up to conjugacy (including 1), morphisms Q\{g : gPg^-1 <= Q}.
FiniteCategory p_orbit_category(const Subgroup& g, unsigned p);

/// A contravariant functor to finite abelian groups: a morphism a -> b maps
/// value(b) -> value(a).
struct AbFunctor {
  std::vector<FinAb> values;
  std::vector<FinAbHom> maps;  // indexed by MorId
};

/// Throws TheoremViolation unless map(id) = id and map(g o f) = map(f) o map(g).
void check_functor(const FiniteCategory& c, const AbFunctor& f);

/// Z_F^R on an orbit category of F. R must be F-invariant and consist of
/// F-centric subgroups; DomainError otherwise.
AbFunctor z_functor(const FusionSystem& f, const FiniteCategory& c, const Interval& r);
/// Z_F on O(F^c).
AbFunctor z_functor(const FusionSystem& f, const FiniteCategory& c);

/// Value M at `at`, zero elsewhere. `action` gives the map M -> M assigned
/// to each automorphism of `at`; DomainError("action not well defined") when
/// this is not contravariantly functorial.
AbFunctor atomic_functor(const FiniteCategory& c, std::size_t at, const FinAb& m,
                         const std::function<FinAbHom(MorId)>& action);

/// A finite group acting on the left of a finite abelian group.
struct GModule {
  Subgroup group;
  FinAb module;
  std::vector<FinAbHom> action;  // indexed by position in group.elements()

  /// Extends generator images to the whole group; DomainError("action not
  /// well defined") when the images do not define a homomorphism.
  static GModule from_generators(const Subgroup& g, const FinAb& m, const std::vector<FinAbHom>& gen_images);
  static GModule trivial(const Subgroup& g, const FinAb& m);
  const FinAbHom& operator()(Elem g) const;
};

/// F_M on O_p(G): the atomic functor at the trivial subgroup, with a
/// morphism g acting as g^-1.
AbFunctor module_functor(const FiniteCategory& op, const GModule& m);

}  // namespace fusion
