#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fusion/errors.hpp"
#include "fusion/perm.hpp"

namespace fusion {

using Elem = std::uint32_t;
inline constexpr Elem kNoElem = 0xFFFFFFFFu;
inline constexpr std::size_t kDefaultMaxOrder = 10000;
inline constexpr std::size_t kDefaultLatticeBound = 64;

/// A fully enumerated permutation group. Elements are sorted
/// lexicographically by image array, so the identity is always index 0.
class FiniteGroup {
 public:
  /// Closure of `gens` acting on `degree` points. Throws BoundExceeded
  /// ("group too large") once the closure passes `max_order`.
  static std::shared_ptr<const FiniteGroup> generate(std::size_t degree, const std::vector<Perm>& gens,
                                                     std::size_t max_order = kDefaultMaxOrder,
                                                     std::string name = {});

  std::size_t order() const { return order_; }
  std::size_t degree() const { return degree_; }
  const std::string& name() const { return name_; }
  std::uint64_t id() const { return id_; }

  std::span<const Point> images(Elem e) const {
    return {data_.data() + static_cast<std::size_t>(e) * degree_, degree_};
  }
  Perm perm(Elem e) const;
  Point apply(Elem e, Point x) const { return data_[static_cast<std::size_t>(e) * degree_ + x]; }

  static constexpr Elem identity() { return 0; }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const { return inv_[a]; }
  /// g x g^-1
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv_[g]); }
  Elem pow(Elem a, std::uint64_t k) const;
  std::uint32_t elem_order(Elem a) const { return ord_[a]; }

  std::optional<Elem> find(std::span<const Point> img) const;
  /// Throws DomainError if `p` is not an element.
  Elem index_of(const Perm& p) const;

  /// Generators as given (after dropping redundant ones), as element indices.
  const std::vector<Elem>& generators() const { return gens_; }

 private:
  FiniteGroup() = default;
  std::size_t slot_of(std::span<const Point> img) const;

  std::size_t degree_ = 0;
  std::size_t order_ = 0;
  std::string name_;
  std::uint64_t id_ = 0;
  std::vector<Point> data_;
  std::vector<Elem> table_;  // open addressing, kNoElem marks empty
  std::vector<Elem> inv_;
  std::vector<std::uint32_t> ord_;
  std::vector<Elem> mul_;    // dense table when order is small, else empty
  std::vector<Elem> gens_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A subgroup of a root FiniteGroup, as a sorted set of element indices.
/// Cheap to copy; the data is shared and immutable.
class Subgroup {
 public:
  Subgroup() = default;

  const GroupPtr& root() const { return d_->root; }
  std::size_t order() const { return d_->elems.size(); }
  std::span<const Elem> elements() const { return d_->elems; }
  std::span<const Elem> generators() const { return d_->gens; }
  bool contains(Elem e) const { return (d_->bits[e >> 6] >> (e & 63)) & 1u; }
  bool contains(const Subgroup& other) const;
  std::uint64_t hash() const { return d_->hash; }
  bool valid() const { return static_cast<bool>(d_); }
  bool is_trivial() const { return order() == 1; }

  bool operator==(const Subgroup& o) const;
  /// Total order: by order, then lexicographically by element indices.
  bool operator<(const Subgroup& o) const;

  /// Trusted constructor: `elems` must be sorted and closed.
  static Subgroup make(GroupPtr root, std::vector<Elem> elems, std::vector<Elem> gens = {});

 private:
  struct Data {
    GroupPtr root;
    std::vector<Elem> elems;
    std::vector<Elem> gens;
    std::vector<std::uint64_t> bits;
    std::uint64_t hash = 0;
  };
  std::shared_ptr<const Data> d_;
};

struct SubgroupHash {
  std::size_t operator()(const Subgroup& s) const { return static_cast<std::size_t>(s.hash()); }
};

Subgroup whole(const GroupPtr& g);
Subgroup trivial(const GroupPtr& g);
Subgroup generate(const GroupPtr& g, std::span<const Elem> gens);
/// Checks closure; throws DomainError when `elems` is not a subgroup.
Subgroup from_elements(const GroupPtr& g, std::vector<Elem> elems);
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
/// g P g^-1
Subgroup conjugate(const Subgroup& p, Elem g);
/// C_H(P) and N_H(P). P need not lie in H.
Subgroup centralizer(const Subgroup& h, const Subgroup& p);
Subgroup normalizer(const Subgroup& h, const Subgroup& p);
Subgroup center(const Subgroup& h);
bool is_normal(const Subgroup& p, const Subgroup& h);
bool is_abelian(const Subgroup& h);
bool is_p_group(const Subgroup& h, unsigned p);
bool is_elementary_abelian(const Subgroup& h, unsigned p);
bool same_root(const Subgroup& a, const Subgroup& b);

struct Stabilizers {
  Subgroup centralizer;
  Subgroup normalizer;
};
/// Requires P <= G.
Stabilizers stabilizer_subgroups(const Subgroup& g, const Subgroup& p);

Subgroup sylow(const Subgroup& h, unsigned p);
/// Largest normal p-subgroup.
Subgroup o_p(const Subgroup& h, unsigned p);
/// Requires a p-group.
Subgroup frattini(const Subgroup& h, unsigned p);
/// Requires an abelian p-group.
Subgroup omega_1(const Subgroup& h, unsigned p);
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);

struct CharacteristicSubgroups {
  Subgroup center;
  Subgroup o_p;
  std::optional<Subgroup> frattini;  // only for p-groups
  std::optional<Subgroup> omega_1;   // only for abelian p-groups
};
CharacteristicSubgroups characteristic_subgroups(const Subgroup& g, unsigned p);

/// All g in H with g P g^-1 <= Q.
std::vector<Elem> transporter(const Subgroup& h, const Subgroup& p, const Subgroup& q);
/// One representative per coset g C_H(P) of the transporter, each the least
/// element index of its coset; sorted.
std::vector<Elem> transporter_set(const Subgroup& h, const Subgroup& p, const Subgroup& q);

/// Distinct conjugates h P h^-1 for h in H.
std::vector<Subgroup> conjugacy_class(const Subgroup& h, const Subgroup& p);

/// Element set product A*B as a sorted vector.
std::vector<Elem> product_set(const Subgroup& a, const Subgroup& b);

struct Lattice {
  std::vector<Subgroup> subgroups;             // sorted by (order, elements)
  std::vector<std::vector<std::size_t>> above;  // above[i]: indices j != i with subgroups[i] < subgroups[j]
  std::optional<std::size_t> index_of(const Subgroup& s) const;
};
/// All subgroups of S. Throws BoundExceeded("lattice too large") when |S| > bound.
Lattice subgroup_lattice(const Subgroup& s, std::size_t bound = kDefaultLatticeBound);

/// Orbits of H on points, each sorted, listed by least point.
std::vector<std::vector<Point>> orbits(const Subgroup& h);

/// The p-part of n.
std::uint64_t p_part(std::uint64_t n, unsigned p);
bool is_prime(unsigned p);
std::vector<unsigned> prime_divisors(std::uint64_t n);

/// A homomorphism from a subgroup of one root into another root group.
class Homomorphism {
 public:
  Homomorphism() = default;
  Homomorphism(Subgroup source, GroupPtr target, std::vector<Elem> image_by_root);
  const Subgroup& source() const { return src_; }
  const GroupPtr& target() const { return tgt_; }
  Elem operator()(Elem e) const;
  Subgroup image() const;
  Subgroup image(const Subgroup& of) const;
  Subgroup kernel() const;
  /// Preimage in the source of a subgroup of the target.
  Subgroup preimage(const Subgroup& of) const;

 private:
  Subgroup src_;
  GroupPtr tgt_;
  std::vector<Elem> img_;  // indexed by root element of the source; kNoElem outside
};

/// Permutation image of H under an action: `act(h, x)` gives the image of
/// point x in {0..points-1} under h. The action must be a homomorphism.
Homomorphism action_hom(const Subgroup& h, std::size_t points,
                        const std::function<Point(Elem, Point)>& act, std::size_t max_order = kDefaultMaxOrder);
/// H -> H/K realised through the action on left cosets of K. Requires K normal in H.
Homomorphism quotient_hom(const Subgroup& h, const Subgroup& k);

std::string describe(const Subgroup& s);

}  // namespace fusion
