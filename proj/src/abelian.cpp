#include "fusion/abelian.hpp"

namespace fusion {

IntVec AbelianIso::to_vector(Elem e) const {
  auto it = vec_.find(e);
  if (it == vec_.end()) throw DomainError("element is not in the abelian group");
  return it->second;
}

Elem AbelianIso::from_vector(const IntVec& v) const {
  IntVec r = ab_.reduce(v);
  std::size_t code = 0;
  for (std::size_t i = 0; i < r.size(); ++i) code += static_cast<std::size_t>(r[i]) * radix_[i];
  return by_code_[code];
}

AbelianIso as_finab(const Subgroup& a) {
  if (!is_abelian(a)) throw DomainError("as_finab requires an abelian group");
  const auto& G = *a.root();
  auto gens = std::vector<Elem>(a.generators().begin(), a.generators().end());
  std::size_t k = gens.size();

  // Spanning tree from the identity; every tree edge closing on a known
  // element yields a relation among the generators.
  std::unordered_map<Elem, std::vector<BigInt>> coords;
  coords[FiniteGroup::identity()] = std::vector<BigInt>(k, 0);
  std::vector<Elem> order{FiniteGroup::identity()};
  std::vector<std::vector<BigInt>> relations;
  for (std::size_t i = 0; i < order.size(); ++i) {
    Elem x = order[i];
    for (std::size_t j = 0; j < k; ++j) {
      Elem y = G.mul(gens[j], x);
      auto v = coords[x];
      v[j] += 1;
      auto it = coords.find(y);
      if (it == coords.end()) {
        coords.emplace(y, std::move(v));
        order.push_back(y);
      } else {
        std::vector<BigInt> rel(k);
        for (std::size_t t = 0; t < k; ++t) rel[t] = v[t] - it->second[t];
        bool zero = true;
        for (auto& r : rel)
          if (r != 0) zero = false;
        if (!zero) relations.push_back(std::move(rel));
      }
    }
  }
  std::size_t nr = relations.size();
  BigMat R(k, std::vector<BigInt>(nr));
  for (std::size_t j = 0; j < nr; ++j)
    for (std::size_t t = 0; t < k; ++t) R[t][j] = relations[j][t];
  auto s = smith_normal_form(R, k, nr, true);

  // New coordinates are U v; generator i is prod gens^(Uinv column i).
  AbelianIso iso;
  iso.sub_ = a;
  std::vector<std::size_t> keep;
  std::vector<std::int64_t> moduli;
  for (std::size_t i = 0; i < k; ++i) {
    BigInt d = i < s.diag.size() ? s.diag[i] : BigInt(0);
    if (d == 0) throw TheoremViolation("relation lattice of a finite group is not full rank");
    if (d == 1) continue;
    keep.push_back(i);
    moduli.push_back(static_cast<std::int64_t>(d));
  }
  iso.ab_ = FinAb::cyclic_sum(moduli);
  for (std::size_t i : keep) {
    Elem g = FiniteGroup::identity();
    for (std::size_t t = 0; t < k; ++t) {
      BigInt e = s.Uinv[t][i] % G.elem_order(gens[t]);
      if (e < 0) e += G.elem_order(gens[t]);
      g = G.mul(g, G.pow(gens[t], static_cast<std::uint64_t>(e)));
    }
    iso.gens_.push_back(g);
  }
  iso.radix_.resize(moduli.size());
  std::size_t r = 1;
  for (std::size_t i = moduli.size(); i-- > 0;) {
    iso.radix_[i] = static_cast<std::int64_t>(r);
    r *= static_cast<std::size_t>(moduli[i]);
  }
  if (r != a.order()) throw TheoremViolation("invariant factors do not multiply to the group order");
  iso.by_code_.assign(r, kNoElem);
  for (const auto& [e, v] : coords) {
    IntVec w(keep.size());
    std::size_t code = 0;
    for (std::size_t c = 0; c < keep.size(); ++c) {
      BigInt x = 0;
      for (std::size_t t = 0; t < k; ++t) x += s.U[keep[c]][t] * v[t];
      x %= moduli[c];
      if (x < 0) x += moduli[c];
      w[c] = static_cast<std::int64_t>(x);
      code += static_cast<std::size_t>(w[c]) * static_cast<std::size_t>(iso.radix_[c]);
    }
    if (iso.by_code_[code] != kNoElem) throw TheoremViolation("coordinate map is not injective");
    iso.by_code_[code] = e;
    iso.vec_.emplace(e, std::move(w));
  }
  return iso;
}

FinAbHom induced_hom(const AbelianIso& a, const AbelianIso& b, const std::function<Elem(Elem)>& f) {
  const FinAb& A = a.finab();
  const FinAb& B = b.finab();
  IntMat m(B.rank(), IntVec(A.rank(), 0));
  for (std::size_t j = 0; j < A.rank(); ++j) {
    IntVec col = b.to_vector(f(a.generator(j)));
    for (std::size_t i = 0; i < B.rank(); ++i) m[i][j] = col[i];
  }
  FinAbHom h;
  try {
    h = FinAbHom(A, B, std::move(m));
  } catch (const DomainError&) {
    throw DomainError("map is not a homomorphism");
  }
  for (Elem e : a.subgroup().elements())
    if (h(a.to_vector(e)) != b.to_vector(f(e))) throw DomainError("map is not a homomorphism");
  return h;
}

}  // namespace fusion
