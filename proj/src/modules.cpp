#include "fusion/modules.hpp"

#include <algorithm>
#include <unordered_map>

namespace fusion {

ElementCodec::ElementCodec(const FinAb& m) : m_(m) {
  std::uint64_t n = 1;
  for (auto q : m.moduli()) {
    n *= static_cast<std::uint64_t>(q);
    if (n > (1u << 24)) throw BoundExceeded("module too large for element codes");
  }
  size_ = static_cast<std::uint32_t>(n);
}

std::uint32_t ElementCodec::encode(const IntVec& v) const {
  std::uint64_t c = 0;
  const auto& q = m_.moduli();
  for (std::size_t i = 0; i < q.size(); ++i) {
    std::int64_t x = v[i] % q[i];
    if (x < 0) x += q[i];
    c = c * static_cast<std::uint64_t>(q[i]) + static_cast<std::uint64_t>(x);
  }
  return static_cast<std::uint32_t>(c);
}

IntVec ElementCodec::decode(std::uint32_t c) const {
  const auto& q = m_.moduli();
  IntVec v(q.size());
  for (std::size_t i = q.size(); i-- > 0;) {
    v[i] = static_cast<std::int64_t>(c % static_cast<std::uint32_t>(q[i]));
    c /= static_cast<std::uint32_t>(q[i]);
  }
  return v;
}

std::uint32_t ElementCodec::add(std::uint32_t a, std::uint32_t b) const {
  IntVec x = decode(a), y = decode(b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return encode(x);
}

std::uint32_t ElementCodec::neg(std::uint32_t a) const {
  IntVec x = decode(a);
  for (auto& e : x) e = -e;
  return encode(x);
}

QuotientMap quotient_map(const FinAb& m, const std::vector<IntVec>& gens) {
  std::size_t r = m.rank();
  std::size_t c = r + gens.size();
  QuotientMap out;
  if (r == 0) {
    out.projection = FinAbHom::zero(m, FinAb());
    return out;
  }
  BigMat rel(r, std::vector<BigInt>(c, 0));
  for (std::size_t i = 0; i < r; ++i) rel[i][i] = m.moduli()[i];
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < r; ++i) rel[i][r + j] = gens[j][i];
  auto s = smith_normal_form(rel, r, c, true);
  std::vector<std::int64_t> mods;
  IntMat proj;
  for (std::size_t i = 0; i < r; ++i) {
    if (s.diag[i] == 1) continue;
    auto d = static_cast<std::int64_t>(s.diag[i]);
    mods.push_back(d);
    IntVec row(r);
    for (std::size_t j = 0; j < r; ++j) {
      BigInt x = s.U[i][j] % d;
      if (x < 0) x += d;
      row[j] = static_cast<std::int64_t>(x);
    }
    proj.push_back(std::move(row));
    IntVec lift(r);
    for (std::size_t j = 0; j < r; ++j) {
      BigInt x = s.Uinv[j][i] % m.moduli()[j];
      if (x < 0) x += m.moduli()[j];
      lift[j] = static_cast<std::int64_t>(x);
    }
    out.lifts.push_back(std::move(lift));
  }
  out.group = FinAb::cyclic_sum(mods);
  out.projection = FinAbHom(m, out.group, proj);
  return out;
}

GModule module_from_action(const Subgroup& g, const FinAb& m, const std::function<FinAbHom(Elem)>& act) {
  GModule out;
  out.group = g;
  out.module = m;
  for (Elem x : g.elements()) out.action.push_back(act(x));
  const auto& G = *g.root();
  // Homomorphism check on generators against every element.
  for (Elem s : g.generators())
    for (Elem x : g.elements())
      if (!(out(G.mul(s, x)) == out(s).compose(out(x)))) throw DomainError("action not well defined");
  return out;
}

GModule permutation_module(const Subgroup& g, std::int64_t q) {
  const auto& G = *g.root();
  std::size_t n = G.degree();
  FinAb m = FinAb::cyclic_sum(std::vector<std::int64_t>(n, q));
  return module_from_action(g, m, [&](Elem x) {
    IntMat a(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) a[G.apply(x, static_cast<Point>(i))][i] = 1;
    return FinAbHom(m, m, a);
  });
}

GModule sign_module(const Subgroup& g, std::int64_t q) {
  const auto& G = *g.root();
  FinAb m = FinAb::cyclic_sum({q});
  return module_from_action(g, m, [&](Elem x) {
    // Sign from the cycle structure.
    std::size_t n = G.degree(), cycles = 0;
    std::vector<char> seen(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (Point j = static_cast<Point>(i); !seen[j]; j = G.apply(x, j)) seen[j] = 1;
    }
    std::int64_t s = (n - cycles) % 2 ? q - 1 : 1;
    return FinAbHom(m, m, {{s}});
  });
}

GModule direct_sum(const GModule& a, const GModule& b) {
  if (!(a.group == b.group)) throw DomainError("modules over different groups");
  FinAb m = fusion::direct_sum(a.module, b.module);
  std::size_t ra = a.module.rank(), rb = b.module.rank();
  GModule out;
  out.group = a.group;
  out.module = m;
  for (std::size_t k = 0; k < a.action.size(); ++k) {
    IntMat mat(ra + rb, IntVec(ra + rb, 0));
    for (std::size_t i = 0; i < ra; ++i)
      for (std::size_t j = 0; j < ra; ++j) mat[i][j] = a.action[k].entry(i, j);
    for (std::size_t i = 0; i < rb; ++i)
      for (std::size_t j = 0; j < rb; ++j) mat[ra + i][ra + j] = b.action[k].entry(i, j);
    out.action.emplace_back(m, m, mat);
  }
  return out;
}

SubmodulePair submodule_pair(const GModule& m, const std::vector<IntVec>& gens) {
  const FinAb& M = m.module;
  ElementCodec codec(M);
  // The G-orbit of the generators spans M0.
  std::vector<IntVec> orbit;
  for (const auto& v : gens)
    for (const auto& a : m.action) orbit.push_back(a(M.reduce(v)));
  std::int64_t e = 1;
  for (auto q : M.moduli()) e = std::max(e, q);
  FinAb src = FinAb::cyclic_sum(std::vector<std::int64_t>(orbit.size(), e));
  IntMat mat(M.rank(), IntVec(orbit.size()));
  for (std::size_t j = 0; j < orbit.size(); ++j)
    for (std::size_t i = 0; i < M.rank(); ++i) mat[i][j] = orbit[j][i];
  SubFinAb img = image(FinAbHom(src, M, mat));

  SubmodulePair out;
  out.whole = m;
  out.sub_basis = img.witnesses;
  // Coordinates of every element of M0 in the basis of the witnesses.
  std::unordered_map<std::uint32_t, IntVec> coords;
  for (const auto& c : img.group.elements()) {
    IntVec v = M.zero();
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) v[j] += c[i] * img.witnesses[i][j];
    coords.emplace(codec.encode(v), c);
  }
  const FinAb& M0 = img.group;
  out.sub.group = m.group;
  out.sub.module = M0;
  for (const auto& a : m.action) {
    IntMat sm(M0.rank(), IntVec(M0.rank()));
    for (std::size_t j = 0; j < M0.rank(); ++j) {
      auto it = coords.find(codec.encode(a(img.witnesses[j])));
      if (it == coords.end()) throw TheoremViolation("submodule is not G-invariant");
      for (std::size_t i = 0; i < M0.rank(); ++i) sm[i][j] = it->second[i];
    }
    out.sub.action.emplace_back(M0, M0, sm);
  }
  QuotientMap q = quotient_map(M, img.witnesses);
  out.quotient.group = m.group;
  out.quotient.module = q.group;
  for (const auto& a : m.action) {
    IntMat qm(q.group.rank(), IntVec(q.group.rank()));
    for (std::size_t j = 0; j < q.group.rank(); ++j) {
      IntVec y = q.projection(a(q.lifts[j]));
      for (std::size_t i = 0; i < q.group.rank(); ++i) qm[i][j] = y[i];
    }
    out.quotient.action.emplace_back(q.group, q.group, qm);
  }
  return out;
}

GModule module_from_matrices(const FinAb& m, const std::vector<FinAbHom>& gens, std::size_t max_order,
                             std::string name) {
  ElementCodec codec(m);
  std::vector<IntVec> vecs(codec.size());
  for (std::uint32_t c = 0; c < codec.size(); ++c) vecs[c] = codec.decode(c);
  std::vector<Perm> perms;
  for (const auto& h : gens) {
    if (!is_automorphism(h)) throw DomainError("generator is not an automorphism");
    std::vector<Point> img(codec.size());
    for (std::uint32_t c = 0; c < codec.size(); ++c) img[c] = static_cast<Point>(codec.encode(h(vecs[c])));
    perms.emplace_back(std::move(img));
  }
  GroupPtr g = FiniteGroup::generate(codec.size(), perms, max_order, std::move(name));
  // Column j of an element's matrix is the image of the j-th unit vector.
  std::vector<std::uint32_t> units;
  for (std::size_t j = 0; j < m.rank(); ++j) {
    IntVec e = m.zero();
    e[j] = 1;
    units.push_back(codec.encode(e));
  }
  return module_from_action(whole(g), m, [&](Elem x) {
    IntMat a(m.rank(), IntVec(m.rank()));
    for (std::size_t j = 0; j < m.rank(); ++j) {
      IntVec col = vecs[g->apply(x, static_cast<Point>(units[j]))];
      for (std::size_t i = 0; i < m.rank(); ++i) a[i][j] = col[i];
    }
    return FinAbHom(m, m, a);
  });
}

Subgroup action_kernel(const GModule& m) {
  std::vector<Elem> k;
  auto el = m.group.elements();
  FinAbHom id = FinAbHom::identity(m.module);
  for (std::size_t i = 0; i < el.size(); ++i)
    if (m.action[i] == id) k.push_back(el[i]);
  return Subgroup::make(m.group.root(), std::move(k));
}

QuotientModule quotient_module(const GModule& m, const Subgroup& h) {
  if (!action_kernel(m).contains(h)) throw DomainError("H does not act trivially");
  QuotientModule out;
  out.to_quotient = quotient_hom(m.group, h);
  Subgroup img = out.to_quotient.image();
  std::vector<Elem> pre(img.root()->order(), kNoElem);
  for (Elem g : m.group.elements()) {
    Elem x = out.to_quotient(g);
    if (pre[x] == kNoElem) pre[x] = g;
  }
  out.module = module_from_action(img, m.module, [&](Elem x) { return m(pre[x]); });
  return out;
}

GModule restrict_module(const GModule& m, const Subgroup& h) {
  if (!m.group.contains(h)) throw DomainError("restriction to a non-subgroup");
  GModule out;
  out.group = h;
  out.module = m.module;
  for (Elem e : h.elements()) out.action.push_back(m(e));
  return out;
}

}  // namespace fusion
