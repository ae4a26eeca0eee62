#include "fusion/category.hpp"

#include <algorithm>
#include <map>

#include "fusion/abelian.hpp"

namespace fusion {

FiniteCategory FiniteCategory::build(std::string name, std::vector<Subgroup> objects, const WitnessFn& witnesses,
                                     const KeyFn& key) {
  FiniteCategory c;
  c.name_ = std::move(name);
  c.objects_ = std::move(objects);
  std::size_t n = c.objects_.size();
  c.hom_.assign(n * n, {});
  c.out_.assign(n, {});
  c.in_.assign(n, {});
  c.id_.assign(n, 0);
  std::vector<std::map<std::vector<Elem>, MorId>> keys(n * n);

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto ws = witnesses(a, b);
      if (a == b) ws.insert(ws.begin(), FiniteGroup::identity());
      auto& km = keys[a * n + b];
      for (Elem w : ws) {
        auto [it, fresh] = km.emplace(key(a, b, w), static_cast<MorId>(c.mor_.size()));
        if (!fresh) continue;
        MorphismInfo info{a, b, w, a == b && w == FiniteGroup::identity()};
        if (info.identity) c.id_[a] = it->second;
        c.mor_.push_back(info);
        c.hom_[a * n + b].push_back(it->second);
        c.out_[a].push_back(it->second);
        c.in_[b].push_back(it->second);
      }
    }

  c.in_pos_.assign(c.mor_.size(), 0);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t i = 0; i < c.in_[b].size(); ++i) c.in_pos_[c.in_[b][i]] = static_cast<std::uint32_t>(i);

  const FiniteGroup* G = n ? c.objects_[0].root().get() : nullptr;
  c.comp_.assign(c.mor_.size(), {});
  for (MorId g = 0; g < c.mor_.size(); ++g) {
    const auto& mg = c.mor_[g];
    auto& row = c.comp_[g];
    row.reserve(c.in_[mg.src].size());
    for (MorId f : c.in_[mg.src]) {
      const auto& mf = c.mor_[f];
      Elem w = G->mul(mg.witness, mf.witness);
      auto& km = keys[mf.src * n + mg.dst];
      auto it = km.find(key(mf.src, mg.dst, w));
      if (it == km.end()) throw TheoremViolation("composite is not a morphism of " + c.name_);
      row.push_back(it->second);
    }
  }
  c.validate();
  return c;
}

MorId FiniteCategory::compose(MorId g, MorId f) const {
  if (mor_[f].dst != mor_[g].src) throw DomainError("morphisms are not composable");
  return comp_[g][in_pos_[f]];
}

void FiniteCategory::validate() const {
  for (MorId f = 0; f < mor_.size(); ++f) {
    const auto& m = mor_[f];
    if (compose(id_[m.dst], f) != f || compose(f, id_[m.src]) != f)
      throw TheoremViolation("identity law fails in " + name_);
  }
  for (MorId f = 0; f < mor_.size(); ++f)
    for (MorId g : out_[mor_[f].dst]) {
      MorId gf = compose(g, f);
      for (MorId h : out_[mor_[g].dst])
        if (compose(h, gf) != compose(compose(h, g), f)) throw TheoremViolation("associativity fails in " + name_);
    }
}

FiniteCategory FiniteCategory::full_subcategory(const std::vector<std::size_t>& objects) const {
  FiniteCategory c;
  c.name_ = name_ + " (full subcategory)";
  std::size_t n = objects.size();
  std::vector<std::size_t> where(objects_.size(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (objects[i] >= objects_.size() || where[objects[i]] != n) throw DomainError("bad object list");
    where[objects[i]] = i;
    c.objects_.push_back(objects_[objects[i]]);
  }
  c.hom_.assign(n * n, {});
  c.out_.assign(n, {});
  c.in_.assign(n, {});
  c.id_.assign(n, 0);
  std::vector<MorId> renum(mor_.size(), static_cast<MorId>(-1));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (MorId f : mor(objects[a], objects[b])) {
        MorId nf = static_cast<MorId>(c.mor_.size());
        renum[f] = nf;
        MorphismInfo info = mor_[f];
        info.src = a;
        info.dst = b;
        if (info.identity) c.id_[a] = nf;
        c.mor_.push_back(info);
        c.hom_[a * n + b].push_back(nf);
        c.out_[a].push_back(nf);
        c.in_[b].push_back(nf);
      }
  c.in_pos_.assign(c.mor_.size(), 0);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t i = 0; i < c.in_[b].size(); ++i) c.in_pos_[c.in_[b][i]] = static_cast<std::uint32_t>(i);
  c.comp_.assign(c.mor_.size(), {});
  std::vector<MorId> orig(c.mor_.size());
  for (MorId f = 0; f < mor_.size(); ++f)
    if (renum[f] != static_cast<MorId>(-1)) orig[renum[f]] = f;
  for (MorId g = 0; g < c.mor_.size(); ++g) {
    auto& row = c.comp_[g];
    for (MorId f : c.in_[c.mor_[g].src]) row.push_back(renum[compose(orig[g], orig[f])]);
  }
  c.validate();
  return c;
}

// ------------------------------------------------------------ orbit categories

FiniteCategory orbit_category(const FusionSystem& f, OrbitOptions opt) {
  std::vector<std::size_t> objs;
  if (opt.skeletal) {
    for (std::size_t c : f.centric_classes()) objs.push_back(f.class_rep(c));
  } else {
    for (std::size_t i = 0; i < f.object_count(); ++i)
      if (f.flags(i).f_centric) objs.push_back(i);
  }
  std::vector<Subgroup> subs;
  for (std::size_t i : objs) subs.push_back(f.object(i));
  const auto& G = *f.ambient().root();
  auto witnesses = [&](std::size_t a, std::size_t b) { return f.hom(objs[a], objs[b]); };
  auto key = [&](std::size_t a, std::size_t b, Elem g) {
    const Subgroup& P = f.object(objs[a]);
    const Subgroup& Q = f.object(objs[b]);
    std::vector<Elem> best, cur(P.generators().size());
    for (Elem q : Q.elements()) {
      Elem qg = G.mul(q, g);
      for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = G.conj(qg, P.generators()[i]);
      if (best.empty() || cur < best) best = cur;
    }
    return best;
  };
  return FiniteCategory::build("O(F^c)", std::move(subs), witnesses, key);
}

FiniteCategory p_orbit_category(const Subgroup& g, unsigned p) {
  FusionOptions o;
  o.lattice_bound = std::max<std::size_t>(kDefaultLatticeBound, p_part(g.order(), p));
  auto F = FusionSystem::make(g, p, o);
  std::vector<Subgroup> subs;
  for (std::size_t c = 0; c < F->class_count(); ++c) subs.push_back(F->object(F->class_rep(c)));
  const auto& G = *g.root();
  auto witnesses = [&](std::size_t a, std::size_t b) { return transporter(g, subs[a], subs[b]); };
  auto key = [&](std::size_t, std::size_t b, Elem w) {
    Elem best = kNoElem;
    for (Elem q : subs[b].elements()) best = std::min(best, G.mul(q, w));
    return std::vector<Elem>{best};
  };
  return FiniteCategory::build("O_p(G)", subs, witnesses, key);
}

// ------------------------------------------------------------------ functors

void check_functor(const FiniteCategory& c, const AbFunctor& f) {
  if (f.values.size() != c.object_count() || f.maps.size() != c.morphism_count())
    throw TheoremViolation("functor shape does not match the category");
  for (MorId m = 0; m < c.morphism_count(); ++m) {
    const auto& info = c.morphism(m);
    if (!(f.maps[m].source() == f.values[info.dst]) || !(f.maps[m].target() == f.values[info.src]))
      throw TheoremViolation("functor map has the wrong source or target");
  }
  for (std::size_t a = 0; a < c.object_count(); ++a)
    if (!(f.maps[c.identity(a)] == FinAbHom::identity(f.values[a])))
      throw TheoremViolation("functor does not preserve identities");
  for (MorId g = 0; g < c.morphism_count(); ++g) {
    const auto& mg = c.morphism(g);
    if (f.values[mg.src].is_trivial() && f.values[mg.dst].is_trivial()) continue;
    for (MorId h : c.into(mg.src)) {
      if (f.values[c.morphism(h).src].is_trivial()) continue;
      if (!(f.maps[c.compose(g, h)] == f.maps[h].compose(f.maps[g])))
        throw TheoremViolation("functor is not functorial");
    }
  }
}

AbFunctor z_functor(const FusionSystem& f, const FiniteCategory& c, const Interval& r) {
  if (r.member.size() != f.object_count()) throw DomainError("interval does not belong to this fusion system");
  if (!r.f_invariant) throw DomainError("interval is not F-invariant");
  for (std::size_t i : r.members())
    if (!f.flags(i).f_centric) throw DomainError("interval contains a subgroup that is not F-centric");

  const auto& G = *f.ambient().root();
  std::size_t n = c.object_count();
  std::vector<std::optional<AbelianIso>> iso(n);
  AbFunctor out;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!r.contains(f.index_of(c.object(i)))) continue;
    Subgroup z = center(c.object(i));
    iso[i] = as_finab(z);
    out.values[i] = iso[i]->finab();
  }
  out.maps.reserve(c.morphism_count());
  for (MorId m = 0; m < c.morphism_count(); ++m) {
    const auto& info = c.morphism(m);
    const FinAb& src = out.values[info.dst];
    const FinAb& tgt = out.values[info.src];
    if (!iso[info.src] || !iso[info.dst]) {
      out.maps.push_back(FinAbHom::zero(src, tgt));
      continue;
    }
    Elem g = info.witness, gi = G.inv(g);
    auto h = induced_hom(*iso[info.dst], *iso[info.src], [&](Elem z) { return G.conj(gi, z); });
    // Inner automorphisms of Q fix Z(Q), so any coset representative gives the same map.
    for (Elem q : c.object(info.dst).generators()) {
      Elem qgi = G.inv(G.mul(q, g));
      auto h2 = induced_hom(*iso[info.dst], *iso[info.src], [&](Elem z) { return G.conj(qgi, z); });
      if (!(h == h2)) throw TheoremViolation("Z_F is not well defined on an Inn(Q)-orbit");
    }
    out.maps.push_back(std::move(h));
  }
  check_functor(c, out);
  return out;
}

AbFunctor z_functor(const FusionSystem& f, const FiniteCategory& c) { return z_functor(f, c, centric_interval(f)); }

AbFunctor atomic_functor(const FiniteCategory& c, std::size_t at, const FinAb& m,
                         const std::function<FinAbHom(MorId)>& action) {
  if (at >= c.object_count()) throw DomainError("object out of range");
  AbFunctor out;
  out.values.resize(c.object_count());
  out.values[at] = m;
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    const auto& info = c.morphism(f);
    if (info.src == at && info.dst == at) {
      FinAbHom h = action(f);
      if (!(h.source() == m) || !(h.target() == m)) throw DomainError("action not well defined");
      out.maps.push_back(std::move(h));
    } else {
      out.maps.push_back(FinAbHom::zero(out.values[info.dst], out.values[info.src]));
    }
  }
  try {
    check_functor(c, out);
  } catch (const TheoremViolation&) {
    throw DomainError("action not well defined");
  }
  return out;
}

GModule GModule::from_generators(const Subgroup& g, const FinAb& m, const std::vector<FinAbHom>& gen_images) {
  auto gens = g.generators();
  if (gen_images.size() != gens.size()) throw DomainError("one image per generator is required");
  for (const auto& h : gen_images)
    if (!(h.source() == m) || !(h.target() == m)) throw DomainError("action not well defined");
  const auto& G = *g.root();
  auto elems = g.elements();
  auto pos = [&](Elem x) { return static_cast<std::size_t>(std::lower_bound(elems.begin(), elems.end(), x) - elems.begin()); };
  GModule out;
  out.group = g;
  out.module = m;
  out.action.assign(elems.size(), FinAbHom());
  std::vector<char> seen(elems.size(), 0);
  out.action[pos(FiniteGroup::identity())] = FinAbHom::identity(m);
  seen[pos(FiniteGroup::identity())] = 1;
  std::vector<Elem> queue{FiniteGroup::identity()};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    Elem x = queue[q];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Elem y = G.mul(gens[j], x);
      FinAbHom h = gen_images[j].compose(out.action[pos(x)]);
      std::size_t py = pos(y);
      if (!seen[py]) {
        seen[py] = 1;
        out.action[py] = std::move(h);
        queue.push_back(y);
      } else if (!(out.action[py] == h)) {
        throw DomainError("action not well defined");
      }
    }
  }
  return out;
}

GModule GModule::trivial(const Subgroup& g, const FinAb& m) {
  std::vector<FinAbHom> imgs(g.generators().size(), FinAbHom::identity(m));
  return from_generators(g, m, imgs);
}

const FinAbHom& GModule::operator()(Elem g) const {
  auto elems = group.elements();
  auto it = std::lower_bound(elems.begin(), elems.end(), g);
  if (it == elems.end() || *it != g) throw DomainError("element is not in the acting group");
  return action[static_cast<std::size_t>(it - elems.begin())];
}

AbFunctor module_functor(const FiniteCategory& op, const GModule& m) {
  if (op.object_count() == 0 || !op.object(0).is_trivial()) throw DomainError("expected O_p(G) with 1 first");
  const auto& G = *m.group.root();
  return atomic_functor(op, 0, m.module, [&](MorId f) { return m(G.inv(op.morphism(f).witness)); });
}

}  // namespace fusion
