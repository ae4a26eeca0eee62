#include "fusion/fusion.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace fusion {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<Elem>& v) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (Elem x : v) {
      h ^= x;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

std::vector<Elem> conj_set(const FiniteGroup& G, Elem g, std::span<const Elem> elems) {
  std::vector<Elem> out;
  out.reserve(elems.size());
  for (Elem x : elems) out.push_back(G.conj(g, x));
  std::sort(out.begin(), out.end());
  return out;
}

bool centralizes(const FiniteGroup& G, Elem g, const Subgroup& p) {
  for (Elem x : p.generators())
    if (G.mul(g, x) != G.mul(x, g)) return false;
  return true;
}

}  // namespace

bool FMorphism::operator==(const FMorphism& o) const {
  if (!(source == o.source) || !(target == o.target)) return false;
  const auto& G = *source.root();
  for (Elem x : source.generators())
    if (G.conj(witness, x) != G.conj(o.witness, x)) return false;
  return true;
}

FusionPtr FusionSystem::make(const Subgroup& g, unsigned p, FusionOptions opt) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  return make(g, fusion::sylow(g, p), p, opt);
}

FusionPtr FusionSystem::make(const Subgroup& g, const Subgroup& s, unsigned p, FusionOptions opt) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  if (!same_root(g, s) || !g.contains(s)) throw DomainError("S is not a subgroup of G");
  if (!is_p_group(s, p) || (opt.require_sylow && s.order() != p_part(g.order(), p))) throw DomainError("S is not a Sylow p-subgroup of G");

  auto f = std::shared_ptr<FusionSystem>(new FusionSystem());
  f->g_ = g;
  f->s_ = s;
  f->p_ = p;
  f->lat_ = subgroup_lattice(s, opt.lattice_bound);
  const auto& G = *g.root();
  const auto& L = f->lat_.subgroups;
  std::size_t n = L.size();
  f->obj_.resize(n);

  std::unordered_map<std::vector<Elem>, std::size_t, VecHash> where;
  for (std::size_t i = 0; i < n; ++i) {
    auto e = L[i].elements();
    where.emplace(std::vector<Elem>(e.begin(), e.end()), i);
    f->obj_[i].cs = centralizer(s, L[i]).order();
    f->obj_[i].ns = normalizer(s, L[i]).order();
  }

  // G-orbits of subgroups, tracking for each member a conjugator from the
  // first member found.
  std::vector<char> done(n, 0);
  std::vector<Elem> from_anchor(n, 0);
  auto ggens = std::vector<Elem>(g.generators().begin(), g.generators().end());
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    Cls c;
    auto e0 = L[i].elements();
    std::unordered_map<std::vector<Elem>, Elem, VecHash> seen;
    std::vector<std::vector<Elem>> queue{std::vector<Elem>(e0.begin(), e0.end())};
    seen.emplace(queue[0], FiniteGroup::identity());
    for (std::size_t q = 0; q < queue.size(); ++q) {
      Elem h = seen[queue[q]];
      for (Elem x : ggens) {
        auto next = conj_set(G, x, queue[q]);
        if (seen.emplace(next, G.mul(x, h)).second) queue.push_back(std::move(next));
      }
    }
    for (auto& [elems, h] : seen) {
      auto it = where.find(elems);
      if (it == where.end()) continue;
      done[it->second] = 1;
      from_anchor[it->second] = h;
      c.members.push_back(it->second);
    }
    std::sort(c.members.begin(), c.members.end());
    std::size_t best = c.members[0];
    for (std::size_t m : c.members)
      if (f->obj_[m].ns > f->obj_[best].ns) best = m;
    c.rep = best;
    Elem a = from_anchor[best];
    for (std::size_t m : c.members) {
      f->obj_[m].cls = f->classes_.size();
      f->obj_[m].to_rep = G.mul(a, G.inv(from_anchor[m]));
    }
    auto st = stabilizer_subgroups(g, L[best]);
    c.ng = st.normalizer;
    c.cg = st.centralizer;
    std::vector<char> covered(G.order(), 0);
    for (Elem x : c.ng.elements()) {
      if (covered[x]) continue;
      c.aut_reps.push_back(x);
      for (Elem y : c.cg.elements()) covered[G.mul(x, y)] = 1;
    }
    f->classes_.push_back(std::move(c));
  }

  for (auto& c : f->classes_) {
    std::size_t max_cs = 0, max_ns = 0;
    for (std::size_t m : c.members) {
      max_cs = std::max(max_cs, f->obj_[m].cs);
      max_ns = std::max(max_ns, f->obj_[m].ns);
    }
    std::size_t z = center(L[c.rep]).order();
    bool centric = true;
    for (std::size_t m : c.members)
      if (f->obj_[m].cs != z) centric = false;
    for (std::size_t m : c.members) {
      auto& fl = f->obj_[m].flags;
      fl.fully_centralized = f->obj_[m].cs == max_cs;
      fl.fully_normalized = f->obj_[m].ns == max_ns;
      fl.f_centric = centric;
    }
  }
  return f;
}

std::size_t FusionSystem::index_of(const Subgroup& p) const {
  auto i = lat_.index_of(p);
  if (!i) throw DomainError("not a subgroup of S");
  return *i;
}

std::size_t FusionSystem::aut_f_order(std::size_t obj) const {
  const auto& c = classes_[obj_[obj].cls];
  return c.aut_reps.size();
}

std::size_t FusionSystem::aut_s_order(std::size_t obj) const { return obj_[obj].ns / obj_[obj].cs; }

std::vector<Elem> FusionSystem::hom(std::size_t p, std::size_t q) const {
  const auto& G = *g_.root();
  const auto& c = classes_[obj_[p].cls];
  const Subgroup& Q = lat_.subgroups[q];
  std::vector<Elem> out;
  if (lat_.subgroups[p].order() > Q.order()) return out;
  Elem tp = obj_[p].to_rep;
  for (std::size_t m : c.members) {
    if (!Q.contains(lat_.subgroups[m])) continue;
    Elem back = G.inv(obj_[m].to_rep);
    for (Elem n : c.aut_reps) out.push_back(G.mul(G.mul(back, n), tp));
  }
  return out;
}

std::vector<FMorphism> FusionSystem::hom_morphisms(std::size_t p, std::size_t q) const {
  std::vector<FMorphism> out;
  for (Elem w : hom(p, q)) out.push_back({lat_.subgroups[p], lat_.subgroups[q], w});
  return out;
}

std::vector<std::size_t> FusionSystem::centric_classes() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < classes_.size(); ++c)
    if (obj_[classes_[c].rep].flags.f_centric) out.push_back(c);
  return out;
}

FClass f_class(const FusionSystem& f, const Subgroup& p) {
  std::size_t c = f.class_of(f.index_of(p));
  FClass out;
  for (std::size_t m : f.class_members(c)) out.members.push_back(f.object(m));
  std::sort(out.members.begin(), out.members.end());
  out.representative = f.object(f.class_rep(c));
  return out;
}

StatusFlags status_flags(const FusionSystem& f, const Subgroup& p) { return f.flags(f.index_of(p)); }

std::vector<FClass> centric_objects(const FusionSystem& f) {
  std::vector<FClass> out;
  for (std::size_t c : f.centric_classes()) out.push_back(f_class(f, f.object(f.class_rep(c))));
  return out;
}

// ------------------------------------------------------------- saturation

SaturationReport check_saturation(const FusionSystem& f) {
  SaturationReport rep;
  const auto& G = *f.ambient().root();
  const Subgroup& S = f.sylow();
  std::size_t n = f.object_count();

  for (std::size_t i = 0; i < n; ++i) {
    auto fl = f.flags(i);
    if (!fl.fully_normalized) continue;
    ++rep.checked_axiom1;
    if (!fl.fully_centralized)
      rep.violations.push_back({"I", f.object(i), std::nullopt, "fully normalized but not fully centralized"});
    if (f.aut_s_order(i) != p_part(f.aut_f_order(i), f.prime()))
      rep.violations.push_back({"I", f.object(i), std::nullopt, "Aut_S(P) is not Sylow in Aut_F(P)"});
  }

  // Axiom II is invariant under precomposing with c_s and postcomposing with
  // c_t for s, t in S, so S-conjugacy representatives suffice on both sides.
  std::vector<std::size_t> s_rep(n, n);
  const auto& L = f.lattice();
  for (std::size_t i = 0; i < n; ++i) {
    if (s_rep[i] != n) continue;
    for (const auto& c : conjugacy_class(S, f.object(i))) s_rep[*L.index_of(c)] = i;
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (s_rep[i] != i) continue;
    const Subgroup& P = f.object(i);
    Subgroup NSP = normalizer(S, P);
    Elem tp = f.to_rep(i);
    std::size_t cls = f.class_of(i);
    std::size_t r = f.class_rep(cls);
    Subgroup CGR = centralizer(f.ambient(), f.object(r));
    for (std::size_t j : f.class_members(cls)) {
      if (s_rep[j] != j || !f.flags(j).fully_centralized) continue;
      const Subgroup& P2 = f.object(j);
      Subgroup NSP2 = normalizer(S, P2);
      for (Elem g : f.hom(i, j)) {
        ++rep.checked_axiom2;
        std::vector<Elem> nphi;
        for (Elem x : NSP.elements()) {
          Elem y = G.conj(g, x);
          bool in_aut_s = false;
          for (Elem s : NSP2.elements())
            if (centralizes(G, G.mul(G.inv(s), y), P2)) {
              in_aut_s = true;
              break;
            }
          if (in_aut_s) nphi.push_back(x);
        }
        Subgroup N = from_elements(S.root(), std::move(nphi));
        bool extends = false;
        for (Elem c : CGR.elements()) {
          Elem h = G.mul(g, G.mul(G.mul(G.inv(tp), c), tp));
          bool ok = true;
          for (Elem x : N.generators())
            if (!S.contains(G.conj(h, x))) {
              ok = false;
              break;
            }
          if (ok) {
            extends = true;
            break;
          }
        }
        if (!extends)
          rep.violations.push_back({"II", P, g, "morphism does not extend to N_phi of order " +
                                                    std::to_string(N.order())});
      }
    }
  }
  rep.saturated = rep.violations.empty();
  return rep;
}

// ---------------------------------------------------------------- intervals

std::vector<std::size_t> Interval::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < member.size(); ++i)
    if (member[i]) out.push_back(i);
  return out;
}

std::size_t Interval::size() const { return static_cast<std::size_t>(std::count(member.begin(), member.end(), 1)); }

Interval make_interval(const FusionSystem& f, const std::vector<std::size_t>& members) {
  const auto& L = f.lattice();
  std::size_t n = f.object_count();
  Interval iv;
  iv.member.assign(n, 0);
  for (std::size_t m : members) {
    if (m >= n) throw DomainError("object index out of range");
    iv.member[m] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!iv.member[i]) continue;
    for (std::size_t j : L.above[i]) {
      if (!iv.member[j]) continue;
      for (std::size_t k : L.above[i])
        if (!iv.member[k] && k != j && L.subgroups[j].contains(L.subgroups[k]))
          throw DomainError("not an interval");
    }
  }
  iv.f_invariant = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t m : f.class_members(f.class_of(i)))
      if (iv.member[m] != iv.member[i]) iv.f_invariant = false;
  iv.closed_under_overgroups = true;
  for (std::size_t i = 0; i < n; ++i)
    if (iv.member[i])
      for (std::size_t j : L.above[i])
        if (!iv.member[j]) iv.closed_under_overgroups = false;
  return iv;
}

Interval make_interval(const FusionSystem& f, const std::function<bool(const Subgroup&)>& pred) {
  std::vector<std::size_t> m;
  for (std::size_t i = 0; i < f.object_count(); ++i)
    if (pred(f.object(i))) m.push_back(i);
  return make_interval(f, m);
}

Interval overgroup_interval(const FusionSystem& f, const Subgroup& y) {
  if (!f.sylow().contains(y)) throw DomainError("Y is not a subgroup of S");
  return make_interval(f, [&](const Subgroup& p) { return p.contains(y); });
}

Interval centric_interval(const FusionSystem& f) {
  std::vector<std::size_t> m;
  for (std::size_t i = 0; i < f.object_count(); ++i)
    if (f.flags(i).f_centric) m.push_back(i);
  return make_interval(f, m);
}

FusionPtr normalizer_system(const FusionSystem& f, const Subgroup& q) {
  std::size_t i = f.index_of(q);
  if (!f.flags(i).fully_normalized) throw DomainError("Q is not fully normalized");
  Subgroup ng = normalizer(f.ambient(), q);
  Subgroup ns = normalizer(f.sylow(), q);
  if (ns.order() != p_part(ng.order(), f.prime()))
    throw TheoremViolation("N_S(Q) is not Sylow in N_G(Q) for fully normalized Q");
  FusionOptions opt;
  opt.lattice_bound = std::max<std::size_t>(f.sylow().order(), kDefaultLatticeBound);
  return FusionSystem::make(ng, ns, f.prime(), opt);
}

// ------------------------------------------------------- Out(S, F)

namespace {

// Automorphisms of S as maps on positions of S's sorted element list.
std::vector<std::vector<Point>> automorphisms(const Subgroup& S, unsigned p) {
  const auto& G = *S.root();
  auto es = S.elements();
  std::size_t m = es.size();
  std::unordered_map<Elem, Point> pos;
  for (std::size_t i = 0; i < m; ++i) pos.emplace(es[i], static_cast<Point>(i));

  // Burnside basis: a minimal generating set.
  Subgroup phi = frattini(S, p);
  std::vector<Elem> gens;
  Subgroup cur = phi;
  for (Elem x : es) {
    if (cur.contains(x)) continue;
    gens.push_back(x);
    std::vector<Elem> all(phi.generators().begin(), phi.generators().end());
    all.insert(all.end(), gens.begin(), gens.end());
    cur = generate(S.root(), all);
  }
  std::size_t k = gens.size();

  std::vector<std::vector<Point>> out;
  std::vector<Elem> images(k);
  // Extends the map s_j -> images[j] for j < depth over <s_0..s_{depth-1}>;
  // returns an empty map on inconsistency.
  auto extend = [&](std::size_t depth) {
    std::unordered_map<Elem, Elem> map{{FiniteGroup::identity(), FiniteGroup::identity()}};
    std::vector<Elem> queue{FiniteGroup::identity()};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      Elem x = queue[q];
      Elem fx = map[x];
      for (std::size_t j = 0; j < depth; ++j) {
        Elem y = G.mul(gens[j], x), fy = G.mul(images[j], fx);
        auto [it, fresh] = map.emplace(y, fy);
        if (fresh)
          queue.push_back(y);
        else if (it->second != fy)
          return std::unordered_map<Elem, Elem>{};
      }
    }
    return map;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == k) {
      auto map = extend(k);
      if (map.size() != m) return;
      std::vector<Point> img(m);
      std::vector<char> hit(m, 0);
      for (std::size_t i = 0; i < m; ++i) {
        Point t = pos.at(map.at(es[i]));
        if (hit[t]) return;
        hit[t] = 1;
        img[i] = t;
      }
      out.push_back(std::move(img));
      return;
    }
    for (Elem t : es) {
      if (G.elem_order(t) != G.elem_order(gens[depth])) continue;
      images[depth] = t;
      if (extend(depth + 1).empty()) continue;
      rec(depth + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

OutSF fusion_preserving_out(const FusionSystem& f, std::size_t bound) {
  const Subgroup& S = f.sylow();
  if (S.order() > bound)
    throw BoundExceeded("S too large for Aut enumeration (" + std::to_string(S.order()) + " > " +
                        std::to_string(bound) + ")");
  const auto& G = *S.root();
  auto es = S.elements();
  std::size_t m = es.size();
  std::unordered_map<Elem, Point> pos;
  for (std::size_t i = 0; i < m; ++i) pos.emplace(es[i], static_cast<Point>(i));

  auto autos = automorphisms(S, f.prime());
  std::vector<Perm> perms;
  for (auto& a : autos) perms.emplace_back(a);
  auto A = FiniteGroup::generate(m, perms, autos.size() + 1, "Aut(S)");
  if (A->order() != autos.size()) throw TheoremViolation("automorphisms of S do not form a group");

  // Hom_F(P, S) for every P, each morphism recorded as the positions of the
  // images of P's sorted elements.
  std::size_t n = f.object_count();
  std::size_t top = *f.lattice().index_of(S);
  std::vector<std::set<std::vector<Point>>> homs(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto pe = f.object(i).elements();
    for (Elem w : f.hom(i, top)) {
      std::vector<Point> img;
      for (Elem x : pe) img.push_back(pos.at(G.conj(w, x)));
      homs[i].insert(std::move(img));
    }
  }

  std::vector<Elem> keep;
  for (std::size_t a = 0; a < A->order(); ++a) {
    auto al = A->images(static_cast<Elem>(a));
    bool preserves = true;
    for (std::size_t i = 0; i < n && preserves; ++i) {
      auto pe = f.object(i).elements();
      std::vector<Elem> moved;
      for (Elem x : pe) moved.push_back(es[al[pos.at(x)]]);
      std::vector<Elem> sorted = moved;
      std::sort(sorted.begin(), sorted.end());
      std::size_t j = *f.lattice().index_of(Subgroup::make(S.root(), sorted));
      // alpha phi alpha^-1 on alpha(P), listed along alpha(P)'s sorted elements.
      std::vector<std::size_t> order(pe.size());
      for (std::size_t t = 0; t < pe.size(); ++t)
        order[static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), moved[t]) - sorted.begin())] = t;
      for (const auto& img : homs[i]) {
        std::vector<Point> conj(pe.size());
        for (std::size_t u = 0; u < pe.size(); ++u) conj[u] = al[img[order[u]]];
        if (!homs[j].count(conj)) {
          preserves = false;
          break;
        }
      }
    }
    if (preserves) keep.push_back(static_cast<Elem>(a));
  }

  OutSF out;
  out.aut_s = A;
  out.aut_sf = from_elements(A, keep);
  std::vector<Elem> inner;
  Subgroup ngs = normalizer(f.ambient(), S);
  for (Elem x : ngs.elements()) {
    std::vector<Point> img(m);
    for (std::size_t i = 0; i < m; ++i) img[i] = pos.at(G.conj(x, es[i]));
    inner.push_back(A->index_of(Perm(img)));
  }
  std::sort(inner.begin(), inner.end());
  inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
  out.aut_f_s = from_elements(A, inner);
  if (!out.aut_sf.contains(out.aut_f_s) || !is_normal(out.aut_f_s, out.aut_sf))
    throw TheoremViolation("Aut_F(S) is not normal in Aut(S,F)");
  out.to_out = quotient_hom(out.aut_sf, out.aut_f_s);
  return out;
}

}  // namespace fusion
