#include "fusion/linking.hpp"

#include <algorithm>
#include <map>

#include "fusion/category.hpp"

namespace fusion {

namespace {

std::vector<Elem> map_key(const FiniteGroup& g, Elem w, const Subgroup& p) {
  std::vector<Elem> k;
  for (Elem x : p.generators()) k.push_back(g.conj(w, x));
  return k;
}

std::vector<Elem> spread(const std::vector<Elem>& v, std::size_t n) {
  if (v.size() <= n) return v;
  std::vector<Elem> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(v[i * v.size() / n]);
  return out;
}

}  // namespace

PCentric p_centric(const Subgroup& g, const Subgroup& p_sub, unsigned p) {
  PCentric out;
  out.centralizer = centralizer(g, p_sub);
  out.center = center(p_sub);
  out.centric = out.center.order() == p_part(out.centralizer.order(), p);
  if (!out.centric) return out;
  const auto& root = g.root();
  std::vector<Elem> pprime;
  for (Elem e : out.centralizer.elements())
    if (root->elem_order(e) % p != 0) pprime.push_back(e);
  try {
    out.c_prime = from_elements(root, pprime);
  } catch (const DomainError&) {
    throw TheoremViolation("p'-elements of C_G(P) do not form a subgroup for " + describe(p_sub));
  }
  if (out.c_prime.order() * out.center.order() != out.centralizer.order() ||
      !intersect(out.c_prime, out.center).is_trivial())
    throw TheoremViolation("C_G(P) is not Z(P) x C'_G(P) for " + describe(p_sub));
  return out;
}

LinkingSystem LinkingSystem::construct(FusionPtr f) {
  LinkingSystem l;
  l.f_ = std::move(f);
  const FusionSystem& F = *l.f_;
  const Subgroup& G = F.ambient();
  for (std::size_t i = 0; i < F.object_count(); ++i) {
    bool pc = p_centric(G, F.object(i), F.prime()).centric;
    if (pc != F.flags(i).f_centric)
      throw TheoremViolation("p-centric and F-centric disagree on " + describe(F.object(i)));
    ++l.compared_;
  }
  for (std::size_t c : F.centric_classes()) {
    const Subgroup& p = F.object(F.class_rep(c));
    PCentric pc = p_centric(G, p, F.prime());
    l.objs_.push_back({p, pc.center, pc.c_prime});
  }
  std::size_t n = l.objs_.size();
  l.mor_.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto& m = l.mor_[i * n + j];
      for (Elem g : transporter(G, l.objs_[i].p, l.objs_[j].p)) m.push_back(l.coset(i, g));
      std::sort(m.begin(), m.end());
      m.erase(std::unique(m.begin(), m.end()), m.end());
    }
  return l;
}

std::size_t LinkingSystem::morphism_count() const {
  std::size_t n = 0;
  for (const auto& m : mor_) n += m.size();
  return n;
}

Elem LinkingSystem::coset(std::size_t i, Elem g) const {
  const auto& root = objs_[i].p.root();
  Elem best = kNoElem;
  for (Elem c : objs_[i].c_prime.elements()) best = std::min(best, root->mul(g, c));
  return best;
}

Elem LinkingSystem::compose(std::size_t i, Elem psi, Elem phi) const {
  return coset(i, objs_[i].p.root()->mul(psi, phi));
}

FMorphism LinkingSystem::project(std::size_t i, std::size_t j, Elem psi) const {
  return FMorphism{objs_[i].p, objs_[j].p, psi};
}

LinkingReport verify_axioms(const LinkingSystem& l, std::size_t triple_budget) {
  LinkingReport rep;
  const FusionSystem& F = l.fusion();
  const FiniteGroup& G = *F.ambient().root();
  std::size_t n = l.object_count();
  rep.objects = n;
  rep.morphisms = l.morphism_count();
  rep.centric_agreement = l.centric_compared();
  auto in = [](const std::vector<Elem>& v, Elem x) { return std::binary_search(v.begin(), v.end(), x); };
  auto fail = [&](std::string s) { rep.failures.push_back(std::move(s)); };

  for (std::size_t i = 0; i < n; ++i) {
    const Subgroup& p = l.object(i);
    const Subgroup& z = l.center(i);
    std::size_t pi = F.index_of(p);
    // (B) and injectivity of delta
    std::vector<Elem> deltas;
    for (Elem x : p.elements()) {
      Elem d = l.delta(i, x);
      deltas.push_back(d);
      if (!in(l.mor(i, i), d) || map_key(G, d, p) != map_key(G, x, p))
        fail("axiom B fails at " + describe(p));
      ++rep.axiom_b;
    }
    std::sort(deltas.begin(), deltas.end());
    if (std::unique(deltas.begin(), deltas.end()) != deltas.end()) fail("delta not injective on " + describe(p));

    for (std::size_t j = 0; j < n; ++j) {
      const Subgroup& q = l.object(j);
      const auto& m = l.mor(i, j);
      std::size_t homs = F.hom(pi, F.index_of(q)).size();
      // (A): free Z(P)-orbits that are exactly the fibers of pi
      std::map<std::vector<Elem>, std::size_t> fiber;
      bool free_ok = true;
      for (Elem phi : m) {
        ++fiber[map_key(G, phi, p)];
        std::vector<Elem> orbit;
        for (Elem zz : z.elements()) {
          Elem c = l.compose(i, phi, l.delta(i, zz));
          if (!in(m, c) || map_key(G, c, p) != map_key(G, phi, p)) free_ok = false;
          orbit.push_back(c);
        }
        std::sort(orbit.begin(), orbit.end());
        if (std::unique(orbit.begin(), orbit.end()) != orbit.end()) free_ok = false;
      }
      bool fibers_ok = fiber.size() == homs && m.size() == homs * z.order();
      for (const auto& [k, c] : fiber) fibers_ok = fibers_ok && c == z.order();
      if (!free_ok || !fibers_ok)
        fail("axiom A fails for Mor(" + describe(p) + ", " + describe(q) + "): " + std::to_string(m.size()) +
             " morphisms, " + std::to_string(homs) + " F-morphisms, |Z(P)| = " + std::to_string(z.order()));
      ++rep.axiom_a;

      for (Elem psi : m) {
        // (C): psi o delta_P(g) = delta_Q(pi(psi)(g)) o psi
        for (Elem x : p.elements()) {
          Elem y = G.conj(psi, x);
          if (!q.contains(y) || l.compose(i, psi, l.delta(i, x)) != l.compose(i, l.delta(j, y), psi))
            fail("axiom C fails for " + describe(p) + " -> " + describe(q));
          ++rep.axiom_c;
        }
        // composition does not depend on the representative of psi
        for (Elem c : l.c_prime(j).elements()) {
          if (l.coset(i, G.mul(c, psi)) != psi) fail("composition not well defined at " + describe(q));
          ++rep.well_defined;
        }
        // units
        if (l.compose(i, l.delta(j, 0), psi) != psi || l.compose(i, psi, l.delta(i, 0)) != psi)
          fail("identity law fails for " + describe(p) + " -> " + describe(q));
      }
    }
  }

  // associativity on composable triples
  double total = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          total += double(l.mor(a, b).size()) * double(l.mor(b, c).size()) * double(l.mor(c, d).size());
  std::size_t cap = total <= double(triple_budget) ? static_cast<std::size_t>(-1) : 3;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (Elem f1 : spread(l.mor(a, b), cap))
        for (std::size_t c = 0; c < n; ++c)
          for (Elem f2 : spread(l.mor(b, c), cap))
            for (std::size_t d = 0; d < n; ++d)
              for (Elem f3 : spread(l.mor(c, d), cap)) {
                if (l.compose(a, f3, l.compose(a, f2, f1)) != l.compose(a, l.compose(b, f3, f2), f1))
                  fail("composition not associative");
                ++rep.associativity;
              }
  return rep;
}

TheoremBReport theorem_b_report(const FusionSystem& f, BarOptions opt, std::size_t out_bound) {
  TheoremBReport r;
  auto c = orbit_category(f);
  auto z = z_functor(f, c);
  auto lims = higher_limits(c, z, 2, opt);
  r.lim1 = lims[1].group;
  r.lim2 = lims[2].group;
  try {
    r.out_sf = fusion_preserving_out(f, out_bound).out_order();
  } catch (const BoundExceeded&) {
  }
  r.consistency = r.lim2.is_trivial() && (f.prime() == 2 || r.lim1.is_trivial());
  return r;
}

}  // namespace fusion
