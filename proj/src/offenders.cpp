#include "fusion/offenders.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace fusion {

// ---- element codes ----------------------------------------------------------

bool ModSubgroup::contains(std::uint32_t c) const { return std::binary_search(codes.begin(), codes.end(), c); }

bool ModSubgroup::contains(const ModSubgroup& u) const {
  return std::includes(codes.begin(), codes.end(), u.codes.begin(), u.codes.end());
}

ModSubgroup span_codes(const ElementCodec& codec, const std::vector<std::uint32_t>& gens) {
  std::vector<char> in(codec.size(), 0);
  std::vector<std::uint32_t> elems{0};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (auto g : gens) {
      auto y = codec.add(elems[i], g);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  return {std::move(elems)};
}

ModSubgroup module_sum(const ElementCodec& codec, const ModSubgroup& a, const ModSubgroup& b) {
  std::vector<std::uint32_t> gens = a.codes;
  gens.insert(gens.end(), b.codes.begin(), b.codes.end());
  return span_codes(codec, gens);
}

std::vector<ModSubgroup> module_subgroups(const FinAb& m) {
  ElementCodec codec(m);
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<ModSubgroup> out{span_codes(codec, {})};
  seen.insert(out[0].codes);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::uint32_t x = 1; x < codec.size(); ++x) {
      if (out[i].contains(x)) continue;
      std::vector<std::uint32_t> gens = out[i].codes;
      gens.push_back(x);
      ModSubgroup u = span_codes(codec, gens);
      if (seen.insert(u.codes).second) out.push_back(std::move(u));
    }
  std::sort(out.begin(), out.end(), [](const ModSubgroup& a, const ModSubgroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.codes < b.codes;
  });
  return out;
}

// ---- action tables ----------------------------------------------------------

ActionTable::ActionTable(const GModule& m) : m_(&m), codec_(m.module) {
  auto el = m.group.elements();
  elems_.assign(el.begin(), el.end());
  std::uint32_t n = codec_.size();
  table_.resize(elems_.size() * n);
  std::vector<IntVec> vecs(n);
  for (std::uint32_t c = 0; c < n; ++c) vecs[c] = codec_.decode(c);
  for (std::size_t i = 0; i < elems_.size(); ++i)
    for (std::uint32_t c = 0; c < n; ++c) table_[i * n + c] = codec_.encode(m.action[i](vecs[c]));
}

std::uint32_t ActionTable::act(Elem g, std::uint32_t v) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), g);
  if (it == elems_.end() || *it != g) throw DomainError("element is not in the acting group");
  return table_[static_cast<std::size_t>(it - elems_.begin()) * codec_.size() + v];
}

ModSubgroup ActionTable::whole() const {
  ModSubgroup u;
  u.codes.resize(codec_.size());
  for (std::uint32_t c = 0; c < codec_.size(); ++c) u.codes[c] = c;
  return u;
}

ModSubgroup ActionTable::centralizer(std::span<const Elem> a) const { return centralizer(a, whole()); }

ModSubgroup ActionTable::centralizer(std::span<const Elem> a, const ModSubgroup& u) const {
  ModSubgroup out;
  for (auto v : u.codes)
    if (std::all_of(a.begin(), a.end(), [&](Elem g) { return act(g, v) == v; })) out.codes.push_back(v);
  return out;
}

ModSubgroup ActionTable::commutator(std::span<const Elem> a, const ModSubgroup& u) const {
  std::vector<std::uint32_t> gens;
  for (Elem g : a)
    for (auto v : u.codes) {
      auto w = codec_.add(act(g, v), codec_.neg(v));
      if (w != 0) gens.push_back(w);
    }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return span_codes(codec_, gens);
}

bool ActionTable::invariant(std::span<const Elem> a, const ModSubgroup& u) const {
  for (Elem g : a)
    for (auto v : u.codes)
      if (!u.contains(act(g, v))) return false;
  return true;
}

Subgroup ActionTable::kernel_on(const Subgroup& a, const ModSubgroup& u) const {
  std::vector<Elem> k;
  for (Elem g : a.elements())
    if (std::all_of(u.codes.begin(), u.codes.end(), [&](std::uint32_t v) { return act(g, v) == v; }))
      k.push_back(g);
  return Subgroup::make(a.root(), std::move(k));
}

bool is_faithful(const GModule& m) {
  auto el = m.group.elements();
  for (std::size_t i = 1; i < el.size(); ++i)
    if (m.action[i] == FinAbHom::identity(m.module)) return false;
  return true;
}

// ---- Thompson subgroup ------------------------------------------------------

ThompsonData thompson(const Subgroup& s, unsigned p, std::size_t lattice_bound) {
  if (!is_p_group(s, p)) throw DomainError("S is not a p-group");
  Lattice lat = subgroup_lattice(s, lattice_bound);
  ThompsonData out;
  for (const auto& a : lat.subgroups)
    if (is_abelian(a)) out.d = std::max(out.d, a.order());
  std::vector<Elem> gens;
  for (const auto& a : lat.subgroups)
    if (a.order() == out.d && is_abelian(a)) {
      out.a.push_back(a);
      auto g = a.generators();
      gens.insert(gens.end(), g.begin(), g.end());
    }
  out.j = generate(s.root(), gens);
  return out;
}

std::vector<Subgroup> abelian_subgroups(const Subgroup& g) {
  const auto& root = g.root();
  std::unordered_set<Subgroup, SubgroupHash> seen;
  std::vector<Subgroup> out{trivial(root)};
  seen.insert(out[0]);
  for (std::size_t i = 0; i < out.size(); ++i) {
    Subgroup a = out[i];
    Subgroup c = centralizer(g, a);
    auto ag = a.generators();
    for (Elem x : c.elements()) {
      if (a.contains(x)) continue;
      std::vector<Elem> gens(ag.begin(), ag.end());
      gens.push_back(x);
      Subgroup b = generate(root, gens);
      if (seen.insert(b).second) out.push_back(b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- offenders --------------------------------------------------------------

std::uint64_t offender_score(const ActionTable& t, const Subgroup& a) {
  return static_cast<std::uint64_t>(a.order()) * t.centralizer(a.generators()).order();
}

bool is_quadratic(const ActionTable& t, std::span<const Elem> a) {
  ModSubgroup c = t.commutator(a, t.whole());
  return t.commutator(a, c).order() == 1;
}

bool is_best_offender(const ActionTable& t, const Subgroup& a) {
  if (!is_abelian(a)) return false;
  std::uint64_t s = offender_score(t, a);
  for (const auto& b : abelian_subgroups(a))
    if (offender_score(t, b) > s) return false;
  return true;
}

namespace {

void check_p_module(const FinAb& m, unsigned p) {
  for (auto q : m.moduli())
    if (p_part(static_cast<std::uint64_t>(q), p) != static_cast<std::uint64_t>(q))
      throw DomainError("module is not a p-group");
}

}  // namespace

OffenderScan best_offenders(const GModule& m, unsigned p) {
  check_p_module(m.module, p);
  if (!is_faithful(m)) throw DomainError("action not faithful");
  ActionTable t(m);
  OffenderScan out;
  for (auto& a : abelian_subgroups(m.group)) {
    OffenderRecord r;
    r.a = a;
    r.score = offender_score(t, a);
    r.quadratic = is_quadratic(t, a.generators());
    out.records.push_back(std::move(r));
  }
  std::vector<Elem> gens;
  for (std::size_t i = 0; i < out.records.size(); ++i) {
    auto& r = out.records[i];
    r.best = true;
    for (std::size_t j = 0; j < i && r.best; ++j)
      if (out.records[j].score > r.score && r.a.contains(out.records[j].a)) r.best = false;
    if (r.best && !r.a.is_trivial()) {
      out.nontrivial_best.push_back(i);
      auto g = r.a.generators();
      gens.insert(gens.end(), g.begin(), g.end());
    }
  }
  out.j_d = generate(m.group.root(), gens);
  return out;
}

QuotientAction quotient_action(const Subgroup& gamma, const Subgroup& d, unsigned p) {
  if (!gamma.contains(d)) throw DomainError("D is not a subgroup of Gamma");
  if (!is_abelian(d) || !is_p_group(d, p)) throw DomainError("D is not an abelian p-group");
  if (!is_normal(d, gamma)) throw DomainError("D is not normal in Gamma");
  const auto& G = *gamma.root();
  Subgroup c = centralizer(gamma, d);
  QuotientAction out;
  out.to_quotient = quotient_hom(gamma, c);
  out.d = as_finab(d);
  Subgroup img = out.to_quotient.image();
  std::vector<FinAbHom> imgs;
  for (Elem gbar : img.generators()) {
    Elem pre = kNoElem;
    for (Elem g : gamma.elements())
      if (out.to_quotient(g) == gbar) {
        pre = g;
        break;
      }
    imgs.push_back(induced_hom(out.d, out.d, [&](Elem x) { return G.conj(pre, x); }));
  }
  out.module = GModule::from_generators(img, out.d.finab(), imgs);
  return out;
}

Subgroup j_gamma_d(const Subgroup& gamma, const Subgroup& d, unsigned p) {
  QuotientAction qa = quotient_action(gamma, d, p);
  OffenderScan scan = best_offenders(qa.module, p);
  return qa.to_quotient.preimage(scan.j_d);
}

TimmesfeldResult timmesfeld(const GModule& m, const Subgroup& a, unsigned p) {
  check_p_module(m.module, p);
  if (!m.group.contains(a)) throw DomainError("A is not in the acting group");
  if (!is_abelian(a) || !is_p_group(a, p)) throw DomainError("A is not an abelian p-group");
  if (a.is_trivial()) throw DomainError("A is trivial");
  ActionTable t(m);
  for (Elem g : a.elements())
    if (g != FiniteGroup::identity() && t.centralizer(std::span<const Elem>(&g, 1)).order() == t.whole().order())
      throw DomainError("action not faithful");
  if (!is_best_offender(t, a)) throw DomainError("A is not a best offender");

  TimmesfeldResult r;
  r.commutator = t.commutator(a.elements(), t.whole());
  r.b = t.kernel_on(a, r.commutator);
  r.cv_a = t.centralizer(a.elements());
  r.cv_b = t.centralizer(r.b.elements());
  r.score_a = a.order() * r.cv_a.order();
  r.score_b = r.b.order() * r.cv_b.order();
  r.nontrivial = !r.b.is_trivial();
  r.quadratic = t.commutator(r.b.elements(), t.commutator(r.b.elements(), t.whole())).order() == 1;
  r.best = is_best_offender(t, r.b);
  r.equal_scores = r.score_a == r.score_b;
  r.cv_formula = r.cv_b == module_sum(t.codec(), r.commutator, r.cv_a);
  r.proper = r.cv_b.order() < t.whole().order();
  if (!r.ok()) throw TheoremViolation("replacement B = C_A([A,V]) fails a conclusion for A of " + describe(a));
  return r;
}

// ---- setups -----------------------------------------------------------------

const char* to_string(SetupKind k) {
  switch (k) {
    case SetupKind::invalid: return "invalid";
    case SetupKind::general: return "general";
    case SetupKind::reduced: return "reduced";
  }
  return "invalid";
}

SetupInfo setup_classify(const Subgroup& gamma, const Subgroup& s, const Subgroup& y, unsigned p) {
  SetupInfo out;
  if (!gamma.contains(s) || !is_p_group(s, p) || s.order() != p_part(gamma.order(), p)) {
    out.reason = "S is not a Sylow p-subgroup of Gamma";
    return out;
  }
  if (!s.contains(y) || !is_p_group(y, p)) {
    out.reason = "Y is not a p-subgroup of S";
    return out;
  }
  if (!is_normal(y, gamma)) {
    out.reason = "Y is not normal in Gamma";
    return out;
  }
  if (!y.contains(centralizer(gamma, y))) {
    out.reason = "C_Gamma(Y) is not contained in Y";
    return out;
  }
  out.kind = SetupKind::general;
  out.d = center(y);
  out.v = omega_1(out.d, p);
  if (!(o_p(gamma, p) == y)) {
    out.reason = "Y is not O_p(Gamma)";
    return out;
  }
  if (!(centralizer(s, out.d) == y)) {
    out.reason = "C_S(Z(Y)) is not Y";
    return out;
  }
  Homomorphism q = quotient_hom(gamma, centralizer(gamma, out.d));
  Subgroup img = q.image();
  if (!o_p(img, p).is_trivial()) {
    out.reason = "O_p(Gamma/C_Gamma(Z(Y))) is not trivial";
    return out;
  }
  out.kind = SetupKind::reduced;
  return out;
}

OffenderIntervals offender_interval(const FusionSystem& f, const Subgroup& y) {
  unsigned p = f.prime();
  SetupInfo info = setup_classify(f.ambient(), f.sylow(), y, p);
  if (info.kind == SetupKind::invalid) throw DomainError("setup invalid: " + info.reason);
  std::vector<std::size_t> r, q;
  for (std::size_t i = 0; i < f.object_count(); ++i) {
    const Subgroup& P = f.object(i);
    if (!P.contains(y)) continue;
    (j_gamma_d(P, info.d, p) == y ? r : q).push_back(i);
  }
  OffenderIntervals out;
  try {
    out.r = make_interval(f, r);
    out.q = make_interval(f, q);
  } catch (const DomainError& e) {
    throw TheoremViolation(std::string("offender interval: ") + e.what());
  }
  if (!out.r.f_invariant || !out.q.f_invariant) throw TheoremViolation("offender interval is not F-invariant");
  return out;
}

}  // namespace fusion

namespace fusion {

Subgroup AffineGroup::translations_by(const ModSubgroup& u) const {
  std::vector<Elem> e;
  for (auto c : u.codes) e.push_back(translation_of[c]);
  std::sort(e.begin(), e.end());
  return Subgroup::make(gamma.root(), std::move(e));
}

AffineGroup affine_group(const GModule& m, std::size_t max_order) {
  ActionTable t(m);
  const auto& codec = t.codec();
  std::uint32_t n = codec.size();
  std::vector<Perm> gens;
  for (Elem g : m.group.generators()) {
    std::vector<Point> img(n);
    for (std::uint32_t v = 0; v < n; ++v) img[v] = static_cast<Point>(t.act(g, v));
    gens.emplace_back(std::move(img));
  }
  auto translation = [&](std::uint32_t w) {
    std::vector<Point> img(n);
    for (std::uint32_t v = 0; v < n; ++v) img[v] = static_cast<Point>(codec.add(v, w));
    return Perm(std::move(img));
  };
  for (std::size_t j = 0; j < m.module.rank(); ++j) {
    IntVec e = m.module.zero();
    e[j] = 1;
    gens.push_back(translation(codec.encode(e)));
  }
  GroupPtr root = FiniteGroup::generate(n, gens, max_order, "affine");
  AffineGroup out;
  out.gamma = whole(root);
  out.translation_of.resize(n);
  for (std::uint32_t w = 0; w < n; ++w) out.translation_of[w] = root->index_of(translation(w));
  out.translations = out.translations_by(t.whole());
  return out;
}

OffenderLemmaReport check_offender_lemmas(const GModule& m, unsigned p, LemmaBounds b) {
  OffenderLemmaReport rep;
  auto fail = [&](std::string s) { rep.failures.push_back(std::move(s)); };
  ActionTable t(m);
  OffenderScan scan = best_offenders(m, p);
  bool elementary = std::all_of(m.module.moduli().begin(), m.module.moduli().end(),
                                [&](std::int64_t q) { return q == static_cast<std::int64_t>(p); });

  std::vector<ModSubgroup> subs;
  if (m.module.order() <= b.restriction_module) subs = module_subgroups(m.module);
  for (std::size_t i : scan.nontrivial_best) {
    const Subgroup& a = scan.records[i].a;
    ++rep.best_offenders;
    if (!is_p_group(a, p)) fail("best offender of " + describe(a) + " is not a p-group");
    try {
      timmesfeld(m, a, p);
      ++rep.timmesfeld;
    } catch (const TheoremViolation& e) {
      fail(e.what());
    }
    // Restriction to invariant subgroups U: |B/C_A(U)||C_U(B)| <= |A/C_A(U)||C_U(A)|.
    auto abs = abelian_subgroups(a);
    for (const auto& u : subs) {
      if (!t.invariant(a.generators(), u)) continue;
      Subgroup cau = t.kernel_on(a, u);
      std::uint64_t top = a.order() / cau.order() * t.centralizer(a.generators(), u).order();
      for (const auto& bb : abs) {
        if (!bb.contains(cau)) continue;
        std::uint64_t s = bb.order() / cau.order() * t.centralizer(bb.generators(), u).order();
        if (s > top) fail("A/C_A(U) is not a best offender on U for A of " + describe(a));
      }
      ++rep.restriction;
    }
  }

  // Quadratic faithful actions on elementary modules come from elementary abelian groups.
  if (elementary) {
    std::vector<Subgroup> cands{m.group};
    for (Elem x : m.group.elements())
      for (Elem y : m.group.elements())
        if (x <= y) cands.push_back(generate(m.group.root(), std::vector<Elem>{x, y}));
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (const auto& h : cands) {
      if (!is_quadratic(t, h.elements())) continue;
      ++rep.quadratic_groups;
      if (!is_elementary_abelian(h, p)) fail("quadratic action of non-elementary " + describe(h));
    }
  }

  // Statements about J(Gamma, D) inside V x| G.
  if (m.module.order() * m.group.order() > b.affine_order) return rep;
  AffineGroup aff = affine_group(m, b.affine_order);
  const Subgroup& gamma = aff.gamma;
  const Subgroup& d = aff.translations;
  Subgroup jd = j_gamma_d(gamma, d, p);
  if (!(jd.contains(centralizer(gamma, d)) && gamma.contains(jd) && jd.contains(d)))
    fail("D <= C(D) <= J(Gamma,D) <= Gamma fails");
  if (!(j_gamma_d(jd, d, p) == jd)) fail("J(J(Gamma,D),D) != J(Gamma,D)");
  ++rep.idempotent;

  std::vector<ModSubgroup> inv;
  for (const auto& u : module_subgroups(m.module))
    if (u.order() > 1 && t.invariant(m.group.elements(), u)) inv.push_back(u);
  for (const auto& u : inv) {
    Subgroup du = aff.translations_by(u);
    Subgroup ju = j_gamma_d(gamma, du, p);
    if (!ju.contains(jd)) fail("J(Gamma,U) does not contain J(Gamma,D)");
    ++rep.nested_j;
  }

  if (is_p_group(gamma, p) && gamma.order() <= b.thompson_order) {
    ThompsonData th = thompson(gamma, p, b.thompson_order);
    if (!jd.contains(th.j)) fail("J(Gamma) is not contained in J(Gamma,D)");
    ++rep.thompson_in_j;
    // Images of A(S) in S/C_S(D) are best offenders on D, for D and each invariant U.
    std::vector<Subgroup> ds{d};
    for (const auto& u : inv) ds.push_back(aff.translations_by(u));
    for (const auto& dd : ds) {
      QuotientAction qa = quotient_action(gamma, dd, p);
      ActionTable qt(qa.module);
      for (const auto& a : th.a) {
        Subgroup img = qa.to_quotient.image(a);
        if (!is_best_offender(qt, img)) fail("image of A in A(S) is not a best offender on D");
        ++rep.thompson_images;
      }
    }
  }
  return rep;
}

}  // namespace fusion
