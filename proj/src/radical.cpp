#include "fusion/radical.hpp"

#include <algorithm>
#include <numeric>

#include "fusion/corpus.hpp"
#include "fusion/fusion.hpp"
#include "fusion/modules.hpp"

namespace fusion {

namespace {

std::size_t f2_rank(std::vector<IntVec> rows) {
  std::size_t rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] % 2 == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][c] % 2 != 0)
        for (std::size_t j = 0; j < cols; ++j) rows[r][j] = (rows[r][j] + rows[rank][j]) % 2;
    ++rank;
  }
  return rank;
}

std::size_t log_p(std::size_t n, unsigned p) {
  std::size_t k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return k;
}

std::string chain_text(const RadicalChain& c) {
  std::string s;
  for (std::size_t i = 0; i < c.subgroups.size(); ++i) {
    if (i) s += " < ";
    s += describe(c.subgroups[i]);
  }
  return s;
}

/// Depth-first: `chain` is radical so far, `h` = N_G(chain).
void extend(const Subgroup& g, unsigned p, std::size_t max_len, std::size_t bound, std::vector<Subgroup>& chain,
            const Subgroup& h, std::vector<RadicalChain>& out) {
  Subgroup top = chain.back();
  if (top.order() == p_part(h.order(), p)) {
    out.push_back(RadicalChain{g, p, chain});
    return;
  }
  if (chain.size() - 1 == max_len) return;
  for (const Subgroup& r : radical_subgroups(h, p, bound)) {
    if (r.order() <= top.order()) continue;
    chain.push_back(r);
    extend(g, p, max_len, bound, chain, normalizer(h, r), out);
    chain.pop_back();
  }
}

}  // namespace

bool is_radical(const Subgroup& g, const Subgroup& p_sub, unsigned p) {
  return is_p_group(p_sub, p) && g.contains(p_sub) && o_p(normalizer(g, p_sub), p) == p_sub;
}

std::vector<Subgroup> radical_subgroups(const Subgroup& g, unsigned p, std::size_t lattice_bound) {
  FusionOptions opt;
  opt.lattice_bound = lattice_bound;
  auto f = FusionSystem::make(g, p, opt);
  std::vector<Subgroup> out;
  for (std::size_t c = 0; c < f->class_count(); ++c) {
    const Subgroup& r = f->object(f->class_rep(c));
    if (o_p(normalizer(g, r), p) == r) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RadicalChain> all_radical_chains(const Subgroup& g, unsigned p, std::size_t lattice_bound) {
  std::vector<RadicalChain> out;
  for (const Subgroup& p0 : radical_subgroups(g, p, lattice_bound)) {
    std::vector<Subgroup> chain{p0};
    extend(g, p, static_cast<std::size_t>(-1), lattice_bound, chain, normalizer(g, p0), out);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const RadicalChain& a, const RadicalChain& b) { return a.length() < b.length(); });
  return out;
}

std::vector<RadicalChain> radical_chains(const Subgroup& g, unsigned p, std::size_t k, std::size_t lattice_bound) {
  std::vector<RadicalChain> all;
  for (const Subgroup& p0 : radical_subgroups(g, p, lattice_bound)) {
    std::vector<Subgroup> chain{p0};
    extend(g, p, k, lattice_bound, chain, normalizer(g, p0), all);
  }
  std::vector<RadicalChain> out;
  for (auto& c : all)
    if (c.length() == k) out.push_back(std::move(c));
  return out;
}

bool is_radical_chain(const RadicalChain& c) {
  if (c.subgroups.empty()) return false;
  const Subgroup& g = c.ambient;
  Subgroup n = g;
  for (std::size_t i = 0; i < c.subgroups.size(); ++i) {
    const Subgroup& pi = c.subgroups[i];
    if (!is_p_group(pi, c.p) || !g.contains(pi)) return false;
    if (i > 0 && !(pi.contains(c.subgroups[i - 1]) && pi.order() > c.subgroups[i - 1].order())) return false;
    if (!n.contains(pi)) return false;
    // N_G(P_0, ..., P_{i-1}) as an intersection of normalizers in G
    if (o_p(intersect(n, normalizer(g, pi)), c.p) != pi) return false;
    n = intersect(n, normalizer(g, pi));
  }
  // n is now N_G(P_0, ..., P_k); the Sylow condition is on N_G(P_0, ..., P_{k-1})
  Subgroup prev = g;
  for (std::size_t i = 0; i + 1 < c.subgroups.size(); ++i) prev = intersect(prev, normalizer(g, c.subgroups[i]));
  return c.subgroups.back().order() == p_part(prev.order(), c.p);
}

ModuleOverP ModuleOverP::make(GModule m, unsigned p) {
  if (!is_p_group(m.group, p)) throw DomainError("acting group is not a p-group");
  for (auto q : m.module.moduli())
    if (q != static_cast<std::int64_t>(p)) throw DomainError("module is not of exponent p");
  return ModuleOverP{std::move(m), p};
}

bool contains_free(const ModuleOverP& m) {
  return !norm_image(m.module.module, m.module.action).group.is_trivial();
}

bool contains_free(const GModule& m, const Subgroup& p_sub, unsigned p) {
  return contains_free(ModuleOverP::make(restrict_module(m, p_sub), p));
}

bool free_orbit_check(std::size_t order, const std::vector<std::vector<Point>>& gens, std::size_t points) {
  std::vector<char> seen(points, 0);
  for (std::size_t x = 0; x < points; ++x) {
    if (seen[x]) continue;
    std::vector<std::size_t> orbit{x};
    seen[x] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& g : gens) {
        std::size_t y = g[orbit[i]];
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    if (orbit.size() == order) return true;
  }
  return false;
}

bool free_orbit_check(const Subgroup& p_sub) {
  for (const auto& o : orbits(p_sub))
    if (o.size() == p_sub.order()) return true;
  return false;
}

GroupPtr alt_or_sym(unsigned m, AltKind kind) {
  std::string id = (kind == AltKind::symmetric ? "S" : "A") + std::to_string(m);
  return named_group(id, 40320);
}

A3Report verify_a3(unsigned m, AltKind kind) {
  A3Report rep;
  rep.m = m;
  rep.kind = kind;
  GroupPtr g = alt_or_sym(m, kind);
  auto chains = all_radical_chains(whole(g), 2);
  rep.chains_total = chains.size();
  for (const auto& c : chains) {
    if (rep.by_length.size() <= c.length()) rep.by_length.resize(c.length() + 1, 0);
    ++rep.by_length[c.length()];
    if (!is_radical_chain(c)) rep.violations.push_back("chain condition fails: " + chain_text(c));
    if (c.length() < 2) continue;
    ++rep.chains_checked;
    const Subgroup& p0 = c.subgroups.front();
    const Subgroup& pk = c.subgroups.back();
    auto orbs = orbits(p0);
    std::vector<std::size_t> orbit_of(g->degree());
    for (std::size_t i = 0; i < orbs.size(); ++i)
      for (Point x : orbs[i]) orbit_of[x] = i;
    std::vector<std::vector<Point>> gens;
    for (Elem e : pk.generators()) {
      std::vector<Point> perm(orbs.size());
      for (std::size_t i = 0; i < orbs.size(); ++i) perm[i] = static_cast<Point>(orbit_of[g->apply(e, orbs[i][0])]);
      gens.push_back(std::move(perm));
    }
    if (free_orbit_check(pk.order() / p0.order(), gens, orbs.size()))
      rep.violations.push_back("free orbit of P_k/P_0 on m/P_0: " + chain_text(c));
  }
  return rep;
}

A4Entry a4_entry(const Subgroup& p_sub) {
  A4Entry e;
  e.p = p_sub;
  const GroupPtr& root = p_sub.root();
  std::size_t m = root->degree();
  GModule v = permutation_module(p_sub, 2);
  IntVec ones(m, 1);
  QuotientMap q = quotient_map(v.module, {ones});

  std::vector<FinAbHom> on_v, on_q;
  for (Elem g : p_sub.generators()) {
    const FinAbHom& a = v(g);
    on_v.push_back(a);
    IntMat mat(q.group.rank(), IntVec(q.group.rank(), 0));
    for (std::size_t j = 0; j < q.group.rank(); ++j) {
      IntVec img = q.projection(a(q.lifts[j]));
      for (std::size_t i = 0; i < q.group.rank(); ++i) mat[i][j] = img[i];
    }
    on_q.emplace_back(q.group, q.group, mat);
  }
  SubFinAb cv = fixed_points(v.module, on_v);
  SubFinAb cq = fixed_points(q.group, on_q);
  e.fixed_rank = cv.group.rank();
  e.rank = cq.group.rank();
  std::vector<IntVec> imgs;
  for (const auto& w : cv.witnesses) imgs.push_back(q.projection(w));
  e.image_rank = f2_rank(imgs);

  auto orbs = orbits(p_sub);
  e.orbits = orbs.size();
  Subgroup x = frattini(p_sub, 2);
  for (const auto& o : orbs) {
    std::vector<Elem> stab;
    for (Elem g : p_sub.elements())
      if (root->apply(g, o[0]) == o[0]) stab.push_back(g);
    x = join(x, from_elements(root, std::move(stab)));
  }
  e.hom_rank = log_p(p_sub.order() / x.order(), 2);

  e.sequence_ok = e.fixed_rank == e.orbits && e.image_rank + 1 == e.orbits && e.rank == e.image_rank + e.hom_rank;
  if (e.orbits >= 3) {
    e.branch = "orbits>=3";
    e.branch_ok = e.rank == e.image_rank;
  } else if (e.orbits == 2) {
    e.branch = "orbits=2";
    e.branch_ok = e.rank <= 2;
  } else {
    e.branch = "transitive";
    e.branch_ok = e.rank == e.hom_rank;
  }
  return e;
}

A4Report verify_a4(unsigned m, AltKind kind) {
  A4Report rep;
  rep.m = m;
  rep.kind = kind;
  GroupPtr g = alt_or_sym(m, kind);
  Subgroup gw = whole(g);
  for (const Subgroup& p : radical_subgroups(gw, 2)) {
    A4Entry e = a4_entry(p);
    if (!e.ok())
      rep.violations.push_back("branch " + e.branch + " fails for " + describe(p) + ": rank " +
                               std::to_string(e.rank));
    rep.entries.push_back(std::move(e));
  }
  FusionOptions opt;
  opt.lattice_bound = kRadicalLatticeBound;
  auto f = FusionSystem::make(gw, 2, opt);
  for (std::size_t c = 0; c < f->class_count(); ++c) {
    A4Entry e = a4_entry(f->object(f->class_rep(c)));
    ++rep.sequence_checked;
    if (!e.sequence_ok) rep.violations.push_back("exact sequence fails for " + describe(e.p));
  }
  return rep;
}

std::optional<RadicalChain> free_chain_witness(const GModule& m, unsigned p, std::size_t k,
                                               std::size_t lattice_bound) {
  for (const auto& c : radical_chains(m.group, p, k, lattice_bound)) {
    if (!c.subgroups.front().is_trivial()) continue;
    if (contains_free(m, c.subgroups.back(), p)) return c;
  }
  return std::nullopt;
}

}  // namespace fusion
