#include "fusion/limits.hpp"

#include <chrono>
#include <unordered_map>

namespace fusion {

namespace {

std::uint64_t pack(std::uint32_t prefix, MorId f) { return (static_cast<std::uint64_t>(prefix) << 32) | f; }

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

BarComplex bar_complex(const FiniteCategory& c, const AbFunctor& f, BarOptions opt) {
  check_functor(c, f);
  std::size_t N = opt.n_max;
  {
    // Count generators (strings weighted by the rank of F(x_0)) before
    // materializing any; every string has at least one.
    std::vector<double> ending(c.object_count(), 0.0);
    double total = 0;
    for (std::size_t x = 0; x < c.object_count(); ++x) ending[x] = static_cast<double>(f.values[x].rank());
    for (double e : ending) total += e;
    for (std::size_t n = 1; n <= N; ++n) {
      std::vector<double> next(c.object_count(), 0.0);
      for (MorId g = 0; g < c.morphism_count(); ++g) {
        const auto& m = c.morphism(g);
        if (!m.identity) next[m.dst] += ending[m.src];
      }
      ending = std::move(next);
      for (double e : ending) total += e;
      if (total > static_cast<double>(opt.max_strings)) throw BoundExceeded("complex too large");
    }
  }
  BarComplex bc;
  bc.strings.assign(N + 1, {});
  bc.offsets.assign(N + 1, {});
  std::vector<std::vector<std::uint32_t>> last(N + 1);   // final object of each string
  std::vector<std::vector<std::uint32_t>> first(N + 1);  // x_0 of each string
  std::vector<std::unordered_map<std::uint64_t, std::uint32_t>> index(N + 1);
  std::vector<std::uint32_t> obj_index(c.object_count(), UINT32_MAX);
  std::vector<std::vector<std::int64_t>> moduli(N + 1);
  std::size_t total = 0;

  for (std::size_t x = 0; x < c.object_count(); ++x) {
    if (f.values[x].is_trivial()) continue;
    obj_index[x] = static_cast<std::uint32_t>(bc.offsets[0].size());
    bc.strings[0].push_back(static_cast<std::uint32_t>(x));
    bc.offsets[0].push_back(moduli[0].size());
    first[0].push_back(static_cast<std::uint32_t>(x));
    last[0].push_back(static_cast<std::uint32_t>(x));
    for (auto m : f.values[x].moduli()) moduli[0].push_back(m);
    ++total;
  }
  for (std::size_t n = 1; n <= N; ++n) {
    std::size_t count = bc.offsets[n - 1].size();
    for (std::size_t s = 0; s < count; ++s) {
      for (MorId g : c.out_of(last[n - 1][s])) {
        if (c.morphism(g).identity) continue;
        auto idx = static_cast<std::uint32_t>(bc.offsets[n].size());
        index[n].emplace(pack(static_cast<std::uint32_t>(s), g), idx);
        const std::uint32_t* prev = n == 1 ? nullptr : &bc.strings[n - 1][(s) * (n - 1)];
        for (std::size_t t = 0; t + 1 < n; ++t) bc.strings[n].push_back(prev[t]);
        bc.strings[n].push_back(g);
        std::uint32_t x0 = first[n - 1][s];
        first[n].push_back(x0);
        last[n].push_back(static_cast<std::uint32_t>(c.morphism(g).dst));
        bc.offsets[n].push_back(moduli[n].size());
        for (auto m : f.values[x0].moduli()) moduli[n].push_back(m);
        if (++total > opt.max_strings) throw BoundExceeded("complex too large");
      }
    }
  }
  for (std::size_t n = 0; n <= N; ++n) bc.complex.groups.push_back(FinAb::cyclic_sum(moduli[n]));

  // Index of the string starting at x0 with the given morphisms, if materialized.
  auto lookup = [&](std::uint32_t x0, const std::vector<MorId>& ms) -> std::optional<std::uint32_t> {
    std::uint32_t idx = obj_index[x0];
    if (idx == UINT32_MAX) return std::nullopt;
    for (std::size_t t = 0; t < ms.size(); ++t) {
      auto it = index[t + 1].find(pack(idx, ms[t]));
      if (it == index[t + 1].end()) return std::nullopt;
      idx = it->second;
    }
    return idx;
  };

  std::vector<MorId> face;
  for (std::size_t n = 0; n < N; ++n) {
    SparseMatrix d(bc.complex.groups[n + 1].rank(), bc.complex.groups[n].rank());
    std::size_t len = n + 1;
    for (std::size_t s = 0; s < bc.offsets[n + 1].size(); ++s) {
      const std::uint32_t* ms = &bc.strings[n + 1][s * len];
      std::uint32_t x0 = first[n + 1][s];
      std::size_t row0 = bc.offsets[n + 1][s];
      std::size_t rk = f.values[x0].rank();

      // Face 0: F(f_1) applied to the cochain on the string from x_1.
      face.assign(ms + 1, ms + len);
      auto x1 = static_cast<std::uint32_t>(c.morphism(ms[0]).dst);
      if (auto src = lookup(x1, face)) {
        std::size_t col0 = bc.offsets[n][*src];
        const auto& M = f.maps[ms[0]].matrix();
        for (std::size_t r = 0; r < rk; ++r)
          for (std::size_t q = 0; q < M[r].size(); ++q)
            if (M[r][q] != 0) d.add(row0 + r, col0 + q, M[r][q]);
      }
      // Inner faces compose f_{i+1} o f_i.
      for (std::size_t i = 1; i < len; ++i) {
        MorId comp = c.compose(ms[i], ms[i - 1]);
        if (c.morphism(comp).identity) continue;
        face.clear();
        for (std::size_t t = 0; t < i - 1; ++t) face.push_back(ms[t]);
        face.push_back(comp);
        for (std::size_t t = i + 1; t < len; ++t) face.push_back(ms[t]);
        auto src = lookup(x0, face);
        if (!src) throw TheoremViolation("bar complex face missing");
        std::size_t col0 = bc.offsets[n][*src];
        std::int64_t sign = (i % 2) ? -1 : 1;
        for (std::size_t r = 0; r < rk; ++r) d.add(row0 + r, col0 + r, sign);
      }
      // Last face drops f_{n+1}.
      face.assign(ms, ms + len - 1);
      auto src = lookup(x0, face);
      if (!src) throw TheoremViolation("bar complex face missing");
      std::size_t col0 = bc.offsets[n][*src];
      std::int64_t sign = (len % 2) ? -1 : 1;
      for (std::size_t r = 0; r < rk; ++r) d.add(row0 + r, col0 + r, sign);
    }
    d.finalize(bc.complex.groups[n + 1]);
    bc.complex.diffs.push_back(std::move(d));
  }
  check_complex(bc.complex);
  return bc;
}

std::vector<LimitResult> higher_limits(const FiniteCategory& c, const AbFunctor& f, std::size_t k_max,
                                       BarOptions opt) {
  auto t0 = std::chrono::steady_clock::now();
  opt.n_max = k_max + 1;
  auto bc = bar_complex(c, f, opt);
  std::vector<LimitResult> out;
  for (std::size_t k = 0; k <= k_max; ++k) {
    auto t1 = std::chrono::steady_clock::now();
    LimitResult r;
    r.k = k;
    r.group = cohomology(bc.complex, k);
    r.category = c.name();
    r.ms = since(k == 0 ? t0 : t1);
    out.push_back(std::move(r));
  }
  return out;
}

LimitResult higher_limit(const FiniteCategory& c, const AbFunctor& f, std::size_t k, BarOptions opt) {
  if (k + 1 > opt.n_max) throw BoundExceeded("degree bound exceeded");
  auto t0 = std::chrono::steady_clock::now();
  opt.n_max = k + 1;
  auto bc = bar_complex(c, f, opt);
  LimitResult r;
  r.k = k;
  r.group = cohomology(bc.complex, k);
  r.category = c.name();
  r.ms = since(t0);
  return r;
}

FinAb inverse_limit(const FiniteCategory& c, const AbFunctor& f) {
  // Dense: sum_x F(x) -> sum_f F(src f), a -> F(f) a_dst - a_src, over all morphisms.
  std::vector<std::int64_t> src_mod, tgt_mod;
  std::vector<std::size_t> off(c.object_count());
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    off[x] = src_mod.size();
    for (auto m : f.values[x].moduli()) src_mod.push_back(m);
  }
  std::vector<std::size_t> roff;
  for (MorId g = 0; g < c.morphism_count(); ++g) {
    roff.push_back(tgt_mod.size());
    for (auto m : f.values[c.morphism(g).src].moduli()) tgt_mod.push_back(m);
  }
  FinAb A = FinAb::cyclic_sum(src_mod), B = FinAb::cyclic_sum(tgt_mod);
  IntMat M(B.rank(), IntVec(A.rank(), 0));
  for (MorId g = 0; g < c.morphism_count(); ++g) {
    const auto& info = c.morphism(g);
    const auto& F = f.maps[g].matrix();
    for (std::size_t r = 0; r < F.size(); ++r) {
      for (std::size_t q = 0; q < F[r].size(); ++q) M[roff[g] + r][off[info.dst] + q] += F[r][q];
      M[roff[g] + r][off[info.src] + r] -= 1;
    }
  }
  return kernel(FinAbHom(A, B, std::move(M))).group.canonical_form();
}

std::vector<LimitResult> lambdas(const GModule& m, unsigned p, std::size_t k_max, BarOptions opt) {
  for (auto q : m.module.moduli())
    if (p_part(static_cast<std::uint64_t>(q), p) != static_cast<std::uint64_t>(q))
      throw DomainError("module is not a p-group");
  if (opt.lambda_method == LambdaMethod::subgroup_complex) {
    auto t0 = std::chrono::steady_clock::now();
    IntegerComplex c = subgroup_chain_complex(m, p, k_max + 1);
    std::vector<LimitResult> out;
    for (std::size_t k = 0; k <= k_max; ++k)
      out.push_back({k, k < c.groups.size() ? cohomology(c, k) : FinAb(), "S_p(G) chains", 0});
    double ms = since(t0);
    for (auto& r : out) r.ms = ms;
    return out;
  }
  auto op = p_orbit_category(m.group, p);
  auto F = module_functor(op, m);
  auto out = higher_limits(op, F, k_max, opt);
  for (auto& r : out) r.category = "O_p(G)";
  return out;
}

LimitResult lambda(const GModule& m, unsigned p, std::size_t k, BarOptions opt) {
  if (k + 1 > opt.n_max) throw BoundExceeded("degree bound exceeded");
  return lambdas(m, p, k, opt).back();
}

bool VanishingReport::ok() const {
  for (const auto& e : entries)
    if (e.violation) return false;
  return true;
}

VanishingReport verify_vanishing(const FusionSystem& f, std::size_t k_lo, std::size_t k_hi, bool strict,
                                 BarOptions opt) {
  auto C = orbit_category(f);
  auto Z = z_functor(f, C);
  auto lims = higher_limits(C, Z, k_hi, opt);
  VanishingReport rep;
  unsigned kp = KofP(f.prime()).value;
  for (std::size_t k = k_lo; k <= k_hi; ++k) {
    bool bad = k >= kp && !lims[k].group.is_trivial();
    rep.entries.push_back({k, lims[k].group, bad});
    if (bad && strict)
      throw TheoremViolation("lim^" + std::to_string(k) + "(Z_F) = " + lims[k].group.to_string() +
                             " is nonzero at p = " + std::to_string(f.prime()));
  }
  return rep;
}

void check_setup(const FusionSystem& f, const Subgroup& y) {
  const Subgroup& G = f.ambient();
  if (!same_root(G, y) || !f.sylow().contains(y) || !is_normal(y, G) || !y.contains(centralizer(G, y)))
    throw DomainError("setup invalid");
}

FusionPtr setup_system(const Setup& st, unsigned p, std::size_t lattice_bound) {
  FusionOptions o;
  o.lattice_bound = lattice_bound;
  FusionPtr f;
  try {
    f = FusionSystem::make(st.gamma, st.s, p, o);
  } catch (const DomainError&) {
    throw DomainError("setup invalid");
  }
  check_setup(*f, st.y);
  return f;
}

GammaStarResult gamma_star(const FusionSystem& f, const Subgroup& y, const Interval& q, BarOptions opt) {
  check_setup(f, y);
  const auto& G = *f.ambient().root();
  std::size_t n = f.object_count();
  auto iys = overgroup_interval(f, y);
  std::vector<std::size_t> r_members;
  for (std::size_t i = 0; i < n; ++i) {
    if (q.contains(i) && !iys.contains(i)) throw DomainError("Q is not inside I(Y,S)");
    if (iys.contains(i) && !q.contains(i)) r_members.push_back(i);
  }
  if (!q.f_invariant) throw DomainError("Q is not F-invariant");
  if (!q.contains(f.index_of(f.sylow()))) throw DomainError("Q does not contain S");
  auto r = make_interval(f, r_members);
  if (!r.f_invariant) throw DomainError("R is not F-invariant");
  for (std::size_t a : q.members())
    for (std::size_t b : r_members)
      if (f.object(b).contains(f.object(a))) throw DomainError("a member of Q lies below a member of R");

  // Elements carrying members of Q to members of Q: N_Gamma(P) and the
  // conjugators between class members, all inside Q.
  std::vector<Elem> gens;
  for (std::size_t a : q.members()) {
    std::size_t cls = f.class_of(a);
    Elem ta = f.to_rep(a);
    for (Elem x : f.aut(a)) gens.push_back(x);
    for (std::size_t b : f.class_members(cls))
      if (q.contains(b)) gens.push_back(G.mul(G.inv(f.to_rep(b)), ta));
    Subgroup c = centralizer(f.ambient(), f.object(a));
    for (Elem x : c.generators()) gens.push_back(x);
  }
  GammaStarResult res;
  res.gamma_star = generate(f.ambient().root(), gens);
  Subgroup zy = center(y);
  res.cz_gamma = centralizer(zy, f.ambient()).order();
  res.cz_gamma_star = centralizer(zy, res.gamma_star).order();
  auto C = orbit_category(f);
  auto Z = z_functor(f, C, r);
  res.lim1_r = higher_limit(C, Z, 1, opt).group;
  res.ses_check = BigInt(res.cz_gamma_star) == BigInt(res.cz_gamma) * res.lim1_r.order();
  return res;
}

}  // namespace fusion
