#include <algorithm>

#include "fusion/corpus.hpp"
#include "fusion/modules.hpp"
#include "fusion/radical.hpp"

namespace fusion {

namespace {

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

std::size_t rank_mod(std::vector<IntVec> rows, std::int64_t p) {
  std::size_t rank = 0, cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    std::int64_t inv = inverse_mod(rows[rank][c], p);
    for (auto& x : rows[rank]) x = x * inv % p;
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      std::int64_t f = rows[r][c] % p;
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) rows[r][j] = ((rows[r][j] - f * rows[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

struct PermModule {
  GModule module;
  std::vector<std::vector<Point>> gen_perms;  // one permutation of the basis per generator of P
};

/// F_p[P/Q] on left cosets of Q.
PermModule coset_module(const Subgroup& grp, const Subgroup& q, unsigned p) {
  const auto& G = *grp.root();
  std::vector<Elem> reps;
  std::vector<std::size_t> coset_of(G.order(), 0);
  std::vector<char> seen(G.order(), 0);
  for (Elem g : grp.elements()) {
    if (seen[g]) continue;
    for (Elem h : q.elements()) {
      Elem x = G.mul(g, h);
      seen[x] = 1;
      coset_of[x] = reps.size();
    }
    reps.push_back(g);
  }
  std::size_t n = reps.size();
  auto perm_of = [&](Elem g) {
    std::vector<Point> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<Point>(coset_of[G.mul(g, reps[i])]);
    return s;
  };
  FinAb m = FinAb::cyclic_sum(std::vector<std::int64_t>(n, p));
  PermModule out;
  out.module = module_from_action(grp, m, [&](Elem g) {
    auto s = perm_of(g);
    IntMat a(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) a[s[i]][i] = 1;
    return FinAbHom(m, m, a);
  });
  for (Elem g : grp.generators()) out.gen_perms.push_back(perm_of(g));
  return out;
}

GModule jordan_block(const Subgroup& c, unsigned p, std::size_t d) {
  FinAb m = FinAb::cyclic_sum(std::vector<std::int64_t>(d, p));
  IntMat j(d, IntVec(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    j[i][i] = 1;
    if (i + 1 < d) j[i][i + 1] = 1;
  }
  return GModule::from_generators(c, m, {FinAbHom(m, m, j)});
}

std::vector<std::string> small_groups(unsigned p) {
  if (p == 2) return {"C2", "C4", "C2xC2", "C8", "C2xC2xC2", "C4xC2", "D8", "Q8"};
  return {"C" + std::to_string(p)};
}

}  // namespace

bool free_submodule_search(const ModuleOverP& m) {
  std::size_t n = m.module.group.order();
  for (const auto& v : m.module.module.elements()) {
    std::vector<IntVec> orbit;
    orbit.reserve(n);
    for (const auto& a : m.module.action) orbit.push_back(a(v));
    if (rank_mod(std::move(orbit), m.p) == n) return true;
  }
  return false;
}

FreeDetectReport free_detect(unsigned p, std::size_t max_dim) {
  FreeDetectReport r;
  auto compare = [&](const GModule& m, const std::string& label) {
    auto mp = ModuleOverP::make(m, p);
    bool norm = contains_free(mp);
    bool search = free_submodule_search(mp);
    ++r.modules;
    r.with_free += search;
    if (norm != search) r.failures.push_back(label + ": norm criterion " + std::to_string(norm) + ", search " +
                                             std::to_string(search));
    return norm;
  };

  for (const auto& id : small_groups(p)) {
    Subgroup grp = whole(named_group(id));
    std::vector<PermModule> perms;
    std::vector<std::string> perm_labels;
    for (const auto& q : subgroup_lattice(grp).subgroups) {
      if (grp.order() / q.order() > max_dim) continue;
      perms.push_back(coset_module(grp, q, p));
      perm_labels.push_back(id + " on cosets of a subgroup of order " + std::to_string(q.order()));
    }

    std::vector<GModule> mods;
    std::vector<std::string> labels;
    std::vector<char> free_flag;
    for (std::size_t i = 0; i < perms.size(); ++i) {
      bool f = compare(perms[i].module, perm_labels[i]);
      std::size_t pts = perms[i].module.module.rank();
      if (f != free_orbit_check(grp.order(), perms[i].gen_perms, pts))
        r.failures.push_back(perm_labels[i] + ": free submodule and free orbit disagree");
      ++r.permutation;
      mods.push_back(perms[i].module);
      labels.push_back(perm_labels[i]);
      free_flag.push_back(f);
    }
    // sums of two coset modules: F_p[X u Y] with the orbit check on X u Y
    std::size_t n_perm = perms.size();
    for (std::size_t i = 0; i < n_perm; ++i)
      for (std::size_t j = i; j < n_perm; ++j) {
        std::size_t na = perms[i].module.module.rank(), nb = perms[j].module.module.rank();
        if (na + nb > max_dim) continue;
        GModule sum = direct_sum(perms[i].module, perms[j].module);
        std::string label = perm_labels[i] + " + " + perm_labels[j];
        bool f = compare(sum, label);
        if (f != (free_flag[i] || free_flag[j])) r.failures.push_back(label + ": free part of a direct sum");
        std::vector<std::vector<Point>> gp;
        for (std::size_t g = 0; g < perms[i].gen_perms.size(); ++g) {
          auto s = perms[i].gen_perms[g];
          for (Point x : perms[j].gen_perms[g]) s.push_back(static_cast<Point>(x + na));
          gp.push_back(std::move(s));
        }
        if (f != free_orbit_check(grp.order(), gp, na + nb))
          r.failures.push_back(label + ": free submodule and free orbit disagree");
        ++r.permutation;
        ++r.direct_sums;
        mods.push_back(std::move(sum));
        labels.push_back(label);
        free_flag.push_back(f);
      }
    if (grp.generators().size() == 1)
      for (std::size_t d = 1; d <= std::min<std::size_t>(grp.order(), max_dim); ++d) {
        mods.push_back(jordan_block(grp, p, d));
        labels.push_back(id + " Jordan block of size " + std::to_string(d));
        free_flag.push_back(compare(mods.back(), labels.back()));
      }

    // submodules and quotients generated by single vectors, evenly spaced
    std::size_t base = mods.size();
    for (std::size_t i = 0; i < base; ++i) {
      if (mods[i].module.rank() > 4) continue;
      auto elems = mods[i].module.elements();
      std::size_t step = std::max<std::size_t>(1, elems.size() / 24);
      for (std::size_t e = 1; e < elems.size(); e += step) {
        const IntVec& v = elems[e];
        auto sp = submodule_pair(mods[i], {v});
        for (const GModule* part : {&sp.sub, &sp.quotient}) {
          if (part->module.is_trivial()) continue;
          bool f = compare(*part, labels[i] + " (subquotient)");
          // a direct sum contains F_p[P] iff a summand does
          const GModule& other = mods[(i * 7 + 3) % base];
          if (part->module.rank() + other.module.rank() <= max_dim) {
            bool fs = compare(direct_sum(*part, other), labels[i] + " (subquotient) + " + labels[(i * 7 + 3) % base]);
            if (fs != (f || free_flag[(i * 7 + 3) % base]))
              r.failures.push_back(labels[i] + ": free part of a direct sum");
            ++r.direct_sums;
          }
        }
      }
    }
  }
  return r;
}

}  // namespace fusion
