#include "fusion/samples.hpp"

#include <numeric>
#include <random>

#include "fusion/corpus.hpp"

namespace fusion {

namespace {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t n) { return std::uniform_int_distribution<std::int64_t>(0, n - 1)(rng); }

/// A random automorphism of M (moduli ascending) that is unitriangular modulo
/// the Frattini subgroup, hence of p-power order.
FinAbHom random_unipotent(const FinAb& m, unsigned p, Rng& rng) {
  const auto& q = m.moduli();
  std::size_t r = q.size();
  IntMat a(r, IntVec(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) {
        a[i][i] = 1 + static_cast<std::int64_t>(p) * uniform(rng, q[i] / p);
      } else if (i < j) {
        std::int64_t step = q[i] / std::gcd(q[i], q[j]);
        a[i][j] = step * uniform(rng, q[i] / step);
      } else {
        std::int64_t step = std::lcm<std::int64_t>(p, q[i] / std::gcd(q[i], q[j]));
        a[i][j] = step >= q[i] ? 0 : step * uniform(rng, q[i] / step);
      }
    }
  return FinAbHom(m, m, a);
}

FinAbHom elementary(const FinAb& m, std::size_t i, std::size_t j, std::int64_t x) {
  std::size_t r = m.rank();
  IntMat a(r, IntVec(r, 0));
  for (std::size_t k = 0; k < r; ++k) a[k][k] = 1;
  a[i][j] = x;
  return FinAbHom(m, m, a);
}

FinAbHom diagonal(const FinAb& m, std::size_t i, std::int64_t x) {
  std::size_t r = m.rank();
  IntMat a(r, IntVec(r, 0));
  for (std::size_t k = 0; k < r; ++k) a[k][k] = 1;
  a[i][i] = x;
  return FinAbHom(m, m, a);
}

std::string moduli_label(const FinAb& m) {
  std::string s;
  for (auto q : m.moduli()) s += (s.empty() ? "" : "+") + std::to_string(q);
  return s;
}

}  // namespace

std::vector<ActionSample> offender_sample(unsigned p, std::uint64_t seed, std::size_t random_per_module) {
  if (p != 2 && p != 3) throw DomainError("offender samples are defined for p = 2 and 3");
  Rng rng(seed);
  std::size_t bound = p == 2 ? 64 : 81;
  std::vector<std::vector<std::int64_t>> mods =
      p == 2 ? std::vector<std::vector<std::int64_t>>{{2, 2}, {2, 2, 2}, {2, 2, 2, 2}, {2, 2, 2, 2, 2},
                                                      {2, 2, 2, 2, 2, 2}, {4}, {2, 4}, {4, 4}, {2, 2, 4},
                                                      {2, 8}, {2, 2, 2, 4}, {4, 8}}
             : std::vector<std::vector<std::int64_t>>{{3, 3}, {3, 3, 3}, {3, 3, 3, 3}, {9}, {3, 9}, {9, 9}, {3, 3, 9}};
  std::vector<ActionSample> out;
  auto add = [&](std::string label, const FinAb& m, const std::vector<FinAbHom>& gens, std::size_t max_order) {
    try {
      GModule g = module_from_matrices(m, gens, max_order, label);
      if (g.group.order() == 1) return;
      out.push_back({std::move(label), p, std::move(g)});
    } catch (const BoundExceeded&) {
    }
  };
  for (const auto& q : mods) {
    FinAb m = FinAb::cyclic_sum(q);
    std::string ml = moduli_label(m);
    bool elementary_module = std::all_of(q.begin(), q.end(), [&](std::int64_t x) { return x == p; });
    if (elementary_module) {
      std::vector<FinAbHom> gens;
      for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = i + 1; j < q.size(); ++j) gens.push_back(elementary(m, i, j, 1));
      add("U(" + ml + ")", m, gens, bound);
    }
    for (std::size_t k = 0; k < random_per_module; ++k) {
      std::size_t ngens = 1 + k % 3;
      std::vector<FinAbHom> gens;
      for (std::size_t i = 0; i < ngens; ++i) gens.push_back(random_unipotent(m, p, rng));
      add("R" + std::to_string(k) + "(" + ml + ")", m, gens, bound);
    }
  }
  // Linear groups, not p-groups.
  if (p == 2) {
    for (std::size_t n : {2, 3}) {
      FinAb m = FinAb::cyclic_sum(std::vector<std::int64_t>(n, 2));
      std::vector<FinAbHom> gens;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) gens.push_back(elementary(m, i, j, 1));
      add("GL(" + std::to_string(n) + ",2)", m, gens, 256);
    }
  } else {
    FinAb m = FinAb::cyclic_sum({3, 3});
    add("SL(2,3)", m, {elementary(m, 0, 1, 1), elementary(m, 1, 0, 1)}, 256);
    add("GL(2,3)", m, {elementary(m, 0, 1, 1), elementary(m, 1, 0, 1), diagonal(m, 0, 2)}, 256);
  }
  return out;
}

std::vector<LambdaSample> lambda_sample(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  std::vector<GroupPtr> ambients = {named_group("S4"), named_group("S5"), named_group("S6")};
  std::vector<LambdaSample> out;
  std::size_t attempt = 0;
  while (out.size() < count) {
    ++attempt;
    const GroupPtr& root = ambients[uniform(rng, static_cast<std::int64_t>(ambients.size()))];
    std::size_t ngens = 1 + static_cast<std::size_t>(uniform(rng, 2));
    std::vector<Elem> gens;
    for (std::size_t i = 0; i < ngens; ++i)
      gens.push_back(static_cast<Elem>(uniform(rng, static_cast<std::int64_t>(root->order()))));
    Subgroup g = generate(root, gens);
    if (g.order() > 72 || g.order() == 1) continue;
    unsigned p = uniform(rng, 2) ? 2 : 3;
    if (g.order() % p != 0 && uniform(rng, 3) != 0) continue;  // keep mostly p-singular groups
    std::size_t n = root->degree();
    GModule m;
    std::string kind;
    switch (uniform(rng, 5)) {
      case 0:
        if (p == 3 && n > 3) continue;
        m = permutation_module(g, p);
        kind = "perm" + std::to_string(p);
        break;
      case 1:
        m = sign_module(g, p == 2 ? 4 : 9);
        kind = "sign" + std::to_string(p == 2 ? 4 : 9);
        break;
      case 2:
        m = direct_sum(sign_module(g, p), sign_module(g, p * p));
        kind = "sign" + std::to_string(p) + "+sign" + std::to_string(p * p);
        break;
      case 3:
        m = GModule::trivial(g, FinAb::cyclic_sum({static_cast<std::int64_t>(p)}));
        kind = "triv" + std::to_string(p);
        break;
      default:
        if (p == 3) continue;
        m = direct_sum(permutation_module(g, 2), sign_module(g, 2));
        kind = "perm2+sign2";
        break;
    }
    if (m.module.order() > 64) continue;
    // M0: the submodule generated by a random element.
    IntVec v(m.module.rank());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = uniform(rng, m.module.moduli()[i]);
    std::string label = "G" + std::to_string(out.size()) + "<" + root->name() + ">|" + std::to_string(g.order()) +
                        "|:" + kind;
    out.push_back({std::move(label), p, std::move(m), {v}});
  }
  return out;
}

}  // namespace fusion
