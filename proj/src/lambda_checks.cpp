#include <algorithm>

#include "fusion/abelian.hpp"
#include "fusion/limits.hpp"
#include "fusion/modules.hpp"

namespace fusion {

namespace {

std::vector<FinAb> groups_of(const std::vector<LimitResult>& r) {
  std::vector<FinAb> out;
  for (const auto& x : r) out.push_back(x.group);
  return out;
}

std::vector<FinAb> lambda_groups(const GModule& m, unsigned p, std::size_t k_max) {
  return groups_of(lambdas(m, p, k_max));
}

}  // namespace

std::vector<OneClassCheck> one_class_checks(const FusionSystem& f, std::size_t k_max, std::size_t regular_bound,
                                            BarOptions opt) {
  const auto& G = *f.ambient().root();
  unsigned p = f.prime();
  auto cat = orbit_category(f);
  BarOptions bar = opt;
  bar.n_max = std::max(bar.n_max, k_max + 1);
  std::vector<OneClassCheck> out;
  for (std::size_t at = 0; at < cat.object_count(); ++at) {
    const Subgroup& q = cat.object(at);
    Subgroup n = normalizer(f.ambient(), q);
    Subgroup qc = join(q, centralizer(f.ambient(), q));
    auto z = as_finab(center(q));
    GModule zq = module_from_action(n, z.finab(), [&](Elem g) {
      return induced_hom(z, z, [&](Elem x) { return G.conj(g, x); });
    });
    auto out_hom = quotient_hom(n, qc);
    Subgroup out_group = out_hom.image();

    auto run = [&](const std::string& value, const GModule& on_n, const GModule& on_out) {
      OneClassCheck c;
      c.object = f.index_of(q);
      c.value = value;
      c.out_order = out_group.order();
      // A morphism c_g of O(F^c) maps F(Q) -> F(Q) by g^-1.
      auto functor = atomic_functor(cat, at, on_n.module, [&](MorId m) { return on_n(G.inv(cat.morphism(m).witness)); });
      c.direct = groups_of(higher_limits(cat, functor, k_max, bar));
      c.lambda = lambda_groups(on_out, p, k_max);
      out.push_back(std::move(c));
    };

    run("Z(Q)", zq, quotient_module(zq, qc).module);

    std::vector<IntVec> multiples;
    for (std::size_t i = 0; i < z.finab().rank(); ++i) {
      IntVec v = z.finab().zero();
      v[i] = p;
      multiples.push_back(z.finab().reduce(v));
    }
    auto pair = submodule_pair(zq, multiples);
    if (!pair.sub.module.is_trivial()) run("Z(Q)/p", pair.quotient, quotient_module(pair.quotient, qc).module);

    if (out_group.order() <= regular_bound) {
      GModule reg = permutation_module(out_group, p);
      GModule inflated = module_from_action(n, reg.module, [&](Elem g) { return reg(out_hom(g)); });
      run("F_p[Out]", inflated, reg);
    }
  }
  return out;
}

bool exact_orders(const std::vector<BigInt>& orders) {
  BigInt image = 1;
  for (const auto& x : orders) {
    if (x % image != 0) return false;
    image = x / image;
  }
  return true;
}

LambdaProps check_lambda_props(const GModule& m, unsigned p, const std::vector<IntVec>& sub_gens, std::size_t k_max) {
  LambdaProps r;
  const Subgroup& g = m.group;
  auto fail = [&](const std::string& s) { r.failures.push_back(s); };
  auto all_zero = [](const std::vector<FinAb>& v) {
    return std::all_of(v.begin(), v.end(), [](const FinAb& a) { return a.is_trivial(); });
  };

  auto pair = submodule_pair(m, sub_gens);
  r.whole = lambda_groups(pair.whole, p, k_max);
  r.sub = lambda_groups(pair.sub, p, k_max);
  r.quotient = lambda_groups(pair.quotient, p, k_max);

  // (a) on G itself when p does not divide |G|, and on a Sylow q-subgroup for q != p.
  auto check_a = [&](const GModule& mod, const std::vector<FinAb>& l, const std::string& where) {
    std::vector<FinAbHom> act(mod.action.begin(), mod.action.end());
    FinAb fixed = fixed_points(mod.module, act).group.canonical_form();
    if (l[0] != fixed) fail("(a) " + where + ": Lambda^0 = " + l[0].to_string() + " but M^G = " + fixed.to_string());
    for (std::size_t k = 1; k < l.size(); ++k)
      if (!l[k].is_trivial()) fail("(a) " + where + ": Lambda^" + std::to_string(k) + " != 0");
    ++r.a_checked;
  };
  r.a_applies = g.order() % p != 0;
  if (r.a_applies) check_a(m, r.whole, "G");
  for (unsigned q : prime_divisors(g.order())) {
    if (q == p) continue;
    GModule h = restrict_module(m, sylow(g, q));
    check_a(h, lambda_groups(h, p, k_max), "Sylow " + std::to_string(q));
  }

  // (b)
  Subgroup ker = action_kernel(m);
  if (ker.order() % p == 0) {
    r.b_kernel_p = true;
    if (!all_zero(r.whole)) fail("(b) p divides the kernel but Lambda^* != 0");
  } else if (!ker.is_trivial()) {
    r.b_quotient = true;
    auto l = lambda_groups(quotient_module(m, ker).module, p, k_max);
    if (l != r.whole) fail("(b) Lambda(G; M) differs from Lambda(G/H; M)");
  }

  // (c)
  r.c_applies = !o_p(g, p).is_trivial();
  if (r.c_applies && !all_zero(r.whole)) fail("(c) O_p(G) != 1 but Lambda^* != 0");

  // (d): 0 -> L0(M0) -> L0(M) -> L0(M/M0) -> L1(M0) -> ...
  std::vector<BigInt> orders;
  for (std::size_t k = 0; k <= k_max; ++k) {
    orders.push_back(r.sub[k].order());
    orders.push_back(r.whole[k].order());
    orders.push_back(r.quotient[k].order());
  }
  r.d_checked = true;
  if (!exact_orders(orders)) fail("(d) orders are not those of an exact sequence");
  return r;
}

}  // namespace fusion
