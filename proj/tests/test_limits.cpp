#include <set>

#include "doctest.h"
#include "fusion/abelian.hpp"
#include "fusion/corpus.hpp"
#include "fusion/limits.hpp"
#include "fusion/modules.hpp"
#include "fusion/samples.hpp"

using namespace fusion;

namespace {

FusionPtr system_of(const char* id, unsigned p) { return FusionSystem::make(whole(named_group(id)), p); }

Subgroup cyclic_of_order(const Subgroup& s, std::uint32_t n) {
  for (Elem x : s.elements())
    if (s.root()->elem_order(x) == n) return generate(s.root(), std::vector<Elem>{x});
  return {};
}

std::size_t find_object(const FiniteCategory& c, const Subgroup& p) {
  for (std::size_t i = 0; i < c.object_count(); ++i)
    if (c.object(i) == p) return i;
  return c.object_count();
}

// Brute force lim^0: enumerate families (a_x) and keep the compatible ones.
std::size_t compatible_families(const FiniteCategory& c, const AbFunctor& f) {
  std::vector<std::vector<IntVec>> elems;
  for (const auto& v : f.values) elems.push_back(v.elements());
  std::vector<std::size_t> pick(elems.size(), 0);
  std::size_t count = 0;
  while (true) {
    bool ok = true;
    for (MorId g = 0; g < c.morphism_count() && ok; ++g) {
      const auto& m = c.morphism(g);
      if (f.maps[g](elems[m.dst][pick[m.dst]]) != elems[m.src][pick[m.src]]) ok = false;
    }
    count += ok;
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == elems[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return count;
}

FinAbHom scalar(const FinAb& m, std::int64_t s) {
  IntMat a(m.rank(), IntVec(m.rank(), 0));
  for (std::size_t i = 0; i < m.rank(); ++i) a[i][i] = s;
  return FinAbHom(m, m, a);
}

}  // namespace

TEST_CASE("orbit categories of fusion systems") {
  auto c2 = orbit_category(*system_of("C2", 2));
  CHECK(c2.object_count() == 1);
  CHECK(c2.morphism_count() == 1);

  auto s3 = orbit_category(*system_of("S3", 3));
  CHECK(s3.object_count() == 1);
  CHECK(s3.morphism_count() == 2);

  auto F = system_of("S4", 2);
  auto c = orbit_category(*F);
  CHECK(c.object_count() == 4);
  std::size_t top = find_object(c, F->sylow());
  REQUIRE(top < 4);
  CHECK(c.aut(top).size() == 1);
  for (std::size_t a = 0; a < c.object_count(); ++a)
    for (std::size_t b = 0; b < c.object_count(); ++b) {
      std::size_t ia = F->index_of(c.object(a)), ib = F->index_of(c.object(b));
      std::size_t inn = c.object(b).order() / center(c.object(a)).order();
      CHECK(c.mor(a, b).size() * inn == F->hom(ia, ib).size());
    }
}

TEST_CASE("p-orbit categories") {
  auto C2 = named_group("C2");
  auto o = p_orbit_category(whole(C2), 2);
  REQUIRE(o.object_count() == 2);
  CHECK(o.object(0).is_trivial());
  CHECK(o.mor(0, 1).size() == 1);
  CHECK(o.aut(0).size() == 2);
  CHECK(o.aut(1).size() == 1);

  auto triv = p_orbit_category(trivial(C2), 2);
  CHECK(triv.object_count() == 1);
  CHECK(triv.morphism_count() == 1);

  auto o3 = p_orbit_category(whole(named_group("S3")), 2);
  REQUIRE(o3.object_count() == 2);
  CHECK(o3.aut(0).size() == 6);
  CHECK(o3.mor(0, 1).size() == 3);
  CHECK(o3.aut(1).size() == 1);
  CHECK(o3.mor(1, 0).empty());
}

TEST_CASE("full subcategories and skeleta") {
  auto F = system_of("S4", 2);
  auto c = orbit_category(*F);
  auto sub = c.full_subcategory({0, 2});
  CHECK(sub.object_count() == 2);
  CHECK(sub.mor(0, 1).size() == c.mor(0, 2).size());

  // Every F-centric subgroup is isomorphic to exactly one skeleton object.
  // In SL(2,3) the three cyclic subgroups of order 4 are fused.
  F = system_of("SL(2,3)", 2);
  c = orbit_category(*F);
  auto big = orbit_category(*F, {false});
  for (std::size_t i = 0; i < big.object_count(); ++i) {
    std::size_t hits = 0;
    for (std::size_t j = 0; j < c.object_count(); ++j)
      if (F->class_of(F->index_of(big.object(i))) == F->class_of(F->index_of(c.object(j)))) ++hits;
    CHECK(hits == 1);
  }
  CHECK(big.object_count() > c.object_count());
}

TEST_CASE("z functor values and maps") {
  auto c2f = system_of("C2", 2);
  auto c2 = orbit_category(*c2f);
  auto z2 = z_functor(*c2f, c2);
  CHECK(z2.values[0] == FinAb::cyclic_sum({2}));

  auto F = system_of("S4", 2);
  auto c = orbit_category(*F);
  Subgroup v4 = o_p(F->ambient(), 2);
  auto iv = overgroup_interval(*F, v4);
  CHECK(iv.size() == 2);
  auto z = z_functor(*F, c, iv);
  std::size_t a = find_object(c, v4), b = find_object(c, F->sylow());
  REQUIRE(a < 4);
  CHECK(z.values[a] == FinAb::cyclic_sum({2, 2}));
  CHECK(z.values[b] == FinAb::cyclic_sum({2}));
  for (std::size_t x = 0; x < c.object_count(); ++x)
    if (x != a && x != b) CHECK(z.values[x].is_trivial());
  // Aut_F(V4) = S3 modulo Inn(D8) acting with orbits of size 2.
  REQUIRE(c.mor(a, b).size() == 3);
  for (MorId f : c.mor(a, b)) {
    const auto& inc = z.maps[f];
    CHECK_FALSE(inc.is_zero());
    CHECK(kernel(inc).group.is_trivial());
  }

  auto only_top = make_interval(*F, std::vector<std::size_t>{F->index_of(F->sylow())});
  auto zt = z_functor(*F, c, only_top);
  for (std::size_t x = 0; x < c.object_count(); ++x) CHECK(zt.values[x].is_trivial() == (x != b));

  // Non-centric members are rejected.
  auto bad = make_interval(*F, [](const Subgroup&) { return true; });
  CHECK_THROWS_AS(z_functor(*F, c, bad), DomainError);
}

TEST_CASE("objectwise short exact sequence of interval functors") {
  auto F = system_of("S4", 2);
  auto c = orbit_category(*F);
  auto full = centric_interval(*F);
  Subgroup v4 = o_p(F->ambient(), 2);
  auto upper = overgroup_interval(*F, v4);  // R_0: nothing in R_0 lies below R \ R_0
  std::vector<std::size_t> rest;
  for (std::size_t i : full.members())
    if (!upper.contains(i)) rest.push_back(i);
  auto lower = make_interval(*F, rest);
  auto zr = z_functor(*F, c, full);
  auto z0 = z_functor(*F, c, upper);
  auto z1 = z_functor(*F, c, lower);
  for (std::size_t x = 0; x < c.object_count(); ++x)
    CHECK(zr.values[x].order() == z0.values[x].order() * z1.values[x].order());
}

TEST_CASE("atomic functors") {
  auto F = system_of("S4", 2);
  auto c = orbit_category(*F);
  Subgroup c4 = cyclic_of_order(F->sylow(), 4);
  std::size_t at = find_object(c, c4);
  REQUIRE(at < c.object_count());
  CHECK(c.aut(at).size() == 2);
  FinAb m = FinAb::cyclic_sum({4});
  const auto& G = *F->ambient().root();
  Elem gen = c4.generators()[0];
  auto act = [&](MorId f) {
    Elem w = c.morphism(f).witness;
    return G.conj(G.inv(w), gen) == gen ? scalar(m, 1) : scalar(m, -1);
  };
  auto af = atomic_functor(c, at, m, act);
  // It agrees with the one-class restriction of Z_F at C4.
  auto one = make_interval(*F, std::vector<std::size_t>{F->index_of(c4)});
  auto zc = z_functor(*F, c, one);
  for (MorId f : c.aut(at)) CHECK(af.maps[f].matrix() == zc.maps[f].matrix());

  // Z/4 with a non-multiplicative assignment is rejected.
  auto broken = [&](MorId f) { return c.morphism(f).identity ? scalar(m, 3) : scalar(m, 1); };
  CHECK_THROWS_WITH_AS(atomic_functor(c, at, m, broken), "action not well defined", DomainError);

  // Trivial automorphism group: any M.
  auto c2f = system_of("C2", 2);
  auto cc = orbit_category(*c2f);
  auto t = atomic_functor(cc, 0, FinAb::cyclic_sum({3, 9}), [&](MorId) { return FinAbHom::identity(FinAb::cyclic_sum({3, 9})); });
  CHECK(t.values[0].order() == 27);
}

TEST_CASE("bar complex shapes") {
  auto c2f = system_of("C2", 2);
  auto c = orbit_category(*c2f);
  auto z = z_functor(*c2f, c);
  auto bc = bar_complex(c, z);
  CHECK(bc.complex.groups[0] == FinAb::cyclic_sum({2}));
  for (std::size_t n = 1; n < bc.complex.groups.size(); ++n) CHECK(bc.complex.groups[n].is_trivial());

  auto C2 = named_group("C2");
  auto op = p_orbit_category(whole(C2), 2);
  auto fm = module_functor(op, GModule::trivial(whole(C2), FinAb::cyclic_sum({2})));
  BarOptions o;
  o.n_max = 3;
  auto b2 = bar_complex(op, fm, o);
  CHECK(b2.string_count(0) == 1);
  // Nonidentity strings from 1: one automorphism and one map to C2 at each step.
  CHECK(b2.string_count(1) == 2);
  CHECK(b2.string_count(2) == 2);
  CHECK(b2.string_count(3) == 2);

  AbFunctor zero;
  zero.values.assign(op.object_count(), FinAb());
  for (MorId f = 0; f < op.morphism_count(); ++f) zero.maps.push_back(FinAbHom::zero(FinAb(), FinAb()));
  auto b0 = bar_complex(op, zero);
  for (const auto& g : b0.complex.groups) CHECK(g.is_trivial());

  o.max_strings = 3;
  CHECK_THROWS_WITH_AS(bar_complex(op, fm, o), "complex too large", BoundExceeded);
}

TEST_CASE("higher limits of Z_F") {
  auto c2f = system_of("C2", 2);
  auto c = orbit_category(*c2f);
  auto l = higher_limits(c, z_functor(*c2f, c), 2);
  CHECK(l[0].group == FinAb::cyclic_sum({2}));
  CHECK(l[1].group.is_trivial());
  CHECK(l[2].group.is_trivial());

  auto s3 = system_of("S3", 3);
  auto cs = orbit_category(*s3);
  auto ls = higher_limits(cs, z_functor(*s3, cs), 2);
  for (const auto& r : ls) CHECK(r.group.is_trivial());

  for (const char* id : {"S4", "A4", "D8", "Q8", "SL(2,3)", "GL(3,2)", "S5"}) {
    auto F = system_of(id, 2);
    auto C = orbit_category(*F);
    auto Z = z_functor(*F, C);
    auto r = higher_limits(C, Z, 3);
    INFO(id);
    // lim^0(Z_F) = Z(F) is the center of the ambient group intersected with S here.
    CHECK(r[0].group == inverse_limit(C, Z));
    CHECK(r[0].group.order() == compatible_families(C, Z));
    CHECK(r[2].group.is_trivial());
    CHECK(r[3].group.is_trivial());
  }
}

TEST_CASE("sparse and dense cohomology agree on bar complexes") {
  for (const char* id : {"S4", "SD16", "GL(2,3)"}) {
    auto F = system_of(id, 2);
    auto C = orbit_category(*F);
    auto Z = z_functor(*F, C);
    BarOptions o;
    o.n_max = 3;
    auto bc = bar_complex(C, Z, o);
    for (std::size_t k = 0; k < 3; ++k) CHECK(cohomology(bc.complex, k) == cohomology_dense(bc.complex, k));
  }
}

TEST_CASE("skeleton invariance of higher limits") {
  for (const char* id : {"S4", "A4", "D8", "SL(2,3)"}) {
    auto F = system_of(id, 2);
    auto small = orbit_category(*F);
    auto big = orbit_category(*F, {false});
    auto a = higher_limits(small, z_functor(*F, small), 2);
    auto b = higher_limits(big, z_functor(*F, big), 2);
    for (std::size_t k = 0; k <= 2; ++k) CHECK(a[k].group == b[k].group);
  }
}

TEST_CASE("fixed point lemma instance") {
  auto F = system_of("S4", 2);
  Subgroup v4 = o_p(F->ambient(), 2);
  check_setup(*F, v4);
  auto C = orbit_category(*F);
  auto Z = z_functor(*F, C, overgroup_interval(*F, v4));
  auto r = higher_limits(C, Z, 2);
  CHECK(r[0].group.order() == center(F->ambient()).order());
  CHECK(r[1].group.is_trivial());
  CHECK(r[2].group.is_trivial());
}

TEST_CASE("restriction to a full subcategory") {
  auto F = system_of("S4", 2);
  auto C = orbit_category(*F);
  Subgroup v4 = o_p(F->ambient(), 2);
  auto iv = overgroup_interval(*F, v4);
  auto Z = z_functor(*F, C, iv);
  std::vector<std::size_t> keep;
  for (std::size_t x = 0; x < C.object_count(); ++x)
    if (!Z.values[x].is_trivial()) keep.push_back(x);
  auto sub = C.full_subcategory(keep);
  AbFunctor zs;
  for (std::size_t x : keep) zs.values.push_back(Z.values[x]);
  for (MorId f = 0; f < sub.morphism_count(); ++f) {
    const auto& m = sub.morphism(f);
    for (MorId g : C.mor(keep[m.src], keep[m.dst]))
      if (C.morphism(g).witness == m.witness) {
        zs.maps.push_back(Z.maps[g]);
        break;
      }
  }
  REQUIRE(zs.maps.size() == sub.morphism_count());
  auto a = higher_limits(C, Z, 2), b = higher_limits(sub, zs, 2);
  for (std::size_t k = 0; k <= 2; ++k) CHECK(a[k].group == b[k].group);
}

TEST_CASE("Lambda examples") {
  auto C3 = whole(named_group("C3"));
  auto l = lambdas(GModule::trivial(C3, FinAb::cyclic_sum({2})), 2, 2);
  CHECK(l[0].group == FinAb::cyclic_sum({2}));
  CHECK(l[1].group.is_trivial());
  CHECK(l[2].group.is_trivial());

  auto C2 = whole(named_group("C2"));
  for (const auto& r : lambdas(GModule::trivial(C2, FinAb::cyclic_sum({2, 4})), 2, 2)) CHECK(r.group.is_trivial());

  auto S3 = whole(named_group("S3"));
  for (const auto& r : lambdas(GModule::trivial(S3, FinAb::cyclic_sum({2})), 2, 2)) CHECK(r.group.is_trivial());

  // S3 acting on Z/3 through the sign: H = C3 has order prime to 2, so
  // Lambda(S3; M) = Lambda(C2; M) = 0 by O_2(C2) != 1.
  FinAb z3 = FinAb::cyclic_sum({3});
  std::vector<FinAbHom> imgs;
  const auto& G = *S3.root();
  for (Elem g : S3.generators()) {
    std::size_t moved = 0;
    for (Point k = 0; k < G.degree(); ++k) moved += G.apply(g, k) != k;
    imgs.push_back(moved == 2 ? scalar(z3, -1) : scalar(z3, 1));
  }
  auto sign = GModule::from_generators(S3, z3, imgs);
  // Z/3 is not 2-local.
  CHECK_THROWS_AS(lambdas(sign, 2, 2), DomainError);
  // O_3(S3) = C3 != 1.
  for (const auto& r : lambdas(sign, 3, 2)) CHECK(r.group.is_trivial());

  // The sum-zero part of the permutation module F_2^3 is the Steinberg
  // module of S3 = GL(2,2): free over a Sylow 2-subgroup, Lambda^1 = Z/2.
  FinAb v = FinAb::cyclic_sum({2, 2});
  std::vector<FinAbHom> perm_imgs;
  for (Elem g : S3.generators()) {
    // Basis e1+e2, e2+e3; a sum-zero vector (x1,x2,x3) has coordinates (x1, x3).
    IntMat a(2, IntVec(2, 0));
    for (int j = 0; j < 2; ++j) {
      int x[3] = {0, 0, 0};
      x[G.apply(g, static_cast<Point>(j))] ^= 1;
      x[G.apply(g, static_cast<Point>(j + 1))] ^= 1;
      a[0][j] = x[0];
      a[1][j] = x[2];
    }
    perm_imgs.push_back(FinAbHom(v, v, a));
  }
  auto st = lambdas(GModule::from_generators(S3, v, perm_imgs), 2, 2);
  CHECK(st[0].group.is_trivial());
  CHECK(st[1].group == FinAb::cyclic_sum({2}));
  CHECK(st[2].group.is_trivial());

  // Inconsistent generator images.
  std::vector<FinAbHom> wrong(S3.generators().size(), scalar(FinAb::cyclic_sum({5}), 2));
  CHECK_THROWS_AS(GModule::from_generators(S3, FinAb::cyclic_sum({5}), wrong), DomainError);
}

TEST_CASE("Lambda from subgroup chains agrees with the orbit category") {
  BarOptions direct;
  direct.lambda_method = LambdaMethod::orbit_category;
  auto same = [&](const GModule& m, unsigned p) {
    auto a = lambdas(m, p, 2);
    auto b = lambdas(m, p, 2, direct);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      CAPTURE(k);
      CHECK(a[k].group == b[k].group);
    }
  };
  for (const char* id : {"S3", "A4", "D8", "C3", "C2xC2", "D10"})
    for (unsigned p : {2u, 3u, 5u}) {
      CAPTURE(id);
      CAPTURE(p);
      auto g = whole(named_group(id));
      same(permutation_module(g, p), p);
      same(GModule::trivial(g, FinAb::cyclic_sum({p, p * p})), p);
    }
  std::size_t n = 0;
  for (const auto& s : lambda_sample(7, 80)) {
    if (s.module.group.order() > 12) continue;
    CAPTURE(s.label);
    same(s.module, s.p);
    ++n;
  }
  CHECK(n >= 20);
}

TEST_CASE("gamma star and the short exact sequence") {
  auto F = system_of("S4", 2);
  Subgroup v4 = o_p(F->ambient(), 2);
  auto iys = overgroup_interval(*F, v4);

  auto r1 = gamma_star(*F, v4, iys);
  CHECK(r1.gamma_star == F->ambient());
  CHECK(r1.lim1_r.is_trivial());
  CHECK(r1.ses_check);

  auto top = make_interval(*F, std::vector<std::size_t>{F->index_of(F->sylow())});
  auto r2 = gamma_star(*F, v4, top);
  CHECK(r2.gamma_star == normalizer(F->ambient(), F->sylow()));
  CHECK(r2.ses_check);
  CHECK(BigInt(r2.cz_gamma_star) == BigInt(r2.cz_gamma) * r2.lim1_r.order());

  auto D8 = system_of("D8", 2);
  auto r3 = gamma_star(*D8, D8->sylow(), overgroup_interval(*D8, D8->sylow()));
  CHECK(r3.gamma_star == D8->ambient());
  CHECK(r3.lim1_r.is_trivial());
  CHECK(r3.ses_check);

  // Y = C4 is not normal in S4.
  CHECK_THROWS_WITH_AS(check_setup(*F, cyclic_of_order(F->sylow(), 4)), "setup invalid", DomainError);
}

TEST_CASE("vanishing reports") {
  auto r = verify_vanishing(*system_of("S4", 2), 2, 3);
  CHECK(r.ok());
  CHECK(r.entries.size() == 2);
  auto r3 = verify_vanishing(*system_of("S3", 3), 1, 2);
  CHECK(r3.ok());
  CHECK(verify_vanishing(*system_of("C2", 2), 2, 2).ok());
  CHECK(KofP(2).value == 2);
  CHECK(KofP(3).value == 1);
  CHECK(KofP(7).value == 1);
}

TEST_CASE("exact_orders") {
  auto v = [](std::initializer_list<int> xs) {
    std::vector<BigInt> out;
    for (int x : xs) out.push_back(x);
    return out;
  };
  CHECK(exact_orders(v({})));
  CHECK(exact_orders(v({1, 1, 1})));
  CHECK(exact_orders(v({2, 4, 2})));    // 0 -> Z/2 -> Z/4 -> Z/2
  CHECK(exact_orders(v({2, 2, 1, 3, 3})));
  CHECK_FALSE(exact_orders(v({2, 1})));  // Z/2 cannot inject into 0
  CHECK_FALSE(exact_orders(v({2, 6, 2})));
  CHECK_FALSE(exact_orders(v({3, 2})));
}

TEST_CASE("Lambda properties on named modules") {
  auto S3 = whole(named_group("S3"));
  // p does not divide |C3|: (a) applies, Lambda^0 = fixed points, higher vanish.
  auto C3 = whole(named_group("C3"));
  auto a = check_lambda_props(permutation_module(C3, 2), 2, {});
  CHECK(a.a_applies);
  CHECK(a.ok());
  CHECK(a.whole[0] == FinAb::cyclic_sum({2}));
  for (std::size_t k = 1; k < a.whole.size(); ++k) CHECK(a.whole[k].is_trivial());

  // trivial module: C_G(M) = G has order divisible by p.
  auto b = check_lambda_props(GModule::trivial(S3, FinAb::cyclic_sum({2})), 2, {});
  CHECK(b.b_kernel_p);
  CHECK(b.ok());
  for (const auto& l : b.whole) CHECK(l.is_trivial());

  // O_2(D8) != 1.
  auto D8 = whole(named_group("D8"));
  auto c = check_lambda_props(permutation_module(D8, 2), 2, {});
  CHECK(c.c_applies);
  CHECK(c.ok());

  // (d) for the sum-one vector in F_2^3 over S3.
  auto m = permutation_module(S3, 2);
  auto d = check_lambda_props(m, 2, {IntVec(m.module.rank(), 1)});
  CHECK(d.d_checked);
  CHECK(d.ok());
  // the submodule is trivial, the quotient is the Steinberg module
  for (const auto& l : d.sub) CHECK(l.is_trivial());
  CHECK(d.quotient[1] == FinAb::cyclic_sum({2}));
  CHECK(d.whole[1] == FinAb::cyclic_sum({2}));
}

TEST_CASE("Lambda properties on random modules") {
  std::size_t a = 0, b = 0, c = 0, n = 0;
  for (const auto& s : lambda_sample(11, 40)) {
    CAPTURE(s.label);
    auto r = check_lambda_props(s.module, s.p, s.sub_gens, 2);
    CHECK(r.ok());
    for (const auto& f : r.failures) MESSAGE(f);
    a += r.a_checked > 0;
    b += r.b_kernel_p || r.b_quotient;
    c += r.c_applies;
    ++n;
  }
  CHECK(n == 40);
  CHECK(a > 0);
  CHECK(b > 0);
  CHECK(c > 0);
}

TEST_CASE("one-class functors agree with Lambda of Out") {
  for (auto [id, p] : std::vector<std::pair<const char*, unsigned>>{{"S3", 3}, {"S4", 2}, {"A4", 2}, {"D8", 2}}) {
    CAPTURE(id);
    auto f = system_of(id, p);
    auto checks = one_class_checks(*f, 2);
    CHECK(!checks.empty());
    for (const auto& c : checks) {
      CAPTURE(c.value);
      CHECK(c.direct.size() == 3);
      CHECK(c.agree());
    }
  }
  // S3 at 2: Q = C2 with Out = 1, so F_2[Out] has Lambda^0 = Z/2.
  auto checks = one_class_checks(*system_of("S3", 2), 2);
  bool seen = false;
  for (const auto& c : checks)
    if (c.value == "F_p[Out]") {
      seen = true;
      CHECK(c.out_order == 1);
      CHECK(c.lambda[0] == FinAb::cyclic_sum({2}));
    }
  CHECK(seen);
}
