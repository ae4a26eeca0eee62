#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "fusion/abelian.hpp"
#include "fusion/complex.hpp"
#include "fusion/corpus.hpp"
#include "fusion/finab.hpp"

using namespace fusion;

namespace {

IntVec add(const FinAb& g, IntVec a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return g.reduce(a);
}

IntVec scale(const FinAb& g, IntVec a, std::int64_t n) {
  for (auto& x : a) x *= n;
  return g.reduce(a);
}

// For n = 1..e: the number of elements x with n x = 0. This sequence
// determines a finite abelian group up to isomorphism.
std::vector<std::size_t> torsion_profile(const FinAb& g, std::int64_t e) {
  std::vector<std::size_t> out;
  auto el = g.elements();
  for (std::int64_t n = 1; n <= e; ++n) {
    std::size_t c = 0;
    for (const auto& x : el)
      if (scale(g, x, n) == g.zero()) ++c;
    out.push_back(c);
  }
  return out;
}

// Brute-force profile of ker(g)/im(f) by enumerating B.
std::vector<std::size_t> brute_subquotient_profile(const FinAbHom& f, const FinAbHom& g, std::int64_t e) {
  const FinAb& B = g.source();
  std::set<IntVec> im;
  for (const auto& a : f.source().elements()) im.insert(f(a));
  std::vector<IntVec> ker;
  for (const auto& b : B.elements())
    if (g(b) == g.target().zero()) ker.push_back(b);
  std::vector<std::size_t> out;
  for (std::int64_t n = 1; n <= e; ++n) {
    std::size_t c = 0;
    for (const auto& x : ker)
      if (im.count(scale(B, x, n))) ++c;
    out.push_back(c / im.size());
  }
  return out;
}

FinAb random_group(std::mt19937& rng, std::size_t max_rank) {
  static const std::int64_t mods[] = {2, 3, 4, 6, 8, 9, 12};
  std::uniform_int_distribution<std::size_t> r(0, max_rank), m(0, 6);
  std::vector<std::int64_t> v;
  std::size_t k = r(rng);
  for (std::size_t i = 0; i < k; ++i) v.push_back(mods[m(rng)]);
  return FinAb::cyclic_sum(v);
}

// A random homomorphism: entries chosen so each column is annihilated by its
// source modulus, i.e. a multiple of t / gcd(s, t).
FinAbHom random_hom(std::mt19937& rng, const FinAb& s, const FinAb& t) {
  IntMat m(t.rank(), IntVec(s.rank()));
  for (std::size_t i = 0; i < t.rank(); ++i)
    for (std::size_t j = 0; j < s.rank(); ++j) {
      std::int64_t step = t.moduli()[i] / std::gcd(s.moduli()[j], t.moduli()[i]);
      std::uniform_int_distribution<std::int64_t> d(0, t.moduli()[i] / step - 1);
      m[i][j] = d(rng) * step;
    }
  return FinAbHom(s, t, m);
}

SparseMatrix to_sparse(const FinAbHom& h) {
  SparseMatrix m(h.target().rank(), h.source().rank());
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (h.entry(i, j)) m.add(i, j, h.entry(i, j));
  m.finalize(h.target());
  return m;
}

Subgroup sub(const GroupPtr& g, std::initializer_list<const char*> gens) {
  std::vector<Elem> e;
  for (const char* s : gens) e.push_back(g->index_of(parse_cycles(s, g->degree())));
  return generate(g, e);
}

}  // namespace

TEST_CASE("canonical forms") {
  CHECK(FinAb::canonical({2, 3}) == FinAb::cyclic_sum({6}));
  CHECK(FinAb::canonical({4, 2, 3}) == FinAb::cyclic_sum({2, 12}));
  CHECK(FinAb::canonical({1, 1}).is_trivial());
  CHECK(FinAb::canonical({}).to_string() == "0");
  CHECK(FinAb::cyclic_sum({2, 4}).to_string() == "Z/2 + Z/4");
  CHECK(FinAb::canonical({6, 10}).moduli() == std::vector<std::int64_t>{2, 30});
  CHECK_THROWS_AS(FinAb::cyclic_sum({0}), DomainError);
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    FinAb g = random_group(rng, 4);
    FinAb c = g.canonical_form();
    CHECK(c.is_canonical());
    CHECK(c.canonical_form() == c);  // idempotent
    CHECK(c.order() == g.order());
  }
}

TEST_CASE("as_finab on small groups") {
  auto v4 = named_group("C2xC2");
  CHECK(as_finab(whole(v4)).finab().moduli() == std::vector<std::int64_t>{2, 2});
  auto c6 = named_group("C6");
  CHECK(as_finab(whole(c6)).finab().moduli() == std::vector<std::int64_t>{6});
  CHECK(as_finab(trivial(c6)).finab().is_trivial());
  auto s3 = named_group("S3");
  CHECK_THROWS_AS(as_finab(whole(s3)), DomainError);

  // The coordinate map is a group isomorphism.
  for (const char* id : {"C4xC2", "C2xC6", "C3xC3", "C4xC4", "C2xC2xC2"}) {
    auto g = named_group(id);
    Subgroup G = whole(g);
    auto iso = as_finab(G);
    CHECK(iso.finab().is_canonical());
    CHECK(iso.finab().order() == G.order());
    for (Elem a : G.elements()) {
      CHECK(iso.from_vector(iso.to_vector(a)) == a);
      for (Elem b : G.elements())
        CHECK(iso.to_vector(g->mul(a, b)) == add(iso.finab(), iso.to_vector(a), iso.to_vector(b)));
    }
  }
}

TEST_CASE("induced homomorphisms") {
  auto v4 = named_group("C2xC2");
  auto iv = as_finab(whole(v4));
  auto id = induced_hom(iv, iv, [](Elem e) { return e; });
  CHECK(id == FinAbHom::identity(iv.finab()));

  auto c4 = named_group("C4");
  auto ic = as_finab(whole(c4));
  auto sq = induced_hom(ic, ic, [&](Elem e) { return c4->mul(e, e); });
  CHECK(sq.matrix() == IntMat{{2}});

  auto i2 = as_finab(sub(c4, {"(1 3)(2 4)"}));
  auto inc = induced_hom(i2, ic, [](Elem e) { return e; });
  CHECK(inc.matrix() == IntMat{{2}});

  // x -> x g for g != 1 is not a homomorphism
  CHECK_THROWS_AS(induced_hom(ic, ic, [&](Elem e) { return c4->mul(e, ic.generator(0)); }), DomainError);

  // functoriality: (sq o sq) = induced of x -> x^4
  auto four = induced_hom(ic, ic, [&](Elem e) { return c4->pow(e, 4); });
  CHECK(sq.compose(sq) == four);
}

TEST_CASE("subquotients") {
  FinAb z2 = FinAb::cyclic_sum({2}), z4 = FinAb::cyclic_sum({4}), z24 = FinAb::cyclic_sum({2, 4});
  CHECK(subquotient_cohomology(FinAbHom::zero(FinAb(), z2), FinAbHom::zero(z2, FinAb())).group == z2);
  FinAbHom twice(z4, z4, {{2}});
  auto h = subquotient_cohomology(twice, twice);
  CHECK(h.group.is_trivial());
  CHECK(subquotient_cohomology(FinAbHom::zero(FinAb(), z24), FinAbHom::zero(z24, FinAb())).group == z24);
  CHECK_THROWS_AS(subquotient_cohomology(FinAbHom::identity(z4), FinAbHom::identity(z4)), DomainError);
  CHECK_THROWS_AS(FinAbHom(z2, z4, {{1}}), DomainError);

  // Witnesses generate the right orders in the quotient.
  FinAb b = FinAb::cyclic_sum({4, 8});
  FinAbHom f(z2, b, {{2}, {4}});
  auto q = cokernel(f);
  CHECK(q.group.order() == 16);
  REQUIRE(q.witnesses.size() == q.group.rank());

  std::mt19937 rng(11);
  for (int t = 0; t < 300; ++t) {
    FinAb A = random_group(rng, 2), B = random_group(rng, 3), C = random_group(rng, 2);
    if (B.order() > 2000) continue;
    FinAbHom g = random_hom(rng, B, C);
    // Build f landing in ker g by composing a random map with the kernel inclusion.
    auto k = kernel(g);
    IntMat fm(B.rank(), IntVec(A.rank(), 0));
    FinAb kf = k.group;
    FinAbHom inc(kf, B, [&] {
      IntMat m(B.rank(), IntVec(kf.rank(), 0));
      for (std::size_t j = 0; j < kf.rank(); ++j)
        for (std::size_t i = 0; i < B.rank(); ++i) m[i][j] = k.witnesses[j][i];
      return m;
    }());
    FinAbHom f = inc.compose(random_hom(rng, A, kf));
    CHECK(g.compose(f).is_zero());
    auto hq = subquotient_cohomology(f, g);
    std::int64_t e = 1;
    for (auto m : B.moduli()) e = std::lcm(e, m);
    CHECK(torsion_profile(hq.group, e) == brute_subquotient_profile(f, g, e));
    // The sparse local route agrees.
    SparseMatrix sf = to_sparse(f), sg = to_sparse(g);
    CHECK(sparse_subquotient(A, B, C, &sf, &sg) == hq.group);
    // |ker g| * |im g| = |B|
    CHECK(kernel(g).group.order() * image(g).group.order() == B.order());
    // Witness of kernel lie in the kernel.
    for (const auto& w : k.witnesses) CHECK(g(w) == C.zero());
  }
}

TEST_CASE("fixed points and norms") {
  FinAb m = FinAb::cyclic_sum({2, 2});
  CHECK(fixed_points(m, {FinAbHom::identity(m)}).group == m);
  FinAbHom rho(m, m, {{0, 1}, {1, 1}});
  CHECK(fixed_points(m, {rho}).group.is_trivial());
  FinAb m3 = FinAb::cyclic_sum({3, 3});
  FinAbHom swap3(m3, m3, {{0, 1}, {1, 0}});
  CHECK(fixed_points(m3, {swap3}).group == FinAb::cyclic_sum({3}));
  CHECK_THROWS_AS(fixed_points(m, {FinAbHom::zero(m, m)}), DomainError);

  CHECK(norm_image(m, {FinAbHom::identity(m)}).group == m);
  FinAbHom swap2(m, m, {{0, 1}, {1, 0}});
  auto n = norm_image(m, {FinAbHom::identity(m), swap2});
  CHECK(n.group == FinAb::cyclic_sum({2}));
  REQUIRE(n.witnesses.size() == 1);
  CHECK(n.witnesses[0] == IntVec{1, 1});
  FinAb z2 = FinAb::cyclic_sum({2});
  CHECK(norm_image(z2, {FinAbHom::identity(z2), FinAbHom::identity(z2)}).group.is_trivial());

  // Oracle: element filter; and norm image lies in the fixed points.
  std::mt19937 rng(5);
  int tried = 0;
  while (tried < 60) {
    FinAb M = random_group(rng, 3);
    if (M.order() > 1024 || M.is_trivial()) continue;
    // Random automorphism of finite order by rejection, acting as a cyclic group.
    FinAbHom s = random_hom(rng, M, M);
    if (!is_automorphism(s)) continue;
    ++tried;
    std::vector<FinAbHom> powers{FinAbHom::identity(M)};
    while (!(powers.back().compose(s) == FinAbHom::identity(M))) powers.push_back(powers.back().compose(s));
    powers.push_back(powers.back().compose(s));
    powers.pop_back();
    auto fp = fixed_points(M, {s});
    std::size_t brute = 0;
    for (const auto& x : M.elements())
      if (s(x) == x) ++brute;
    CHECK(fp.group.order() == brute);
    auto nm = norm_image(M, powers);
    for (const auto& w : nm.witnesses) CHECK(s(w) == w);
    CHECK(fp.group.order() % nm.group.order() == 0);
  }
}

TEST_CASE("sparse complex cohomology agrees with the dense route") {
  std::mt19937 rng(3);
  for (int t = 0; t < 100; ++t) {
    // Complex 0 -> C0 -> C1 -> C2 -> C3 built from kernel inclusions.
    IntegerComplex cx;
    cx.groups.push_back(random_group(rng, 3));
    for (int n = 0; n < 3; ++n) {
      FinAb next = random_group(rng, 3);
      FinAbHom d = random_hom(rng, cx.groups.back(), next);
      if (n > 0) {
        // Precompose with the cokernel of the previous map: pick d vanishing
        // on the previous image by correcting through kernel of the transpose.
        FinAbHom prev = to_dense(cx.diffs.back(), cx.groups[n - 1], cx.groups[n]);
        if (!d.compose(prev).is_zero()) d = FinAbHom::zero(cx.groups.back(), next);
      }
      cx.diffs.push_back(to_sparse(d));
      cx.groups.push_back(next);
    }
    check_complex(cx);
    for (std::size_t n = 0; n < cx.groups.size(); ++n) CHECK(cohomology(cx, n) == cohomology_dense(cx, n));
  }
}
