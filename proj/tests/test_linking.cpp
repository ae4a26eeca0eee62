#include <map>
#include <set>

#include "doctest.h"
#include "fusion/corpus.hpp"
#include "fusion/linking.hpp"
#include "oracle.hpp"

using namespace fusion;

namespace {

using PermSet = std::set<Perm>;

std::size_t p_part_of(std::size_t n, unsigned p) {
  std::size_t q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

PermSet centralizer_of(const std::vector<Perm>& g, const PermSet& x) {
  PermSet out;
  for (const auto& e : g) {
    bool ok = true;
    for (const auto& y : x) ok = ok && e * y == y * e;
    if (ok) out.insert(e);
  }
  return out;
}

bool oracle_p_centric(const Subgroup& g, const Subgroup& p, unsigned prime) {
  auto ps = oracle::as_set(p);
  auto z = centralizer_of(oracle::perms(p), ps);
  auto c = centralizer_of(oracle::perms(g), ps);
  return z.size() == p_part_of(c.size(), prime);
}

// |{g : g P g^-1 <= Q}| and the number of distinct maps c_g on P among them.
std::pair<std::size_t, std::size_t> oracle_transport(const Subgroup& g, const Subgroup& p, const Subgroup& q) {
  auto qs = oracle::as_set(q);
  auto pp = oracle::perms(p);
  std::size_t n = 0;
  std::set<std::vector<Perm>> maps;
  for (const auto& x : oracle::perms(g)) {
    std::vector<Perm> img;
    bool ok = true;
    for (const auto& y : pp) {
      Perm c = x * y * x.inverse();
      ok = ok && qs.count(c);
      img.push_back(c);
    }
    if (!ok) continue;
    ++n;
    maps.insert(img);
  }
  return {n, maps.size()};
}

LinkingSystem linking_of(const char* id, unsigned p) {
  FusionOptions o;
  o.lattice_bound = 128;
  return LinkingSystem::construct(FusionSystem::make(whole(named_group(id, 40320)), p, o));
}

}  // namespace

TEST_CASE("p-centric subgroups") {
  auto s4 = whole(named_group("S4"));
  auto f = FusionSystem::make(s4, 2);
  const Subgroup& d8 = f->sylow();
  auto pc = p_centric(s4, d8, 2);
  CHECK(pc.centric);
  CHECK(pc.centralizer.order() == 2);
  CHECK(pc.center == pc.centralizer);
  CHECK(pc.c_prime.is_trivial());

  const auto& G = *s4.root();
  Elem t = G.index_of(parse_cycles("(1 2)", 4));
  auto c2 = generate(s4.root(), std::vector<Elem>{t});
  auto pt = p_centric(s4, c2, 2);
  CHECK_FALSE(pt.centric);
  CHECK(pt.centralizer.order() == 4);
  CHECK(pt.center == c2);

  // S3 x C2 at p = 3: C_G(C3) = C3 x C2, so C' is the C2 factor
  auto g = whole(named_group("S3xC2"));
  auto f3 = FusionSystem::make(g, 3);
  auto p3 = p_centric(g, f3->sylow(), 3);
  CHECK(p3.centric);
  CHECK(p3.c_prime.order() == 2);
  CHECK(p3.centralizer.order() == 6);

  for (const auto& id : corpus_ids())
    for (unsigned p : {2u, 3u}) {
      auto grp = whole(named_group(id, 40320));
      if (grp.order() % p || grp.order() > 720) continue;
      CAPTURE(id);
      auto fs = FusionSystem::make(grp, p);
      CHECK(p_centric(grp, fs->sylow(), p).centric);
      for (std::size_t i = 0; i < fs->object_count(); ++i) {
        bool pc2 = p_centric(grp, fs->object(i), p).centric;
        CHECK(pc2 == oracle_p_centric(grp, fs->object(i), p));
        CHECK(pc2 == fs->flags(i).f_centric);
      }
    }
}

TEST_CASE("linking system examples") {
  auto c2 = linking_of("C2", 2);
  REQUIRE(c2.object_count() == 1);
  CHECK(c2.mor(0, 0).size() == 2);
  CHECK(verify_axioms(c2).ok());

  auto s4 = linking_of("S4", 2);
  std::size_t d8 = s4.object_count(), v4 = s4.object_count();
  for (std::size_t i = 0; i < s4.object_count(); ++i) {
    if (s4.object(i).order() == 8) d8 = i;
    if (s4.object(i).order() == 4 && is_normal(s4.object(i), s4.fusion().ambient())) v4 = i;
  }
  REQUIRE(d8 < s4.object_count());
  REQUIRE(v4 < s4.object_count());
  CHECK(s4.mor(d8, d8).size() == 8);
  CHECK(s4.mor(v4, d8).size() == 24);
  CHECK(verify_axioms(s4).ok());

  auto s3 = linking_of("S3", 3);
  REQUIRE(s3.object_count() == 1);
  CHECK(s3.mor(0, 0).size() == 6);
  auto r3 = verify_axioms(s3);
  CHECK(r3.ok());
  CHECK(s3.fusion().hom(s3.fusion().index_of(s3.object(0)), s3.fusion().index_of(s3.object(0))).size() == 2);
}

TEST_CASE("morphism counts against brute force") {
  for (const char* id : {"S4", "S5", "A6", "GL(2,3)", "SL(2,3)", "SD16", "Q8", "GL(3,2)"})
    for (unsigned p : {2u, 3u}) {
      auto grp = whole(named_group(id));
      if (grp.order() % p) continue;
      CAPTURE(id);
      CAPTURE(p);
      auto l = LinkingSystem::construct(FusionSystem::make(grp, p));
      for (std::size_t i = 0; i < l.object_count(); ++i)
        for (std::size_t j = 0; j < l.object_count(); ++j) {
          auto [n, maps] = oracle_transport(grp, l.object(i), l.object(j));
          CHECK(l.mor(i, j).size() * l.c_prime(i).order() == n);
          CHECK(l.mor(i, j).size() == maps * l.center(i).order());
        }
    }
}

TEST_CASE("axioms hold on the corpus") {
  for (const auto& id : corpus_ids())
    for (unsigned p : {2u, 3u, 5u, 7u}) {
      auto grp = whole(named_group(id, 40320));
      if (grp.order() % p || (id == "S8" && p == 2)) continue;
      CAPTURE(id);
      CAPTURE(p);
      FusionOptions o;
      o.lattice_bound = 128;
      auto l = LinkingSystem::construct(FusionSystem::make(grp, p, o));
      auto r = verify_axioms(l);
      CHECK(r.ok());
      CHECK(r.axiom_a == r.objects * r.objects);
      CHECK(r.centric_agreement == l.fusion().object_count());
      CHECK(r.associativity > 0);
    }
}

TEST_CASE("lim^1, lim^2 and Out(S, F) reports") {
  auto c2 = FusionSystem::make(whole(named_group("C2")), 2);
  auto r = theorem_b_report(*c2);
  REQUIRE(r.out_sf.has_value());
  CHECK(*r.out_sf == 1);
  CHECK(r.lim1.is_trivial());
  CHECK(r.lim2.is_trivial());
  CHECK(r.consistency);

  auto s3 = FusionSystem::make(whole(named_group("S3")), 3);
  auto r3 = theorem_b_report(*s3);
  CHECK(r3.lim1.is_trivial());
  CHECK(r3.lim2.is_trivial());
  CHECK(r3.consistency);

  auto s4 = FusionSystem::make(whole(named_group("S4")), 2);
  auto r4 = theorem_b_report(*s4);
  CHECK(r4.lim2.is_trivial());
  CHECK(r4.consistency);
  MESSAGE("S4, p = 2: lim^1 = " << r4.lim1.to_string() << ", |Out(S,F)| = " << r4.out_sf.value_or(0));
}
