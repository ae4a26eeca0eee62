#include <set>

#include "doctest.h"
#include "fusion/corpus.hpp"
#include "fusion/offenders.hpp"
#include "fusion/samples.hpp"
#include "oracle.hpp"

using namespace fusion;

namespace {

FinAbHom mat(const FinAb& m, IntMat a) { return FinAbHom(m, m, std::move(a)); }

bool abelian(const std::set<Perm>& s) {
  for (const auto& a : s)
    for (const auto& b : s)
      if (a * b != b * a) return false;
  return true;
}

// |A| |C_M(A)| straight from the matrices.
std::uint64_t score(const GModule& m, const std::vector<Elem>& a) {
  std::uint64_t fixed = 0;
  for (const auto& v : m.module.elements()) {
    bool ok = true;
    for (Elem g : a)
      if (m(g)(v) != v) ok = false;
    fixed += ok;
  }
  return a.size() * fixed;
}

std::vector<Elem> to_elems(const GroupPtr& g, const std::set<Perm>& s) {
  std::vector<Elem> out;
  for (const auto& x : s) out.push_back(g->index_of(x));
  std::sort(out.begin(), out.end());
  return out;
}

bool oracle_best(const GModule& m, const Subgroup& a) {
  auto sa = score(m, {a.elements().begin(), a.elements().end()});
  for (const auto& b : oracle::all_subgroups(oracle::perms(a)))
    if (score(m, to_elems(a.root(), b)) > sa) return false;
  return true;
}

}  // namespace

TEST_CASE("Thompson subgroups of small 2-groups") {
  auto d8 = whole(named_group("D8"));
  auto t = thompson(d8, 2);
  CHECK(t.d == 4);
  CHECK(t.a.size() == 3);
  CHECK(t.j == d8);
  std::size_t n4 = 0;
  for (const auto& s : oracle::all_subgroups(oracle::perms(d8))) n4 += s.size() == 4 && abelian(s);
  CHECK(n4 == 3);

  auto q8 = whole(named_group("Q8"));
  auto tq = thompson(q8, 2);
  CHECK(tq.d == 4);
  CHECK(tq.a.size() == 3);
  for (const auto& a : tq.a) CHECK(a.root()->elem_order(a.generators()[0]) == 4);
  CHECK(tq.j == q8);

  auto v = whole(named_group("C2xC4"));
  auto tv = thompson(v, 2);
  CHECK(tv.d == 8);
  CHECK(tv.a.size() == 1);
  CHECK(tv.j == v);
  CHECK_THROWS_AS(thompson(whole(named_group("S3")), 2), DomainError);
}

TEST_CASE("abelian subgroups match brute force") {
  for (const char* id : {"S4", "D8", "Q8", "SL(2,3)"}) {
    auto g = whole(named_group(id));
    std::size_t expect = 0;
    for (const auto& s : oracle::all_subgroups(oracle::perms(g))) expect += abelian(s);
    CHECK(abelian_subgroups(g).size() == expect);
  }
}

TEST_CASE("best offenders on small modules") {
  FinAb v2 = FinAb::cyclic_sum({2, 2});
  // A transvection: C_V(A) is a line, score 2 * 2 = |V|.
  auto t = module_from_matrices(v2, {mat(v2, {{1, 1}, {0, 1}})}, 64);
  auto scan = best_offenders(t, 2);
  REQUIRE(scan.nontrivial_best.size() == 1);
  const auto& r = scan.records[scan.nontrivial_best[0]];
  CHECK(r.score == 4);
  CHECK(r.quadratic);
  CHECK(r.a == t.group);
  CHECK(scan.j_d == t.group);

  // An element of order 3 has no fixed vectors; the trivial subgroup is the only best offender.
  auto c3 = module_from_matrices(v2, {mat(v2, {{0, 1}, {1, 1}})}, 64);
  auto s3 = best_offenders(c3, 2);
  CHECK(s3.nontrivial_best.empty());
  CHECK(s3.j_d.is_trivial());
  CHECK(s3.records.size() == 2);
  CHECK(s3.records[1].score == 3);
  CHECK(!s3.records[1].best);

  // The swap on (Z/3)^2 at p = 3 scores 2 * 3 < 9.
  FinAb v3 = FinAb::cyclic_sum({3, 3});
  auto sw = module_from_matrices(v3, {mat(v3, {{0, 1}, {1, 0}})}, 64);
  CHECK(best_offenders(sw, 3).nontrivial_best.empty());

  CHECK_THROWS_AS(best_offenders(GModule::trivial(whole(named_group("C2")), v2), 2), DomainError);
  CHECK_THROWS_AS(best_offenders(c3, 3), DomainError);
}

TEST_CASE("offender scans agree with direct scores") {
  for (unsigned p : {2u, 3u}) {
    for (const auto& s : offender_sample(p, 7, 2)) {
      if (s.module.group.order() > 32) continue;
      auto scan = best_offenders(s.module, p);
      for (const auto& r : scan.records) {
        std::vector<Elem> a(r.a.elements().begin(), r.a.elements().end());
        CHECK(r.score == score(s.module, a));
        CHECK(r.best == oracle_best(s.module, r.a));
        if (r.best) CHECK(is_p_group(r.a, p));
      }
    }
  }
}

TEST_CASE("J(Gamma, D)") {
  auto d8 = whole(named_group("D8"));
  CHECK(j_gamma_d(d8, center(d8), 2) == d8);

  auto s4 = whole(named_group("S4"));
  auto v4 = o_p(s4, 2);
  REQUIRE(v4.order() == 4);
  CHECK(j_gamma_d(s4, v4, 2) == s4);
  // The quotient S3 on V4: the three transpositions are the nontrivial best offenders.
  auto qa = quotient_action(s4, v4, 2);
  CHECK(qa.module.group.order() == 6);
  CHECK(best_offenders(qa.module, 2).nontrivial_best.size() == 3);

  auto v = whole(named_group("C2xC2"));
  CHECK(j_gamma_d(v, v, 2) == v);

  auto d = sylow(s4, 2);
  CHECK_THROWS_AS(j_gamma_d(s4, center(d), 2), DomainError);
  CHECK_THROWS_AS(j_gamma_d(s4, d, 2), DomainError);
}

TEST_CASE("Timmesfeld replacement examples") {
  FinAb v2 = FinAb::cyclic_sum({2, 2});
  auto t = module_from_matrices(v2, {mat(v2, {{1, 1}, {0, 1}})}, 64);
  auto r = timmesfeld(t, t.group, 2);
  CHECK(r.b == t.group);
  CHECK(r.commutator.order() == 2);
  CHECK(r.cv_b == r.cv_a);
  CHECK(r.cv_b.order() == 2);
  CHECK(r.ok());

  // Two commuting transvections with a common centralized plane.
  FinAb v3 = FinAb::cyclic_sum({2, 2, 2});
  auto two = module_from_matrices(v3, {mat(v3, {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}),
                                       mat(v3, {{1, 0, 0}, {0, 1, 1}, {0, 0, 1}})},
                                  64);
  REQUIRE(two.group.order() == 4);
  auto r2 = timmesfeld(two, two.group, 2);
  CHECK(r2.b == two.group);
  CHECK(r2.commutator.order() == 4);
  CHECK(r2.cv_b.order() == 4);
  CHECK(r2.score_a == 16);

  // A full Sylow 2-subgroup of GL(3,2) is not abelian.
  FinAb w = FinAb::cyclic_sum({2, 2, 2});
  auto u = module_from_matrices(w, {mat(w, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}),
                                    mat(w, {{1, 0, 0}, {0, 1, 1}, {0, 0, 1}})},
                                64);
  CHECK_THROWS_AS(timmesfeld(u, u.group, 2), DomainError);
  CHECK_THROWS_AS(timmesfeld(t, trivial(t.group.root()), 2), DomainError);
}

TEST_CASE("Timmesfeld replacement on sampled best offenders") {
  for (unsigned p : {2u, 3u}) {
    std::size_t n = 0;
    for (const auto& s : offender_sample(p, 3, 3)) {
      auto scan = best_offenders(s.module, p);
      for (std::size_t i : scan.nontrivial_best) {
        const Subgroup& a = scan.records[i].a;
        auto r = timmesfeld(s.module, a, p);
        CHECK(r.ok());
        // B recomputed from the matrices: elements of A fixing every a v - v.
        std::vector<Elem> b;
        for (Elem x : a.elements()) {
          bool ok = true;
          for (Elem y : a.elements())
            for (const auto& v : s.module.module.elements()) {
              IntVec w = s.module(y)(v);
              for (std::size_t k = 0; k < w.size(); ++k) w[k] -= v[k];
              w = s.module.module.reduce(w);
              if (s.module(x)(w) != w) ok = false;
            }
          if (ok) b.push_back(x);
        }
        CHECK(std::vector<Elem>(r.b.elements().begin(), r.b.elements().end()) == b);
        CHECK(score(s.module, b) == score(s.module, {a.elements().begin(), a.elements().end()}));
        ++n;
      }
    }
    CHECK(n > 20);
  }
}

TEST_CASE("offender lemmas on sampled actions") {
  for (unsigned p : {2u, 3u}) {
    OffenderLemmaReport total;
    LemmaBounds b;
    b.affine_order = 1024;
    for (const auto& s : offender_sample(p, 5, 2)) {
      auto r = check_offender_lemmas(s.module, p, b);
      for (const auto& f : r.failures) FAIL_CHECK(s.label << ": " << f);
      total.restriction += r.restriction;
      total.thompson_images += r.thompson_images;
      total.nested_j += r.nested_j;
      total.thompson_in_j += r.thompson_in_j;
      total.idempotent += r.idempotent;
      total.quadratic_groups += r.quadratic_groups;
    }
    CHECK(total.restriction > 0);
    CHECK(total.thompson_images > 0);
    CHECK(total.nested_j > 0);
    CHECK(total.thompson_in_j > 0);
    CHECK(total.idempotent > 0);
    CHECK(total.quadratic_groups > 0);
  }
}

TEST_CASE("setup classification") {
  auto s4 = whole(named_group("S4"));
  auto d8 = sylow(s4, 2);
  auto v4 = o_p(s4, 2);
  auto a = setup_classify(s4, d8, v4, 2);
  CHECK(a.kind == SetupKind::reduced);
  CHECK(a.d == v4);
  CHECK(a.v == v4);

  // D8 is not normal in S4.
  auto b = setup_classify(s4, d8, d8, 2);
  CHECK(b.kind == SetupKind::invalid);
  CHECK(b.reason == "Y is not normal in Gamma");

  // D8 in D8: general, but C_S(Z(Y)) = D8 and Gamma/C(Z(Y)) trivial; Y = O_2.
  auto dd = whole(named_group("D8"));
  CHECK(setup_classify(dd, dd, dd, 2).kind == SetupKind::reduced);
  auto c = setup_classify(dd, dd, center(dd), 2);
  CHECK(c.kind == SetupKind::invalid);

  auto sl = whole(named_group("SL(2,3)"));
  auto q8 = o_p(sl, 2);
  auto e = setup_classify(sl, q8, q8, 2);
  CHECK(e.kind == SetupKind::reduced);
  CHECK(e.d.order() == 2);

  // (D8, D8, V4): C_D8(V4) = V4, but V4 is not O_2(D8).
  auto f = setup_classify(d8, d8, v4, 2);
  CHECK(f.kind == SetupKind::general);
  CHECK(f.reason == "Y is not O_p(Gamma)");
}

TEST_CASE("offender intervals") {
  auto s4 = whole(named_group("S4"));
  auto F = FusionSystem::make(s4, 2);
  auto v4 = o_p(s4, 2);
  auto iv = offender_interval(*F, v4);
  REQUIRE(iv.r.size() == 1);
  REQUIRE(iv.q.size() == 1);
  CHECK(F->object(iv.r.members()[0]) == v4);
  CHECK(F->object(iv.q.members()[0]) == F->sylow());

  auto d8 = whole(named_group("D8"));
  auto F2 = FusionSystem::make(d8, 2);
  auto iv2 = offender_interval(*F2, d8);
  CHECK(iv2.r.size() == 1);
  CHECK(iv2.q.size() == 0);

  // Abelian S = Y: nothing acts.
  auto c4 = whole(named_group("C4"));
  auto F3 = FusionSystem::make(c4, 2);
  CHECK(offender_interval(*F3, c4).r.size() == 1);

  CHECK_THROWS_AS(offender_interval(*F, F->sylow()), DomainError);
}
