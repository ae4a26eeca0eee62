#include <set>

#include "doctest.h"
#include "fusion/corpus.hpp"
#include "fusion/fusion.hpp"
#include "oracle.hpp"

using namespace fusion;

namespace {

FusionPtr system_of(const char* id, unsigned p) { return FusionSystem::make(whole(named_group(id)), p); }

// Brute force: Q is G-conjugate to P.
bool conjugate_in(const Subgroup& g, const Subgroup& p, const Subgroup& q) {
  if (p.order() != q.order()) return false;
  for (Elem x : g.elements())
    if (conjugate(p, x) == q) return true;
  return false;
}

// Brute force: number of distinct maps x -> g x g^-1 on P landing in Q.
std::size_t hom_count(const Subgroup& g, const Subgroup& p, const Subgroup& q) {
  const auto& G = *g.root();
  std::set<std::vector<Elem>> maps;
  for (Elem x : g.elements()) {
    std::vector<Elem> img;
    bool ok = true;
    for (Elem y : p.elements()) {
      Elem z = G.conj(x, y);
      if (!q.contains(z)) {
        ok = false;
        break;
      }
      img.push_back(z);
    }
    if (ok) maps.insert(img);
  }
  return maps.size();
}

}  // namespace

TEST_CASE("F-classes agree with brute-force conjugacy") {
  for (const char* id : {"S4", "D8", "A4", "SL(2,3)", "GL(2,3)"}) {
    for (unsigned p : {2u, 3u}) {
      auto F = system_of(id, p);
      const auto& G = F->ambient();
      for (std::size_t i = 0; i < F->object_count(); ++i)
        for (std::size_t j = 0; j < F->object_count(); ++j) {
          bool same = F->class_of(i) == F->class_of(j);
          CHECK(same == conjugate_in(G, F->object(i), F->object(j)));
        }
      for (std::size_t i = 0; i < F->object_count(); ++i) {
        Elem t = F->to_rep(i);
        CHECK(conjugate(F->object(i), t) == F->object(F->class_rep(F->class_of(i))));
      }
    }
  }
}

TEST_CASE("morphism count identity") {
  for (const char* id : {"S4", "A4", "Q8", "SD16", "GL(3,2)", "S5"}) {
    auto F = system_of(id, 2);
    const auto& G = F->ambient();
    std::size_t n = F->object_count();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto w = F->hom(i, j);
        std::size_t brute = hom_count(G, F->object(i), F->object(j));
        CHECK(w.size() == brute);
        CHECK(w.size() == transporter(G, F->object(i), F->object(j)).size() /
                              centralizer(G, F->object(i)).order());
        // Witnesses land in Q and are pairwise distinct as maps.
        std::set<std::vector<Elem>> maps;
        for (Elem g : w) {
          std::vector<Elem> img;
          for (Elem x : F->object(i).elements()) img.push_back(G.root()->conj(g, x));
          for (Elem x : img) CHECK(F->object(j).contains(x));
          maps.insert(img);
        }
        CHECK(maps.size() == w.size());
      }
  }
}

TEST_CASE("status flags and centric objects in F_{D8}(S4)") {
  auto F = system_of("S4", 2);
  const Subgroup& S = F->sylow();
  CHECK(S.order() == 8);
  auto z = center(S);
  auto fz = status_flags(*F, z);
  CHECK_FALSE(fz.f_centric);
  auto top = status_flags(*F, S);
  CHECK(top.fully_normalized);
  CHECK(top.fully_centralized);
  CHECK(top.f_centric);
  CHECK(f_class(*F, S).members.size() == 1);

  Subgroup c4;
  for (Elem x : S.elements())
    if (S.root()->elem_order(x) == 4) c4 = generate(S.root(), std::vector<Elem>{x});
  auto fc4 = status_flags(*F, c4);
  CHECK(fc4.f_centric);
  CHECK(fc4.fully_normalized);

  auto cls = centric_objects(*F);
  CHECK(cls.size() == 4);
  std::multiset<std::size_t> orders;
  for (const auto& c : cls) orders.insert(c.representative.order());
  CHECK(orders == std::multiset<std::size_t>{4, 4, 4, 8});

  // The Klein four containing Z(S) and a transposition: its class is every
  // transposition-type V4 in S.
  const auto& G = *S.root();
  for (const auto& c : cls) {
    if (c.representative.order() != 4 || is_normal(c.representative, F->ambient())) continue;
    if (!is_elementary_abelian(c.representative, 2)) continue;
    for (const auto& m : c.members) {
      bool has_transposition = false;
      for (Elem x : m.elements()) {
        std::size_t moved = 0;
        for (Point k = 0; k < G.degree(); ++k) moved += G.apply(x, k) != k;
        if (moved == 2) has_transposition = true;
      }
      CHECK(has_transposition);
    }
  }
}

TEST_CASE("small centric object examples") {
  auto c2 = system_of("C2", 2);
  CHECK(centric_objects(*c2).size() == 1);
  CHECK(f_class(*c2, c2->sylow()).members.size() == 1);
  auto s3 = system_of("S3", 3);
  auto co = centric_objects(*s3);
  REQUIRE(co.size() == 1);
  CHECK(co[0].representative.order() == 3);
}

TEST_CASE("fusion system invariants on the corpus") {
  for (const char* id : {"S3", "S4", "S5", "S6", "A4", "A5", "A6", "D8", "Q8", "SD16", "C2xC2", "GL(3,2)",
                         "SL(2,3)", "GL(2,3)"}) {
    auto G = named_group(id);
    for (unsigned p : prime_divisors(G->order())) {
      auto F = FusionSystem::make(whole(G), p);
      for (std::size_t c = 0; c < F->class_count(); ++c) {
        bool any_fn = false;
        bool centric = F->flags(F->class_members(c)[0]).f_centric;
        for (std::size_t m : F->class_members(c)) {
          any_fn |= F->flags(m).fully_normalized;
          CHECK(F->flags(m).f_centric == centric);
        }
        CHECK(any_fn);
        CHECK(F->flags(F->class_rep(c)).fully_normalized);
      }
      auto rep = check_saturation(*F);
      INFO(id << " p=" << p);
      CHECK(rep.saturated);
      CHECK(rep.checked_axiom1 > 0);
    }
  }
}

TEST_CASE("saturation checker detects an unsaturated system") {
  auto G = named_group("S4");
  Subgroup v4 = o_p(whole(G), 2);
  CHECK_THROWS_AS(FusionSystem::make(whole(G), v4, 2), DomainError);
  FusionOptions opt;
  opt.require_sylow = false;
  auto F = FusionSystem::make(whole(G), v4, 2, opt);
  auto rep = check_saturation(*F);
  CHECK_FALSE(rep.saturated);
  bool top_fails = false;
  for (const auto& v : rep.violations)
    if (v.axiom == "I" && v.subgroup == v4) top_fails = true;
  CHECK(top_fails);
}

TEST_CASE("intervals") {
  auto F = system_of("D8", 2);
  const Subgroup& S = F->sylow();
  auto v4s = std::vector<Subgroup>{};
  for (std::size_t i = 0; i < F->object_count(); ++i)
    if (F->object(i).order() == 4 && is_elementary_abelian(F->object(i), 2)) v4s.push_back(F->object(i));
  REQUIRE(v4s.size() == 2);
  auto iv = overgroup_interval(*F, v4s[0]);
  CHECK(iv.size() == 2);
  CHECK(iv.contains(F->index_of(S)));
  CHECK(iv.closed_under_overgroups);

  auto F4 = system_of("S4", 2);
  auto c = centric_interval(*F4);
  CHECK(c.closed_under_overgroups);
  CHECK(c.f_invariant);

  std::vector<std::size_t> bad{F->index_of(S), F->index_of(center(S))};
  CHECK_THROWS_WITH_AS(make_interval(*F, bad), "not an interval", DomainError);
}

TEST_CASE("normalizer systems") {
  auto F = system_of("S4", 2);
  const Subgroup& S = F->sylow();
  Subgroup v4 = o_p(F->ambient(), 2);
  auto N = normalizer_system(*F, v4);
  CHECK(N->ambient().order() == 24);
  CHECK(N->sylow() == S);

  Subgroup c4;
  for (Elem x : S.elements())
    if (S.root()->elem_order(x) == 4) c4 = generate(S.root(), std::vector<Elem>{x});
  auto NC = normalizer_system(*F, c4);
  CHECK(NC->ambient() == S);
  CHECK(NC->class_count() == 8);

  auto NS = normalizer_system(*F, S);
  CHECK(NS->ambient() == normalizer(F->ambient(), S));

  // A Klein four of transposition type that is not fully normalized.
  bool threw = false;
  for (std::size_t i = 0; i < F->object_count(); ++i)
    if (!F->flags(i).fully_normalized) {
      CHECK_THROWS_AS(normalizer_system(*F, F->object(i)), DomainError);
      threw = true;
    }
  CHECK(threw);
  for (std::size_t i = 0; i < F->object_count(); ++i)
    if (F->flags(i).fully_normalized) CHECK(check_saturation(*normalizer_system(*F, F->object(i))).saturated);
}

TEST_CASE("fusion preserving outer automorphisms") {
  auto c2 = fusion_preserving_out(*system_of("C2", 2));
  CHECK(c2.aut_s->order() == 1);
  CHECK(c2.out_order() == 1);

  auto a4 = fusion_preserving_out(*system_of("A4", 2));
  CHECK(a4.aut_s->order() == 6);
  CHECK(a4.aut_sf.order() == 6);
  CHECK(a4.aut_f_s.order() == 3);
  CHECK(a4.out_order() == 2);

  auto v4 = fusion_preserving_out(*system_of("V4", 2));
  CHECK(v4.aut_sf.order() == 6);
  CHECK(v4.aut_f_s.order() == 1);
  CHECK(v4.out_order() == 6);
  CHECK_FALSE(is_abelian(v4.aut_sf));

  // Aut(D8) has order 8; F_{D8}(S4) is preserved by the inner ones only
  // up to the diagonal automorphism swapping the two Klein fours, which
  // does not preserve fusion.
  auto s4 = fusion_preserving_out(*system_of("S4", 2));
  CHECK(s4.aut_s->order() == 8);
  CHECK(s4.aut_f_s.order() == 4);
  CHECK(s4.out_order() == 1);
  auto d8 = fusion_preserving_out(*system_of("D8", 2));
  CHECK(d8.out_order() == 2);
  CHECK(fusion_preserving_out(*system_of("Q8", 2)).aut_s->order() == 24);

  auto s8 = system_of("S6", 2);
  CHECK(s8->sylow().order() == 16);
  CHECK_NOTHROW(fusion_preserving_out(*s8));
  CHECK_THROWS_AS(fusion_preserving_out(*s8, 8), BoundExceeded);
}
