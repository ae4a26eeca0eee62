#pragma once
// Brute-force reference computations shared by the unit tests. Everything
// here works directly on permutations and element lists, independently of
// the library's subgroup calculus.

#include <algorithm>
#include <set>
#include <vector>

#include "fusion/group.hpp"

namespace oracle {

using fusion::Elem;
using fusion::Perm;

inline std::vector<Perm> perms(const fusion::Subgroup& s) {
  std::vector<Perm> out;
  for (Elem e : s.elements()) out.push_back(s.root()->perm(e));
  return out;
}

inline std::set<Perm> as_set(const fusion::Subgroup& s) {
  auto v = perms(s);
  return {v.begin(), v.end()};
}

inline std::set<Perm> closure(const std::vector<Perm>& gens, std::size_t degree) {
  std::set<Perm> out{Perm::identity(degree)};
  std::vector<Perm> frontier{Perm::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Perm y = g * x;
        if (out.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return out;
}

// Number of subsets of the element list closed under products: all subgroups.
inline std::size_t count_subgroups(const std::vector<Perm>& elems) {
  std::set<std::set<Perm>> subs;
  for (const auto& a : elems)
    for (const auto& b : elems) subs.insert(closure({a, b}, a.degree()));
  // Two generators suffice for the small test groups used here (D8, Q8, C_p).
  return subs.size();
}

// Every subgroup of a permutation group given by its elements, by closure.
inline std::vector<std::set<Perm>> all_subgroups(const std::vector<Perm>& elems) {
  std::set<std::set<Perm>> seen;
  std::vector<std::set<Perm>> out{{Perm::identity(elems[0].degree())}};
  std::vector<std::vector<Perm>> gens{{}};
  seen.insert(out[0]);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& x : elems) {
      if (out[i].count(x)) continue;
      std::vector<Perm> g = gens[i];
      g.push_back(x);
      auto c = closure(g, x.degree());
      if (seen.insert(c).second) {
        out.push_back(std::move(c));
        gens.push_back(std::move(g));
      }
    }
  return out;
}

}  // namespace oracle
