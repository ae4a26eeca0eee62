#include <algorithm>
#include <map>
#include <unordered_map>

#include "fusion/fusion.hpp"
#include "fusion/limits.hpp"
#include "fusion/modules.hpp"

namespace fusion {

namespace {

using Chain = std::vector<std::uint32_t>;  // indices into the subgroup list, increasing

/// M^H with coordinates: every element of M^H is sum c_j w_j, 0 <= c_j < d_j.
struct FixedBlock {
  FinAb group;
  std::vector<IntVec> basis;
  std::unordered_map<std::uint32_t, IntVec> coords;  // element code -> coordinates
};

FixedBlock fixed_block(const GModule& m, const ElementCodec& codec, const std::vector<Elem>& h) {
  std::vector<FinAbHom> act;
  for (Elem e : h) act.push_back(m(e));
  SubFinAb fx = fixed_points(m.module, act);
  FixedBlock b{fx.group, fx.witnesses, {}};
  const auto& d = fx.group.moduli();
  IntVec c(d.size(), 0);
  while (true) {
    IntVec v = m.module.zero();
    for (std::size_t j = 0; j < d.size(); ++j)
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += c[j] * fx.witnesses[j][i];
    b.coords.emplace(codec.encode(v), c);
    std::size_t j = 0;
    while (j < d.size() && ++c[j] == d[j]) c[j++] = 0;
    if (j == d.size()) break;
  }
  return b;
}

struct ChainClasses {
  std::vector<Chain> reps;
  std::vector<std::vector<Elem>> stabilizers;
  std::map<Chain, std::pair<std::size_t, Elem>> where;  // chain -> (rep, h) with chain = h . rep
};

}  // namespace

IntegerComplex subgroup_chain_complex(const GModule& m, unsigned p, std::size_t n_max) {
  const Subgroup& g = m.group;
  std::size_t sylow_order = p_part(g.order(), p);
  FusionOptions opt;
  opt.lattice_bound = std::max<std::size_t>(kDefaultLatticeBound, sylow_order);
  if (opt.lattice_bound > 512) throw BoundExceeded("lattice too large");
  auto f = FusionSystem::make(g, p, opt);

  std::vector<Subgroup> subs;
  for (std::size_t c = 0; c < f->class_count(); ++c) {
    const Subgroup& r = f->object(f->class_rep(c));
    if (r.is_trivial()) continue;
    for (auto& q : conjugacy_class(g, r)) subs.push_back(q);
  }
  std::sort(subs.begin(), subs.end());
  std::unordered_map<Subgroup, std::uint32_t, SubgroupHash> index;
  for (std::size_t i = 0; i < subs.size(); ++i) index.emplace(subs[i], static_cast<std::uint32_t>(i));

  auto elems = g.elements();
  std::vector<Elem> gel(elems.begin(), elems.end());
  // conj[h][i]: index of h subs[i] h^-1
  std::vector<std::vector<std::uint32_t>> conj(gel.size(), std::vector<std::uint32_t>(subs.size()));
  for (std::size_t h = 0; h < gel.size(); ++h)
    for (std::size_t i = 0; i < subs.size(); ++i) conj[h][i] = index.at(conjugate(subs[i], gel[h]));
  std::vector<std::vector<std::uint32_t>> above(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = 0; j < subs.size(); ++j)
      if (subs[j].order() > subs[i].order() && subs[j].contains(subs[i])) above[i].push_back(static_cast<std::uint32_t>(j));

  // classes[n]: chains with n subgroups; n = 0 is the empty chain
  std::vector<ChainClasses> classes(n_max + 1);
  classes[0].reps.push_back({});
  classes[0].stabilizers.push_back(gel);
  classes[0].where[{}] = {0, FiniteGroup::identity()};
  std::vector<Chain> level{{}};
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<Chain> next;
    for (const auto& c : level) {
      if (c.empty()) {
        for (std::uint32_t i = 0; i < subs.size(); ++i) next.push_back({i});
      } else {
        for (std::uint32_t j : above[c.back()]) {
          Chain d = c;
          d.push_back(j);
          next.push_back(std::move(d));
        }
      }
    }
    auto& cc = classes[n];
    for (const auto& c : next) {
      if (cc.where.count(c)) continue;
      std::size_t rep = cc.reps.size();
      cc.reps.push_back(c);
      std::vector<Elem> stab;
      for (std::size_t h = 0; h < gel.size(); ++h) {
        Chain d(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) d[i] = conj[h][c[i]];
        if (d == c) stab.push_back(gel[h]);
        cc.where.emplace(std::move(d), std::make_pair(rep, gel[h]));
      }
      cc.stabilizers.push_back(std::move(stab));
    }
    level = std::move(next);
    if (level.empty()) {
      classes.resize(n + 1);
      break;
    }
  }

  ElementCodec codec(m.module);
  std::vector<std::vector<FixedBlock>> blocks(classes.size());
  std::vector<std::vector<std::size_t>> offset(classes.size());
  IntegerComplex out;
  for (std::size_t n = 0; n < classes.size(); ++n) {
    std::vector<std::int64_t> moduli;
    for (const auto& st : classes[n].stabilizers) {
      offset[n].push_back(moduli.size());
      blocks[n].push_back(fixed_block(m, codec, st));
      for (auto d : blocks[n].back().group.moduli()) moduli.push_back(d);
    }
    out.groups.push_back(FinAb::cyclic_sum(moduli));
  }
  for (std::size_t n = 0; n + 1 < classes.size(); ++n) {
    SparseMatrix d(out.groups[n + 1].rank(), out.groups[n].rank());
    for (std::size_t t = 0; t < classes[n + 1].reps.size(); ++t) {
      const Chain& tau = classes[n + 1].reps[t];
      const FixedBlock& tb = blocks[n + 1][t];
      // (d f)(tau) = sum_i (-1)^i f(face_i tau), f(h sigma) = h f(sigma)
      std::vector<std::pair<std::size_t, std::pair<Elem, int>>> faces;
      for (std::size_t i = 0; i < tau.size(); ++i) {
        Chain face = tau;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        auto [rep, h] = classes[n].where.at(face);
        faces.push_back({rep, {h, i % 2 ? -1 : 1}});
      }
      for (std::size_t s = 0; s < classes[n].reps.size(); ++s) {
        const FixedBlock& sb = blocks[n][s];
        for (std::size_t j = 0; j < sb.basis.size(); ++j) {
          IntVec v = m.module.zero();
          bool hit = false;
          for (const auto& [rep, hs] : faces) {
            if (rep != s) continue;
            hit = true;
            IntVec w = m(hs.first)(sb.basis[j]);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += hs.second * w[i];
          }
          if (!hit) continue;
          auto it = tb.coords.find(codec.encode(m.module.reduce(v)));
          if (it == tb.coords.end()) throw TheoremViolation("coboundary leaves the fixed submodule");
          for (std::size_t i = 0; i < it->second.size(); ++i)
            if (it->second[i] != 0) d.add(offset[n + 1][t] + i, offset[n][s] + j, it->second[i]);
        }
      }
    }
    d.finalize(out.groups[n + 1]);
    out.diffs.push_back(std::move(d));
  }
  return out;
}

}  // namespace fusion
