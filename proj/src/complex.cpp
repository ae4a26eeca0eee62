#include "fusion/complex.hpp"

#include <algorithm>
#include <map>

#include "fusion/errors.hpp"

namespace fusion {

using Row = SparseMatrix::Row;

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data) n += r.size();
  return n;
}

void SparseMatrix::add(std::size_t i, std::size_t j, std::int64_t v) {
  data[i].emplace_back(static_cast<std::uint32_t>(j), v);
}

void SparseMatrix::finalize(const FinAb& target) {
  for (std::size_t i = 0; i < data.size(); ++i) {
    auto& r = data[i];
    std::int64_t m = target.moduli()[i];
    std::sort(r.begin(), r.end());
    Row out;
    for (auto& [c, v] : r) {
      std::int64_t x = ((v % m) + m) % m;
      if (!out.empty() && out.back().first == c)
        out.back().second = (out.back().second + x) % m;
      else
        out.emplace_back(c, x);
    }
    r.clear();
    for (auto& e : out)
      if (e.second != 0) r.push_back(e);
  }
}

namespace {

struct Local {
  std::int64_t q = 2;
  unsigned E = 1;
  std::int64_t qE = 2;
  std::vector<std::int64_t> pw;

  Local(std::int64_t prime, unsigned exp) : q(prime), E(exp) {
    pw.assign(E + 1, 1);
    for (unsigned i = 1; i <= E; ++i) pw[i] = pw[i - 1] * q;
    qE = pw[E];
  }
  std::int64_t red(std::int64_t x) const {
    x %= qE;
    return x < 0 ? x + qE : x;
  }
  std::int64_t mul(std::int64_t a, std::int64_t b) const {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % qE);
  }
  unsigned val(std::int64_t x) const {
    if (x == 0) return E;
    unsigned v = 0;
    while (v < E && x % q == 0) {
      x /= q;
      ++v;
    }
    return v;
  }
  std::int64_t inv_unit(std::int64_t u) const {
    // Extended Euclid; u is coprime to q.
    std::int64_t a = red(u), m = qE, x0 = 1, x1 = 0;
    while (m) {
      std::int64_t t = a / m;
      std::swap(a, m);
      m -= t * a;
      std::swap(x0, x1);
      x1 -= t * x0;
    }
    if (a != 1) throw TheoremViolation("pivot is not a unit times a prime power");
    return red(x0);
  }
};

// dst += f * src over Z/q^E, both sorted.
void axpy(Row& dst, const Row& src, std::int64_t f, const Local& L, Row& scratch) {
  if (f == 0) return;
  scratch.clear();
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      scratch.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      std::int64_t v = L.mul(f, src[j].second);
      if (v) scratch.emplace_back(src[j].first, v);
      ++j;
    } else {
      std::int64_t v = L.red(dst[i].second + L.mul(f, src[j].second));
      if (v) scratch.emplace_back(dst[i].first, v);
      ++i;
      ++j;
    }
  }
  dst.swap(scratch);
}

std::int64_t lookup(const Row& r, std::uint32_t c) {
  auto it = std::lower_bound(r.begin(), r.end(), std::make_pair(c, std::int64_t{0}),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
  return (it != r.end() && it->first == c) ? it->second : 0;
}

struct Pivot {
  std::uint32_t row, col;
  unsigned val;
};

// Gaussian elimination over the chain ring Z/q^E choosing pivots of least
// valuation, ties broken by a Markowitz fill-in score. Each pivot row and
// column is removed after its column has been cleared by row operations.
// `hook(pivot, pivot_row, inv_unit)` runs before the row is discarded.
template <class Hook>
std::vector<Pivot> eliminate(const Local& L, std::vector<Row>& rows, std::size_t ncols, Hook&& hook) {
  std::vector<std::size_t> col_count(ncols, 0);
  std::vector<std::vector<std::uint32_t>> col_rows(ncols);
  for (std::uint32_t i = 0; i < rows.size(); ++i)
    for (auto& [c, v] : rows[i]) {
      ++col_count[c];
      col_rows[c].push_back(i);
    }
  std::vector<char> alive(rows.size(), 1);
  std::vector<Pivot> pivots;
  Row scratch;
  std::vector<std::uint32_t> live_rows;
  for (std::uint32_t i = 0; i < rows.size(); ++i)
    if (!rows[i].empty()) live_rows.push_back(i);

  for (;;) {
    std::uint32_t br = 0, bc = 0;
    unsigned bv = L.E;
    std::size_t bscore = ~std::size_t{0};
    bool found = false;
    std::size_t w = 0;
    for (std::size_t k = 0; k < live_rows.size(); ++k) {
      std::uint32_t r = live_rows[k];
      if (!alive[r] || rows[r].empty()) continue;
      live_rows[w++] = r;
      std::size_t rl = rows[r].size() - 1;
      for (auto& [c, v] : rows[r]) {
        unsigned vv = L.val(v);
        if (vv > bv) continue;
        std::size_t score = rl * (col_count[c] - 1);
        if (vv < bv || score < bscore) {
          bv = vv;
          bscore = score;
          br = r;
          bc = c;
          found = true;
        }
      }
      if (found && bv == 0 && bscore == 0) {
        for (std::size_t t = k + 1; t < live_rows.size(); ++t) live_rows[w++] = live_rows[t];
        break;
      }
    }
    live_rows.resize(w);
    if (!found) break;

    const std::int64_t a = lookup(rows[br], bc);
    const std::int64_t u = a / L.pw[bv];
    const std::int64_t inv_u = L.inv_unit(u);
    // Clear the pivot column.
    std::vector<std::uint32_t> targets;
    for (std::uint32_t i : col_rows[bc])
      if (i != br && alive[i]) targets.push_back(i);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (std::uint32_t i : targets) {
      std::int64_t aic = lookup(rows[i], bc);
      if (aic == 0) continue;
      std::int64_t f = L.red(-L.mul(aic / L.pw[bv], inv_u));
      axpy(rows[i], rows[br], f, L, scratch);
      // scratch now holds the old row; update counts for the difference.
      const Row& now = rows[i];
      std::size_t x = 0, y = 0;
      while (x < now.size() || y < scratch.size()) {
        if (y == scratch.size() || (x < now.size() && now[x].first < scratch[y].first)) {
          ++col_count[now[x].first];
          col_rows[now[x].first].push_back(i);
          ++x;
        } else if (x == now.size() || scratch[y].first < now[x].first) {
          --col_count[scratch[y].first];
          ++y;
        } else {
          ++x;
          ++y;
        }
      }
    }
    Pivot p{br, bc, bv};
    hook(p, rows[br], inv_u);
    pivots.push_back(p);
    for (auto& [c, v] : rows[br]) --col_count[c];
    alive[br] = 0;
    rows[br].clear();
    col_rows[bc].clear();
  }
  return pivots;
}

std::vector<std::pair<std::int64_t, unsigned>> factor(std::int64_t n) {
  std::vector<std::pair<std::int64_t, unsigned>> out;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.emplace_back(d, e);
    }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

unsigned valuation(std::int64_t m, std::int64_t q) {
  unsigned v = 0;
  while (m % q == 0) {
    m /= q;
    ++v;
  }
  return v;
}

}  // namespace

FinAb sparse_subquotient(const FinAb& a, const FinAb& b, const FinAb& c, const SparseMatrix* f,
                         const SparseMatrix* g) {
  if (f && (f->rows != b.rank() || f->cols != a.rank())) throw DomainError("differential shape mismatch");
  if (g && (g->rows != c.rank() || g->cols != b.rank())) throw DomainError("differential shape mismatch");
  std::map<std::int64_t, int> primes;
  for (auto m : b.moduli())
    for (auto [p, e] : factor(m)) primes[p] = 1;

  std::vector<std::int64_t> factors;
  for (auto [q, unused] : primes) {
    (void)unused;
    std::vector<std::int64_t> bidx(b.rank(), -1), aidx(a.rank(), -1);
    std::vector<unsigned> beta, gamma;
    unsigned E = 0;
    std::size_t nb = 0, na = 0;
    for (std::size_t i = 0; i < b.rank(); ++i) {
      unsigned v = valuation(b.moduli()[i], q);
      if (v) {
        bidx[i] = static_cast<std::int64_t>(nb++);
        beta.push_back(v);
        E = std::max(E, v);
      }
    }
    for (std::size_t i = 0; i < a.rank(); ++i)
      if (a.moduli()[i] % q == 0) aidx[i] = static_cast<std::int64_t>(na++);
    std::vector<std::size_t> crow;
    for (std::size_t j = 0; j < c.rank(); ++j) {
      unsigned v = valuation(c.moduli()[j], q);
      if (v) {
        crow.push_back(j);
        gamma.push_back(v);
        E = std::max(E, v);
      }
    }
    Local L(q, E);

    // G' = diag(q^{E - gamma}) G restricted to q-parts.
    std::vector<Row> grows;
    if (g) {
      for (std::size_t k = 0; k < crow.size(); ++k) {
        Row r;
        std::int64_t qg = L.pw[gamma[k]];
        for (auto& [col, v] : g->data[crow[k]]) {
          if (bidx[col] < 0) continue;
          std::int64_t x = ((v % qg) + qg) % qg;
          x = L.mul(x, L.pw[E - gamma[k]]);
          if (x) r.emplace_back(static_cast<std::uint32_t>(bidx[col]), x);
        }
        std::sort(r.begin(), r.end());
        grows.push_back(std::move(r));
      }
    }
    // W = [F | diag(q^beta)] restricted to q-parts, rows indexed by B coordinates.
    std::vector<Row> wrows(nb);
    for (std::size_t i = 0; i < b.rank(); ++i) {
      if (bidx[i] < 0) continue;
      Row& r = wrows[bidx[i]];
      std::int64_t qb = L.pw[beta[bidx[i]]];
      if (f)
        for (auto& [col, v] : f->data[i]) {
          if (aidx[col] < 0) continue;
          std::int64_t x = ((v % qb) + qb) % qb;
          if (x) r.emplace_back(static_cast<std::uint32_t>(aidx[col]), x);
        }
      std::int64_t rel = L.red(qb);
      if (rel) r.emplace_back(static_cast<std::uint32_t>(na + bidx[i]), rel);
      std::sort(r.begin(), r.end());
    }

    std::vector<int> piv_val(nb, -1);
    Row scratch;
    eliminate(L, grows, nb, [&](const Pivot& p, const Row& prow, std::int64_t inv_u) {
      piv_val[p.col] = static_cast<int>(p.val);
      if (p.val == 0) return;
      // Column operations clearing the pivot row act on W = V^-1 F' by
      // row_c += f_j row_j.
      for (auto& [j, v] : prow) {
        if (j == p.col) continue;
        std::int64_t fj = L.mul(v / L.pw[p.val], inv_u);
        axpy(wrows[p.col], wrows[j], fj, L, scratch);
      }
    });

    // Kernel coordinates: pivots of valuation v contribute Z/q^v, free
    // columns contribute Z/q^E.
    std::vector<Row> mrows;
    std::size_t kept = 0;
    std::uint32_t diag_base = static_cast<std::uint32_t>(na + nb);
    for (std::size_t col = 0; col < nb; ++col) {
      int v = piv_val[col];
      if (v == 0) continue;
      Row r;
      if (v > 0) {
        std::int64_t d = L.pw[E - static_cast<unsigned>(v)];
        for (auto& [j, x] : wrows[col]) {
          if (x % d != 0) throw DomainError("not a complex");
          r.emplace_back(j, x / d);
        }
        r.emplace_back(diag_base + static_cast<std::uint32_t>(kept), L.pw[static_cast<unsigned>(v)]);
      } else {
        r = wrows[col];
      }
      ++kept;
      mrows.push_back(std::move(r));
    }
    auto piv = eliminate(L, mrows, diag_base + kept, [](const Pivot&, const Row&, std::int64_t) {});
    for (const auto& p : piv)
      if (p.val > 0) factors.push_back(L.pw[p.val]);
    for (std::size_t i = piv.size(); i < kept; ++i) factors.push_back(L.qE);
  }
  return FinAb::canonical(factors);
}

FinAbHom to_dense(const SparseMatrix& m, const FinAb& source, const FinAb& target) {
  IntMat d(m.rows, IntVec(m.cols, 0));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (auto& [c, v] : m.data[i]) d[i][c] += v;
  return FinAbHom(source, target, std::move(d));
}

void check_complex(const IntegerComplex& cx) {
  if (cx.diffs.size() + 1 > cx.groups.size() + 1) throw TheoremViolation("more differentials than groups");
  for (std::size_t n = 0; n < cx.diffs.size(); ++n) {
    const auto& d = cx.diffs[n];
    const FinAb& s = cx.groups[n];
    const FinAb& t = cx.groups[n + 1];
    if (d.rows != t.rank() || d.cols != s.rank()) throw TheoremViolation("differential shape mismatch");
    for (std::size_t i = 0; i < d.rows; ++i)
      for (auto& [c, v] : d.data[i])
        if (static_cast<__int128>(v) * s.moduli()[c] % t.moduli()[i] != 0)
          throw TheoremViolation("differential is not a homomorphism");
  }
  for (std::size_t n = 0; n + 1 < cx.diffs.size(); ++n) {
    const auto& d0 = cx.diffs[n];
    const auto& d1 = cx.diffs[n + 1];
    const FinAb& t = cx.groups[n + 2];
    std::vector<__int128> acc(d0.cols, 0);
    std::vector<std::uint32_t> touched;
    for (std::size_t i = 0; i < d1.rows; ++i) {
      for (auto& [k, a] : d1.data[i])
        for (auto& [j, b] : d0.data[k]) {
          if (acc[j] == 0) touched.push_back(j);
          acc[j] += static_cast<__int128>(a) * b;
          if (acc[j] == 0) acc[j] = 0;
        }
      for (std::uint32_t j : touched) {
        if (acc[j] % t.moduli()[i] != 0)
          throw TheoremViolation("d o d != 0 in degree " + std::to_string(n + 2));
        acc[j] = 0;
      }
      touched.clear();
    }
  }
}

FinAb cohomology(const IntegerComplex& cx, std::size_t n) {
  if (n >= cx.groups.size()) throw DomainError("cohomology degree beyond the truncated complex");
  FinAb a = n > 0 ? cx.groups[n - 1] : FinAb();
  const SparseMatrix* f = (n > 0 && n - 1 < cx.diffs.size()) ? &cx.diffs[n - 1] : nullptr;
  const SparseMatrix* g = n < cx.diffs.size() ? &cx.diffs[n] : nullptr;
  FinAb c = g ? cx.groups[n + 1] : FinAb();
  return sparse_subquotient(a, cx.groups[n], c, f, g);
}

FinAb cohomology_dense(const IntegerComplex& cx, std::size_t n) {
  if (n >= cx.groups.size()) throw DomainError("cohomology degree beyond the truncated complex");
  const FinAb& b = cx.groups[n];
  FinAbHom f = (n > 0 && n - 1 < cx.diffs.size()) ? to_dense(cx.diffs[n - 1], cx.groups[n - 1], b)
                                                   : FinAbHom::zero(FinAb(), b);
  FinAbHom g = n < cx.diffs.size() ? to_dense(cx.diffs[n], b, cx.groups[n + 1]) : FinAbHom::zero(b, FinAb());
  return subquotient_cohomology(f, g).group;
}

}  // namespace fusion
