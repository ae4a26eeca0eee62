#include "fusion/finab.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "fusion/errors.hpp"
#include "fusion/group.hpp"

namespace fusion {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t m) {
  x %= m;
  return x < 0 ? x + m : x;
}

std::int64_t mod(const BigInt& x, std::int64_t m) {
  BigInt r = x % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
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

// Quotient of the lattice spanned by the columns of the square nonsingular
// basis K (n x n) by the sublattice spanned by the columns of N (n x c),
// which must lie in span(K). Witnesses are reduced by `ambient`.
SubFinAb lattice_quotient(const BigMat& k, const BigMat& nmat, std::size_t n, std::size_t c, const FinAb& ambient) {
  SubFinAb out;
  if (n == 0) return out;
  BigMat x = solve_square(k, nmat, n, c);
  auto s = smith_normal_form(x, n, c, true);
  // Coordinates in K's basis change by U; new generators are columns of Uinv.
  std::vector<std::int64_t> factors;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt d = i < s.diag.size() ? s.diag[i] : BigInt(0);
    if (d == 1) continue;
    if (d == 0) throw TheoremViolation("subquotient of finite groups is infinite");
    factors.push_back(static_cast<std::int64_t>(d));
    IntVec w(n);
    for (std::size_t r = 0; r < n; ++r) {
      BigInt v = 0;
      for (std::size_t t = 0; t < n; ++t) v += k[r][t] * s.Uinv[t][i];
      w[r] = mod(v, ambient.moduli()[r]);
    }
    out.witnesses.push_back(std::move(w));
  }
  // SNF already gives a divisibility chain, so this is canonical.
  out.group = FinAb::cyclic_sum(factors);
  if (!out.group.is_canonical()) throw TheoremViolation("Smith form did not produce a divisibility chain");
  return out;
}

// Basis of {x in Z^n : G x in diag(target moduli) Z^m}.
BigMat kernel_lattice(const FinAbHom& g) {
  std::size_t n = g.source().rank(), m = g.target().rank();
  if (m == 0) return identity_matrix(n);
  BigMat a(m, std::vector<BigInt>(n + m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = g.entry(i, j);
    a[i][n + i] = -g.target().moduli()[i];
  }
  BigMat ker = integer_kernel(a, m, n + m);
  if (ker.empty() || ker[0].size() != n) throw TheoremViolation("kernel lattice has unexpected rank");
  BigMat k(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k[i][j] = ker[i][j];
  return k;
}

// Columns [F | D_B] spanning im(f) + relations of B.
BigMat image_generators(const FinAbHom& f) {
  std::size_t n = f.target().rank(), a = f.source().rank();
  BigMat out(n, std::vector<BigInt>(a + n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < a; ++j) out[i][j] = f.entry(i, j);
    out[i][a + i] = f.target().moduli()[i];
  }
  return out;
}

}  // namespace

// ------------------------------------------------------------------- FinAb

FinAb FinAb::cyclic_sum(std::vector<std::int64_t> moduli) {
  FinAb a;
  for (auto m : moduli) {
    if (m <= 0) throw DomainError("cyclic moduli must be positive");
    if (m > 1) a.m_.push_back(m);
  }
  return a;
}

FinAb FinAb::canonical(const std::vector<std::int64_t>& moduli) {
  std::map<std::int64_t, std::vector<std::int64_t>> by_prime;
  for (auto m : moduli) {
    if (m <= 0) throw DomainError("cyclic moduli must be positive");
    for (auto [p, e] : factor(m)) {
      std::int64_t q = 1;
      for (unsigned i = 0; i < e; ++i) q *= p;
      by_prime[p].push_back(q);
    }
  }
  std::size_t r = 0;
  for (auto& [p, v] : by_prime) {
    std::sort(v.begin(), v.end(), std::greater<>());
    r = std::max(r, v.size());
  }
  // The largest invariant factor collects the largest power of each prime.
  std::vector<std::int64_t> inv(r, 1);
  for (auto& [p, v] : by_prime)
    for (std::size_t i = 0; i < v.size(); ++i) inv[r - 1 - i] *= v[i];
  return cyclic_sum(inv);
}

BigInt FinAb::order() const {
  BigInt o = 1;
  for (auto m : m_) o *= m;
  return o;
}

bool FinAb::is_canonical() const {
  for (std::size_t i = 1; i < m_.size(); ++i)
    if (m_[i] % m_[i - 1] != 0) return false;
  return true;
}

std::vector<std::int64_t> FinAb::elementary_divisors() const {
  std::vector<std::int64_t> out;
  for (auto m : m_)
    for (auto [p, e] : factor(m)) {
      std::int64_t q = 1;
      for (unsigned i = 0; i < e; ++i) q *= p;
      out.push_back(q);
    }
  std::sort(out.begin(), out.end());
  return out;
}

IntVec FinAb::reduce(IntVec v) const {
  if (v.size() != m_.size()) throw DomainError("vector length does not match the group rank");
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = mod(v[i], m_[i]);
  return v;
}

std::vector<IntVec> FinAb::elements() const {
  if (order() > BigInt(1u << 22)) throw BoundExceeded("group too large to enumerate");
  std::vector<IntVec> out;
  IntVec cur(m_.size(), 0);
  for (;;) {
    out.push_back(cur);
    std::size_t i = m_.size();
    while (i > 0) {
      --i;
      if (++cur[i] < m_[i]) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (m_.empty()) return out;
  }
}

std::string FinAb::to_string() const {
  if (m_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (i) s += " + ";
    s += "Z/" + std::to_string(m_[i]);
  }
  return s;
}

bool isomorphic(const FinAb& a, const FinAb& b) { return a.canonical_form() == b.canonical_form(); }

FinAb direct_sum(const FinAb& a, const FinAb& b) {
  auto m = a.moduli();
  m.insert(m.end(), b.moduli().begin(), b.moduli().end());
  return FinAb::cyclic_sum(m);
}

// ---------------------------------------------------------------- FinAbHom

FinAbHom::FinAbHom(FinAb source, FinAb target, IntMat matrix)
    : src_(std::move(source)), tgt_(std::move(target)), mat_(std::move(matrix)) {
  if (mat_.size() != tgt_.rank()) throw DomainError("matrix row count must equal the target rank");
  for (std::size_t i = 0; i < mat_.size(); ++i) {
    if (mat_[i].size() != src_.rank()) throw DomainError("matrix column count must equal the source rank");
    for (std::size_t j = 0; j < mat_[i].size(); ++j) {
      std::int64_t t = tgt_.moduli()[i];
      mat_[i][j] = mod(mat_[i][j], t);
      // Column j times its source order must vanish in the target.
      if (static_cast<__int128>(mat_[i][j]) * src_.moduli()[j] % t != 0)
        throw DomainError("matrix does not define a homomorphism: column " + std::to_string(j) +
                          " is not annihilated by its source order");
    }
  }
}

FinAbHom FinAbHom::zero(FinAb source, FinAb target) {
  IntMat m(target.rank(), IntVec(source.rank(), 0));
  return FinAbHom(std::move(source), std::move(target), std::move(m));
}

FinAbHom FinAbHom::identity(const FinAb& a) {
  IntMat m(a.rank(), IntVec(a.rank(), 0));
  for (std::size_t i = 0; i < a.rank(); ++i) m[i][i] = 1;
  return FinAbHom(a, a, std::move(m));
}

IntVec FinAbHom::operator()(const IntVec& x) const {
  if (x.size() != src_.rank()) throw DomainError("vector length does not match the source rank");
  IntVec y(tgt_.rank(), 0);
  for (std::size_t i = 0; i < y.size(); ++i) {
    __int128 s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += static_cast<__int128>(mat_[i][j]) * x[j];
    std::int64_t t = tgt_.moduli()[i];
    std::int64_t r = static_cast<std::int64_t>(s % t);
    y[i] = r < 0 ? r + t : r;
  }
  return y;
}

FinAbHom FinAbHom::compose(const FinAbHom& inner) const {
  if (!(inner.tgt_ == src_)) throw DomainError("composition of non-composable homomorphisms");
  IntMat m(tgt_.rank(), IntVec(inner.src_.rank(), 0));
  for (std::size_t i = 0; i < tgt_.rank(); ++i)
    for (std::size_t j = 0; j < inner.src_.rank(); ++j) {
      __int128 s = 0;
      for (std::size_t k = 0; k < src_.rank(); ++k) s += static_cast<__int128>(mat_[i][k]) * inner.mat_[k][j];
      m[i][j] = static_cast<std::int64_t>(s % tgt_.moduli()[i]);
    }
  return FinAbHom(inner.src_, tgt_, std::move(m));
}

FinAbHom FinAbHom::operator+(const FinAbHom& o) const {
  if (!(src_ == o.src_) || !(tgt_ == o.tgt_)) throw DomainError("sum of homomorphisms with different ends");
  IntMat m = mat_;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] += o.mat_[i][j];
  return FinAbHom(src_, tgt_, std::move(m));
}

FinAbHom FinAbHom::operator-(const FinAbHom& o) const {
  if (!(src_ == o.src_) || !(tgt_ == o.tgt_)) throw DomainError("difference of homomorphisms with different ends");
  IntMat m = mat_;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= o.mat_[i][j];
  return FinAbHom(src_, tgt_, std::move(m));
}

bool FinAbHom::is_zero() const {
  for (const auto& r : mat_)
    for (auto x : r)
      if (x != 0) return false;
  return true;
}

// ----------------------------------------------------------- subquotients

SubFinAb subquotient_cohomology(const FinAbHom& f, const FinAbHom& g) {
  if (!(f.target() == g.source())) throw DomainError("not a complex: middle groups differ");
  if (!g.compose(f).is_zero()) throw DomainError("not a complex");
  const FinAb& b = g.source();
  std::size_t n = b.rank();
  BigMat k = kernel_lattice(g);
  BigMat gens = image_generators(f);
  return lattice_quotient(k, gens, n, f.source().rank() + n, b);
}

SubFinAb kernel(const FinAbHom& f) { return subquotient_cohomology(FinAbHom::zero(FinAb(), f.source()), f); }

SubFinAb cokernel(const FinAbHom& f) { return subquotient_cohomology(f, FinAbHom::zero(f.target(), FinAb())); }

SubFinAb image(const FinAbHom& f) {
  const FinAb& b = f.target();
  std::size_t n = b.rank();
  if (n == 0) return {};
  BigMat gens = image_generators(f);
  std::size_t c = f.source().rank() + n;
  // Basis of the spanned lattice: Uinv * D restricted to the rank columns.
  auto s = smith_normal_form(gens, n, c, true);
  if (s.rank != n) throw TheoremViolation("image lattice is not full rank");
  BigMat basis(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis[i][j] = s.Uinv[i][j] * s.diag[j];
  BigMat rel(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) rel[i][i] = b.moduli()[i];
  return lattice_quotient(basis, rel, n, n, b);
}

bool is_automorphism(const FinAbHom& f) {
  if (!(f.source() == f.target())) return false;
  return kernel(f).group.is_trivial();
}

SubFinAb fixed_points(const FinAb& m, const std::vector<FinAbHom>& action) {
  std::size_t r = m.rank();
  std::vector<std::int64_t> stacked;
  IntMat mat;
  for (const auto& s : action) {
    if (!(s.source() == m) || !is_automorphism(s)) throw DomainError("action generator is not an automorphism");
    for (std::size_t i = 0; i < r; ++i) {
      IntVec row = s.matrix()[i];
      row[i] -= 1;
      mat.push_back(row);
      stacked.push_back(m.moduli()[i]);
    }
  }
  FinAbHom diff(m, FinAb::cyclic_sum(stacked), mat);
  return kernel(diff);
}

SubFinAb norm_image(const FinAb& m, const std::vector<FinAbHom>& group_elements) {
  FinAbHom sum = FinAbHom::zero(m, m);
  for (const auto& g : group_elements) sum = sum + g;
  return image(sum);
}

}  // namespace fusion
