#include "fusion/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace fusion {

namespace {

constexpr std::size_t kMulTableMax = 1500;

std::uint64_t hash_points(std::span<const Point> img) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (Point x : img) {
    h ^= x;
    h *= 0x100000001b3ull;
  }
  return h ^ (h >> 29);
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

// Growable open-addressing set of image arrays used while closing generators.
class ClosureTable {
 public:
  explicit ClosureTable(std::size_t degree) : degree_(degree), slots_(64, kNoElem) {}

  std::size_t size() const { return count_; }
  std::vector<Point>& data() { return data_; }
  std::span<const Point> at(std::size_t i) const { return {data_.data() + i * degree_, degree_}; }

  // Returns true when inserted.
  bool insert(std::span<const Point> img) {
    if ((count_ + 1) * 2 > slots_.size()) grow();
    std::size_t mask = slots_.size() - 1;
    std::size_t s = hash_points(img) & mask;
    while (slots_[s] != kNoElem) {
      if (std::equal(img.begin(), img.end(), at(slots_[s]).begin())) return false;
      s = (s + 1) & mask;
    }
    slots_[s] = static_cast<Elem>(count_);
    data_.insert(data_.end(), img.begin(), img.end());
    ++count_;
    return true;
  }

 private:
  void grow() {
    std::vector<Elem> fresh(slots_.size() * 2, kNoElem);
    std::size_t mask = fresh.size() - 1;
    for (std::size_t i = 0; i < count_; ++i) {
      std::size_t s = hash_points(at(i)) & mask;
      while (fresh[s] != kNoElem) s = (s + 1) & mask;
      fresh[s] = static_cast<Elem>(i);
    }
    slots_ = std::move(fresh);
  }

  std::size_t degree_;
  std::size_t count_ = 0;
  std::vector<Point> data_;
  std::vector<Elem> slots_;
};

// Closure of gens inside the root; sorted element list.
std::vector<Elem> closure(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Elem> out{FiniteGroup::identity()};
  seen[FiniteGroup::identity()] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    Elem x = out[i];
    for (Elem s : gens) {
      Elem y = g.mul(s, x);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Greedy generating set: walk elements in order, keep those not yet generated.
std::vector<Elem> greedy_generators(const FiniteGroup& g, std::span<const Elem> elems,
                                    std::span<const Elem> seed = {}) {
  std::vector<Elem> gens;
  std::vector<char> in(g.order(), 0);
  in[FiniteGroup::identity()] = 1;
  auto absorb = [&](Elem x) {
    gens.push_back(x);
    for (Elem e : closure(g, gens)) in[e] = 1;
  };
  for (Elem x : seed)
    if (!in[x]) absorb(x);
  for (Elem x : elems)
    if (!in[x]) absorb(x);
  return gens;
}

}  // namespace

// ---------------------------------------------------------------- FiniteGroup

std::shared_ptr<const FiniteGroup> FiniteGroup::generate(std::size_t degree, const std::vector<Perm>& gens,
                                                         std::size_t max_order, std::string name) {
  if (degree == 0 || degree > 0xFFFF) throw DomainError("degree out of range");
  for (const auto& p : gens)
    if (p.degree() != degree) throw DomainError("generator degree does not match declared degree");

  ClosureTable tab(degree);
  std::vector<Point> buf(degree);
  std::iota(buf.begin(), buf.end(), Point{0});
  tab.insert(buf);
  for (std::size_t i = 0; i < tab.size(); ++i) {
    for (const auto& s : gens) {
      auto x = tab.at(i);
      for (std::size_t k = 0; k < degree; ++k) buf[k] = s(x[k]);
      if (tab.insert(buf) && tab.size() > max_order)
        throw BoundExceeded("group too large: closure exceeds " + std::to_string(max_order) + " elements");
    }
  }

  auto grp = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  grp->degree_ = degree;
  grp->order_ = tab.size();
  grp->name_ = std::move(name);

  std::vector<std::size_t> idx(tab.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    auto x = tab.at(a), y = tab.at(b);
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });
  grp->data_.reserve(tab.size() * degree);
  for (std::size_t i : idx) {
    auto x = tab.at(i);
    grp->data_.insert(grp->data_.end(), x.begin(), x.end());
  }

  std::size_t cap = 16;
  while (cap < grp->order_ * 2) cap <<= 1;
  grp->table_.assign(cap, kNoElem);
  for (std::size_t e = 0; e < grp->order_; ++e)
    grp->table_[grp->slot_of(grp->images(static_cast<Elem>(e)))] = static_cast<Elem>(e);

  grp->inv_.resize(grp->order_);
  for (std::size_t e = 0; e < grp->order_; ++e) {
    auto x = grp->images(static_cast<Elem>(e));
    for (std::size_t k = 0; k < degree; ++k) buf[x[k]] = static_cast<Point>(k);
    grp->inv_[e] = *grp->find(buf);
  }

  if (grp->order_ <= kMulTableMax) {
    std::vector<Elem> table(grp->order_ * grp->order_);
    for (std::size_t a = 0; a < grp->order_; ++a)
      for (std::size_t b = 0; b < grp->order_; ++b) table[a * grp->order_ + b] = grp->mul(a, b);
    grp->mul_ = std::move(table);
  }

  grp->ord_.resize(grp->order_);
  for (std::size_t e = 0; e < grp->order_; ++e) {
    std::uint32_t k = 1;
    Elem x = static_cast<Elem>(e);
    while (x != identity()) {
      x = grp->mul(x, static_cast<Elem>(e));
      ++k;
    }
    grp->ord_[e] = k;
  }

  std::uint64_t h = mix(0x51ed270b27a1f3c5ull, degree);
  h = mix(h, grp->order_);
  h = mix(h, hash_points(grp->data_));
  grp->id_ = h;

  for (const auto& s : gens) {
    Elem e = grp->index_of(s);
    if (e != identity() && std::find(grp->gens_.begin(), grp->gens_.end(), e) == grp->gens_.end())
      grp->gens_.push_back(e);
  }
  return grp;
}

std::size_t FiniteGroup::slot_of(std::span<const Point> img) const {
  std::size_t mask = table_.size() - 1;
  std::size_t s = hash_points(img) & mask;
  while (table_[s] != kNoElem) {
    auto y = images(table_[s]);
    if (std::equal(img.begin(), img.end(), y.begin())) return s;
    s = (s + 1) & mask;
  }
  return s;
}

std::optional<Elem> FiniteGroup::find(std::span<const Point> img) const {
  if (img.size() != degree_) return std::nullopt;
  Elem e = table_[slot_of(img)];
  if (e == kNoElem) return std::nullopt;
  return e;
}

Elem FiniteGroup::index_of(const Perm& p) const {
  auto e = find(p.images());
  if (!e) throw DomainError("permutation " + format_cycles(p) + " is not an element of the group");
  return *e;
}

Perm FiniteGroup::perm(Elem e) const {
  auto x = images(e);
  return Perm(std::vector<Point>(x.begin(), x.end()));
}

Elem FiniteGroup::mul(Elem a, Elem b) const {
  if (!mul_.empty()) return mul_[static_cast<std::size_t>(a) * order_ + b];
  thread_local std::vector<Point> buf;
  buf.resize(degree_);
  auto x = images(a), y = images(b);
  for (std::size_t k = 0; k < degree_; ++k) buf[k] = x[y[k]];
  return table_[slot_of(buf)];
}

Elem FiniteGroup::pow(Elem a, std::uint64_t k) const {
  k %= ord_[a];
  Elem r = identity();
  Elem base = a;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

// ------------------------------------------------------------------- Subgroup

Subgroup Subgroup::make(GroupPtr root, std::vector<Elem> elems, std::vector<Elem> gens) {
  auto d = std::make_shared<Data>();
  if (gens.empty() && elems.size() > 1) gens = greedy_generators(*root, elems);
  d->bits.assign((root->order() + 63) / 64, 0);
  std::uint64_t h = mix(root->id(), elems.size());
  for (Elem e : elems) {
    d->bits[e >> 6] |= std::uint64_t{1} << (e & 63);
    h = mix(h, e);
  }
  d->hash = h;
  d->root = std::move(root);
  d->elems = std::move(elems);
  d->gens = std::move(gens);
  Subgroup s;
  s.d_ = std::move(d);
  return s;
}

bool Subgroup::contains(const Subgroup& other) const {
  if (other.root() != root()) return false;
  if (order() % other.order() != 0) return false;
  for (Elem g : other.generators())
    if (!contains(g)) return false;
  return true;
}

bool Subgroup::operator==(const Subgroup& o) const {
  if (d_ == o.d_) return true;
  if (!d_ || !o.d_) return false;
  return d_->hash == o.d_->hash && d_->root == o.d_->root && d_->elems == o.d_->elems;
}

bool Subgroup::operator<(const Subgroup& o) const {
  if (order() != o.order()) return order() < o.order();
  return d_->elems < o.d_->elems;
}

bool same_root(const Subgroup& a, const Subgroup& b) { return a.root() == b.root(); }

static void require_same_root(const Subgroup& a, const Subgroup& b) {
  if (!same_root(a, b)) throw DomainError("subgroups live in different groups");
}

Subgroup whole(const GroupPtr& g) {
  std::vector<Elem> e(g->order());
  std::iota(e.begin(), e.end(), Elem{0});
  return Subgroup::make(g, std::move(e), g->generators());
}

Subgroup trivial(const GroupPtr& g) { return Subgroup::make(g, {FiniteGroup::identity()}, {}); }

Subgroup generate(const GroupPtr& g, std::span<const Elem> gens) {
  std::vector<Elem> clean;
  std::vector<char> in(g->order(), 0);
  in[FiniteGroup::identity()] = 1;
  for (Elem x : gens) {
    if (x >= g->order()) throw DomainError("generator index out of range");
    if (in[x]) continue;
    clean.push_back(x);
    for (Elem e : closure(*g, clean)) in[e] = 1;
  }
  auto elems = closure(*g, clean);
  return Subgroup::make(g, std::move(elems), std::move(clean));
}

Subgroup from_elements(const GroupPtr& g, std::vector<Elem> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty() || elems.front() != FiniteGroup::identity())
    throw DomainError("element set does not contain the identity");
  if (elems.back() >= g->order()) throw DomainError("element index out of range");
  auto gens = greedy_generators(*g, elems);
  auto cl = closure(*g, gens);
  if (cl != elems) throw DomainError("element set is not closed under multiplication");
  return Subgroup::make(g, std::move(elems), std::move(gens));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_root(a, b);
  std::vector<Elem> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return generate(a.root(), gens);
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  require_same_root(a, b);
  const Subgroup& small = a.order() <= b.order() ? a : b;
  const Subgroup& big = a.order() <= b.order() ? b : a;
  std::vector<Elem> out;
  for (Elem e : small.elements())
    if (big.contains(e)) out.push_back(e);
  return Subgroup::make(a.root(), std::move(out));
}

Subgroup conjugate(const Subgroup& p, Elem g) {
  const auto& G = *p.root();
  std::vector<Elem> out;
  out.reserve(p.order());
  for (Elem x : p.elements()) out.push_back(G.conj(g, x));
  std::sort(out.begin(), out.end());
  std::vector<Elem> gens;
  for (Elem x : p.generators()) gens.push_back(G.conj(g, x));
  return Subgroup::make(p.root(), std::move(out), std::move(gens));
}

Subgroup centralizer(const Subgroup& h, const Subgroup& p) {
  require_same_root(h, p);
  const auto& G = *h.root();
  std::vector<Elem> out;
  for (Elem g : h.elements()) {
    bool ok = true;
    for (Elem x : p.generators())
      if (G.mul(g, x) != G.mul(x, g)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return Subgroup::make(h.root(), std::move(out));
}

Subgroup normalizer(const Subgroup& h, const Subgroup& p) {
  require_same_root(h, p);
  const auto& G = *h.root();
  std::vector<Elem> out;
  for (Elem g : h.elements()) {
    bool ok = true;
    for (Elem x : p.generators())
      if (!p.contains(G.conj(g, x))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return Subgroup::make(h.root(), std::move(out));
}

Subgroup center(const Subgroup& h) { return centralizer(h, h); }

bool is_normal(const Subgroup& p, const Subgroup& h) {
  if (!h.contains(p)) return false;
  const auto& G = *h.root();
  for (Elem g : h.generators())
    for (Elem x : p.generators())
      if (!p.contains(G.conj(g, x))) return false;
  return true;
}

bool is_abelian(const Subgroup& h) {
  const auto& G = *h.root();
  auto gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (G.mul(gens[i], gens[j]) != G.mul(gens[j], gens[i])) return false;
  return true;
}

bool is_p_group(const Subgroup& h, unsigned p) { return p_part(h.order(), p) == h.order(); }

bool is_elementary_abelian(const Subgroup& h, unsigned p) {
  if (!is_p_group(h, p) || !is_abelian(h)) return false;
  for (Elem g : h.generators())
    if (h.root()->elem_order(g) != p) return false;
  return true;
}

Stabilizers stabilizer_subgroups(const Subgroup& g, const Subgroup& p) {
  if (!g.contains(p)) throw DomainError("P is not a subgroup of G");
  return {centralizer(g, p), normalizer(g, p)};
}

std::uint64_t p_part(std::uint64_t n, unsigned p) {
  if (p < 2) throw DomainError("p must be a prime");
  std::uint64_t r = 1;
  while (n && n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<unsigned> prime_divisors(std::uint64_t n) {
  std::vector<unsigned> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(static_cast<unsigned>(d));
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(static_cast<unsigned>(n));
  return out;
}

static bool is_p_elem(const FiniteGroup& G, Elem e, unsigned p) {
  std::uint32_t o = G.elem_order(e);
  return p_part(o, p) == o;
}

Subgroup sylow(const Subgroup& h, unsigned p) {
  if (!is_prime(p)) throw DomainError("p must be a prime");
  const auto& G = *h.root();
  std::uint64_t target = p_part(h.order(), p);
  Subgroup P = trivial(h.root());
  while (P.order() < target) {
    Subgroup N = normalizer(h, P);
    Elem pick = kNoElem;
    for (Elem x : N.elements())
      if (!P.contains(x) && is_p_elem(G, x, p)) {
        pick = x;
        break;
      }
    if (pick == kNoElem) throw TheoremViolation("no p-element in N_H(P) \\ P for a non-Sylow P");
    std::vector<Elem> gens(P.generators().begin(), P.generators().end());
    gens.push_back(pick);
    P = generate(h.root(), gens);
  }
  return P;
}

Subgroup o_p(const Subgroup& h, unsigned p) {
  Subgroup K = sylow(h, p);
  for (;;) {
    Subgroup next = K;
    for (Elem g : h.generators()) next = intersect(next, conjugate(K, g));
    if (next == K) return K;
    K = next;
  }
}

Subgroup frattini(const Subgroup& h, unsigned p) {
  if (!is_p_group(h, p)) throw DomainError("Frattini subgroup requested on a group that is not a p-group");
  const auto& G = *h.root();
  std::vector<Elem> gens;
  for (Elem x : h.elements()) {
    gens.push_back(G.pow(x, p));
    for (Elem y : h.generators()) gens.push_back(G.mul(G.mul(x, y), G.mul(G.inv(x), G.inv(y))));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // Commutators with generators plus p-th powers generate a normal subgroup
  // containing H' and H^p once closed under conjugation by H.
  Subgroup F = generate(h.root(), gens);
  for (;;) {
    std::vector<Elem> more(F.generators().begin(), F.generators().end());
    for (Elem g : h.generators())
      for (Elem x : F.generators()) more.push_back(G.conj(g, x));
    Subgroup F2 = generate(h.root(), more);
    if (F2 == F) return F;
    F = F2;
  }
}

Subgroup omega_1(const Subgroup& h, unsigned p) {
  if (!is_abelian(h)) throw DomainError("omega_1 requested on a non-abelian group");
  if (!is_p_group(h, p)) throw DomainError("omega_1 requested on a group that is not a p-group");
  const auto& G = *h.root();
  std::vector<Elem> out;
  for (Elem x : h.elements())
    if (G.pow(x, p) == FiniteGroup::identity()) out.push_back(x);
  return Subgroup::make(h.root(), std::move(out));
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  require_same_root(a, b);
  const auto& G = *a.root();
  // Normal closure in <A,B> of the commutators of generators.
  std::vector<Elem> gens;
  for (Elem x : a.generators())
    for (Elem y : b.generators()) gens.push_back(G.mul(G.mul(x, y), G.mul(G.inv(x), G.inv(y))));
  Subgroup C = generate(a.root(), gens);
  std::vector<Elem> conj_by(a.generators().begin(), a.generators().end());
  conj_by.insert(conj_by.end(), b.generators().begin(), b.generators().end());
  for (;;) {
    std::vector<Elem> more(C.generators().begin(), C.generators().end());
    for (Elem g : conj_by)
      for (Elem x : C.generators()) more.push_back(G.conj(g, x));
    Subgroup next = generate(a.root(), more);
    if (next == C) return C;
    C = next;
  }
}

CharacteristicSubgroups characteristic_subgroups(const Subgroup& g, unsigned p) {
  CharacteristicSubgroups c{center(g), o_p(g, p), std::nullopt, std::nullopt};
  if (is_p_group(g, p)) {
    c.frattini = frattini(g, p);
    if (is_abelian(g)) c.omega_1 = omega_1(g, p);
  }
  return c;
}

std::vector<Elem> transporter(const Subgroup& h, const Subgroup& p, const Subgroup& q) {
  require_same_root(h, p);
  require_same_root(h, q);
  std::vector<Elem> out;
  if (p.order() > q.order() || q.order() % p.order() != 0) return out;
  const auto& G = *h.root();
  for (Elem g : h.elements()) {
    bool ok = true;
    for (Elem x : p.generators())
      if (!q.contains(G.conj(g, x))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return out;
}

std::vector<Elem> transporter_set(const Subgroup& h, const Subgroup& p, const Subgroup& q) {
  auto T = transporter(h, p, q);
  if (T.empty()) return T;
  const auto& G = *h.root();
  Subgroup C = centralizer(h, p);
  std::vector<char> done(G.order(), 0);
  std::vector<Elem> reps;
  for (Elem t : T) {
    if (done[t]) continue;
    reps.push_back(t);
    for (Elem c : C.elements()) done[G.mul(t, c)] = 1;
  }
  return reps;
}

std::vector<Subgroup> conjugacy_class(const Subgroup& h, const Subgroup& p) {
  require_same_root(h, p);
  std::vector<Subgroup> out{p};
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> seen{{p.hash(), {0}}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Elem g : h.generators()) {
      Subgroup c = conjugate(out[i], g);
      auto& bucket = seen[c.hash()];
      bool dup = false;
      for (std::size_t j : bucket)
        if (out[j] == c) dup = true;
      if (!dup) {
        bucket.push_back(out.size());
        out.push_back(c);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> product_set(const Subgroup& a, const Subgroup& b) {
  require_same_root(a, b);
  const auto& G = *a.root();
  std::vector<char> in(G.order(), 0);
  for (Elem x : a.elements())
    for (Elem y : b.elements()) in[G.mul(x, y)] = 1;
  std::vector<Elem> out;
  for (Elem e = 0; e < G.order(); ++e)
    if (in[e]) out.push_back(e);
  return out;
}

std::optional<std::size_t> Lattice::index_of(const Subgroup& s) const {
  auto it = std::lower_bound(subgroups.begin(), subgroups.end(), s);
  if (it != subgroups.end() && *it == s) return static_cast<std::size_t>(it - subgroups.begin());
  return std::nullopt;
}

Lattice subgroup_lattice(const Subgroup& s, std::size_t bound) {
  if (s.order() > bound)
    throw BoundExceeded("lattice too large: |S| = " + std::to_string(s.order()) + " exceeds " +
                        std::to_string(bound));
  const auto& G = *s.root();
  std::vector<Subgroup> found{trivial(s.root())};
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> seen{{found[0].hash(), {0}}};
  for (std::size_t i = 0; i < found.size(); ++i) {
    Subgroup K = found[i];
    std::vector<char> covered(G.order(), 0);
    for (Elem e : K.elements()) covered[e] = 1;
    for (Elem x : s.elements()) {
      if (covered[x]) continue;
      std::vector<Elem> gens(K.generators().begin(), K.generators().end());
      gens.push_back(x);
      Subgroup J = generate(s.root(), gens);
      // The whole coset xK gives the same join.
      for (Elem k : K.elements()) covered[G.mul(x, k)] = 1;
      auto& bucket = seen[J.hash()];
      bool dup = false;
      for (std::size_t j : bucket)
        if (found[j] == J) dup = true;
      if (!dup) {
        bucket.push_back(found.size());
        found.push_back(J);
      }
    }
  }
  std::sort(found.begin(), found.end());
  Lattice L;
  L.subgroups = std::move(found);
  L.above.resize(L.subgroups.size());
  for (std::size_t i = 0; i < L.subgroups.size(); ++i)
    for (std::size_t j = i + 1; j < L.subgroups.size(); ++j)
      if (L.subgroups[j].order() > L.subgroups[i].order() && L.subgroups[j].contains(L.subgroups[i]))
        L.above[i].push_back(j);
  return L;
}

std::vector<std::vector<Point>> orbits(const Subgroup& h) {
  const auto& G = *h.root();
  std::vector<char> seen(G.degree(), 0);
  std::vector<std::vector<Point>> out;
  for (std::size_t x0 = 0; x0 < G.degree(); ++x0) {
    if (seen[x0]) continue;
    std::vector<Point> orb{static_cast<Point>(x0)};
    seen[x0] = 1;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (Elem g : h.generators()) {
        Point y = G.apply(g, orb[i]);
        if (!seen[y]) {
          seen[y] = 1;
          orb.push_back(y);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

// --------------------------------------------------------------- Homomorphism

Homomorphism::Homomorphism(Subgroup source, GroupPtr target, std::vector<Elem> image_by_root)
    : src_(std::move(source)), tgt_(std::move(target)), img_(std::move(image_by_root)) {}

Elem Homomorphism::operator()(Elem e) const {
  if (e >= img_.size() || img_[e] == kNoElem) throw DomainError("element outside the domain of the homomorphism");
  return img_[e];
}

Subgroup Homomorphism::image() const { return image(src_); }

Subgroup Homomorphism::image(const Subgroup& of) const {
  std::vector<Elem> gens;
  for (Elem g : of.generators()) gens.push_back((*this)(g));
  return generate(tgt_, gens);
}

Subgroup Homomorphism::kernel() const {
  std::vector<Elem> out;
  for (Elem e : src_.elements())
    if (img_[e] == FiniteGroup::identity()) out.push_back(e);
  return Subgroup::make(src_.root(), std::move(out));
}

Subgroup Homomorphism::preimage(const Subgroup& of) const {
  if (of.root() != tgt_) throw DomainError("subgroup is not in the target group");
  std::vector<Elem> out;
  for (Elem e : src_.elements())
    if (of.contains(img_[e])) out.push_back(e);
  return Subgroup::make(src_.root(), std::move(out));
}

Homomorphism action_hom(const Subgroup& h, std::size_t points, const std::function<Point(Elem, Point)>& act,
                        std::size_t max_order) {
  const auto& G = *h.root();
  auto perm_of = [&](Elem e) {
    std::vector<Point> img(points);
    for (std::size_t x = 0; x < points; ++x) img[x] = act(e, static_cast<Point>(x));
    return Perm(std::move(img));
  };
  std::vector<Perm> gens;
  for (Elem g : h.generators()) gens.push_back(perm_of(g));
  auto T = FiniteGroup::generate(points, gens, max_order);
  std::vector<Elem> img(G.order(), kNoElem);
  for (Elem e : h.elements()) {
    auto p = perm_of(e);
    auto t = T->find(p.images());
    if (!t) throw DomainError("action is not a homomorphism");
    img[e] = *t;
  }
  for (Elem e : h.elements())
    for (Elem g : h.generators())
      if (img[G.mul(g, e)] != T->mul(img[g], img[e])) throw DomainError("action is not a homomorphism");
  return Homomorphism(h, std::move(T), std::move(img));
}

Homomorphism quotient_hom(const Subgroup& h, const Subgroup& k) {
  if (!is_normal(k, h)) throw DomainError("quotient by a subgroup that is not normal");
  const auto& G = *h.root();
  std::vector<Elem> coset_of(G.order(), kNoElem);
  std::vector<Elem> reps;
  for (Elem x : h.elements()) {
    if (coset_of[x] != kNoElem) continue;
    for (Elem y : k.elements()) coset_of[G.mul(x, y)] = static_cast<Elem>(reps.size());
    reps.push_back(x);
  }
  return action_hom(
      h, reps.size(), [&](Elem g, Point i) { return static_cast<Point>(coset_of[G.mul(g, reps[i])]); },
      std::max<std::size_t>(reps.size(), kDefaultMaxOrder));
}

std::string describe(const Subgroup& s) {
  std::ostringstream out;
  out << "order " << s.order() << " <";
  bool first = true;
  for (Elem g : s.generators()) {
    if (!first) out << ", ";
    out << format_cycles(s.root()->perm(g));
    first = false;
  }
  out << '>';
  return out.str();
}

}  // namespace fusion
