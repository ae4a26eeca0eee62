#include "fusion/perm.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "fusion/errors.hpp"

namespace fusion {

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (Point x : img_) {
    if (x >= img_.size() || seen[x])
      throw DomainError("image array is not a permutation");
    seen[x] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Point> v(degree);
  std::iota(v.begin(), v.end(), Point{0});
  Perm p;
  p.img_ = std::move(v);
  return p;
}

Perm Perm::operator*(const Perm& rhs) const {
  if (rhs.degree() != degree())
    throw DomainError("degree mismatch in permutation product");
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = img_[rhs.img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<Point>(i);
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm parse_cycles(std::string_view text, std::size_t degree) {
  Perm result = Perm::identity(degree);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw ParseError("empty permutation");
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '(' in cycle notation: " + std::string(text));
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (pos >= text.size()) throw ParseError("unterminated cycle: " + std::string(text));
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("unexpected character in cycle: " + std::string(text));
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > degree) throw ParseError("point exceeds declared degree: " + std::string(text));
        ++pos;
      }
      if (value == 0) throw ParseError("points are 1-based: " + std::string(text));
      cycle.push_back(static_cast<Point>(value - 1));
    }
    std::vector<bool> in_cycle(degree, false);
    for (Point x : cycle) {
      if (in_cycle[x]) throw ParseError("repeated point in cycle: " + std::string(text));
      in_cycle[x] = true;
    }
    // Cycles compose right-to-left, matching how products are written.
    std::vector<Point> c(degree);
    std::iota(c.begin(), c.end(), Point{0});
    for (std::size_t i = 0; i < cycle.size(); ++i) c[cycle[i]] = cycle[(i + 1) % cycle.size()];
    result = result * Perm(std::move(c));
    skip_ws();
  }
  return result;
}

std::string format_cycles(const Perm& p) {
  std::ostringstream out;
  std::vector<bool> done(p.degree(), false);
  bool any = false;
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (done[i] || p(static_cast<Point>(i)) == i) continue;
    any = true;
    out << '(';
    Point x = static_cast<Point>(i);
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) out << ' ';
      out << (x + 1);
      first = false;
      x = p(x);
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

}  // namespace fusion
