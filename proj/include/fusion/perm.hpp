#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fusion {

using Point = std::uint16_t;

/// A permutation of {0, ..., degree-1} stored as its image array.
/// Composition is right-to-left: (a * b)(x) = a(b(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);

  std::size_t degree() const { return img_.size(); }
  Point operator()(Point x) const { return img_[x]; }
  std::span<const Point> images() const { return img_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  bool is_identity() const;

  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

 private:
  std::vector<Point> img_;
};

/// Parses 1-based cycle notation such as "(1 2 3)(4 5)" or "()" for the
/// identity. Commas between points are accepted.
Perm parse_cycles(std::string_view text, std::size_t degree);

/// 1-based cycle notation; the identity prints as "()".
std::string format_cycles(const Perm& p);

}  // namespace fusion
