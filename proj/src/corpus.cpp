#include "fusion/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

namespace fusion {

namespace {

std::string cycle(std::size_t from, std::size_t to) {
  std::string s = "(";
  for (std::size_t i = from; i <= to; ++i) s += std::to_string(i) + (i == to ? ")" : " ");
  return s;
}

struct Gens {
  std::size_t degree;
  std::vector<Perm> perms;
};

Gens from_strings(std::size_t degree, const std::vector<std::string>& s) {
  Gens g{degree, {}};
  for (const auto& x : s) g.perms.push_back(parse_cycles(x, degree));
  return g;
}

// Matrices over F_q act on nonzero vectors, encoded in base q minus one.
Gens linear_group(unsigned n, unsigned q, bool special) {
  if (!is_prime(q)) throw ParseError("linear groups are supported over prime fields only");
  std::size_t qn = 1;
  for (unsigned i = 0; i < n; ++i) qn *= q;
  if (qn - 1 > 0xFFFF) throw ParseError("linear group too large");
  auto act = [&](const std::vector<std::vector<unsigned>>& m) {
    std::vector<Point> img(qn - 1);
    for (std::size_t code = 1; code < qn; ++code) {
      std::vector<unsigned> v(n);
      std::size_t c = code;
      for (unsigned i = 0; i < n; ++i) {
        v[i] = c % q;
        c /= q;
      }
      std::size_t out = 0, w = 1;
      for (unsigned i = 0; i < n; ++i) {
        unsigned s = 0;
        for (unsigned j = 0; j < n; ++j) s += m[i][j] * v[j];
        out += (s % q) * w;
        w *= q;
      }
      img[code - 1] = static_cast<Point>(out - 1);
    }
    return Perm(std::move(img));
  };
  auto eye = [&] {
    std::vector<std::vector<unsigned>> m(n, std::vector<unsigned>(n, 0));
    for (unsigned i = 0; i < n; ++i) m[i][i] = 1;
    return m;
  };
  Gens g{qn - 1, {}};
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if (i != j) {
        auto m = eye();
        m[i][j] = 1;
        g.perms.push_back(act(m));
      }
  if (!special && q > 2) {
    unsigned w = 2;
    for (; w < q; ++w) {
      unsigned x = w, k = 1;
      while (x != 1) {
        x = x * w % q;
        ++k;
      }
      if (k == q - 1) break;
    }
    auto m = eye();
    m[0][0] = w;
    g.perms.push_back(act(m));
  }
  return g;
}

Gens shift(const Gens& g, std::size_t offset, std::size_t degree) {
  Gens out{degree, {}};
  for (const auto& p : g.perms) {
    std::vector<Point> img(degree);
    for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < p.degree(); ++i) img[i + offset] = static_cast<Point>(p(static_cast<Point>(i)) + offset);
    out.perms.push_back(Perm(std::move(img)));
  }
  return out;
}

Gens named_gens(const std::string& id) {
  // Direct products split at top-level 'x'.
  int depth = 0;
  for (std::size_t i = 0; i < id.size(); ++i) {
    if (id[i] == '(') ++depth;
    if (id[i] == ')') --depth;
    if (id[i] == 'x' && depth == 0) {
      Gens a = named_gens(id.substr(0, i));
      Gens b = named_gens(id.substr(i + 1));
      std::size_t d = a.degree + b.degree;
      Gens out = shift(a, 0, d);
      Gens sb = shift(b, a.degree, d);
      out.perms.insert(out.perms.end(), sb.perms.begin(), sb.perms.end());
      return out;
    }
  }
  std::smatch m;
  static const std::regex kFamily(R"(([CDSA])(\d+))");
  static const std::regex kLinear(R"((GL|SL)\((\d+),(\d+)\))");
  if (id == "Q8") return from_strings(8, {"(1 2 4 7)(3 6 8 5)", "(1 3 4 8)(2 5 7 6)"});
  if (id == "SD16") return from_strings(8, {"(1 2 3 4 5 6 7 8)", "(2 4)(3 7)(6 8)"});
  if (id == "V4") return named_gens("C2xC2");
  if (std::regex_match(id, m, kLinear))
    return linear_group(static_cast<unsigned>(std::stoul(m[2])), static_cast<unsigned>(std::stoul(m[3])),
                        m[1] == "SL");
  if (std::regex_match(id, m, kFamily)) {
    std::size_t n = std::stoul(m[2]);
    char f = m[1].str()[0];
    if (f == 'C') {
      if (n < 1) throw ParseError("bad cyclic group id: " + id);
      if (n == 1) return from_strings(1, {});
      return from_strings(n, {cycle(1, n)});
    }
    if (f == 'D') {
      if (n == 4) return named_gens("C2xC2");
      if (n < 6 || n % 2) throw ParseError("dihedral ids give the order, which must be even and at least 4: " + id);
      std::size_t k = n / 2;
      std::string refl;
      for (std::size_t i = 2, j = k; i < j; ++i, --j) refl += "(" + std::to_string(i) + " " + std::to_string(j) + ")";
      return from_strings(k, {cycle(1, k), refl});
    }
    if (f == 'S') {
      if (n < 1) throw ParseError("bad symmetric group id: " + id);
      if (n == 1) return from_strings(1, {});
      return from_strings(n, {"(1 2)", cycle(1, n)});
    }
    if (f == 'A') {
      if (n < 1) throw ParseError("bad alternating group id: " + id);
      std::vector<std::string> g;
      for (std::size_t k = 3; k <= n; ++k) g.push_back("(1 2 " + std::to_string(k) + ")");
      return from_strings(std::max<std::size_t>(n, 1), g);
    }
  }
  throw ParseError("unknown group id: " + id);
}

}  // namespace

GroupPtr named_group(std::string_view id, std::size_t max_order) {
  std::string s(id);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
          s.end());
  Gens g = named_gens(s);
  return FiniteGroup::generate(g.degree, g.perms, max_order, s);
}

GroupPtr parse_group_text(std::string_view text, std::size_t max_order, std::string name) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t degree = 0;
  std::vector<Perm> gens;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    if (degree == 0) {
      std::smatch m;
      static const std::regex kDegree(R"(degree\s+(\d+))");
      if (!std::regex_match(line, m, kDegree))
        throw ParseError("line " + std::to_string(lineno) + ": expected 'degree N'");
      degree = std::stoul(m[1]);
      if (degree == 0) throw ParseError("degree must be positive");
      continue;
    }
    try {
      gens.push_back(parse_cycles(line, degree));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (degree == 0) throw ParseError("missing 'degree N' header");
  return FiniteGroup::generate(degree, gens, max_order, std::move(name));
}

GroupPtr group_from_generators(const std::vector<std::string>& gens, std::size_t degree, std::size_t max_order,
                               std::string name) {
  if (degree == 0) {
    static const std::regex kNum(R"(\d+)");
    for (const auto& g : gens)
      for (auto it = std::sregex_iterator(g.begin(), g.end(), kNum); it != std::sregex_iterator(); ++it)
        degree = std::max<std::size_t>(degree, std::stoul(it->str()));
    degree = std::max<std::size_t>(degree, 1);
  }
  std::vector<Perm> perms;
  for (const auto& g : gens) perms.push_back(parse_cycles(g, degree));
  return FiniteGroup::generate(degree, perms, max_order, std::move(name));
}

GroupPtr load_group(std::string_view spec, std::size_t max_order) {
  std::ifstream f{std::string(spec)};
  if (f) {
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_group_text(buf.str(), max_order, std::string(spec));
  }
  return named_group(spec, max_order);
}

const std::vector<std::string>& corpus_ids() {
  static const std::vector<std::string> ids = {"S3",   "S4",    "S5",       "S6",       "S7",      "S8",
                                               "A4",   "A5",    "A6",       "A7",       "A8",      "D8",
                                               "Q8",   "SD16",  "C2xC2",    "GL(3,2)",  "SL(2,3)", "GL(2,3)"};
  return ids;
}

}  // namespace fusion
