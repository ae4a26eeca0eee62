#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fusion/finab.hpp"

namespace fusion {

/// Row-sparse integer matrix; rows index the target, columns the source.
struct SparseMatrix {
  using Row = std::vector<std::pair<std::uint32_t, std::int64_t>>;  // sorted by column
  std::size_t rows = 0, cols = 0;
  std::vector<Row> data;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r) {}
  std::size_t nonzeros() const;
  /// Appends v to entry (i, j); duplicates are summed by finalize().
  void add(std::size_t i, std::size_t j, std::int64_t v);
  /// Sorts rows, merges duplicates and reduces row i modulo the i-th
  /// target modulus, dropping zeros.
  void finalize(const FinAb& target);
};

/// Cochain groups C^0, C^1, ... with differentials d^n : C^n -> C^{n+1}.
struct IntegerComplex {
  std::vector<FinAb> groups;
  std::vector<SparseMatrix> diffs;
};

/// Checks that each differential is a homomorphism and d^{n+1} d^n = 0.
/// Throws TheoremViolation when either fails.
void check_complex(const IntegerComplex& c);

/// H^n = ker d^n / im d^{n-1} in canonical form. Differentials missing at
/// either end are treated as zero. Computed one prime at a time over Z/q^E
/// with sparse elimination.
FinAb cohomology(const IntegerComplex& c, std::size_t n);

/// Same group computed through the dense big-integer route; for cross-checks
/// on small complexes.
FinAb cohomology_dense(const IntegerComplex& c, std::size_t n);

FinAbHom to_dense(const SparseMatrix& m, const FinAb& source, const FinAb& target);

/// ker(g) / im(f) for sparse f: A -> B and g: B -> C via the local route.
FinAb sparse_subquotient(const FinAb& a, const FinAb& b, const FinAb& c, const SparseMatrix* f,
                         const SparseMatrix* g);

}  // namespace fusion
