#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace fusion {

using BigInt = boost::multiprecision::cpp_int;
using BigMat = std::vector<std::vector<BigInt>>;

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... and
/// all nonzero entries positive and in front. Inverses of U and V are
/// tracked alongside.
struct SmithForm {
  std::vector<BigInt> diag;  // length min(rows, cols); zeros at the end
  std::size_t rank = 0;
  BigMat U, Uinv, V, Vinv;
};

SmithForm smith_normal_form(const BigMat& a, std::size_t rows, std::size_t cols, bool transforms = true);

BigMat identity_matrix(std::size_t n);
BigMat multiply(const BigMat& a, const BigMat& b, std::size_t inner);

/// Basis of the integer kernel {x : A x = 0}, as columns of an n x k matrix.
BigMat integer_kernel(const BigMat& a, std::size_t rows, std::size_t cols);

/// Solves K X = B for square nonsingular K over the integers. Throws
/// TheoremViolation if the solution is not integral.
BigMat solve_square(const BigMat& k, const BigMat& b, std::size_t n, std::size_t bcols);

}  // namespace fusion
