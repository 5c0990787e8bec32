#pragma once

/*
 * Fraction-free Gauss-Jordan elimination (Bareiss) on the augmented matrix
 * [A | I]. Every intermediate entry is a minor of [A | I], so each division
 * by the previous pivot is exact. On completion the left block is det(A) * I
 * and the right block is adj(A) = det(A) * A^{-1}.
 */

#include <cstddef>
#include <optional>

#include "lusztig/error.hpp"
#include "lusztig/matrix.hpp"

namespace lusztig {

template <class Int>
struct Adjugate {
  Int determinant;
  Matrix<Int> adjugate;  // determinant * inverse
};

/// Returns nullopt for a singular matrix. `Int` must be an exact integer type
/// wide enough for the largest minor (use an arbitrary-precision type).
template <class Int>
std::optional<Adjugate<Int>> bareiss_adjugate(const Matrix<Int>& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw InputError("bareiss_adjugate needs a square matrix");

  Matrix<Int> m(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n + i) = Int(1);
  }

  Int previous(1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot_row = k;
    while (pivot_row < n && m(pivot_row, k) == 0) ++pivot_row;
    if (pivot_row == n) return std::nullopt;
    if (pivot_row != k) {
      m.swap_rows(pivot_row, k);
      negate = !negate;
    }

    const Int pivot = m(k, k);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Int factor = m(i, k);
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        Int value = pivot * m(i, j) - factor * m(k, j);
        if (value % previous != 0) throw InvariantViolation("inexact Bareiss division");
        m(i, j) = value / previous;
      }
      m(i, k) = Int(0);
    }
    previous = pivot;
  }

  // Row swaps do not change the right block's meaning (it still equals
  // previous * A^{-1}); they only flip the sign relating `previous` to det(A).
  Adjugate<Int> out{negate ? Int(-previous) : previous, Matrix<Int>(n, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.adjugate(i, j) = negate ? Int(-m(i, n + j)) : m(i, n + j);
  return out;
}

}  // namespace lusztig
