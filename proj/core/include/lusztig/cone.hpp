#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lusztig/matrix.hpp"
#include "lusztig/weyl_words.hpp"

namespace lusztig {

using BigInt = boost::multiprecision::cpp_int;

/// Integer vector indexed by the positive roots (p,q) of A_n. This is the
/// canonical coordinate system: entry a_{pq} belongs to alpha_{pq} wherever that
/// root sits in a particular word's ordering.
class RootVector {
 public:
  explicit RootVector(int n);
  RootVector(std::vector<std::int64_t> entries, int n);

  /// Entry j of `positions` is a_{alpha^{j+1}} for `ordering`.
  static RootVector from_positions(std::span<const std::int64_t> positions, const RootOrdering& ordering);
  /// Indicator of a single root.
  static RootVector unit(const PositiveRoot& root, int n);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return entries_.size(); }

  std::int64_t& operator[](const PositiveRoot& root) { return entries_[root_index(root, n_)]; }
  std::int64_t operator[](const PositiveRoot& root) const { return entries_[root_index(root, n_)]; }
  std::int64_t operator()(int p, int q) const { return (*this)[PositiveRoot{p, q}]; }

  /// Entries in canonical root order.
  std::span<const std::int64_t> entries() const noexcept { return entries_; }
  std::vector<std::int64_t> to_positions(const RootOrdering& ordering) const;

  bool nonnegative() const;

  RootVector& operator+=(const RootVector& other);
  friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
  friend RootVector operator*(std::int64_t c, RootVector v);
  friend bool operator==(const RootVector&, const RootVector&) = default;

 private:
  int n_;
  std::vector<std::int64_t> entries_;
};

std::string to_string(const RootVector& v);

struct SimpleRootLabel {
  int root = 0;  // j: the inequality a_{alpha_j} >= 0
  friend auto operator<=>(const SimpleRootLabel&, const SimpleRootLabel&) = default;
};

struct ChamberLabel {
  std::size_t left = 0;   // 0-based indices of the minimal pair
  std::size_t right = 0;
  friend auto operator<=>(const ChamberLabel&, const ChamberLabel&) = default;
};

/// Label of a row of P_i (and of the matching spanning vector).
using RowLabel = std::variant<SimpleRootLabel, ChamberLabel>;

std::string to_string(const RowLabel& label);

/// The k x k matrix P_i of defining inequalities, over position coordinates.
/// Rows: SimpleRoot(1..n) ascending, then chambers by ascending left index.
class ConeMatrix {
 public:
  ConeMatrix(ReducedWord word, std::vector<RowLabel> labels, Matrix<std::int64_t> rows);

  const ReducedWord& word() const noexcept { return word_; }
  const RootOrdering& ordering() const noexcept { return ordering_; }
  std::span<const RowLabel> labels() const noexcept { return labels_; }
  const Matrix<std::int64_t>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t row_of(const RowLabel& label) const;

  /// P_i * a, with `a` converted to position coordinates.
  std::vector<std::int64_t> evaluate(const RootVector& a) const;

 private:
  ReducedWord word_;
  RootOrdering ordering_;
  std::vector<RowLabel> labels_;
  Matrix<std::int64_t> rows_;
};

ConeMatrix cone_matrix(const ReducedWord& word);

/// Exact inverse of P_i without sign checks.
struct ExactInverse {
  BigInt determinant;
  std::vector<RowLabel> labels;
  std::vector<RootVector> columns;  // root-indexed; columns[r] belongs to labels[r]
  bool nonnegative = true;
};

/// Bareiss inversion over arbitrary-precision integers. Throws
/// InvariantViolation if P_i is singular or its inverse is not integral.
ExactInverse exact_inverse(const ConeMatrix& m);

/// Columns of Q_i = P_i^{-1}: the spanning vectors of C_i.
struct SpanningSet {
  std::vector<RowLabel> labels;
  std::vector<RootVector> vectors;

  const RootVector& vector_for(const RowLabel& label) const;
};

/// Inverts P_i and asserts det = +-1, nonnegative entries, P*Q = Q*P = I.
/// Any failure throws InvariantViolation.
SpanningSet invert_unimodular(const ConeMatrix& m);

struct Membership {
  bool member = false;
  std::vector<RowLabel> violated_rows;              // rows with (P a) < 0
  std::vector<PositiveRoot> negative_coordinates;   // roots with a < 0
};

/// Full definition: P_i a >= 0 and a >= 0 in every coordinate.
Membership membership(const ConeMatrix& m, const RootVector& a);
bool contains(const ReducedWord& word, const RootVector& a);
bool contains(const ConeMatrix& m, const RootVector& a);

/// Coefficients c = P_i a with a = sum_l c_l v_l. Throws NotInCone.
std::map<RowLabel, std::int64_t> decompose(const ConeMatrix& m, const RootVector& a);
std::map<RowLabel, std::int64_t> decompose(const ReducedWord& word, const RootVector& a);

/// a_{ik} >= a_{ij} + a_{jk} for all i < j < k.
bool superadditivity(const RootVector& a);
bool superadditivity(const ReducedWord& word, const RootVector& a);

/// Coefficients y over the chamber rows with sum_c y_c * row_c equal to the row
/// of a_{ik} - a_{ij} - a_{jk}, solved exactly as y = target * P_i^{-1}.
/// Returns nullopt if the target is not a combination of chamber rows alone.
std::optional<std::map<ChamberLabel, std::int64_t>> triangle_combination(const ConeMatrix& m,
                                                                          const SpanningSet& spanning, int i, int j,
                                                                          int k);

}  // namespace lusztig
