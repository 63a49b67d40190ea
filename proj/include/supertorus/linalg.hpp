#pragma once

// Dense exact-rational linear algebra. Eliminations are fraction-free
// (Bareiss) over integer-scaled rows, normalised to rationals at the end.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "supertorus/rational.hpp"

namespace supertorus {

using Vector = std::vector<Rational>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  /// Throws std::invalid_argument on ragged input.
  static RationalMatrix from_rows(const std::vector<Vector>& rows);
  static RationalMatrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  RationalMatrix transpose() const;
  RationalMatrix submatrix(const std::vector<std::size_t>& rows,
                           const std::vector<std::size_t>& cols) const;
  bool is_zero() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& c, RationalMatrix m);
Vector operator*(const RationalMatrix& m, const Vector& v);

/// Reduced row echelon form. Pivots are only chosen among the first
/// `pivot_columns` columns (all columns by default); the remaining columns are
/// carried along, which is how transformation matrices are recorded.
struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of row k, k < rank
  std::size_t rank() const { return pivots.size(); }
};
RowEchelon reduced_row_echelon(const RationalMatrix& m);
RowEchelon reduced_row_echelon(const RationalMatrix& m, std::size_t pivot_columns);

std::size_t rank(const RationalMatrix& m);

/// Basis of the right null space, one vector per free column (free entry 1,
/// other free entries 0), ordered by free column.
std::vector<Vector> kernel_basis(const RationalMatrix& m);

/// x with m x = v, free coordinates set to 0; nullopt when v is outside the
/// column span.
std::optional<Vector> coordinates(const RationalMatrix& m, const Vector& v);

/// Throws std::invalid_argument when m is not square.
bool is_invertible(const RationalMatrix& m);
/// Throws std::invalid_argument when m is not square or singular.
RationalMatrix inverse(const RationalMatrix& m);

/// Column span of a fixed matrix, factored once for repeated coordinate
/// queries. Queries are cheap for sparse right-hand sides.
class ColumnSpace {
 public:
  explicit ColumnSpace(const RationalMatrix& m);

  std::size_t rank() const { return pivots_.size(); }
  std::size_t ambient_dimension() const { return transform_.rows(); }
  std::optional<Vector> coordinates(const Vector& v) const;

 private:
  std::size_t cols_ = 0;
  RationalMatrix transform_;          // E with E m = rref(m)
  RationalMatrix reduced_;            // rref(m)
  std::vector<std::size_t> pivots_;
};

/// Growing set of independent vectors; insert() reports whether the span grew.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(std::size_t dimension) : dimension_(dimension) {}

  bool insert(Vector v);
  bool contains(Vector v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(Vector& v) const;

  std::size_t dimension_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// M_n(i,j): rows are the i-subsets of {1..n}, columns the j-subsets, both in
/// lexicographic order; entry 1 iff row subset is contained in column subset.
RationalMatrix boolean_incidence(int n, int i, int j);

/// One row per line, entries as "p/q" (or "p"), comma separated.
std::string to_csv(const RationalMatrix& m);
RationalMatrix from_csv(std::string_view text);

}  // namespace supertorus
