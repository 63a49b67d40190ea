#include "supertorus/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "supertorus/combinatorics.hpp"

namespace supertorus {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) out(k, k) = 1;
  return out;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<Vector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix out(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged rows");
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = rows[r][c];
  }
  return out;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  RationalMatrix out(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) out(r, c) = columns[c][r];
  }
  return out;
}

Vector RationalMatrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector RationalMatrix::column(std::size_t c) const {
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

RationalMatrix RationalMatrix::submatrix(const std::vector<std::size_t>& rows,
                                         const std::vector<std::size_t>& cols) const {
  RationalMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = (*this)(rows[r], cols[c]);
  }
  return out;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q == 0; });
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k) == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += a(r, k) * b(k, c);
    }
  }
  return out;
}

RationalMatrix operator*(const Rational& c, RationalMatrix m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) *= c;
  }
  return m;
}

Vector operator*(const RationalMatrix& m, const Vector& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  Vector out(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (v[c] == 0) continue;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (m(r, c) != 0) out[r] += m(r, c) * v[c];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

using IntegerRow = std::vector<Integer>;

// Scales every row by the lcm of its denominators.
std::vector<IntegerRow> integer_rows(const RationalMatrix& m) {
  std::vector<IntegerRow> out(m.rows(), IntegerRow(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer scale = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m(r, c);
      if (q == 0) continue;
      Integer factor = scale / q.get_den();
      out[r][c] = q.get_num() * factor;
    }
  }
  return out;
}

// Fraction-free forward elimination in place. Returns the pivot columns; rows
// [0, rank) are the pivot rows and rows past the rank vanish on the first
// `pivot_columns` columns.
std::vector<std::size_t> bareiss(std::vector<IntegerRow>& u, std::size_t pivot_columns) {
  const std::size_t rows = u.size();
  const std::size_t cols = rows == 0 ? 0 : u.front().size();
  std::vector<std::size_t> pivots;
  Integer previous = 1;
  Integer scratch;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_columns && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && u[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) std::swap(u[p], u[r]);
    const Integer& pivot = u[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      IntegerRow& row = u[i];
      const bool eliminate = row[c] != 0;
      for (std::size_t j = c + 1; j < cols; ++j) {
        // row[j] = (pivot * row[j] - row[c] * u[r][j]) / previous, exactly.
        if (eliminate && u[r][j] != 0) {
          mpz_mul(row[j].get_mpz_t(), row[j].get_mpz_t(), pivot.get_mpz_t());
          mpz_mul(scratch.get_mpz_t(), row[c].get_mpz_t(), u[r][j].get_mpz_t());
          mpz_sub(row[j].get_mpz_t(), row[j].get_mpz_t(), scratch.get_mpz_t());
        } else if (row[j] != 0) {
          mpz_mul(row[j].get_mpz_t(), row[j].get_mpz_t(), pivot.get_mpz_t());
        } else {
          continue;
        }
        mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), previous.get_mpz_t());
      }
      row[c] = 0;
    }
    previous = pivot;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Rank over Z/p for p = 2^61 - 1. Never exceeds the rank over Q, so a full
// result certifies full rank.
std::size_t rank_mod_prime(const std::vector<IntegerRow>& u) {
  constexpr std::uint64_t p = (std::uint64_t{1} << 61) - 1;
  auto mulmod = [](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e != 0; e >>= 1, a = mulmod(a, a)) {
      if (e & 1U) r = mulmod(r, a);
    }
    return r;
  };
  const std::size_t rows = u.size();
  const std::size_t cols = rows == 0 ? 0 : u.front().size();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = mpz_fdiv_ui(u[r][c].get_mpz_t(), p);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const std::uint64_t inv = powmod(a[rank][c], p - 2);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      const std::uint64_t factor = mulmod(a[r][c], inv);
      for (std::size_t j = c; j < cols; ++j) {
        if (a[rank][j] == 0) continue;
        a[r][j] = (a[r][j] + p - mulmod(factor, a[rank][j])) % p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

RowEchelon reduced_row_echelon(const RationalMatrix& m) { return reduced_row_echelon(m, m.cols()); }

RowEchelon reduced_row_echelon(const RationalMatrix& m, std::size_t pivot_columns) {
  if (pivot_columns > m.cols()) throw std::invalid_argument("pivot column limit exceeds width");
  auto u = integer_rows(m);
  RowEchelon out;
  out.pivots = bareiss(u, pivot_columns);

  RationalMatrix& reduced = out.reduced;
  reduced = RationalMatrix(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (u[r][c] != 0) reduced(r, c) = Rational(u[r][c]);
    }
  }
  // Normalise pivots to 1 and clear above them, last pivot first.
  for (std::size_t k = out.pivots.size(); k-- > 0;) {
    const std::size_t pc = out.pivots[k];
    const Rational pivot = reduced(k, pc);
    for (std::size_t c = pc; c < m.cols(); ++c) {
      if (reduced(k, c) != 0) reduced(k, c) /= pivot;
    }
    for (std::size_t t = 0; t < k; ++t) {
      const Rational factor = reduced(t, pc);
      if (factor == 0) continue;
      for (std::size_t c = pc; c < m.cols(); ++c) {
        if (reduced(k, c) != 0) reduced(t, c) -= factor * reduced(k, c);
      }
    }
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  auto u = integer_rows(m);
  const std::size_t full = std::min(m.rows(), m.cols());
  if (full > 0 && rank_mod_prime(u) == full) return full;
  return bareiss(u, m.cols()).size();
}

std::vector<Vector> kernel_basis(const RationalMatrix& m) {
  const RowEchelon rref = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t pc : rref.pivots) is_pivot[pc] = true;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector x(m.cols());
    x[f] = 1;
    for (std::size_t k = 0; k < rref.pivots.size(); ++k) x[rref.pivots[k]] = -rref.reduced(k, f);
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<Vector> coordinates(const RationalMatrix& m, const Vector& v) {
  return ColumnSpace(m).coordinates(v);
}

bool is_invertible(const RationalMatrix& m) {
  if (!m.square()) throw std::invalid_argument("invertibility of a non-square matrix");
  return rank(m) == m.rows();
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix augmented(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = m(r, c);
    augmented(r, n + r) = 1;
  }
  const RowEchelon rref = reduced_row_echelon(augmented, n);
  if (rref.rank() != n) throw std::invalid_argument("inverse of a singular matrix");
  RationalMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = rref.reduced(r, n + c);
  }
  return out;
}

// ---------------------------------------------------------------------------

ColumnSpace::ColumnSpace(const RationalMatrix& m) : cols_(m.cols()) {
  const std::size_t rows = m.rows();
  RationalMatrix augmented(rows, m.cols() + rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) augmented(r, c) = m(r, c);
    augmented(r, m.cols() + r) = 1;
  }
  RowEchelon rref = reduced_row_echelon(augmented, m.cols());
  pivots_ = std::move(rref.pivots);
  transform_ = RationalMatrix(rows, rows);
  reduced_ = RationalMatrix(rows, m.cols());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) reduced_(r, c) = rref.reduced(r, c);
    for (std::size_t c = 0; c < rows; ++c) transform_(r, c) = rref.reduced(r, m.cols() + c);
  }
}

std::optional<Vector> ColumnSpace::coordinates(const Vector& v) const {
  if (v.size() != transform_.rows()) throw std::invalid_argument("vector length mismatch");
  const Vector w = transform_ * v;
  for (std::size_t r = pivots_.size(); r < w.size(); ++r) {
    if (w[r] != 0) return std::nullopt;
  }
  Vector x(cols_);
  for (std::size_t k = 0; k < pivots_.size(); ++k) x[pivots_[k]] = w[k];
  return x;
}

void IncrementalSpan::reduce(Vector& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational factor = v[pivots_[k]];
    if (factor == 0) continue;
    const Vector& row = rows_[k];
    for (std::size_t c = 0; c < dimension_; ++c) {
      if (row[c] != 0) v[c] -= factor * row[c];
    }
  }
}

bool IncrementalSpan::insert(Vector v) {
  if (v.size() != dimension_) throw std::invalid_argument("vector length mismatch");
  reduce(v);
  const auto it = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
  if (it == v.end()) return false;
  const std::size_t pivot = static_cast<std::size_t>(it - v.begin());
  const Rational scale = v[pivot];
  for (auto& q : v) {
    if (q != 0) q /= scale;
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool IncrementalSpan::contains(Vector v) const {
  if (v.size() != dimension_) throw std::invalid_argument("vector length mismatch");
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

RationalMatrix boolean_incidence(int n, int i, int j) {
  if (i < 0 || i > j || j > n) {
    throw std::invalid_argument("boolean_incidence requires 0 <= i <= j <= n");
  }
  const auto row_sets = subsets_lex(n, i);
  const auto col_sets = subsets_lex(n, j);
  RationalMatrix out(row_sets.size(), col_sets.size());
  for (std::size_t r = 0; r < row_sets.size(); ++r) {
    const std::uint32_t s = subset_mask(row_sets[r]);
    for (std::size_t c = 0; c < col_sets.size(); ++c) {
      if ((s & ~subset_mask(col_sets[c])) == 0) out(r, c) = 1;
    }
  }
  return out;
}

std::string to_csv(const RationalMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) os << ',';
      os << to_string(m(r, c));
    }
    os << '\n';
  }
  return os.str();
}

RationalMatrix from_csv(std::string_view text) {
  std::vector<Vector> rows;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    Vector row;
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      const auto first = field.find_first_not_of(" \t");
      const auto last = field.find_last_not_of(" \t");
      if (first == std::string::npos) throw std::invalid_argument("empty CSV field");
      row.push_back(parse_rational(std::string_view(field).substr(first, last - first + 1)));
    }
    rows.push_back(std::move(row));
  }
  return RationalMatrix::from_rows(rows);
}

}  // namespace supertorus
