#include "supertorus/cohomology.hpp"

#include <map>
#include <numeric>

#include "supertorus/combinatorics.hpp"

namespace supertorus {

namespace {

bool in_range(int n, Bidegree d) {
  return d.alpha >= 0 && d.theta >= 0 && d.alpha <= n && d.theta <= n;
}

std::size_t bidegree_dimension(int n, Bidegree d) {
  if (!in_range(n, d)) return 0;
  return static_cast<std::size_t>(binomial(n, d.alpha) * binomial(n, d.theta));
}

std::size_t monomial_index(int n, Monomial m) {
  const auto [a, b] = m_indices(m);
  return subset_rank(a, n) * static_cast<std::size_t>(binomial(n, static_cast<int>(b.size()))) +
         subset_rank(b, n);
}

RationalMatrix basis_matrix(const BidegreeBasis& basis) {
  std::vector<Vector> columns;
  columns.reserve(basis.size());
  for (const auto& v : basis.vectors) columns.push_back(monomial_coordinates(v, basis.bidegree));
  return RationalMatrix::from_columns(columns, bidegree_dimension(basis.n, basis.bidegree));
}

}  // namespace

int CycleType::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::int64_t CycleType::class_size() const {
  std::map<int, int> multiplicity;
  for (int p : parts) ++multiplicity[p];
  std::int64_t centralizer = 1;
  for (const auto& [length, count] : multiplicity) {
    centralizer *= factorial(count);
    for (int k = 0; k < count; ++k) centralizer *= length;
  }
  return factorial(n()) / centralizer;
}

std::vector<CycleType> cycle_types(int n) {
  std::vector<CycleType> out;
  for (auto& p : partitions(n)) out.push_back(CycleType{std::move(p)});
  return out;
}

Vector monomial_coordinates(const Element& f, Bidegree d) {
  Vector out(bidegree_dimension(f.n(), d));
  for (const auto& [m, c] : f.terms()) {
    if (m.bidegree() != d) throw std::invalid_argument("element is not homogeneous of the bidegree");
    out[monomial_index(f.n(), m)] = c;
  }
  return out;
}

Element from_monomial_coordinates(int n, Bidegree d, const Vector& coords) {
  const auto monomials = monomials_of_bidegree(n, d);
  if (coords.size() != monomials.size()) throw std::invalid_argument("coordinate length mismatch");
  Element out(n);
  for (std::size_t k = 0; k < coords.size(); ++k) out.add_term(monomials[k], coords[k]);
  return out;
}

RationalMatrix tau_power_matrix(int n, Bidegree d, int power) {
  const Bidegree target{d.alpha + power, d.theta - power};
  const auto sources = monomials_of_bidegree(n, d);
  RationalMatrix out(bidegree_dimension(n, target), sources.size());
  if (out.rows() == 0) return out;
  for (std::size_t col = 0; col < sources.size(); ++col) {
    Element image(n, sources[col]);
    for (int k = 0; k < power; ++k) image = tau(image);
    for (const auto& [m, c] : image.terms()) out(monomial_index(n, m), col) = c;
  }
  return out;
}

RationalMatrix tau_matrix(int n, Bidegree d) { return tau_power_matrix(n, d, 1); }

std::int64_t h0_dimension(int n, int i, int j) {
  if (i < 0 || j < 0 || i > n || j > n || i < j) return 0;
  return binomial(n, i) * binomial(n, j) - binomial(n, i + 1) * binomial(n, j - 1);
}

std::int64_t h1_dimension(int n, int i, int j) {
  if (i < 0 || j < 0 || i > n || j > n || i > j) return 0;
  return binomial(n, i) * binomial(n, j) - binomial(n, i - 1) * binomial(n, j + 1);
}

BidegreeBasis h0_basis(int n, Bidegree d) {
  BidegreeBasis out{n, d, {}};
  if (!in_range(n, d)) return out;
  for (const auto& v : kernel_basis(tau_matrix(n, d))) {
    out.vectors.push_back(from_monomial_coordinates(n, d, v));
  }
  return out;
}

BidegreeBasis h1_coset_basis(int n, Bidegree d) {
  BidegreeBasis out{n, d, {}};
  if (!in_range(n, d)) return out;
  const std::size_t dim = bidegree_dimension(n, d);
  IncrementalSpan span(dim);
  const Bidegree preimage{d.alpha - 1, d.theta + 1};
  if (in_range(n, preimage)) {
    const RationalMatrix image = tau_matrix(n, preimage);
    for (std::size_t c = 0; c < image.cols(); ++c) span.insert(image.column(c));
  }
  const auto monomials = monomials_of_bidegree(n, d);
  for (std::size_t k = 0; k < dim && span.rank() < dim; ++k) {
    Vector unit(dim);
    unit[k] = 1;
    if (!span.insert(std::move(unit))) continue;
    const auto [a, b] = m_indices(monomials[k]);
    out.vectors.push_back(Element(n, m_basis(a, {}, n)) * Element(n, m_basis({}, b, n)));
  }
  return out;
}

RationalMatrix lefschetz_matrix(int n, int i, int j) {
  if (i < 0 || j < 0 || i + j > n) {
    throw std::invalid_argument("lefschetz_matrix requires i, j >= 0 and i + j <= n");
  }
  const BidegreeBasis source = h0_basis(n, {i, j});
  const BidegreeBasis target = h0_basis(n, {n - j, n - i});
  const Element ell_power = power(lefschetz_element(n), n - i - j);
  const ColumnSpace target_space(basis_matrix(target));
  RationalMatrix out(target.size(), source.size());
  for (std::size_t col = 0; col < source.size(); ++col) {
    const Element image = ell_power * source.vectors[col];
    const auto coords = target_space.coordinates(monomial_coordinates(image, target.bidegree));
    if (!coords) throw std::logic_error("ell-power image left the invariant subspace");
    for (std::size_t row = 0; row < target.size(); ++row) out(row, col) = (*coords)[row];
  }
  return out;
}

RationalMatrix serre_gram(int n, int i, int j) {
  const BidegreeBasis kernel = h0_basis(n, {i, j});
  const BidegreeBasis cosets = h1_coset_basis(n, {n - i, n - j});
  RationalMatrix out(kernel.size(), cosets.size());
  for (std::size_t r = 0; r < kernel.size(); ++r) {
    for (std::size_t c = 0; c < cosets.size(); ++c) {
      out(r, c) = pairing(kernel.vectors[r], cosets.vectors[c]);
    }
  }
  return out;
}

std::int64_t wedge_character(const CycleType& c, int i) {
  // Coefficients of prod (1 - (-t)^l), lowest degree first.
  std::vector<std::int64_t> poly{1};
  for (int length : c.parts) {
    std::vector<std::int64_t> next(poly.size() + static_cast<std::size_t>(length), 0);
    const std::int64_t top = length % 2 == 0 ? -1 : 1;  // -(-1)^l
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k] += poly[k];
      next[k + static_cast<std::size_t>(length)] += top * poly[k];
    }
    poly = std::move(next);
  }
  if (i < 0 || static_cast<std::size_t>(i) >= poly.size()) return 0;
  return poly[static_cast<std::size_t>(i)];
}

std::int64_t h0_character(int n, int i, int j, const CycleType& c) {
  if (c.n() != n) throw std::invalid_argument("cycle type is not a partition of n");
  if (i < j) {
    throw ZeroModuleError("H^0_{" + std::to_string(i) + "," + std::to_string(j) +
                          "} is zero: the module vanishes unless i >= j");
  }
  return wedge_character(c, i) * wedge_character(c, j) -
         wedge_character(c, i + 1) * wedge_character(c, j - 1);
}

std::optional<Rational> character_trace_oracle(const Permutation& w, const BidegreeBasis& basis) {
  const ColumnSpace space(basis_matrix(basis));
  Rational trace = 0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Element image = permute(w, basis.vectors[k]);
    const auto coords = space.coordinates(monomial_coordinates(image, basis.bidegree));
    if (!coords) return std::nullopt;
    trace += (*coords)[k];
  }
  return trace;
}

DiagonalCensus diagonal_census(int n) {
  DiagonalCensus out;
  out.n = n;
  for (int i = 0; i <= n; ++i) {
    out.diagonal.push_back(h0_dimension(n, i, i));
    out.diagonal_sum += out.diagonal.back();
    for (int j = 0; j <= n; ++j) out.total += h0_dimension(n, i, j);
  }
  return out;
}

DiagonalCensus diagonal_census_brute_force(int n) {
  DiagonalCensus out;
  out.n = n;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const RationalMatrix t = tau_matrix(n, {i, j});
      const auto dim = static_cast<std::int64_t>(t.cols() - rank(t));
      out.total += dim;
      if (i == j) {
        out.diagonal.push_back(dim);
        out.diagonal_sum += dim;
      }
    }
  }
  return out;
}

}  // namespace supertorus
