#pragma once

// H^0 = ker(tau) and H^1 = coker(tau) on E_n, bidegree by bidegree, together
// with the Lefschetz and Serre-duality matrices and S_n characters.
//
// Matrices are written in the m_{A,B} monomial basis of each bidegree, in the
// order of monomials_of_bidegree(): (A, B) lexicographic.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "supertorus/exterior.hpp"
#include "supertorus/linalg.hpp"

namespace supertorus {

/// Ordered, linearly independent homogeneous elements of one bidegree.
struct BidegreeBasis {
  int n = 0;
  Bidegree bidegree;
  std::vector<Element> vectors;

  std::size_t size() const { return vectors.size(); }
};

/// A partition of n, parts sorted descending.
struct CycleType {
  std::vector<int> parts;

  int n() const;
  /// Number of permutations with this cycle type.
  std::int64_t class_size() const;

  friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

/// Cycle types of S_n, ((n) first).
std::vector<CycleType> cycle_types(int n);

/// Coordinates of a homogeneous element in the m_{A,B} basis of bidegree d.
Vector monomial_coordinates(const Element& f, Bidegree d);
/// Inverse of monomial_coordinates.
Element from_monomial_coordinates(int n, Bidegree d, const Vector& coords);

/// Matrix of tau: (E_n)_{i,j} -> (E_n)_{i+1,j-1}. Zero rows when j = 0.
RationalMatrix tau_matrix(int n, Bidegree d);
/// Matrix of tau^power from bidegree d into d + power*(1,-1).
RationalMatrix tau_power_matrix(int n, Bidegree d, int power);

std::int64_t h0_dimension(int n, int i, int j);
std::int64_t h1_dimension(int n, int i, int j);

/// Kernel of tau on (E_n)_d in reduced echelon form over the m_{A,B} ordering.
BidegreeBasis h0_basis(int n, Bidegree d);
/// Greedy monomial representatives of (E_n)_d / tau((E_n)_{d + (-1,1)}),
/// scanning monomials in m_{A,B} order. Each is written alpha_A * theta_B, so
/// the top class is vol_n itself.
BidegreeBasis h1_coset_basis(int n, Bidegree d);

/// Matrix of multiplication by ell^(n-i-j), from h0_basis(n,(i,j)) to
/// h0_basis(n,(n-j,n-i)). Throws std::invalid_argument when i + j > n.
RationalMatrix lefschetz_matrix(int n, int i, int j);

/// Gram matrix <u, v>, u in h0_basis(n,(i,j)), v in h1_coset_basis(n,(n-i,n-j)).
RationalMatrix serre_gram(int n, int i, int j);

/// Character of wedge^i of the permutation representation at cycle type c:
/// the t^i coefficient of prod_l (1 - (-t)^l).
std::int64_t wedge_character(const CycleType& c, int i);

class ZeroModuleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// chi_i chi_j - chi_{i+1} chi_{j-1}. Throws ZeroModuleError when i < j.
std::int64_t h0_character(int n, int i, int j, const CycleType& c);

/// Trace of w on the span of `basis`, computed from coordinates of w.v.
/// nullopt when some w.v leaves the span.
std::optional<Rational> character_trace_oracle(const Permutation& w, const BidegreeBasis& basis);

struct DiagonalCensus {
  int n = 0;
  std::vector<std::int64_t> diagonal;  // dim H^0_{i,i}, i = 0..n
  std::int64_t diagonal_sum = 0;
  std::int64_t total = 0;  // dim H^0 over all bidegrees
};

/// From the closed forms.
DiagonalCensus diagonal_census(int n);
/// From kernel ranks of tau_matrix.
DiagonalCensus diagonal_census_brute_force(int n);

}  // namespace supertorus
