#pragma once

// Exact arithmetic in the exterior algebra E_n on generators
// alpha_1..alpha_n, theta_1..theta_n.
//
// Monomials are 2n-bit masks in the canonical generator order
//   alpha_1 < theta_1 < alpha_2 < theta_2 < ... < alpha_n < theta_n,
// i.e. alpha_i lives at bit 2(i-1) and theta_i at bit 2(i-1)+1. Every sign in
// this module is an inversion count against that order.

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "supertorus/rational.hpp"

namespace supertorus {

/// Largest rank representable by a 32-bit monomial mask.
inline constexpr int kMaxRepresentableRank = 16;

/// Runtime rank guard (default 14). Element construction above the limit throws
/// RankError.
int rank_limit();
void set_rank_limit(int limit);

class RankError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class GeneratorKind : std::uint8_t { alpha, theta };

struct Generator {
  GeneratorKind kind = GeneratorKind::alpha;
  int index = 1;  // 1-based

  constexpr int bit() const {
    return 2 * (index - 1) + (kind == GeneratorKind::theta ? 1 : 0);
  }
  static constexpr Generator from_bit(int bit) {
    return {bit % 2 == 0 ? GeneratorKind::alpha : GeneratorKind::theta, bit / 2 + 1};
  }

  friend constexpr bool operator==(const Generator&, const Generator&) = default;
};

constexpr Generator alpha(int i) { return {GeneratorKind::alpha, i}; }
constexpr Generator theta(int i) { return {GeneratorKind::theta, i}; }

struct Bidegree {
  int alpha = 0;
  int theta = 0;

  friend constexpr auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

/// A set of generators, stored as a canonical bit mask.
class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr explicit Monomial(std::uint32_t bits) : bits_(bits) {}

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int degree() const { return std::popcount(bits_); }
  constexpr int alpha_degree() const { return std::popcount(bits_ & kAlphaBits); }
  constexpr int theta_degree() const { return std::popcount(bits_ & ~kAlphaBits); }
  constexpr Bidegree bidegree() const { return {alpha_degree(), theta_degree()}; }
  constexpr bool contains(Generator g) const { return (bits_ >> g.bit()) & 1U; }
  /// Highest index touched, 0 for the empty monomial.
  constexpr int min_rank() const { return bits_ == 0 ? 0 : (std::bit_width(bits_) + 1) / 2; }

  std::vector<Generator> generators() const;

  friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;

  static constexpr std::uint32_t kAlphaBits = 0x55555555U;

 private:
  std::uint32_t bits_ = 0;
};

/// Product of two monomials in canonical form: the sign is +1/-1, or 0 when the
/// generator sets intersect.
struct MonomialProduct {
  int sign = 0;
  Monomial monomial;
};
MonomialProduct multiply(Monomial lhs, Monomial rhs);

/// An element of E_n: a finitely supported map monomial -> nonzero rational.
class Element {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit Element(int n);
  Element(int n, Monomial m, Rational coeff = 1);

  static Element zero(int n) { return Element(n); }
  static Element one(int n) { return Element(n, Monomial{}); }
  static Element scalar(int n, Rational c) { return Element(n, Monomial{}, std::move(c)); }
  static Element generator(int n, Generator g);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(Monomial m) const;

  /// Adds c * m, dropping the entry if it cancels.
  void add_term(Monomial m, const Rational& c);

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Rational& c);

  friend bool operator==(const Element&, const Element&) = default;

 private:
  int n_ = 0;
  Terms terms_;
};

Element operator+(Element lhs, const Element& rhs);
Element operator-(Element lhs, const Element& rhs);
Element operator-(Element f);
Element operator*(Element f, const Rational& c);
Element operator*(const Rational& c, Element f);
/// Exterior product. Throws std::invalid_argument on mismatched rank.
Element operator*(const Element& f, const Element& g);

Element mul(const Element& f, const Element& g);
Element power(const Element& f, int exponent);

/// Left derivative d/dg: on a monomial with g at canonical position s (1-based)
/// returns (-1)^(s-1) times the monomial with g removed.
Element partial(const Element& f, Generator g);

/// tau(f) = sum_i alpha_i * d/dtheta_i f, bidegree (+1, -1).
Element tau(const Element& f);
/// sigma(f) = sum_i theta_i * d/dalpha_i f, bidegree (-1, +1).
Element sigma(const Element& f);
/// Multiplies the (i,j) component by i - j.
Element eta(const Element& f);

/// The algebra map theta_i -> theta_i + alpha_i, alpha_i -> alpha_i.
Element translate(const Element& f);
/// id + tau + tau^2/2! + ... (terminates since tau^(n+1) = 0).
Element exp_tau(const Element& f);

/// alpha_1 theta_1 + ... + alpha_n theta_n.
Element lefschetz_element(int n);
/// alpha_1 ... alpha_n theta_1 ... theta_n, with that sign.
Element volume_form(int n);

/// Sorted list of indices in 1..n.
using IndexSet = std::vector<int>;

/// m_{A,B}: alpha_a (a in A) and theta_b (b in B) in canonical order.
Monomial m_basis(const IndexSet& a, const IndexSet& b, int n);
/// The index sets (A, B) of a monomial (inverse of m_basis).
std::pair<IndexSet, IndexSet> m_indices(Monomial m);

/// m'_{A,B} = prod_{c in A&B} alpha_c theta_c * prod_{A-B} alpha_a * prod_{B-A} theta_b,
/// each product increasing, folded into canonical form.
Element m_prime_basis(const IndexSet& a, const IndexSet& b, int n);
/// Sign s with m'_{A,B} = s * m_{A,B}.
int m_prime_sign(const IndexSet& a, const IndexSet& b, int n);
/// Expands f in the m' basis: (A, B) -> coefficient.
std::map<std::pair<IndexSet, IndexSet>, Rational> m_prime_coordinates(const Element& f);

/// A bijection on 1..n, stored as its images.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  /// Permutation of 1..n given by disjoint cycles, e.g. {{1,2}} for (1 2).
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }
  /// Cycle lengths, sorted descending.
  std::vector<int> cycle_type() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// All n! permutations in lexicographic order of image sequences.
std::vector<Permutation> all_permutations(int n);

/// w . alpha_i = alpha_{w(i)}, w . theta_i = theta_{w(i)}, extended as an algebra map.
Element permute(const Permutation& w, const Element& f);

/// Coefficient of vol_n in f * g.
Rational pairing(const Element& f, const Element& g);

/// Projection onto (E_n)_{i,j}; zero for bidegrees outside 0..n.
Element bidegree_component(const Element& f, Bidegree d);

/// All monomials of bidegree d, ordered by (A, B) with each index set in
/// lexicographic order.
std::vector<Monomial> monomials_of_bidegree(int n, Bidegree d);
/// All 4^n monomials of E_n in mask order.
std::vector<Monomial> all_monomials(int n);

/// Element literal, e.g. "1*a1 t2 - 1*a2 t1" or "-1/2*t1 t2 + 3". Generator
/// order in each term is respected and canonicalised with sign.
Element parse_element(std::string_view text, int n);
std::string to_string(const Element& f);
std::string to_string(Monomial m);

}  // namespace supertorus
