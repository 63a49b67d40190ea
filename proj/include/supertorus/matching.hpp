#pragma once

// Labelled matchings on n points, the products F_m of basic invariants they
// index, the two skein relations, and reduction to the noncrossing basis NC(n).

#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "supertorus/exterior.hpp"

namespace supertorus {

struct Arc {
  int left = 0;
  int right = 0;

  friend constexpr auto operator<=>(const Arc&, const Arc&) = default;
};

class InvalidMatching : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Points 1..n on a line; disjoint arcs; unmatched points labelled alpha,
/// alpha-theta, or left unlabelled. Stored sorted, so equality is structural.
class LabelledMatching {
 public:
  LabelledMatching() = default;
  /// Throws InvalidMatching when arcs overlap, labels collide, or a point is
  /// outside 1..n.
  LabelledMatching(int n, std::vector<Arc> arcs, std::vector<int> alpha = {},
                   std::vector<int> alphatheta = {});

  int n() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<int>& alpha() const { return alpha_; }
  const std::vector<int>& alphatheta() const { return alphatheta_; }

  /// Total degree of F_m: #alpha + 2 #alphatheta + 2 #arcs.
  int degree() const;
  Bidegree bidegree() const;

  friend auto operator<=>(const LabelledMatching&, const LabelledMatching&) = default;

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<int> alpha_;
  std::vector<int> alphatheta_;
};

/// Finite rational combination of matchings of one size; zero terms are dropped.
class MatchingCombination {
 public:
  using Terms = std::map<LabelledMatching, Rational>;

  MatchingCombination() = default;
  MatchingCombination(const LabelledMatching& m, Rational c);

  void add(const LabelledMatching& m, const Rational& c);
  void add_scaled(const MatchingCombination& other, const Rational& c);

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const LabelledMatching& m) const;

  friend bool operator==(const MatchingCombination&, const MatchingCombination&) = default;

 private:
  Terms terms_;
};

/// Product of alpha_i (alpha labels, increasing), alpha_i theta_i (alpha-theta
/// labels) and alpha_i theta_j + alpha_j theta_i (arcs).
Element f_of_matching(const LabelledMatching& m);
Element expand(const MatchingCombination& c, int n);

/// Quadruples i<j<k<l with arcs (i,k) and (j,l).
int crossings(const LabelledMatching& m);
/// Triples i<j<k with arc (i,k) and an alpha label at j.
int alpha_nestings(const LabelledMatching& m);
bool in_nc(const LabelledMatching& m);

class SkeinPatternError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Crossing {
  int i = 0;
  int j = 0;
  int k = 0;
  int l = 0;

  friend constexpr auto operator<=>(const Crossing&, const Crossing&) = default;
};
/// All crossing quadruples, lexicographically sorted.
std::vector<Crossing> crossing_quadruples(const LabelledMatching& m);

/// F_m for m with arcs (i,k), (j,l) rewritten as -F_{m0} - F_{m1}, where m0
/// has arcs (i,j), (k,l) and m1 has arcs (i,l), (j,k).
MatchingCombination skein_uncross(const LabelledMatching& m, const Crossing& q);

/// F_m for an alpha label at j under arc (i,k) rewritten over m0 (arc (i,j),
/// alpha at k) and m1 (arc (j,k), alpha at i). Each coefficient is -1 times
/// (-1)^(number of other alpha labels the moved label passes over), so a lone
/// alpha gives -F_{m0} - F_{m1}.
MatchingCombination skein_move_alpha(const LabelledMatching& m, const Arc& arc, int vertex);

/// Rewrites with skein_uncross (smallest crossing first) until noncrossing,
/// then skein_move_alpha (leftmost nested alpha, shortest enclosing arc).
/// Results are memoised per reducer.
class SkeinReducer {
 public:
  const MatchingCombination& reduce(const LabelledMatching& m);
  std::size_t memo_size() const { return memo_.size(); }

 private:
  std::map<LabelledMatching, MatchingCombination> memo_;
};

/// Combination supported on NC(n) with the same expansion as F_m.
MatchingCombination normal_form(const LabelledMatching& m);

/// All of Phi(n), sorted.
std::vector<LabelledMatching> enumerate_phi(int n);
/// NC(n,k), sorted; NC(n) when k is omitted.
std::vector<LabelledMatching> enumerate_nc(int n, int k);
std::vector<LabelledMatching> enumerate_nc(int n);

LabelledMatching random_matching(int n, std::mt19937_64& rng);

struct SubsetPair {
  IndexSet a;
  IndexSet b;

  friend auto operator<=>(const SubsetPair&, const SubsetPair&) = default;
};

/// The unique m in NC(n,k) with alpha-theta set A&B, unlabelled set
/// complement(A|B), left endpoints in A, right endpoints in B, and every
/// unmatched point of B left of every unmatched point of A. Requires
/// |A| = floor(k/2), |B| = ceil(k/2).
LabelledMatching matching_from_subsets(const SubsetPair& p, int n, int k);
/// Inverse of matching_from_subsets. Throws std::invalid_argument outside NC(n).
SubsetPair subsets_from_matching(const LabelledMatching& m);

struct PresentationReport {
  std::size_t identities_checked = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks the quadratic relations among basic invariants for all index pairs
/// i != j <= n, and both skein relations on every applicable pattern of
/// Phi(min(n, skein_rank_cap)).
PresentationReport verify_presentation(int n, int skein_rank_cap = 5);

/// "n=8; arcs=(4,6),(5,7); a=1; at=2". Sections other than n are optional.
/// Throws ParseError (syntax) or InvalidMatching (semantics).
LabelledMatching parse_matching(std::string_view text);
std::string to_string(const LabelledMatching& m);
std::string to_string(const SubsetPair& p);

}  // namespace supertorus
