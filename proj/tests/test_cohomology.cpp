#include <doctest.h>

#include "oracle.hpp"
#include "supertorus/cohomology.hpp"
#include "supertorus/combinatorics.hpp"
#include "supertorus/verify.hpp"

using namespace supertorus;

namespace {

Element lit(const char* text, int n) { return parse_element(text, n); }

std::size_t span_rank(const std::vector<Element>& v, Bidegree d, int n) {
  std::vector<Vector> cols;
  for (const auto& e : v) cols.push_back(monomial_coordinates(e, d));
  return oracle::gauss_rank(RationalMatrix::from_columns(cols, monomials_of_bidegree(n, d).size()));
}

}  // namespace

TEST_CASE("tau matrices") {
  CHECK(tau_matrix(1, {0, 1}) == RationalMatrix::from_rows({{1}}));
  const RationalMatrix t = tau_matrix(2, {1, 1});
  CHECK(t.rows() == 1);
  CHECK(t.cols() == 4);
  // Column m_{A,B} has |B - A| ones.
  const auto sources = monomials_of_bidegree(3, {1, 2});
  const RationalMatrix t3 = tau_matrix(3, {1, 2});
  for (std::size_t c = 0; c < sources.size(); ++c) {
    const auto [a, b] = m_indices(sources[c]);
    int expected = 0;
    for (int v : b) expected += std::find(a.begin(), a.end(), v) == a.end() ? 1 : 0;
    Rational ones = 0;
    for (std::size_t r = 0; r < t3.rows(); ++r) {
      CHECK((t3(r, c) == 0 || t3(r, c) == 1));
      ones += t3(r, c);
    }
    CHECK(ones == expected);
  }
  CHECK(tau_matrix(3, {2, 0}).rows() == 0);
  CHECK(tau_power_matrix(3, {0, 2}, 2).rows() == 3);
}

TEST_CASE("H0 and H1 dimensions") {
  for (int n = 0; n <= 5; ++n) CHECK(h0_dimension(n, 0, 0) == 1);
  CHECK(h0_dimension(3, 1, 1) == 6);
  CHECK(h0_dimension(2, 0, 1) == 0);
  CHECK(h1_dimension(4, 4, 4) == 1);
  CHECK(h1_dimension(3, 1, 1) == 6);
  CHECK(h1_dimension(3, 2, 1) == 0);
  CHECK(verify::dimension_tables(0, 5).passed);
  CHECK(verify::tau_injective_surjective(5).passed);
  CHECK(verify::complementary_tau_power_bijective(5).passed);
}

TEST_CASE("H0 bases") {
  const BidegreeBasis b11 = h0_basis(1, {1, 1});
  REQUIRE(b11.size() == 1);
  CHECK(b11.vectors[0] == lit("a1 t1", 1));

  const BidegreeBasis b2 = h0_basis(2, {1, 1});
  REQUIRE(b2.size() == 3);
  std::vector<Element> both = b2.vectors;
  for (const char* text : {"a1 t1", "a2 t2", "a1 t2 + a2 t1"}) both.push_back(lit(text, 2));
  CHECK(span_rank(both, {1, 1}, 2) == 3);

  CHECK(h0_basis(2, {0, 1}).size() == 0);
  CHECK(verify::h0_basis_translation_invariant(4).passed);
}

TEST_CASE("H1 coset representatives") {
  for (int n = 1; n <= 3; ++n) {
    const BidegreeBasis top = h1_coset_basis(n, {n, n});
    REQUIRE(top.size() == 1);
    CHECK(top.vectors[0] == volume_form(n));
  }
  const BidegreeBasis b = h1_coset_basis(1, {0, 1});
  REQUIRE(b.size() == 1);
  CHECK(b.vectors[0] == lit("t1", 1));
  CHECK(h1_coset_basis(1, {1, 0}).size() == 0);
  for (int n = 0; n <= 4; ++n) {
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) CHECK(static_cast<std::int64_t>(h1_coset_basis(n, {i, j}).size()) == h1_dimension(n, i, j));
    }
  }
}

TEST_CASE("Lefschetz matrices") {
  CHECK(lefschetz_matrix(2, 1, 1) == RationalMatrix::identity(3));
  const RationalMatrix l = lefschetz_matrix(1, 0, 0);
  CHECK(l.rows() == 1);
  CHECK(l(0, 0) != 0);
  const RationalMatrix l4 = lefschetz_matrix(4, 1, 1);
  CHECK(l4.rows() == 10);
  CHECK(h0_dimension(4, 1, 1) == 10);
  CHECK(is_invertible(l4));
  CHECK_THROWS_AS(lefschetz_matrix(3, 2, 2), std::invalid_argument);
  CHECK(verify::lefschetz_invertible(1, 4).passed);
}

TEST_CASE("Serre pairing") {
  for (int n = 0; n <= 3; ++n) CHECK(serre_gram(n, 0, 0) == RationalMatrix::from_rows({{1}}));
  CHECK(serre_gram(1, 1, 1) == RationalMatrix::from_rows({{1}}));
  const RationalMatrix g = serre_gram(3, 1, 1);
  CHECK(g.rows() == 6);
  CHECK(is_invertible(g));
  CHECK(verify::serre_duality(1, 4, 50, 13).passed);
}

TEST_CASE("characters") {
  CHECK(cycle_types(3).size() == 3);
  for (int n = 1; n <= 5; ++n) {
    const CycleType identity{std::vector<int>(static_cast<std::size_t>(n), 1)};
    for (int i = 0; i <= n; ++i) CHECK(wedge_character(identity, i) == binomial(n, i));
    CHECK(wedge_character(CycleType{{n}}, 0) == 1);
  }
  CHECK(wedge_character(CycleType{{2, 1}}, 1) == 1);
  CHECK(CycleType{{2, 1}}.class_size() == 3);

  for (int n = 1; n <= 4; ++n) {
    const CycleType identity{std::vector<int>(static_cast<std::size_t>(n), 1)};
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= i; ++j) CHECK(h0_character(n, i, j, identity) == h0_dimension(n, i, j));
    }
  }
  // n = 2, (1,1), transposition: chi_1^2 - chi_2 chi_0 = 0 - (-1) = 1
  CHECK(h0_character(2, 1, 1, CycleType{{2}}) == 1);
  const auto trace = character_trace_oracle(Permutation::from_cycles(2, {{1, 2}}), h0_basis(2, {1, 1}));
  REQUIRE(trace.has_value());
  CHECK(*trace == 1);
  CHECK_THROWS_AS(h0_character(3, 0, 1, CycleType{{3}}), ZeroModuleError);
  CHECK(verify::characters_match_traces(1, 3).passed);
}

TEST_CASE("trace oracle on the full monomial span gives wedge products") {
  const int n = 3;
  for (const Permutation& w : all_permutations(n)) {
    const CycleType c{w.cycle_type()};
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) {
        BidegreeBasis all{n, {i, j}, {}};
        for (Monomial m : monomials_of_bidegree(n, {i, j})) all.vectors.emplace_back(n, m);
        const auto trace = character_trace_oracle(w, all);
        REQUIRE(trace.has_value());
        CHECK(*trace == wedge_character(c, i) * wedge_character(c, j));
      }
    }
  }
}

TEST_CASE("diagonal census") {
  const DiagonalCensus c3 = diagonal_census(3);
  CHECK(c3.diagonal == std::vector<std::int64_t>{1, 6, 6, 1});
  CHECK(c3.diagonal_sum == 14);
  CHECK(diagonal_census(1).total == 3);
  CHECK(diagonal_census(0).total == 1);
  const DiagonalCensus brute = diagonal_census_brute_force(3);
  CHECK(brute.diagonal == c3.diagonal);
  CHECK(brute.total == c3.total);
  CHECK(verify::narayana_catalan(8, 4).passed);
}
