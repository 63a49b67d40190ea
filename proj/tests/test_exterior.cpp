#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "supertorus/combinatorics.hpp"
#include "supertorus/exterior.hpp"
#include "supertorus/parse_error.hpp"
#include "supertorus/verify.hpp"

using namespace supertorus;

namespace {

Element lit(const char* text, int n) { return parse_element(text, n); }

}  // namespace

TEST_CASE("generator products follow the canonical order") {
  const Element a1 = Element::generator(1, alpha(1));
  const Element t1 = Element::generator(1, theta(1));
  CHECK((a1 * a1).is_zero());
  CHECK(a1 * t1 == Element(1, m_basis({1}, {1}, 1)));
  CHECK(t1 * a1 == Element(1, m_basis({1}, {1}, 1), -1));
}

TEST_CASE("monomial signs agree with a bubble-sort inversion count") {
  for (int n = 0; n <= 3; ++n) {
    for (Monomial a : all_monomials(n)) {
      for (Monomial b : all_monomials(n)) {
        oracle::Word w = oracle::word_of(a);
        const oracle::Word wb = oracle::word_of(b);
        w.insert(w.end(), wb.begin(), wb.end());
        const auto [sign, m] = oracle::canonical(w);
        const MonomialProduct p = multiply(a, b);
        CHECK(p.sign == sign);
        if (sign != 0) CHECK(p.monomial == m);
      }
    }
  }
}

TEST_CASE("element products agree with the word oracle on random input") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 5; ++n) {
    for (int s = 0; s < 30; ++s) {
      const Element f = verify::random_element(n, rng);
      const Element g = verify::random_element(n, rng);
      CHECK(f * g == oracle::product(f, g));
    }
  }
}

TEST_CASE("literals respect juxtaposition order") {
  // a2 t1 = -(t1 a2) in canonical order
  CHECK(lit("1*a1 t2 - 1*a2 t1", 2) == Element(2, m_basis({1}, {2}, 2)) + Element(2, m_basis({2}, {1}, 2)));
  CHECK(lit("t1 a1", 1) == lit("-a1 t1", 1));
  CHECK(lit("a1 a1", 1).is_zero());
  CHECK(lit("-1/2*t1 t2 + 3", 2) == Element::scalar(2, 3) - Element(2, m_basis({}, {1, 2}, 2), Rational(1, 2)));
  CHECK(to_string(lit("1*a1 t2 - 1*a2 t1", 2)) == "1*t1 a2 + 1*a1 t2");
  CHECK(lit(to_string(lit("-1/2*t1 t2 + 3*a2", 2)).c_str(), 2) == lit("-1/2*t1 t2 + 3*a2", 2));
  CHECK(to_string(Element(3)) == "0");
}

TEST_CASE("malformed literals report a position") {
  auto position_of = [](const char* text, int n) -> std::size_t {
    try {
      parse_element(text, n);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(position_of("a1 + x2", 2) == 5);
  CHECK(position_of("a3", 2) == 0);
  CHECK(position_of("a1 t", 2) == 4);
  CHECK(position_of("", 2) == 0);
  CHECK(position_of("1/ a1", 2) == 2);
}

TEST_CASE("fermionic derivatives") {
  CHECK(partial(lit("t1", 1), theta(1)) == Element::one(1));
  CHECK(partial(lit("a1 t1 t2", 2), theta(2)) == lit("a1 t1", 2));
  CHECK(partial(lit("a1 t1 t2", 2), theta(1)) == lit("-a1 t2", 2));
  CHECK(partial(lit("t1", 2), alpha(2)).is_zero());
}

TEST_CASE("derivative signs match the removal-position oracle") {
  for (int n = 1; n <= 3; ++n) {
    for (Monomial m : all_monomials(n)) {
      for (int bit = 0; bit < 2 * n; ++bit) {
        const Generator g = Generator::from_bit(bit);
        const oracle::Word w = oracle::word_of(m);
        const auto at = std::find(w.begin(), w.end(), bit);
        Element expected(n);
        if (at != w.end()) {
          oracle::Word rest = w;
          rest.erase(rest.begin() + (at - w.begin()));
          const int sign = (at - w.begin()) % 2 == 0 ? 1 : -1;
          expected.add_term(oracle::canonical(rest).second, sign);
        }
        CHECK(partial(Element(n, m), g) == expected);
      }
    }
  }
}

TEST_CASE("tau, sigma, eta on small inputs") {
  CHECK(tau(lit("t1", 1)) == lit("a1", 1));
  CHECK(tau(lefschetz_element(4)).is_zero());
  CHECK(sigma(lit("a1", 1)) == lit("t1", 1));
  CHECK(sigma(lit("t1", 1)).is_zero());
  CHECK(eta(lit("a1", 1)) == lit("a1", 1));
  CHECK(eta(lit("t1 t2", 2)) == lit("-2*t1 t2", 2));
  CHECK(eta(lit("a1 t1", 1)).is_zero());
}

TEST_CASE("translation") {
  CHECK(translate(lit("a2", 2)) == lit("a2", 2));
  CHECK(translate(lit("t1 t2", 2)) == lit("t1 t2 + t1 a2 + a1 t2 + a1 a2", 2));
  CHECK(exp_tau(lit("t1 t2", 2)) == translate(lit("t1 t2", 2)));
  CHECK(exp_tau(Element::one(3)) == Element::one(3));
  CHECK(translate(lit("a1 t2 + a2 t1", 2)) == lit("a1 t2 + a2 t1", 2));
}

TEST_CASE("Lefschetz element and volume form") {
  CHECK(lefschetz_element(1) == lit("a1 t1", 1));
  for (int n = 1; n <= 5; ++n) CHECK(power(lefschetz_element(n), n + 1).is_zero());
  // ell^n = n! * alpha_1 theta_1 ... alpha_n theta_n
  CHECK(power(lefschetz_element(3), 3) == lit("6*a1 t1 a2 t2 a3 t3", 3));
  CHECK(volume_form(2) == lit("a1 a2 t1 t2", 2));
  CHECK(volume_form(2) == lit("-a1 t1 a2 t2", 2));
}

TEST_CASE("m and m' bases") {
  CHECK(to_string(m_basis({2, 3, 5}, {1, 3, 4, 6}, 8)) == "t1 a2 a3 t3 t4 a5 t6");
  CHECK(m_basis({}, {}, 3) == Monomial{});
  CHECK(Element(2, m_basis({1}, {}, 2)) == lit("a1", 2));

  const Element expected = lit("a4 t4 a7 t7 a2 a5 t3", 8);
  CHECK(m_prime_basis({2, 4, 5, 7}, {3, 4, 7}, 8) == expected);
  CHECK(m_prime_basis({1}, {1}, 1) == lit("a1 t1", 1));
  CHECK(m_prime_basis({1}, {2}, 2) == lit("a1 t2", 2));

  for (int n = 0; n <= 4; ++n) {
    for (Monomial m : all_monomials(n)) {
      const auto [a, b] = m_indices(m);
      CHECK(m_basis(a, b, n) == m);
      CHECK(m_prime_basis(a, b, n) == Element(n, m, m_prime_sign(a, b, n)));
    }
  }
}

TEST_CASE("tau and ell are sign-free in the m and m' bases") {
  CHECK(tau(Element(3, m_basis({1}, {2, 3}, 3))) ==
        Element(3, m_basis({1, 2}, {3}, 3)) + Element(3, m_basis({1, 3}, {2}, 3)));
  const auto coords = m_prime_coordinates(lefschetz_element(3) * m_prime_basis({1}, {2}, 3));
  CHECK(coords.size() == 1);
  CHECK(coords.at({IndexSet{1, 3}, IndexSet{2, 3}}) == 1);
  CHECK(verify::sign_free_transitions(4).passed);
}

TEST_CASE("symmetric group action") {
  const Permutation swap = Permutation::from_cycles(2, {{1, 2}});
  CHECK(permute(Permutation::identity(2), lit("a1 t2 - 3*t1", 2)) == lit("a1 t2 - 3*t1", 2));
  CHECK(permute(swap, lit("a1 t2", 2)) == lit("a2 t1", 2));
  CHECK(permute(swap, lit("a1 a2", 2)) == lit("-a1 a2", 2));
  CHECK(Permutation::from_cycles(4, {{1, 3, 2}}).cycle_type() == std::vector<int>{3, 1});
  CHECK(all_permutations(4).size() == 24);
  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
}

TEST_CASE("pairing") {
  for (int n = 0; n <= 4; ++n) CHECK(pairing(Element::one(n), volume_form(n)) == 1);
  CHECK(pairing(lit("a1", 2), lit("t1 t2", 2)) == 0);
  CHECK(pairing(lit("a1 t1", 1), Element::one(1)) == 1);
  // tau is an even derivation killing the top degree, hence skew for this pairing.
  const Element t1 = lit("t1", 1);
  CHECK(pairing(tau(t1), t1) == 1);
  CHECK(pairing(t1, tau(t1)) == -1);
}

TEST_CASE("bidegree components partition an element") {
  CHECK(bidegree_component(lit("a1 + t1", 1), {1, 0}) == lit("a1", 1));
  CHECK(bidegree_component(lit("a1 + t1", 1), {2, 0}).is_zero());
  std::mt19937_64 rng(5);
  for (int s = 0; s < 20; ++s) {
    const Element f = verify::random_element(3, rng, 10);
    Element sum(3);
    for (int i = 0; i <= 3; ++i) {
      for (int j = 0; j <= 3; ++j) sum += bidegree_component(f, {i, j});
    }
    CHECK(sum == f);
  }
  for (int n = 0; n <= 4; ++n) {
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) {
        CHECK(monomials_of_bidegree(n, {i, j}).size() == static_cast<std::size_t>(binomial(n, i) * binomial(n, j)));
      }
    }
  }
}

TEST_CASE("rank guard") {
  CHECK(rank_limit() == 14);
  CHECK_THROWS_AS(Element(15), RankError);
  set_rank_limit(15);
  CHECK_NOTHROW(Element(15));
  set_rank_limit(14);
  CHECK_THROWS_AS(Element(17), RankError);
  CHECK_THROWS_AS(lit("a1", 1) * lit("a1", 2), std::invalid_argument);
}

TEST_CASE("the n = 0 algebra is the ground field") {
  CHECK(all_monomials(0).size() == 1);
  CHECK(tau(Element::scalar(0, 5)).is_zero());
  CHECK(translate(Element::scalar(0, 5)) == Element::scalar(0, 5));
  CHECK(volume_form(0) == Element::one(0));
}

TEST_CASE("operator identity checks pass") {
  CHECK(verify::translate_equals_exp_tau(0, 4).passed);
  CHECK(verify::sl2_relations(1, 4).passed);
  CHECK(verify::fixed_points_are_tau_kernel(1, 4, 60, 3).passed);
  CHECK(verify::product_associative_supercommutative(2, 4, 20, 3).passed);
  CHECK(verify::permutation_equivariance(5, 20, 3).passed);
  CHECK(verify::tau_skew_adjoint(5, 50, 3).passed);
}
