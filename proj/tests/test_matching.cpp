#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "supertorus/combinatorics.hpp"
#include "supertorus/io.hpp"
#include "supertorus/matching.hpp"
#include "supertorus/parse_error.hpp"
#include "supertorus/verify.hpp"

using namespace supertorus;

namespace {

Element lit(const char* text, int n) { return parse_element(text, n); }

MatchingCombination combo(std::initializer_list<std::pair<LabelledMatching, int>> terms) {
  MatchingCombination out;
  for (const auto& [m, c] : terms) out.add(m, c);
  return out;
}

std::size_t error_position(const char* text) {
  try {
    parse_matching(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string::npos;
}

// |Phi(n)| = sum_k C(n,2k) (2k-1)!! 3^(n-2k)
std::int64_t phi_count(int n) {
  std::int64_t total = 0;
  for (int k = 0; 2 * k <= n; ++k) {
    std::int64_t pairings = 1;
    for (int t = 2 * k - 1; t > 1; t -= 2) pairings *= t;
    std::int64_t labels = 1;
    for (int t = 0; t < n - 2 * k; ++t) labels *= 3;
    total += binomial(n, 2 * k) * pairings * labels;
  }
  return total;
}

}  // namespace

TEST_CASE("matching validation") {
  CHECK_THROWS_AS(LabelledMatching(4, {{1, 3}, {3, 4}}), InvalidMatching);
  CHECK_THROWS_AS(LabelledMatching(4, {{1, 2}}, {2}), InvalidMatching);
  CHECK_THROWS_AS(LabelledMatching(4, {}, {1}, {1}), InvalidMatching);
  CHECK_THROWS_AS(LabelledMatching(3, {{1, 4}}), InvalidMatching);
  CHECK_THROWS_AS(LabelledMatching(3, {{2, 2}}), InvalidMatching);
  CHECK(LabelledMatching(4, {{3, 1}}) == LabelledMatching(4, {{1, 3}}));
  const LabelledMatching m(8, {{4, 6}, {5, 7}}, {1}, {2});
  CHECK(m.degree() == 7);
  CHECK(m.bidegree() == Bidegree{4, 3});
}

TEST_CASE("F_m for the worked example") {
  const LabelledMatching m(8, {{4, 6}, {5, 7}}, {1}, {2});
  const Element expected =
      oracle::product(oracle::product(oracle::product(lit("a1", 8), lit("a2 t2", 8)), lit("a4 t6 + a6 t4", 8)),
                      lit("a5 t7 + a7 t5", 8));
  CHECK(f_of_matching(m) == expected);
  CHECK(f_of_matching(LabelledMatching(3, {})) == Element::one(3));
  CHECK(f_of_matching(LabelledMatching(2, {{1, 2}})) == lit("a1 t2 + a2 t1", 2));
}

TEST_CASE("crossings and alpha nestings") {
  CHECK(crossings(LabelledMatching(4, {{1, 2}, {3, 4}})) == 0);
  CHECK(crossings(LabelledMatching(4, {{1, 3}, {2, 4}})) == 1);
  CHECK(alpha_nestings(LabelledMatching(3, {{1, 3}}, {2})) == 1);
  CHECK(alpha_nestings(LabelledMatching(3, {{1, 3}}, {}, {2})) == 0);
  CHECK(in_nc(LabelledMatching(3, {{1, 3}}, {}, {2})));
  CHECK_FALSE(in_nc(LabelledMatching(3, {{1, 3}}, {2})));
  CHECK(crossing_quadruples(LabelledMatching(6, {{1, 4}, {2, 5}, {3, 6}})).size() == 3);
}

TEST_CASE("uncross relation") {
  const LabelledMatching m(4, {{1, 3}, {2, 4}});
  const MatchingCombination r = skein_uncross(m, {1, 2, 3, 4});
  CHECK(r == combo({{LabelledMatching(4, {{1, 2}, {3, 4}}), -1}, {LabelledMatching(4, {{1, 4}, {2, 3}}), -1}}));
  CHECK(expand(r, 4) == f_of_matching(m));
  CHECK_THROWS_AS(skein_uncross(LabelledMatching(4, {{1, 2}, {3, 4}}), {1, 2, 3, 4}), SkeinPatternError);
}

TEST_CASE("move-alpha relation") {
  const LabelledMatching m(3, {{1, 3}}, {2});
  const MatchingCombination r = skein_move_alpha(m, {1, 3}, 2);
  CHECK(r == combo({{LabelledMatching(3, {{1, 2}}, {3}), -1}, {LabelledMatching(3, {{2, 3}}, {1}), -1}}));
  CHECK(expand(r, 3) == f_of_matching(m));
  CHECK_THROWS_AS(skein_move_alpha(LabelledMatching(3, {{1, 3}}, {}, {2}), {1, 3}, 2), SkeinPatternError);
}

TEST_CASE("move-alpha past another alpha label picks up a sign") {
  // Moving the label at 2 to the right end passes the label at 3.
  const LabelledMatching m(4, {{1, 4}}, {2, 3});
  const MatchingCombination r = skein_move_alpha(m, {1, 4}, 2);
  CHECK(r == combo({{LabelledMatching(4, {{1, 2}}, {3, 4}), 1}, {LabelledMatching(4, {{2, 4}}, {1, 3}), -1}}));
  CHECK(expand(r, 4) == f_of_matching(m));
}

TEST_CASE("normal form") {
  const LabelledMatching nc(5, {{1, 2}}, {5}, {3});
  CHECK(normal_form(nc) == MatchingCombination(nc, 1));
  CHECK(normal_form(LabelledMatching(4, {{1, 3}, {2, 4}})) ==
        combo({{LabelledMatching(4, {{1, 2}, {3, 4}}), -1}, {LabelledMatching(4, {{1, 4}, {2, 3}}), -1}}));
  std::mt19937_64 rng(23);
  SkeinReducer reducer;
  for (int s = 0; s < 100; ++s) {
    const LabelledMatching m = random_matching(6, rng);
    const MatchingCombination& nf = reducer.reduce(m);
    for (const auto& [term, c] : nf.terms()) CHECK(in_nc(term));
    CHECK(expand(nf, 6) == f_of_matching(m));
  }
  CHECK(verify::skein_normal_form(3, 4, 200, 29).passed);
}

TEST_CASE("enumeration") {
  for (int n = 0; n <= 5; ++n) CHECK(static_cast<std::int64_t>(enumerate_phi(n).size()) == phi_count(n));
  const auto nc1 = enumerate_nc(1);
  CHECK(nc1.size() == 3);
  CHECK(enumerate_nc(1, 0) == std::vector<LabelledMatching>{LabelledMatching(1, {})});
  CHECK(enumerate_nc(1, 1) == std::vector<LabelledMatching>{LabelledMatching(1, {}, {1})});
  CHECK(enumerate_nc(1, 2) == std::vector<LabelledMatching>{LabelledMatching(1, {}, {}, {1})});
  for (int n = 1; n <= 6; ++n) {
    CHECK(enumerate_nc(n, 2 * n) == std::vector<LabelledMatching>{LabelledMatching(n, {}, {}, [n] {
            std::vector<int> all;
            for (int v = 1; v <= n; ++v) all.push_back(v);
            return all;
          }())});
    std::vector<LabelledMatching> filtered;
    for (const auto& m : enumerate_phi(n)) {
      if (in_nc(m)) filtered.push_back(m);
    }
    CHECK(filtered == enumerate_nc(n));
  }
  CHECK(verify::nc_basis_of_h0(4).passed);
}

TEST_CASE("subset bijection") {
  const SubsetPair p{{1, 2, 4, 5}, {3, 4, 6, 7, 8}};
  const LabelledMatching m = matching_from_subsets(p, 8, 9);
  CHECK(m == LabelledMatching(8, {{2, 3}, {5, 6}, {1, 7}}, {8}, {4}));
  CHECK(subsets_from_matching(m) == p);
  CHECK(matching_from_subsets({{2, 3}, {2, 3}}, 4, 4) == LabelledMatching(4, {}, {}, {2, 3}));
  CHECK(matching_from_subsets({{}, {3}}, 4, 1) == LabelledMatching(4, {}, {3}));
  CHECK_THROWS_AS(subsets_from_matching(LabelledMatching(4, {{1, 3}, {2, 4}})), std::invalid_argument);
  CHECK_THROWS_AS(matching_from_subsets({{1}, {2}}, 4, 3), std::invalid_argument);
  CHECK(verify::subset_bijection(1, 6).passed);
}

TEST_CASE("presentation relations") {
  const PresentationReport report = verify_presentation(4, 4);
  CHECK(report.ok());
  CHECK(report.identities_checked > 0);
  const Element b12 = lit("a1 t2 + a2 t1", 2);
  CHECK(b12 * b12 == lit("-2*a1 t1 a2 t2", 2));
  CHECK(lit("a1", 2) * b12 == -(lit("a2", 2) * lit("a1 t1", 2)));
  CHECK(verify::basic_products_translation_invariant(5, 30, 31).passed);
}

TEST_CASE("matching literals") {
  const LabelledMatching m = parse_matching("n=8; arcs=(4,6),(5,7); a=1; at=2");
  CHECK(m == LabelledMatching(8, {{4, 6}, {5, 7}}, {1}, {2}));
  CHECK(parse_matching("  n = 8 ;arcs = ( 4 , 6 ) ,(5,7);alpha=1;alphatheta=2 ") == m);
  CHECK(parse_matching(to_string(m)) == m);
  CHECK(parse_matching("n=3") == LabelledMatching(3, {}));
  CHECK(parse_matching("n=3; arcs=; a=") == LabelledMatching(3, {}));
  CHECK(error_position("n=3; arcs=(1 2)") == 13);
  CHECK(error_position("n=3; b=1") == 5);
  CHECK(error_position("n=3; n=4") == 5);
  CHECK(error_position("arcs=(1,2)") == 10);
  CHECK(error_position("n=x") == 2);
  CHECK_THROWS_AS(parse_matching("n=3; arcs=(1,2); a=2"), InvalidMatching);
}

TEST_CASE("JSON forms") {
  const LabelledMatching m(8, {{4, 6}, {5, 7}}, {1}, {2});
  const nlohmann::json j = matching_to_json(m);
  CHECK(j.dump() == R"({"alpha":[1],"alphatheta":[2],"arcs":[[4,6],[5,7]],"n":8})");
  CHECK(matching_from_json(j) == m);
  CHECK(matching_from_json(nlohmann::json::parse(R"({"n":3})")) == LabelledMatching(3, {}));
  CHECK_THROWS_AS(matching_from_json(nlohmann::json::parse(R"({"arcs":[]})")), InvalidMatching);
  CHECK_THROWS_AS(matching_from_json(nlohmann::json::parse(R"({"n":4,"arcs":[[1,2,3]]})")), InvalidMatching);

  const MatchingCombination c = normal_form(LabelledMatching(4, {{1, 3}, {2, 4}}));
  const nlohmann::json cj = combination_to_json(c);
  CHECK(cj.size() == 2);
  CHECK(cj[0]["coeff"] == "-1");
  CHECK(combination_from_json(cj) == c);
}
