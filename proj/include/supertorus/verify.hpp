#pragma once

// Property checks over whole ranges of n. Each returns a CheckResult instead
// of throwing so that suites can report every failure in one run.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "supertorus/exterior.hpp"

namespace supertorus::verify {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  // first failure, if any
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

Element random_element(int n, std::mt19937_64& rng, int max_terms = 6);

// exterior algebra
CheckResult translate_equals_exp_tau(int n_min, int n_max);
CheckResult fixed_points_are_tau_kernel(int n_min, int n_max, int samples, std::uint64_t seed);
CheckResult sl2_relations(int n_min, int n_max);
CheckResult product_associative_supercommutative(int exhaustive_max, int random_max, int samples,
                                                 std::uint64_t seed);
CheckResult permutation_equivariance(int n_max, int samples, std::uint64_t seed);
CheckResult tau_skew_adjoint(int n_max, int samples, std::uint64_t seed);
CheckResult sign_free_transitions(int n_max);

// linear algebra
CheckResult boolean_complementary_invertible(int n_min, int n_max);
CheckResult tau_power_block_structure(int n_max);
CheckResult rank_kernel_properties(int samples, std::uint64_t seed);

// cohomology
CheckResult dimension_tables(int n_min, int n_max);
CheckResult tau_injective_surjective(int n_max);
CheckResult complementary_tau_power_bijective(int n_max);
CheckResult narayana_catalan(int formula_max, int brute_force_max);
CheckResult h0_basis_translation_invariant(int n_max);
CheckResult lefschetz_invertible(int n_min, int n_max);
CheckResult serre_duality(int n_min, int n_max, int samples, std::uint64_t seed);
CheckResult characters_match_traces(int n_min, int n_max);

// matchings
CheckResult skein_normal_form(int exhaustive_max, int sample_rank, int samples, std::uint64_t seed);
CheckResult nc_basis_of_h0(int n_max);
CheckResult subset_bijection(int n_min, int n_max);
CheckResult presentation_relations(int n_max);
CheckResult basic_products_translation_invariant(int n_max, int samples, std::uint64_t seed);

/// core | linalg | cohomology | matchings | all. Ranges are capped at n_max and
/// at per-check sizes that stay fast. Throws std::invalid_argument on an
/// unknown suite name.
SuiteReport run_suite(std::string_view suite, int n_max, std::uint64_t seed);
bool is_suite_name(std::string_view suite);

}  // namespace supertorus::verify
