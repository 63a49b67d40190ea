// Acceptance run: one line per criterion, exit status 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "supertorus/verify.hpp"

#ifndef SUPERTORUS_NEGATIVE_CONTROL
#error "SUPERTORUS_NEGATIVE_CONTROL must name the negative-control executable"
#endif

using namespace supertorus::verify;

namespace {

constexpr std::uint64_t kSeed = 20211015;

CheckResult combine(std::string name, const std::vector<CheckResult>& parts) {
  CheckResult out;
  out.name = std::move(name);
  for (const auto& p : parts) {
    out.cases += p.cases;
    if (!p.passed && out.passed) {
      out.passed = false;
      out.detail = p.name + ": " + p.detail;
    }
  }
  return out;
}

CheckResult negative_control() {
  CheckResult out;
  out.name = "flipped derivative sign breaks criteria 1 and 8";
  out.cases = 1;
  const std::string command = std::string("\"") + SUPERTORUS_NEGATIVE_CONTROL + "\"";
  const int status = std::system(command.c_str());
  if (status != 0) {
    out.passed = false;
    out.detail = "negative-control run exited with status " + std::to_string(status);
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<CheckResult()>>> criteria = {
      {1, [] { return translate_equals_exp_tau(0, 6); }},
      {2, [] { return fixed_points_are_tau_kernel(1, 5, 200, kSeed); }},
      {3, [] { return dimension_tables(0, 6); }},
      {4, [] { return narayana_catalan(8, 5); }},
      {5, [] {
         return combine("Boolean incidence invertible, tau powers block-decompose",
                        {boolean_complementary_invertible(1, 12), tau_power_block_structure(5)});
       }},
      {6, [] { return lefschetz_invertible(1, 5); }},
      {7, [] { return serre_duality(1, 5, 100, kSeed); }},
      {8, [] { return sl2_relations(1, 5); }},
      {9, [] { return characters_match_traces(1, 4); }},
      {10, [] { return skein_normal_form(5, 5, 1000, kSeed); }},
      {11, [] { return subset_bijection(1, 8); }},
      {12, [] { return presentation_relations(6); }},
      {13, negative_control},
  };

  int failures = 0;
  for (const auto& [id, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const CheckResult r = run();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2d %s  %s  (%zu cases, %.2fs)\n", id, r.passed ? "PASS" : "FAIL", r.name.c_str(),
                r.cases, seconds);
    if (!r.passed) {
      ++failures;
      std::printf("             %s\n", r.detail.c_str());
    }
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
