// Linked against the library built with a flipped theta-derivative sign.
// Succeeds only when both operator checks catch the fault.

#include <cstdio>
#include <cstdlib>

#include "supertorus/verify.hpp"

int main() {
  using namespace supertorus::verify;
  const CheckResult translate = translate_equals_exp_tau(0, 6);
  const CheckResult sl2 = sl2_relations(1, 5);
  std::printf("  faulty build: criterion 1 %s, criterion 8 %s\n", translate.passed ? "passes" : "fails",
              sl2.passed ? "passes" : "fails");
  return !translate.passed && !sl2.passed ? EXIT_SUCCESS : EXIT_FAILURE;
}
