#include "supertorus/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace supertorus {

std::int64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

std::int64_t factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  std::int64_t result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

std::int64_t catalan(int n) { return binomial(2 * n, n) / (n + 1); }

std::int64_t narayana(int n, int k) {
  if (n <= 0) return 0;
  return binomial(n, k) * binomial(n, k - 1) / n;
}

std::vector<std::vector<int>> subsets_lex(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> current(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) current[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(current);
    int pos = k - 1;
    while (pos >= 0 && current[static_cast<std::size_t>(pos)] == n - k + pos + 1) --pos;
    if (pos < 0) break;
    ++current[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i) {
      current[static_cast<std::size_t>(i)] = current[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
  return out;
}

std::size_t subset_rank(const std::vector<int>& subset, int n) {
  // Count the k-subsets that precede `subset` lexicographically.
  const int k = static_cast<int>(subset.size());
  std::int64_t rank = 0;
  int previous = 0;
  for (int pos = 0; pos < k; ++pos) {
    for (int v = previous + 1; v < subset[static_cast<std::size_t>(pos)]; ++v) {
      rank += binomial(n - v, k - pos - 1);
    }
    previous = subset[static_cast<std::size_t>(pos)];
  }
  return static_cast<std::size_t>(rank);
}

std::uint32_t subset_mask(const std::vector<int>& subset) {
  std::uint32_t mask = 0;
  for (int v : subset) mask |= 1U << (v - 1);
  return mask;
}

std::vector<int> mask_subset(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1U) out.push_back(i + 1);
  }
  return out;
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace supertorus
