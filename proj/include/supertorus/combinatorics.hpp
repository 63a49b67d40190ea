#pragma once

#include <cstdint>
#include <vector>

namespace supertorus {

/// Binomial coefficient; 0 outside 0 <= k <= n.
std::int64_t binomial(int n, int k);
std::int64_t factorial(int n);
std::int64_t catalan(int n);
/// Nar(n,k) = C(n,k) C(n,k-1) / n.
std::int64_t narayana(int n, int k);

/// k-subsets of {1..n}, sorted, in lexicographic order.
std::vector<std::vector<int>> subsets_lex(int n, int k);
/// Position of a sorted k-subset of {1..n} in subsets_lex(n, k).
std::size_t subset_rank(const std::vector<int>& subset, int n);

/// Bit i-1 set for each element i.
std::uint32_t subset_mask(const std::vector<int>& subset);
std::vector<int> mask_subset(std::uint32_t mask);

/// Partitions of n, parts descending, in reverse lexicographic order ((n) first).
std::vector<std::vector<int>> partitions(int n);

}  // namespace supertorus
