#pragma once

// Brute-force references used by the unit tests. Nothing here shares code with
// the library beyond the Monomial type.

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "supertorus/exterior.hpp"
#include "supertorus/linalg.hpp"

namespace oracle {

// Canonical position of a generator: alpha_i -> 2i-2, theta_i -> 2i-1.
using Word = std::vector<int>;

// Sort a word of distinct positions by bubble sort, counting swaps.
inline std::pair<int, supertorus::Monomial> canonical(Word w) {
  for (std::size_t a = 0; a < w.size(); ++a) {
    for (std::size_t b = a + 1; b < w.size(); ++b) {
      if (w[a] == w[b]) return {0, supertorus::Monomial{}};
    }
  }
  int swaps = 0;
  for (std::size_t pass = 0; pass < w.size(); ++pass) {
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k] > w[k + 1]) {
        std::swap(w[k], w[k + 1]);
        ++swaps;
      }
    }
  }
  std::uint32_t bits = 0;
  for (int p : w) bits |= 1U << p;
  return {swaps % 2 == 0 ? 1 : -1, supertorus::Monomial{bits}};
}

inline Word word_of(supertorus::Monomial m) {
  Word w;
  for (int p = 0; p < 32; ++p) {
    if ((m.bits() >> p) & 1U) w.push_back(p);
  }
  return w;
}

// Product of two elements via concatenated words.
inline supertorus::Element product(const supertorus::Element& f, const supertorus::Element& g) {
  supertorus::Element out(f.n());
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) {
      Word w = word_of(a);
      const Word wb = word_of(b);
      w.insert(w.end(), wb.begin(), wb.end());
      const auto [sign, m] = canonical(w);
      if (sign != 0) out.add_term(m, ca * cb * sign);
    }
  }
  return out;
}

// Rank by textbook Gaussian elimination over the rationals.
inline std::size_t gauss_rank(supertorus::RationalMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    for (std::size_t q = 0; q < m.rows(); ++q) {
      if (q == r || m(q, c) == 0) continue;
      const supertorus::Rational factor = m(q, c) / m(r, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m(q, k) -= factor * m(r, k);
    }
    ++r;
  }
  return r;
}

}  // namespace oracle
