#include "supertorus/verify.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <utility>

#include "supertorus/cohomology.hpp"
#include "supertorus/combinatorics.hpp"
#include "supertorus/linalg.hpp"
#include "supertorus/matching.hpp"

namespace supertorus::verify {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  template <typename Describe>
  void expect(bool ok, Describe&& describe) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = describe();
    }
  }

  CheckResult result() const { return result_; }

 private:
  CheckResult result_;
};

std::string nstr(int n) { return "n=" + std::to_string(n); }

std::string bistr(int n, int i, int j) {
  return nstr(n) + " (" + std::to_string(i) + "," + std::to_string(j) + ")";
}

Rational random_coefficient(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 5);
  std::uniform_int_distribution<int> den(1, 3);
  std::bernoulli_distribution negative(0.5);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return negative(rng) ? Rational(-q) : q;
}

Element random_homogeneous(int n, Bidegree d, std::mt19937_64& rng, int max_terms = 4) {
  Element out(n);
  const auto monomials = monomials_of_bidegree(n, d);
  if (monomials.empty()) return out;
  std::uniform_int_distribution<std::size_t> pick(0, monomials.size() - 1);
  std::uniform_int_distribution<int> count(1, max_terms);
  for (int t = count(rng); t > 0; --t) out.add_term(monomials[pick(rng)], random_coefficient(rng));
  return out;
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> images = Permutation::identity(n).images();
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

// H^0 bases for every bidegree with nonzero H^0.
std::map<std::pair<int, int>, BidegreeBasis> all_h0_bases(int n) {
  std::map<std::pair<int, int>, BidegreeBasis> out;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= i; ++j) {
      if (h0_dimension(n, i, j) > 0) out.emplace(std::make_pair(i, j), h0_basis(n, {i, j}));
    }
  }
  return out;
}

Element random_combination(const BidegreeBasis& basis, std::mt19937_64& rng) {
  Element out(basis.n);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (const auto& v : basis.vectors) out += v * Rational(coeff(rng));
  return out;
}

RationalMatrix basis_columns(const BidegreeBasis& basis) {
  std::vector<Vector> columns;
  for (const auto& v : basis.vectors) columns.push_back(monomial_coordinates(v, basis.bidegree));
  return RationalMatrix::from_columns(columns, monomials_of_bidegree(basis.n, basis.bidegree).size());
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

Element random_element(int n, std::mt19937_64& rng, int max_terms) {
  Element out(n);
  const std::uint64_t count = std::uint64_t{1} << (2 * n);
  std::uniform_int_distribution<std::uint64_t> pick(0, count - 1);
  std::uniform_int_distribution<int> terms(1, max_terms);
  for (int t = terms(rng); t > 0; --t) {
    out.add_term(Monomial{static_cast<std::uint32_t>(pick(rng))}, random_coefficient(rng));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exterior algebra

CheckResult translate_equals_exp_tau(int n_min, int n_max) {
  Recorder rec("translate = exp(tau) on every monomial");
  for (int n = n_min; n <= n_max; ++n) {
    for (Monomial m : all_monomials(n)) {
      const Element e(n, m);
      rec.expect(translate(e) == exp_tau(e), [&] { return nstr(n) + " monomial " + to_string(m); });
    }
  }
  return rec.result();
}

CheckResult fixed_points_are_tau_kernel(int n_min, int n_max, int samples, std::uint64_t seed) {
  Recorder rec("T(f) = f iff tau(f) = 0");
  std::mt19937_64 rng(seed);
  for (int n = n_min; n <= n_max; ++n) {
    const auto bases = all_h0_bases(n);
    std::vector<const BidegreeBasis*> nonzero;
    for (const auto& [key, basis] : bases) nonzero.push_back(&basis);
    std::uniform_int_distribution<std::size_t> pick(0, nonzero.size() - 1);
    int kernel_seen = 0;
    int other_seen = 0;
    for (int s = 0; s < samples; ++s) {
      Element f(n);
      if (s % 2 == 0) {
        for (int parts = 1 + s % 3; parts > 0; --parts) f += random_combination(*nonzero[pick(rng)], rng);
      } else {
        f = random_element(n, rng);
        if (s % 4 == 1) f += random_combination(*nonzero[pick(rng)], rng);
      }
      const bool in_kernel = tau(f).is_zero();
      const bool fixed = translate(f) == f;
      (in_kernel ? kernel_seen : other_seen)++;
      rec.expect(in_kernel == fixed, [&] { return nstr(n) + " f = " + to_string(f); });
    }
    rec.expect(kernel_seen > 0 && other_seen > 0,
               [&] { return nstr(n) + ": sample did not exercise both directions"; });
  }
  return rec.result();
}

CheckResult sl2_relations(int n_min, int n_max) {
  Recorder rec("sl2 relations [tau,sigma]=eta, [eta,tau]=2tau, [eta,sigma]=-2sigma");
  for (int n = n_min; n <= n_max; ++n) {
    for (Monomial m : all_monomials(n)) {
      const Element e(n, m);
      const Element t = tau(e);
      const Element s = sigma(e);
      rec.expect(tau(s) - sigma(t) == eta(e), [&] { return nstr(n) + " [tau,sigma] at " + to_string(m); });
      rec.expect(eta(t) - tau(eta(e)) == t * Rational(2),
                 [&] { return nstr(n) + " [eta,tau] at " + to_string(m); });
      rec.expect(eta(s) - sigma(eta(e)) == s * Rational(-2),
                 [&] { return nstr(n) + " [eta,sigma] at " + to_string(m); });
    }
  }
  return rec.result();
}

CheckResult product_associative_supercommutative(int exhaustive_max, int random_max, int samples,
                                                 std::uint64_t seed) {
  Recorder rec("exterior product associative and supercommutative");
  for (int n = 0; n <= exhaustive_max; ++n) {
    const auto monomials = all_monomials(n);
    for (Monomial a : monomials) {
      for (Monomial b : monomials) {
        const auto ab = multiply(a, b);
        const auto ba = multiply(b, a);
        const int twist = (a.degree() * b.degree()) % 2 == 0 ? 1 : -1;
        rec.expect(ab.sign == twist * ba.sign && (ab.sign == 0 || ab.monomial == ba.monomial),
                   [&] { return nstr(n) + " supercommutativity " + to_string(a) + " | " + to_string(b); });
        for (Monomial c : monomials) {
          const auto ab_c = ab.sign == 0 ? MonomialProduct{} : multiply(ab.monomial, c);
          const auto bc = multiply(b, c);
          const auto a_bc = bc.sign == 0 ? MonomialProduct{} : multiply(a, bc.monomial);
          const int left = ab.sign * ab_c.sign;
          const int right = bc.sign * a_bc.sign;
          rec.expect(left == right && (left == 0 || ab_c.monomial == a_bc.monomial), [&] {
            return nstr(n) + " associativity " + to_string(a) + " | " + to_string(b) + " | " + to_string(c);
          });
        }
      }
    }
  }
  std::mt19937_64 rng(seed);
  for (int n = 1; n <= random_max; ++n) {
    for (int s = 0; s < samples; ++s) {
      const Element f = random_element(n, rng);
      const Element g = random_element(n, rng);
      const Element h = random_element(n, rng);
      rec.expect((f * g) * h == f * (g * h), [&] { return nstr(n) + " random associativity"; });
      rec.expect((f + g) * h == f * h + g * h, [&] { return nstr(n) + " distributivity"; });
    }
  }
  return rec.result();
}

CheckResult permutation_equivariance(int n_max, int samples, std::uint64_t seed) {
  Recorder rec("S_n action commutes with tau, sigma, eta, T and products");
  std::mt19937_64 rng(seed);
  for (int n = 1; n <= n_max; ++n) {
    for (int s = 0; s < samples; ++s) {
      const Permutation w = random_permutation(n, rng);
      const Element f = random_element(n, rng);
      const Element g = random_element(n, rng);
      auto where = [&] { return nstr(n) + " f = " + to_string(f); };
      rec.expect(permute(w, tau(f)) == tau(permute(w, f)), where);
      rec.expect(permute(w, sigma(f)) == sigma(permute(w, f)), where);
      rec.expect(permute(w, eta(f)) == eta(permute(w, f)), where);
      rec.expect(permute(w, translate(f)) == translate(permute(w, f)), where);
      rec.expect(permute(w, f * g) == permute(w, f) * permute(w, g), where);
    }
  }
  return rec.result();
}

CheckResult tau_skew_adjoint(int n_max, int samples, std::uint64_t seed) {
  Recorder rec("<tau f, g> = -<f, tau g>");
  std::mt19937_64 rng(seed);
  for (int n = 1; n <= n_max; ++n) {
    std::uniform_int_distribution<int> deg(0, n);
    for (int s = 0; s < samples; ++s) {
      Element f(n);
      Element g(n);
      if (s % 2 == 0) {
        // tau f pairs with g exactly when bidegrees are complementary after the shift.
        const Bidegree d{deg(rng), deg(rng)};
        f = random_homogeneous(n, d, rng);
        g = random_homogeneous(n, {n - d.alpha - 1, n - d.theta + 1}, rng);
      } else {
        f = random_element(n, rng, 10);
        g = random_element(n, rng, 10);
      }
      rec.expect(pairing(tau(f), g) == -pairing(f, tau(g)),
                 [&] { return nstr(n) + " f = " + to_string(f) + ", g = " + to_string(g); });
    }
  }
  return rec.result();
}

CheckResult sign_free_transitions(int n_max) {
  Recorder rec("tau(m_AB) and ell * m'_AB have all coefficients +1");
  for (int n = 1; n <= n_max; ++n) {
    const Element ell = lefschetz_element(n);
    for (int sa = 0; sa <= n; ++sa) {
      for (int sb = 0; sb <= n; ++sb) {
        for (const auto& a : subsets_lex(n, sa)) {
          for (const auto& b : subsets_lex(n, sb)) {
            Element expected_tau(n);
            std::map<std::pair<IndexSet, IndexSet>, Rational> expected_ell;
            for (int c = 1; c <= n; ++c) {
              const bool in_a = std::binary_search(a.begin(), a.end(), c);
              const bool in_b = std::binary_search(b.begin(), b.end(), c);
              if (!in_a && in_b) {
                IndexSet a2 = a;
                a2.insert(std::upper_bound(a2.begin(), a2.end(), c), c);
                IndexSet b2 = b;
                b2.erase(std::find(b2.begin(), b2.end(), c));
                expected_tau.add_term(m_basis(a2, b2, n), 1);
              }
              if (!in_a && !in_b) {
                IndexSet a2 = a;
                a2.insert(std::upper_bound(a2.begin(), a2.end(), c), c);
                IndexSet b2 = b;
                b2.insert(std::upper_bound(b2.begin(), b2.end(), c), c);
                expected_ell.emplace(std::make_pair(a2, b2), 1);
              }
            }
            auto where = [&] { return nstr(n) + " A=" + std::to_string(a.size()) + "-set " + to_string(Element(n, m_basis(a, b, n))); };
            rec.expect(tau(Element(n, m_basis(a, b, n))) == expected_tau, where);
            rec.expect(m_prime_coordinates(ell * m_prime_basis(a, b, n)) == expected_ell, where);
          }
        }
      }
    }
  }
  return rec.result();
}

// ---------------------------------------------------------------------------
// Linear algebra

CheckResult boolean_complementary_invertible(int n_min, int n_max) {
  Recorder rec("M_n(i, n-i) invertible for 0 <= i <= n/2");
  for (int n = n_min; n <= n_max; ++n) {
    for (int i = 0; 2 * i <= n; ++i) {
      rec.expect(is_invertible(boolean_incidence(n, i, n - i)),
                 [&] { return nstr(n) + " i=" + std::to_string(i); });
    }
  }
  return rec.result();
}

CheckResult tau_power_block_structure(int n_max) {
  Recorder rec("tau^(j-i) is a direct sum of (j-i)! * Boolean incidence blocks");
  for (int n = 1; n <= n_max; ++n) {
    for (int i = 0; i <= n; ++i) {
      for (int j = i; j <= n; ++j) {
        const int power = j - i;
        const RationalMatrix t = tau_power_matrix(n, {i, j}, power);
        const auto sources = monomials_of_bidegree(n, {i, j});
        const auto targets = monomials_of_bidegree(n, {j, i});
        // Block key (A & B, A | B); local index = rank of (A - B) inside (A | B) - (A & B).
        struct Place {
          std::pair<std::uint32_t, std::uint32_t> key;
          std::size_t local;
          int free;  // |(A | B) - (A & B)|
        };
        auto place = [&](Monomial m) {
          const auto [a, b] = m_indices(m);
          const std::uint32_t am = subset_mask(a);
          const std::uint32_t bm = subset_mask(b);
          const std::vector<int> free = mask_subset((am | bm) & ~(am & bm));
          std::vector<int> relabelled;
          for (int v : mask_subset(am & ~bm)) {
            relabelled.push_back(static_cast<int>(std::find(free.begin(), free.end(), v) - free.begin()) + 1);
          }
          return Place{{am & bm, am | bm},
                       subset_rank(relabelled, static_cast<int>(free.size())),
                       static_cast<int>(free.size())};
        };
        std::vector<Place> col_place;
        std::vector<Place> row_place;
        for (Monomial m : sources) col_place.push_back(place(m));
        for (Monomial m : targets) row_place.push_back(place(m));
        std::map<std::pair<std::uint32_t, std::uint32_t>, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> blocks;
        for (std::size_t c = 0; c < sources.size(); ++c) blocks[col_place[c].key].second.push_back(c);
        for (std::size_t r = 0; r < targets.size(); ++r) blocks[row_place[r].key].first.push_back(r);
        for (std::size_t r = 0; r < t.rows(); ++r) {
          for (std::size_t c = 0; c < t.cols(); ++c) {
            rec.expect(t(r, c) == 0 || row_place[r].key == col_place[c].key,
                       [&] { return bistr(n, i, j) + ": entry outside the block diagonal"; });
          }
        }
        const Rational scale(factorial(power));
        for (const auto& [key, members] : blocks) {
          const auto& [rows, cols] = members;
          const int free = cols.empty() ? row_place[rows.front()].free : col_place[cols.front()].free;
          const int p = i - std::popcount(key.first);
          const RationalMatrix expected = scale * boolean_incidence(free, p, free - p).transpose();
          RationalMatrix actual(rows.size(), cols.size());
          bool shape_ok = actual.rows() == expected.rows() && actual.cols() == expected.cols();
          if (shape_ok) {
            for (std::size_t r : rows) {
              for (std::size_t c : cols) actual(row_place[r].local, col_place[c].local) = t(r, c);
            }
          }
          rec.expect(shape_ok && actual == expected, [&] { return bistr(n, i, j) + ": block mismatch"; });
        }
      }
    }
  }
  return rec.result();
}

CheckResult rank_kernel_properties(int samples, std::uint64_t seed) {
  Recorder rec("rank(M) = rank(M^T); kernel vectors solve M v = 0");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dim(1, 7);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::bernoulli_distribution sparse(0.4);
  for (int s = 0; s < samples; ++s) {
    const std::size_t rows = dim(rng);
    const std::size_t cols = dim(rng);
    const std::size_t inner = dim(rng);
    // Product of random factors, so low rank shows up regularly.
    RationalMatrix left(rows, inner);
    RationalMatrix right(inner, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < inner; ++c) left(r, c) = sparse(rng) ? 0 : entry(rng);
    }
    for (std::size_t r = 0; r < inner; ++r) {
      for (std::size_t c = 0; c < cols; ++c) right(r, c) = Rational(entry(rng), 1 + s % 3);
    }
    const RationalMatrix m = left * right;
    const std::size_t r = rank(m);
    rec.expect(r == rank(m.transpose()), [&] { return "rank asymmetry:\n" + to_csv(m); });
    const auto kernel = kernel_basis(m);
    rec.expect(kernel.size() == m.cols() - r, [&] { return "kernel size:\n" + to_csv(m); });
    for (const auto& v : kernel) {
      const Vector image = m * v;
      rec.expect(std::all_of(image.begin(), image.end(), [](const Rational& q) { return q == 0; }),
                 [&] { return "kernel vector not annihilated:\n" + to_csv(m); });
    }
  }
  return rec.result();
}

// ---------------------------------------------------------------------------
// Cohomology

CheckResult dimension_tables(int n_min, int n_max) {
  Recorder rec("dim ker tau and dim coker tau match the closed forms");
  for (int n = n_min; n <= n_max; ++n) {
    std::map<std::pair<int, int>, std::size_t> ranks;
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) ranks[{i, j}] = rank(tau_matrix(n, {i, j}));
    }
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) {
        const auto dim = static_cast<std::int64_t>(binomial(n, i) * binomial(n, j));
        const auto kernel = dim - static_cast<std::int64_t>(ranks[{i, j}]);
        const auto incoming = (i >= 1 && j + 1 <= n) ? static_cast<std::int64_t>(ranks[{i - 1, j + 1}]) : 0;
        rec.expect(kernel == h0_dimension(n, i, j), [&] {
          return bistr(n, i, j) + ": ker " + std::to_string(kernel) + " vs " + std::to_string(h0_dimension(n, i, j));
        });
        rec.expect(dim - incoming == h1_dimension(n, i, j), [&] {
          return bistr(n, i, j) + ": coker " + std::to_string(dim - incoming) + " vs " +
                 std::to_string(h1_dimension(n, i, j));
        });
        rec.expect(h0_dimension(n, i, j) == h1_dimension(n, n - i, n - j),
                   [&] { return bistr(n, i, j) + ": duality dimension mismatch"; });
      }
    }
  }
  return rec.result();
}

CheckResult tau_injective_surjective(int n_max) {
  Recorder rec("tau injective for i < j, surjective for i >= j");
  for (int n = 0; n <= n_max; ++n) {
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) {
        const RationalMatrix t = tau_matrix(n, {i, j});
        const std::size_t r = rank(t);
        const bool full_col = r == t.cols();
        const bool full_row = r == t.rows();
        rec.expect(i < j ? full_col : full_row, [&] { return bistr(n, i, j); });
        // Both only for the square case (i, i+1) -> (i+1, i).
        rec.expect(!(full_col && full_row) || j == i + 1 || t.cols() == 0,
                   [&] { return bistr(n, i, j) + ": unexpectedly bijective"; });
      }
    }
  }
  return rec.result();
}

CheckResult complementary_tau_power_bijective(int n_max) {
  Recorder rec("tau^(j-i): (i,j) -> (j,i) bijective");
  for (int n = 0; n <= n_max; ++n) {
    for (int i = 0; i <= n; ++i) {
      for (int j = i; j <= n; ++j) {
        const RationalMatrix t = tau_power_matrix(n, {i, j}, j - i);
        rec.expect(t.square() && is_invertible(t), [&] { return bistr(n, i, j); });
      }
    }
  }
  return rec.result();
}

CheckResult narayana_catalan(int formula_max, int brute_force_max) {
  Recorder rec("diagonal dims are Narayana numbers, sum Catalan, total C(2n+1,n)");
  for (int n = 1; n <= formula_max; ++n) {
    const DiagonalCensus census = diagonal_census(n);
    for (int i = 0; i <= n; ++i) {
      rec.expect(census.diagonal[static_cast<std::size_t>(i)] == narayana(n + 1, i + 1),
                 [&] { return nstr(n) + " diagonal " + std::to_string(i); });
    }
    rec.expect(census.diagonal_sum == catalan(n + 1), [&] { return nstr(n) + " Catalan sum"; });
    rec.expect(census.total == binomial(2 * n + 1, n), [&] { return nstr(n) + " total"; });
    if (n <= brute_force_max) {
      const DiagonalCensus brute = diagonal_census_brute_force(n);
      rec.expect(brute.diagonal == census.diagonal && brute.diagonal_sum == census.diagonal_sum &&
                     brute.total == census.total,
                 [&] { return nstr(n) + " brute-force census differs from the closed form"; });
    }
  }
  return rec.result();
}

CheckResult h0_basis_translation_invariant(int n_max) {
  Recorder rec("h0_basis vectors are independent and fixed by T");
  for (int n = 0; n <= n_max; ++n) {
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) {
        const BidegreeBasis basis = h0_basis(n, {i, j});
        rec.expect(static_cast<std::int64_t>(basis.size()) == h0_dimension(n, i, j),
                   [&] { return bistr(n, i, j) + ": basis size"; });
        rec.expect(rank(basis_columns(basis)) == basis.size(),
                   [&] { return bistr(n, i, j) + ": dependent basis"; });
        for (const auto& v : basis.vectors) {
          rec.expect(tau(v).is_zero() && translate(v) == v,
                     [&] { return bistr(n, i, j) + ": " + to_string(v); });
        }
      }
    }
  }
  return rec.result();
}

CheckResult lefschetz_invertible(int n_min, int n_max) {
  Recorder rec("ell^(n-i-j): H0_{i,j} -> H0_{n-j,n-i} invertible");
  for (int n = n_min; n <= n_max; ++n) {
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; i + j <= n; ++j) {
        const RationalMatrix l = lefschetz_matrix(n, i, j);
        rec.expect(l.square() && static_cast<std::int64_t>(l.rows()) == h0_dimension(n, i, j) &&
                       (l.rows() == 0 || is_invertible(l)),
                   [&] { return bistr(n, i, j); });
      }
    }
  }
  return rec.result();
}

CheckResult serre_duality(int n_min, int n_max, int samples, std::uint64_t seed) {
  Recorder rec("Serre pairing H0_{i,j} x H1_{n-i,n-j} perfect; <ker tau, im tau> = 0");
  std::mt19937_64 rng(seed);
  for (int n = n_min; n <= n_max; ++n) {
    const auto bases = all_h0_bases(n);
    for (const auto& [key, basis] : bases) {
      const auto [i, j] = key;
      const RationalMatrix gram = serre_gram(n, i, j);
      rec.expect(gram.square() && is_invertible(gram), [&] { return bistr(n, i, j) + ": gram singular"; });
    }
    std::vector<const BidegreeBasis*> nonzero;
    for (const auto& [key, basis] : bases) nonzero.push_back(&basis);
    std::uniform_int_distribution<std::size_t> pick(0, nonzero.size() - 1);
    for (int s = 0; s < samples; ++s) {
      const BidegreeBasis& basis = *nonzero[pick(rng)];
      const Element u = random_combination(basis, rng);
      const Bidegree d = basis.bidegree;
      const Element g = s % 4 == 3 ? random_element(n, rng, 12)
                                   : random_homogeneous(n, {n - d.alpha - 1, n - d.theta + 1}, rng, 8);
      rec.expect(pairing(u, tau(g)) == 0,
                 [&] { return nstr(n) + " u = " + to_string(u) + ", g = " + to_string(g); });
    }
  }
  return rec.result();
}

CheckResult characters_match_traces(int n_min, int n_max) {
  Recorder rec("H0 characters equal traces on the kernel basis");
  for (int n = n_min; n <= n_max; ++n) {
    const auto bases = all_h0_bases(n);
    for (const Permutation& w : all_permutations(n)) {
      const CycleType c{w.cycle_type()};
      for (const auto& [key, basis] : bases) {
        const auto [i, j] = key;
        const auto trace = character_trace_oracle(w, basis);
        rec.expect(trace.has_value() && trace->get_den() == 1 && *trace == Rational(h0_character(n, i, j, c)),
                   [&] {
                     std::ostringstream os;
                     os << bistr(n, i, j) << " w=";
                     for (int v : w.images()) os << v;
                     os << " trace " << (trace ? to_string(*trace) : std::string("<unstable>"));
                     return os.str();
                   });
      }
    }
  }
  return rec.result();
}

// ---------------------------------------------------------------------------
// Matchings

namespace {

// F_m vectors of NC(n,k) in coordinates over all degree-k monomials.
struct NcDegreeSpace {
  std::map<Monomial, std::size_t> index;
  std::vector<LabelledMatching> basis;
  std::unique_ptr<ColumnSpace> space;

  Vector coordinates_of(const Element& f) const {
    Vector v(index.size());
    for (const auto& [m, c] : f.terms()) v.at(index.at(m)) = c;
    return v;
  }
};

NcDegreeSpace nc_degree_space(int n, int k) {
  NcDegreeSpace out;
  for (Monomial m : all_monomials(n)) {
    if (m.degree() == k) out.index.emplace(m, out.index.size());
  }
  out.basis = enumerate_nc(n, k);
  std::vector<Vector> columns;
  for (const auto& m : out.basis) columns.push_back(out.coordinates_of(f_of_matching(m)));
  out.space = std::make_unique<ColumnSpace>(RationalMatrix::from_columns(columns, out.index.size()));
  return out;
}

void check_normal_form(Recorder& rec, SkeinReducer& reducer, std::map<int, NcDegreeSpace>& spaces,
                       const LabelledMatching& m) {
  const int n = m.n();
  const int k = m.degree();
  auto it = spaces.find(k);
  if (it == spaces.end()) it = spaces.emplace(k, nc_degree_space(n, k)).first;
  const NcDegreeSpace& space = it->second;
  const MatchingCombination& nf = reducer.reduce(m);
  const Element fm = f_of_matching(m);
  auto where = [&] { return to_string(m); };
  rec.expect(std::all_of(nf.terms().begin(), nf.terms().end(),
                         [&](const auto& term) { return in_nc(term.first) && term.first.degree() == k; }),
             where);
  rec.expect(expand(nf, n) == fm, where);
  const auto oracle = space.space->coordinates(space.coordinates_of(fm));
  bool same = oracle.has_value();
  for (std::size_t t = 0; same && t < space.basis.size(); ++t) {
    same = (*oracle)[t] == nf.coefficient(space.basis[t]);
  }
  rec.expect(same, [&] { return to_string(m) + ": NC coordinates differ from the linear-algebra oracle"; });
}

}  // namespace

CheckResult skein_normal_form(int exhaustive_max, int sample_rank, int samples, std::uint64_t seed) {
  Recorder rec("skein normal form is sound and matches NC coordinates");
  for (int n = 1; n <= exhaustive_max; ++n) {
    SkeinReducer reducer;
    std::map<int, NcDegreeSpace> spaces;
    for (const LabelledMatching& m : enumerate_phi(n)) check_normal_form(rec, reducer, spaces, m);
  }
  if (samples > 0) {
    std::mt19937_64 rng(seed);
    SkeinReducer reducer;
    std::map<int, NcDegreeSpace> spaces;
    for (int s = 0; s < samples; ++s) check_normal_form(rec, reducer, spaces, random_matching(sample_rank, rng));
  }
  return rec.result();
}

CheckResult nc_basis_of_h0(int n_max) {
  Recorder rec("{F_m : m in NC(n)} is a bigraded basis of H0");
  for (int n = 0; n <= n_max; ++n) {
    std::map<std::pair<int, int>, std::int64_t> per_bidegree;
    for (int k = 0; k <= 2 * n; ++k) {
      const NcDegreeSpace space = nc_degree_space(n, k);
      rec.expect(space.space->rank() == space.basis.size(),
                 [&] { return nstr(n) + " k=" + std::to_string(k) + ": dependent"; });
      for (const auto& m : space.basis) {
        ++per_bidegree[{m.bidegree().alpha, m.bidegree().theta}];
        rec.expect(tau(f_of_matching(m)).is_zero(), [&] { return to_string(m) + " not invariant"; });
      }
    }
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) {
        rec.expect(per_bidegree[{i, j}] == h0_dimension(n, i, j),
                   [&] { return bistr(n, i, j) + ": NC count differs from dim H0"; });
      }
    }
  }
  return rec.result();
}

CheckResult subset_bijection(int n_min, int n_max) {
  Recorder rec("NC(n,k) <-> subset pairs round trip and counts");
  {
    const SubsetPair example{{1, 2, 4, 5}, {3, 4, 6, 7, 8}};
    const LabelledMatching expected(8, {{2, 3}, {5, 6}, {1, 7}}, {8}, {4});
    const LabelledMatching built = matching_from_subsets(example, 8, 9);
    rec.expect(built == expected, [&] { return "worked example gave " + to_string(built); });
    rec.expect(subsets_from_matching(expected) == example, [&] { return "worked example inverse"; });
  }
  for (int n = n_min; n <= n_max; ++n) {
    for (int k = 0; k <= 2 * n; ++k) {
      const auto nc = enumerate_nc(n, k);
      const std::int64_t expected = binomial(n, k / 2) * binomial(n, (k + 1) / 2);
      rec.expect(static_cast<std::int64_t>(nc.size()) == expected,
                 [&] { return nstr(n) + " k=" + std::to_string(k) + ": |NC| = " + std::to_string(nc.size()); });
      std::set<LabelledMatching> image;
      for (const auto& a : subsets_lex(n, k / 2)) {
        for (const auto& b : subsets_lex(n, (k + 1) / 2)) {
          const SubsetPair p{a, b};
          const LabelledMatching m = matching_from_subsets(p, n, k);
          rec.expect(subsets_from_matching(m) == p, [&] { return nstr(n) + " " + to_string(p); });
          image.insert(m);
        }
      }
      rec.expect(std::equal(image.begin(), image.end(), nc.begin(), nc.end()),
                 [&] { return nstr(n) + " k=" + std::to_string(k) + ": image is not NC(n,k)"; });
      for (const auto& m : nc) {
        rec.expect(matching_from_subsets(subsets_from_matching(m), n, k) == m,
                   [&] { return to_string(m); });
      }
    }
    rec.expect(static_cast<std::int64_t>(enumerate_nc(n).size()) == binomial(2 * n + 1, n),
               [&] { return nstr(n) + ": |NC(n)| != C(2n+1,n)"; });
  }
  return rec.result();
}

CheckResult presentation_relations(int n_max) {
  Recorder rec("relations among basic invariants hold identically");
  const PresentationReport report = verify_presentation(n_max);
  for (std::size_t t = 0; t < report.identities_checked; ++t) {
    rec.expect(t >= report.violations.size(), [&] { return report.violations.front(); });
  }
  return rec.result();
}

CheckResult basic_products_translation_invariant(int n_max, int samples, std::uint64_t seed) {
  Recorder rec("every F_m is translation invariant");
  std::mt19937_64 rng(seed);
  for (int n = 1; n <= n_max; ++n) {
    for (int s = 0; s < samples; ++s) {
      const LabelledMatching m = random_matching(n, rng);
      const Element f = f_of_matching(m);
      rec.expect(translate(f) == f, [&] { return to_string(m); });
    }
  }
  return rec.result();
}

// ---------------------------------------------------------------------------

bool is_suite_name(std::string_view suite) {
  return suite == "core" || suite == "linalg" || suite == "cohomology" || suite == "matchings" || suite == "all";
}

SuiteReport run_suite(std::string_view suite, int n_max, std::uint64_t seed) {
  if (!is_suite_name(suite)) throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  const bool all = suite == "all";
  auto cap = [&](int limit) { return std::min(n_max, limit); };
  SuiteReport report;
  auto add = [&](CheckResult r) { report.checks.push_back(std::move(r)); };
  if (all || suite == "core") {
    add(translate_equals_exp_tau(0, cap(6)));
    add(fixed_points_are_tau_kernel(1, cap(5), 200, seed));
    add(sl2_relations(1, cap(5)));
    add(product_associative_supercommutative(cap(3), cap(6), 50, seed + 1));
    add(permutation_equivariance(cap(6), 50, seed + 2));
    add(tau_skew_adjoint(cap(5), 100, seed + 3));
    add(sign_free_transitions(cap(5)));
  }
  if (all || suite == "linalg") {
    add(boolean_complementary_invertible(1, std::min(12, 2 * n_max)));
    add(tau_power_block_structure(cap(5)));
    add(rank_kernel_properties(200, seed + 4));
  }
  if (all || suite == "cohomology") {
    add(dimension_tables(0, cap(6)));
    add(tau_injective_surjective(cap(6)));
    add(complementary_tau_power_bijective(cap(5)));
    add(narayana_catalan(std::max(n_max, 8), cap(5)));
    add(h0_basis_translation_invariant(cap(5)));
    add(lefschetz_invertible(1, cap(5)));
    add(serre_duality(1, cap(5), 100, seed + 5));
    add(characters_match_traces(1, cap(4)));
  }
  if (all || suite == "matchings") {
    add(skein_normal_form(cap(5), 6, n_max >= 6 ? 1000 : 0, seed + 6));
    add(nc_basis_of_h0(cap(5)));
    add(subset_bijection(1, cap(8)));
    add(presentation_relations(cap(6)));
    add(basic_products_translation_invariant(cap(6), 50, seed + 7));
  }
  return report;
}

}  // namespace supertorus::verify
