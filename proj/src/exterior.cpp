#include "supertorus/exterior.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <sstream>

#include "supertorus/combinatorics.hpp"
#include "supertorus/parse_error.hpp"

namespace supertorus {

namespace {

std::atomic<int> g_rank_limit{14};

void check_rank(int n) {
  if (n < 0) throw RankError("negative rank " + std::to_string(n));
  if (n > kMaxRepresentableRank) {
    throw RankError("rank " + std::to_string(n) + " exceeds the representable maximum " +
                    std::to_string(kMaxRepresentableRank));
  }
  if (n > g_rank_limit.load(std::memory_order_relaxed)) {
    throw RankError("rank " + std::to_string(n) + " exceeds the configured limit " +
                    std::to_string(g_rank_limit.load()));
  }
}

void check_same_rank(const Element& f, const Element& g) {
  if (f.n() != g.n()) {
    throw std::invalid_argument("rank mismatch: E_" + std::to_string(f.n()) + " vs E_" +
                                std::to_string(g.n()));
  }
}

// Bits strictly above `bit`.
constexpr std::uint32_t above(int bit) {
  return bit >= 31 ? 0U : ~((2U << bit) - 1U);
}

constexpr std::uint32_t below(int bit) { return (1U << bit) - 1U; }

// Sorts a word of generator bits into canonical order. Returns sign 0 when a
// generator repeats.
MonomialProduct canonicalize(std::span<const int> word) {
  std::uint32_t mask = 0;
  int inversions = 0;
  for (int b : word) {
    if ((mask >> b) & 1U) return {0, Monomial{}};
    inversions += std::popcount(mask & above(b));
    mask |= 1U << b;
  }
  return {inversions % 2 == 0 ? 1 : -1, Monomial{mask}};
}

std::uint32_t full_mask(int n) { return n == 0 ? 0U : (n >= 16 ? 0xFFFFFFFFU : (1U << (2 * n)) - 1U); }

}  // namespace

int rank_limit() { return g_rank_limit.load(); }

void set_rank_limit(int limit) {
  if (limit < 0 || limit > kMaxRepresentableRank) {
    throw std::invalid_argument("rank limit must lie in 0.." +
                                std::to_string(kMaxRepresentableRank));
  }
  g_rank_limit.store(limit);
}

std::vector<Generator> Monomial::generators() const {
  std::vector<Generator> out;
  for (std::uint32_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(Generator::from_bit(std::countr_zero(rest)));
  }
  return out;
}

MonomialProduct multiply(Monomial lhs, Monomial rhs) {
  if ((lhs.bits() & rhs.bits()) != 0) return {0, Monomial{}};
  int inversions = 0;
  for (std::uint32_t rest = rhs.bits(); rest != 0; rest &= rest - 1) {
    inversions += std::popcount(lhs.bits() & above(std::countr_zero(rest)));
  }
  return {inversions % 2 == 0 ? 1 : -1, Monomial{lhs.bits() | rhs.bits()}};
}

// ---------------------------------------------------------------------------
// Element

Element::Element(int n) : n_(n) { check_rank(n); }

Element::Element(int n, Monomial m, Rational coeff) : n_(n) {
  check_rank(n);
  if (m.min_rank() > n) {
    throw std::invalid_argument("monomial " + supertorus::to_string(m) + " is not in E_" +
                                std::to_string(n));
  }
  if (coeff != 0) terms_.emplace(m, std::move(coeff));
}

Element Element::generator(int n, Generator g) {
  if (g.index < 1 || g.index > n) {
    throw std::invalid_argument("generator index " + std::to_string(g.index) +
                                " out of range for E_" + std::to_string(n));
  }
  return Element(n, Monomial{1U << g.bit()});
}

Rational Element::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add_term(Monomial m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& other) {
  check_same_rank(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  check_same_rank(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, value] : terms_) value *= c;
  return *this;
}

Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
Element operator-(Element f) { return f *= Rational(-1); }
Element operator*(Element f, const Rational& c) { return f *= c; }
Element operator*(const Rational& c, Element f) { return f *= c; }

Element operator*(const Element& f, const Element& g) {
  check_same_rank(f, g);
  Element out(f.n());
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) {
      const auto product = multiply(mf, mg);
      if (product.sign == 0) continue;
      Rational c = cf * cg;
      if (product.sign < 0) c = -c;
      out.add_term(product.monomial, c);
    }
  }
  return out;
}

Element mul(const Element& f, const Element& g) { return f * g; }

Element power(const Element& f, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  Element out = Element::one(f.n());
  for (int k = 0; k < exponent && !out.is_zero(); ++k) out = out * f;
  return out;
}

// ---------------------------------------------------------------------------
// Derivations

Element partial(const Element& f, Generator g) {
  if (g.index < 1 || g.index > f.n()) {
    throw std::invalid_argument("derivative by a generator outside E_" + std::to_string(f.n()));
  }
  const int bit = g.bit();
  Element out(f.n());
  for (const auto& [m, c] : f.terms()) {
    if (!m.contains(g)) continue;
    int preceding = std::popcount(m.bits() & below(bit));
#ifdef SUPERTORUS_FAULT_FLIP_THETA_DERIVATIVE
    // Fault injection for the negative-control build only.
    if (g.kind == GeneratorKind::theta) ++preceding;
#endif
    out.add_term(Monomial{m.bits() & ~(1U << bit)}, preceding % 2 == 0 ? c : Rational(-c));
  }
  return out;
}

namespace {

// sum_i x_i * d/dy_i f where (x, y) = (alpha, theta) for tau and (theta, alpha) for sigma.
Element raise_by(const Element& f, GeneratorKind multiplier, GeneratorKind derivative) {
  Element out(f.n());
  for (int i = 1; i <= f.n(); ++i) {
    const Element d = partial(f, Generator{derivative, i});
    if (d.is_zero()) continue;
    out += Element::generator(f.n(), Generator{multiplier, i}) * d;
  }
  return out;
}

}  // namespace

Element tau(const Element& f) { return raise_by(f, GeneratorKind::alpha, GeneratorKind::theta); }

Element sigma(const Element& f) { return raise_by(f, GeneratorKind::theta, GeneratorKind::alpha); }

Element eta(const Element& f) {
  Element out(f.n());
  for (const auto& [m, c] : f.terms()) {
    out.add_term(m, c * (m.alpha_degree() - m.theta_degree()));
  }
  return out;
}

Element translate(const Element& f) {
  const int n = f.n();
  Element out(n);
  for (const auto& [m, c] : f.terms()) {
    Element image = Element::scalar(n, c);
    for (Generator g : m.generators()) {
      Element factor = Element::generator(n, g);
      if (g.kind == GeneratorKind::theta) factor += Element::generator(n, alpha(g.index));
      image = image * factor;
    }
    out += image;
  }
  return out;
}

Element exp_tau(const Element& f) {
  Element out = f;
  Element step = f;
  for (int k = 1; !step.is_zero(); ++k) {
    step = tau(step) * Rational(1, k);
    out += step;
  }
  return out;
}

Element lefschetz_element(int n) {
  Element out(n);
  for (int i = 1; i <= n; ++i) {
    out += Element::generator(n, alpha(i)) * Element::generator(n, theta(i));
  }
  return out;
}

Element volume_form(int n) {
  std::vector<int> word;
  for (int i = 1; i <= n; ++i) word.push_back(alpha(i).bit());
  for (int i = 1; i <= n; ++i) word.push_back(theta(i).bit());
  const auto canonical = canonicalize(word);
  return Element(n, canonical.monomial, canonical.sign);
}

// ---------------------------------------------------------------------------
// Bases indexed by subset pairs

namespace {

void check_index_set(const IndexSet& s, int n) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] < 1 || s[k] > n) {
      throw std::invalid_argument("index " + std::to_string(s[k]) + " outside 1.." +
                                  std::to_string(n));
    }
    if (k > 0 && s[k] <= s[k - 1]) throw std::invalid_argument("index set must be sorted and distinct");
  }
}

std::vector<int> m_prime_word(const IndexSet& a, const IndexSet& b, int n) {
  check_index_set(a, n);
  check_index_set(b, n);
  std::vector<int> both;
  std::vector<int> only_a;
  std::vector<int> only_b;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b));
  std::vector<int> word;
  for (int c : both) {
    word.push_back(alpha(c).bit());
    word.push_back(theta(c).bit());
  }
  for (int c : only_a) word.push_back(alpha(c).bit());
  for (int c : only_b) word.push_back(theta(c).bit());
  return word;
}

}  // namespace

Monomial m_basis(const IndexSet& a, const IndexSet& b, int n) {
  check_rank(n);
  check_index_set(a, n);
  check_index_set(b, n);
  std::uint32_t bits = 0;
  for (int i : a) bits |= 1U << alpha(i).bit();
  for (int i : b) bits |= 1U << theta(i).bit();
  return Monomial{bits};
}

std::pair<IndexSet, IndexSet> m_indices(Monomial m) {
  IndexSet a;
  IndexSet b;
  for (Generator g : m.generators()) (g.kind == GeneratorKind::alpha ? a : b).push_back(g.index);
  return {a, b};
}

int m_prime_sign(const IndexSet& a, const IndexSet& b, int n) {
  return canonicalize(m_prime_word(a, b, n)).sign;
}

Element m_prime_basis(const IndexSet& a, const IndexSet& b, int n) {
  check_rank(n);
  const auto canonical = canonicalize(m_prime_word(a, b, n));
  return Element(n, canonical.monomial, canonical.sign);
}

std::map<std::pair<IndexSet, IndexSet>, Rational> m_prime_coordinates(const Element& f) {
  std::map<std::pair<IndexSet, IndexSet>, Rational> out;
  for (const auto& [m, c] : f.terms()) {
    auto key = m_indices(m);
    const int sign = m_prime_sign(key.first, key.second, f.n());
    out.emplace(std::move(key), sign > 0 ? c : Rational(-c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Symmetric group

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(images_.size()));
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images = identity(n).images();
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k];
      if (from < 1 || from > n) throw std::invalid_argument("cycle entry out of range");
      images[static_cast<std::size_t>(from - 1)] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 1; start <= n(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    int length = 0;
    for (int i = start; !seen[static_cast<std::size_t>(i - 1)]; i = (*this)(i)) {
      seen[static_cast<std::size_t>(i - 1)] = true;
      ++length;
    }
    lengths.push_back(length);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images = Permutation::identity(n).images();
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Element permute(const Permutation& w, const Element& f) {
  if (w.n() != f.n()) throw std::invalid_argument("permutation rank does not match element rank");
  Element out(f.n());
  std::vector<int> word;
  for (const auto& [m, c] : f.terms()) {
    word.clear();
    for (Generator g : m.generators()) word.push_back(Generator{g.kind, w(g.index)}.bit());
    const auto canonical = canonicalize(word);
    out.add_term(canonical.monomial, canonical.sign > 0 ? c : Rational(-c));
  }
  return out;
}

Rational pairing(const Element& f, const Element& g) {
  check_same_rank(f, g);
  const std::uint32_t top = full_mask(f.n());
  const Element vol = volume_form(f.n());
  Rational top_coefficient = 0;
  for (const auto& [mf, cf] : f.terms()) {
    const Monomial complement{top & ~mf.bits()};
    auto it = g.terms().find(complement);
    if (it == g.terms().end()) continue;
    const auto product = multiply(mf, complement);
    top_coefficient += product.sign > 0 ? Rational(cf * it->second) : Rational(-(cf * it->second));
  }
  return top_coefficient / vol.coefficient(Monomial{top});
}

Element bidegree_component(const Element& f, Bidegree d) {
  Element out(f.n());
  for (const auto& [m, c] : f.terms()) {
    if (m.bidegree() == d) out.add_term(m, c);
  }
  return out;
}

std::vector<Monomial> monomials_of_bidegree(int n, Bidegree d) {
  check_rank(n);
  std::vector<Monomial> out;
  if (d.alpha < 0 || d.theta < 0 || d.alpha > n || d.theta > n) return out;
  const auto alpha_sets = subsets_lex(n, d.alpha);
  const auto theta_sets = subsets_lex(n, d.theta);
  out.reserve(alpha_sets.size() * theta_sets.size());
  for (const auto& a : alpha_sets) {
    for (const auto& b : theta_sets) out.push_back(m_basis(a, b, n));
  }
  return out;
}

std::vector<Monomial> all_monomials(int n) {
  check_rank(n);
  std::vector<Monomial> out;
  const std::uint64_t count = std::uint64_t{1} << (2 * n);
  out.reserve(count);
  for (std::uint64_t bits = 0; bits < count; ++bits) out.emplace_back(static_cast<std::uint32_t>(bits));
  return out;
}

// ---------------------------------------------------------------------------
// Literals

namespace {

class ElementParser {
 public:
  ElementParser(std::string_view text, int n) : text_(text), n_(n) {}

  Element parse() {
    Element out(n_);
    skip_ws();
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      parse_term(out, sign);
      first = false;
      skip_ws();
      if (pos_ == text_.size()) break;
    }
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return text_[pos_++]; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("element literal: " + what + " at offset " + std::to_string(pos_), pos_);
  }

  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(get());
    return out;
  }

  void parse_term(Element& out, int sign) {
    Rational coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string number = digits();
      if (peek() == '/') {
        get();
        const std::string den = digits();
        if (den.empty()) fail("expected denominator");
        number += "/" + den;
      }
      coeff = parse_rational(number);
      have_coeff = true;
      skip_ws();
      if (peek() == '*') {
        get();
        skip_ws();
        if (peek() != 'a' && peek() != 't') fail("expected generator after '*'");
      }
    }
    std::vector<int> word;
    while (peek() == 'a' || peek() == 't') {
      const std::size_t start = pos_;
      const GeneratorKind kind = get() == 'a' ? GeneratorKind::alpha : GeneratorKind::theta;
      const std::string index = digits();
      if (index.empty()) fail("expected generator index");
      const int i = std::stoi(index);
      if (i < 1 || i > n_) {
        pos_ = start;
        fail("generator index " + index + " outside 1.." + std::to_string(n_));
      }
      word.push_back(Generator{kind, i}.bit());
      skip_ws();
    }
    if (!have_coeff && word.empty()) fail("expected coefficient or generator");
    const auto canonical = canonicalize(word);
    if (canonical.sign == 0) return;
    coeff *= sign * canonical.sign;
    out.add_term(canonical.monomial, coeff);
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(std::string_view text, int n) { return ElementParser(text, n).parse(); }

std::string to_string(Monomial m) {
  if (m.bits() == 0) return "1";
  std::string out;
  for (Generator g : m.generators()) {
    if (!out.empty()) out += ' ';
    out += (g.kind == GeneratorKind::alpha ? 'a' : 't');
    out += std::to_string(g.index);
  }
  return out;
}

std::string to_string(const Element& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    os << to_string(Rational(abs(c)));
    if (m.bits() != 0) os << '*' << to_string(m);
    first = false;
  }
  return os.str();
}

}  // namespace supertorus
