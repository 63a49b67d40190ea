#include "supertorus/matching.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <sstream>

#include "supertorus/parse_error.hpp"

namespace supertorus {

namespace {

bool contains_sorted(const std::vector<int>& v, int x) { return std::binary_search(v.begin(), v.end(), x); }

std::vector<int> without(std::vector<int> v, int x) {
  v.erase(std::remove(v.begin(), v.end(), x), v.end());
  return v;
}

std::vector<int> with(std::vector<int> v, int x) {
  v.insert(std::upper_bound(v.begin(), v.end(), x), x);
  return v;
}

int count_between(const std::vector<int>& sorted, int lo, int hi) {
  return static_cast<int>(std::upper_bound(sorted.begin(), sorted.end(), hi - 1) -
                          std::upper_bound(sorted.begin(), sorted.end(), lo));
}

Element basic_arc(int n, int i, int j) {
  return Element::generator(n, alpha(i)) * Element::generator(n, theta(j)) +
         Element::generator(n, alpha(j)) * Element::generator(n, theta(i));
}

Element basic_diagonal(int n, int i) {
  return Element::generator(n, alpha(i)) * Element::generator(n, theta(i));
}

}  // namespace

// ---------------------------------------------------------------------------

LabelledMatching::LabelledMatching(int n, std::vector<Arc> arcs, std::vector<int> alpha,
                                   std::vector<int> alphatheta)
    : n_(n), arcs_(std::move(arcs)), alpha_(std::move(alpha)), alphatheta_(std::move(alphatheta)) {
  if (n < 0) throw InvalidMatching("negative vertex count");
  std::vector<int> owner(static_cast<std::size_t>(n) + 1, 0);
  auto claim = [&](int v, const char* what) {
    if (v < 1 || v > n) {
      throw InvalidMatching(std::string(what) + " vertex " + std::to_string(v) + " outside 1.." +
                            std::to_string(n));
    }
    if (owner[static_cast<std::size_t>(v)]++ != 0) {
      throw InvalidMatching("vertex " + std::to_string(v) + " is used more than once");
    }
  };
  for (Arc& a : arcs_) {
    if (a.left == a.right) throw InvalidMatching("arc joins vertex " + std::to_string(a.left) + " to itself");
    if (a.left > a.right) std::swap(a.left, a.right);
    claim(a.left, "arc");
    claim(a.right, "arc");
  }
  for (int v : alpha_) claim(v, "alpha");
  for (int v : alphatheta_) claim(v, "alpha-theta");
  std::sort(arcs_.begin(), arcs_.end());
  std::sort(alpha_.begin(), alpha_.end());
  std::sort(alphatheta_.begin(), alphatheta_.end());
}

int LabelledMatching::degree() const {
  return static_cast<int>(alpha_.size() + 2 * alphatheta_.size() + 2 * arcs_.size());
}

Bidegree LabelledMatching::bidegree() const {
  const int shared = static_cast<int>(alphatheta_.size() + arcs_.size());
  return {static_cast<int>(alpha_.size()) + shared, shared};
}

MatchingCombination::MatchingCombination(const LabelledMatching& m, Rational c) { add(m, c); }

void MatchingCombination::add(const LabelledMatching& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MatchingCombination::add_scaled(const MatchingCombination& other, const Rational& c) {
  for (const auto& [m, coeff] : other.terms_) add(m, coeff * c);
}

Rational MatchingCombination::coefficient(const LabelledMatching& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Element f_of_matching(const LabelledMatching& m) {
  const int n = m.n();
  Element out = Element::one(n);
  for (int v : m.alpha()) out = out * Element::generator(n, alpha(v));
  for (int v : m.alphatheta()) out = out * basic_diagonal(n, v);
  for (const Arc& a : m.arcs()) out = out * basic_arc(n, a.left, a.right);
  return out;
}

Element expand(const MatchingCombination& c, int n) {
  Element out(n);
  for (const auto& [m, coeff] : c.terms()) {
    if (m.n() != n) throw std::invalid_argument("matching size does not match rank");
    out += f_of_matching(m) * coeff;
  }
  return out;
}

std::vector<Crossing> crossing_quadruples(const LabelledMatching& m) {
  std::vector<Crossing> out;
  const auto& arcs = m.arcs();
  for (std::size_t p = 0; p < arcs.size(); ++p) {
    for (std::size_t q = p + 1; q < arcs.size(); ++q) {
      const Arc& a = arcs[p];  // a.left < b.left since arcs are sorted
      const Arc& b = arcs[q];
      if (b.left < a.right && a.right < b.right) out.push_back({a.left, b.left, a.right, b.right});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int crossings(const LabelledMatching& m) { return static_cast<int>(crossing_quadruples(m).size()); }

int alpha_nestings(const LabelledMatching& m) {
  int count = 0;
  for (const Arc& a : m.arcs()) count += count_between(m.alpha(), a.left, a.right);
  return count;
}

bool in_nc(const LabelledMatching& m) { return crossings(m) == 0 && alpha_nestings(m) == 0; }

// ---------------------------------------------------------------------------
// Skein relations

MatchingCombination skein_uncross(const LabelledMatching& m, const Crossing& q) {
  const auto& arcs = m.arcs();
  const Arc first{q.i, q.k};
  const Arc second{q.j, q.l};
  if (!(q.i < q.j && q.j < q.k && q.k < q.l) ||
      !std::binary_search(arcs.begin(), arcs.end(), first) ||
      !std::binary_search(arcs.begin(), arcs.end(), second)) {
    throw SkeinPatternError("(" + std::to_string(q.i) + "," + std::to_string(q.j) + "," +
                            std::to_string(q.k) + "," + std::to_string(q.l) +
                            ") is not a crossing of " + to_string(m));
  }
  std::vector<Arc> rest;
  for (const Arc& a : arcs) {
    if (a != first && a != second) rest.push_back(a);
  }
  auto resolved = [&](Arc x, Arc y) {
    std::vector<Arc> next = rest;
    next.push_back(x);
    next.push_back(y);
    return LabelledMatching(m.n(), std::move(next), m.alpha(), m.alphatheta());
  };
  MatchingCombination out;
  out.add(resolved({q.i, q.j}, {q.k, q.l}), -1);
  out.add(resolved({q.i, q.l}, {q.j, q.k}), -1);
  return out;
}

MatchingCombination skein_move_alpha(const LabelledMatching& m, const Arc& arc, int vertex) {
  const auto& arcs = m.arcs();
  if (!(arc.left < vertex && vertex < arc.right) ||
      !std::binary_search(arcs.begin(), arcs.end(), arc) || !contains_sorted(m.alpha(), vertex)) {
    throw SkeinPatternError("no alpha label at " + std::to_string(vertex) + " under arc (" +
                            std::to_string(arc.left) + "," + std::to_string(arc.right) + ") in " +
                            to_string(m));
  }
  std::vector<Arc> rest;
  for (const Arc& a : arcs) {
    if (a != arc) rest.push_back(a);
  }
  const std::vector<int> others = without(m.alpha(), vertex);
  auto moved = [&](Arc replacement, int new_alpha) {
    std::vector<Arc> next = rest;
    next.push_back(replacement);
    return LabelledMatching(m.n(), std::move(next), with(others, new_alpha), m.alphatheta());
  };
  // Reordering the alpha product when the label moves past other alpha labels.
  auto sign = [&](int lo, int hi) { return count_between(others, lo, hi) % 2 == 0 ? -1 : 1; };
  MatchingCombination out;
  out.add(moved({arc.left, vertex}, arc.right), sign(vertex, arc.right));
  out.add(moved({vertex, arc.right}, arc.left), sign(arc.left, vertex));
  return out;
}

const MatchingCombination& SkeinReducer::reduce(const LabelledMatching& m) {
  if (auto it = memo_.find(m); it != memo_.end()) return it->second;

  std::optional<MatchingCombination> rewrite;
  if (const auto quadruples = crossing_quadruples(m); !quadruples.empty()) {
    rewrite = skein_uncross(m, quadruples.front());
  } else {
    for (int v : m.alpha()) {
      const Arc* shortest = nullptr;
      for (const Arc& a : m.arcs()) {
        if (a.left < v && v < a.right &&
            (shortest == nullptr || a.right - a.left < shortest->right - shortest->left)) {
          shortest = &a;
        }
      }
      if (shortest != nullptr) {
        rewrite = skein_move_alpha(m, *shortest, v);
        break;
      }
    }
  }

  MatchingCombination result;
  if (!rewrite) {
    result.add(m, 1);
  } else {
    for (const auto& [term, coeff] : rewrite->terms()) result.add_scaled(reduce(term), coeff);
  }
  return memo_.emplace(m, std::move(result)).first->second;
}

MatchingCombination normal_form(const LabelledMatching& m) {
  SkeinReducer reducer;
  return reducer.reduce(m);
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<LabelledMatching> enumerate_phi(int n) {
  std::vector<LabelledMatching> out;
  std::vector<int> partner(static_cast<std::size_t>(n) + 2, 0);
  std::vector<Arc> arcs;
  std::vector<int> alpha_labels;
  std::vector<int> alphatheta_labels;
  std::function<void(int)> rec = [&](int v) {
    if (v > n) {
      out.emplace_back(n, arcs, alpha_labels, alphatheta_labels);
      return;
    }
    if (partner[static_cast<std::size_t>(v)] != 0) {
      rec(v + 1);
      return;
    }
    rec(v + 1);
    alpha_labels.push_back(v);
    rec(v + 1);
    alpha_labels.pop_back();
    alphatheta_labels.push_back(v);
    rec(v + 1);
    alphatheta_labels.pop_back();
    for (int w = v + 1; w <= n; ++w) {
      if (partner[static_cast<std::size_t>(w)] != 0) continue;
      partner[static_cast<std::size_t>(w)] = v;
      arcs.push_back({v, w});
      rec(v + 1);
      arcs.pop_back();
      partner[static_cast<std::size_t>(w)] = 0;
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Scans left to right keeping the open arcs on a stack: an alpha label is only
// allowed with no open arc, and only the innermost open arc may close.
void enumerate_nc_into(int n, std::optional<int> degree, std::vector<LabelledMatching>& out) {
  std::vector<int> open;
  std::vector<Arc> arcs;
  std::vector<int> alpha_labels;
  std::vector<int> alphatheta_labels;
  std::function<void(int, int)> rec = [&](int v, int deg) {
    if (degree && deg > *degree) return;
    if (static_cast<int>(open.size()) > n - v + 1) return;
    if (v > n) {
      if (!degree || deg == *degree) out.emplace_back(n, arcs, alpha_labels, alphatheta_labels);
      return;
    }
    rec(v + 1, deg);
    if (open.empty()) {
      alpha_labels.push_back(v);
      rec(v + 1, deg + 1);
      alpha_labels.pop_back();
    }
    alphatheta_labels.push_back(v);
    rec(v + 1, deg + 2);
    alphatheta_labels.pop_back();
    open.push_back(v);
    rec(v + 1, deg + 2);
    open.pop_back();
    if (!open.empty()) {
      const int left = open.back();
      open.pop_back();
      arcs.push_back({left, v});
      rec(v + 1, deg);
      arcs.pop_back();
      open.push_back(left);
    }
  };
  rec(1, 0);
  std::sort(out.begin(), out.end());
}

}  // namespace

std::vector<LabelledMatching> enumerate_nc(int n, int k) {
  std::vector<LabelledMatching> out;
  if (k < 0 || k > 2 * n) return out;
  enumerate_nc_into(n, k, out);
  return out;
}

std::vector<LabelledMatching> enumerate_nc(int n) {
  std::vector<LabelledMatching> out;
  enumerate_nc_into(n, std::nullopt, out);
  return out;
}

LabelledMatching random_matching(int n, std::mt19937_64& rng) {
  std::vector<int> vertices(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) vertices[static_cast<std::size_t>(v - 1)] = v;
  std::shuffle(vertices.begin(), vertices.end(), rng);
  const int arc_count = std::uniform_int_distribution<int>(0, n / 2)(rng);
  std::vector<Arc> arcs;
  std::vector<int> alpha_labels;
  std::vector<int> alphatheta_labels;
  std::size_t pos = 0;
  for (int a = 0; a < arc_count; ++a, pos += 2) arcs.push_back({vertices[pos], vertices[pos + 1]});
  std::uniform_int_distribution<int> label(0, 2);
  for (; pos < vertices.size(); ++pos) {
    switch (label(rng)) {
      case 1: alpha_labels.push_back(vertices[pos]); break;
      case 2: alphatheta_labels.push_back(vertices[pos]); break;
      default: break;
    }
  }
  return LabelledMatching(n, std::move(arcs), std::move(alpha_labels), std::move(alphatheta_labels));
}

// ---------------------------------------------------------------------------
// Subset pairs

LabelledMatching matching_from_subsets(const SubsetPair& p, int n, int k) {
  if (static_cast<int>(p.a.size()) != k / 2 || static_cast<int>(p.b.size()) != (k + 1) / 2) {
    throw std::invalid_argument("subset sizes must be floor(k/2) and ceil(k/2)");
  }
  for (const IndexSet* s : {&p.a, &p.b}) {
    for (std::size_t t = 0; t < s->size(); ++t) {
      if ((*s)[t] < 1 || (*s)[t] > n || (t > 0 && (*s)[t] <= (*s)[t - 1])) {
        throw std::invalid_argument("subsets must be sorted, distinct and inside 1..n");
      }
    }
  }
  std::vector<int> open;
  std::vector<Arc> arcs;
  std::vector<int> alpha_labels;
  std::vector<int> alphatheta_labels;
  std::vector<int> unmatched_b;
  for (int v = 1; v <= n; ++v) {
    const bool in_a = contains_sorted(p.a, v);
    const bool in_b = contains_sorted(p.b, v);
    if (in_a && in_b) {
      alphatheta_labels.push_back(v);
    } else if (in_a) {
      open.push_back(v);
    } else if (in_b) {
      if (open.empty()) {
        alpha_labels.push_back(v);
        unmatched_b.push_back(v);
      } else {
        arcs.push_back({open.back(), v});
        open.pop_back();
      }
    }
  }
  alpha_labels.insert(alpha_labels.end(), open.begin(), open.end());
  LabelledMatching m(n, std::move(arcs), std::move(alpha_labels), std::move(alphatheta_labels));

  const bool b_before_a = unmatched_b.empty() || open.empty() || unmatched_b.back() < open.front();
  if (m.degree() != k || !in_nc(m) || !b_before_a) {
    throw std::logic_error("matching_from_subsets produced an invalid matching for " + to_string(p));
  }
  return m;
}

SubsetPair subsets_from_matching(const LabelledMatching& m) {
  if (!in_nc(m)) throw std::invalid_argument(to_string(m) + " is not in NC(n)");
  const int k = m.degree();
  SubsetPair out;
  for (const Arc& arc : m.arcs()) {
    out.a.push_back(arc.left);
    out.b.push_back(arc.right);
  }
  for (int v : m.alphatheta()) {
    out.a.push_back(v);
    out.b.push_back(v);
  }
  const std::size_t to_b = static_cast<std::size_t>((k + 1) / 2) - out.b.size();
  for (std::size_t t = 0; t < m.alpha().size(); ++t) (t < to_b ? out.b : out.a).push_back(m.alpha()[t]);
  std::sort(out.a.begin(), out.a.end());
  std::sort(out.b.begin(), out.b.end());
  return out;
}

// ---------------------------------------------------------------------------

PresentationReport verify_presentation(int n, int skein_rank_cap) {
  PresentationReport report;
  auto check = [&](const Element& lhs, const Element& rhs, const std::string& what) {
    ++report.identities_checked;
    if (lhs != rhs) report.violations.push_back(what + ": " + to_string(lhs) + " != " + to_string(rhs));
  };
  const Element zero(n);
  for (int i = 1; i <= n; ++i) {
    const Element a = Element::generator(n, alpha(i));
    const Element d = basic_diagonal(n, i);
    const std::string si = std::to_string(i);
    check(a * a, zero, "a" + si + "^2 = 0");
    check(d * d, zero, "(a" + si + " t" + si + ")^2 = 0");
    check(tau(a), zero, "tau(a" + si + ") = 0");
    check(tau(d), zero, "tau(a" + si + " t" + si + ") = 0");
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      const std::string sij = si + "," + std::to_string(j);
      const Element b = basic_arc(n, i, j);
      const Element aj = Element::generator(n, alpha(j));
      check(tau(b), zero, "tau(b" + sij + ") = 0");
      check(d * b, zero, "(a_i t_i) b_ij = 0 at " + sij);
      check(b * b, Rational(-2) * (d * basic_diagonal(n, j)), "b_ij^2 = -2 (a_i t_i)(a_j t_j) at " + sij);
      check(a * b, -(aj * d), "a_i b_ij = -a_j (a_i t_i) at " + sij);
    }
  }
  const int r = std::min(n, skein_rank_cap);
  for (const LabelledMatching& m : enumerate_phi(r)) {
    const Element fm = f_of_matching(m);
    for (const Crossing& q : crossing_quadruples(m)) {
      check(fm, expand(skein_uncross(m, q), r), "uncross " + to_string(m));
    }
    for (const Arc& arc : m.arcs()) {
      for (int v : m.alpha()) {
        if (arc.left < v && v < arc.right) {
          check(fm, expand(skein_move_alpha(m, arc, v), r), "move alpha " + to_string(m));
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Literals

namespace {

class MatchingParser {
 public:
  explicit MatchingParser(std::string_view text) : text_(text) {}

  LabelledMatching parse() {
    std::optional<int> n;
    std::vector<Arc> arcs;
    std::vector<int> alpha_labels;
    std::vector<int> alphatheta_labels;
    std::vector<std::string> seen;
    skip_ws();
    while (pos_ < text_.size()) {
      const std::size_t key_pos = pos_;
      std::string key;
      while (std::isalpha(static_cast<unsigned char>(peek()))) key.push_back(get());
      if (key.empty()) fail("expected a section name (n, arcs, a, at)");
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
        fail_at("duplicate section '" + key + "'", key_pos);
      }
      seen.push_back(key);
      skip_ws();
      expect('=');
      skip_ws();
      if (key == "n") {
        n = integer();
      } else if (key == "arcs") {
        arcs = arc_list();
      } else if (key == "a" || key == "alpha") {
        alpha_labels = integer_list();
      } else if (key == "at" || key == "alphatheta") {
        alphatheta_labels = integer_list();
      } else {
        fail_at("unknown section '" + key + "'", key_pos);
      }
      skip_ws();
      if (pos_ == text_.size()) break;
      expect(';');
      skip_ws();
    }
    if (!n) fail("missing section 'n'");
    return LabelledMatching(*n, std::move(arcs), std::move(alpha_labels), std::move(alphatheta_labels));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return text_[pos_++]; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    throw ParseError("matching literal: " + what + " at offset " + std::to_string(at), at);
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int integer() {
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(get());
    if (digits.empty()) fail("expected an integer");
    if (digits.size() > 6) fail("integer too large");
    return std::stoi(digits);
  }

  bool at_list_end() const { return pos_ == text_.size() || peek() == ';'; }

  std::vector<int> integer_list() {
    std::vector<int> out;
    if (at_list_end()) return out;
    while (true) {
      out.push_back(integer());
      skip_ws();
      if (peek() != ',') break;
      get();
      skip_ws();
    }
    return out;
  }

  std::vector<Arc> arc_list() {
    std::vector<Arc> out;
    if (at_list_end()) return out;
    while (true) {
      expect('(');
      skip_ws();
      const int left = integer();
      skip_ws();
      expect(',');
      skip_ws();
      const int right = integer();
      skip_ws();
      expect(')');
      out.push_back({left, right});
      skip_ws();
      if (peek() != ',') break;
      get();
      skip_ws();
    }
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (t > 0) out += ',';
    out += std::to_string(v[t]);
  }
  return out;
}

}  // namespace

LabelledMatching parse_matching(std::string_view text) { return MatchingParser(text).parse(); }

std::string to_string(const LabelledMatching& m) {
  std::ostringstream os;
  os << "n=" << m.n();
  if (!m.arcs().empty()) {
    os << "; arcs=";
    for (std::size_t t = 0; t < m.arcs().size(); ++t) {
      if (t > 0) os << ',';
      os << '(' << m.arcs()[t].left << ',' << m.arcs()[t].right << ')';
    }
  }
  if (!m.alpha().empty()) os << "; a=" << join(m.alpha());
  if (!m.alphatheta().empty()) os << "; at=" << join(m.alphatheta());
  return os.str();
}

std::string to_string(const SubsetPair& p) { return "A={" + join(p.a) + "} B={" + join(p.b) + "}"; }

}  // namespace supertorus
