#include "supertorus/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace supertorus {

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  auto is_integer = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
  Integer p(num.front() == '+' ? num.substr(1) : num, 10);
  Integer q(den, 10);
  if (q == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational out(p, q);
  out.canonicalize();
  return out;
}

}  // namespace supertorus
