#include "hss/rational.hpp"

#include <limits>
#include <stdexcept>

namespace hss {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') i = 1;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '/') {
      if (seen_slash) throw std::invalid_argument("malformed rational: " + std::string(text));
      seen_slash = true;
    } else if (c >= '0' && c <= '9') {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw std::invalid_argument("malformed rational: " + std::string(text));
    }
  }
  if (!digit_before || (seen_slash && !digit_after))
    throw std::invalid_argument("malformed rational: " + std::string(text));
  std::string s(text[0] == '+' ? text.substr(1) : text);
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
  if (seen_slash && sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long to_long(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("rational is not integral: " + to_string(q));
  if (!q.get_num().fits_slong_p()) throw std::domain_error("integer out of range: " + to_string(q));
  return q.get_num().get_si();
}

std::string to_string(const GaussianRational& z) {
  if (z.is_real()) return to_string(z.re());
  std::string im = to_string(z.im());
  if (z.is_imaginary()) return im + "i";
  return to_string(z.re()) + (sgn(z.im()) > 0 ? "+" : "") + im + "i";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << to_string(z); }

}  // namespace hss
