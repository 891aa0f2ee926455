#include "dicut/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace dicut {

namespace {

[[noreturn]] void parse_fail(std::string_view s, const char* why) {
  throw std::invalid_argument("bad rational literal '" + std::string(s) +
                              "': " + why);
}

}  // namespace

Rat rat_from_string(std::string_view s) {
  // Trim surrounding whitespace.
  size_t first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) parse_fail(s, "empty");
  size_t last = s.find_last_not_of(" \t\r\n");
  s = s.substr(first, last - first + 1);

  const auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    std::string num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (num.empty() || den.empty()) parse_fail(s, "missing numerator or denominator");
    mpz_class n, d;
    if (n.set_str(num, 10) != 0) parse_fail(s, "numerator not an integer");
    if (d.set_str(den, 10) != 0) parse_fail(s, "denominator not an integer");
    if (d == 0) parse_fail(s, "zero denominator");
    Rat q(n, d);
    q.canonicalize();
    return q;
  }

  // Decimal / scientific literal: sign, digits, optional '.', optional exp.
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_digit = false, seen_dot = false;
  for (; i < s.size(); ++i) {
    char ch = s[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else if (ch == '.') {
      if (seen_dot) parse_fail(s, "repeated '.'");
      seen_dot = true;
    } else if (ch == 'e' || ch == 'E') {
      break;
    } else {
      parse_fail(s, "unexpected character");
    }
  }
  if (!seen_digit) parse_fail(s, "no digits");
  long exp10 = 0;
  if (i < s.size()) {  // exponent part
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = s[i++] == '-';
    if (i >= s.size()) parse_fail(s, "empty exponent");
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) parse_fail(s, "bad exponent");
      exp10 = exp10 * 10 + (s[i] - '0');
      if (exp10 > 100000) parse_fail(s, "exponent too large");
    }
    if (eneg) exp10 = -exp10;
  }

  mpz_class mant(digits.empty() ? std::string("0") : digits, 10);
  if (neg) mant = -mant;
  long net = exp10 - frac_digits;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(net)));
  Rat q;
  if (net >= 0) {
    q = Rat(mant * pow10);
  } else {
    q = Rat(mant, pow10);
  }
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double rat_to_double(const Rat& q) { return q.get_d(); }

Rat rat_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
  Rat q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

std::string decimal17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

Sqrt2Num Sqrt2Num::inverse() const {
  // 1/(a + b sqrt2) = (a - b sqrt2) / (a^2 - 2 b^2)
  Rat norm = a * a - 2 * b * b;
  if (norm == 0) throw std::domain_error("division by zero in Q(sqrt2)");
  return {a / norm, -b / norm};
}

int Sqrt2Num::sign() const {
  int sa = sgn(a), sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with 2 b^2; sign follows the larger term.
  Rat a2 = a * a, b22 = 2 * b * b;
  if (a2 == b22) return 0;
  return a2 > b22 ? sa : sb;
}

double Sqrt2Num::to_double() const {
  return rat_to_double(a) + rat_to_double(b) * std::sqrt(2.0);
}

}  // namespace dicut
