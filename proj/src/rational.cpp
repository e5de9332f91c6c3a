#include "psos/rational.hpp"

#include <cctype>

namespace psos {

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  const auto slash = s.find('/');
  std::string_view num = trim(s.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : trim(s.substr(slash + 1));
  if (!is_integer_literal(num)) throw ParseError("malformed rational '" + std::string(text) + "'", 0);
  if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("malformed denominator in '" + std::string(text) + "'", slash);
  }
  if (num.front() == '+') num.remove_prefix(1);
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash);
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

Integer pow2(unsigned long exponent) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, exponent);
  return r;
}

Rational pow2q(long exponent) {
  if (exponent >= 0) return Rational(pow2(static_cast<unsigned long>(exponent)));
  return Rational(Integer(1), pow2(static_cast<unsigned long>(-exponent)));
}

long ord2(const Integer& z) {
  if (z == 0) throw PreconditionError("ord2 of zero is +infinity");
  return static_cast<long>(mpz_scan1(z.get_mpz_t(), 0));
}

Integer mod_nonneg(const Integer& z, const Integer& modulus) {
  Integer r;
  mpz_mod(r.get_mpz_t(), z.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

}  // namespace psos
