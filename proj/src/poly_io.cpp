#include "psos/poly_io.hpp"

#include <cctype>
#include <map>

#include <json.hpp>

namespace psos {

namespace {

class HumanParser {
 public:
  explicit HumanParser(std::string_view text) : s_(text) {}

  RatPoly parse() {
    std::map<std::size_t, Rational> acc;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [coef, degree] = term();
      acc[degree] += sign * coef;
      first = false;
      skip_ws();
    }
    std::size_t top = acc.empty() ? 0 : acc.rbegin()->first;
    std::vector<Rational> coeffs(top + 1);
    for (const auto& [deg, c] : acc) coeffs[deg] = c;
    return RatPoly(std::move(coeffs));
  }

 private:
  std::pair<Rational, std::size_t> term() {
    if (peek() == 'x') return {Rational(1), monomial()};
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a coefficient or 'x'");
    Integer num(digits(), 10);
    Integer den(1);
    skip_ws();
    if (peek() == '/') {
      const std::size_t slash_at = pos_++;
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
      den = Integer(digits(), 10);
      if (den == 0) throw ParseError("zero denominator", slash_at);
      skip_ws();
    }
    Rational c(num, den);
    c.canonicalize();
    if (peek() == '*') {
      ++pos_;
      skip_ws();
      if (peek() != 'x') fail("expected 'x' after '*'");
      return {c, monomial()};
    }
    if (peek() == 'x') return {c, monomial()};
    return {c, 0};
  }

  std::size_t monomial() {
    ++pos_;  // 'x'
    skip_ws();
    if (peek() != '^') return 1;
    ++pos_;
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
    const std::size_t at = pos_;
    const std::string e = digits();
    if (e.size() > 6) throw ParseError("exponent too large", at);
    return static_cast<std::size_t>(std::stoul(e));
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view s_;
  std::size_t pos_ = 0;
};

RatPoly parse_json_array(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
  if (!j.is_array() || j.empty()) throw ParseError("coefficient array must be a non-empty JSON array", 0);
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].is_string()) {
      try {
        coeffs.push_back(parse_rational(j[i].get<std::string>()));
      } catch (const ParseError& e) {
        throw ParseError(std::string("entry ") + std::to_string(i) + ": " + e.what(), i);
      }
    } else if (j[i].is_number_integer()) {
      coeffs.emplace_back(Integer(j[i].dump(), 10));
    } else {
      throw ParseError("entry " + std::to_string(i) + " is not a string", i);
    }
  }
  return RatPoly(std::move(coeffs));
}

}  // namespace

RatPoly parse_poly(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '[') return parse_json_array(text);
  return HumanParser(text).parse();
}

std::string format_poly(const RatPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const Rational& c = f.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return out;
}

}  // namespace psos
