#include "psos/f2poly.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace psos {

F2Poly F2Poly::from_bits(std::uint64_t bits) {
  F2Poly p;
  if (bits != 0) p.words_.push_back(bits);
  return p;
}

F2Poly F2Poly::from_coeffs(const std::vector<int>& coeffs) {
  F2Poly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] % 2 != 0) p.set_coeff(static_cast<int>(i), true);
  }
  return p;
}

int F2Poly::degree() const noexcept {
  if (words_.empty()) return -1;
  return static_cast<int>(64 * (words_.size() - 1)) + 63 - std::countl_zero(words_.back());
}

bool F2Poly::coeff(int i) const noexcept {
  if (i < 0) return false;
  const auto w = static_cast<std::size_t>(i) / 64;
  if (w >= words_.size()) return false;
  return (words_[w] >> (static_cast<unsigned>(i) % 64)) & 1U;
}

void F2Poly::set_coeff(int i, bool value) {
  const auto w = static_cast<std::size_t>(i) / 64;
  if (w >= words_.size()) {
    if (!value) return;
    words_.resize(w + 1, 0);
  }
  const std::uint64_t mask = std::uint64_t{1} << (static_cast<unsigned>(i) % 64);
  if (value) {
    words_[w] |= mask;
  } else {
    words_[w] &= ~mask;
  }
  trim();
}

void F2Poly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

F2Poly& F2Poly::operator+=(const F2Poly& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  trim();
  return *this;
}

namespace {

F2Poly shifted(const F2Poly& p, int by) {
  F2Poly r;
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coeff(i)) r.set_coeff(i + by, true);
  }
  return r;
}

}  // namespace

F2Poly operator*(const F2Poly& a, const F2Poly& b) {
  F2Poly r;
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.coeff(i)) r += shifted(b, i);
  }
  return r;
}

bool operator<(const F2Poly& a, const F2Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeff(i) != b.coeff(i)) return b.coeff(i);
  }
  return false;
}

F2Poly F2Poly::derivative() const {
  F2Poly d;
  for (int i = 1; i <= degree(); i += 2) {
    if (coeff(i)) d.set_coeff(i - 1, true);
  }
  return d;
}

F2Poly F2Poly::sqrt() const {
  if (!derivative().is_zero()) throw std::invalid_argument("F2 square root of a non-square");
  F2Poly r;
  for (int i = 0; i <= degree(); i += 2) {
    if (coeff(i)) r.set_coeff(i / 2, true);
  }
  return r;
}

std::string F2Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (!coeff(i)) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += "1";
    } else if (i == 1) {
      out += "x";
    } else {
      out += "x^" + std::to_string(i);
    }
  }
  return out;
}

std::pair<F2Poly, F2Poly> divmod(const F2Poly& a, const F2Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("F2 division by zero");
  F2Poly q, r = a;
  const int db = b.degree();
  while (r.degree() >= db) {
    const int s = r.degree() - db;
    q.set_coeff(s, true);
    r += shifted(b, s);
  }
  return {q, r};
}

F2Poly gcd(F2Poly a, F2Poly b) {
  while (!b.is_zero()) {
    F2Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

F2Bezout extended_gcd(const F2Poly& a, const F2Poly& b) {
  F2Poly r0 = a, r1 = b;
  F2Poly s0 = F2Poly::one(), s1;
  F2Poly t0, t1 = F2Poly::one();
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 + q * s1);
    t0 = std::exchange(t1, t0 + q * t1);
  }
  return {r0, s0, t0};
}

F2Poly mulmod(const F2Poly& a, const F2Poly& b, const F2Poly& modulus) { return divmod(a * b, modulus).second; }

F2Poly pow(const F2Poly& f, unsigned exponent) {
  F2Poly result = F2Poly::one();
  F2Poly base = f;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

namespace {

void squarefree_parts(const F2Poly& f, int scale, std::vector<std::pair<F2Poly, int>>& out) {
  if (f.degree() <= 0) return;
  const F2Poly fp = f.derivative();
  if (fp.is_zero()) {
    squarefree_parts(f.sqrt(), 2 * scale, out);
    return;
  }
  F2Poly c = gcd(f, fp);
  F2Poly w = divmod(f, c).first;
  int i = 1;
  while (w.degree() > 0) {
    const F2Poly y = gcd(w, c);
    const F2Poly fac = divmod(w, y).first;
    if (fac.degree() > 0) out.emplace_back(fac, i * scale);
    w = y;
    c = divmod(c, y).first;
    ++i;
  }
  if (c.degree() > 0) squarefree_parts(c.sqrt(), 2 * scale, out);
}

// Splits a square-free product of irreducibles all of degree d.
void equal_degree_split(const F2Poly& g, int d, std::vector<F2Poly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  // Trace map a + a^2 + ... + a^(2^(d-1)) mod g; some a splits g.
  for (std::uint64_t bits = 2;; ++bits) {
    const F2Poly a = divmod(F2Poly::from_bits(bits), g).second;
    F2Poly cur = a;
    F2Poly trace = a;
    for (int i = 1; i < d; ++i) {
      cur = mulmod(cur, cur, g);
      trace += cur;
    }
    const F2Poly h = gcd(g, trace);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree_split(h, d, out);
      equal_degree_split(divmod(g, h).first, d, out);
      return;
    }
    if (bits == ~std::uint64_t{0}) throw std::logic_error("equal-degree split failed");
  }
}

void distinct_degree_split(F2Poly f, std::vector<F2Poly>& out) {
  F2Poly h = F2Poly::x();
  for (int d = 1; f.degree() >= 2 * d; ++d) {
    h = mulmod(h, h, f);
    const F2Poly g = gcd(f, h + F2Poly::x());
    if (g.degree() > 0) {
      equal_degree_split(g, d, out);
      f = divmod(f, g).first;
      h = divmod(h, f).second;
    }
  }
  if (f.degree() > 0) out.push_back(f);
}

}  // namespace

std::vector<F2Factor> f2_factor(const F2Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("factorisation of the zero polynomial");
  std::vector<std::pair<F2Poly, int>> parts;
  squarefree_parts(f, 1, parts);
  std::map<F2Poly, int> merged;
  for (const auto& [part, mult] : parts) {
    std::vector<F2Poly> irreducibles;
    distinct_degree_split(part, irreducibles);
    for (const auto& p : irreducibles) merged[p] += mult;
  }
  std::vector<F2Factor> out;
  for (const auto& [p, m] : merged) out.push_back({p, m});
  return out;
}

}  // namespace psos
