#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "qhsp/errors.hpp"

namespace qhsp {

//------------------------------------------------------------------------------
// Exact rational scalar
//------------------------------------------------------------------------------

/// Exact rational number on int64 with __int128 intermediates. All results
/// are kept normalized (gcd 1, positive denominator); arithmetic that would
/// leave the int64 range throws OverflowError. The exact backend only ever
/// sees small numerators (weight computations, membership of rational
/// matrices), so 64 bits are plenty.
class Rational {
public:
  Rational() : m_num(0), m_den(1) {}
  Rational(std::int64_t n) : m_num(n), m_den(1) {}
  Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

  std::int64_t num() const { return m_num; }
  std::int64_t den() const { return m_den; }

  bool is_zero() const { return m_num == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.m_num) * b.m_den + i128(b.m_num) * a.m_den,
                i128(a.m_den) * b.m_den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.m_num) * b.m_den - i128(b.m_num) * a.m_den,
                i128(a.m_den) * b.m_den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.m_num) * b.m_num, i128(a.m_den) * b.m_den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.m_num == 0) throw DomainError("rational division by zero");
    return make(i128(a.m_num) * b.m_den, i128(a.m_den) * b.m_num);
  }
  Rational operator-() const { return Rational(-m_num, m_den); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.m_num == b.m_num && a.m_den == b.m_den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.m_num) * b.m_den < i128(b.m_num) * a.m_den;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }

  double to_double() const { return double(m_num) / double(m_den); }

  std::string str() const {
    if (m_den == 1) return std::to_string(m_num);
    return std::to_string(m_num) + "/" + std::to_string(m_den);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

private:
  using i128 = __int128;

  static Rational make(i128 n, i128 d) {
    Rational r;
    if (d == 0) throw DomainError("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw OverflowError("rational arithmetic overflow");
    r.m_num = std::int64_t(n);
    r.m_den = std::int64_t(d);
    return r;
  }
  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }
  void assign(std::int64_t n, std::int64_t d) {
    *this = make(i128(n), i128(d));
  }

  std::int64_t m_num;
  std::int64_t m_den;
};

inline Rational abs(const Rational& r) {
  return r.num() < 0 ? -r : r;
}

//------------------------------------------------------------------------------
// Exact Gaussian rational, Q(i)
//------------------------------------------------------------------------------

/// Element of Q(i). Only the operations the exact weight computation needs.
struct CRat {
  Rational re, im;

  CRat() = default;
  CRat(Rational r) : re(r), im(0) {}
  CRat(std::int64_t r) : re(r), im(0) {}
  CRat(Rational r, Rational i) : re(r), im(i) {}

  static CRat I() { return CRat(Rational(0), Rational(1)); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  friend CRat operator+(const CRat& a, const CRat& b) { return {a.re + b.re, a.im + b.im}; }
  friend CRat operator-(const CRat& a, const CRat& b) { return {a.re - b.re, a.im - b.im}; }
  CRat operator-() const { return {-re, -im}; }
  friend CRat operator*(const CRat& a, const CRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend CRat operator/(const CRat& a, const CRat& b) {
    Rational n = b.re * b.re + b.im * b.im;
    if (n.is_zero()) throw DomainError("division by zero in Q(i)");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  CRat conj() const { return {re, -im}; }

  CRat& operator+=(const CRat& o) { return *this = *this + o; }
  CRat& operator-=(const CRat& o) { return *this = *this - o; }
  CRat& operator*=(const CRat& o) { return *this = *this * o; }

  friend bool operator==(const CRat& a, const CRat& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }

  std::string str() const {
    if (im.is_zero()) return re.str();
    return re.str() + (im > Rational(0) ? "+" : "") + im.str() + "i";
  }
  friend std::ostream& operator<<(std::ostream& os, const CRat& c) { return os << c.str(); }
};

} // namespace qhsp
