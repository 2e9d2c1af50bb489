#pragma once

#include <Eigen/Core>
#include <cmath>
#include <complex>
#include <ostream>

#include "qhsp/scalars.hpp"

namespace qhsp {

//------------------------------------------------------------------------------
// Quaternion scalar, dual backend
//------------------------------------------------------------------------------

/// Quaternion over a scalar backend S (double for the float backend,
/// Rational for the exact one). Values are immutable in spirit: every
/// operation returns a fresh value. H is viewed as C + jC with
/// q = (a + ib) + j(c - id) for q = a + bi + cj + dk, which is the
/// convention the complexification below relies on.
template <class S>
struct Quat {
  S w{}, x{}, y{}, z{}; // w + x i + y j + z k

  Quat() = default;
  Quat(S re) : w(re) {}
  Quat(S re, S i, S j, S k) : w(re), x(i), y(j), z(k) {}

  static Quat I() { return Quat(S(0), S(1), S(0), S(0)); }
  static Quat J() { return Quat(S(0), S(0), S(1), S(0)); }
  static Quat K() { return Quat(S(0), S(0), S(0), S(1)); }

  friend Quat operator+(const Quat& p, const Quat& q) {
    return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z};
  }
  friend Quat operator-(const Quat& p, const Quat& q) {
    return {p.w - q.w, p.x - q.x, p.y - q.y, p.z - q.z};
  }
  Quat operator-() const { return {-w, -x, -y, -z}; }

  /// Hamilton product.
  friend Quat operator*(const Quat& p, const Quat& q) {
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
  }

  friend Quat operator*(const S& s, const Quat& q) { return {s * q.w, s * q.x, s * q.y, s * q.z}; }
  friend Quat operator*(const Quat& q, const S& s) { return {q.w * s, q.x * s, q.y * s, q.z * s}; }
  friend Quat operator/(const Quat& q, const S& s) { return {q.w / s, q.x / s, q.y / s, q.z / s}; }
  /// Right division q p^{-1}.
  friend Quat operator/(const Quat& q, const Quat& p) { return q * p.inverse(); }

  Quat& operator+=(const Quat& q) { return *this = *this + q; }
  Quat& operator-=(const Quat& q) { return *this = *this - q; }
  Quat& operator*=(const Quat& q) { return *this = *this * q; }

  friend bool operator==(const Quat& p, const Quat& q) {
    return p.w == q.w && p.x == q.x && p.y == q.y && p.z == q.z;
  }
  friend bool operator!=(const Quat& p, const Quat& q) { return !(p == q); }

  Quat conj() const { return {w, -x, -y, -z}; }
  Quat imag() const { return {S(0), x, y, z}; }
  S norm_sq() const { return w * w + x * x + y * y + z * z; }
  Quat inverse() const { return conj() / norm_sq(); }

  bool is_zero() const { return *this == Quat(); }

  friend std::ostream& operator<<(std::ostream& os, const Quat& q) {
    return os << "(" << q.w << "," << q.x << "," << q.y << "," << q.z << ")";
  }
};

template <class S> Quat<S> qmul(const Quat<S>& p, const Quat<S>& q) { return p * q; }
template <class S> Quat<S> qconj(const Quat<S>& q) { return q.conj(); }
template <class S> Quat<S> qimag(const Quat<S>& q) { return q.imag(); }

/// Lie bracket pq - qp; twice the cross product on imaginary parts.
template <class S> Quat<S> qbracket(const Quat<S>& p, const Quat<S>& q) {
  return p * q - q * p;
}

using Qd = Quat<double>;
using Ql = Quat<long double>;
using Qr = Quat<Rational>;

template <class S> S qabs(const Quat<S>& q) { return std::sqrt(q.norm_sq()); }

/// The (alpha, beta) pair with q = alpha + j beta, alpha, beta complex.
template <class S>
std::pair<std::complex<S>, std::complex<S>> split_cj(const Quat<S>& q) {
  return {{q.w, q.x}, {q.y, -q.z}};
}
template <class S>
Quat<S> join_cj(const std::complex<S>& a, const std::complex<S>& b) {
  return {a.real(), a.imag(), b.real(), -b.imag()};
}

inline Qd from_complex(const std::complex<double>& a) { return {a.real(), a.imag(), 0.0, 0.0}; }

} // namespace qhsp

// Eigen scalar traits; quaternionic matrices only ever use the coefficient
// based product path (all sizes here are tiny and fixed), which preserves
// operand order for the non-commutative product.
namespace Eigen {
template <class S>
struct NumTraits<qhsp::Quat<S>> {
  using Self = qhsp::Quat<S>;
  using Real = Self;
  using NonInteger = Self;
  using Nested = Self;
  using Literal = S;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 4,
    MulCost = 16
  };
  static inline Self epsilon() { return Self(NumTraits<S>::epsilon()); }
  static inline Self dummy_precision() { return Self(NumTraits<S>::dummy_precision()); }
  static inline int digits10() { return NumTraits<S>::digits10(); }
};
template <>
struct NumTraits<qhsp::Rational> {
  using Self = qhsp::Rational;
  using Real = Self;
  using NonInteger = Self;
  using Nested = Self;
  using Literal = std::int64_t;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 8
  };
  static inline Self epsilon() { return Self(0); }
  static inline Self dummy_precision() { return Self(0); }
  static inline int digits10() { return 18; }
};
} // namespace Eigen
