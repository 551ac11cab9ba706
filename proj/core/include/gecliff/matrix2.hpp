#pragma once

#include <string>

#include "gecliff/clifford.hpp"
#include "gecliff/order.hpp"

namespace gecliff {

// 2x2 matrix (a b; c d) over a noncommutative ring-like element type.
template <typename T>
struct Matrix2 {
  T a, b, c, d;

  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

template <typename T>
T zero_like(const T& x) {
  return x - x;
}

template <typename T>
Matrix2<T> mat_identity(const T& one) {
  const T z = zero_like(one);
  return {one, z, z, one};
}

template <typename T>
Matrix2<T> mat_mul(const Matrix2<T>& m, const Matrix2<T>& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

template <typename T>
Matrix2<T> operator*(const Matrix2<T>& m, const Matrix2<T>& n) {
  return mat_mul(m, n);
}

template <typename T>
Matrix2<T> operator-(const Matrix2<T>& m) {
  return {-m.a, -m.b, -m.c, -m.d};
}

// E(x) = (x 1; -1 0)
template <typename T>
Matrix2<T> elementary(const T& x, const T& one) {
  return {x, one, -one, zero_like(one)};
}

// [mu, nu] = diag(mu, nu)
template <typename T>
Matrix2<T> diagonal(const T& mu, const T& nu) {
  return {mu, zero_like(mu), zero_like(mu), nu};
}

template <typename T>
bool is_identity(const Matrix2<T>& m, const T& one) {
  return m == mat_identity(one);
}

template <typename T>
std::string to_string(const Matrix2<T>& m) {
  return "((" + to_string(m.a) + ", " + to_string(m.b) + "), (" + to_string(m.c) + ", " + to_string(m.d) + "))";
}

using VahlenMatrix = Matrix2<CliffordElement>;
using RingMatrix = Matrix2<OrderElement>;

// All entries share one dimension (Clifford) or one context (orders).
void require_consistent(const VahlenMatrix& m);
void require_consistent(const RingMatrix& m);

// a d* - b c*
CliffordElement pseudo_det(const VahlenMatrix& m);

// Entries in Gamma_n or zero, pseudo_det a nonzero scalar, and ab*, cd*,
// c*a, d*b vectors. `integral` restricts entries to Gamma_n(Z) u {0}.
bool gl_membership(const VahlenMatrix& m, bool integral);
bool slplus_membership(const VahlenMatrix& m, bool integral);

// s^-1 (d* -b*; -c* a*) with s = pseudo_det; the result is checked against
// m * inverse = I. Throws NotInvertible.
VahlenMatrix mat_inverse(const VahlenMatrix& m);

// Two-sided inverse over the division algebra (Schur complement on a, or the
// anti-diagonal formula when a = 0). Entries may be non-integral.
RingMatrix mat_inverse(const RingMatrix& m);

// ad - bc; commutative contexts only.
OrderElement ring_det(const RingMatrix& m);

// Entries integral and the inverse integral too.
bool ring_gl_membership(const RingMatrix& m);
// GL_2 plus det = 1 (commutative) or Dieudonne Delta^2 = 1 (quaternion).
bool ring_sl_membership(const RingMatrix& m);

// |a|^2|d|^2 + |b|^2|c|^2 - 2 Re(a conj(c) d conj(b)); quaternion contexts only.
Rational dieudonne_det_sq(const RingMatrix& m);
// The same with |b|^2|d|^2 as the middle term. Kept to show it is not multiplicative.
Rational dieudonne_det_sq_bd(const RingMatrix& m);

}  // namespace gecliff
