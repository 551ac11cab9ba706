#include "gecliff/matrix2.hpp"

#include "gecliff/error.hpp"

namespace gecliff {

namespace {

bool vector_or_zero(const CliffordElement& x) { return x.is_vector(); }

bool entry_ok(const CliffordElement& x, bool integral) { return x.is_zero() || gamma_membership(x, integral); }

void require_quaternion(const RingMatrix& m) {
  if (!m.a.context()->is_quaternion())
    throw InvalidArgument("Dieudonne determinant needs a quaternion context, not " + m.a.context()->name());
}

}  // namespace

void require_consistent(const VahlenMatrix& m) {
  const int n = m.a.dimension();
  if (m.b.dimension() != n || m.c.dimension() != n || m.d.dimension() != n)
    throw DimensionMismatch("matrix entries of different Clifford dimensions");
}

void require_consistent(const RingMatrix& m) {
  require_same_context(m.a, m.b);
  require_same_context(m.a, m.c);
  require_same_context(m.a, m.d);
}

CliffordElement pseudo_det(const VahlenMatrix& m) {
  require_consistent(m);
  return m.a * reversion(m.d) - m.b * reversion(m.c);
}

bool gl_membership(const VahlenMatrix& m, bool integral) {
  require_consistent(m);
  for (const auto* x : {&m.a, &m.b, &m.c, &m.d})
    if (!entry_ok(*x, integral)) return false;
  const CliffordElement p = pseudo_det(m);
  if (!p.is_scalar() || p.is_zero()) return false;
  return vector_or_zero(m.a * reversion(m.b)) && vector_or_zero(m.c * reversion(m.d)) &&
         vector_or_zero(reversion(m.c) * m.a) && vector_or_zero(reversion(m.d) * m.b);
}

bool slplus_membership(const VahlenMatrix& m, bool integral) {
  if (!gl_membership(m, integral)) return false;
  const CliffordElement p = pseudo_det(m);
  return p.is_scalar() && p.scalar_part() == 1;
}

VahlenMatrix mat_inverse(const VahlenMatrix& m) {
  const CliffordElement p = pseudo_det(m);
  if (!p.is_scalar() || p.is_zero())
    throw NotInvertible("pseudo-determinant " + to_string(p) + " is not a nonzero scalar");
  const Rational s = 1 / p.scalar_part();
  VahlenMatrix inv{reversion(m.d) * s, -reversion(m.b) * s, -reversion(m.c) * s, reversion(m.a) * s};
  const CliffordElement one = CliffordElement::scalar(m.a.dimension(), 1);
  if (!is_identity(m * inv, one) || !is_identity(inv * m, one))
    throw NotInvertible("matrix is not a Vahlen matrix; the pseudo-determinant formula does not invert it");
  return inv;
}

RingMatrix mat_inverse(const RingMatrix& m) {
  require_consistent(m);
  RingMatrix inv{m.a, m.b, m.c, m.d};
  if (m.a.is_zero()) {
    if (m.b.is_zero() || m.c.is_zero()) throw NotInvertible("singular matrix " + to_string(m));
    const OrderElement bi = m.b.inverse(), ci = m.c.inverse();
    inv = RingMatrix{-(ci * m.d * bi), ci, bi, zero_like(m.a)};
  } else {
    const OrderElement ai = m.a.inverse();
    const OrderElement s = m.d - m.c * ai * m.b;
    if (s.is_zero()) throw NotInvertible("singular matrix " + to_string(m));
    const OrderElement si = s.inverse();
    inv = RingMatrix{ai + ai * m.b * si * m.c * ai, -(ai * m.b * si), -(si * m.c * ai), si};
  }
  const OrderElement one = m.a.context()->one();
  if (!is_identity(m * inv, one) || !is_identity(inv * m, one))
    throw NotInvertible("inverse check failed for " + to_string(m));
  return inv;
}

OrderElement ring_det(const RingMatrix& m) {
  require_consistent(m);
  if (!m.a.context()->is_commutative()) throw InvalidArgument("ring_det needs a commutative context");
  return m.a * m.d - m.b * m.c;
}

bool ring_gl_membership(const RingMatrix& m) {
  require_consistent(m);
  for (const auto* x : {&m.a, &m.b, &m.c, &m.d})
    if (!x->is_integral()) return false;
  try {
    const RingMatrix inv = mat_inverse(m);
    for (const auto* x : {&inv.a, &inv.b, &inv.c, &inv.d})
      if (!x->is_integral()) return false;
  } catch (const NotInvertible&) {
    return false;
  }
  return true;
}

bool ring_sl_membership(const RingMatrix& m) {
  if (!ring_gl_membership(m)) return false;
  if (m.a.context()->is_commutative()) return ring_det(m) == m.a.context()->one();
  return dieudonne_det_sq(m) == 1;
}

Rational dieudonne_det_sq(const RingMatrix& m) {
  require_consistent(m);
  require_quaternion(m);
  const Rational re = (m.a * m.c.conj() * m.d * m.b.conj()).real_part();
  return m.a.norm() * m.d.norm() + m.b.norm() * m.c.norm() - 2 * re;
}

Rational dieudonne_det_sq_bd(const RingMatrix& m) {
  require_consistent(m);
  require_quaternion(m);
  const Rational re = (m.a * m.c.conj() * m.d * m.b.conj()).real_part();
  return m.a.norm() * m.d.norm() + m.b.norm() * m.d.norm() - 2 * re;
}

}  // namespace gecliff
