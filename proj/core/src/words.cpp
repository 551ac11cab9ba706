#include "gecliff/words.hpp"

namespace gecliff {

namespace {

template <typename T>
Matrix2<T> reduction_step(const Matrix2<T>& m, const T& q) {
  // m * E(0)^3 E(-q) E(0) = m * (0 1; -1 -q)
  return {-m.b, m.a - m.b * q, -m.d, m.c - m.d * q};
}

template <typename T>
void append_undo_steps(GenWord<T>& w, const std::vector<T>& qs) {
  const T z = zero_like(w.one);
  for (auto it = qs.rbegin(); it != qs.rend(); ++it)
    w.push(GenToken<T>::elem(*it)).push(GenToken<T>::elem(z)).push(GenToken<T>::elem(z));
}

template <typename T>
void append_e0_cubed(GenWord<T>& w) {
  const T z = zero_like(w.one);
  for (int k = 0; k < 3; ++k) w.push(GenToken<T>::elem(z));
}

}  // namespace

bool is_unit(const CliffordElement& x) {
  return x.is_integral() && norm_sq(x) == 1 && gamma_membership(x, true);
}

void check_token(const GenToken<CliffordElement>& t) {
  switch (t.kind) {
    case TokenKind::Elem: {
      const auto& x = t.args.at(0);
      if (!x.is_vector() || !x.is_integral())
        throw InvalidArgument("E(x) needs x in V^n(Z), got " + to_string(x));
      if (t.exponent != 1 && t.exponent != -1) throw InvalidArgument("token exponent must be +-1");
      return;
    }
    case TokenKind::Diag: {
      const auto& mu = t.args.at(0);
      const auto& nu = t.args.at(1);
      if (!is_unit(mu) || !is_unit(nu)) throw InvalidArgument("Diag entries must be units of Gamma_n(Z)");
      const CliffordElement p = mu * reversion(nu);
      if (!p.is_scalar() || p.is_zero())
        throw InvalidArgument("Diag(mu, nu) needs mu nu* to be a nonzero scalar");
      return;
    }
    case TokenKind::DiagD:
      if (!is_unit(t.args.at(0))) throw InvalidArgument("D(mu) needs a unit of Gamma_n(Z)");
      return;
  }
}

void check_token(const GenToken<OrderElement>& t) {
  switch (t.kind) {
    case TokenKind::Elem:
      if (!t.args.at(0).is_integral())
        throw NonIntegral("E(x) needs x in the order, got " + to_string(t.args.at(0)));
      if (t.exponent != 1 && t.exponent != -1) throw InvalidArgument("token exponent must be +-1");
      return;
    case TokenKind::Diag:
      require_same_context(t.args.at(0), t.args.at(1));
      if (!is_unit(t.args[0]) || !is_unit(t.args[1])) throw InvalidArgument("Diag entries must be units");
      return;
    case TokenKind::DiagD:
      if (!is_unit(t.args.at(0))) throw InvalidArgument("D(mu) needs a unit");
      return;
  }
}

GenWord<CliffordElement> de2_decompose(const CliffordElement& u) {
  const int n = u.dimension();
  SignedBlade s;
  try {
    s = to_signed_blade(u);
  } catch (const InvalidArgument&) {
    throw NotAMember(to_string(u) + " is not a unit of Gamma_n(Z)");
  }
  GenWord<CliffordElement> w{CliffordElement::scalar(n, 1), {}};
  for (int h : s.blade.indices()) w.push(GenToken<CliffordElement>::diag_d(CliffordElement::generator(n, h)));
  if (s.negative) w.push(GenToken<CliffordElement>::diag_d(CliffordElement::scalar(n, -1)));
  return w;
}

GenWord<CliffordElement> decompose(const VahlenMatrix& m, DecompositionTrace* trace) {
  require_consistent(m);
  const int n = m.a.dimension();
  if (n > 4) throw InvalidArgument("decomposition into E(x) factors is only available for n <= 4");
  if (!slplus_membership(m, true)) throw NotAMember("matrix is not in SL_+(Gamma_" + std::to_string(n) + "(Z))");

  VahlenMatrix cur = m;
  std::vector<CliffordElement> qs;
  while (!cur.b.is_zero()) {
    const Rational nb = norm_sq(cur.b);
    if (trace) trace->upper_right_norms.push_back(nb);
    const CliffordElement z = invert(cur.b) * cur.a;
    const CliffordElement q = round_to_lattice(z);
    if (norm_sq(z - q) == 1)
      throw ReductionStalled("b^-1 a - q has norm 1 for " + to_string(cur) + "; impossible for SL_+ inputs");
    cur = reduction_step(cur, q);
    if (norm_sq(cur.b) >= nb) throw ReductionStalled("upper-right norm did not decrease at " + to_string(cur));
    qs.push_back(q);
  }
  if (trace) trace->steps = qs.size();

  const CliffordElement one = CliffordElement::scalar(n, 1);
  GenWord<CliffordElement> w{one, {}};
  for (const auto& t : de2_decompose(cur.a).tokens) w.append(diag_as_elementary(t.args[0], one));
  append_e0_cubed(w);
  w.push(GenToken<CliffordElement>::elem(invert(cur.d) * cur.c));
  append_undo_steps(w, qs);
  if (!(eval_word(w) == m)) throw ReductionStalled("decomposition does not reproduce " + to_string(m));
  return w;
}

GenWord<OrderElement> decompose(const RingMatrix& m, DecompositionTrace* trace) {
  require_consistent(m);
  const OrderPtr& ctx = m.a.context();
  if (!supports_decomposition(ctx)) throw InvalidArgument(ctx->name() + " is not a GE2-ring");
  if (!ring_gl_membership(m)) throw NotAMember("matrix is not in GL_2(" + ctx->name() + ")");

  RingMatrix cur = m;
  std::vector<OrderElement> qs;
  while (!cur.b.is_zero()) {
    const Rational nb = cur.b.norm();
    if (trace) trace->upper_right_norms.push_back(nb);
    const OrderElement z = cur.b.inverse() * cur.a;
    const OrderElement q = nearest_lattice_point(ctx, z.ambient());
    cur = reduction_step(cur, q);
    if (cur.b.norm() >= nb) throw ReductionStalled("upper-right norm did not decrease at " + to_string(cur));
    qs.push_back(q);
  }
  if (trace) trace->steps = qs.size();

  const OrderElement one = ctx->one();
  GenWord<OrderElement> w{one, {}};
  if (cur.d == cur.a.inverse())
    w.append(diag_as_elementary(cur.a, one));
  else
    w.push(GenToken<OrderElement>::diag(cur.a, cur.d));
  append_e0_cubed(w);
  w.push(GenToken<OrderElement>::elem(cur.d.inverse() * cur.c));
  append_undo_steps(w, qs);
  if (!(eval_word(w) == m)) throw ReductionStalled("decomposition does not reproduce " + to_string(m));
  return w;
}

}  // namespace gecliff
