#pragma once

#include <string>
#include <vector>

#include "gecliff/error.hpp"
#include "gecliff/matrix2.hpp"

namespace gecliff {

enum class TokenKind { Elem, Diag, DiagD };

// E(x) (exponent +-1), [mu, nu] or D(mu) = [mu, mu^-1].
template <typename T>
struct GenToken {
  TokenKind kind;
  std::vector<T> args;
  int exponent = 1;

  static GenToken elem(T x, int exponent = 1) { return {TokenKind::Elem, {std::move(x)}, exponent}; }
  static GenToken diag(T mu, T nu) { return {TokenKind::Diag, {std::move(mu), std::move(nu)}, 1}; }
  static GenToken diag_d(T mu) { return {TokenKind::DiagD, {std::move(mu)}, 1}; }

  friend bool operator==(const GenToken&, const GenToken&) = default;
};

template <typename T>
struct GenWord {
  T one;
  std::vector<GenToken<T>> tokens;

  GenWord& push(GenToken<T> t) {
    tokens.push_back(std::move(t));
    return *this;
  }
  GenWord& append(const GenWord& w) {
    tokens.insert(tokens.end(), w.tokens.begin(), w.tokens.end());
    return *this;
  }
};

// Argument checks: Clifford E(x) needs x in V^n(Z), diagonal entries must be
// units with mu nu* a nonzero scalar; ring tokens need integral arguments and units.
void check_token(const GenToken<CliffordElement>& t);
void check_token(const GenToken<OrderElement>& t);

inline bool is_unit(const OrderElement& x) { return x.is_integral() && x.norm() == 1; }
inline OrderElement inverse(const OrderElement& x) { return x.inverse(); }
bool is_unit(const CliffordElement& x);

template <typename T>
Matrix2<T> token_matrix(const GenToken<T>& t, const T& one) {
  check_token(t);
  switch (t.kind) {
    case TokenKind::Elem: {
      if (t.exponent == 1) return elementary(t.args[0], one);
      const T z = zero_like(one);
      return Matrix2<T>{z, -one, one, t.args[0]};
    }
    case TokenKind::Diag:
      return diagonal(t.args[0], t.args[1]);
    case TokenKind::DiagD:
      return diagonal(t.args[0], inverse(t.args[0]));
  }
  throw InvalidArgument("unknown token kind");
}

// Left-to-right product; the empty word is the identity.
template <typename T>
Matrix2<T> eval_word(const GenWord<T>& w) {
  Matrix2<T> m = mat_identity(w.one);
  for (const auto& t : w.tokens) m = m * token_matrix(t, w.one);
  return m;
}

// Removes adjacent E(x) Einv(x) and Einv(x) E(x) pairs.
template <typename T>
GenWord<T> free_reduce(const GenWord<T>& w) {
  GenWord<T> out{w.one, {}};
  for (const auto& t : w.tokens) {
    if (!out.tokens.empty()) {
      const auto& last = out.tokens.back();
      if (t.kind == TokenKind::Elem && last.kind == TokenKind::Elem && t.exponent == -last.exponent &&
          t.args == last.args) {
        out.tokens.pop_back();
        continue;
      }
    }
    out.tokens.push_back(t);
  }
  return out;
}

template <typename T>
GenWord<T> word_inverse(const GenWord<T>& w) {
  GenWord<T> out{w.one, {}};
  for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) {
    switch (it->kind) {
      case TokenKind::Elem:
        out.push(GenToken<T>::elem(it->args[0], -it->exponent));
        break;
      case TokenKind::Diag:
        out.push(GenToken<T>::diag(inverse(it->args[0]), inverse(it->args[1])));
        break;
      case TokenKind::DiagD:
        out.push(GenToken<T>::diag_d(inverse(it->args[0])));
        break;
    }
  }
  return out;
}

// Applies f to every token argument. Used for the maps induced by E(x) -> E(f(x)).
template <typename S, typename T, typename F>
GenWord<T> transport(const GenWord<S>& w, const T& target_one, F&& f) {
  GenWord<T> out{target_one, {}};
  for (const auto& t : w.tokens) {
    GenToken<T> u{t.kind, {}, t.exponent};
    for (const auto& a : t.args) u.args.push_back(f(a));
    out.push(std::move(u));
  }
  return out;
}

template <typename T>
std::string to_string(const GenToken<T>& t) {
  switch (t.kind) {
    case TokenKind::Elem:
      return std::string(t.exponent == 1 ? "E(" : "Einv(") + to_string(t.args[0]) + ")";
    case TokenKind::Diag:
      return "Diag(" + to_string(t.args[0]) + "," + to_string(t.args[1]) + ")";
    case TokenKind::DiagD:
      return "D(" + to_string(t.args[0]) + ")";
  }
  return "?";
}

template <typename T>
std::string to_string(const GenWord<T>& w) {
  std::string s;
  for (const auto& t : w.tokens) {
    if (!s.empty()) s += ' ';
    s += to_string(t);
  }
  return s;
}

// Word of D(i_h) tokens (and D(-1) when the sign requires it) evaluating to
// (u 0; 0 (u*)^-1) for a signed blade u. Throws NotAMember otherwise.
GenWord<CliffordElement> de2_decompose(const CliffordElement& u);

// D(mu) = E(0)^2 E(mu) E(mu^-1) E(mu), and D(-1) = E(0)^2.
template <typename T>
GenWord<T> diag_as_elementary(const T& mu, const T& one) {
  GenWord<T> w{one, {}};
  const T z = zero_like(one);
  if (mu == one) return w;
  w.push(GenToken<T>::elem(z)).push(GenToken<T>::elem(z));
  if (mu == -one) return w;
  w.push(GenToken<T>::elem(mu)).push(GenToken<T>::elem(inverse(mu))).push(GenToken<T>::elem(mu));
  return w;
}

// Bookkeeping of one reduction: the upper-right norms before each step.
struct DecompositionTrace {
  std::vector<Rational> upper_right_norms;
  std::size_t steps = 0;
};

// Euclidean reduction M E(0)^3 E(-q) E(0) with q the nearest lattice point to
// b^-1 a, then the base case (a 0; c d) = [a, d] E(0)^3 E(d^-1 c). Clifford
// words contain only E tokens. Throws NotAMember for inputs outside
// SL_+(Gamma_n(Z)), n <= 4, and ReductionStalled if the norm fails to drop.
GenWord<CliffordElement> decompose(const VahlenMatrix& m, DecompositionTrace* trace = nullptr);

// The same over an order with GL_2 = GE_2. Diagonal leftovers become E tokens
// when d = a^-1 and a single Diag(a, d) token otherwise.
GenWord<OrderElement> decompose(const RingMatrix& m, DecompositionTrace* trace = nullptr);

}  // namespace gecliff
