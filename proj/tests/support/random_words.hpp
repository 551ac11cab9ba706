#pragma once

#include <random>
#include <vector>

#include "gecliff/order.hpp"
#include "gecliff/words.hpp"

namespace testsupport {

using gecliff::CliffordElement;
using gecliff::GenToken;
using gecliff::GenWord;
using gecliff::OrderElement;
using gecliff::OrderPtr;
using gecliff::Rational;

inline long small(std::mt19937_64& rng, long r) { return static_cast<long>(rng() % (2 * r + 1)) - r; }

// Words of length <= max_len in E(x), E(x)^-1 (x with coordinates in [-2, 2]),
// D(b) for b in {+-1, +-i_h} and [mu, (mu*)^-1] for units mu of Gamma_n(Z).
// Every such word lies in SL_+(Gamma_n(Z)).
inline GenWord<CliffordElement> random_clifford_word(std::mt19937_64& rng, int n, std::size_t max_len,
                                                     const std::vector<CliffordElement>& units) {
  GenWord<CliffordElement> w{CliffordElement::scalar(n, 1), {}};
  const auto basis = gecliff::unit_vectors(n);
  const std::size_t len = rng() % (max_len + 1);
  for (std::size_t k = 0; k < len; ++k) {
    const auto pick = rng() % 12;
    if (pick == 0) {
      w.push(GenToken<CliffordElement>::diag_d(basis[rng() % basis.size()]));
      continue;
    }
    if (pick == 1) {
      const CliffordElement& mu = units[rng() % units.size()];
      w.push(GenToken<CliffordElement>::diag(mu, gecliff::invert(gecliff::reversion(mu))));
      continue;
    }
    std::vector<Rational> c(n);
    for (auto& x : c) x = small(rng, 2);
    w.push(GenToken<CliffordElement>::elem(CliffordElement::vector(n, c), rng() % 5 == 0 ? -1 : 1));
  }
  return w;
}

// GE_2 generator words: E(x)^{+-1} with x of small coordinates and diagonal
// unit matrices. Commutative orders get D(u) only, so words stay in SL_2.
inline GenWord<OrderElement> random_order_word(std::mt19937_64& rng, const OrderPtr& ctx, std::size_t max_len,
                                               const std::vector<OrderElement>& units) {
  GenWord<OrderElement> w{ctx->one(), {}};
  const std::size_t len = rng() % (max_len + 1);
  for (std::size_t k = 0; k < len; ++k) {
    if (rng() % 6 == 0) {
      const OrderElement& mu = units[rng() % units.size()];
      if (ctx->is_quaternion())
        w.push(GenToken<OrderElement>::diag(mu, units[rng() % units.size()]));
      else
        w.push(GenToken<OrderElement>::diag_d(mu));
      continue;
    }
    gecliff::RatVector c(ctx->rank());
    for (auto& x : c) x = small(rng, 2);
    w.push(GenToken<OrderElement>::elem(ctx->element(c), rng() % 5 == 0 ? -1 : 1));
  }
  return w;
}

}  // namespace testsupport
