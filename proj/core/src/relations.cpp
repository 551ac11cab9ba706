#include "gecliff/relations.hpp"

#include <functional>
#include <random>

namespace gecliff {

namespace {

template <typename T>
struct RingData {
  T one;
  std::vector<T> box;        // small elements for x, y
  std::vector<T> basis;      // the unit basis B used by R2 and eq29
  std::vector<T> units;      // all units
  std::vector<std::pair<T, T>> diag_pairs;  // admissible [mu, nu]
  std::vector<std::pair<T, int>> alpha;     // a with norm m in {2, 3}
  std::function<T(const T&)> conj;
  bool clifford = false;

  explicit RingData(T o) : one(std::move(o)) {}
};

RingData<CliffordElement> clifford_data(int n) {
  RingData<CliffordElement> r(CliffordElement::scalar(n, 1));
  r.clifford = true;
  std::vector<long> x(n, -1);
  while (true) {
    std::vector<Rational> c(x.begin(), x.end());
    r.box.push_back(CliffordElement::vector(n, c));
    int k = n - 1;
    while (k >= 0 && x[k] == 1) x[k--] = -1;
    if (k < 0) break;
    ++x[k];
  }
  r.basis = unit_vectors(n);
  r.units = enumerate_units(n).elements;
  for (const auto& mu : r.units) {
    const CliffordElement nu = invert(reversion(mu));
    r.diag_pairs.emplace_back(mu, nu);
    r.diag_pairs.emplace_back(mu, -nu);
  }
  for (const auto& a : lattice_vectors(n, 2, 3)) r.alpha.emplace_back(a, static_cast<int>(norm_sq(a).get_num().get_si()));
  r.conj = [](const CliffordElement& a) { return conjugation(a); };
  return r;
}

RingData<OrderElement> order_data(const OrderPtr& ctx) {
  RingData<OrderElement> r(ctx->one());
  const int rank = ctx->rank();
  std::vector<long> x(rank, -1);
  while (true) {
    r.box.push_back(ctx->element(RatVector(x.begin(), x.end())));
    int k = rank - 1;
    while (k >= 0 && x[k] == 1) x[k--] = -1;
    if (k < 0) break;
    ++x[k];
  }
  r.units = order_units(ctx);
  r.basis = r.units;
  for (const auto& mu : r.units)
    for (const auto& nu : r.units) r.diag_pairs.emplace_back(mu, nu);
  for (const auto& a : short_vectors(ctx, 3)) {
    const Rational m = a.norm();
    if (m == 2 || m == 3) r.alpha.emplace_back(a, static_cast<int>(m.get_num().get_si()));
  }
  r.conj = [](const OrderElement& a) { return a.conj(); };
  return r;
}

// Index tuples of a product of ranges: all of them if the product fits the
// budget, otherwise a seeded uniform sample.
std::vector<std::vector<std::size_t>> index_tuples(const std::vector<std::size_t>& sizes, const RelationOptions& opts,
                                                   const std::string& family) {
  std::vector<std::vector<std::size_t>> out;
  std::size_t total = 1;
  bool overflow = false;
  for (std::size_t s : sizes) {
    if (s == 0) return out;
    if (total > opts.budget / s + 1) overflow = true;
    total *= s;
  }
  if (!overflow && total <= opts.budget) {
    std::vector<std::size_t> idx(sizes.size(), 0);
    for (std::size_t t = 0; t < total; ++t) {
      out.push_back(idx);
      for (std::size_t k = idx.size(); k-- > 0;) {
        if (++idx[k] < sizes[k]) break;
        idx[k] = 0;
      }
    }
    return out;
  }
  std::mt19937_64 rng(opts.seed ^ std::hash<std::string>{}(family));
  for (std::size_t t = 0; t < opts.budget; ++t) {
    std::vector<std::size_t> idx;
    for (std::size_t s : sizes) idx.push_back(std::uniform_int_distribution<std::size_t>(0, s - 1)(rng));
    out.push_back(std::move(idx));
  }
  return out;
}

template <typename T>
std::vector<RelationInstance<T>> build(const RingData<T>& r, const std::string& family, const RelationOptions& opts) {
  using Tok = GenToken<T>;
  using Word = GenWord<T>;
  const T& one = r.one;
  const T z = zero_like(one);
  auto word = [&](std::initializer_list<Tok> toks) { return Word{one, std::vector<Tok>(toks)}; };
  auto E = [](const T& x) { return Tok::elem(x); };
  auto D = [](const T& x) { return Tok::diag_d(x); };
  std::vector<RelationInstance<T>> out;
  auto add = [&](std::string label, Word lhs, Word rhs) {
    out.push_back({family, std::move(label), std::move(lhs), std::move(rhs)});
  };

  if (family == "R1") {
    for (const auto& idx : index_tuples({r.box.size(), r.box.size()}, opts, family)) {
      const T& x = r.box[idx[0]];
      const T& y = r.box[idx[1]];
      add("R1 x=" + to_string(x) + " y=" + to_string(y), word({E(x), E(z), E(y)}), word({E(z), E(z), E(x + y)}));
    }
  } else if (family == "R2") {
    for (const auto& mu : r.basis)
      add("R2 mu=" + to_string(mu), word({E(mu), E(inverse(mu)), E(mu)}), word({E(z), E(z), D(mu)}));
  } else if (family == "R3") {
    for (const auto& idx : index_tuples({r.diag_pairs.size(), r.box.size()}, opts, family)) {
      const auto& [mu, nu] = r.diag_pairs[idx[0]];
      const T& x = r.box[idx[1]];
      add("R3 x=" + to_string(x) + " mu=" + to_string(mu) + " nu=" + to_string(nu), word({E(x), Tok::diag(mu, nu)}),
          word({Tok::diag(nu, mu), E(inverse(nu) * x * mu)}));
    }
  } else if (family == "R3p") {
    for (const auto& idx : index_tuples({r.units.size(), r.box.size()}, opts, family)) {
      const T& mu = r.units[idx[0]];
      const T& x = r.box[idx[1]];
      add("R3p x=" + to_string(x) + " mu=" + to_string(mu), word({E(x), D(mu)}), word({D(inverse(mu)), E(mu * x * mu)}));
    }
  } else if (family == "R4") {
    add("R4", word({E(z), E(z)}), word({D(-one)}));
  } else if (family == "R5") {
    for (const auto& x : r.box)
      add("R5 x=" + to_string(x), word({Tok::elem(x, -1)}), word({E(z), E(-x), E(z)}));
  } else if (family == "alpha") {
    for (const auto& [a, m] : r.alpha) {
      Word lhs{one, {}};
      for (int k = 0; k < m; ++k) lhs.push(E(r.conj(a))).push(E(a));
      add("alpha a=" + to_string(a) + " m=" + std::to_string(m), lhs, word({E(z), E(z)}));
    }
  } else if (family == "eq29") {
    for (const auto& idx : index_tuples({r.box.size(), r.box.size(), r.basis.size()}, opts, family)) {
      const T& x = r.box[idx[0]];
      const T& y = r.box[idx[1]];
      const T& al = r.basis[idx[2]];
      const T ai = inverse(al);
      add("eq29 x=" + to_string(x) + " y=" + to_string(y) + " alpha=" + to_string(al), word({E(x), E(al), E(y)}),
          word({E(x - ai), D(al), E(y - ai)}));
    }
  } else if (family == "DE2") {
    add("DE2 D(-1)^2", word({D(-one), D(-one)}), word({}));
    if (r.clifford || opts.de2_generator_form) {
      std::vector<T> gens;
      for (const auto& mu : r.basis)
        if (!(mu == one) && !(mu == -one)) gens.push_back(mu);
      for (const auto& mu : gens) add("DE2 D(" + to_string(mu) + ")^2", word({D(mu), D(mu)}), word({D(-one)}));
      for (std::size_t h = 0; h < gens.size(); ++h)
        for (std::size_t k = h + 1; k < gens.size(); ++k) {
          const T& mu = gens[h];
          const T& nu = gens[k];
          if (mu == -nu) continue;
          add("DE2 (D(" + to_string(mu) + ")D(" + to_string(nu) + "))^2", word({D(mu), D(nu), D(mu), D(nu)}),
              word({D(-one)}));
        }
    } else {
      for (const auto& idx : index_tuples({r.units.size(), r.units.size()}, opts, family)) {
        const T& mu = r.units[idx[0]];
        const T& nu = r.units[idx[1]];
        add("DE2 D(" + to_string(mu) + ")D(" + to_string(nu) + ")", word({D(mu), D(nu)}),
            word({Tok::diag(mu * nu, inverse(mu) * inverse(nu))}));
      }
    }
  } else {
    throw InvalidArgument("unknown relation family '" + family + "'");
  }
  return out;
}

}  // namespace

const std::vector<std::string>& relation_family_names() {
  static const std::vector<std::string> names{"R1", "R2", "R3", "R3p", "R4", "R5", "alpha", "eq29", "DE2"};
  return names;
}

std::vector<RelationInstance<CliffordElement>> relation_instances(int n, const std::string& family,
                                                                  const RelationOptions& opts) {
  return build(clifford_data(n), family, opts);
}

std::vector<RelationInstance<OrderElement>> relation_instances(const OrderPtr& ctx, const std::string& family,
                                                               const RelationOptions& opts) {
  return build(order_data(ctx), family, opts);
}

std::vector<FamilyReport> verify_relation_families(int n, const std::vector<std::string>& families,
                                                   const RelationOptions& opts) {
  const auto data = clifford_data(n);
  std::vector<FamilyReport> out;
  for (const auto& f : families) out.push_back(verify_instances(f, build(data, f, opts)));
  return out;
}

std::vector<FamilyReport> verify_relation_families(const OrderPtr& ctx, const std::vector<std::string>& families,
                                                   const RelationOptions& opts) {
  const auto data = order_data(ctx);
  std::vector<FamilyReport> out;
  for (const auto& f : families) out.push_back(verify_instances(f, build(data, f, opts)));
  return out;
}

}  // namespace gecliff
