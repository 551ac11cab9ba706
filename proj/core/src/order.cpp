#include "gecliff/order.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <sstream>

#include "gecliff/error.hpp"

namespace gecliff {

namespace {

Ambient amb(Rational a, Rational b = 0, Rational c = 0, Rational d = 0) {
  return Ambient{std::move(a), std::move(b), std::move(c), std::move(d)};
}

Rational q(long p, long r = 1) {
  Rational x(p, r);
  x.canonicalize();
  return x;
}

bool all_integral(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& c) { return is_integer(c); });
}

Rational quadratic_form(const RatMatrix& g, const RatVector& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < x.size(); ++j) s += x[i] * g[i][j] * x[j];
  }
  return s;
}

// Calls f on every integer vector with lo[i] <= x[i] <= hi[i], in lexicographic order.
template <typename F>
void for_each_in_box(const std::vector<Integer>& lo, const std::vector<Integer>& hi, F&& f) {
  const std::size_t r = lo.size();
  for (std::size_t i = 0; i < r; ++i)
    if (lo[i] > hi[i]) return;
  std::vector<Integer> x = lo;
  while (true) {
    f(x);
    std::size_t k = r;
    while (k > 0) {
      --k;
      if (x[k] < hi[k]) {
        ++x[k];
        break;
      }
      x[k] = lo[k];
      if (k == 0) return;
    }
    if (r == 0) return;
  }
}

RatVector to_rat(const std::vector<Integer>& x) { return RatVector(x.begin(), x.end()); }

}  // namespace

Order::Order(std::string name, OrderFamily family, int d, Rational u, Rational v, std::vector<Ambient> basis)
    : name_(std::move(name)),
      family_(family),
      rank_(static_cast<int>(basis.size())),
      d_(d),
      u_(std::move(u)),
      v_(std::move(v)),
      basis_(std::move(basis)) {
  RatMatrix m(rank_, RatVector(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) m[i][j] = basis_[i][j];
  to_coords_ = rat_inverse(m);

  gram_.assign(rank_, RatVector(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      Ambient s;
      for (int t = 0; t < 4; ++t) s[t] = basis_[i][t] + basis_[j][t];
      gram_[i][j] = (ambient_norm(s) - ambient_norm(basis_[i]) - ambient_norm(basis_[j])) / 2;
    }
  gram_inv_ = rat_inverse(gram_);

  structure_.assign(rank_, std::vector<RatVector>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      structure_[i][j] = to_coords(ambient_mul(basis_[i], basis_[j]));
      if (!all_integral(structure_[i][j]))
        throw InvalidArgument("basis of " + name_ + " is not multiplicatively closed");
    }
}

OrderPtr Order::make(const std::string& name, OrderFamily family, int d, Rational u, Rational v,
                     std::vector<Ambient> basis) {
  std::lock_guard lock(cache_mutex());
  auto& c = cache();
  if (auto it = c.find(name); it != c.end()) return it->second;
  std::shared_ptr<Order> o(new Order(name, family, d, std::move(u), std::move(v), std::move(basis)));
  o->self_ = o;
  c.emplace(name, o);
  return o;
}

std::mutex& Order::cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, OrderPtr>& Order::cache() {
  static std::map<std::string, OrderPtr> c;
  return c;
}

OrderPtr Order::integers() { return make("Z", OrderFamily::Integers, 0, -1, -1, {amb(1)}); }

OrderPtr Order::quadratic(int d, bool maximal) {
  if (d < 1) throw InvalidArgument("quadratic orders need d >= 1");
  const bool half = maximal && d % 4 == 3;
  std::vector<Ambient> basis{amb(1), half ? amb(q(1, 2), q(1, 2)) : amb(0, 1)};
  const std::string name = (maximal ? "Imax:-" : "Zsqrt:-") + std::to_string(d);
  return make(name, maximal ? OrderFamily::QuadraticMaximal : OrderFamily::Quadratic, d, -d, -1, std::move(basis));
}

OrderPtr Order::lipschitz() {
  return make("lipschitz", OrderFamily::Lipschitz, 0, -1, -1, {amb(1), amb(0, 1), amb(0, 0, 1), amb(0, 0, 0, 1)});
}

OrderPtr Order::hurwitz() {
  return make("hurwitz", OrderFamily::Hurwitz, 0, -1, -1,
              {amb(1), amb(0, 1), amb(0, 0, 1), amb(q(1, 2), q(1, 2), q(1, 2), q(1, 2))});
}

OrderPtr Order::o3() {
  return make("O3", OrderFamily::O3, 0, -1, -3,
              {amb(1), amb(0, 1), amb(q(1, 2), 0, q(1, 2)), amb(0, q(1, 2), 0, q(1, 2))});
}

OrderPtr Order::o5() {
  return make("O5", OrderFamily::O5, 0, -2, -5,
              {amb(1), amb(q(1, 2), q(1, 2), q(1, 2)), amb(q(1, 2), q(1, 4), 0, q(-1, 4)),
               amb(q(1, 2), q(3, 4), 0, q(1, 4))});
}

OrderPtr Order::by_name(std::string_view name) {
  if (name == "Z") return integers();
  if (name == "lipschitz") return lipschitz();
  if (name == "hurwitz") return hurwitz();
  if (name == "O3") return o3();
  if (name == "O5") return o5();
  for (const auto& [prefix, maximal] : {std::pair{std::string_view("Zsqrt:-"), false}, {"Imax:-", true}}) {
    if (name.substr(0, prefix.size()) != prefix) continue;
    const std::string_view digits = name.substr(prefix.size());
    int d = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || d < 1)
      throw InvalidArgument("bad quadratic context '" + std::string(name) + "'");
    return quadratic(d, maximal);
  }
  throw InvalidArgument("unknown ring context '" + std::string(name) + "'");
}

Ambient Order::ambient_mul(const Ambient& x, const Ambient& y) const {
  // i^2 = u, j^2 = v, k^2 = -uv, ij = k, jk = -v i, ki = -u j.
  const Rational uv = u_ * v_;
  Ambient r;
  r[0] = x[0] * y[0] + u_ * x[1] * y[1] + v_ * x[2] * y[2] - uv * x[3] * y[3];
  r[1] = x[0] * y[1] + x[1] * y[0] - v_ * x[2] * y[3] + v_ * x[3] * y[2];
  r[2] = x[0] * y[2] + x[2] * y[0] + u_ * x[1] * y[3] - u_ * x[3] * y[1];
  r[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1];
  for (auto& c : r) c.canonicalize();
  return r;
}

Rational Order::ambient_norm(const Ambient& x) const {
  return x[0] * x[0] - u_ * x[1] * x[1] - v_ * x[2] * x[2] + u_ * v_ * x[3] * x[3];
}

RatVector Order::to_coords(const Ambient& x) const {
  for (int t = rank_; t < 4; ++t)
    if (x[t] != 0) throw ContextMismatch("value lies outside the algebra of " + name_);
  RatVector head(x.begin(), x.begin() + rank_);
  return rat_vec_mul(head, to_coords_);
}

Ambient Order::to_ambient(const RatVector& coords) const {
  Ambient r = amb(0);
  for (int i = 0; i < rank_; ++i) {
    if (coords[i] == 0) continue;
    for (int t = 0; t < 4; ++t) r[t] += coords[i] * basis_[i][t];
  }
  return r;
}

OrderElement Order::zero() const { return OrderElement(self(), RatVector(rank_, 0)); }

OrderElement Order::one() const {
  RatVector c(rank_, 0);
  c[0] = 1;
  return OrderElement(self(), std::move(c));
}

OrderElement Order::element(RatVector coords) const { return OrderElement(self(), std::move(coords)); }

OrderElement Order::from_ambient(const Ambient& x) const { return OrderElement(self(), to_coords(x)); }

OrderElement Order::basis_element(int i) const {
  RatVector c(rank_, 0);
  c.at(i) = 1;
  return OrderElement(self(), std::move(c));
}

OrderElement::OrderElement(OrderPtr ctx, RatVector coords) : ctx_(std::move(ctx)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != ctx_->rank())
    throw DimensionMismatch("element of " + ctx_->name() + " needs " + std::to_string(ctx_->rank()) +
                            " coordinates");
  for (auto& c : coords_) c.canonicalize();
}

void require_same_context(const OrderElement& a, const OrderElement& b) {
  if (a.context() != b.context() && a.context()->name() != b.context()->name())
    throw ContextMismatch("elements of " + a.context()->name() + " and " + b.context()->name());
}

bool OrderElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool OrderElement::is_integral() const { return all_integral(coords_); }

Rational OrderElement::norm() const { return quadratic_form(ctx_->gram(), coords_); }

Rational OrderElement::real_part() const { return ambient()[0]; }

OrderElement OrderElement::conj() const {
  Ambient a = ambient();
  for (int t = 1; t < 4; ++t) a[t] = -a[t];
  return ctx_->from_ambient(a);
}

OrderElement OrderElement::inverse() const {
  const Rational n = norm();
  if (n == 0) throw NotInvertible("zero has no inverse in " + ctx_->name());
  return (1 / n) * conj();
}

OrderElement& OrderElement::operator+=(const OrderElement& o) {
  require_same_context(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

OrderElement& OrderElement::operator-=(const OrderElement& o) {
  require_same_context(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

OrderElement operator*(const OrderElement& a, const OrderElement& b) {
  require_same_context(a, b);
  const int r = a.ctx_->rank();
  RatVector out(r, 0);
  for (int i = 0; i < r; ++i) {
    if (a.coords_[i] == 0) continue;
    for (int j = 0; j < r; ++j) {
      if (b.coords_[j] == 0) continue;
      const Rational p = a.coords_[i] * b.coords_[j];
      const RatVector& s = a.ctx_->structure(i, j);
      for (int t = 0; t < r; ++t)
        if (s[t] != 0) out[t] += p * s[t];
    }
  }
  return OrderElement(a.ctx_, std::move(out));
}

OrderElement operator*(const Rational& s, OrderElement a) {
  for (auto& c : a.coords_) c *= s;
  return a;
}

OrderElement operator-(OrderElement a) {
  for (auto& c : a.coords_) c = -c;
  return a;
}

bool operator==(const OrderElement& a, const OrderElement& b) {
  return a.ctx_->name() == b.ctx_->name() && a.coords_ == b.coords_;
}

bool operator<(const OrderElement& a, const OrderElement& b) {
  if (a.ctx_->name() != b.ctx_->name()) return a.ctx_->name() < b.ctx_->name();
  return a.coords_ < b.coords_;
}

std::string to_string(const OrderElement& x) {
  const auto& ctx = *x.context();
  std::vector<std::pair<Rational, std::string>> terms;
  if (ctx.is_quaternion()) {
    const Ambient a = x.ambient();
    const char* names[4] = {"", "i", "j", "k"};
    for (int t = 0; t < 4; ++t) terms.emplace_back(a[t], names[t]);
  } else {
    terms.emplace_back(x.coords()[0], "");
    if (ctx.rank() == 2) terms.emplace_back(x.coords()[1], "w");
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, sym] : terms) {
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (sym.empty())
      os << to_string(mag);
    else if (mag == 1)
      os << sym;
    else
      os << to_string(mag) << "*" << sym;
  }
  return first ? "0" : os.str();
}

std::vector<OrderElement> short_vectors(const OrderPtr& ctx, const Rational& bound) {
  if (bound <= 0) throw InvalidArgument("short_vectors needs a positive bound");
  const int r = ctx->rank();
  std::vector<Integer> lo(r), hi(r);
  for (int i = 0; i < r; ++i) {
    hi[i] = isqrt_floor(bound * ctx->gram_inverse()[i][i]);
    lo[i] = -hi[i];
  }
  std::vector<std::pair<Rational, OrderElement>> found;
  for_each_in_box(lo, hi, [&](const std::vector<Integer>& x) {
    RatVector c = to_rat(x);
    const Rational n = quadratic_form(ctx->gram(), c);
    if (n > 0 && n <= bound) found.emplace_back(n, ctx->element(std::move(c)));
  });
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second.coords() < b.second.coords();
  });
  std::vector<OrderElement> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

std::vector<OrderElement> order_units(const OrderPtr& ctx) { return short_vectors(ctx, 1); }

bool discretely_normed(const OrderPtr& ctx) {
  for (const auto& x : short_vectors(ctx, 4)) {
    const Rational n = x.norm();
    if (n > 1 && n < 4) return false;
  }
  return true;
}

std::string to_string(GE2Class c) { return c == GE2Class::GE2Ring ? "GE2Ring" : "NotGE2Ring"; }

GE2Class ge2_classification(const OrderPtr& ctx) {
  switch (ctx->family()) {
    case OrderFamily::Integers:
      return GE2Class::GE2Ring;
    case OrderFamily::Quadratic: {
      const int d = ctx->d();
      return (d == 1 || d == 2 || d == 3) ? GE2Class::GE2Ring : GE2Class::NotGE2Ring;
    }
    case OrderFamily::QuadraticMaximal: {
      const int d = ctx->d();
      return (d == 1 || d == 2 || d == 3 || d == 7 || d == 11) ? GE2Class::GE2Ring : GE2Class::NotGE2Ring;
    }
    default:
      throw InvalidArgument("GE2 classification covers Z and quadratic orders only, not " + ctx->name());
  }
}

bool supports_decomposition(const OrderPtr& ctx) {
  if (ctx->is_quaternion()) return true;
  return ge2_classification(ctx) == GE2Class::GE2Ring;
}

OrderElement nearest_lattice_point(const OrderPtr& ctx, const Ambient& target) {
  const int r = ctx->rank();
  const RatVector t = ctx->to_coords(target);
  auto dist = [&](const std::vector<Integer>& x) {
    RatVector diff(r);
    for (int i = 0; i < r; ++i) diff[i] = t[i] - x[i];
    return quadratic_form(ctx->gram(), diff);
  };
  std::vector<Integer> rounded(r);
  for (int i = 0; i < r; ++i) rounded[i] = round_half_up(t[i]);
  Rational best_dist = dist(rounded);
  std::vector<Integer> best = rounded;

  std::vector<Integer> lo(r), hi(r);
  for (int i = 0; i < r; ++i) {
    const Integer reach = isqrt_floor(best_dist * ctx->gram_inverse()[i][i]) + 1;
    lo[i] = ceil(t[i] - Rational(reach));
    hi[i] = floor(t[i] + Rational(reach));
  }
  for_each_in_box(lo, hi, [&](const std::vector<Integer>& x) {
    const Rational dx = dist(x);
    if (dx < best_dist || (dx == best_dist && best != rounded && x < best)) {
      best_dist = dx;
      best = x;
    }
  });
  return ctx->element(to_rat(best));
}

OrderElement u_hom_f(const OrderElement& x) {
  if (x.context()->name() != "O5") throw ContextMismatch("u_hom_f is defined on O5, not " + x.context()->name());
  if (!x.is_integral()) throw NonIntegral("u_hom_f needs an integral element of O5");
  const OrderPtr target = Order::hurwitz();
  const std::array<Ambient, 4> images{amb(1), amb(q(1, 2), q(1, 2), q(1, 2), q(1, 2)),
                                      amb(q(1, 2), q(1, 2), q(-1, 2), q(1, 2)),
                                      amb(q(1, 2), q(-1, 2), q(1, 2), q(1, 2))};
  Ambient out = amb(0);
  for (int i = 0; i < 4; ++i)
    for (int t = 0; t < 4; ++t) out[t] += x.coords()[i] * images[i][t];
  return target->from_ambient(out);
}

OrderElement phi_quadratic(const OrderElement& x) {
  if (x.context()->name() != "Zsqrt:-3")
    throw ContextMismatch("phi is defined on Zsqrt:-3, not " + x.context()->name());
  if (!x.is_integral()) throw NonIntegral("phi needs an integral element of Zsqrt:-3");
  return Order::quadratic(11, true)->element(x.coords());
}

OrderUnitGroup unit_group(const OrderPtr& ctx) {
  std::vector<OrderElement> units = order_units(ctx);
  const std::size_t bound = units.size();
  return OrderUnitGroup(ctx->one(), std::move(units), OrderMul{}, bound);
}

}  // namespace gecliff
