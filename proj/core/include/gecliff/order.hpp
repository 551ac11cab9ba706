#pragma once

#include <array>
#include <map>
#include <mutex>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gecliff/finite_group.hpp"
#include "gecliff/linalg.hpp"
#include "gecliff/rational.hpp"

namespace gecliff {

enum class OrderFamily { Integers, Quadratic, QuadraticMaximal, Lipschitz, Hurwitz, O3, O5 };

// c0 + c1 i + c2 j + c3 k in the quaternion algebra (u, v | Q), where
// i^2 = u, j^2 = v, k = ij. Quadratic fields use only c0, c1 with u = -d.
using Ambient = std::array<Rational, 4>;

class OrderElement;

// A Z-order: a rank 1, 2 or 4 lattice inside (u, v | Q) that contains 1 and
// is closed under multiplication. Instances are shared and immutable.
class Order {
 public:
  static std::shared_ptr<const Order> integers();
  static std::shared_ptr<const Order> quadratic(int d, bool maximal);
  static std::shared_ptr<const Order> lipschitz();
  static std::shared_ptr<const Order> hurwitz();
  static std::shared_ptr<const Order> o3();
  static std::shared_ptr<const Order> o5();
  // "Z", "Zsqrt:-<d>", "Imax:-<d>", "lipschitz", "hurwitz", "O3", "O5".
  static std::shared_ptr<const Order> by_name(std::string_view name);

  const std::string& name() const { return name_; }
  OrderFamily family() const { return family_; }
  bool is_quaternion() const { return rank_ == 4; }
  bool is_commutative() const { return rank_ < 4; }
  int rank() const { return rank_; }
  int d() const { return d_; }
  const Rational& u() const { return u_; }
  const Rational& v() const { return v_; }

  const std::vector<Ambient>& basis() const { return basis_; }
  const RatMatrix& gram() const { return gram_; }
  const RatMatrix& gram_inverse() const { return gram_inv_; }
  // Coordinates of b_i * b_j over the basis.
  const RatVector& structure(int i, int j) const { return structure_[i][j]; }

  Ambient ambient_mul(const Ambient& x, const Ambient& y) const;
  Rational ambient_norm(const Ambient& x) const;
  RatVector to_coords(const Ambient& x) const;
  Ambient to_ambient(const RatVector& coords) const;

  OrderElement zero() const;
  OrderElement one() const;
  OrderElement element(RatVector coords) const;
  OrderElement from_ambient(const Ambient& x) const;
  OrderElement basis_element(int i) const;

 private:
  Order(std::string name, OrderFamily family, int d, Rational u, Rational v, std::vector<Ambient> basis);
  static std::shared_ptr<const Order> make(const std::string& name, OrderFamily family, int d, Rational u,
                                           Rational v, std::vector<Ambient> basis);
  static std::mutex& cache_mutex();
  static std::map<std::string, std::shared_ptr<const Order>>& cache();
  friend class OrderElement;

  std::shared_ptr<const Order> self() const { return self_.lock(); }

  std::string name_;
  OrderFamily family_;
  int rank_;
  int d_;
  Rational u_, v_;
  std::vector<Ambient> basis_;
  RatMatrix to_coords_;  // ambient (restricted to the first rank coordinates) -> basis
  RatMatrix gram_, gram_inv_;
  std::vector<std::vector<RatVector>> structure_;
  std::weak_ptr<const Order> self_;
};

using OrderPtr = std::shared_ptr<const Order>;

// Element of the rational span of an order, stored by coordinates over the
// order basis; it lies in the order exactly when every coordinate is an integer.
class OrderElement {
 public:
  OrderElement(OrderPtr ctx, RatVector coords);

  const OrderPtr& context() const { return ctx_; }
  const RatVector& coords() const { return coords_; }
  Ambient ambient() const { return ctx_->to_ambient(coords_); }

  bool is_zero() const;
  bool is_integral() const;
  Rational norm() const;        // x * conj(x)
  Rational real_part() const;   // scalar coordinate of the ambient form
  OrderElement conj() const;
  // conj(x) / norm(x); throws NotInvertible for zero.
  OrderElement inverse() const;

  OrderElement& operator+=(const OrderElement& o);
  OrderElement& operator-=(const OrderElement& o);
  friend OrderElement operator+(OrderElement a, const OrderElement& b) { return a += b; }
  friend OrderElement operator-(OrderElement a, const OrderElement& b) { return a -= b; }
  friend OrderElement operator*(const OrderElement& a, const OrderElement& b);
  friend OrderElement operator*(const Rational& s, OrderElement a);
  friend OrderElement operator-(OrderElement a);
  friend bool operator==(const OrderElement& a, const OrderElement& b);
  friend bool operator<(const OrderElement& a, const OrderElement& b);

 private:
  OrderPtr ctx_;
  RatVector coords_;
};

void require_same_context(const OrderElement& a, const OrderElement& b);

// Quadratic: "a + b*w" over {1, w}; Z: "a"; quaternion: "a + b*i + c*j + d*k" in ambient form.
std::string to_string(const OrderElement& x);

// All integral x with 0 < norm(x) <= bound, sorted by (norm, coordinates).
// Coordinate box |x_i| <= sqrt(bound * (G^-1)_ii) is exact for a positive definite Gram matrix G.
std::vector<OrderElement> short_vectors(const OrderPtr& ctx, const Rational& bound);

// Elements of norm 1.
std::vector<OrderElement> order_units(const OrderPtr& ctx);

// No integral x with 1 < norm(x) < 4.
bool discretely_normed(const OrderPtr& ctx);

enum class GE2Class { GE2Ring, NotGE2Ring };
std::string to_string(GE2Class c);

// Z, Z[sqrt(-d)] and I_d only; throws InvalidArgument otherwise.
GE2Class ge2_classification(const OrderPtr& ctx);

// Contexts where GL_2 = GE_2 and the Euclidean-style reduction applies.
bool supports_decomposition(const OrderPtr& ctx);

// Integral point of the order minimizing norm(target - x). Ties prefer the
// componentwise half-up rounding of the basis coordinates, then the
// lexicographically smallest coordinate vector.
OrderElement nearest_lattice_point(const OrderPtr& ctx, const Ambient& target);

// The Z-linear map O5 -> O2 fixed by its values on the O5 basis.
OrderElement u_hom_f(const OrderElement& x);

// a + b*sqrt(-3) -> a + b*(1 + sqrt(-11))/2, from Z[sqrt(-3)] to I_11.
OrderElement phi_quadratic(const OrderElement& x);

struct OrderMul {
  OrderElement operator()(const OrderElement& x, const OrderElement& y) const { return x * y; }
};
using OrderUnitGroup = FiniteGroup<OrderElement, OrderMul>;

// U(ctx), generated by all of its elements; index 0 is 1.
OrderUnitGroup unit_group(const OrderPtr& ctx);

}  // namespace gecliff
