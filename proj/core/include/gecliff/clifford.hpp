#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gecliff/finite_group.hpp"
#include "gecliff/rational.hpp"

namespace gecliff {

// Largest supported n for C_n (generators i_1 .. i_{n-1}).
inline constexpr int kMaxCliffordDimension = 16;

// Basis monomial i_{h1} i_{h2} ... i_{hm} with h1 < ... < hm, stored as a bit
// mask (bit h-1 set for i_h). The empty blade is the scalar 1.
class Blade {
 public:
  constexpr Blade() = default;
  constexpr explicit Blade(std::uint32_t mask) : mask_(mask) {}
  static Blade from_indices(std::span<const int> indices);

  constexpr std::uint32_t mask() const { return mask_; }
  int grade() const;
  std::vector<int> indices() const;
  bool is_scalar() const { return mask_ == 0; }

  // Canonical order: by grade, then lexicographically by index list.
  friend bool operator<(Blade x, Blade y);
  friend constexpr bool operator==(Blade x, Blade y) { return x.mask_ == y.mask_; }

 private:
  std::uint32_t mask_ = 0;
};

// Sign of the product of two blades: reordering transpositions times one -1
// for every repeated generator (i_h^2 = -1). The product blade is x ^ y.
int blade_product_sign(Blade x, Blade y);

// Exact element of C_n(Q). Zero coefficients are never stored.
class CliffordElement {
 public:
  explicit CliffordElement(int n);

  static CliffordElement scalar(int n, const Rational& value);
  static CliffordElement generator(int n, int h);  // i_h, 1 <= h <= n-1; h == 0 gives 1
  static CliffordElement blade(int n, Blade b, const Rational& coeff = 1);
  // x_0 + x_1 i_1 + ... + x_{n-1} i_{n-1}
  static CliffordElement vector(int n, std::span<const Rational> coords);

  int dimension() const { return n_; }
  const std::map<Blade, Rational>& terms() const { return terms_; }
  Rational coeff(Blade b) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;
  bool is_vector() const;
  bool is_integral() const;
  // Scalar part (coefficient of the empty blade).
  Rational scalar_part() const { return coeff(Blade{}); }
  // Coordinates over {1, i_1, ..., i_{n-1}}; the element must be a vector.
  std::vector<Rational> vector_coords() const;

  CliffordElement& operator+=(const CliffordElement& o);
  CliffordElement& operator-=(const CliffordElement& o);
  CliffordElement& operator*=(const Rational& s);

  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
  friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);
  friend CliffordElement operator*(CliffordElement a, const Rational& s) { return a *= s; }
  friend CliffordElement operator*(const Rational& s, CliffordElement a) { return a *= s; }
  friend CliffordElement operator-(CliffordElement a);

  friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator<(const CliffordElement& a, const CliffordElement& b);

 private:
  void set(Blade b, Rational value);

  int n_;
  std::map<Blade, Rational> terms_;
};

CliffordElement mul(const CliffordElement& a, const CliffordElement& b);

// a' : grade g scaled by (-1)^g.
CliffordElement main_involution(const CliffordElement& a);
// a* : grade g scaled by (-1)^{g(g-1)/2}.
CliffordElement reversion(const CliffordElement& a);
// a-bar = (a')*.
CliffordElement conjugation(const CliffordElement& a);
inline CliffordElement conj(const CliffordElement& a) { return conjugation(a); }

// Sum of squared coefficients.
Rational norm_sq(const CliffordElement& a);

// conj(a) / (a conj(a)); throws NotInvertibleInGamma unless a conj(a) is a nonzero scalar.
CliffordElement invert(const CliffordElement& a);
inline CliffordElement inverse(const CliffordElement& a) { return invert(a); }

bool is_vector(const CliffordElement& a);

// a != 0, a conj(a) a positive scalar, and a x a* a vector for each basis
// vector x. With `integral`, all coefficients must be integers too.
bool gamma_membership(const CliffordElement& a, bool integral);

// Componentwise nearest integer vector, ties rounded up. `z` must be a vector.
CliffordElement round_to_lattice(const CliffordElement& z);

// Canonical inclusion C_n -> C_m for m >= n.
CliffordElement embed(const CliffordElement& a, int m);

// All integral vectors of V^n with lo <= norm_sq <= hi, in a fixed order.
std::vector<CliffordElement> lattice_vectors(int n, const Rational& lo, const Rational& hi);

// The set {+-1, +-i_1, ..., +-i_{n-1}}.
std::vector<CliffordElement> unit_vectors(int n);

// Signed basis monomial: the elements of U(Gamma_n(Z)).
struct SignedBlade {
  bool negative = false;
  Blade blade;

  friend bool operator==(const SignedBlade&, const SignedBlade&) = default;
  friend bool operator<(const SignedBlade& x, const SignedBlade& y) {
    if (x.blade.mask() != y.blade.mask()) return x.blade.mask() < y.blade.mask();
    return x.negative < y.negative;
  }
};

SignedBlade operator*(const SignedBlade& x, const SignedBlade& y);
CliffordElement to_element(int n, const SignedBlade& s);
// Throws InvalidArgument unless a is +-(a blade).
SignedBlade to_signed_blade(const CliffordElement& a);

struct UnitGroup {
  int n = 1;
  std::vector<CliffordElement> elements;  // canonical order
  UnitGroupFingerprint fingerprint;
};

// U(Gamma_n(Z)) = <-1, i_1, ..., i_{n-1}>, enumerated by closure. 1 <= n <= 12.
UnitGroup enumerate_units(int n);

// Canonical text: "3/2 - 2*i1*i3 + i2" style.
std::string to_string(const CliffordElement& a);

}  // namespace gecliff
