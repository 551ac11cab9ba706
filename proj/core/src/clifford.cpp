#include "gecliff/clifford.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "gecliff/error.hpp"

namespace gecliff {

namespace {

void check_dimension(int n) {
  if (n < 1 || n > kMaxCliffordDimension)
    throw InvalidArgument("Clifford dimension n=" + std::to_string(n) + " out of range [1, " +
                          std::to_string(kMaxCliffordDimension) + "]");
}

void same_dimension(const CliffordElement& a, const CliffordElement& b) {
  if (a.dimension() != b.dimension())
    throw DimensionMismatch("Clifford elements of dimension " + std::to_string(a.dimension()) + " and " +
                            std::to_string(b.dimension()));
}

int reversion_sign(int g) { return ((g * (g - 1) / 2) % 2 == 0) ? 1 : -1; }
int main_sign(int g) { return (g % 2 == 0) ? 1 : -1; }

template <typename SignFn>
CliffordElement scale_by_grade(const CliffordElement& a, SignFn sign) {
  CliffordElement out(a.dimension());
  for (const auto& [b, c] : a.terms()) {
    const int s = sign(b.grade());
    out += CliffordElement::blade(a.dimension(), b, s > 0 ? c : Rational(-c));
  }
  return out;
}

}  // namespace

Blade Blade::from_indices(std::span<const int> indices) {
  std::uint32_t mask = 0;
  int prev = 0;
  for (int h : indices) {
    if (h <= prev || h > 31) throw InvalidArgument("blade indices must be strictly increasing and positive");
    mask |= 1u << (h - 1);
    prev = h;
  }
  return Blade(mask);
}

int Blade::grade() const { return std::popcount(mask_); }

std::vector<int> Blade::indices() const {
  std::vector<int> out;
  for (int h = 0; h < 32; ++h)
    if (mask_ & (1u << h)) out.push_back(h + 1);
  return out;
}

bool operator<(Blade x, Blade y) {
  const int gx = x.grade(), gy = y.grade();
  if (gx != gy) return gx < gy;
  const std::uint32_t d = x.mask() ^ y.mask();
  if (d == 0) return false;
  const std::uint32_t low = d & (~d + 1);
  return (x.mask() & low) != 0;
}

int blade_product_sign(Blade x, Blade y) {
  int swaps = 0;
  std::uint32_t ym = y.mask();
  while (ym) {
    const int j = std::countr_zero(ym);
    ym &= ym - 1;
    // generators of x with index greater than j that y's generator passes over
    const std::uint32_t above = (j >= 31) ? 0u : (x.mask() >> (j + 1));
    swaps += std::popcount(above);
  }
  swaps += std::popcount(x.mask() & y.mask());
  return (swaps % 2 == 0) ? 1 : -1;
}

CliffordElement::CliffordElement(int n) : n_(n) { check_dimension(n); }

CliffordElement CliffordElement::scalar(int n, const Rational& value) {
  CliffordElement a(n);
  a.set(Blade{}, value);
  return a;
}

CliffordElement CliffordElement::generator(int n, int h) {
  check_dimension(n);
  if (h < 0 || h > n - 1)
    throw InvalidArgument("generator i" + std::to_string(h) + " does not exist for n=" + std::to_string(n));
  CliffordElement a(n);
  a.set(h == 0 ? Blade{} : Blade(1u << (h - 1)), 1);
  return a;
}

CliffordElement CliffordElement::blade(int n, Blade b, const Rational& coeff) {
  check_dimension(n);
  if (b.mask() >> (n - 1)) throw InvalidArgument("blade index exceeds n-1 for n=" + std::to_string(n));
  CliffordElement a(n);
  a.set(b, coeff);
  return a;
}

CliffordElement CliffordElement::vector(int n, std::span<const Rational> coords) {
  check_dimension(n);
  if (static_cast<int>(coords.size()) != n)
    throw DimensionMismatch("vector of V^" + std::to_string(n) + " needs " + std::to_string(n) + " coordinates");
  CliffordElement a(n);
  for (int h = 0; h < n; ++h) a.set(h == 0 ? Blade{} : Blade(1u << (h - 1)), coords[h]);
  return a;
}

void CliffordElement::set(Blade b, Rational value) {
  value.canonicalize();
  if (value == 0)
    terms_.erase(b);
  else
    terms_[b] = std::move(value);
}

Rational CliffordElement::coeff(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool CliffordElement::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_scalar());
}

bool CliffordElement::is_vector() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.grade() <= 1; });
}

bool CliffordElement::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return is_integer(t.second); });
}

std::vector<Rational> CliffordElement::vector_coords() const {
  if (!is_vector()) throw InvalidArgument("element " + to_string(*this) + " is not a vector");
  std::vector<Rational> out(n_);
  for (const auto& [b, c] : terms_) out[b.is_scalar() ? 0 : b.indices().front()] = c;
  return out;
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
  same_dimension(*this, o);
  for (const auto& [b, c] : o.terms_) set(b, coeff(b) + c);
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& o) {
  same_dimension(*this, o);
  for (const auto& [b, c] : o.terms_) set(b, coeff(b) - c);
  return *this;
}

CliffordElement& CliffordElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) {
    c *= s;
    c.canonicalize();
  }
  return *this;
}

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
  same_dimension(a, b);
  std::map<Blade, Rational> acc;
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) {
      Rational p = cx * cy;
      if (blade_product_sign(x, y) < 0) p = -p;
      acc[Blade(x.mask() ^ y.mask())] += p;
    }
  CliffordElement out(a.dimension());
  for (auto& [bl, c] : acc) out.set(bl, std::move(c));
  return out;
}

CliffordElement operator-(CliffordElement a) { return a *= Rational(-1); }

bool operator<(const CliffordElement& a, const CliffordElement& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return a.terms_ < b.terms_;
}

CliffordElement mul(const CliffordElement& a, const CliffordElement& b) { return a * b; }

CliffordElement main_involution(const CliffordElement& a) { return scale_by_grade(a, main_sign); }

CliffordElement reversion(const CliffordElement& a) { return scale_by_grade(a, reversion_sign); }

CliffordElement conjugation(const CliffordElement& a) {
  return scale_by_grade(a, [](int g) { return main_sign(g) * reversion_sign(g); });
}

Rational norm_sq(const CliffordElement& a) {
  Rational s = 0;
  for (const auto& [b, c] : a.terms()) s += c * c;
  return s;
}

CliffordElement invert(const CliffordElement& a) {
  const CliffordElement abar = conjugation(a);
  const CliffordElement p = a * abar;
  if (!p.is_scalar() || p.is_zero())
    throw NotInvertibleInGamma("a*conj(a) is not a nonzero scalar for a = " + to_string(a));
  return abar * (1 / p.scalar_part());
}

bool is_vector(const CliffordElement& a) { return a.is_vector(); }

bool gamma_membership(const CliffordElement& a, bool integral) {
  if (a.is_zero()) return false;
  if (integral && !a.is_integral()) return false;
  const CliffordElement abar = conjugation(a);
  const CliffordElement p = a * abar;
  if (!p.is_scalar() || p.scalar_part() <= 0) return false;
  const CliffordElement astar = reversion(a);
  for (int h = 0; h < a.dimension(); ++h) {
    const CliffordElement x = CliffordElement::generator(a.dimension(), h);
    if (!(a * x * astar).is_vector()) return false;
  }
  return true;
}

CliffordElement round_to_lattice(const CliffordElement& z) {
  auto coords = z.vector_coords();
  for (auto& c : coords) c = Rational(round_half_up(c));
  return CliffordElement::vector(z.dimension(), coords);
}

CliffordElement embed(const CliffordElement& a, int m) {
  if (m < a.dimension()) throw InvalidArgument("embedding must go to a larger dimension");
  CliffordElement out(m);
  for (const auto& [b, c] : a.terms()) out += CliffordElement::blade(m, b, c);
  return out;
}

std::vector<CliffordElement> lattice_vectors(int n, const Rational& lo, const Rational& hi) {
  check_dimension(n);
  std::vector<CliffordElement> out;
  if (hi < 0) return out;
  const long r = isqrt_floor(hi).get_si();
  std::vector<long> x(n, -r);
  while (true) {
    Rational s = 0;
    for (long v : x) s += v * v;
    if (s >= lo && s <= hi) {
      std::vector<Rational> q(x.begin(), x.end());
      out.push_back(CliffordElement::vector(n, q));
    }
    int k = n - 1;
    while (k >= 0 && x[k] == r) x[k--] = -r;
    if (k < 0) break;
    ++x[k];
  }
  return out;
}

std::vector<CliffordElement> unit_vectors(int n) {
  std::vector<CliffordElement> out;
  for (int h = 0; h < n; ++h) {
    out.push_back(CliffordElement::generator(n, h));
    out.push_back(-CliffordElement::generator(n, h));
  }
  return out;
}

SignedBlade operator*(const SignedBlade& x, const SignedBlade& y) {
  const bool flip = blade_product_sign(x.blade, y.blade) < 0;
  return SignedBlade{x.negative != y.negative ? !flip : flip, Blade(x.blade.mask() ^ y.blade.mask())};
}

CliffordElement to_element(int n, const SignedBlade& s) {
  return CliffordElement::blade(n, s.blade, s.negative ? -1 : 1);
}

SignedBlade to_signed_blade(const CliffordElement& a) {
  if (a.terms().size() != 1) throw InvalidArgument("not a signed blade: " + to_string(a));
  const auto& [b, c] = *a.terms().begin();
  if (c != 1 && c != -1) throw InvalidArgument("not a signed blade: " + to_string(a));
  return SignedBlade{c < 0, b};
}

UnitGroup enumerate_units(int n) {
  if (n < 1 || n > 12) throw InvalidArgument("enumerate_units requires 1 <= n <= 12");
  std::vector<SignedBlade> gens{SignedBlade{true, Blade{}}};
  for (int h = 1; h < n; ++h) gens.push_back(SignedBlade{false, Blade(1u << (h - 1))});
  auto mul_fn = [](const SignedBlade& x, const SignedBlade& y) { return x * y; };
  FiniteGroup group(SignedBlade{}, gens, mul_fn, std::size_t{1} << n);

  std::vector<SignedBlade> sorted = group.elements();
  std::sort(sorted.begin(), sorted.end(), [](const SignedBlade& x, const SignedBlade& y) {
    if (!(x.blade == y.blade)) return x.blade < y.blade;
    return x.negative < y.negative;
  });
  UnitGroup out;
  out.n = n;
  for (const auto& s : sorted) out.elements.push_back(to_element(n, s));
  out.fingerprint = group.fingerprint();
  return out;
}

std::string to_string(const CliffordElement& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : a.terms()) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    std::string monomial;
    for (int h : b.indices()) monomial += (monomial.empty() ? "i" : "*i") + std::to_string(h);
    if (monomial.empty())
      os << to_string(mag);
    else if (mag == 1)
      os << monomial;
    else
      os << to_string(mag) << "*" << monomial;
  }
  return os.str();
}

}  // namespace gecliff
