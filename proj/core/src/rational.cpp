#include "gecliff/rational.hpp"

#include <cctype>

#include "gecliff/error.hpp"

namespace gecliff {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto strip_plus = [](std::string_view s) {
    return (!s.empty() && s[0] == '+') ? s.substr(1) : s;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  Integer p{std::string(strip_plus(num))};
  Integer q{std::string(den)};
  if (q == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer round_half_up(const Rational& q) { return floor(q + Rational(1, 2)); }

Integer isqrt_floor(const Rational& q) {
  if (q < 0) throw InvalidArgument("isqrt_floor of a negative value");
  // floor(sqrt(q)) == floor(sqrt(floor(q))): perfect squares are integers.
  Integer f = floor(q);
  Integer r;
  mpz_sqrt(r.get_mpz_t(), f.get_mpz_t());
  return r;
}

}  // namespace gecliff
