#include <doctest.h>

#include <random>

#include "gecliff/order.hpp"

using namespace gecliff;

namespace {

OrderElement amb(const OrderPtr& ctx, Rational a, Rational b = 0, Rational c = 0, Rational d = 0) {
  return ctx->from_ambient(Ambient{a, b, c, d});
}

std::vector<std::string> builtin_names() {
  return {"Z", "Zsqrt:-3", "Zsqrt:-5", "Imax:-1", "Imax:-2", "Imax:-3", "Imax:-7", "Imax:-11", "Imax:-19",
          "lipschitz", "hurwitz", "O3", "O5"};
}

OrderElement random_element(std::mt19937_64& rng, const OrderPtr& ctx, long range) {
  RatVector c(ctx->rank());
  for (auto& x : c) x = static_cast<long>(rng() % (2 * range + 1)) - range;
  return ctx->element(c);
}

}  // namespace

TEST_CASE("ring arithmetic examples") {
  const auto L = Order::lipschitz();
  CHECK(amb(L, 0, 1) * amb(L, 0, 0, 1) == amb(L, 0, 0, 0, 1));
  CHECK(amb(L, 1, 1, 1, 1).norm() == 4);
  const auto o5 = Order::o5();
  CHECK(amb(o5, Rational(1, 2), Rational(1, 2), Rational(1, 2)).norm() == 2);
  CHECK(amb(o5, Rational(1, 2), Rational(1, 2), Rational(1, 2)).is_integral());
  const auto i3 = Order::by_name("Imax:-3");
  CHECK(i3->basis_element(1).norm() == 1);
  CHECK(to_string(i3->basis_element(1)) == "w");
  CHECK(to_string(amb(Order::hurwitz(), Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2))) ==
        "1/2 + 1/2*i + 1/2*j + 1/2*k");
  CHECK_THROWS_AS(Order::by_name("nonsense"), InvalidArgument);
  CHECK_THROWS_AS(L->one() + Order::hurwitz()->one(), ContextMismatch);
}

TEST_CASE("bases match the quadratic rule") {
  CHECK(Order::by_name("Imax:-7")->basis()[1] == Ambient{Rational(1, 2), Rational(1, 2), 0, 0});
  CHECK(Order::by_name("Imax:-5")->basis()[1] == Ambient{0, 1, 0, 0});
  CHECK(Order::by_name("Zsqrt:-7")->basis()[1] == Ambient{0, 1, 0, 0});
}

TEST_CASE("basis products are integral") {
  for (const auto& name : builtin_names()) {
    const auto ctx = Order::by_name(name);
    for (int i = 0; i < ctx->rank(); ++i)
      for (int j = 0; j < ctx->rank(); ++j) {
        const auto p = ctx->basis_element(i) * ctx->basis_element(j);
        CHECK_MESSAGE(p.is_integral(), name);
      }
  }
}

TEST_CASE("norm is multiplicative and conjugation is an anti-involution") {
  std::mt19937_64 rng(31);
  for (const auto& name : builtin_names()) {
    const auto ctx = Order::by_name(name);
    for (int t = 0; t < 40; ++t) {
      const auto x = random_element(rng, ctx, 4);
      const auto y = random_element(rng, ctx, 4);
      CHECK((x * y).norm() == x.norm() * y.norm());
      CHECK((x * y).conj() == y.conj() * x.conj());
      CHECK(x.conj().conj() == x);
      CHECK(x * x.conj() == x.norm() * ctx->one());
      CHECK(x.norm() >= 0);
    }
  }
}

TEST_CASE("short vectors") {
  CHECK(short_vectors(Order::integers(), 1).size() == 2);
  CHECK(short_vectors(Order::by_name("Imax:-1"), 2).size() == 8);
  CHECK(short_vectors(Order::hurwitz(), 1).size() == 24);
  // brute force over a generous coordinate box
  std::mt19937_64 rng(1);
  for (const auto& name : builtin_names()) {
    const auto ctx = Order::by_name(name);
    const Rational bound = 5;
    const auto found = short_vectors(ctx, bound);
    std::size_t brute = 0;
    const int r = ctx->rank();
    std::vector<long> c(r, -8);
    while (true) {
      const auto x = ctx->element(RatVector(c.begin(), c.end()));
      const Rational nn = x.norm();
      if (nn > 0 && nn <= bound) ++brute;
      int k = r - 1;
      while (k >= 0 && c[k] == 8) c[k--] = -8;
      if (k < 0) break;
      ++c[k];
    }
    CHECK_MESSAGE(found.size() == brute, name);
    for (std::size_t i = 1; i < found.size(); ++i) CHECK(found[i - 1].norm() <= found[i].norm());
  }
}

TEST_CASE("unit counts") {
  const std::vector<std::pair<std::string, std::size_t>> expected{
      {"Z", 2}, {"Imax:-1", 4}, {"Imax:-3", 6}, {"Imax:-7", 2}, {"Zsqrt:-3", 2},
      {"lipschitz", 8}, {"hurwitz", 24}, {"O3", 12}, {"O5", 6}};
  for (const auto& [name, count] : expected) CHECK_MESSAGE(order_units(Order::by_name(name)).size() == count, name);
  CHECK(unit_group(Order::lipschitz()).abelianization().order() == 4);
  CHECK(unit_group(Order::hurwitz()).abelianization().torsion == std::vector<Integer>{3});
}

TEST_CASE("discretely normed orders") {
  CHECK(discretely_normed(Order::by_name("Zsqrt:-5")));
  CHECK_FALSE(discretely_normed(Order::by_name("Imax:-1")));
  CHECK_FALSE(discretely_normed(Order::o5()));
  CHECK(discretely_normed(Order::integers()));
}

TEST_CASE("GE2 classification") {
  CHECK(ge2_classification(Order::by_name("Imax:-11")) == GE2Class::GE2Ring);
  CHECK(ge2_classification(Order::by_name("Zsqrt:-3")) == GE2Class::GE2Ring);
  CHECK(ge2_classification(Order::by_name("Imax:-5")) == GE2Class::NotGE2Ring);
  CHECK(ge2_classification(Order::integers()) == GE2Class::GE2Ring);
  CHECK_THROWS_AS(ge2_classification(Order::lipschitz()), InvalidArgument);
  CHECK(supports_decomposition(Order::o5()));
  CHECK_FALSE(supports_decomposition(Order::by_name("Imax:-19")));
  for (int d = 1; d <= 30; ++d)
    for (bool maximal : {false, true}) {
      const auto ctx = Order::quadratic(d, maximal);
      CHECK_MESSAGE(discretely_normed(ctx) == (ge2_classification(ctx) == GE2Class::NotGE2Ring), ctx->name());
    }
}

TEST_CASE("nearest lattice point matches brute force") {
  std::mt19937_64 rng(41);
  for (const auto& name : {"Imax:-3", "Imax:-11", "lipschitz", "hurwitz", "O3", "O5"}) {
    const auto ctx = Order::by_name(name);
    for (int t = 0; t < 60; ++t) {
      Ambient target{};
      for (int k = 0; k < (ctx->is_quaternion() ? 4 : 2); ++k) target[k] = Rational(static_cast<long>(rng() % 41) - 20, 6);
      const auto p = nearest_lattice_point(ctx, target);
      CHECK(p.is_integral());
      const OrderElement t_el = ctx->from_ambient(target);
      const Rational best = (t_el - p).norm();
      const int r = ctx->rank();
      std::vector<long> c(r, -6);
      while (true) {
        const auto x = ctx->element(RatVector(c.begin(), c.end()));
        CHECK((t_el - x).norm() >= best);
        int k = r - 1;
        while (k >= 0 && c[k] == 6) c[k--] = -6;
        if (k < 0) break;
        ++c[k];
      }
    }
  }
}

TEST_CASE("the U-homomorphism f") {
  const auto o5 = Order::o5();
  const auto o2 = Order::hurwitz();
  auto h = [&](Rational a, Rational b, Rational c, Rational d) { return o2->from_ambient(Ambient{a, b, c, d}); };
  const Rational half(1, 2);
  CHECK(u_hom_f(o5->one()) == o2->one());
  CHECK(u_hom_f(o5->basis_element(1)) == h(half, half, half, half));
  CHECK(u_hom_f(o5->basis_element(2)) == h(half, half, -half, half));
  CHECK(u_hom_f(o5->basis_element(3)) == h(half, -half, half, half));
  CHECK(u_hom_f(amb(o5, 0, 1)) == h(0, 0, 0, 1));
  const auto units = order_units(o5);
  CHECK(units.size() == 6);
  for (const auto& a : units)
    for (const auto& b : units)
      for (int i = 0; i < 4; ++i) {
        const auto x = o5->basis_element(i);
        CHECK(u_hom_f(a * x * b) == u_hom_f(a) * u_hom_f(x) * u_hom_f(b));
      }
  std::mt19937_64 rng(8);
  for (int t = 0; t < 50; ++t) {
    const auto x = random_element(rng, o5, 5);
    const auto y = random_element(rng, o5, 5);
    CHECK(u_hom_f(x + y) == u_hom_f(x) + u_hom_f(y));
  }
}

TEST_CASE("phi from Z[sqrt(-3)] to I_11") {
  const auto src = Order::by_name("Zsqrt:-3");
  const auto dst = Order::by_name("Imax:-11");
  CHECK(phi_quadratic(src->one()) == dst->one());
  CHECK(phi_quadratic(src->basis_element(1)) == dst->basis_element(1));
  const auto x = src->element({2, -3});
  CHECK(phi_quadratic(x) == dst->from_ambient(Ambient{Rational(1, 2), Rational(-3, 2), 0, 0}));
}
