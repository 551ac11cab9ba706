#include <doctest.h>

#include <string>

#include "gecliff/presentation.hpp"

using namespace gecliff;

namespace {

std::string ih(int h) { return "i" + std::to_string(h); }

AbelianInvariants elementary_two(int k) {
  AbelianInvariants inv;
  inv.torsion.assign(k, Integer(2));
  return inv;
}

}  // namespace

TEST_CASE("relator helpers") {
  const Relator r{{"a", 1}, {"a", 1}, {"b", 2}, {"b", -2}, {"j", -1}};
  CHECK(free_reduce(r) == Relator{{"a", 2}, {"j", -1}});
  CHECK(to_string(free_reduce(r)) == "a^2 j^-1");
  CHECK(to_string(Relator{}) == "1");
  CHECK(free_reduce(Relator{{"x", 3}, {"x", -3}}).empty());
}

TEST_CASE("builtin presentations") {
  for (int n = 1; n <= 6; ++n) {
    for (const char* kind : {"lemma53", "lemma54"}) {
      CAPTURE(n);
      CAPTURE(kind);
      const auto p = builtin_presentation(kind, n);
      CHECK(p.generators.size() == static_cast<std::size_t>(2 * n + 1));
      CHECK_NOTHROW(p.validate());
      REQUIRE(p.model.has_value());
      const auto rep = verify_presentation(p);
      CHECK(rep.checked == p.relators.size());
      CHECK(rep.pass());
    }
  }
  const auto p4 = builtin_presentation("lemma54", 4);
  CHECK(p4.generators ==
        std::vector<std::string>{"j", "a", "b_i1", "b_i2", "b_i3", "c", "d_i1", "d_i2", "d_i3"});
  CHECK_THROWS_AS(builtin_presentation("lemma99", 2), InvalidArgument);
  CHECK_THROWS_AS(builtin_presentation("lemma53", 0), InvalidArgument);
}

TEST_CASE("a corrupted relator is detected") {
  auto p = builtin_presentation("lemma54", 3);
  p.relators.push_back({{"a", 2}});
  const auto rep = verify_presentation(p);
  CHECK_FALSE(rep.pass());
  CHECK(rep.failures == std::vector<std::string>{"a^2"});

  auto q = builtin_presentation("lemma53", 2);
  q.model.reset();
  CHECK_THROWS_AS(verify_presentation(q), MissingModel);
}

TEST_CASE("abelianizations") {
  const AbelianInvariants c12{{Integer(12)}, 0};
  CHECK(abelianization(builtin_presentation("lemma53", 1)) == c12);
  CHECK(abelianization(builtin_presentation("lemma54", 1)) == c12);
  CHECK(abelianization(builtin_presentation("sl2z-classic", 0)) == c12);
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(abelianization(builtin_presentation("lemma53", n)) == elementary_two(n));
    CHECK(abelianization(builtin_presentation("lemma54", n)) == elementary_two(n));
  }
  const auto free2 = parse_presentation("gens: x y\n");
  CHECK(abelianization(free2) == AbelianInvariants{{}, 2});
}

TEST_CASE("sl2z classic presentation") {
  auto p = builtin_presentation("sl2z-classic", 0);
  CHECK(verify_presentation(p).pass());
  p.relators[0] = {{"a", 3}};
  CHECK_FALSE(verify_presentation(p).pass());
}

TEST_CASE("exponent matrix") {
  const auto p = parse_presentation("gens: x y\nrel: x^2 y x^-1\nrel: y^3\n");
  const IntMatrix expect{{Integer(1), Integer(1)}, {Integer(0), Integer(3)}};
  CHECK(exponent_matrix(p) == expect);
  CHECK(abelian_image_is_zero(p, {{"y", 3}}));
  CHECK_FALSE(abelian_image_is_zero(p, {{"y", 1}}));
  CHECK(abelian_image_is_zero(p, {{"x", 3}}));
}

TEST_CASE("amalgam splits of lemma54") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const auto p = builtin_presentation("lemma54", n);
    const auto s = amalgam_split(p, builtin_partition(n));
    CHECK(structurally_equal(s.amalgamated_c, expected_amalgamated(n)));
    CHECK(verify_presentation(s.factor_ac).pass());
    CHECK(verify_presentation(s.factor_bc).pass());
    for (const auto& g : s.partition.a) CHECK_FALSE(s.partition.c.count(g));
    for (const auto& g : s.partition.b) CHECK_FALSE(s.partition.c.count(g));
  }
  const auto s1 = amalgam_split(builtin_presentation("lemma54", 1), builtin_partition(1));
  CHECK(s1.amalgamated_c.generators == std::vector<std::string>{"j"});
}

TEST_CASE("abelian classes of the non-amalgamated generators") {
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    const auto p = builtin_presentation("lemma54", n);
    CHECK_FALSE(abelian_image_is_zero(p, {{"b_" + ih(n - 1), 1}}));
    CHECK(abelian_image_is_zero(p, {{"d_" + ih(n - 1), 1}}));
  }
}

TEST_CASE("split errors") {
  const auto p = builtin_presentation("lemma54", 3);
  Partition overlap{{"b_i1", "d_i2"}, {"b_i1", "b_i2", "d_i1"}, {"j", "a", "c"}};
  CHECK_THROWS_AS(amalgam_split(p, overlap), PartitionNotDisjoint);

  Partition missing{{"d_i2"}, {"b_i1", "b_i2"}, {"j", "a", "c"}};
  CHECK_THROWS_AS(amalgam_split(p, missing), PartitionNotDisjoint);

  Partition crossing{{"d_i2"}, {"b_i1", "b_i2", "d_i1"}, {"j", "a", "c"}};
  try {
    amalgam_split(p, crossing);
    FAIL("expected RelatorCrossesFactors");
  } catch (const RelatorCrossesFactors& e) {
    const auto r = parse_presentation("gens: j a b_i1 b_i2 c d_i1 d_i2\nrel: " + e.relator() + "\n");
    bool has_a = false, has_b = false;
    for (const auto& l : r.relators.at(0)) {
      has_a = has_a || l.gen == "d_i2";
      has_b = has_b || l.gen == "b_i1" || l.gen == "b_i2" || l.gen == "d_i1";
    }
    CHECK(has_a);
    CHECK(has_b);
  }
}

TEST_CASE("text format") {
  for (const char* kind : {"lemma53", "lemma54"}) {
    const auto p = builtin_presentation(kind, 4);
    const auto q = parse_presentation(to_text(p));
    CHECK(q.generators == p.generators);
    CHECK(q.relators == p.relators);
  }
  const auto c = parse_presentation("# comment\ngens: a b\nrel: a^2 b^-3 # tail\nrel: 1\n");
  CHECK(c.relators.size() == 2);
  CHECK(c.relators[1].empty());
  CHECK(c.relators[0] == Relator{{"a", 2}, {"b", -3}});

  try {
    parse_presentation("gens: a\nrel: a^x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 15);
  }
  CHECK_THROWS_AS(parse_presentation("gens: a\nrel: b\n"), ParseError);
}

TEST_CASE("homomorphism checks") {
  const auto p = builtin_presentation("lemma53", 4);
  const auto L = Order::lipschitz();
  std::vector<OrderElement> units{L->from_ambient({0, 1, 0, 0}), L->from_ambient({0, 0, 1, 0}),
                                  L->from_ambient({0, 0, 0, 1})};
  const auto images = lemma_model("lemma53", L->one(), units);
  const auto ok = check_hom(p, images, L->one());
  CHECK(ok.ok);
  CHECK(ok.checked == p.relators.size());

  auto bad = images;
  bad.insert_or_assign("A", mat_identity(L->one()));
  const auto r = check_hom(p, bad, L->one());
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.witness.empty());

  auto partial = images;
  partial.erase("J");
  CHECK_THROWS_AS(check_hom(p, partial, L->one()), MissingModel);
}
