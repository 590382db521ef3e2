#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dp1/binary_form.hpp"

using namespace dp1;

namespace {

BinaryForm form(int d, std::vector<long> c) {
  std::vector<Rat> r(c.begin(), c.end());
  return BinaryForm(d, std::move(r));
}

Rat rand_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  return Rat(num(rng), den(rng));
}

BinaryForm rand_form(int d, std::mt19937_64& rng) {
  std::vector<Rat> c;
  for (int i = 0; i <= d; ++i) c.push_back(rand_rat(rng));
  return BinaryForm(d, std::move(c));
}

}  // namespace

TEST_CASE("rational parsing round-trips") {
  CHECK(parse_rational("3/6") == Rat(1, 2));
  CHECK(parse_rational("-4") == Rat(-4));
  CHECK(rational_string(Rat(-3, 9)) == "-1/3");
  CHECK(rational_string(Rat(7)) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("polynomial division, gcd and squarefree split") {
  // (t - 1)^2 (t + 2)
  Poly f({Rat(2), Rat(-3), Rat(0), Rat(1)});
  auto parts = squarefree_decomposition(f);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].second == 1);
  CHECK(parts[0].first.eval(Rat(-2)) == 0);
  CHECK(parts[1].second == 2);
  CHECK(parts[1].first.eval(Rat(1)) == 0);

  Poly g({Rat(-1), Rat(0), Rat(1)});  // t^2 - 1
  Poly h({Rat(-1), Rat(1)});          // t - 1
  CHECK(poly_gcd(g, h) == h.monic());
}

TEST_CASE("sturm isolation finds all real roots exactly once") {
  // t(t-1)(t+3/2): roots -3/2, 0, 1
  Poly f = Poly({Rat(0), Rat(1)}) * Poly({Rat(-1), Rat(1)}) * Poly({Rat(3, 2), Rat(1)});
  auto roots = isolate_real_roots(f);
  REQUIRE(roots.size() == 3);
  std::vector<Rat> expected{Rat(-3, 2), Rat(0), Rat(1)};
  for (size_t i = 0; i < 3; ++i) {
    if (roots[i].exact) {
      CHECK(roots[i].value == expected[i]);
    } else {
      CHECK(roots[i].lo < expected[i]);
      CHECK(expected[i] < roots[i].hi);
    }
  }
  // t^2 + 1 has none
  CHECK(isolate_real_roots(Poly({Rat(1), Rat(0), Rat(1)})).empty());
  // irrational roots: t^2 - 2
  auto irr = isolate_real_roots(Poly({Rat(-2), Rat(0), Rat(1)}));
  REQUIRE(irr.size() == 2);
  Poly probe({Rat(-1), Rat(1)});  // t - 1, positive at sqrt(2), negative at -sqrt(2)
  Poly f2({Rat(-2), Rat(0), Rat(1)});
  CHECK(sign_at_root(probe, f2, irr[0]) == -1);
  CHECK(sign_at_root(probe, f2, irr[1]) == 1);
}

TEST_CASE("resultant conventions and degenerate cases") {
  CHECK(resultant(form(4, {1, 0, 0, 0, 0}), form(3, {1, 0, 0, 0})) == 0);
  CHECK(resultant(form(4, {1, 0, 0, 0, 0}), form(3, {0, 0, 0, 1})) == 1);
}

TEST_CASE("resultant transforms with the twelfth power of the substitution") {
  std::mt19937_64 rng(424242);
  int done = 0;
  while (done < 25) {
    BinaryForm f = rand_form(4, rng), g = rand_form(3, rng);
    Rat a = rand_rat(rng), b = rand_rat(rng), c = rand_rat(rng), d = rand_rat(rng);
    Rat det = a * d - b * c;
    if (det == 0) continue;
    Rat lhs = resultant(compose_linear(f, a, b, c, d), compose_linear(g, a, b, c, d));
    Rat det12 = 1;
    for (int i = 0; i < 12; ++i) det12 *= det;
    CHECK(lhs == det12 * resultant(f, g));
    ++done;
  }
}

TEST_CASE("square roots of forms") {
  BinaryForm q = form(3, {1, 0, -1, 0});  // x0^3 - x0 x1^2
  auto r = sqrt_form(q * q);
  REQUIRE(r.has_value());
  CHECK(*r == q);

  auto two = sqrt_form(form(6, {4, 0, 0, 0, 0, 0, 0}));
  REQUIRE(two.has_value());
  CHECK(two->coeffs[0] == 2);

  CHECK_FALSE(sqrt_form(form(6, {1, 0, 0, 0, 0, 0, 1})).has_value());
  CHECK_FALSE(sqrt_form(form(6, {0, 0, 0, 0, 0, 0, 0})).has_value());
  CHECK_FALSE(sqrt_form(form(6, {-1, 0, 0, 0, 0, 0, 0})).has_value());

  // negative-leading squares are normalized to a positive leading coefficient
  BinaryForm neg = form(3, {-2, 0, 0, 1});
  auto rn = sqrt_form(neg * neg);
  REQUIRE(rn.has_value());
  CHECK(*rn == -neg);

  // powers of x1 alone
  auto x1cube = sqrt_form(form(6, {0, 0, 0, 0, 0, 0, 9}));
  REQUIRE(x1cube.has_value());
  CHECK(x1cube->coeffs[3] == 3);
}

TEST_CASE("random squares round-trip") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    BinaryForm q = rand_form(3, rng);
    if (q.is_zero()) continue;
    auto r = sqrt_form(q * q);
    REQUIRE(r.has_value());
    CHECK(*r * *r == q * q);
  }
}
