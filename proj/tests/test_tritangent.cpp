#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dp1/tritangent.hpp"

using namespace dp1;

namespace {

BinaryForm form(int d, std::vector<long> c) {
  std::vector<Rat> r(c.begin(), c.end());
  return BinaryForm(d, std::move(r));
}

// x0 x1 (x0 - x1) = x0^2 x1 - x0 x1^2
const BinaryForm kCubic = form(3, {0, 1, -1, 0});
// (x0^2 + x1^2)^2
const BinaryForm kPositiveQuartic = form(4, {1, 0, 2, 0, 1});
// (4 x1^2 - x0^2)(x0^2 + x1^2) = -x0^4 + 3 x0^2 x1^2 + 4 x1^4
const BinaryForm kMixedQuartic = form(4, {-1, 0, 3, 0, 4});
const BinaryForm kAnyP2 = form(2, {1, -2, 3});

}  // namespace

TEST_CASE("tangency signs at the three worked root configurations") {
  auto [real1, pos1] = real_root_signs(kPositiveQuartic, kCubic);
  CHECK(real1 == 3);
  CHECK(pos1 == 3);

  auto [real2, pos2] = real_root_signs(kMixedQuartic, kCubic);
  CHECK(real2 == 3);
  CHECK(pos2 == 2);

  // x0 (x0^2 + x1^2): single real root [0:1]
  BinaryForm q = form(3, {1, 0, 1, 0});
  BinaryForm p = form(4, {1, 0, 0, 0, 1});  // x0^4 + x1^4
  auto [real3, pos3] = real_root_signs(p, q);
  CHECK(real3 == 1);
  CHECK(pos3 == 1);
}

TEST_CASE("multiplicities are counted at repeated roots") {
  // x0 x1^2: [1:0] double, [0:1] simple
  BinaryForm q = form(3, {0, 0, 1, 0});
  auto [real, pos] = real_root_signs(kMixedQuartic, q);
  CHECK(real == 3);
  CHECK(pos == 1);  // p4 at [0:1] is 4 > 0; at [1:0] it is -1 < 0, doubled
}

TEST_CASE("shared roots are rejected") {
  BinaryForm q = form(3, {1, 0, 0, 0});
  BinaryForm p = form(4, {1, 0, 0, 0, 0});
  CHECK_THROWS_AS(real_root_signs(p, q), SharedRootError);
}

TEST_CASE("classification of the worked tritangent examples") {
  BinaryForm p6 = kCubic * kCubic;
  TritangentVerdict v1 = classify_tritangent(kAnyP2, kPositiveQuartic, p6);
  CHECK(v1.side == Side::plus);
  CHECK(v1.species == Species::hyperbolic);
  CHECK(v1.real_tangencies == 3);
  CHECK(v1.positive_real_tangencies == 3);
  CHECK(v1.resultant_value > 0);

  TritangentVerdict v2 = classify_tritangent(kAnyP2, kMixedQuartic, p6);
  CHECK(v2.side == Side::plus);
  CHECK(v2.species == Species::elliptic);
  CHECK(v2.positive_real_tangencies == 2);
  CHECK(v2.resultant_value < 0);

  BinaryForm cube = form(3, {1, 0, -1, 0});  // x0^3 - x0 x1^2
  TritangentVerdict v3 = classify_tritangent(kAnyP2, kPositiveQuartic, -(cube * cube));
  CHECK(v3.side == Side::minus);
  CHECK(v3.species == Species::hyperbolic);
  CHECK(v3.real_tangencies == 3);
}

TEST_CASE("verdicts ignore p2 and contract errors fire") {
  BinaryForm p6 = kCubic * kCubic;
  TritangentVerdict a = classify_tritangent(form(2, {0, 0, 0}), kMixedQuartic, p6);
  TritangentVerdict b = classify_tritangent(form(2, {5, -7, 11}), kMixedQuartic, p6);
  CHECK(a.species == b.species);
  CHECK(a.side == b.side);
  CHECK(a.resultant_value == b.resultant_value);

  CHECK_THROWS_AS(classify_tritangent(kAnyP2, kPositiveQuartic, form(6, {1, 0, 0, 0, 0, 0, 1})),
                  NotTritangentError);
  CHECK_THROWS_AS(classify_tritangent(kAnyP2, kPositiveQuartic, form(6, {0, 0, 0, 0, 0, 0, 0})),
                  DegenerateCurveError);
  // q3 = x0 x1 (x0 - x1) shares the root [1:0] with this quartic
  CHECK_THROWS_AS(classify_tritangent(kAnyP2, form(4, {0, 1, 1, 1, 1}), p6),
                  DegenerateCurveError);
}

TEST_CASE("parity rule equals resultant sign rule on random instances") {
  std::mt19937_64 rng(20250533);
  std::uniform_int_distribution<long> coeff(-5, 5);
  int done = 0;
  while (done < 150) {
    std::vector<Rat> cq, cp;
    for (int i = 0; i < 4; ++i) cq.emplace_back(coeff(rng));
    for (int i = 0; i < 5; ++i) cp.emplace_back(coeff(rng));
    BinaryForm q3(3, cq), p4(4, cp);
    if (q3.is_zero() || resultant(p4, q3) == 0) continue;
    auto [real, pos] = real_root_signs(p4, q3);
    CHECK((pos % 2 == 1) == (resultant(p4, q3) > 0));
    CHECK(real <= 3);
    ++done;
  }
}

TEST_CASE("gram matrix determinant via the direct moment oracle") {
  // roots {0, 1, -1}: q = t(t-1)(t+1) = t^3 - t
  BinaryForm q3 = form(3, {0, -1, 0, 1});
  BinaryForm p4 = form(4, {1, 0, 2, 0, 1});  // (t^2+1)^2 at t = roots
  GramResult g = gram_matrix(p4, q3);
  // direct sums over the known roots
  auto p = [&](Rat t) { return p4.dehomogenized().eval(t); };
  std::vector<Rat> roots{Rat(0), Rat(1), Rat(-1)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rat expect = 0;
      for (const auto& r : roots) {
        Rat power = 1;
        for (int k = 0; k < i + j; ++k) power *= r;
        expect += p(r) * power;
      }
      CHECK(g.matrix[static_cast<size_t>(i)][static_cast<size_t>(j)] == expect);
    }
  CHECK(g.determinant > 0);
  CHECK(resultant(p4, q3) > 0);
}

TEST_CASE("gram sign matches the resultant exactly for all-real roots") {
  std::mt19937_64 rng(99173);
  std::uniform_int_distribution<long> coeff(-4, 4);
  std::uniform_int_distribution<long> rootpick(-3, 3);
  int all_real_checked = 0, one_real_checked = 0;
  while (all_real_checked < 40 || one_real_checked < 40) {
    BinaryForm q3(3, {Rat(0), Rat(0), Rat(0), Rat(0)});
    bool all_real = (rng() % 2) == 0;
    if (all_real) {
      long r1 = rootpick(rng), r2 = rootpick(rng), r3 = rootpick(rng);
      if (r1 == r2 || r1 == r3 || r2 == r3) continue;  // need square-free
      // affine roots r_i of the dehomogenization: factors (t - r_i)
      q3 = BinaryForm(1, {Rat(-r1), Rat(1)}) * BinaryForm(1, {Rat(-r2), Rat(1)}) *
           BinaryForm(1, {Rat(-r3), Rat(1)});
    } else {
      long r1 = rootpick(rng);
      long a = 1 + static_cast<long>(rng() % 3);
      // (t - r1)((t - s)^2 + a) has one real root
      long s = rootpick(rng);
      BinaryForm quad(2, {Rat(s * s + a), Rat(-2 * s), Rat(1)});
      q3 = BinaryForm(1, {Rat(-r1), Rat(1)}) * quad;
    }
    std::vector<Rat> cp;
    for (int i = 0; i < 5; ++i) cp.emplace_back(coeff(rng));
    BinaryForm p4(4, cp);
    Rat res = resultant(p4, q3);
    if (res == 0) continue;
    Poly q = q3.dehomogenized();
    if (q.degree() != 3 || poly_gcd(q, q.derivative()).degree() > 0) continue;
    GramResult g = gram_matrix(p4, q3);
    if (all_real) {
      CHECK(sign_of(g.determinant) == sign_of(res));
      ++all_real_checked;
    } else {
      // complex-pair case: the real-basis moment determinant flips the sign
      CHECK(sign_of(g.determinant) == -sign_of(res));
      ++one_real_checked;
    }
  }
}

TEST_CASE("symmetric plane sextics map to the cone model") {
  // x2^6 - x0^6 - x1^6
  TernarySextic s;
  s.c[static_cast<size_t>(TernarySextic::index(6, 0))] = 1;
  s.c[static_cast<size_t>(TernarySextic::index(0, 0))] = -1;
  s.c[static_cast<size_t>(TernarySextic::index(0, 6))] = -1;
  auto [p2, p4, p6] = symmetric_to_cone(s);
  CHECK(p2.is_zero());
  CHECK(p4.is_zero());
  CHECK(p6 == BinaryForm(6, {Rat(-1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(-1)}));

  TernarySextic odd = s;
  odd.c[static_cast<size_t>(TernarySextic::index(1, 0))] = 2;
  CHECK_THROWS_AS(symmetric_to_cone(odd), NotSymmetricError);

  TernarySextic through = s;
  through.c[static_cast<size_t>(TernarySextic::index(6, 0))] = 0;
  CHECK_THROWS_AS(symmetric_to_cone(through), ThroughCenterError);

  // scaling normalizes: 2 q x2^4 with s3 = 2 gives p2 = q
  TernarySextic scaled;
  scaled.c[static_cast<size_t>(TernarySextic::index(6, 0))] = 2;
  scaled.c[static_cast<size_t>(TernarySextic::index(4, 1))] = 4;
  scaled.c[static_cast<size_t>(TernarySextic::index(0, 0))] = 2;
  auto [sp2, sp4, sp6] = symmetric_to_cone(scaled);
  CHECK(sp2 == BinaryForm(2, {Rat(0), Rat(2), Rat(0)}));
  CHECK(sp4.is_zero());
  CHECK(sp6 == BinaryForm(6, {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)}));
}

TEST_CASE("nodal signed count follows 16 - 2k") {
  std::vector<Root> nodes;
  CHECK(nodal_signed_count(nodes) == 16);
  nodes.emplace_back(lattice_vector({0, 1, -1, 0, 0, 0, 0, 0, 0}));
  nodes.emplace_back(lattice_vector({0, 0, 0, 1, -1, 0, 0, 0, 0}));
  nodes.emplace_back(lattice_vector({0, 0, 0, 0, 0, 1, -1, 0, 0}));
  CHECK(nodal_signed_count(nodes) == 10);
  // the halved count for symmetric tritangent conics: 4 - k at k = 4
  nodes.emplace_back(lattice_vector({0, 0, 0, 0, 0, 0, 0, 1, -1}));
  Z count4 = nodal_signed_count(nodes);
  CHECK(count4 == 8);
  CHECK(count4 / 2 - 4 == 0);
  // dependent set rejected
  nodes.emplace_back(lattice_vector({0, -1, 1, 0, 0, 0, 0, 0, 0}));
  CHECK_THROWS_AS(nodal_signed_count(nodes), Error);
}

TEST_CASE("tritangent table reproduces the seven arrangements") {
  struct Row {
    const char* code;
    int total, h, e;
  };
  const Row rows[] = {{"<4|0>", 120, 64, 56}, {"<3|0>", 64, 36, 28}, {"<2|0>", 32, 20, 12},
                      {"<1|0>", 16, 12, 4},   {"<0|0>", 8, 8, 0},    {"<|||>", 24, 16, 8},
                      {"<1|1>", 24, 16, 8}};
  for (const auto& row : rows) {
    TritangentRow t = tritangent_table(row.code);
    CHECK(t.total == row.total);
    CHECK(t.hyperbolic == row.h);
    CHECK(t.elliptic == row.e);
    CHECK(t.hyperbolic - t.elliptic == 8);
  }
  CHECK_THROWS_AS(tritangent_table("<5|0>"), Error);
}
