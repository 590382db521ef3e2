#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "dp1/roots.hpp"

using namespace dp1;

TEST_CASE("there are 240 roots, closed under negation") {
  const auto& roots = all_roots();
  CHECK(roots.size() == 240);
  std::set<LatticeVector> set;
  for (const auto& r : roots) set.insert(r.vec());
  CHECK(set.count(lattice_vector({0, 1, -1, 0, 0, 0, 0, 0, 0})) == 1);
  for (const auto& r : roots) CHECK(set.count(-r.vec()) == 1);
}

TEST_CASE("there are 240 exceptional classes") {
  const auto& classes = all_exceptional();
  CHECK(classes.size() == 240);
  std::set<LatticeVector> set;
  for (const auto& v : classes) set.insert(v.vec());
  CHECK(set.count(lattice_vector({0, 1, 0, 0, 0, 0, 0, 0, 0})) == 1);
  CHECK(set.count(canonical_class()) == 0);  // K.K = 1, not a class
}

TEST_CASE("the two bijections are mutually inverse and onto") {
  ExceptionalClass e1(lattice_vector({0, 1, 0, 0, 0, 0, 0, 0, 0}));
  CHECK(to_root(e1).vec() == lattice_vector({3, -2, -1, -1, -1, -1, -1, -1, -1}));

  std::set<LatticeVector> image;
  for (const auto& v : all_exceptional()) {
    Root r = to_root(v);
    CHECK(to_exceptional(r) == v);
    CHECK(inner(to_exceptional(r).vec(), to_exceptional(r).vec()) == -1);
    CHECK(inner(to_exceptional(r).vec(), canonical_class()) == -1);
    image.insert(r.vec());
  }
  CHECK(image.size() == 240);
  for (const auto& r : all_roots()) CHECK(image.count(r.vec()) == 1);
}

TEST_CASE("type constructors validate their invariants") {
  CHECK_THROWS_AS((void)Root(canonical_class()), Error);
  CHECK_THROWS_AS((void)ExceptionalClass(canonical_class()), Error);
}

TEST_CASE("simple system of the full root set is E8") {
  SimpleSystem s = simple_system(all_roots());
  CHECK(s.rank() == 8);
  CHECK(dynkin_type(s).label() == "E8");
}

TEST_CASE("simple system handles tiny and empty inputs") {
  Root r(lattice_vector({0, 1, -1, 0, 0, 0, 0, 0, 0}));
  Root nr(-r.vec());
  SimpleSystem s = simple_system({r, nr});
  CHECK(s.rank() == 1);
  CHECK(positivity_value(s.roots()[0].vec()) > 0);
  CHECK(dynkin_type(s).label() == "A1");

  CHECK(simple_system({}).rank() == 0);
  CHECK(dynkin_type(simple_system({})).label() == "0");

  CHECK_THROWS_AS(simple_system({r}), Error);  // not closed under negation
}

TEST_CASE("dynkin classification recognizes the catalog shapes") {
  auto root = [](std::initializer_list<Z> l) { return Root(lattice_vector(l)); };
  // four pairwise orthogonal roots
  SimpleSystem quad({root({0, 1, -1, 0, 0, 0, 0, 0, 0}), root({0, 0, 0, 1, -1, 0, 0, 0, 0}),
                     root({0, 0, 0, 0, 0, 1, -1, 0, 0}), root({0, 0, 0, 0, 0, 0, 0, 1, -1})});
  CHECK(dynkin_type(quad).label() == "4A1");
  // three legs on a center
  SimpleSystem d4({root({1, -1, -1, -1, 0, 0, 0, 0, 0}), root({0, 0, 1, -1, 0, 0, 0, 0, 0}),
                   root({0, 0, 0, 1, -1, 0, 0, 0, 0}), root({0, 0, 0, 0, 1, -1, 0, 0, 0})});
  CHECK(dynkin_type(d4).label() == "D4");
  CHECK(dynkin_type(d4).rank() == 4);
}

TEST_CASE("classify_cartan rejects non-ADE data") {
  // B2-style entry
  Mat b2 = {{2, -2}, {-1, 2}};
  CHECK_THROWS_AS(classify_cartan(b2), Error);
}

TEST_CASE("positive roots of E8: 120 of them, highest height 29") {
  SimpleSystem s = simple_system(all_roots());
  auto pos = positive_roots(s);
  CHECK(pos.size() == 120);
  CHECK(pos.back().height == 29);
  // independent route: positives under the functional
  std::set<LatticeVector> direct;
  for (const auto& r : all_roots())
    if (positivity_value(r.vec()) > 0) direct.insert(r.vec());
  CHECK(direct.size() == 120);
  for (const auto& p : pos) CHECK(direct.count(p.root.vec()) == 1);
}

TEST_CASE("positive roots of small systems") {
  Root r(lattice_vector({0, 1, -1, 0, 0, 0, 0, 0, 0}));
  SimpleSystem a1({r});
  auto pos = positive_roots(a1);
  REQUIRE(pos.size() == 1);
  CHECK(pos[0].height == 1);

  auto root = [](std::initializer_list<Z> l) { return Root(lattice_vector(l)); };
  SimpleSystem d4({root({1, -1, -1, -1, 0, 0, 0, 0, 0}), root({0, 0, 1, -1, 0, 0, 0, 0, 0}),
                   root({0, 0, 0, 1, -1, 0, 0, 0, 0}), root({0, 0, 0, 0, 1, -1, 0, 0, 0})});
  auto posd4 = positive_roots(d4);
  CHECK(posd4.size() == 12);
  CHECK(posd4.back().height == 5);
  CHECK(posd4[posd4.size() - 2].height < 5);  // unique maximal root
}
