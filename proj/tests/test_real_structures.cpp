#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dp1/real_structures.hpp"

using namespace dp1;

namespace {

Root root(std::initializer_list<Z> l) { return Root(lattice_vector(l)); }

bool is_minus_identity(const Mat& m) {
  for (size_t i = 0; i < 9; ++i)
    for (size_t j = 0; j < 9; ++j)
      if (m[i][j] != (i == j ? -1 : 0)) return false;
  return true;
}

}  // namespace

TEST_CASE("full simple system gives sigma = -id") {
  const auto& entry = catalog_entry("RP2+4T2");
  CHECK(is_minus_identity(entry.sigma.m));
  CHECK(real_roots(entry.sigma).size() == 240);
}

TEST_CASE("empty generators give -1 on K only") {
  RealStructure sigma = involution_from_subsystem({});
  CHECK(sigma.apply(canonical_class()) == -canonical_class());
  CHECK(real_roots(sigma).empty());
  // +1 on K^perp: any root is fixed
  Root r = root({0, 1, -1, 0, 0, 0, 0, 0, 0});
  CHECK(sigma.apply(r.vec()) == r.vec());
}

TEST_CASE("a primitive orthogonal quadruple yields 4A1 on both sides") {
  const auto& entry = catalog_entry("RP2");
  auto rr = real_roots(entry.sigma);
  CHECK(rr.size() == 8);
  CHECK(dynkin_type(simple_system(rr)).label() == "4A1");
  auto dual = bertini_dual(entry.sigma);
  auto rr_dual = real_roots(dual);
  CHECK(rr_dual.size() == 8);
  CHECK(dynkin_type(simple_system(rr_dual)).label() == "4A1");
}

TEST_CASE("a subsystem without -1 in its Weyl group is rejected as non-integral") {
  // A2 glue has order 3, so the block-diagonal action cannot be integral
  Root r1 = root({0, 1, -1, 0, 0, 0, 0, 0, 0});
  Root r2 = root({0, 0, 1, -1, 0, 0, 0, 0, 0});
  CHECK_THROWS_AS(involution_from_subsystem({r1, r2}), NonIntegralError);
}

TEST_CASE("an imprimitive quadruple is rejected") {
  // orthogonal 4A1 inside a D4 frame: saturation changes the type
  Root d = root({1, -1, -1, -1, 0, 0, 0, 0, 0});
  Root c2 = root({0, 0, 1, -1, 0, 0, 0, 0, 0});
  Root c4 = root({0, 0, 0, 0, 1, -1, 0, 0, 0});
  Root theta = root({1, -1, 0, 0, -1, -1, 0, 0, 0});
  CHECK_THROWS_AS(involution_from_subsystem({d, c2, c4, theta}),
                  SaturationMismatchError);
}

TEST_CASE("bertini duality is an involution and flips the root rank") {
  for (const auto& entry : catalog()) {
    RealStructure dual = bertini_dual(entry.sigma);
    CHECK(mat_eq(bertini_dual(dual).m, entry.sigma.m));
    int r1 = static_cast<int>(simple_system(real_roots(entry.sigma)).rank());
    int r2 = static_cast<int>(simple_system(real_roots(dual)).rank());
    CHECK(r1 + r2 == 8);
  }
}

TEST_CASE("the M class and its dual bracket the root counts") {
  const auto& m = catalog_entry("RP2+4T2");
  RealStructure dual = bertini_dual(m.sigma);
  CHECK(real_roots(dual).empty());
  const auto& e7 = catalog_entry("RP2+3T2");
  CHECK(dynkin_type(simple_system(real_roots(bertini_dual(e7.sigma)))).label() == "A1");
  const auto& d4a1 = catalog_entry("RP2+1T2");
  CHECK(real_roots(d4a1.sigma).size() == 26);
}

TEST_CASE("catalog has 11 validated classes with consistent pairing") {
  const auto& entries = catalog();
  REQUIRE(entries.size() == 11);
  std::set<std::string> labels;
  for (const auto& e : entries) labels.insert(e.cls.label);
  CHECK(labels.size() == 11);
  for (const auto& e : entries) {
    const auto& partner = catalog_entry(e.cls.bertini_partner);
    CHECK(partner.cls.bertini_partner == e.cls.label);
    // involution invariants on the matrices
    CHECK(mat_eq(mat_mul(e.sigma.m, e.sigma.m), identity_mat(9)));
    Z det = det_bareiss(e.sigma.m);
    CHECK((det == 1 || det == -1));
    CHECK(e.sigma.apply(canonical_class()) == -canonical_class());
  }
  CHECK(catalog_entry("RP2+Klein").cls.eigen_type == "D4");
  CHECK(catalog_entry("RP2+Klein").cls.bertini_partner == "RP2+Klein");
  CHECK(catalog_entry("RP2").cls.eigen_type == "4A1");
  CHECK(catalog_entry("RP2+2S2").cls.eigen_type == "2A1");
  CHECK(catalog_entry("RP2+2S2").cls.bertini_partner == "RP2+2T2");
}

TEST_CASE("minus eigenlattice splits off K over the root part") {
  for (const auto& e : catalog()) {
    Sublattice minus = minus_eigenlattice(e.sigma);
    auto rr = real_roots(e.sigma);
    int eigen_rank = simple_system(rr).rank();
    CHECK(minus.rank() == 1 + eigen_rank);
    CHECK(minus.contains(canonical_class()));
    // the real roots are exactly the roots inside ker(1+sigma)
    std::set<LatticeVector> rset;
    for (const auto& r : rr) rset.insert(r.vec());
    for (const auto& r : all_roots())
      CHECK(rset.count(r.vec()) == static_cast<size_t>(minus.contains(r.vec()) ? 1 : 0));
  }
}

TEST_CASE("positive roots are half of each catalog eigen system") {
  for (const auto& e : catalog()) {
    auto rr = real_roots(e.sigma);
    auto pos = positive_roots(simple_system(rr));
    CHECK(2 * pos.size() == rr.size());
  }
}

TEST_CASE("real exceptional classes correspond to real roots") {
  for (const auto& e : catalog()) {
    auto rr = real_roots(e.sigma);
    auto ri = real_exceptional(e.sigma);
    CHECK(rr.size() == ri.size());
    CHECK(static_cast<int>(ri.size()) == e.cls.expected_lines);
    std::set<LatticeVector> rset;
    for (const auto& r : rr) rset.insert(r.vec());
    for (const auto& v : ri) CHECK(rset.count(to_root(v).vec()) == 1);
  }
}
