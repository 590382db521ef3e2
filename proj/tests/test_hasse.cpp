#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dp1/hasse.hpp"
#include "dp1/pin.hpp"

using namespace dp1;

namespace {

SimpleSystem system_of(const std::string& label) {
  return simple_system(real_roots(catalog_entry(label).sigma));
}

void check_pairing_shape(const Pairing& p, int expected_pairs) {
  const auto& nodes = p.poset.nodes;
  CHECK(static_cast<int>(p.pairs.size()) == expected_pairs);
  std::set<int> used;
  for (const auto& [u, v] : p.pairs) {
    CHECK(used.insert(u).second);
    CHECK(used.insert(v).second);
    CHECK(nodes[static_cast<size_t>(u)].height >= 2);
    CHECK(nodes[static_cast<size_t>(v)].height >= 2);
    // each pair is a cover edge
    bool is_cover = false;
    for (const auto& [f, g] : p.poset.covers)
      if ((f == u && g == v) || (f == v && g == u)) is_cover = true;
    CHECK(is_cover);
  }
  int nonsimple = 0;
  for (const auto& n : nodes)
    if (n.height >= 2) ++nonsimple;
  CHECK(static_cast<int>(used.size()) == nonsimple);
}

}  // namespace

TEST_CASE("hasse poset of E8 has 120 nodes and unit-step covers") {
  HassePoset poset = hasse_covers(system_of("RP2+4T2"));
  CHECK(poset.nodes.size() == 120);
  for (const auto& [f, g] : poset.covers) {
    const auto& nf = poset.nodes[static_cast<size_t>(f)];
    const auto& ng = poset.nodes[static_cast<size_t>(g)];
    CHECK(ng.height == nf.height + 1);
    LatticeVector diff = ng.root.vec() - nf.root.vec();
    CHECK(inner(nf.root.vec(), diff) == 1);
    bool simple = false;
    for (const auto& b : poset.system.roots())
      if (b.vec() == diff) simple = true;
    CHECK(simple);
  }
}

TEST_CASE("hasse poset of A1 is a single node") {
  SimpleSystem a1 = system_of("RP2+3S2");
  HassePoset poset = hasse_covers(a1);
  CHECK(poset.nodes.size() == 1);
  CHECK(poset.covers.empty());
}

TEST_CASE("hasse poset of D4 peaks at the unique height-5 root") {
  SimpleSystem d4 = system_of("RP2+Klein");
  HassePoset poset = hasse_covers(d4);
  CHECK(poset.nodes.size() == 12);
  CHECK(poset.nodes.back().height == 5);
}

TEST_CASE("pair_matching covers all catalog types") {
  check_pairing_shape(pair_matching(system_of("RP2+4T2")), 56);   // E8
  check_pairing_shape(pair_matching(system_of("RP2+3T2")), 28);   // E7
  check_pairing_shape(pair_matching(system_of("RP2+2T2")), 12);   // D6
  check_pairing_shape(pair_matching(system_of("RP2+Klein")), 4);  // D4
  check_pairing_shape(pair_matching(system_of("RP2+3S2")), 0);    // A1
  check_pairing_shape(pair_matching(system_of("RP2+1T2")), 4);    // D4+A1
  check_pairing_shape(pair_matching(system_of("RP2")), 0);        // 4A1
}

TEST_CASE("pair_matching is deterministic") {
  Pairing a = pair_matching(system_of("RP2+2T2"));
  Pairing b = pair_matching(system_of("RP2+2T2"));
  CHECK(a.pairs == b.pairs);
}

TEST_CASE("cancelation holds pairwise and reproduces the signed count") {
  for (const auto& entry : catalog()) {
    const SmithModel& m = class_model(entry.cls.label);
    for (const auto& a : class_admissible(entry.cls.label)) {
      Pairing p = pair_matching(a.basis);
      CHECK(verify_cancelation(m, a.chi, p));
      LineCount lc = line_counts(m, a.chi);
      CHECK(signed_sum_via_matching(m, a.chi, p) == lc.signed_sum);
      CHECK(lc.signed_sum == 2 * m.rank_real());
    }
  }
}

TEST_CASE("cancelation rejects a mismatched basis") {
  const SmithModel& m = class_model("RP2+4T2");
  const auto& adm = class_admissible("RP2+4T2");
  REQUIRE(!adm.empty());
  Pairing p = pair_matching(adm[0].basis);
  QuadraticFunction zero;
  zero.chi.assign(static_cast<size_t>(m.minus_lattice.rank()), 0);
  CHECK_THROWS_AS(verify_cancelation(m, zero, p), Error);
}
