#include "dp1/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "dp1/hasse.hpp"
#include "dp1/pin.hpp"
#include "dp1/tritangent.hpp"

namespace dp1 {

namespace {

struct Expected {
  const char* label;
  const char* eigen;
  int lines, h, e, h1;
};

// golden catalog data: class order is fixed
constexpr Expected kExpected[] = {
    {"RP2+4T2", "E8", 240, 128, 112, 9},  {"RP2+3T2", "E7", 126, 70, 56, 7},
    {"RP2+2T2", "D6", 60, 36, 24, 5},     {"RP2+1T2", "D4+A1", 26, 18, 8, 3},
    {"RP2", "4A1", 8, 8, 0, 1},           {"RP2+Klein", "D4", 24, 16, 8, 3},
    {"RP2+T2+S2", "D4", 24, 16, 8, 3},    {"RP2+4S2", "0", 0, 0, 0, 1},
    {"RP2+3S2", "A1", 2, 2, 0, 1},        {"RP2+2S2", "2A1", 4, 4, 0, 1},
    {"RP2+1S2", "3A1", 6, 6, 0, 1},
};

struct ArrangementRow {
  const char* code;
  const char* plus_label;
  const char* minus_label;
  int total, h, e;
};

constexpr ArrangementRow kArrangements[] = {
    {"<4|0>", "RP2+4T2", "RP2+4S2", 120, 64, 56},
    {"<3|0>", "RP2+3T2", "RP2+3S2", 64, 36, 28},
    {"<2|0>", "RP2+2T2", "RP2+2S2", 32, 20, 12},
    {"<1|0>", "RP2+1T2", "RP2+1S2", 16, 12, 4},
    {"<0|0>", "RP2", "RP2", 8, 8, 0},
    {"<|||>", "RP2+Klein", "RP2+Klein", 24, 16, 8},
    {"<1|1>", "RP2+T2+S2", "RP2+T2+S2", 24, 16, 8},
};

struct Check {
  bool ok = true;
  std::ostringstream why;

  void expect(bool condition, const std::string& message) {
    if (!condition) {
      if (!ok) why << "; ";
      ok = false;
      why << message;
    }
  }
};

CriterionResult criterion_enumeration() {
  Check c;
  c.expect(all_roots().size() == 240, "expected 240 roots");
  c.expect(all_exceptional().size() == 240, "expected 240 exceptional classes");
  std::set<LatticeVector> image;
  bool involutive = true, formula = true;
  for (const auto& v : all_exceptional()) {
    Root r = to_root(v);
    formula = formula && (r.vec() == -canonical_class() - v.vec());
    involutive = involutive && (to_exceptional(r) == v);
    image.insert(r.vec());
  }
  c.expect(formula, "phi is not v -> -K - v");
  c.expect(involutive, "phi_inverse(phi(v)) != v somewhere");
  std::set<LatticeVector> roots;
  for (const auto& r : all_roots()) roots.insert(r.vec());
  c.expect(image == roots, "phi is not onto the root set");
  return {1, "enumeration and the root/line bijection", c.ok,
          c.ok ? "240 roots, 240 classes, phi bijective" : c.why.str()};
}

CriterionResult criterion_eigenlattices() {
  Check c;
  size_t i = 0;
  for (const auto& entry : catalog()) {
    auto rr = real_roots(entry.sigma);
    std::string type = dynkin_type(simple_system(rr)).label();
    c.expect(type == kExpected[i].eigen,
             std::string(kExpected[i].label) + ": type " + type + " != " +
                 kExpected[i].eigen);
    ++i;
  }
  return {2, "real root lattice per deformation class", c.ok,
          c.ok ? "11 classes match E8..3A1" : c.why.str()};
}

CriterionResult criterion_line_counts() {
  Check c;
  size_t i = 0;
  for (const auto& entry : catalog()) {
    const auto& adm = class_admissible(entry.cls.label);
    const SmithModel& m = class_model(entry.cls.label);
    c.expect(!adm.empty(), std::string(kExpected[i].label) + ": no admissible chi");
    for (const auto& a : adm) {
      LineCount lc = line_counts(m, a.chi);
      bool match = lc.hyperbolic + lc.elliptic == kExpected[i].lines &&
                   lc.hyperbolic == kExpected[i].h && lc.elliptic == kExpected[i].e;
      c.expect(match, std::string(kExpected[i].label) + ": counts (" +
                          std::to_string(lc.hyperbolic + lc.elliptic) + "," +
                          std::to_string(lc.hyperbolic) + "," +
                          std::to_string(lc.elliptic) + ") off");
      if (!match) break;
    }
    ++i;
  }
  return {3, "hyperbolic/elliptic counts for every admissible chi", c.ok,
          c.ok ? "triples match for all classes and functionals" : c.why.str()};
}

CriterionResult criterion_bertini_pairs() {
  Check c;
  for (const auto& row : kArrangements) {
    const SmithModel& plus = class_model(row.plus_label);
    const SmithModel& minus = class_model(row.minus_label);
    LineCount lp = line_counts(plus, class_admissible(row.plus_label).front().chi);
    LineCount lm = line_counts(minus, class_admissible(row.minus_label).front().chi);
    Z combined = lp.signed_sum + lm.signed_sum;
    c.expect(combined == 16, std::string(row.code) + ": signed sum " +
                                 std::to_string(static_cast<long long>(combined)));
    // rank bookkeeping on the actual dual involution
    const auto& sigma = catalog_entry(row.plus_label).sigma;
    RealStructure dual = bertini_dual(sigma);
    int rank_plus = simple_system(real_roots(sigma)).rank();
    int rank_minus = simple_system(real_roots(dual)).rank();
    c.expect(rank_plus + rank_minus == 8,
             std::string(row.code) + ": rank sum " + std::to_string(rank_plus + rank_minus));
    std::string dual_type = dynkin_type(simple_system(real_roots(dual))).label();
    c.expect(dual_type == catalog_entry(row.minus_label).cls.eigen_type,
             std::string(row.code) + ": dual type " + dual_type);
  }
  return {4, "Bertini pairs: signed sums 16 and rank sums 8", c.ok,
          c.ok ? "7 pairs verified" : c.why.str()};
}

CriterionResult criterion_smith() {
  Check c;
  size_t i = 0;
  for (const auto& entry : catalog()) {
    const SmithModel& m = class_model(entry.cls.label);
    c.expect(m.quotient.dimension() == kExpected[i].h1,
             std::string(kExpected[i].label) + ": dim " +
                 std::to_string(m.quotient.dimension()));
    // two-sided kernel computation must agree
    Sublattice image = image_one_minus(entry.sigma);
    std::vector<LatticeVector> gens;
    const Mat gram = m.minus_lattice.gram();
    size_t r = static_cast<size_t>(m.minus_lattice.rank());
    for (size_t mask = 1; mask < (size_t{1} << r); ++mask) {
      LatticeVector v;
      for (size_t j = 0; j < r; ++j)
        if (mask & (size_t{1} << j)) v = v + m.minus_lattice.basis()[j];
      bool even = true;
      for (size_t j = 0; j < r; ++j)
        even = even && inner(v, m.minus_lattice.basis()[j]) % 2 == 0;
      if (even) gens.push_back(v);
    }
    for (const auto& b : m.minus_lattice.basis()) gens.push_back(2 * b);
    c.expect(Sublattice::span(gens).same_lattice(image),
             std::string(kExpected[i].label) + ": kernel characterizations differ");
    ++i;
  }
  return {5, "Smith quotient dimensions and kernel identity", c.ok,
          c.ok ? "dims (9,7,5,3,1,3,3,1,1,1,1); kernels agree both ways" : c.why.str()};
}

CriterionResult criterion_matching() {
  Check c;
  const std::pair<const char*, int> type_pairs[] = {
      {"RP2+4T2", 56}, {"RP2+3T2", 28}, {"RP2+2T2", 12}, {"RP2+Klein", 4}, {"RP2+3S2", 0}};
  for (const auto& [label, expected] : type_pairs) {
    Pairing p = pair_matching(simple_system(real_roots(catalog_entry(label).sigma)));
    c.expect(static_cast<int>(p.pairs.size()) == expected,
             std::string(label) + ": " + std::to_string(p.pairs.size()) + " pairs");
  }
  for (const auto& entry : catalog()) {
    const SmithModel& m = class_model(entry.cls.label);
    for (const auto& a : class_admissible(entry.cls.label)) {
      Pairing p = pair_matching(a.basis);
      std::set<std::pair<int, int>> cover_set(p.poset.covers.begin(),
                                              p.poset.covers.end());
      bool covers_ok = true;
      for (const auto& [u, v] : p.pairs)
        covers_ok = covers_ok && (cover_set.count({u, v}) || cover_set.count({v, u}));
      c.expect(covers_ok, entry.cls.label + ": pair that is not a cover edge");
      c.expect(verify_cancelation(m, a.chi, p),
               entry.cls.label + ": a pair fails to cancel");
      LineCount lc = line_counts(m, a.chi);
      c.expect(signed_sum_via_matching(m, a.chi, p) == lc.signed_sum &&
                   lc.signed_sum == 2 * m.rank_real(),
               entry.cls.label + ": matching route disagrees with the signed sum");
    }
  }
  return {6, "pair matching exists and cancels pairwise", c.ok,
          c.ok ? "E8:56 E7:28 D6:12 D4:4 A1:0 pairs; all cancel" : c.why.str()};
}

CriterionResult criterion_not_all_vanishing() {
  Check c;
  const std::set<std::string> with_twos = {"E8", "E7", "D6", "D4+A1", "D4"};
  for (const auto& entry : catalog()) {
    const SmithModel& m = class_model(entry.cls.label);
    bool expect_two = with_twos.count(entry.cls.eigen_type) > 0;
    for (const auto& a : class_admissible(entry.cls.label)) {
      bool found = false;
      for (const auto& rec : m.roots)
        if (quadratic_value(m, a.chi, rec.root.vec()) == 2) {
          found = true;
          break;
        }
      c.expect(found == expect_two,
               entry.cls.label + (expect_two ? ": no qhat=2 root" : ": unexpected qhat=2 root"));
    }
  }
  return {7, "qhat=2 roots exist exactly for large eigen types", c.ok,
          c.ok ? "present for E8,E7,D6,D4+A1,D4; absent for 0..4A1" : c.why.str()};
}

CriterionResult criterion_tritangent_table() {
  Check c;
  for (const auto& row : kArrangements) {
    TritangentRow t = tritangent_table(row.code);
    c.expect(t.total == row.total && t.hyperbolic == row.h && t.elliptic == row.e,
             std::string(row.code) + ": (" + std::to_string(t.total) + "," +
                 std::to_string(t.hyperbolic) + "," + std::to_string(t.elliptic) + ")");
    c.expect(t.hyperbolic - t.elliptic == 8,
             std::string(row.code) + ": difference not 8");
  }
  return {8, "tritangent section counts per arrangement", c.ok,
          c.ok ? "7 arrangements match; h - e = 8 throughout" : c.why.str()};
}

CriterionResult criterion_classifier() {
  Check c;
  // worked examples, frozen
  BinaryForm cubic(3, {Rat(0), Rat(1), Rat(-1), Rat(0)});
  BinaryForm quartic_pos(4, {Rat(1), Rat(0), Rat(2), Rat(0), Rat(1)});
  BinaryForm quartic_mixed(4, {Rat(-1), Rat(0), Rat(3), Rat(0), Rat(4)});
  BinaryForm p2(2, {Rat(1), Rat(1), Rat(1)});
  {
    TritangentVerdict v = classify_tritangent(p2, quartic_pos, cubic * cubic);
    c.expect(v.side == Side::plus && v.species == Species::hyperbolic &&
                 v.real_tangencies == 3 && v.positive_real_tangencies == 3,
             "first worked example off");
  }
  {
    TritangentVerdict v = classify_tritangent(p2, quartic_mixed, cubic * cubic);
    c.expect(v.side == Side::plus && v.species == Species::elliptic &&
                 v.positive_real_tangencies == 2,
             "second worked example off");
  }
  {
    BinaryForm cube(3, {Rat(1), Rat(0), Rat(-1), Rat(0)});
    TritangentVerdict v = classify_tritangent(p2, quartic_pos, -(cube * cube));
    c.expect(v.side == Side::minus && v.species == Species::hyperbolic,
             "negative-square example off");
  }

  std::mt19937_64 rng(0xD1CE5EED);
  std::uniform_int_distribution<long> coeff(-6, 6);
  auto rand_rat = [&]() {
    long d = 1 + static_cast<long>(rng() % 3);
    return Rat(coeff(rng), d);
  };
  int parity_checked = 0;
  while (parity_checked < 120) {
    std::vector<Rat> cq, cp;
    for (int i = 0; i < 4; ++i) cq.push_back(rand_rat());
    for (int i = 0; i < 5; ++i) cp.push_back(rand_rat());
    BinaryForm q3(3, cq), p4(4, cp);
    if (q3.is_zero()) continue;
    Rat res = resultant(p4, q3);
    if (res == 0) continue;
    auto [real, positive] = real_root_signs(p4, q3);
    (void)real;
    if ((positive % 2 == 1) != (res > 0)) {
      c.expect(false, "parity rule disagrees with resultant sign");
      break;
    }
    ++parity_checked;
  }
  c.expect(parity_checked >= 100, "not enough random instances");

  // substitution and p2 invariance of full verdicts
  int invariance_checked = 0;
  while (invariance_checked < 25) {
    std::vector<Rat> cq;
    for (int i = 0; i < 4; ++i) cq.push_back(rand_rat());
    BinaryForm q3(3, cq);
    if (q3.is_zero()) continue;
    std::vector<Rat> cp;
    for (int i = 0; i < 5; ++i) cp.push_back(rand_rat());
    BinaryForm p4(4, cp);
    if (resultant(p4, q3) == 0) continue;
    BinaryForm p6 = (rng() % 2) ? q3 * q3 : -(q3 * q3);
    std::vector<Rat> c2;
    for (int i = 0; i < 3; ++i) c2.push_back(rand_rat());
    BinaryForm p2a(2, c2);
    TritangentVerdict base = classify_tritangent(p2a, p4, p6);

    Rat a = rand_rat(), b = rand_rat(), cc = rand_rat(), d = rand_rat();
    if (a * d - b * cc == 0) continue;
    TritangentVerdict moved =
        classify_tritangent(compose_linear(p2a, a, b, cc, d),
                            compose_linear(p4, a, b, cc, d),
                            compose_linear(p6, a, b, cc, d));
    std::vector<Rat> c2b;
    for (int i = 0; i < 3; ++i) c2b.push_back(rand_rat());
    TritangentVerdict other_p2 = classify_tritangent(BinaryForm(2, c2b), p4, p6);

    bool same = moved.side == base.side && moved.species == base.species &&
                moved.real_tangencies == base.real_tangencies &&
                moved.positive_real_tangencies == base.positive_real_tangencies &&
                other_p2.side == base.side && other_p2.species == base.species;
    if (!same) {
      c.expect(false, "verdict changed under substitution or p2 change");
      break;
    }
    ++invariance_checked;
  }
  c.expect(invariance_checked >= 25, "not enough invariance instances");
  return {9, "classifier: parity = resultant sign, substitution invariance", c.ok,
          c.ok ? std::to_string(parity_checked) + " parity checks, " +
                     std::to_string(invariance_checked) + " invariance checks"
               : c.why.str()};
}

CriterionResult criterion_nodal() {
  Check c;
  std::mt19937_64 rng(0xBADA55);
  for (int k = 0; k <= 8; ++k) {
    for (int trial = 0; trial < (k == 0 ? 1 : 3); ++trial) {
      // greedy random independent set of k roots
      std::vector<size_t> order(all_roots().size());
      for (size_t i = 0; i < order.size(); ++i) order[i] = i;
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<Root> nodes;
      std::vector<LatticeVector> span;
      for (size_t idx : order) {
        if (static_cast<int>(nodes.size()) == k) break;
        const Root& r = all_roots()[idx];
        std::vector<LatticeVector> trial_span = span;
        trial_span.push_back(r.vec());
        if (Sublattice::span(trial_span).rank() == static_cast<int>(trial_span.size())) {
          nodes.push_back(r);
          span = std::move(trial_span);
        }
      }
      c.expect(static_cast<int>(nodes.size()) == k, "could not draw an independent set");
      Z count = nodal_signed_count(nodes);
      c.expect(count == 16 - 2 * k,
               "k=" + std::to_string(k) + ": count " +
                   std::to_string(static_cast<long long>(count)));
    }
  }
  return {10, "nodal signed count is 16 - 2k", c.ok,
          c.ok ? "k = 0..8 over random independent root sets" : c.why.str()};
}

CriterionResult criterion_chi_invariance() {
  Check c;
  for (const auto& entry : catalog()) {
    const auto& adm = class_admissible(entry.cls.label);
    c.expect(!adm.empty(), entry.cls.label + ": empty admissible set");
    const SmithModel& m = class_model(entry.cls.label);
    std::set<std::pair<int, int>> seen;
    for (const auto& a : adm) {
      LineCount lc = line_counts(m, a.chi);
      seen.insert({lc.hyperbolic, lc.elliptic});
    }
    c.expect(seen.size() <= 1, entry.cls.label + ": counts depend on chi");
  }
  return {11, "admissible sets nonempty, counts chi-invariant", c.ok,
          c.ok ? "all 11 classes" : c.why.str()};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::string& group) {
  std::vector<int> wanted;
  if (group == "all" || group.empty())
    wanted = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
  else if (group == "tables")
    wanted = {1, 2, 3, 5, 7, 8, 11};
  else if (group == "matching")
    wanted = {6};
  else if (group == "pairs")
    wanted = {4};
  else if (group == "tritangents")
    wanted = {9, 10};
  else
    throw Error("unknown verification group: " + group);

  std::vector<CriterionResult> out;
  for (int id : wanted) {
    switch (id) {
      case 1: out.push_back(criterion_enumeration()); break;
      case 2: out.push_back(criterion_eigenlattices()); break;
      case 3: out.push_back(criterion_line_counts()); break;
      case 4: out.push_back(criterion_bertini_pairs()); break;
      case 5: out.push_back(criterion_smith()); break;
      case 6: out.push_back(criterion_matching()); break;
      case 7: out.push_back(criterion_not_all_vanishing()); break;
      case 8: out.push_back(criterion_tritangent_table()); break;
      case 9: out.push_back(criterion_classifier()); break;
      case 10: out.push_back(criterion_nodal()); break;
      case 11: out.push_back(criterion_chi_invariance()); break;
      default: break;
    }
  }
  return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.pass; });
}

}  // namespace dp1
