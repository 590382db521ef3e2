#include "dp1/tritangent.hpp"

#include <algorithm>
#include <sstream>

#include "dp1/pin.hpp"
#include "dp1/real_structures.hpp"

namespace dp1 {

std::string to_string(Side s) { return s == Side::plus ? "plus" : "minus"; }
std::string to_string(Species s) {
  return s == Species::hyperbolic ? "hyperbolic" : "elliptic";
}

std::pair<int, int> real_root_signs(const BinaryForm& p4, const BinaryForm& q3) {
  if (q3.degree != 3 || p4.degree != 4)
    throw Error("real_root_signs expects degrees (4, 3)");
  if (q3.is_zero()) throw SharedRootError("real_root_signs: q3 is zero");
  if (resultant(p4, q3) == 0)
    throw SharedRootError("real_root_signs: p4 and q3 share a root");

  int real = 0, positive = 0;
  Poly q = q3.dehomogenized();
  // the root at [0:1] absorbs the degree drop of the dehomogenization
  int infinity_mult = 3 - q.degree();
  if (infinity_mult > 0) {
    real += infinity_mult;
    if (p4.at_infinity() > 0) positive += infinity_mult;
  }
  Poly p = p4.dehomogenized();
  for (const auto& [factor, mult] : squarefree_decomposition(q)) {
    for (auto& root : isolate_real_roots(factor)) {
      int s = sign_at_root(p, factor, root);
      if (s == 0) throw SharedRootError("real_root_signs: p4 vanishes at a root of q3");
      real += mult;
      if (s > 0) positive += mult;
    }
  }
  return {real, positive};
}

TritangentVerdict classify_tritangent(const BinaryForm& p2, const BinaryForm& p4,
                                      const BinaryForm& p6) {
  if (p2.degree != 2 || p4.degree != 4 || p6.degree != 6)
    throw Error("classify_tritangent expects degrees (2, 4, 6)");
  if (p6.is_zero())
    throw DegenerateCurveError("classify_tritangent: p6 vanishes identically");

  TritangentVerdict verdict;
  BinaryForm q3;
  if (auto q = sqrt_form(p6)) {
    verdict.side = Side::plus;
    q3 = *q;
  } else if (auto qm = sqrt_form(-p6)) {
    // substitute y -> -y: fixes p4, negates p2 and p6
    verdict.side = Side::minus;
    q3 = *qm;
  } else {
    throw NotTritangentError("classify_tritangent: neither p6 nor -p6 is a square");
  }
  verdict.resultant_value = resultant(p4, q3);
  if (verdict.resultant_value == 0)
    throw DegenerateCurveError("classify_tritangent: p4 and q3 share a root");
  auto [real, positive] = real_root_signs(p4, q3);
  verdict.real_tangencies = real;
  verdict.positive_real_tangencies = positive;
  verdict.species = positive % 2 == 1 ? Species::hyperbolic : Species::elliptic;
  // parity rule and resultant sign rule must agree
  if ((verdict.species == Species::hyperbolic) != (verdict.resultant_value > 0))
    throw Error("classify_tritangent: parity and resultant rules disagree");
  return verdict;
}

GramResult gram_matrix(const BinaryForm& p4, const BinaryForm& q3) {
  if (q3.degree != 3 || p4.degree != 4)
    throw Error("gram_matrix expects degrees (4, 3)");
  Poly q = q3.dehomogenized();
  if (q.degree() != 3)
    throw InfiniteRootError("gram_matrix: q3 has a root at [0:1]; shear first");
  if (poly_gcd(q, q.derivative()).degree() > 0)
    throw Error("gram_matrix: q3 is not square-free; shear or reduce first");
  if (resultant(p4, q3) == 0)
    throw SharedRootError("gram_matrix: p4 and q3 share a root");

  // Newton power sums of the three roots of the monic cubic
  Rat b = q.coeffs()[2] / q.coeffs()[3];
  Rat cc = q.coeffs()[1] / q.coeffs()[3];
  Rat dd = q.coeffs()[0] / q.coeffs()[3];
  Rat e1 = -b, e2 = cc, e3 = -dd;
  std::array<Rat, 9> power;
  power[0] = 3;
  power[1] = e1;
  power[2] = e1 * power[1] - 2 * e2;
  power[3] = e1 * power[2] - e2 * power[1] + 3 * e3;
  for (int k = 4; k <= 8; ++k)
    power[static_cast<size_t>(k)] = e1 * power[static_cast<size_t>(k - 1)] -
                                    e2 * power[static_cast<size_t>(k - 2)] +
                                    e3 * power[static_cast<size_t>(k - 3)];

  GramResult result;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rat m = 0;
      for (int a = 0; a <= 4; ++a)
        m += p4.coeffs[static_cast<size_t>(a)] * power[static_cast<size_t>(a + i + j)];
      result.matrix[static_cast<size_t>(i)][static_cast<size_t>(j)] = m;
    }
  const auto& mm = result.matrix;
  result.determinant = mm[0][0] * (mm[1][1] * mm[2][2] - mm[1][2] * mm[2][1]) -
                       mm[0][1] * (mm[1][0] * mm[2][2] - mm[1][2] * mm[2][0]) +
                       mm[0][2] * (mm[1][0] * mm[2][1] - mm[1][1] * mm[2][0]);
  return result;
}

int TernarySextic::index(int x2_power, int x1_power) {
  if (x2_power < 0 || x2_power > 6 || x1_power < 0 || x1_power > 6 - x2_power)
    throw Error("TernarySextic: bad monomial");
  int offset = 0;
  for (int c = 0; c < x2_power; ++c) offset += 7 - c;
  return offset + x1_power;
}

TernarySextic TernarySextic::parse(const std::string& comma_separated) {
  std::vector<Rat> parsed;
  std::string item;
  std::stringstream ss(comma_separated);
  while (std::getline(ss, item, ',')) parsed.push_back(parse_rational(item));
  if (parsed.size() != 28)
    throw Error("TernarySextic: expected 28 coefficients, got " +
                std::to_string(parsed.size()));
  TernarySextic s;
  std::copy(parsed.begin(), parsed.end(), s.c.begin());
  return s;
}

std::array<BinaryForm, 3> symmetric_to_cone(const TernarySextic& s) {
  for (int c2 = 1; c2 <= 5; c2 += 2)
    for (int j = 0; j <= 6 - c2; ++j)
      if (s.c[static_cast<size_t>(TernarySextic::index(c2, j))] != 0)
        throw NotSymmetricError("symmetric_to_cone: odd x2-degree term present");
  Rat s3 = s.c[static_cast<size_t>(TernarySextic::index(6, 0))];
  if (s3 == 0)
    throw ThroughCenterError("symmetric_to_cone: sextic passes through [0:0:1]");
  auto group = [&](int c2) {
    std::vector<Rat> coeffs;
    for (int j = 0; j <= 6 - c2; ++j)
      coeffs.push_back(s.c[static_cast<size_t>(TernarySextic::index(c2, j))] / s3);
    return BinaryForm(6 - c2, std::move(coeffs));
  };
  return {group(4), group(2), group(0)};  // p2, p4, p6
}

Z nodal_signed_count(const std::vector<Root>& nodes) {
  if (nodes.size() > 8) throw Error("nodal_signed_count: at most 8 nodes");
  std::vector<LatticeVector> basis{canonical_class()};
  for (const auto& r : nodes) basis.push_back(r.vec());
  Sublattice span = [&] {
    try {
      return Sublattice(basis);
    } catch (const Error&) {
      throw Error("nodal_signed_count: node roots are linearly dependent");
    }
  }();
  return 2 * orthogonal_complement(span).rank();
}

TritangentRow tritangent_table(const std::string& arrangement) {
  std::string code = arrangement;
  code.erase(std::remove_if(code.begin(), code.end(),
                            [](char ch) { return ch == '<' || ch == '>'; }),
             code.end());
  static const std::vector<std::pair<std::string, std::pair<std::string, std::string>>>
      table = {
          {"4|0", {"RP2+4T2", "RP2+4S2"}}, {"3|0", {"RP2+3T2", "RP2+3S2"}},
          {"2|0", {"RP2+2T2", "RP2+2S2"}}, {"1|0", {"RP2+1T2", "RP2+1S2"}},
          {"0|0", {"RP2", "RP2"}},         {"|||", {"RP2+Klein", "RP2+Klein"}},
          {"1|1", {"RP2+T2+S2", "RP2+T2+S2"}},
      };
  for (const auto& [key, pair] : table) {
    if (key != code) continue;
    auto counts = [](const std::string& label) {
      const auto& adm = class_admissible(label);
      return line_counts(class_model(label), adm.front().chi);
    };
    LineCount plus = counts(pair.first);
    LineCount minus = counts(pair.second);
    TritangentRow row;
    row.hyperbolic = (plus.hyperbolic + minus.hyperbolic) / 2;
    row.elliptic = (plus.elliptic + minus.elliptic) / 2;
    row.total = row.hyperbolic + row.elliptic;
    return row;
  }
  throw Error("unknown arrangement code: " + arrangement);
}

}  // namespace dp1
