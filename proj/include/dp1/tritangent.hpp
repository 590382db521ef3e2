#pragma once

#include <array>
#include <string>
#include <utility>

#include "dp1/binary_form.hpp"
#include "dp1/roots.hpp"

namespace dp1 {

struct SharedRootError : Error {
  using Error::Error;
};
struct InfiniteRootError : Error {
  using Error::Error;
};
struct NotTritangentError : Error {
  using Error::Error;
};
struct DegenerateCurveError : Error {
  using Error::Error;
};
struct NotSymmetricError : Error {
  using Error::Error;
};
struct ThroughCenterError : Error {
  using Error::Error;
};

// Real projective roots of q3 counted with multiplicity, and how many of
// them (with multiplicity) have p4 > 0. The point [0:1] enters when the
// dehomogenization of q3 drops degree. Requires resultant(p4, q3) != 0.
std::pair<int, int> real_root_signs(const BinaryForm& p4, const BinaryForm& q3);

enum class Side { plus, minus };
enum class Species { hyperbolic, elliptic };

std::string to_string(Side s);
std::string to_string(Species s);

struct TritangentVerdict {
  Side side = Side::plus;
  Species species = Species::hyperbolic;
  Rat resultant_value;  // Res(p4, q3) for the normalized side
  int positive_real_tangencies = 0;
  int real_tangencies = 0;
};

// Classification of the section y = 0 for the curve
// y^3 + p2 y^2 + p4 y + p6: the side carrying the real locus is the one
// where +-p6 is a perfect square q3^2, and the species follows the parity of
// the tangencies with p4 > 0. Independent of p2.
TritangentVerdict classify_tritangent(const BinaryForm& p2, const BinaryForm& p4,
                                      const BinaryForm& p6);

struct GramResult {
  std::array<std::array<Rat, 3>, 3> matrix;  // moments sum p4(c) c^(i+j)
  Rat determinant;
};

// Weighted moment matrix over the roots of q3, computed rationally through
// Newton power sums. q3 must be squarefree with all roots affine.
GramResult gram_matrix(const BinaryForm& p4, const BinaryForm& q3);

// Ternary sextic, even in x2: 28 coefficients grouped by x2-power
// (0,2,4,6 nonzero groups only), within each group descending powers of x0.
struct TernarySextic {
  std::array<Rat, 28> c{};

  static int index(int x2_power, int x1_power);
  static TernarySextic parse(const std::string& comma_separated);
};

// (p2, p4, p6) of the cone model via y = x2^2, normalized by the x2^6
// coefficient. Rejects odd x2-terms and sextics through [0:0:1].
std::array<BinaryForm, 3> symmetric_to_cone(const TernarySextic& s);

// 2 * rank of the orthogonal complement of <K, nodes> = 16 - 2k for k
// linearly independent node roots.
Z nodal_signed_count(const std::vector<Root>& nodes);

struct TritangentRow {
  int total = 0;
  int hyperbolic = 0;
  int elliptic = 0;
};

// Real tritangent counts per arrangement code: <a|0> for a = 0..4, <1|1>,
// <|||>. Averages the line counts of the Bertini pair.
TritangentRow tritangent_table(const std::string& arrangement);

}  // namespace dp1
