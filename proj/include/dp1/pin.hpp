#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dp1/lattice.hpp"
#include "dp1/real_structures.hpp"
#include "dp1/roots.hpp"

namespace dp1 {

// Z/2 functional chi on the minus eigenlattice, stored by its values on the
// fixed basis [K, root-lattice basis ...] of ker(1 + sigma). It induces
//   qhat(x) = x.x + 2 chi(x)  in Z/4.
struct QuadraticFunction {
  std::vector<int> chi;

  friend bool operator==(const QuadraticFunction&, const QuadraticFunction&) = default;
  friend auto operator<=>(const QuadraticFunction&, const QuadraticFunction&) = default;
};

// Lattice model of H1 of the real locus with Z/2 coefficients:
// minus_lattice = ker(1 + sigma), upsilon_kernel = (1 - sigma)H2, and the
// quotient minus/kernel. Construction cross-checks the kernel against
// {v in minus | v.minus even} and fails loudly on any mismatch.
struct SmithModel {
  RealStructure sigma;
  Sublattice minus_lattice;
  Sublattice upsilon_kernel;
  QuotientF2 quotient;

  struct RealRootRecord {
    Root root;
    std::vector<Z> coords;  // in the minus basis
    int component = -1;
  };
  struct Component {
    std::vector<int> root_indices;
    SimpleSystem derived;  // simple system for the fixed positivity order
    DynkinType type;
  };
  std::vector<RealRootRecord> roots;  // real roots, lex order
  std::vector<Component> components;
  std::vector<std::vector<Z>> kernel_coords;  // upsilon basis in the minus basis

  int rank_real() const;  // rank of the real root system
};

SmithModel smith_model(const RealStructure& sigma);

// chi(x) in {0,1} and qhat(x) in {0,1,2,3}; x must lie in the minus lattice.
int chi_value(const SmithModel& m, const QuadraticFunction& f, const LatticeVector& x);
int quadratic_value(const SmithModel& m, const QuadraticFunction& f,
                    const LatticeVector& x);

// Deterministic search for a Coxeter basis of the real root system inside
// {roots with qhat = 0}; nullopt when none exists. Requires chi(K) = 0 and
// qhat = 0 on the kernel generators.
std::optional<SimpleSystem> special_basis(const SmithModel& m,
                                          const QuadraticFunction& f);

struct AdmissibleChi {
  QuadraticFunction chi;
  SimpleSystem basis;
};

// All chi with chi(K) = 0, qhat = 0 on the kernel, and a special basis.
std::vector<AdmissibleChi> admissible_set(const SmithModel& m);
std::vector<QuadraticFunction> admissible_chis(const SmithModel& m);

// Shared, lazily built models and admissible sets for the catalog classes.
const SmithModel& class_model(const std::string& label);
const std::vector<AdmissibleChi>& class_admissible(const std::string& label);

struct LineCount {
  int hyperbolic = 0;
  int elliptic = 0;
  Z signed_sum = 0;  // hyperbolic - elliptic
};

// Species count over the real lines: the line of a real root e is hyperbolic
// iff qhat(e) = 0. Rejects chi that is not admissible.
LineCount line_counts(const SmithModel& m, const QuadraticFunction& f);

}  // namespace dp1
