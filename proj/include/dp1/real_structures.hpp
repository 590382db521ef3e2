#pragma once

#include <string>
#include <vector>

#include "dp1/lattice.hpp"
#include "dp1/roots.hpp"

namespace dp1 {

struct NonIntegralError : Error {
  using Error::Error;
};
struct SaturationMismatchError : Error {
  using Error::Error;
};

// Involutive isometry of the rank-9 lattice with sigma(K) = -K, acting on
// column coordinate vectors.
struct RealStructure {
  Mat m;                    // 9x9
  std::string class_label;  // deformation-class tag, empty for ad-hoc structures

  LatticeVector apply(const LatticeVector& v) const;
};

// sigma = -1 on <K> + span(generators), +1 on the orthogonal complement.
// Throws NonIntegralError when the result does not preserve the lattice and
// SaturationMismatchError when saturating the generated root lattice changes
// its Dynkin type (e.g. an imprimitive 4A1 quadruple inside a D4).
RealStructure involution_from_subsystem(const std::vector<Root>& generators,
                                        const std::string& label = "");

// sigma composed with the Bertini action (+1 on K, -1 on K^perp).
RealStructure bertini_dual(const RealStructure& sigma);

std::vector<Root> real_roots(const RealStructure& sigma);
std::vector<ExceptionalClass> real_exceptional(const RealStructure& sigma);

Sublattice minus_eigenlattice(const RealStructure& sigma);  // ker(1 + sigma)
Sublattice image_one_minus(const RealStructure& sigma);     // (1 - sigma) H2

struct DeformationClass {
  std::string label;       // topology of the real locus, e.g. "RP2+Klein"
  std::string smith_type;  // e.g. "(M-2)Ia"
  std::string eigen_type;  // Dynkin label of the real root system
  int expected_lines = 0;
  int expected_h = 0;
  int expected_e = 0;
  int expected_h1_dim = 0;
  std::string bertini_partner;
};

struct CatalogEntry {
  DeformationClass cls;
  RealStructure sigma;
  std::vector<Root> witness;  // generators used to build sigma
};

// The 11 deformation classes, validated on first use.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& label);

}  // namespace dp1
