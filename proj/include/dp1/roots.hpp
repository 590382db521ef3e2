#pragma once

#include <string>
#include <vector>

#include "dp1/lattice.hpp"

namespace dp1 {

// Root: e in K^perp with e.e = -2. The 240 of them form the E8 system.
class Root {
 public:
  explicit Root(const LatticeVector& v);
  const LatticeVector& vec() const { return v_; }

  friend bool operator==(const Root& a, const Root& b) = default;
  friend auto operator<=>(const Root& a, const Root& b) = default;

 private:
  LatticeVector v_;
};

// Exceptional class: v with v.v = v.K = -1 (the class of a line).
class ExceptionalClass {
 public:
  explicit ExceptionalClass(const LatticeVector& v);
  const LatticeVector& vec() const { return v_; }

  friend bool operator==(const ExceptionalClass& a, const ExceptionalClass& b) = default;
  friend auto operator<=>(const ExceptionalClass& a, const ExceptionalClass& b) = default;

 private:
  LatticeVector v_;
};

// All 240 roots / exceptional classes, lexicographically sorted.
const std::vector<Root>& all_roots();
const std::vector<ExceptionalClass>& all_exceptional();

// The mutually inverse bijections v <-> -K - v between the two 240-sets.
Root to_root(const ExceptionalClass& v);
ExceptionalClass to_exceptional(const Root& e);

// Deterministic positivity functional: weights (100^8, ..., 100, 1) against
// the coordinates. No root is orthogonal to it.
Z positivity_value(const LatticeVector& v);

struct DynkinComponent {
  char family;  // 'A', 'D' or 'E'
  int rank;
  friend bool operator==(const DynkinComponent&, const DynkinComponent&) = default;
};

struct DynkinType {
  std::vector<DynkinComponent> components;  // sorted by rank desc, family desc
  int rank() const;
  std::string label() const;  // "E8", "D4+A1", "4A1", "0", ...
  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

// Coxeter basis of a root subsystem: pairwise inner products of distinct
// members in {0,1}, all norms -2, linearly independent. Roots kept sorted.
class SimpleSystem {
 public:
  SimpleSystem() = default;
  explicit SimpleSystem(std::vector<Root> roots);

  int rank() const { return static_cast<int>(roots_.size()); }
  const std::vector<Root>& roots() const { return roots_; }
  const Mat& cartan() const { return cartan_; }

  friend bool operator==(const SimpleSystem&, const SimpleSystem&) = default;

 private:
  std::vector<Root> roots_;
  Mat cartan_;
};

// Simple roots of a negation-closed root subsystem, positive with respect to
// the fixed functional. Rejects sets that are not closed under negation.
SimpleSystem simple_system(const std::vector<Root>& subsystem);

// ADE classification of a Cartan matrix; rejects anything non-ADE.
DynkinType classify_cartan(const Mat& cartan);
DynkinType dynkin_type(const SimpleSystem& s);

struct PositiveRoot {
  Root root;
  int height;
  friend bool operator==(const PositiveRoot&, const PositiveRoot&) = default;
};

// All roots of the subsystem generated by s, with nonnegative coefficients,
// sorted by height then lexicographically.
std::vector<PositiveRoot> positive_roots(const SimpleSystem& s);

}  // namespace dp1
