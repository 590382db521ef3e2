#pragma once

#include <array>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "dp1/smith.hpp"

namespace dp1 {

// Vector of the fixed rank-9 lattice in the blow-up basis (h, e1, ..., e8),
// coordinates (a; b1, ..., b8). The intersection form is diag(+1, -1^8), so
//   u.v = a_u a_v - sum_i b_{u,i} b_{v,i},
// and the canonical class is K = -3h + e1 + ... + e8 with K.K = 1.
struct LatticeVector {
  std::array<Z, 9> c{};

  LatticeVector() = default;
  explicit LatticeVector(const std::array<Z, 9>& coords) : c(coords) {}

  Z operator[](int i) const { return c[static_cast<size_t>(i)]; }
  Z& operator[](int i) { return c[static_cast<size_t>(i)]; }

  bool is_zero() const;

  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator-(const LatticeVector& a);
  friend LatticeVector operator*(Z k, const LatticeVector& a);
  friend bool operator==(const LatticeVector& a, const LatticeVector& b) = default;
  friend auto operator<=>(const LatticeVector& a, const LatticeVector& b) = default;
};

Z inner(const LatticeVector& u, const LatticeVector& v);

// K = (-3; 1, 1, 1, 1, 1, 1, 1, 1)
const LatticeVector& canonical_class();

LatticeVector lattice_vector(std::initializer_list<Z> coords);
std::string to_string(const LatticeVector& v);

// Sublattice given by an independent basis. The basis order is preserved
// (callers rely on it, e.g. for storing functionals coordinate-wise).
class Sublattice {
 public:
  Sublattice();  // rank 0
  explicit Sublattice(std::vector<LatticeVector> basis);

  // Reduces an arbitrary generating set to a basis of its integer span.
  static Sublattice span(const std::vector<LatticeVector>& generators);

  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<LatticeVector>& basis() const { return basis_; }

  bool contains(const LatticeVector& v) const;
  bool spans_rationally(const LatticeVector& v) const;
  // Integer coordinates of v in this basis, or nullopt if v is not a member.
  std::optional<std::vector<Z>> coordinates(const LatticeVector& v) const;

  // Equality as subsets of the ambient lattice.
  bool same_lattice(const Sublattice& other) const;

  // Gram matrix of the basis under the intersection form.
  Mat gram() const;

 private:
  std::vector<LatticeVector> basis_;
  SmithForm snf_;  // of the basis row matrix
};

Sublattice full_lattice();

// Saturated sublattice {x | x.s = 0 for all s in S}.
Sublattice orthogonal_complement(const Sublattice& s);

// (rational span of S) intersected with the lattice; idempotent.
Sublattice saturate(const Sublattice& s);

// Integer solutions of rows * x = 0 (rows are plain linear functionals).
Sublattice kernel_sublattice(const Mat& rows);

// F2 quotient A/B for B <= A with 2A <= B: every invariant factor of the
// inclusion is 1 or 2, and the dimension counts the factors equal to 2.
class QuotientF2 {
 public:
  int dimension() const { return static_cast<int>(two_positions_.size()); }

  // Additive reduction of a member of A to its F2 coordinates.
  std::vector<int> reduce(const LatticeVector& v) const;

  // A lift of the i-th quotient basis vector.
  LatticeVector representative(int i) const;

 private:
  friend QuotientF2 quotient_mod2(const Sublattice& a, const Sublattice& b);
  Sublattice ambient_;
  Mat u_, uinv_;          // row transform of the inclusion SNF
  std::vector<Z> diag_;   // invariant factors
  std::vector<int> two_positions_;
};

QuotientF2 quotient_mod2(const Sublattice& a, const Sublattice& b);

}  // namespace dp1
