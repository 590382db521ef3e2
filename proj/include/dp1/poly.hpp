#pragma once

#include <utility>
#include <vector>

#include "dp1/rational.hpp"
#include "dp1/smith.hpp"

namespace dp1 {

// Univariate polynomial over Q, coefficients ascending, trailing zeros trimmed.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& leading() const;

  Rat eval(const Rat& x) const;
  Poly derivative() const;
  Poly monic() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& k, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  std::vector<Rat> c_;
};

// quotient and remainder with b != 0
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_gcd(const Poly& a, const Poly& b);  // monic

// f = prod over (factor, multiplicity); factors squarefree, pairwise coprime,
// the constant content is dropped.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

// Real roots of a squarefree polynomial: either an exact rational value or an
// open interval (lo, hi) containing exactly one root, with f nonzero and of
// opposite signs at the endpoints.
struct IsolatedRoot {
  bool exact = false;
  Rat value;    // when exact
  Rat lo, hi;   // when not
};

std::vector<IsolatedRoot> isolate_real_roots(const Poly& f);

// Number of distinct real roots of a squarefree polynomial in (a, b].
int sturm_count(const Poly& f, const Rat& a, const Rat& b);

// Sign of p at the root of f described by r (refines the interval in place).
// Returns 0 only if p vanishes at the root.
int sign_at_root(const Poly& p, const Poly& f, IsolatedRoot& r);

}  // namespace dp1
