#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dp1/poly.hpp"

namespace dp1 {

// Homogeneous form in (x0, x1) of a declared degree; coefficients in
// descending powers of x0, so coeffs[i] goes with x0^(d-i) x1^i. The
// dehomogenization f(1, t) has the same sequence read ascending in t.
struct BinaryForm {
  int degree = 0;
  std::vector<Rat> coeffs;  // size degree + 1

  BinaryForm() : coeffs(1, Rat(0)) {}
  BinaryForm(int d, std::vector<Rat> c);
  static BinaryForm parse(int degree, const std::string& comma_separated);

  bool is_zero() const;
  Rat at(const Rat& x0, const Rat& x1) const;
  Poly dehomogenized() const { return Poly(coeffs); }
  Rat at_infinity() const { return coeffs.back(); }  // value at [0:1]

  friend BinaryForm operator-(const BinaryForm& f);
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

  std::string str() const;  // comma-separated rationals
};

// Sylvester determinant: deg g rows of f's coefficients over deg f rows of
// g's, each shifted one column per row. Vanishes iff the forms share a
// projective root.
Rat resultant(const BinaryForm& f, const BinaryForm& g);

// q with q^2 = p and positive leading nonzero coefficient, exact over Q.
std::optional<BinaryForm> sqrt_form(const BinaryForm& p);

// f(a x0 + b x1, c x0 + d x1) for the substitution matrix [[a,b],[c,d]].
BinaryForm compose_linear(const BinaryForm& f, const Rat& a, const Rat& b,
                          const Rat& c, const Rat& d);

}  // namespace dp1
