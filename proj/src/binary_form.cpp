#include "dp1/binary_form.hpp"

#include <algorithm>
#include <sstream>

namespace dp1 {

BinaryForm::BinaryForm(int d, std::vector<Rat> c) : degree(d), coeffs(std::move(c)) {
  if (d < 0 || coeffs.size() != static_cast<size_t>(d) + 1)
    throw Error("BinaryForm: degree " + std::to_string(d) + " needs " +
                std::to_string(d + 1) + " coefficients, got " +
                std::to_string(coeffs.size()));
}

BinaryForm BinaryForm::parse(int degree, const std::string& comma_separated) {
  std::vector<Rat> c;
  std::stringstream ss(comma_separated);
  std::string item;
  while (std::getline(ss, item, ',')) c.push_back(parse_rational(item));
  return BinaryForm(degree, std::move(c));
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& c) { return c == 0; });
}

Rat BinaryForm::at(const Rat& x0, const Rat& x1) const {
  Rat v = 0;
  for (int i = 0; i <= degree; ++i) {
    Rat term = coeffs[static_cast<size_t>(i)];
    for (int k = 0; k < degree - i; ++k) term *= x0;
    for (int k = 0; k < i; ++k) term *= x1;
    v += term;
  }
  return v;
}

BinaryForm operator-(const BinaryForm& f) {
  std::vector<Rat> c = f.coeffs;
  for (auto& x : c) x = -x;
  return BinaryForm(f.degree, std::move(c));
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  std::vector<Rat> c(static_cast<size_t>(a.degree + b.degree) + 1, Rat(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i)
    for (size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
  return BinaryForm(a.degree + b.degree, std::move(c));
}

std::string BinaryForm::str() const {
  std::string out;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ",";
    out += rational_string(coeffs[i]);
  }
  return out;
}

Rat resultant(const BinaryForm& f, const BinaryForm& g) {
  int m = f.degree, n = g.degree;
  int size = m + n;
  if (size == 0) return Rat(1);
  std::vector<std::vector<Rat>> a(static_cast<size_t>(size),
                                  std::vector<Rat>(static_cast<size_t>(size), Rat(0)));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) a[static_cast<size_t>(r)][static_cast<size_t>(r + j)] = f.coeffs[static_cast<size_t>(j)];
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) a[static_cast<size_t>(n + r)][static_cast<size_t>(r + j)] = g.coeffs[static_cast<size_t>(j)];
  // exact Gaussian elimination
  Rat det = 1;
  for (int t = 0; t < size; ++t) {
    int pivot = -1;
    for (int i = t; i < size; ++i)
      if (a[static_cast<size_t>(i)][static_cast<size_t>(t)] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return Rat(0);
    if (pivot != t) {
      std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(t)]);
      det = -det;
    }
    det *= a[static_cast<size_t>(t)][static_cast<size_t>(t)];
    for (int i = t + 1; i < size; ++i) {
      if (a[static_cast<size_t>(i)][static_cast<size_t>(t)] == 0) continue;
      Rat fmul = a[static_cast<size_t>(i)][static_cast<size_t>(t)] / a[static_cast<size_t>(t)][static_cast<size_t>(t)];
      for (int j = t; j < size; ++j)
        a[static_cast<size_t>(i)][static_cast<size_t>(j)] -= fmul * a[static_cast<size_t>(t)][static_cast<size_t>(j)];
    }
  }
  return det;
}

namespace {

std::optional<Rat> sqrt_rational(const Rat& r) {
  if (r < 0) return std::nullopt;
  Int num = numerator(r), den = denominator(r);
  Int sn = sqrt(num), sd = sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rat(sn, sd);
}

}  // namespace

std::optional<BinaryForm> sqrt_form(const BinaryForm& p) {
  if (p.degree % 2 != 0) return std::nullopt;
  if (p.is_zero()) return std::nullopt;
  int i0 = 0;
  while (p.coeffs[static_cast<size_t>(i0)] == 0) ++i0;
  int i1 = p.degree;
  while (p.coeffs[static_cast<size_t>(i1)] == 0) --i1;
  if (i0 % 2 != 0 || i1 % 2 != 0) return std::nullopt;
  int m = (i1 - i0) / 2;
  auto lead = sqrt_rational(p.coeffs[static_cast<size_t>(i0)]);
  if (!lead || *lead == 0) return std::nullopt;
  std::vector<Rat> d(static_cast<size_t>(m) + 1, Rat(0));
  d[0] = *lead;
  for (int k = 1; k <= m; ++k) {
    Rat s = p.coeffs[static_cast<size_t>(i0 + k)];
    for (int j = 1; j < k; ++j)
      if (j <= m && k - j <= m) s -= d[static_cast<size_t>(j)] * d[static_cast<size_t>(k - j)];
    d[static_cast<size_t>(k)] = s / (2 * d[0]);
  }
  std::vector<Rat> q(static_cast<size_t>(p.degree / 2) + 1, Rat(0));
  for (int k = 0; k <= m; ++k) q[static_cast<size_t>(i0 / 2 + k)] = d[static_cast<size_t>(k)];
  BinaryForm root(p.degree / 2, std::move(q));
  if (!(root * root == p)) return std::nullopt;
  return root;
}

BinaryForm compose_linear(const BinaryForm& f, const Rat& a, const Rat& b,
                          const Rat& c, const Rat& d) {
  // powers of (a x0 + b x1) and (c x0 + d x1)
  std::vector<BinaryForm> pow_u{BinaryForm(0, {Rat(1)})};
  std::vector<BinaryForm> pow_v{BinaryForm(0, {Rat(1)})};
  BinaryForm u(1, {a, b}), v(1, {c, d});
  for (int i = 1; i <= f.degree; ++i) {
    pow_u.push_back(pow_u.back() * u);
    pow_v.push_back(pow_v.back() * v);
  }
  std::vector<Rat> out(static_cast<size_t>(f.degree) + 1, Rat(0));
  for (int i = 0; i <= f.degree; ++i) {
    if (f.coeffs[static_cast<size_t>(i)] == 0) continue;
    BinaryForm term = pow_u[static_cast<size_t>(f.degree - i)] * pow_v[static_cast<size_t>(i)];
    for (size_t j = 0; j < out.size(); ++j)
      out[j] += f.coeffs[static_cast<size_t>(i)] * term.coeffs[j];
  }
  return BinaryForm(f.degree, std::move(out));
}

}  // namespace dp1
