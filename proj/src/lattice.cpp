#include "dp1/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace dp1 {

bool LatticeVector::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](Z x) { return x == 0; });
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  LatticeVector r;
  for (int i = 0; i < 9; ++i) r[i] = a[i] + b[i];
  return r;
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
  LatticeVector r;
  for (int i = 0; i < 9; ++i) r[i] = a[i] - b[i];
  return r;
}

LatticeVector operator-(const LatticeVector& a) {
  LatticeVector r;
  for (int i = 0; i < 9; ++i) r[i] = -a[i];
  return r;
}

LatticeVector operator*(Z k, const LatticeVector& a) {
  LatticeVector r;
  for (int i = 0; i < 9; ++i) r[i] = k * a[i];
  return r;
}

Z inner(const LatticeVector& u, const LatticeVector& v) {
  Z s = u[0] * v[0];
  for (int i = 1; i < 9; ++i) s -= u[i] * v[i];
  return s;
}

const LatticeVector& canonical_class() {
  static const LatticeVector k{{-3, 1, 1, 1, 1, 1, 1, 1, 1}};
  return k;
}

LatticeVector lattice_vector(std::initializer_list<Z> coords) {
  if (coords.size() != 9) throw Error("lattice_vector needs 9 coordinates");
  LatticeVector v;
  int i = 0;
  for (Z x : coords) v[i++] = x;
  return v;
}

std::string to_string(const LatticeVector& v) {
  std::ostringstream os;
  os << "(" << v[0] << ";";
  for (int i = 1; i < 9; ++i) os << (i > 1 ? "," : "") << v[i];
  os << ")";
  return os.str();
}

namespace {

Mat rows_of(const std::vector<LatticeVector>& vs) {
  Mat m;
  m.reserve(vs.size());
  for (const auto& v : vs) m.emplace_back(v.c.begin(), v.c.end());
  return m;
}

LatticeVector row_to_vector(const std::vector<Z>& row) {
  LatticeVector v;
  for (int i = 0; i < 9; ++i) v[i] = row[static_cast<size_t>(i)];
  return v;
}

}  // namespace

Sublattice::Sublattice() : snf_(smith_normal_form(Mat{})) {}

Sublattice::Sublattice(std::vector<LatticeVector> basis) : basis_(std::move(basis)) {
  snf_ = smith_normal_form(rows_of(basis_));
  if (snf_.rank != static_cast<int>(basis_.size()))
    throw Error("Sublattice: basis vectors are linearly dependent");
}

Sublattice Sublattice::span(const std::vector<LatticeVector>& generators) {
  if (generators.empty()) return Sublattice();
  SmithForm s = smith_normal_form(rows_of(generators));
  // row span of B equals the row span of d * vinv
  std::vector<LatticeVector> basis;
  for (int i = 0; i < s.rank; ++i) {
    LatticeVector v = row_to_vector(s.vinv[static_cast<size_t>(i)]);
    basis.push_back(s.d[static_cast<size_t>(i)][static_cast<size_t>(i)] * v);
  }
  return Sublattice(std::move(basis));
}

std::optional<std::vector<Z>> Sublattice::coordinates(const LatticeVector& v) const {
  int r = rank();
  if (r == 0) return v.is_zero() ? std::optional<std::vector<Z>>(std::vector<Z>{})
                                 : std::nullopt;
  // y = v * V; v is in the span iff y_i = 0 past the rank, and integral
  // membership additionally needs d_i | y_i.
  std::vector<Z> y(9, 0);
  for (int j = 0; j < 9; ++j)
    for (int i = 0; i < 9; ++i) y[static_cast<size_t>(j)] += v[i] * snf_.v[static_cast<size_t>(i)][static_cast<size_t>(j)];
  for (int j = r; j < 9; ++j)
    if (y[static_cast<size_t>(j)] != 0) return std::nullopt;
  std::vector<Z> z(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) {
    Z di = snf_.d[static_cast<size_t>(i)][static_cast<size_t>(i)];
    if (y[static_cast<size_t>(i)] % di != 0) return std::nullopt;
    z[static_cast<size_t>(i)] = y[static_cast<size_t>(i)] / di;
  }
  // coordinates c = z * U
  std::vector<Z> czs(static_cast<size_t>(r), 0);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i)
      czs[static_cast<size_t>(j)] += z[static_cast<size_t>(i)] * snf_.u[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return czs;
}

bool Sublattice::contains(const LatticeVector& v) const {
  return coordinates(v).has_value();
}

bool Sublattice::spans_rationally(const LatticeVector& v) const {
  int r = rank();
  if (r == 0) return v.is_zero();
  std::vector<Z> y(9, 0);
  for (int j = 0; j < 9; ++j)
    for (int i = 0; i < 9; ++i) y[static_cast<size_t>(j)] += v[i] * snf_.v[static_cast<size_t>(i)][static_cast<size_t>(j)];
  for (int j = r; j < 9; ++j)
    if (y[static_cast<size_t>(j)] != 0) return false;
  return true;
}

bool Sublattice::same_lattice(const Sublattice& other) const {
  if (rank() != other.rank()) return false;
  for (const auto& v : basis_)
    if (!other.contains(v)) return false;
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Mat Sublattice::gram() const {
  int r = rank();
  Mat g(static_cast<size_t>(r), std::vector<Z>(static_cast<size_t>(r)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      g[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          inner(basis_[static_cast<size_t>(i)], basis_[static_cast<size_t>(j)]);
  return g;
}

Sublattice full_lattice() {
  std::vector<LatticeVector> basis;
  for (int i = 0; i < 9; ++i) {
    LatticeVector v;
    v[i] = 1;
    basis.push_back(v);
  }
  return Sublattice(std::move(basis));
}

Sublattice kernel_sublattice(const Mat& rows) {
  if (rows.empty()) return full_lattice();
  SmithForm s = smith_normal_form(rows);
  // rows * x = 0  <=>  (vinv x)_i = 0 for i < rank; kernel basis = columns of v
  std::vector<LatticeVector> basis;
  for (int j = s.rank; j < 9; ++j) {
    LatticeVector v;
    for (int i = 0; i < 9; ++i) v[i] = s.v[static_cast<size_t>(i)][static_cast<size_t>(j)];
    basis.push_back(v);
  }
  return Sublattice(std::move(basis));
}

Sublattice orthogonal_complement(const Sublattice& s) {
  Mat rows;
  for (const auto& b : s.basis()) {
    std::vector<Z> row(9);
    row[0] = b[0];
    for (int i = 1; i < 9; ++i) row[static_cast<size_t>(i)] = -b[i];
    rows.push_back(std::move(row));
  }
  return kernel_sublattice(rows);
}

Sublattice saturate(const Sublattice& s) {
  if (s.rank() == 0) return Sublattice();
  SmithForm f = smith_normal_form(rows_of(s.basis()));
  std::vector<LatticeVector> basis;
  for (int i = 0; i < f.rank; ++i)
    basis.push_back(row_to_vector(f.vinv[static_cast<size_t>(i)]));
  return Sublattice(std::move(basis));
}

QuotientF2 quotient_mod2(const Sublattice& a, const Sublattice& b) {
  for (const auto& v : b.basis())
    if (!a.contains(v)) throw Error("quotient_mod2: B is not contained in A");
  for (const auto& v : a.basis())
    if (!b.contains(2 * v)) throw Error("quotient_mod2: 2A is not contained in B");
  int r = a.rank();
  if (b.rank() != r) throw Error("quotient_mod2: rank mismatch");
  // columns = coordinates of B's basis in A's basis
  Mat m(static_cast<size_t>(r), std::vector<Z>(static_cast<size_t>(r), 0));
  for (int j = 0; j < r; ++j) {
    auto coords = a.coordinates(b.basis()[static_cast<size_t>(j)]);
    for (int i = 0; i < r; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = (*coords)[static_cast<size_t>(i)];
  }
  SmithForm s = smith_normal_form(m);
  QuotientF2 q;
  q.ambient_ = a;
  q.u_ = s.u;
  q.uinv_ = s.uinv;
  for (int i = 0; i < r; ++i) {
    Z di = s.d[static_cast<size_t>(i)][static_cast<size_t>(i)];
    if (di != 1 && di != 2)
      throw Error("quotient_mod2: invariant factor " + std::to_string(di) +
                  " outside {1,2}");
    q.diag_.push_back(di);
    if (di == 2) q.two_positions_.push_back(i);
  }
  return q;
}

std::vector<int> QuotientF2::reduce(const LatticeVector& v) const {
  auto coords = ambient_.coordinates(v);
  if (!coords) throw Error("QuotientF2::reduce: vector not in the ambient sublattice");
  size_t r = diag_.size();
  std::vector<Z> t(r, 0);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) t[i] += u_[i][j] * (*coords)[j];
  std::vector<int> bits;
  bits.reserve(two_positions_.size());
  for (int pos : two_positions_)
    bits.push_back(static_cast<int>(((t[static_cast<size_t>(pos)] % 2) + 2) % 2));
  return bits;
}

LatticeVector QuotientF2::representative(int i) const {
  // lift of the basis vector at invariant position two_positions_[i]
  int pos = two_positions_.at(static_cast<size_t>(i));
  size_t r = diag_.size();
  LatticeVector v;
  for (size_t j = 0; j < r; ++j) {
    Z cj = uinv_[j][static_cast<size_t>(pos)];
    if (cj != 0) v = v + cj * ambient_.basis()[j];
  }
  return v;
}

}  // namespace dp1
