#include "dp1/real_structures.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>

namespace dp1 {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Exact solve of g * x = rhs for nondegenerate g.
std::vector<Rational> solve_rational(const Mat& g, const std::vector<Rational>& rhs) {
  size_t n = g.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = g[i][j];
    a[i][n] = rhs[i];
  }
  for (size_t t = 0; t < n; ++t) {
    size_t p = t;
    while (p < n && a[p][t] == 0) ++p;
    if (p == n) throw Error("solve_rational: singular Gram matrix");
    std::swap(a[t], a[p]);
    for (size_t i = 0; i < n; ++i) {
      if (i == t || a[i][t] == 0) continue;
      Rational f = a[i][t] / a[t][t];
      for (size_t j = t; j <= n; ++j) a[i][j] -= f * a[t][j];
    }
  }
  std::vector<Rational> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

std::vector<Root> roots_in(const Sublattice& s, bool integral) {
  std::vector<Root> out;
  for (const auto& r : all_roots()) {
    bool member = integral ? s.contains(r.vec()) : s.spans_rationally(r.vec());
    if (member) out.push_back(r);
  }
  return out;
}

Mat one_plus(const Mat& m) {
  Mat r = m;
  for (int i = 0; i < 9; ++i) r[static_cast<size_t>(i)][static_cast<size_t>(i)] += 1;
  return r;
}

Mat one_minus(const Mat& m) {
  Mat r(9, std::vector<Z>(9));
  for (size_t i = 0; i < 9; ++i)
    for (size_t j = 0; j < 9; ++j) r[i][j] = (i == j ? 1 : 0) - m[i][j];
  return r;
}

void validate_involution(const RealStructure& sigma, const std::string& what) {
  const Mat& m = sigma.m;
  if (!mat_eq(mat_mul(m, m), identity_mat(9)))
    throw Error(what + ": matrix is not an involution");
  // form preservation: M^T G M == G
  Mat g(9, std::vector<Z>(9, 0));
  g[0][0] = 1;
  for (size_t i = 1; i < 9; ++i) g[i][i] = -1;
  Mat mt(9, std::vector<Z>(9));
  for (size_t i = 0; i < 9; ++i)
    for (size_t j = 0; j < 9; ++j) mt[i][j] = m[j][i];
  if (!mat_eq(mat_mul(mat_mul(mt, g), m), g))
    throw Error(what + ": matrix does not preserve the intersection form");
  Z det = det_bareiss(m);
  if (det != 1 && det != -1) throw Error(what + ": determinant is not a unit");
  if (sigma.apply(canonical_class()) != -canonical_class())
    throw Error(what + ": K is not sent to -K");
}

}  // namespace

LatticeVector RealStructure::apply(const LatticeVector& v) const {
  LatticeVector r;
  for (int i = 0; i < 9; ++i) {
    Z s = 0;
    for (int j = 0; j < 9; ++j) s += m[static_cast<size_t>(i)][static_cast<size_t>(j)] * v[j];
    r[i] = s;
  }
  return r;
}

RealStructure involution_from_subsystem(const std::vector<Root>& generators,
                                        const std::string& label) {
  std::vector<LatticeVector> gen_vectors;
  for (const auto& r : generators) gen_vectors.push_back(r.vec());
  Sublattice span = Sublattice::span(gen_vectors);

  std::vector<LatticeVector> minus_basis{canonical_class()};
  for (const auto& b : span.basis()) minus_basis.push_back(b);
  Sublattice minus(minus_basis);
  Mat gram = minus.gram();

  RealStructure sigma;
  sigma.class_label = label;
  sigma.m.assign(9, std::vector<Z>(9, 0));
  size_t r = minus_basis.size();
  for (int col = 0; col < 9; ++col) {
    LatticeVector e;
    e[col] = 1;
    std::vector<Rational> rhs(r);
    for (size_t j = 0; j < r; ++j) rhs[j] = inner(minus_basis[j], e);
    std::vector<Rational> coeff = solve_rational(gram, rhs);
    // sigma(e) = e - 2 * projection onto the minus part
    for (int row = 0; row < 9; ++row) {
      Rational value = row == col ? 1 : 0;
      for (size_t j = 0; j < r; ++j)
        value -= 2 * coeff[j] * minus_basis[j][row];
      if (denominator(value) != 1)
        throw NonIntegralError("involution_from_subsystem: non-integral action for " +
                               std::string(label.empty() ? "generators" : label));
      sigma.m[static_cast<size_t>(row)][static_cast<size_t>(col)] =
          static_cast<Z>(numerator(value));
    }
  }
  validate_involution(sigma, "involution_from_subsystem");

  if (!generators.empty()) {
    DynkinType requested = dynkin_type(simple_system(roots_in(span, true)));
    DynkinType saturated = dynkin_type(simple_system(roots_in(span, false)));
    if (!(requested == saturated))
      throw SaturationMismatchError(
          "involution_from_subsystem: generators of type " + requested.label() +
          " saturate to type " + saturated.label());
  }

  // the minus eigenlattice restricted to K^perp must be the saturation
  Mat rows = one_plus(sigma.m);
  {
    std::vector<Z> krow(9);
    const LatticeVector& k = canonical_class();
    krow[0] = k[0];
    for (size_t i = 1; i < 9; ++i) krow[i] = -k[static_cast<int>(i)];
    rows.push_back(krow);
  }
  Sublattice eigen_root_part = kernel_sublattice(rows);
  if (!eigen_root_part.same_lattice(saturate(span)))
    throw Error("involution_from_subsystem: eigenlattice does not match saturation");
  return sigma;
}

RealStructure bertini_dual(const RealStructure& sigma) {
  // tau(v) = 2 (v.K) K - v
  Mat tau(9, std::vector<Z>(9, 0));
  const LatticeVector& k = canonical_class();
  for (int col = 0; col < 9; ++col) {
    LatticeVector e;
    e[col] = 1;
    LatticeVector image = 2 * inner(e, k) * k - e;
    for (int row = 0; row < 9; ++row) tau[static_cast<size_t>(row)][static_cast<size_t>(col)] = image[row];
  }
  RealStructure dual;
  dual.m = mat_mul(sigma.m, tau);
  if (!mat_eq(dual.m, mat_mul(tau, sigma.m)))
    throw Error("bertini_dual: sigma does not commute with the Bertini action");
  validate_involution(dual, "bertini_dual");
  return dual;
}

std::vector<Root> real_roots(const RealStructure& sigma) {
  std::vector<Root> out;
  for (const auto& r : all_roots())
    if (sigma.apply(r.vec()) == -r.vec()) out.push_back(r);
  return out;
}

std::vector<ExceptionalClass> real_exceptional(const RealStructure& sigma) {
  std::vector<ExceptionalClass> out;
  for (const auto& v : all_exceptional())
    if (sigma.apply(v.vec()) == -v.vec()) out.push_back(v);
  return out;
}

Sublattice minus_eigenlattice(const RealStructure& sigma) {
  return kernel_sublattice(one_plus(sigma.m));
}

Sublattice image_one_minus(const RealStructure& sigma) {
  Mat w = one_minus(sigma.m);
  std::vector<LatticeVector> columns;
  for (int j = 0; j < 9; ++j) {
    LatticeVector v;
    for (int i = 0; i < 9; ++i) v[i] = w[static_cast<size_t>(i)][static_cast<size_t>(j)];
    columns.push_back(v);
  }
  return Sublattice::span(columns);
}

namespace {

LatticeVector ee(int i, int j) {  // e_i - e_j, 1-based
  LatticeVector v;
  v[i] = 1;
  v[j] = -1;
  return v;
}

std::vector<CatalogEntry> build_catalog() {
  const LatticeVector d = lattice_vector({1, -1, -1, -1, 0, 0, 0, 0, 0});
  auto c = [](int i) { return ee(i, i + 1); };

  struct Row {
    DeformationClass cls;
    std::vector<LatticeVector> gens;
  };
  std::vector<Row> rows = {
      {{"RP2+4T2", "M", "E8", 240, 128, 112, 9, "RP2+4S2"},
       {d, c(1), c(2), c(3), c(4), c(5), c(6), c(7)}},
      {{"RP2+3T2", "(M-1)", "E7", 126, 70, 56, 7, "RP2+3S2"},
       {d, c(1), c(2), c(3), c(4), c(5), c(6)}},
      {{"RP2+2T2", "(M-2)", "D6", 60, 36, 24, 5, "RP2+2S2"},
       {d, c(2), c(3), c(4), c(5), c(6)}},
      {{"RP2+1T2", "(M-3)", "D4+A1", 26, 18, 8, 3, "RP2+1S2"},
       {d, c(2), c(3), c(4), c(6)}},
      {{"RP2", "(M-4)", "4A1", 8, 8, 0, 1, "RP2"},
       {ee(1, 2), ee(3, 4), ee(5, 6), ee(7, 8)}},
      {{"RP2+Klein", "(M-2)Ia", "D4", 24, 16, 8, 3, "RP2+Klein"},
       {d, c(2), c(3), c(4)}},
      {{"RP2+T2+S2", "(M-2)Ib", "D4", 24, 16, 8, 3, "RP2+T2+S2"},
       {d, c(2), c(3), c(4)}},
      {{"RP2+4S2", "M", "0", 0, 0, 0, 1, "RP2+4T2"}, {}},
      {{"RP2+3S2", "(M-1)", "A1", 2, 2, 0, 1, "RP2+3T2"}, {ee(1, 2)}},
      {{"RP2+2S2", "(M-2)", "2A1", 4, 4, 0, 1, "RP2+2T2"}, {ee(1, 2), ee(3, 4)}},
      {{"RP2+1S2", "(M-3)", "3A1", 6, 6, 0, 1, "RP2+1T2"},
       {ee(1, 2), ee(3, 4), ee(5, 6)}},
  };

  std::vector<CatalogEntry> entries;
  for (const auto& row : rows) {
    CatalogEntry entry;
    entry.cls = row.cls;
    for (const auto& g : row.gens) entry.witness.emplace_back(g);
    entry.sigma = involution_from_subsystem(entry.witness, row.cls.label);
    // validate against the expected class data
    auto rr = real_roots(entry.sigma);
    std::string type = rr.empty() ? "0" : dynkin_type(simple_system(rr)).label();
    if (type != entry.cls.eigen_type)
      throw Error("catalog: class " + entry.cls.label + " has eigen type " + type +
                  ", expected " + entry.cls.eigen_type);
    if (static_cast<int>(real_exceptional(entry.sigma).size()) != entry.cls.expected_lines)
      throw Error("catalog: class " + entry.cls.label + " has wrong line count");
    if (entry.cls.expected_h + entry.cls.expected_e != entry.cls.expected_lines ||
        entry.cls.expected_h - entry.cls.expected_e !=
            2 * (rr.empty() ? 0 : simple_system(rr).rank()))
      throw Error("catalog: inconsistent expected counts for " + entry.cls.label);
    entries.push_back(std::move(entry));
  }
  // Bertini partners must exist and pair up consistently
  for (const auto& entry : entries) {
    auto partner = std::find_if(entries.begin(), entries.end(), [&](const CatalogEntry& e) {
      return e.cls.label == entry.cls.bertini_partner;
    });
    if (partner == entries.end())
      throw Error("catalog: missing Bertini partner for " + entry.cls.label);
    if (partner->cls.bertini_partner != entry.cls.label)
      throw Error("catalog: asymmetric Bertini pairing for " + entry.cls.label);
  }
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& label) {
  for (const auto& e : catalog())
    if (e.cls.label == label) return e;
  throw Error("unknown deformation class: " + label);
}

}  // namespace dp1
