#include "dp1/pin.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <mutex>

#include "dp1/hasse.hpp"

namespace dp1 {

namespace {

// F2 kernel of a symmetric integer matrix reduced mod 2.
std::vector<std::vector<int>> f2_kernel(const Mat& g) {
  size_t n = g.size();
  std::vector<std::vector<int>> a(n, std::vector<int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = static_cast<int>(((g[i][j] % 2) + 2) % 2);
  std::vector<int> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < n && row < n; ++col) {
    size_t p = row;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(a[row], a[p]);
    for (size_t i = 0; i < n; ++i)
      if (i != row && a[i][col])
        for (size_t j = 0; j < n; ++j) a[i][j] ^= a[row][j];
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  std::vector<std::vector<int>> kernel;
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
  for (size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<int> v(n, 0);
    v[free_col] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r)
      v[static_cast<size_t>(pivot_col[r])] = a[r][free_col];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

int chi_on_coords(const QuadraticFunction& f, const std::vector<Z>& coords) {
  Z s = 0;
  for (size_t i = 0; i < coords.size(); ++i) s += f.chi[i] * coords[i];
  return static_cast<int>(((s % 2) + 2) % 2);
}

int qhat_on(const QuadraticFunction& f, const LatticeVector& x,
            const std::vector<Z>& coords) {
  Z n = inner(x, x) % 4;
  return static_cast<int>(((n + 2 * chi_on_coords(f, coords)) % 4 + 4) % 4);
}

void check_preconditions(const SmithModel& m, const QuadraticFunction& f) {
  if (f.chi.size() != static_cast<size_t>(m.minus_lattice.rank()))
    throw Error("quadratic function has wrong arity");
  for (int b : f.chi)
    if (b != 0 && b != 1) throw Error("quadratic function bits must be 0/1");
  if (f.chi[0] != 0) throw Error("quadratic function must vanish on K (chi(K) = 0)");
  for (size_t i = 0; i < m.kernel_coords.size(); ++i)
    if (qhat_on(f, m.upsilon_kernel.basis()[i], m.kernel_coords[i]) != 0)
      throw Error("quadratic function does not vanish on the kernel");
}

// Matching feasibility per Dynkin type, used to justify the counting filter
// in the basis search: when the non-simple positive roots pair up along
// cover edges, a basis with qhat = 0 forces exactly |roots|/2 + rank roots
// with qhat = 0.
bool type_has_matching(const SimpleSystem& derived, const DynkinType& type) {
  static std::map<std::string, bool> cache;
  static std::mutex mu;
  std::string key = type.label();
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  bool ok = true;
  try {
    pair_matching(derived);
  } catch (const MatchingNotFoundError&) {
    ok = false;
  }
  std::lock_guard<std::mutex> lock(mu);
  cache[key] = ok;
  return ok;
}

struct ComponentSearch {
  static constexpr size_t kMax = 256;

  std::vector<LatticeVector> candidates;  // qhat = 0 roots of the component, lex
  int target_rank = 0;
  const DynkinType* target_type = nullptr;
  int comp_size = 0;

  int n = 0;
  std::vector<std::bitset<kMax>> compat;  // product in {0,1}
  std::vector<std::bitset<kMax>> adj;     // product == 1
  std::vector<int> chosen;
  std::vector<Root> found;

  void prepare() {
    n = static_cast<int>(candidates.size());
    compat.assign(static_cast<size_t>(n), {});
    adj.assign(static_cast<size_t>(n), {});
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Z p = inner(candidates[static_cast<size_t>(i)], candidates[static_cast<size_t>(j)]);
        if (p == 0 || p == 1) {
          compat[static_cast<size_t>(i)].set(static_cast<size_t>(j));
          compat[static_cast<size_t>(j)].set(static_cast<size_t>(i));
          if (p == 1) {
            adj[static_cast<size_t>(i)].set(static_cast<size_t>(j));
            adj[static_cast<size_t>(j)].set(static_cast<size_t>(i));
          }
        }
      }
  }

  // The partial diagram must stay a disjoint union of ADE diagrams that can
  // still merge into one connected component with the remaining picks.
  bool shape_ok(int x) const {
    int k = static_cast<int>(chosen.size());
    int total = k + 1;
    int deg[9] = {0};
    int edges = 0;
    int part[9];
    for (int i = 0; i < total; ++i) part[i] = i;
    auto find = [&](int a) {
      while (part[a] != a) a = part[a];
      return a;
    };
    auto link = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a == b) return false;  // cycle
      part[b] = a;
      return true;
    };
    for (int i = 0; i < total; ++i) {
      int vi = i < k ? chosen[static_cast<size_t>(i)] : x;
      for (int j = i + 1; j < total; ++j) {
        int vj = j < k ? chosen[static_cast<size_t>(j)] : x;
        if (adj[static_cast<size_t>(vi)].test(static_cast<size_t>(vj))) {
          ++deg[i];
          ++deg[j];
          ++edges;
          if (!link(i, j)) return false;
        }
      }
    }
    int parts = 0;
    int branch_of[9];
    for (int i = 0; i < total; ++i) branch_of[i] = -1;
    for (int i = 0; i < total; ++i) {
      if (deg[i] > 3) return false;
      if (find(i) == i) ++parts;
      if (deg[i] == 3) {
        int root_part = find(i);
        if (branch_of[root_part] != -1) return false;  // two branch vertices
        branch_of[root_part] = i;
      }
    }
    // a new node merges at most three parts (degree <= 3)
    int remaining = target_rank - total;
    if (parts - 1 > 2 * remaining) return false;
    // arm shapes around each branch vertex must be of D/E type
    for (int i = 0; i < total; ++i) {
      int b = branch_of[find(i)];
      if (b != i || deg[i] != 3) continue;
      int arms[3], na = 0;
      for (int j = 0; j < total && na < 3; ++j) {
        if (j == i) continue;
        int vi = i < k ? chosen[static_cast<size_t>(i)] : x;
        int vj = j < k ? chosen[static_cast<size_t>(j)] : x;
        if (!adj[static_cast<size_t>(vi)].test(static_cast<size_t>(vj))) continue;
        // walk away from the branch vertex
        int len = 1, prev = i, cur = j;
        while (true) {
          int next = -1;
          for (int t = 0; t < total; ++t) {
            if (t == prev || t == cur) continue;
            int vc = cur < k ? chosen[static_cast<size_t>(cur)] : x;
            int vt = t < k ? chosen[static_cast<size_t>(t)] : x;
            if (adj[static_cast<size_t>(vc)].test(static_cast<size_t>(vt))) {
              next = t;
              break;
            }
          }
          if (next == -1) break;
          prev = cur;
          cur = next;
          ++len;
        }
        arms[na++] = len;
      }
      std::sort(arms, arms + 3);
      if (arms[0] != 1) return false;
      if (arms[1] > 2) return false;
      if (arms[1] == 2 && arms[2] > 4) return false;
    }
    return true;
  }

  bool complete() {
    std::vector<Root> basis;
    for (int i : chosen) basis.emplace_back(candidates[static_cast<size_t>(i)]);
    // affine-shaped picks are linearly dependent; skip them
    std::vector<LatticeVector> vs;
    for (const auto& r : basis) vs.push_back(r.vec());
    if (Sublattice::span(vs).rank() != target_rank) return false;
    SimpleSystem sys(basis);
    if (!(dynkin_type(sys) == *target_type)) return false;
    if (static_cast<int>(positive_roots(sys).size()) * 2 != comp_size) return false;
    found = std::move(basis);
    return true;
  }

  bool dfs(const std::bitset<kMax>& allowed, int start) {
    if (static_cast<int>(chosen.size()) == target_rank) return complete();
    size_t remaining = static_cast<size_t>(target_rank) - chosen.size();
    if (allowed.count() < remaining) return false;
    for (int i = start; i < n; ++i) {
      if (!allowed.test(static_cast<size_t>(i))) continue;
      if (!shape_ok(i)) continue;
      chosen.push_back(i);
      if (dfs(allowed & compat[static_cast<size_t>(i)], i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  }

  std::optional<std::vector<Root>> run() {
    prepare();
    std::bitset<kMax> all;
    for (int i = 0; i < n; ++i) all.set(static_cast<size_t>(i));
    if (dfs(all, 0)) return found;
    return std::nullopt;
  }
};

}  // namespace

int SmithModel::rank_real() const {
  int r = 0;
  for (const auto& c : components) r += c.derived.rank();
  return r;
}

SmithModel smith_model(const RealStructure& sigma) {
  SmithModel m;
  m.sigma = sigma;

  Sublattice minus_raw = minus_eigenlattice(sigma);
  // reorder to the basis [K, root-lattice part]
  Mat rows(9, std::vector<Z>(9));
  for (size_t i = 0; i < 9; ++i)
    for (size_t j = 0; j < 9; ++j) rows[i][j] = (i == j ? 1 : 0) + sigma.m[i][j];
  {
    std::vector<Z> krow(9);
    const LatticeVector& k = canonical_class();
    krow[0] = k[0];
    for (int i = 1; i < 9; ++i) krow[static_cast<size_t>(i)] = -k[i];
    rows.push_back(krow);
  }
  Sublattice root_part = kernel_sublattice(rows);
  std::vector<LatticeVector> basis{canonical_class()};
  for (const auto& b : root_part.basis()) basis.push_back(b);
  m.minus_lattice = Sublattice(basis);
  if (!m.minus_lattice.same_lattice(minus_raw))
    throw Error("smith_model: ker(1+sigma) does not split as <K> + root part");

  m.upsilon_kernel = image_one_minus(sigma);
  // cross-check against {v in minus | v.minus even}
  {
    std::vector<std::vector<int>> eps = f2_kernel(m.minus_lattice.gram());
    std::vector<LatticeVector> gens;
    for (const auto& e : eps) {
      LatticeVector v;
      for (size_t i = 0; i < e.size(); ++i)
        if (e[i]) v = v + m.minus_lattice.basis()[i];
      gens.push_back(v);
    }
    for (const auto& b : m.minus_lattice.basis()) gens.push_back(2 * b);
    Sublattice two_kernel = Sublattice::span(gens);
    if (!two_kernel.same_lattice(m.upsilon_kernel))
      throw Error("smith_model: (1-sigma)H2 differs from the even-pairing kernel");
  }
  m.quotient = quotient_mod2(m.minus_lattice, m.upsilon_kernel);
  for (const auto& b : m.upsilon_kernel.basis())
    m.kernel_coords.push_back(*m.minus_lattice.coordinates(b));

  for (const auto& r : real_roots(sigma)) {
    auto coords = m.minus_lattice.coordinates(r.vec());
    if (!coords) throw Error("smith_model: real root outside the minus lattice");
    m.roots.push_back({r, *coords, -1});
  }
  // orthogonality components of the real root system
  int n = static_cast<int>(m.roots.size());
  std::vector<int> comp(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) comp[static_cast<size_t>(i)] = i;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (inner(m.roots[static_cast<size_t>(i)].root.vec(),
                m.roots[static_cast<size_t>(j)].root.vec()) != 0) {
        int a = comp[static_cast<size_t>(i)], b = comp[static_cast<size_t>(j)];
        if (a != b)
          for (int t = 0; t < n; ++t)
            if (comp[static_cast<size_t>(t)] == b) comp[static_cast<size_t>(t)] = a;
      }
  std::map<int, int> index_of;
  for (int i = 0; i < n; ++i) {
    int c = comp[static_cast<size_t>(i)];
    auto [it, fresh] = index_of.emplace(c, static_cast<int>(m.components.size()));
    if (fresh) m.components.emplace_back();
    m.roots[static_cast<size_t>(i)].component = it->second;
    m.components[static_cast<size_t>(it->second)].root_indices.push_back(i);
  }
  for (auto& c : m.components) {
    std::vector<Root> roots;
    for (int i : c.root_indices) roots.push_back(m.roots[static_cast<size_t>(i)].root);
    c.derived = simple_system(roots);
    c.type = dynkin_type(c.derived);
  }
  return m;
}

int chi_value(const SmithModel& m, const QuadraticFunction& f, const LatticeVector& x) {
  auto coords = m.minus_lattice.coordinates(x);
  if (!coords) throw Error("chi_value: vector not in the minus eigenlattice");
  return chi_on_coords(f, *coords);
}

int quadratic_value(const SmithModel& m, const QuadraticFunction& f,
                    const LatticeVector& x) {
  auto coords = m.minus_lattice.coordinates(x);
  if (!coords) throw Error("quadratic_value: vector not in the minus eigenlattice");
  return qhat_on(f, x, *coords);
}

std::optional<SimpleSystem> special_basis(const SmithModel& m,
                                          const QuadraticFunction& f) {
  check_preconditions(m, f);
  std::vector<Root> basis;
  for (const auto& comp : m.components) {
    ComponentSearch search;
    for (int i : comp.root_indices) {
      const auto& rec = m.roots[static_cast<size_t>(i)];
      if (chi_on_coords(f, rec.coords) == 1)  // qhat(root) = 0 iff chi = 1
        search.candidates.push_back(rec.root.vec());
    }
    search.target_rank = comp.derived.rank();
    search.target_type = &comp.type;
    search.comp_size = static_cast<int>(comp.root_indices.size());
    // With a perfect cover-edge pairing of the non-simple positive roots,
    // a qhat = 0 basis forces |qhat = 0 roots| = size/2 + rank.
    if (type_has_matching(comp.derived, comp.type) &&
        static_cast<int>(search.candidates.size()) !=
            search.comp_size / 2 + search.target_rank)
      return std::nullopt;
    auto piece = search.run();
    if (!piece) return std::nullopt;
    for (const auto& r : *piece) basis.push_back(r);
  }
  return SimpleSystem(std::move(basis));
}

std::vector<AdmissibleChi> admissible_set(const SmithModel& m) {
  int rank = m.minus_lattice.rank();
  std::vector<AdmissibleChi> out;
  for (unsigned mask = 0; mask < (1u << (rank - 1)); ++mask) {
    QuadraticFunction f;
    f.chi.assign(static_cast<size_t>(rank), 0);
    for (int i = 1; i < rank; ++i)
      f.chi[static_cast<size_t>(i)] = (mask >> (i - 1)) & 1u;
    bool kernel_ok = true;
    for (size_t i = 0; i < m.kernel_coords.size() && kernel_ok; ++i)
      kernel_ok = qhat_on(f, m.upsilon_kernel.basis()[i], m.kernel_coords[i]) == 0;
    if (!kernel_ok) continue;
    auto basis = special_basis(m, f);
    if (basis) out.push_back({std::move(f), std::move(*basis)});
  }
  return out;
}

std::vector<QuadraticFunction> admissible_chis(const SmithModel& m) {
  std::vector<QuadraticFunction> out;
  for (auto& a : admissible_set(m)) out.push_back(a.chi);
  return out;
}

const SmithModel& class_model(const std::string& label) {
  static std::map<std::string, SmithModel> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(label);
  if (it == cache.end())
    it = cache.emplace(label, smith_model(catalog_entry(label).sigma)).first;
  return it->second;
}

const std::vector<AdmissibleChi>& class_admissible(const std::string& label) {
  static std::map<std::string, std::vector<AdmissibleChi>> cache;
  static std::mutex mu;
  const SmithModel& m = class_model(label);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(label);
  if (it == cache.end()) it = cache.emplace(label, admissible_set(m)).first;
  return it->second;
}

LineCount line_counts(const SmithModel& m, const QuadraticFunction& f) {
  if (!special_basis(m, f)) throw Error("line_counts: chi is not admissible");
  LineCount lc;
  for (const auto& rec : m.roots) {
    if (chi_on_coords(f, rec.coords) == 1)
      ++lc.hyperbolic;  // qhat(root) = 0
    else
      ++lc.elliptic;
  }
  lc.signed_sum = lc.hyperbolic - lc.elliptic;
  return lc;
}

}  // namespace dp1
