#include "dp1/roots.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dp1 {

Root::Root(const LatticeVector& v) : v_(v) {
  if (inner(v, v) != -2 || inner(v, canonical_class()) != 0)
    throw Error("Root: " + to_string(v) + " has wrong norm or pairing with K");
}

ExceptionalClass::ExceptionalClass(const LatticeVector& v) : v_(v) {
  if (inner(v, v) != -1 || inner(v, canonical_class()) != -1)
    throw Error("ExceptionalClass: " + to_string(v) + " violates v.v = v.K = -1");
}

namespace {

// Enumerate lattice vectors with a in [a_lo, a_hi], sum b_i = s(a) and
// sum b_i^2 = q(a), by depth-first search with feasibility pruning.
template <typename SumFn, typename SqFn, typename Out>
void enumerate_bounded(Z a_lo, Z a_hi, SumFn target_sum, SqFn target_sq, Out out) {
  for (Z a = a_lo; a <= a_hi; ++a) {
    Z want_sum = target_sum(a);
    Z want_sq = target_sq(a);
    if (want_sq < 0) continue;
    LatticeVector v;
    v[0] = a;
    Z bound = 0;
    while (bound * bound < want_sq) ++bound;
    auto rec = [&](auto&& self, int i, Z rem_sum, Z rem_sq) -> void {
      if (i == 9) {
        if (rem_sum == 0 && rem_sq == 0) out(v);
        return;
      }
      Z slots = 9 - i;
      for (Z b = -bound; b <= bound; ++b) {
        Z s2 = rem_sq - b * b;
        if (s2 < 0) continue;
        Z s1 = rem_sum - b;
        // remaining slots must be able to reach s1 with squares summing to s2
        if (s1 * s1 > (slots - 1) * s2) continue;
        v[i] = b;
        self(self, i + 1, s1, s2);
      }
      v[i] = 0;
    };
    rec(rec, 1, want_sum, want_sq);
  }
}

std::vector<Root> build_roots() {
  // e.K = 0 forces sum b_i = -3a; e.e = -2 forces sum b_i^2 = a^2 + 2.
  // Cauchy-Schwarz gives a^2 <= 16 and the boundary case is non-integral,
  // so |a| <= 3.
  std::vector<Root> roots;
  enumerate_bounded(
      -3, 3, [](Z a) { return -3 * a; }, [](Z a) { return a * a + 2; },
      [&](const LatticeVector& v) { roots.emplace_back(v); });
  std::sort(roots.begin(), roots.end());
  if (roots.size() != 240) throw Error("root enumeration did not produce 240 vectors");
  for (const auto& r : roots)
    if (positivity_value(r.vec()) == 0)
      throw Error("positivity functional vanishes on a root");
  return roots;
}

std::vector<ExceptionalClass> build_exceptional() {
  // v.K = -1 forces sum b_i = 1 - 3a; v.v = -1 forces sum b_i^2 = a^2 + 1.
  // Cauchy-Schwarz: (1-3a)^2 <= 8(a^2+1), i.e. -1 <= a <= 7.
  std::vector<ExceptionalClass> classes;
  enumerate_bounded(
      -1, 7, [](Z a) { return 1 - 3 * a; }, [](Z a) { return a * a + 1; },
      [&](const LatticeVector& v) { classes.emplace_back(v); });
  std::sort(classes.begin(), classes.end());
  if (classes.size() != 240)
    throw Error("exceptional-class enumeration did not produce 240 vectors");
  return classes;
}

}  // namespace

const std::vector<Root>& all_roots() {
  static const std::vector<Root> roots = build_roots();
  return roots;
}

const std::vector<ExceptionalClass>& all_exceptional() {
  static const std::vector<ExceptionalClass> classes = build_exceptional();
  return classes;
}

Root to_root(const ExceptionalClass& v) {
  return Root(-canonical_class() - v.vec());
}

ExceptionalClass to_exceptional(const Root& e) {
  return ExceptionalClass(-canonical_class() - e.vec());
}

Z positivity_value(const LatticeVector& v) {
  // coefficients are bounded by 6, so the weighted sum vanishes only at 0
  Z value = 0;
  for (int i = 0; i < 9; ++i) value = 100 * value + v[i];
  return value;
}

SimpleSystem::SimpleSystem(std::vector<Root> roots) : roots_(std::move(roots)) {
  std::sort(roots_.begin(), roots_.end());
  int n = static_cast<int>(roots_.size());
  cartan_.assign(static_cast<size_t>(n), std::vector<Z>(static_cast<size_t>(n), 0));
  std::vector<LatticeVector> vs;
  for (int i = 0; i < n; ++i) {
    vs.push_back(roots_[static_cast<size_t>(i)].vec());
    cartan_[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
    for (int j = 0; j < i; ++j) {
      Z p = inner(roots_[static_cast<size_t>(i)].vec(), roots_[static_cast<size_t>(j)].vec());
      if (p != 0 && p != 1)
        throw Error("SimpleSystem: inner product " + std::to_string(p) +
                    " outside {0,1}");
      cartan_[static_cast<size_t>(i)][static_cast<size_t>(j)] = -p;
      cartan_[static_cast<size_t>(j)][static_cast<size_t>(i)] = -p;
    }
  }
  if (n > 0) Sublattice check(vs);  // throws on dependence
}

SimpleSystem simple_system(const std::vector<Root>& subsystem) {
  std::set<LatticeVector> members;
  for (const auto& r : subsystem) members.insert(r.vec());
  for (const auto& v : members)
    if (!members.count(-v))
      throw Error("simple_system: set not closed under negation");
  std::vector<LatticeVector> positives;
  for (const auto& v : members)
    if (positivity_value(v) > 0) positives.push_back(v);
  std::set<LatticeVector> pos_set(positives.begin(), positives.end());
  std::vector<Root> simples;
  for (const auto& r : positives) {
    bool decomposable = false;
    for (const auto& p : positives) {
      if (p == r) continue;
      if (pos_set.count(r - p)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simples.emplace_back(r);
  }
  return SimpleSystem(std::move(simples));
}

int DynkinType::rank() const {
  int r = 0;
  for (const auto& c : components) r += c.rank;
  return r;
}

std::string DynkinType::label() const {
  if (components.empty()) return "0";
  std::string out;
  size_t i = 0;
  while (i < components.size()) {
    size_t j = i;
    while (j < components.size() && components[j] == components[i]) ++j;
    if (!out.empty()) out += "+";
    size_t mult = j - i;
    if (mult > 1) out += std::to_string(mult);
    out += components[i].family + std::to_string(components[i].rank);
    i = j;
  }
  return out;
}

DynkinType classify_cartan(const Mat& cartan) {
  int n = static_cast<int>(cartan.size());
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (cartan[static_cast<size_t>(i)][static_cast<size_t>(i)] != 2)
      throw Error("classify_cartan: diagonal entry not 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Z e = cartan[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (e != 0 && e != -1) throw Error("classify_cartan: not simply laced");
      if (e == -1) adj[static_cast<size_t>(i)].push_back(j);
    }
  }
  std::vector<int> comp(static_cast<size_t>(n), -1);
  int ncomp = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[static_cast<size_t>(i)] != -1) continue;
    std::vector<int> stack{i};
    comp[static_cast<size_t>(i)] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[static_cast<size_t>(x)])
        if (comp[static_cast<size_t>(y)] == -1) {
          comp[static_cast<size_t>(y)] = ncomp;
          stack.push_back(y);
        }
    }
    ++ncomp;
  }
  DynkinType type;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> nodes;
    for (int i = 0; i < n; ++i)
      if (comp[static_cast<size_t>(i)] == c) nodes.push_back(i);
    int m = static_cast<int>(nodes.size());
    int edges = 0;
    std::vector<int> branch;
    for (int x : nodes) {
      int deg = static_cast<int>(adj[static_cast<size_t>(x)].size());
      edges += deg;
      if (deg > 3) throw Error("classify_cartan: vertex of degree > 3");
      if (deg == 3) branch.push_back(x);
    }
    edges /= 2;
    if (edges != m - 1) throw Error("classify_cartan: component contains a cycle");
    if (branch.size() > 1) throw Error("classify_cartan: two branch vertices");
    if (branch.empty()) {
      type.components.push_back({'A', m});
      continue;
    }
    // arm lengths from the branch vertex
    std::vector<int> arms;
    for (int start : adj[static_cast<size_t>(branch[0])]) {
      int len = 1, prev = branch[0], cur = start;
      while (true) {
        int next = -1;
        for (int y : adj[static_cast<size_t>(cur)])
          if (y != prev) next = y;
        if (next == -1) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) {
      type.components.push_back({'D', m});
    } else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
      type.components.push_back({'E', m});
    } else {
      throw Error("classify_cartan: branch arms (" + std::to_string(arms[0]) + "," +
                  std::to_string(arms[1]) + "," + std::to_string(arms[2]) +
                  ") are not of ADE shape");
    }
  }
  std::sort(type.components.begin(), type.components.end(),
            [](const DynkinComponent& a, const DynkinComponent& b) {
              if (a.rank != b.rank) return a.rank > b.rank;
              return a.family > b.family;
            });
  return type;
}

DynkinType dynkin_type(const SimpleSystem& s) { return classify_cartan(s.cartan()); }

std::vector<PositiveRoot> positive_roots(const SimpleSystem& s) {
  std::map<LatticeVector, int> height;
  std::vector<LatticeVector> frontier;
  for (const auto& b : s.roots()) {
    height[b.vec()] = 1;
    frontier.push_back(b.vec());
  }
  // every positive root of height h+1 is (root of height h) + (simple root)
  while (!frontier.empty()) {
    std::vector<LatticeVector> next;
    for (const auto& f : frontier)
      for (const auto& b : s.roots()) {
        if (inner(f, b.vec()) != 1) continue;  // f + b is a root iff f.b = 1
        LatticeVector g = f + b.vec();         // norm -2 automatically
        if (height.emplace(g, height[f] + 1).second) next.push_back(g);
      }
    frontier = std::move(next);
  }
  std::vector<PositiveRoot> out;
  for (const auto& [v, h] : height) out.push_back({Root(v), h});
  std::sort(out.begin(), out.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.root < b.root;
  });
  return out;
}

}  // namespace dp1
