#include "dp1/hasse.hpp"

#include <algorithm>
#include <map>

#include "dp1/pin.hpp"

namespace dp1 {

HassePoset hasse_covers(const SimpleSystem& s) {
  HassePoset poset;
  poset.system = s;
  poset.nodes = positive_roots(s);
  std::map<LatticeVector, int> index;
  for (size_t i = 0; i < poset.nodes.size(); ++i)
    index[poset.nodes[i].root.vec()] = static_cast<int>(i);
  for (size_t i = 0; i < poset.nodes.size(); ++i) {
    const auto& f = poset.nodes[i];
    for (const auto& b : s.roots()) {
      if (inner(f.root.vec(), b.vec()) != 1) continue;
      auto it = index.find(f.root.vec() + b.vec());
      if (it == index.end()) continue;
      poset.covers.emplace_back(static_cast<int>(i), it->second);
      if (poset.nodes[static_cast<size_t>(it->second)].height != f.height + 1)
        throw Error("hasse_covers: cover does not raise height by one");
    }
  }
  std::sort(poset.covers.begin(), poset.covers.end());
  poset.covers.erase(std::unique(poset.covers.begin(), poset.covers.end()),
                     poset.covers.end());
  return poset;
}

Pairing pair_matching(const SimpleSystem& s) {
  Pairing pairing;
  pairing.poset = hasse_covers(s);
  const auto& nodes = pairing.poset.nodes;

  // matchable nodes: positive roots that are not simple (height >= 2);
  // heights alternate across covers, so split by parity
  std::vector<int> left;  // even height
  std::vector<std::vector<int>> adj(nodes.size());
  for (const auto& [f, g] : pairing.poset.covers) {
    if (nodes[static_cast<size_t>(f)].height < 2) continue;
    adj[static_cast<size_t>(f)].push_back(g);
    adj[static_cast<size_t>(g)].push_back(f);
  }
  int nonsimple = 0;
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].height < 2) continue;
    ++nonsimple;
    if (nodes[i].height % 2 == 0) left.push_back(static_cast<int>(i));
  }

  std::vector<int> match(nodes.size(), -1);
  std::vector<char> visited(nodes.size());
  auto augment = [&](auto&& self, int u) -> bool {
    for (int v : adj[static_cast<size_t>(u)]) {
      if (visited[static_cast<size_t>(v)]) continue;
      visited[static_cast<size_t>(v)] = 1;
      if (match[static_cast<size_t>(v)] == -1 || self(self, match[static_cast<size_t>(v)])) {
        match[static_cast<size_t>(v)] = u;
        match[static_cast<size_t>(u)] = v;
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (int u : left) {
    std::fill(visited.begin(), visited.end(), 0);
    if (augment(augment, u)) ++matched;
  }
  if (2 * matched != nonsimple)
    throw MatchingNotFoundError("pair_matching: no perfect pairing for type " +
                                dynkin_type(s).label());
  for (int u : left)
    if (match[static_cast<size_t>(u)] != -1) {
      int v = match[static_cast<size_t>(u)];
      int lo = nodes[static_cast<size_t>(u)].height < nodes[static_cast<size_t>(v)].height ? u : v;
      int hi = lo == u ? v : u;
      pairing.pairs.emplace_back(lo, hi);
    }
  std::sort(pairing.pairs.begin(), pairing.pairs.end());
  return pairing;
}

namespace {

int qhat_root(const SmithModel& m, const QuadraticFunction& f, const Root& r) {
  return quadratic_value(m, f, r.vec());
}

}  // namespace

bool verify_cancelation(const SmithModel& m, const QuadraticFunction& f,
                        const Pairing& p) {
  for (const auto& b : p.poset.system.roots())
    if (qhat_root(m, f, b) != 0)
      throw Error("verify_cancelation: qhat does not vanish on the simple system");
  for (const auto& [u, v] : p.pairs) {
    int qu = qhat_root(m, f, p.poset.nodes[static_cast<size_t>(u)].root);
    int qv = qhat_root(m, f, p.poset.nodes[static_cast<size_t>(v)].root);
    if (qu == qv) return false;
  }
  return true;
}

Z signed_sum_via_matching(const SmithModel& m, const QuadraticFunction& f,
                          const Pairing& p) {
  auto sign = [&](const Root& r) -> Z {
    return qhat_root(m, f, r) == 0 ? 1 : -1;  // i^0 = 1, i^2 = -1
  };
  Z pair_sum = 0;
  for (const auto& [u, v] : p.pairs)
    pair_sum += sign(p.poset.nodes[static_cast<size_t>(u)].root) +
                sign(p.poset.nodes[static_cast<size_t>(v)].root);
  Z basis_sum = 0;
  for (const auto& b : p.poset.system.roots()) basis_sum += sign(b);
  return 2 * (basis_sum + pair_sum);
}

}  // namespace dp1
