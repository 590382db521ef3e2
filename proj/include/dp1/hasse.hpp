#pragma once

#include <utility>
#include <vector>

#include "dp1/roots.hpp"

namespace dp1 {

struct SmithModel;
struct QuadraticFunction;

struct MatchingNotFoundError : Error {
  using Error::Error;
};

// Cover graph of the positive-root order: g covers f iff g = f + b for a
// simple root b (equivalently f.b = 1).
struct HassePoset {
  SimpleSystem system;
  std::vector<PositiveRoot> nodes;           // sorted by height, then lex
  std::vector<std::pair<int, int>> covers;   // (f, g) node indices, g = f + simple
};

HassePoset hasse_covers(const SimpleSystem& s);

// Perfect pairing of the non-simple positive roots along cover edges.
struct Pairing {
  HassePoset poset;
  std::vector<std::pair<int, int>> pairs;  // node indices, lower height first
};

// Deterministic maximum matching; covers join consecutive heights, so the
// graph restricted to non-simple roots is bipartite by height parity.
// Throws MatchingNotFoundError when no perfect pairing exists.
Pairing pair_matching(const SimpleSystem& s);

// True iff qhat separates every matched pair. Requires qhat = 0 on the
// pairing's simple system (rejects mismatched bases).
bool verify_cancelation(const SmithModel& m, const QuadraticFunction& f,
                        const Pairing& p);

// 2 * (|simple system| + sum over pairs of s(u) + s(v)) with s = i^qhat,
// the matching route to the signed count of real lines.
Z signed_sum_via_matching(const SmithModel& m, const QuadraticFunction& f,
                          const Pairing& p);

}  // namespace dp1
