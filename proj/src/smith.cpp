#include "dp1/smith.hpp"

#include <algorithm>
#include <cstdlib>

namespace dp1 {

namespace {

// floor division, remainder in [0, |b|)
Z floor_div(Z a, Z b) {
  Z q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

struct Worker {
  Mat d, u, uinv, v, vinv;
  int m, n;

  explicit Worker(const Mat& a) : d(a) {
    m = static_cast<int>(a.size());
    n = m == 0 ? 0 : static_cast<int>(a[0].size());
    u = identity_mat(m);
    uinv = identity_mat(m);
    v = identity_mat(n);
    vinv = identity_mat(n);
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    std::swap(d[i], d[j]);
    std::swap(u[i], u[j]);
    for (int k = 0; k < m; ++k) std::swap(uinv[k][i], uinv[k][j]);
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < m; ++k) std::swap(d[k][i], d[k][j]);
    for (int k = 0; k < n; ++k) std::swap(v[k][i], v[k][j]);
    std::swap(vinv[i], vinv[j]);
  }
  void negate_row(int i) {
    for (auto& x : d[i]) x = -x;
    for (auto& x : u[i]) x = -x;
    for (int k = 0; k < m; ++k) uinv[k][i] = -uinv[k][i];
  }
  // row_i += q * row_j
  void add_row(int i, int j, Z q) {
    if (q == 0) return;
    for (int k = 0; k < n; ++k) d[i][k] += q * d[j][k];
    for (int k = 0; k < m; ++k) u[i][k] += q * u[j][k];
    for (int k = 0; k < m; ++k) uinv[k][j] -= q * uinv[k][i];
  }
  // col_i += q * col_j
  void add_col(int i, int j, Z q) {
    if (q == 0) return;
    for (int k = 0; k < m; ++k) d[k][i] += q * d[k][j];
    for (int k = 0; k < n; ++k) v[k][i] += q * v[k][j];
    for (int k = 0; k < n; ++k) vinv[j][k] -= q * vinv[i][k];
  }

  bool find_pivot(int t, int* pi, int* pj) const {
    Z best = 0;
    bool found = false;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (d[i][j] != 0 && (!found || std::llabs(d[i][j]) < best)) {
          best = std::llabs(d[i][j]);
          *pi = i;
          *pj = j;
          found = true;
        }
    return found;
  }

  int run() {
    int t = 0;
    while (t < std::min(m, n)) {
      int pi, pj;
      if (!find_pivot(t, &pi, &pj)) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool clean = true;
      Z p = d[t][t];
      for (int i = t + 1; i < m; ++i)
        if (d[i][t] != 0) {
          add_row(i, t, -floor_div(d[i][t], p));
          if (d[i][t] != 0) clean = false;
        }
      for (int j = t + 1; j < n; ++j)
        if (d[t][j] != 0) {
          add_col(j, t, -floor_div(d[t][j], p));
          if (d[t][j] != 0) clean = false;
        }
      if (!clean) continue;  // smaller entries appeared, repick pivot
      // force divisibility of the remaining block by the pivot
      bool fixed = false;
      for (int i = t + 1; i < m && !fixed; ++i)
        for (int j = t + 1; j < n && !fixed; ++j)
          if (d[i][j] % p != 0) {
            add_row(t, i, 1);
            fixed = true;
          }
      if (fixed) continue;
      ++t;
    }
    for (int i = 0; i < std::min(m, n); ++i)
      if (d[i][i] < 0) negate_row(i);
    return t;
  }
};

}  // namespace

Mat identity_mat(int n) {
  Mat r(n, std::vector<Z>(n, 0));
  for (int i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  int m = static_cast<int>(a.size());
  int k = m == 0 ? 0 : static_cast<int>(a[0].size());
  int n = b.empty() ? 0 : static_cast<int>(b[0].size());
  Mat r(m, std::vector<Z>(n, 0));
  for (int i = 0; i < m; ++i)
    for (int l = 0; l < k; ++l) {
      Z x = a[i][l];
      if (x == 0) continue;
      for (int j = 0; j < n; ++j) r[i][j] += x * b[l][j];
    }
  return r;
}

bool mat_eq(const Mat& a, const Mat& b) { return a == b; }

Z det_bareiss(Mat a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  __int128 prev = 1;
  std::vector<std::vector<__int128>> w(n, std::vector<__int128>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w[i][j] = a[i][j];
  int sign = 1;
  for (int t = 0; t < n - 1; ++t) {
    if (w[t][t] == 0) {
      int s = -1;
      for (int i = t + 1; i < n; ++i)
        if (w[i][t] != 0) {
          s = i;
          break;
        }
      if (s < 0) return 0;
      std::swap(w[t], w[s]);
      sign = -sign;
    }
    for (int i = t + 1; i < n; ++i)
      for (int j = t + 1; j < n; ++j)
        w[i][j] = (w[i][j] * w[t][t] - w[i][t] * w[t][j]) / prev;
    prev = w[t][t];
  }
  __int128 det = w[n - 1][n - 1] * sign;
  return static_cast<Z>(det);
}

SmithForm smith_normal_form(const Mat& a) {
  Worker w(a);
  SmithForm s;
  s.rank = w.run();
  s.d = std::move(w.d);
  s.u = std::move(w.u);
  s.uinv = std::move(w.uinv);
  s.v = std::move(w.v);
  s.vinv = std::move(w.vinv);
  return s;
}

}  // namespace dp1
