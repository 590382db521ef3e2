#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dp1 {

using Z = long long;
using Mat = std::vector<std::vector<Z>>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Mat identity_mat(int n);
Mat mat_mul(const Mat& a, const Mat& b);
bool mat_eq(const Mat& a, const Mat& b);

// Exact determinant of a square integer matrix (fraction-free elimination).
Z det_bareiss(Mat a);

// u * a * v == d with u, v unimodular, d diagonal, d[i][i] >= 0 and
// d[i][i] | d[i+1][i+1]. uinv, vinv are the exact integer inverses.
struct SmithForm {
  Mat d;
  Mat u, uinv;
  Mat v, vinv;
  int rank = 0;
};

SmithForm smith_normal_form(const Mat& a);

}  // namespace dp1
