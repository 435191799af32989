#pragma once

#include <algorithm>
#include <vector>

#include "system.hpp"

namespace dres {

/// One slot of the last column of M(L): row `row` holds d^{top_i - k} F_i, so
/// the slot carries x_{i,m} with m = top_i - k.
struct XSlot {
  int row = 0;  // 1-based
  int i = 0;
  int m = 0;
};

struct SystemProfile {
  int n = 0;
  std::vector<int> o;        // o[i-1]
  std::vector<int> gamma_j;  // gamma_j[j-1]
  int gamma = 0;
  int N = 0;
  int L = 0;
  int Lh = 0;
  std::vector<DerVar> V;   // columns of M_{L-1}, decreasing orderly ranking
  std::vector<DerVar> Vh;  // columns of M(L^h)
  std::vector<XSlot> Xset;

  /// N - o_i - gamma: number of derivatives taken of F_i.
  int top(int i) const { return N - o[static_cast<std::size_t>(i - 1)] - gamma; }

  /// 1-based row of d^{top_i - k} F_i.
  int row_index(int i, int k) const {
    int s = 0;
    for (int h = 1; h < i; ++h) s += o[static_cast<std::size_t>(h - 1)];
    return (i - 1) * (N - gamma) - s + i + k;
  }

  /// Position of v in V, -1 when v is outside the window.
  int column(const DerVar& v) const { return position(V, v); }
  /// Position of v in V^h.
  int column_h(const DerVar& v) const { return position(Vh, v); }

 private:
  static int position(const std::vector<DerVar>& cols, const DerVar& v) {
    auto it = std::find(cols.begin(), cols.end(), v);
    return it == cols.end() ? -1 : static_cast<int>(it - cols.begin());
  }
};

inline std::vector<DerVar> orderly_window(int n, int N, int gamma, const std::vector<int>& gamma_j, int shrink) {
  int max_order = 0;
  for (int j = 1; j < n; ++j) max_order = std::max(max_order, N - gamma_j[static_cast<std::size_t>(j - 1)] - gamma - shrink);
  std::vector<DerVar> out;
  for (int k = max_order; k >= 0; --k)
    for (int j = n - 1; j >= 1; --j)
      if (k <= N - gamma_j[static_cast<std::size_t>(j - 1)] - gamma - shrink) out.push_back(uvar(j, k));
  return out;
}

template <typename R>
SystemProfile profile(const SystemT<R>& sys) {
  SystemProfile pr;
  const int n = sys.n();
  pr.n = n;
  for (int i = 1; i <= n; ++i) {
    int oi = 0;
    for (int j = 1; j < n; ++j) oi = std::max(oi, sys.H[static_cast<std::size_t>(i - 1)].ord(VarKind::U, j));
    pr.o.push_back(oi);
    pr.N += oi;
  }
  for (int j = 1; j < n; ++j) {
    int g = -1;
    for (int i = 1; i <= n; ++i) {
      int v = pr.o[static_cast<std::size_t>(i - 1)] - sys.H[static_cast<std::size_t>(i - 1)].ord(VarKind::U, j);
      g = g < 0 ? v : std::min(g, v);
    }
    pr.gamma_j.push_back(g);
    pr.gamma += g;
  }
  for (int i = 1; i <= n; ++i) {
    const int t = pr.top(i);
    if (t < 0) throw InvalidSystem("negative prolongation count for equation " + std::to_string(i));
    pr.L += t + 1;
    pr.Lh += t;
  }
  pr.V = orderly_window(n, pr.N, pr.gamma, pr.gamma_j, 0);
  pr.Vh = orderly_window(n, pr.N, pr.gamma, pr.gamma_j, 1);
  for (int i = 1; i <= n; ++i)
    for (int k = 0; k <= pr.top(i); ++k) pr.Xset.push_back({pr.row_index(i, k), i, pr.top(i) - k});
  return pr;
}

}  // namespace dres
