#pragma once

#include <algorithm>
#include <future>
#include <map>
#include <thread>
#include <vector>

#include "matrix.hpp"
#include "profile.hpp"

namespace dres {

/// PS ordered by row: row l(i,k) holds d^{top_i - k} F_i.
template <typename R>
std::vector<LinDiffPoly<R>> build_PS(const SystemT<R>& sys, const SystemProfile& pr) {
  std::vector<LinDiffPoly<R>> ps(static_cast<std::size_t>(pr.L));
  for (int i = 1; i <= sys.n(); ++i) {
    const int top = pr.top(i);
    std::vector<LinDiffPoly<R>> ders{sys.F(i)};
    for (int e = 1; e <= top; ++e) ders.push_back(ders.back().derivative());
    for (int k = 0; k <= top; ++k)
      ps[static_cast<std::size_t>(pr.row_index(i, k) - 1)] = ders[static_cast<std::size_t>(top - k)];
  }
  return ps;
}

template <typename R>
std::vector<LinDiffPoly<R>> build_PS(const SystemT<R>& sys) {
  return build_PS(sys, profile(sys));
}

/// S(i, j) = coefficient of u_{n-j}^{(o_i - gamma_{n-j})} in F_i.
template <typename R>
Matrix<R> leading_matrix(const SystemT<R>& sys, const SystemProfile& pr) {
  const int n = sys.n();
  Matrix<R> S(n, n - 1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < n; ++j) {
      const int u = n - j;
      const int ord = pr.o[static_cast<std::size_t>(i - 1)] - pr.gamma_j[static_cast<std::size_t>(u - 1)];
      if (ord >= 0) S(i - 1, j - 1) = sys.H[static_cast<std::size_t>(i - 1)].coeff(uvar(u, ord));
    }
  return S;
}

template <typename R>
Matrix<R> leading_matrix(const SystemT<R>& sys) {
  return leading_matrix(sys, profile(sys));
}

/// Coefficient rows of the given polynomials over the column list cols.
template <typename R>
Matrix<R> coefficient_block(const std::vector<LinDiffPoly<R>>& polys, const std::vector<DerVar>& cols) {
  std::map<DerVar, int, RankLess> pos;
  for (std::size_t c = 0; c < cols.size(); ++c) pos.emplace(cols[c], static_cast<int>(c));
  Matrix<R> m(static_cast<int>(polys.size()), static_cast<int>(cols.size()));
  for (std::size_t r = 0; r < polys.size(); ++r)
    for (const auto& [v, c] : polys[r].terms()) {
      if (v.kind != VarKind::U) continue;
      auto it = pos.find(v);
      if (it == pos.end()) throw std::logic_error("parameter derivative outside the column window");
      m(static_cast<int>(r), it->second) = c;
    }
  return m;
}

/// Last-column entry x_{i,m} - d^m a_i.
struct LastColEntry {
  int i = 0;
  int m = 0;
  FieldElem da;
};

template <typename R>
struct MacaulayMatrix {
  Matrix<R> block;  // M_{L-1}
  std::vector<LastColEntry> last;
};

template <typename R>
MacaulayMatrix<R> build_ML(const SystemT<R>& sys, const SystemProfile& pr) {
  MacaulayMatrix<R> M;
  M.block = coefficient_block(build_PS(sys, pr), pr.V);
  M.last.resize(static_cast<std::size_t>(pr.L));
  for (const auto& s : pr.Xset) {
    FieldElem da = sys.a[static_cast<std::size_t>(s.i - 1)];
    for (int e = 0; e < s.m; ++e) da = da.derive();
    M.last[static_cast<std::size_t>(s.row - 1)] = {s.i, s.m, da};
  }
  return M;
}

template <typename R>
MacaulayMatrix<R> build_ML(const SystemT<R>& sys) {
  return build_ML(sys, profile(sys));
}

/// M(L^h): rows d^{top_i - 1 - k} H_i over V^h.
template <typename R>
Matrix<R> build_MLh(const SystemT<R>& sys, const SystemProfile& pr) {
  if (pr.N == 0) throw EmptyHomogeneousSet("no homogeneous prolongations when N = 0");
  std::vector<LinDiffPoly<R>> rows;
  for (int i = 1; i <= sys.n(); ++i) {
    const int top = pr.top(i);
    if (top < 1) continue;
    std::vector<LinDiffPoly<R>> ders{sys.H[static_cast<std::size_t>(i - 1)]};
    for (int e = 1; e < top; ++e) ders.push_back(ders.back().derivative());
    for (int k = 0; k < top; ++k) rows.push_back(ders[static_cast<std::size_t>(top - 1 - k)]);
  }
  return coefficient_block(rows, pr.Vh);
}

template <typename R>
Matrix<R> build_MLh(const SystemT<R>& sys) {
  return build_MLh(sys, profile(sys));
}

/// Evaluate f(0..count-1) on worker threads; results land in index order.
template <typename T, typename F>
std::vector<T> parallel_map(int count, F&& f) {
  std::vector<T> out(static_cast<std::size_t>(count));
  const int workers = std::max(1, std::min<int>(count, static_cast<int>(std::thread::hardware_concurrency())));
  std::vector<std::future<void>> jobs;
  for (int w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (int k = w; k < count; k += workers) out[static_cast<std::size_t>(k)] = f(k);
    }));
  for (auto& j : jobs) j.get();
  return out;
}

/// Cofactors (-1)^{r+L} det(M_{L-1} without row r), r = 1..L.
template <typename R>
std::vector<R> last_column_cofactors(const Matrix<R>& block) {
  const int L = block.rows();
  return parallel_map<R>(L, [&](int r) {
    R d = det(block.without_row(r));
    return ((r + 1 + L) % 2 == 0) ? d : R(-d);
  });
}

/// dcres = det M(L) expanded along the last column.
template <typename R>
LinDiffPoly<R> dcres(const SystemT<R>& sys, const SystemProfile& pr) {
  const auto M = build_ML(sys, pr);
  const auto cof = last_column_cofactors(M.block);
  LinDiffPoly<R> out;
  for (std::size_t r = 0; r < cof.size(); ++r) {
    if (is_zero_coeff(cof[r])) continue;
    const auto& e = M.last[r];
    out.add(xvar(e.i, e.m), cof[r]);
    if (!e.da.is_zero()) out.add_constant(-(cof[r] * lift<R>(e.da)));
  }
  return out;
}

template <typename R>
LinDiffPoly<R> dcres(const SystemT<R>& sys) {
  return dcres(sys, profile(sys));
}

template <typename R>
R dcres_h(const SystemT<R>& sys, const SystemProfile& pr) {
  return det(build_MLh(sys, pr));
}

template <typename R>
R dcres_h(const SystemT<R>& sys) {
  return dcres_h(sys, profile(sys));
}

/// rank of the principal matrix M_{L-1}.
inline int rank_ML1(const DPPESystem& sys, const SystemProfile& pr) { return rank(build_ML(sys, pr).block); }

}  // namespace dres
