#pragma once

#include <algorithm>
#include <vector>

#include "resultant.hpp"

namespace dres {

struct EchelonBasis {
  std::vector<LinPoly> G;   // increasing in R*
  std::vector<LinPoly> G0;  // the elements free of parameters
  std::vector<DerVar> columns;
  int rank = 0;
};

/// Columns of M_{2L}: V, then the x-slots in decreasing R*, then 1.
inline std::vector<DerVar> m2l_columns(const SystemProfile& pr) {
  std::vector<DerVar> cols = pr.V;
  std::vector<DerVar> xs;
  for (const auto& s : pr.Xset) xs.push_back(xvar(s.i, s.m));
  std::sort(xs.begin(), xs.end(), [](const DerVar& a, const DerVar& b) { return RankLess{}(b, a); });
  cols.insert(cols.end(), xs.begin(), xs.end());
  return cols;
}

/// Reduced row echelon form of M_{2L}, read back as polynomials.
inline EchelonBasis echelon_basis(const DPPESystem& sys) {
  const SystemProfile pr = profile(sys);
  const auto ps = build_PS(sys, pr);
  EchelonBasis eb;
  eb.columns = m2l_columns(pr);
  const int nc = static_cast<int>(eb.columns.size());
  std::map<DerVar, int, RankLess> pos;
  for (int c = 0; c < nc; ++c) pos.emplace(eb.columns[static_cast<std::size_t>(c)], c);
  Matrix<FieldElem> M(pr.L, nc + 1);
  for (int r = 0; r < pr.L; ++r) {
    const auto& P = ps[static_cast<std::size_t>(r)];
    for (const auto& [v, c] : P.terms()) M(r, pos.at(v)) = c;
    M(r, nc) = P.constant();
  }
  eb.rank = rref(M).rank;
  for (int r = eb.rank - 1; r >= 0; --r) {
    LinPoly B(M(r, nc));
    for (int c = 0; c < nc; ++c)
      if (!M(r, c).is_zero()) B.add(eb.columns[static_cast<std::size_t>(c)], M(r, c));
    if (!B.has_kind(VarKind::U)) eb.G0.push_back(B);
    eb.G.push_back(std::move(B));
  }
  return eb;
}

/// Remove lead(Q) and all its derivatives from P by linear reduction.
inline LinPoly lin_prem(LinPoly P, const LinPoly& Q) {
  auto lq = Q.lead();
  if (!lq) throw ZeroDivisor("pseudo-remainder by a polynomial without variables");
  const FieldElem inv = Q.coeff(*lq).inverse();
  std::vector<LinPoly> ders{Q};
  for (;;) {
    std::optional<DerVar> top;
    for (const auto& [v, c] : P.terms())
      if (v.same_variable(*lq) && v.order >= lq->order) top = v;
    if (!top) return P;
    const int e = top->order - lq->order;
    while (static_cast<int>(ders.size()) <= e) ders.push_back(ders.back().derivative());
    P -= ders[static_cast<std::size_t>(e)].scaled(P.coeff(*top) * inv);
  }
}

/// prem(P, {A_1..A_t}) = prem(prem(P, A_t), {A_1..A_{t-1}}), repeated until
/// no leader of the chain or its derivatives remain.
inline LinPoly lin_prem(LinPoly P, const std::vector<LinPoly>& chain) {
  auto reducible = [&]() {
    for (const auto& A : chain) {
      const DerVar l = *A.lead();
      for (const auto& [v, c] : P.terms())
        if (v.same_variable(l) && v.order >= l.order) return true;
    }
    return false;
  };
  while (reducible())
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) P = lin_prem(std::move(P), *it);
  return P;
}

struct CharSet {
  std::vector<LinPoly> A;
  std::vector<LinPoly> A0;
  bool leaders_distinct = true;
  EchelonBasis basis;

  int dimension(int n) const { return n - static_cast<int>(A0.size()); }
  bool full_dimension() const { return A0.size() == 1; }
};

/// Characteristic set of [PS] from the echelon basis, plus its part free of U.
inline CharSet charset(const DPPESystem& sys) {
  CharSet cs;
  cs.basis = echelon_basis(sys);
  const auto& G = cs.basis.G;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (i > 0 && G[i].lead() == G[i - 1].lead()) continue;
    LinPoly R = lin_prem(G[i], cs.A);
    if (R.is_zero() || !R.lead()) continue;
    for (const auto& A : cs.A)
      if (A.lead()->same_variable(*R.lead())) cs.leaders_distinct = false;
    cs.A.push_back(std::move(R));
  }
  for (const auto& A : cs.A)
    if (!A.has_kind(VarKind::U)) cs.A0.push_back(A);
  return cs;
}

}  // namespace dres
