#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "content.hpp"
#include "perturb.hpp"
#include "resultant.hpp"

namespace dres {

struct Certificate {
  int rank_S = 0;
  int D_phi = -1;  // -1 when no resultant was computed
  std::optional<int> c_A;
  std::optional<int> rank_ML1;
  int L = 0;
  int N = 0;
  int step = 0;  // algorithm step that produced the decision
  LinPoly A_D;
  OrePoly content;
  Perturbation perturbation;
  std::vector<int> permutation;  // 1-based equation order used for the perturbed run
  bool fallback_used = false;
};

struct Decision {
  bool implicit = false;
  LinPoly A;  // normalized implicit equation when implicit
  Certificate cert;
};

struct RunOptions {
  std::optional<Perturbation> perturbation;
  bool allow_fallback = true;
};

/// Lowest p-degree D with a nonzero slice, and that slice.
inline std::pair<int, LinPoly> extract_lowest(const PertLinPoly& dc) {
  int D = -1;
  auto consider = [&](const PertPoly& c) {
    const int lo = c.low_degree();
    if (lo >= 0 && (D < 0 || lo < D)) D = lo;
  };
  for (const auto& [v, c] : dc.terms()) consider(c);
  consider(dc.constant());
  if (D < 0) throw ZeroResultant("the perturbed resultant is identically zero");
  return {D, dc.map_coeffs([&](const PertPoly& c) { return c.coeff(D); })};
}

/// Divide by the coefficient of the highest derivative in R*.
inline LinPoly normalize_lead(const LinPoly& A) {
  auto v = A.lead();
  if (!v) return A;
  return A.scaled(A.coeff(*v).inverse());
}

/// sum_{i,k} c_{ik} x_{perm[i-1], k}: map indices of a permuted system back.
inline LinPoly unpermute(const LinPoly& A, const std::vector<int>& perm) {
  return A.rename([&](const DerVar& v) {
    return v.kind == VarKind::X ? xvar(perm[static_cast<std::size_t>(v.index - 1)] + 1, v.order) : v;
  });
}

namespace detail {

inline constexpr unsigned kWindowAttempts = 4;

struct LowestSlice {
  int D = 0;
  LinPoly A_D;
  Perturbation phi;
  std::vector<int> perm;
  bool fallback = false;
};

inline LowestSlice lowest_slice(const DPPESystem& sys, const SystemProfile& pr, const RunOptions& opt) {
  const int n = sys.n();
  std::vector<int> ident(static_cast<std::size_t>(n));
  std::iota(ident.begin(), ident.end(), 0);
  if (opt.perturbation) {
    auto [D, A] = extract_lowest(dcres(perturb(sys, *opt.perturbation)));
    return {D, std::move(A), *opt.perturbation, ident, false};
  }
  std::string first_failure;
  try {
    Perturbation phi = default_phi(sys, pr);
    auto [D, A] = extract_lowest(dcres(perturb(sys, phi)));
    return {D, std::move(A), std::move(phi), ident, false};
  } catch (const ZeroResultant& e) {
    if (!opt.allow_fallback) throw;
    first_failure = e.what();
  } catch (const OrderEscalation& e) {
    if (!opt.allow_fallback) throw;
    first_failure = e.what();
  }
  std::vector<int> perm = ident;
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
    return pr.o[static_cast<std::size_t>(a)] < pr.o[static_cast<std::size_t>(b)];
  });
  const DPPESystem psys = permute(sys, perm);
  std::string second_failure;
  try {
    Perturbation phi = default_phi(psys);
    auto [D, A] = extract_lowest(dcres(perturb(psys, phi)));
    // Express the perturbation in the original equation order.
    Perturbation orig;
    orig.phi.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) orig.phi[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] = phi.phi[static_cast<std::size_t>(k)];
    return {D, unpermute(A, perm), std::move(orig), perm, true};
  } catch (const Error& e) {
    second_failure = e.what();
  }
  for (unsigned seed = 1; seed <= kWindowAttempts; ++seed) {
    Perturbation phi = window_phi(pr, seed);
    try {
      auto [D, A] = extract_lowest(dcres(perturb(sys, phi)));
      return {D, std::move(A), std::move(phi), ident, true};
    } catch (const ZeroResultant&) {
    }
  }
  throw ZeroResultant("default perturbation failed (" + first_failure + "); sorted perturbation failed (" + second_failure +
                      "); window perturbations gave a zero resultant");
}

/// The operator h_ij with H_i = sum_j h_ij(u_j).
inline OrePoly parameter_operator(const LinPoly& H, int j) {
  std::vector<FieldElem> c(static_cast<std::size_t>(std::max(H.ord(VarKind::U, j) + 1, 0)));
  for (const auto& [v, x] : H.terms())
    if (v.kind == VarKind::U && v.index == j) c[static_cast<std::size_t>(v.order)] = x;
  return OrePoly(std::move(c));
}

}  // namespace detail

/// Decide whether the implicit ideal has dimension n-1 and, if so, return its
/// implicit equation.
inline Decision run(const DPPESystem& sys, const RunOptions& opt = {}) {
  validate(sys);
  const int n = sys.n();
  Decision out;
  Certificate& cert = out.cert;
  cert.permutation.resize(static_cast<std::size_t>(n));
  std::iota(cert.permutation.begin(), cert.permutation.end(), 1);

  auto finish_implicit = [&](const LinPoly& A, int step) {
    out.implicit = true;
    out.A = normalize_lead(A);
    cert.step = step;
    return out;
  };

  // A coordinate free of parameters puts x_i - a_i in the ideal; the rest of
  // the system then decides the dimension by its operator rank.
  std::vector<int> constant_rows;
  for (int i = 1; i <= n; ++i)
    if (sys.H[static_cast<std::size_t>(i - 1)].is_zero()) constant_rows.push_back(i);
  if (!constant_rows.empty()) {
    cert.step = 1;
    if (constant_rows.size() > 1) return out;
    const int i0 = constant_rows.front();
    std::vector<std::vector<OrePoly>> rows;
    for (int i = 1; i <= n; ++i) {
      if (i == i0) continue;
      rows.emplace_back();
      for (int j = 1; j < n; ++j) rows.back().push_back(detail::parameter_operator(sys.H[static_cast<std::size_t>(i - 1)], j));
    }
    if (left_row_rank(std::move(rows)) < n - 1) return out;
    LinPoly A = LinPoly::term(xvar(i0), FieldElem(1));
    A.set_constant(-sys.a[static_cast<std::size_t>(i0 - 1)]);
    cert.content = OrePoly::one();
    try {
      const SystemProfile pr = profile(sys);
      cert.L = pr.L;
      cert.N = pr.N;
      cert.c_A = co_order(A, pr);
      cert.rank_S = rank(leading_matrix(sys, pr));
    } catch (const InvalidSystem&) {
    }
    return finish_implicit(A, 1);
  }

  const SystemProfile pr = profile(sys);
  cert.L = pr.L;
  cert.N = pr.N;
  cert.rank_S = rank(leading_matrix(sys, pr));

  if (cert.rank_S < n - 1) {
    cert.step = 2;
    return out;
  }

  if (pr.N == 0) {
    LinPoly A = dcres(sys, pr);
    cert.D_phi = 0;
    cert.A_D = A;
    auto cp = id_content_primitive(A, sys);
    cert.content = cp.content;
    cert.c_A = co_order(cp.primitive, pr);
    return finish_implicit(cp.primitive, 2);
  }

  detail::LowestSlice ls = detail::lowest_slice(sys, pr, opt);
  cert.D_phi = ls.D;
  cert.A_D = ls.A_D;
  cert.perturbation = ls.phi;
  cert.fallback_used = ls.fallback;
  for (int k = 0; k < n; ++k) cert.permutation[static_cast<std::size_t>(k)] = ls.perm[static_cast<std::size_t>(k)] + 1;

  auto cp = id_content_primitive(ls.A_D, sys);
  cert.content = cp.content;
  const int c = co_order(cp.primitive, pr);
  cert.c_A = c;

  if (ls.D == 0) return finish_implicit(cp.primitive, 5);
  if (ls.D == c) return finish_implicit(cp.primitive, 7);

  const int r = rank_ML1(sys, pr);
  cert.rank_ML1 = r;
  const int g0 = pr.L - r;
  if (g0 > c + 1) {
    cert.step = 9;
    return out;
  }
  if (g0 == c + 1) return finish_implicit(cp.primitive, 10);
  throw std::logic_error("L - rank(M_{L-1}) < c(A) + 1 contradicts the co-order bound");
}

}  // namespace dres
