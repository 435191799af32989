#pragma once

#include <random>
#include <string>
#include <vector>

#include "profile.hpp"

namespace dres {

struct Perturbation {
  std::vector<LinPoly> phi;
};

/// The default perturbation:
///   phi_i     = e_i u_{n-i-1}^{(o_i - gamma_{n-i-1})} + u_{n-i}   (i <= n-2)
///   phi_{n-1} = u_1
///   phi_n     = e_n u_{n-1}^{(o_n - gamma_{n-1})}
/// with e_i = 0 iff o_i = 0.  A term whose order would be negative is dropped.
inline Perturbation default_phi(const DPPESystem& sys, const SystemProfile& pr) {
  const int n = sys.n();
  auto eps_term = [&](int i, int j, LinPoly& into) {
    const int oi = pr.o[static_cast<std::size_t>(i - 1)];
    const int ord = oi - pr.gamma_j[static_cast<std::size_t>(j - 1)];
    if (oi != 0 && ord >= 0) into.add(uvar(j, ord), FieldElem(1));
  };
  Perturbation P;
  P.phi.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n - 2; ++i) {
    eps_term(i, n - i - 1, P.phi[static_cast<std::size_t>(i - 1)]);
    P.phi[static_cast<std::size_t>(i - 1)].add(uvar(n - i), FieldElem(1));
  }
  P.phi[static_cast<std::size_t>(n - 2)].add(uvar(1), FieldElem(1));
  eps_term(n, n - 1, P.phi[static_cast<std::size_t>(n - 1)]);
  return P;
}

inline Perturbation default_phi(const DPPESystem& sys) { return default_phi(sys, profile(sys)); }

/// phi_i = sum_j c_ij u_j^{(o_i - gamma_j)} over the leading window, with
/// c_ij drawn from {1, 2, 3} by a seeded generator.  Never changes o or gamma.
inline Perturbation window_phi(const SystemProfile& pr, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(1, 3);
  Perturbation P;
  P.phi.resize(static_cast<std::size_t>(pr.n));
  for (int i = 1; i <= pr.n; ++i)
    for (int j = 1; j < pr.n; ++j) {
      const int ord = pr.o[static_cast<std::size_t>(i - 1)] - pr.gamma_j[static_cast<std::size_t>(j - 1)];
      if (ord >= 0) P.phi[static_cast<std::size_t>(i - 1)].add(uvar(j, ord), FieldElem(coeff(rng)));
    }
  return P;
}

/// F_i^phi = F_i + p phi_i.  Throws OrderEscalation when the profile changes.
inline PerturbedSystem perturb(const DPPESystem& sys, const Perturbation& P) {
  const int n = sys.n();
  if (static_cast<int>(P.phi.size()) != n)
    throw InvalidSystem("perturbation has " + std::to_string(P.phi.size()) + " entries, expected " + std::to_string(n));
  PerturbedSystem out;
  out.field = sys.field;
  out.a = sys.a;
  const PertPoly p = pert_p();
  for (int i = 0; i < n; ++i) {
    const LinPoly& phi = P.phi[static_cast<std::size_t>(i)];
    if (!phi.is_homogeneous()) throw InvalidSystem("perturbation entry " + std::to_string(i + 1) + " has a constant term");
    for (const auto& [v, c] : phi.terms())
      if (v.kind != VarKind::U || v.index < 1 || v.index >= n)
        throw InvalidSystem("perturbation entry " + std::to_string(i + 1) + " uses a variable other than a parameter");
    PertLinPoly h = sys.H[static_cast<std::size_t>(i)].map_coeffs([](const FieldElem& c) { return to_pert(c); });
    h += phi.map_coeffs([&](const FieldElem& c) { return PertPoly(c) * p; });
    out.H.push_back(std::move(h));
  }
  const SystemProfile a = profile(sys), b = profile(out);
  if (a.o != b.o || a.gamma_j != b.gamma_j) throw OrderEscalation("perturbation changes the orders of the system");
  return out;
}

/// Reorder equations: equation k of the result is equation perm[k] of sys,
/// with x_{perm[k]} renamed to x_{k+1}.
inline DPPESystem permute(const DPPESystem& sys, const std::vector<int>& perm) {
  DPPESystem out;
  out.field = sys.field;
  for (int k : perm) {
    out.a.push_back(sys.a[static_cast<std::size_t>(k)]);
    out.H.push_back(sys.H[static_cast<std::size_t>(k)]);
  }
  return out;
}

}  // namespace dres
