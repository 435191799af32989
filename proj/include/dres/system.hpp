#pragma once

#include <string>
#include <vector>

#include "lindiff.hpp"

namespace dres {

/// n linear equations F_i = x_i - a_i + H_i(U) in n-1 parameters.
/// R is FieldElem for an input system and PertPoly for a perturbed one.
template <typename R>
struct SystemT {
  FieldTag field = FieldTag::Q;
  std::vector<FieldElem> a;
  std::vector<LinDiffPoly<R>> H;

  int n() const { return static_cast<int>(H.size()); }
  int params() const { return n() - 1; }

  /// F_i for 1-based i.
  LinDiffPoly<R> F(int i) const {
    LinDiffPoly<R> f = H[static_cast<std::size_t>(i - 1)];
    f.add(xvar(i), lift<R>(FieldElem(1)));
    f.add_constant(lift<R>(-a[static_cast<std::size_t>(i - 1)]));
    return f;
  }
};

using DPPESystem = SystemT<FieldElem>;
using PerturbedSystem = SystemT<PertPoly>;

/// Throws InvalidSystem unless the structural requirements on a system hold.
template <typename R>
void validate(const SystemT<R>& sys) {
  const int n = sys.n();
  if (n < 2) throw InvalidSystem("a system needs at least two equations");
  if (static_cast<int>(sys.a.size()) != n) throw InvalidSystem("constant list and equation list differ in length");
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  bool any_nonzero = false;
  for (int i = 1; i <= n; ++i) {
    const auto& h = sys.H[static_cast<std::size_t>(i - 1)];
    if (!h.is_homogeneous()) throw InvalidSystem("H_" + std::to_string(i) + " has a constant term");
    for (const auto& [v, c] : h.terms()) {
      if (v.kind != VarKind::U) throw InvalidSystem("H_" + std::to_string(i) + " contains an x variable");
      if (v.index < 1 || v.index > n - 1)
        throw InvalidSystem("parameter index u" + std::to_string(v.index) + " out of range");
      if (v.order < 0) throw InvalidSystem("negative derivative order");
      used[static_cast<std::size_t>(v.index)] = true;
      any_nonzero = true;
    }
  }
  if (!any_nonzero) throw InvalidSystem("every right-hand side is constant");
  for (int j = 1; j <= n - 1; ++j)
    if (!used[static_cast<std::size_t>(j)]) throw InvalidSystem("parameter u" + std::to_string(j) + " does not occur");
}

/// Build the system of x_i = P_i(U): a_i is the constant of P_i and H_i = a_i - P_i.
inline DPPESystem from_parametrization(FieldTag field, const std::vector<LinPoly>& P) {
  DPPESystem sys;
  sys.field = field;
  for (const auto& p : P) {
    sys.a.push_back(p.constant());
    LinPoly h = -p;
    h.set_constant(FieldElem());
    sys.H.push_back(std::move(h));
  }
  return sys;
}

/// P_i(U) = a_i - H_i(U) for 1-based i.
inline LinPoly parametrization(const DPPESystem& sys, int i) {
  LinPoly p = -sys.H[static_cast<std::size_t>(i - 1)];
  p.set_constant(sys.a[static_cast<std::size_t>(i - 1)]);
  return p;
}

struct Decomposition {
  std::vector<OrePoly> ops;
  FieldElem residual;
};

/// Read A (free of U) as sum_i ops[i](x_i) + constant.  The residual
/// constant(A) + sum_i ops[i](a_i) vanishes exactly when A = sum_i ops[i](x_i - a_i).
template <typename R>
Decomposition decompose(const LinPoly& A, const SystemT<R>& sys) {
  if (A.has_kind(VarKind::U)) throw std::invalid_argument("decompose: polynomial contains parameters");
  const int n = sys.n();
  std::vector<std::vector<FieldElem>> coeffs(static_cast<std::size_t>(n));
  for (const auto& [v, c] : A.terms()) {
    if (v.index < 1 || v.index > n) throw std::invalid_argument("decompose: x index out of range");
    auto& row = coeffs[static_cast<std::size_t>(v.index - 1)];
    if (static_cast<int>(row.size()) <= v.order) row.resize(static_cast<std::size_t>(v.order) + 1);
    row[static_cast<std::size_t>(v.order)] = c;
  }
  Decomposition d;
  d.residual = A.constant();
  for (int i = 0; i < n; ++i) {
    d.ops.emplace_back(std::move(coeffs[static_cast<std::size_t>(i)]));
    d.residual += d.ops.back().apply(sys.a[static_cast<std::size_t>(i)]);
  }
  return d;
}

/// sum_i ops[i](x_i - a_i).
template <typename R>
LinPoly assemble(const std::vector<OrePoly>& ops, const SystemT<R>& sys) {
  LinPoly out;
  for (int i = 1; i <= sys.n(); ++i) {
    const auto& op = ops[static_cast<std::size_t>(i - 1)];
    for (int k = 0; k <= op.degree(); ++k) out.add(xvar(i, k), op.coeffs()[static_cast<std::size_t>(k)]);
    out.add_constant(-op.apply(sys.a[static_cast<std::size_t>(i - 1)]));
  }
  return out;
}

/// Replace every x_{ik} in A by d^k(P_i(U)).  For linear A the result is zero
/// exactly when A lies in the implicit ideal.
inline LinPoly substitute(const LinPoly& A, const DPPESystem& sys) {
  Decomposition d = decompose(A, sys);
  LinPoly out(A.constant());
  for (int i = 1; i <= sys.n(); ++i) out += apply_op(d.ops[static_cast<std::size_t>(i - 1)], parametrization(sys, i));
  return out;
}

}  // namespace dres
