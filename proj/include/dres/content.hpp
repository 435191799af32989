#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "profile.hpp"

namespace dres {

/// c(B) = min_i (N - o_i - gamma - ord(B, x_i)).
inline int co_order(const LinPoly& B, const SystemProfile& pr) {
  if (B.is_zero()) throw ZeroPolynomial("co-order of the zero polynomial");
  int c = std::numeric_limits<int>::max();
  for (int i = 1; i <= pr.n; ++i)
    if (const int o = B.ord(VarKind::X, i); o >= 0) c = std::min(c, pr.top(i) - o);
  return c;
}

/// l(B): coefficient of x_{i, N - o_i - gamma - c(B)} in B for each i.
inline std::vector<FieldElem> leading_vector(const LinPoly& B, const SystemProfile& pr) {
  const int c = co_order(B, pr);
  std::vector<FieldElem> l;
  for (int i = 1; i <= pr.n; ++i) l.push_back(B.coeff(xvar(i, pr.top(i) - c)));
  return l;
}

struct ContentPrimitive {
  OrePoly content;
  LinPoly primitive;
  std::vector<OrePoly> primitive_ops;
};

/// Split B = sum_i content * L'_i (x_i - a_i) with content the monic gcld.
template <typename R>
ContentPrimitive id_content_primitive(const LinPoly& B, const SystemT<R>& sys) {
  if (B.is_zero()) throw ZeroPolynomial("content of the zero polynomial");
  Decomposition d = decompose(B, sys);
  if (!d.residual.is_zero()) throw NonRepresentable("polynomial is not a combination of the x_i - a_i");
  ContentPrimitive out;
  out.content = gcld(std::span<const OrePoly>(d.ops));
  for (const auto& op : d.ops) {
    auto [q, r] = left_divmod(op, out.content);
    if (!r.is_zero()) throw std::logic_error("gcld does not divide an operator");
    out.primitive_ops.push_back(std::move(q));
  }
  out.primitive = assemble(out.primitive_ops, sys);
  return out;
}

}  // namespace dres
