#pragma once

#include <type_traits>

#include "field.hpp"

namespace dres {

/// Polynomial in the perturbation constant p with coefficients in K.
/// The derivation acts coefficient-wise since p is a constant.
using PertPoly = UPoly<FieldElem>;

inline PertPoly derive(const PertPoly& a) {
  std::vector<FieldElem> out;
  out.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) out.push_back(c.derive());
  return PertPoly(std::move(out));
}

/// Substitute p = 0.
inline FieldElem at_zero(const PertPoly& a) { return a.coeff(0); }

/// The polynomial p.
inline PertPoly pert_p() { return PertPoly::monomial(FieldElem(1), 1); }

template <typename R>
R lift(const FieldElem& c) {
  if constexpr (std::is_same_v<R, FieldElem>) {
    return c;
  } else {
    return R(c);
  }
}

template <typename R>
R ring_one() {
  if constexpr (std::is_same_v<R, PertPoly>) {
    return PertPoly(FieldElem(1));
  } else {
    return R(1);
  }
}

inline PertPoly to_pert(const FieldElem& c) { return PertPoly(c); }
inline PertPoly to_pert(const PertPoly& c) { return c; }

}  // namespace dres
