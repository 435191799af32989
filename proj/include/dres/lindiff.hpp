#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <utility>

#include "ore.hpp"
#include "pert.hpp"

namespace dres {

enum class VarKind : std::uint8_t { X, U };

/// The order-th derivative of x_index or u_index (indices are 1-based).
struct DerVar {
  VarKind kind = VarKind::X;
  int index = 1;
  int order = 0;

  DerVar derived(int e = 1) const { return {kind, index, order + e}; }
  bool same_variable(const DerVar& o) const { return kind == o.kind && index == o.index; }
  friend bool operator==(const DerVar&, const DerVar&) = default;
};

inline DerVar xvar(int i, int k = 0) { return {VarKind::X, i, k}; }
inline DerVar uvar(int j, int k = 0) { return {VarKind::U, j, k}; }

/// Ranking R*: every U-derivative is above every X-derivative.  U is ranked
/// orderly with u_1 < ... < u_{n-1}; X is ranked orderly with x_n < ... < x_1.
struct RankLess {
  static auto key(const DerVar& v) {
    const bool is_u = v.kind == VarKind::U;
    return std::make_tuple(is_u, v.order, is_u ? v.index : -v.index);
  }
  bool operator()(const DerVar& a, const DerVar& b) const { return key(a) < key(b); }
};

/// A linear differential polynomial sum c_v * v + constant with coefficients in R.
template <typename R>
class LinDiffPoly {
 public:
  using Terms = std::map<DerVar, R, RankLess>;

  LinDiffPoly() = default;
  explicit LinDiffPoly(R constant) : constant_(std::move(constant)) {}
  static LinDiffPoly term(DerVar v, R c) {
    LinDiffPoly p;
    p.add(v, std::move(c));
    return p;
  }

  /// Accumulate c into the coefficient of v.
  void add(const DerVar& v, const R& c) {
    if (is_zero_coeff(c)) return;
    auto it = terms_.find(v);
    if (it == terms_.end()) {
      terms_.emplace(v, c);
      return;
    }
    it->second = it->second + c;
    if (is_zero_coeff(it->second)) terms_.erase(it);
  }
  void add_constant(const R& c) { constant_ = constant_ + c; }
  void set_constant(R c) { constant_ = std::move(c); }

  const Terms& terms() const { return terms_; }
  const R& constant() const { return constant_; }
  R coeff(const DerVar& v) const {
    auto it = terms_.find(v);
    return it == terms_.end() ? R{} : it->second;
  }

  bool is_zero() const { return terms_.empty() && is_zero_coeff(constant_); }
  bool is_homogeneous() const { return is_zero_coeff(constant_); }
  bool has_kind(VarKind k) const {
    for (const auto& [v, c] : terms_)
      if (v.kind == k) return true;
    return false;
  }

  /// Highest derivative present w.r.t. R*.
  std::optional<DerVar> lead() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
  }

  /// Highest derivative order of the given variable, -1 if absent.
  int ord(VarKind kind, int index) const {
    int best = -1;
    for (const auto& [v, c] : terms_)
      if (v.kind == kind && v.index == index) best = std::max(best, v.order);
    return best;
  }

  LinDiffPoly& operator+=(const LinDiffPoly& o) {
    for (const auto& [v, c] : o.terms_) add(v, c);
    constant_ = constant_ + o.constant_;
    return *this;
  }
  LinDiffPoly& operator-=(const LinDiffPoly& o) {
    for (const auto& [v, c] : o.terms_) add(v, -c);
    constant_ = constant_ - o.constant_;
    return *this;
  }
  friend LinDiffPoly operator+(LinDiffPoly a, const LinDiffPoly& b) { return a += b; }
  friend LinDiffPoly operator-(LinDiffPoly a, const LinDiffPoly& b) { return a -= b; }
  friend LinDiffPoly operator-(const LinDiffPoly& a) {
    LinDiffPoly r;
    for (const auto& [v, c] : a.terms_) r.terms_.emplace(v, -c);
    r.constant_ = -a.constant_;
    return r;
  }

  /// Multiply every coefficient by s.
  template <typename S>
  LinDiffPoly scaled(const S& s) const {
    LinDiffPoly r;
    for (const auto& [v, c] : terms_) r.add(v, c * s);
    r.constant_ = constant_ * s;
    return r;
  }

  /// d(c*y_k) = c'*y_k + c*y_{k+1}; the constant term is differentiated in R.
  LinDiffPoly derivative() const {
    LinDiffPoly r;
    for (const auto& [v, c] : terms_) {
      r.add(v, derive(c));
      r.add(v.derived(), c);
    }
    r.constant_ = derive(constant_);
    return r;
  }

  /// Apply f to every coefficient (including the constant).
  template <typename F>
  auto map_coeffs(F&& f) const -> LinDiffPoly<decltype(f(std::declval<const R&>()))> {
    LinDiffPoly<decltype(f(std::declval<const R&>()))> r;
    for (const auto& [v, c] : terms_) r.add(v, f(c));
    r.set_constant(f(constant_));
    return r;
  }

  /// Rename variables; the map must be injective on the support.
  template <typename F>
  LinDiffPoly rename(F&& f) const {
    LinDiffPoly r;
    for (const auto& [v, c] : terms_) r.add(f(v), c);
    r.constant_ = constant_;
    return r;
  }

  friend bool operator==(const LinDiffPoly&, const LinDiffPoly&) = default;

 private:
  Terms terms_;
  R constant_{};
};

using LinPoly = LinDiffPoly<FieldElem>;
using PertLinPoly = LinDiffPoly<PertPoly>;

template <typename R>
int ord_in(const LinDiffPoly<R>& p, VarKind kind, int index) {
  return p.ord(kind, index);
}

/// L(P) = sum_k c_k d^k(P).
template <typename R>
LinDiffPoly<R> apply_op(const OrePoly& L, const LinDiffPoly<R>& P) {
  LinDiffPoly<R> acc, dk = P;
  for (int k = 0; k <= L.degree(); ++k) {
    const FieldElem& c = L.coeffs()[static_cast<std::size_t>(k)];
    if (!c.is_zero()) acc += dk.scaled(c);
    if (k < L.degree()) dk = dk.derivative();
  }
  return acc;
}

}  // namespace dres
