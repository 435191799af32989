#pragma once

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "field.hpp"

namespace dres {

/// A differential operator sum_k c_k d^k over K, with d c = c d + c'.
class OrePoly {
 public:
  OrePoly() = default;
  explicit OrePoly(FieldElem c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
  }
  explicit OrePoly(std::vector<FieldElem> coeffs) : c_(std::move(coeffs)) { trim(); }

  static OrePoly one() { return OrePoly(FieldElem(1)); }
  /// c d^k
  static OrePoly monomial(FieldElem c, int k) {
    if (c.is_zero()) return {};
    std::vector<FieldElem> v(static_cast<std::size_t>(k) + 1);
    v.back() = std::move(c);
    return OrePoly(std::move(v));
  }
  static OrePoly d(int k = 1) { return monomial(FieldElem(1), k); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<FieldElem>& coeffs() const { return c_; }
  FieldElem coeff(int k) const {
    if (k < 0 || k > degree()) return {};
    return c_[static_cast<std::size_t>(k)];
  }
  const FieldElem& lead() const { return c_.back(); }

  friend OrePoly operator+(const OrePoly& a, const OrePoly& b) {
    std::vector<FieldElem> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (k < a.c_.size()) out[k] += a.c_[k];
      if (k < b.c_.size()) out[k] += b.c_[k];
    }
    return OrePoly(std::move(out));
  }
  friend OrePoly operator-(const OrePoly& a) {
    OrePoly r = a;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend OrePoly operator-(const OrePoly& a, const OrePoly& b) { return a + (-b); }

  /// Left multiplication by a scalar, c * A.
  friend OrePoly operator*(const FieldElem& c, const OrePoly& a) {
    if (c.is_zero()) return {};
    OrePoly r = a;
    for (auto& x : r.c_) x = c * x;
    return r;
  }

  /// d * A.
  OrePoly left_d() const {
    std::vector<FieldElem> out(c_.size() + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) {
      out[k] += c_[k].derive();
      out[k + 1] += c_[k];
    }
    return OrePoly(std::move(out));
  }

  /// Product in K[d].
  friend OrePoly operator*(const OrePoly& a, const OrePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    OrePoly acc;
    OrePoly dk = b;  // d^k * b
    for (std::size_t k = 0; k < a.c_.size(); ++k) {
      if (!a.c_[k].is_zero()) acc = acc + a.c_[k] * dk;
      if (k + 1 < a.c_.size()) dk = dk.left_d();
    }
    return acc;
  }

  /// Apply the operator to a field element: sum_k c_k * d^k(f).
  FieldElem apply(const FieldElem& f) const {
    FieldElem acc, dk = f;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (dk.is_zero()) break;
      if (!c_[k].is_zero()) acc += c_[k] * dk;
      dk = dk.derive();
    }
    return acc;
  }

  /// A * (1/lc), so the leading coefficient becomes 1.  Right scaling keeps
  /// every left divisor of A.
  OrePoly monic() const {
    if (is_zero() || lead().is_one()) return *this;
    return *this * OrePoly(lead().inverse());
  }

  friend bool operator==(const OrePoly&, const OrePoly&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<FieldElem> c_;
};

/// Left Euclidean division: returns (q, r) with L = Lp*q + r and deg r < deg Lp.
inline std::pair<OrePoly, OrePoly> left_divmod(const OrePoly& L, const OrePoly& Lp) {
  if (Lp.is_zero()) throw DivisionByZeroOperator("left division by the zero operator");
  const int dp = Lp.degree();
  if (L.degree() < dp) return {OrePoly{}, L};
  std::vector<FieldElem> q(static_cast<std::size_t>(L.degree() - dp + 1));
  const FieldElem inv = Lp.lead().inverse();
  OrePoly r = L;
  // lc(Lp * c d^k) = lc(Lp) * c, so each step kills the current top term.
  while (!r.is_zero() && r.degree() >= dp) {
    const int k = r.degree() - dp;
    FieldElem c = r.lead() * inv;
    r = r - Lp * OrePoly::monomial(c, k);
    q[static_cast<std::size_t>(k)] += c;
  }
  return {OrePoly(std::move(q)), r};
}

/// Right Euclidean division: returns (q, r) with L = q*Lp + r and deg r < deg Lp.
inline std::pair<OrePoly, OrePoly> right_divmod(const OrePoly& L, const OrePoly& Lp) {
  if (Lp.is_zero()) throw DivisionByZeroOperator("right division by the zero operator");
  const int dp = Lp.degree();
  if (L.degree() < dp) return {OrePoly{}, L};
  const FieldElem inv = Lp.lead().inverse();
  OrePoly q, r = L;
  // lc(c d^k * Lp) = c * lc(Lp)
  while (!r.is_zero() && r.degree() >= dp) {
    OrePoly t = OrePoly::monomial(r.lead() * inv, r.degree() - dp);
    r = r - t * Lp;
    q = q + t;
  }
  return {q, r};
}

/// Rank of the left K[d]-module spanned by the rows of an operator matrix.
inline int left_row_rank(std::vector<std::vector<OrePoly>> rows) {
  const int m = static_cast<int>(rows.size());
  const int k = m == 0 ? 0 : static_cast<int>(rows[0].size());
  int rank = 0;
  for (int col = 0; col < k && rank < m; ++col) {
    for (;;) {
      int piv = -1;
      for (int r = rank; r < m; ++r) {
        const OrePoly& e = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
        if (!e.is_zero() && (piv < 0 || e.degree() < rows[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)].degree())) piv = r;
      }
      if (piv < 0) break;
      std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(piv)]);
      const auto& prow = rows[static_cast<std::size_t>(rank)];
      bool clean = true;
      for (int r = rank + 1; r < m; ++r) {
        auto& row = rows[static_cast<std::size_t>(r)];
        if (row[static_cast<std::size_t>(col)].is_zero()) continue;
        const OrePoly q = right_divmod(row[static_cast<std::size_t>(col)], prow[static_cast<std::size_t>(col)]).first;
        for (int c = col; c < k; ++c) row[static_cast<std::size_t>(c)] = row[static_cast<std::size_t>(c)] - q * prow[static_cast<std::size_t>(c)];
        if (!row[static_cast<std::size_t>(col)].is_zero()) clean = false;
      }
      if (clean) {
        ++rank;
        break;
      }
    }
  }
  return rank;
}

/// Monic greatest common left divisor of two operators, not both zero.
inline OrePoly gcld(OrePoly a, OrePoly b) {
  if (a.is_zero() && b.is_zero()) throw AllZeroOperators("gcld of zero operators");
  while (!b.is_zero()) {
    OrePoly r = left_divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// gcld(a, b, c, ...) = gcld(gcld(a, b), c, ...).
inline OrePoly gcld(std::span<const OrePoly> ops) {
  OrePoly g;
  bool any = false;
  for (const auto& op : ops) {
    if (op.is_zero()) continue;
    g = any ? gcld(g, op) : op.monic();
    any = true;
    if (g.degree() == 0) break;
  }
  if (!any) throw AllZeroOperators("gcld of zero operators");
  return g;
}

inline bool coprime(std::span<const OrePoly> ops) { return gcld(ops).degree() == 0; }

}  // namespace dres
