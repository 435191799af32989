#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace dres {

using Rat = mpq_class;

inline bool is_zero_coeff(const Rat& q) { return sgn(q) == 0; }

// Dense univariate polynomial; coefficient k multiplies x^k.  The coefficient
// type must be a commutative ring with value semantics.  Division routines
// additionally require a field.
template <typename T>
class UPoly {
 public:
  using coeff_type = T;

  UPoly() = default;
  explicit UPoly(T c) {
    if (!is_zero_coeff(c)) c_.push_back(std::move(c));
  }
  explicit UPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly monomial(T c, int k) {
    if (is_zero_coeff(c)) return {};
    std::vector<T> v(static_cast<std::size_t>(k) + 1);
    v[static_cast<std::size_t>(k)] = std::move(c);
    UPoly r;
    r.c_ = std::move(v);
    return r;
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  /// Lowest exponent carrying a nonzero coefficient, -1 for zero.
  int low_degree() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (!is_zero_coeff(c_[k])) return static_cast<int>(k);
    return -1;
  }

  const std::vector<T>& coeffs() const { return c_; }
  T coeff(int k) const {
    if (k < 0 || k > degree()) return T{};
    return c_[static_cast<std::size_t>(k)];
  }
  const T& lead() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(UPoly a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero_coeff(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (is_zero_coeff(b.c_[j])) continue;
        out[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return UPoly(std::move(out));
  }
  friend UPoly operator*(const T& s, const UPoly& a) { return a.scaled(s); }
  friend UPoly operator*(const UPoly& a, const T& s) { return a.scaled(s); }

  UPoly scaled(const T& s) const {
    if (is_zero_coeff(s)) return {};
    UPoly r = *this;
    for (auto& c : r.c_) c = c * s;
    r.trim();
    return r;
  }

  /// Multiply by x^k.
  UPoly shifted(int k) const {
    if (is_zero()) return {};
    UPoly r;
    r.c_.assign(static_cast<std::size_t>(k), T{});
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && is_zero_coeff(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

template <typename T>
bool is_zero_coeff(const UPoly<T>& p) {
  return p.is_zero();
}

/// Euclidean division a = q*b + r over a coefficient field.
template <typename T>
std::pair<UPoly<T>, UPoly<T>> divmod(const UPoly<T>& a, const UPoly<T>& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly<T>{}, a};
  std::vector<T> rem = a.coeffs();
  std::vector<T> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const T inv = T(1) / b.lead();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    T& top = rem[static_cast<std::size_t>(k + db)];
    if (is_zero_coeff(top)) continue;
    T c = top * inv;
    for (int j = 0; j < db; ++j) {
      if (!is_zero_coeff(bc[static_cast<std::size_t>(j)]))
        rem[static_cast<std::size_t>(k + j)] -= c * bc[static_cast<std::size_t>(j)];
    }
    top = T{};
    quo[static_cast<std::size_t>(k)] = std::move(c);
  }
  return {UPoly<T>(std::move(quo)), UPoly<T>(std::move(rem))};
}

template <typename T>
UPoly<T> divexact(const UPoly<T>& a, const UPoly<T>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("divexact: nonzero remainder");
  return q;
}

template <typename T>
UPoly<T> monic(const UPoly<T>& a) {
  if (a.is_zero()) return a;
  return a.scaled(T(1) / a.lead());
}

/// Monic gcd over a coefficient field; gcd(0, 0) = 0.
template <typename T>
UPoly<T> gcd(UPoly<T> a, UPoly<T> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

/// Formal derivative with respect to the polynomial variable.
template <typename T>
UPoly<T> formal_derivative(const UPoly<T>& a) {
  if (a.degree() < 1) return {};
  std::vector<T> out(static_cast<std::size_t>(a.degree()));
  for (int k = 1; k <= a.degree(); ++k)
    out[static_cast<std::size_t>(k - 1)] = a.coeffs()[static_cast<std::size_t>(k)] * T(k);
  return UPoly<T>(std::move(out));
}

template <typename T>
T evaluate(const UPoly<T>& a, const T& x) {
  T acc{};
  for (int k = a.degree(); k >= 0; --k) acc = acc * x + a.coeffs()[static_cast<std::size_t>(k)];
  return acc;
}

}  // namespace dres
