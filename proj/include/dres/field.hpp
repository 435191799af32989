#pragma once

#include <string>
#include <utility>
#include <variant>

#include "upoly.hpp"

namespace dres {

/// Polynomials in t over Q.
using QPoly = UPoly<Rat>;

/// Which differential field the coefficients live in.
enum class FieldTag { Q, Qt };

/// An element of Q(t) with derivation d/dt.
///
/// Canonical form: a plain rational when the value is constant, otherwise a
/// reduced fraction num/den with den monic.  Two equal values are therefore
/// structurally equal.
class FieldElem {
 public:
  struct RatFunc {
    QPoly num;
    QPoly den;
    friend bool operator==(const RatFunc&, const RatFunc&) = default;
  };

  FieldElem() : v_(Rat(0)) {}
  FieldElem(int v) : v_(Rat(v)) {}     // NOLINT(google-explicit-constructor)
  FieldElem(long v) : v_(Rat(v)) {}    // NOLINT(google-explicit-constructor)
  FieldElem(Rat q) : v_(std::move(q)) {}  // NOLINT(google-explicit-constructor); q must be canonical
  explicit FieldElem(const QPoly& poly) { *this = fraction(poly, QPoly(Rat(1))); }

  static FieldElem t() { return FieldElem(QPoly(std::vector<Rat>{Rat(0), Rat(1)})); }

  /// num/den reduced to canonical form.
  static FieldElem fraction(QPoly num, QPoly den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num.is_zero()) return FieldElem();
    if (den.degree() > 0) {
      QPoly g = gcd(num, den);
      if (g.degree() > 0) {
        num = divexact(num, g);
        den = divexact(den, g);
      }
    }
    Rat lc = den.lead();
    if (lc != 1) {
      Rat inv = 1 / lc;
      num = num.scaled(inv);
      den = den.scaled(inv);
    }
    return from_reduced(std::move(num), std::move(den));
  }

  bool is_zero() const {
    auto* q = std::get_if<Rat>(&v_);
    return q != nullptr && sgn(*q) == 0;
  }
  bool is_one() const {
    auto* q = std::get_if<Rat>(&v_);
    return q != nullptr && *q == 1;
  }
  bool is_const() const { return std::holds_alternative<Rat>(v_); }
  bool is_polynomial() const { return is_const() || std::get<RatFunc>(v_).den.degree() == 0; }

  /// Only valid when is_const().
  const Rat& rational() const { return std::get<Rat>(v_); }

  QPoly numerator() const {
    if (auto* q = std::get_if<Rat>(&v_)) return QPoly(*q);
    return std::get<RatFunc>(v_).num;
  }
  QPoly denominator() const {
    if (is_const()) return QPoly(Rat(1));
    return std::get<RatFunc>(v_).den;
  }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    if (a.is_const() && b.is_const()) return FieldElem(Rat(a.rational() + b.rational()));
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    QPoly ad = a.denominator(), bd = b.denominator();
    if (ad == bd) {
      QPoly num = a.numerator() + b.numerator();
      if (ad.degree() == 0) return from_reduced(std::move(num), std::move(ad));
      return fraction(std::move(num), std::move(ad));
    }
    return fraction(a.numerator() * bd + b.numerator() * ad, ad * bd);
  }
  friend FieldElem operator-(const FieldElem& a) {
    if (a.is_const()) return FieldElem(Rat(-a.rational()));
    const auto& f = std::get<RatFunc>(a.v_);
    return from_reduced(-f.num, f.den);
  }
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

  friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    if (a.is_const() && b.is_const()) return FieldElem(Rat(a.rational() * b.rational()));
    if (a.is_zero() || b.is_zero()) return FieldElem();
    if (a.is_const()) return b.scaled(a.rational());
    if (b.is_const()) return a.scaled(b.rational());
    const auto& fa = std::get<RatFunc>(a.v_);
    const auto& fb = std::get<RatFunc>(b.v_);
    if (fa.den.degree() == 0 && fb.den.degree() == 0)
      return from_reduced(fa.num * fb.num, QPoly(Rat(1)));
    // Cross-cancel so the product is already reduced.
    QPoly g1 = gcd(fa.num, fb.den), g2 = gcd(fb.num, fa.den);
    QPoly n1 = divexact(fa.num, g1), d2 = divexact(fb.den, g1);
    QPoly n2 = divexact(fb.num, g2), d1 = divexact(fa.den, g2);
    return normalize_lead(n1 * n2, d1 * d2);
  }

  FieldElem inverse() const {
    if (is_zero()) throw DivisionByZero("division by zero in field");
    if (is_const()) return FieldElem(Rat(1 / rational()));
    const auto& f = std::get<RatFunc>(v_);
    return normalize_lead(f.den, f.num);
  }

  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    if (b.is_zero()) throw DivisionByZero("division by zero in field");
    if (a.is_const() && b.is_const()) return FieldElem(Rat(a.rational() / b.rational()));
    return a * b.inverse();
  }

  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }

  /// d/dt.
  FieldElem derive() const {
    if (is_const()) return FieldElem();
    const auto& f = std::get<RatFunc>(v_);
    if (f.den.degree() == 0) return from_reduced(formal_derivative(f.num), f.den);
    return fraction(formal_derivative(f.num) * f.den - f.num * formal_derivative(f.den),
                    f.den * f.den);
  }

  friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.v_ == b.v_; }

 private:
  FieldElem scaled(const Rat& s) const {
    const auto& f = std::get<RatFunc>(v_);
    return from_reduced(f.num.scaled(s), f.den);
  }

  // num/den coprime, den nonzero; only the leading coefficient of den needs fixing.
  static FieldElem normalize_lead(QPoly num, QPoly den) {
    Rat lc = den.lead();
    if (lc != 1) {
      Rat inv = 1 / lc;
      num = num.scaled(inv);
      den = den.scaled(inv);
    }
    return from_reduced(std::move(num), std::move(den));
  }

  // num/den coprime with den monic.
  static FieldElem from_reduced(QPoly num, QPoly den) {
    FieldElem r;
    if (den.degree() == 0 && num.degree() <= 0) {
      r.v_ = num.coeff(0);
    } else {
      r.v_ = RatFunc{std::move(num), std::move(den)};
    }
    return r;
  }

  std::variant<Rat, RatFunc> v_;
};

inline bool is_zero_coeff(const FieldElem& f) { return f.is_zero(); }
inline FieldElem derive(const FieldElem& f) { return f.derive(); }

template <typename T>
inline constexpr bool is_field_v = false;
template <>
inline constexpr bool is_field_v<Rat> = true;
template <>
inline constexpr bool is_field_v<FieldElem> = true;

}  // namespace dres
