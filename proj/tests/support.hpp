#pragma once

#include <dres/dres.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace testutil {

using namespace dres;

inline Document load(const std::string& name) {
  std::ifstream in(std::string(DRES_SAMPLES) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

inline LinPoly lin(const std::string& s) { return parse_linpoly(s); }
inline OrePoly ore(const std::string& s) { return parse_ore(s); }

/// Random element of Q (or Q(t) when with_t) with small coefficients.
inline FieldElem random_elem(std::mt19937& rng, bool with_t, int bound = 3) {
  std::uniform_int_distribution<int> c(-bound, bound);
  if (!with_t) {
    Rat q(c(rng), std::uniform_int_distribution<int>(1, 3)(rng));
    q.canonicalize();
    return FieldElem(q);
  }
  auto poly = [&](int deg) {
    std::vector<Rat> v;
    for (int k = 0; k <= deg; ++k) v.push_back(Rat(c(rng)));
    return QPoly(v);
  };
  QPoly num = poly(std::uniform_int_distribution<int>(0, 2)(rng));
  QPoly den = poly(std::uniform_int_distribution<int>(0, 1)(rng));
  if (den.is_zero()) den = QPoly(Rat(1));
  return FieldElem::fraction(num, den);
}

inline FieldElem random_nonzero(std::mt19937& rng, bool with_t) {
  for (;;) {
    FieldElem f = random_elem(rng, with_t);
    if (!f.is_zero()) return f;
  }
}

inline OrePoly random_ore(std::mt19937& rng, bool with_t, int max_deg) {
  int deg = std::uniform_int_distribution<int>(0, max_deg)(rng);
  std::vector<FieldElem> c;
  for (int k = 0; k < deg; ++k) c.push_back(random_elem(rng, with_t));
  c.push_back(random_nonzero(rng, with_t));
  return OrePoly(c);
}

/// Random valid system over Q: n equations, integer coefficients in
/// [-bound, bound], derivative orders <= max_order.
inline DPPESystem random_system(std::mt19937& rng, int n, int max_order, int bound = 2, double density = 0.5) {
  std::uniform_int_distribution<int> c(-bound, bound);
  std::uniform_real_distribution<double> coin(0, 1);
  for (;;) {
    DPPESystem sys;
    sys.field = FieldTag::Q;
    for (int i = 0; i < n; ++i) {
      sys.a.push_back(FieldElem(coin(rng) < 0.5 ? 0 : c(rng)));
      LinPoly h;
      for (int j = 1; j < n; ++j)
        for (int k = 0; k <= max_order; ++k)
          if (coin(rng) < density) h.add(uvar(j, k), FieldElem(c(rng)));
      sys.H.push_back(h);
    }
    try {
      validate(sys);
      profile(sys);
      return sys;
    } catch (const InvalidSystem&) {
    }
  }
}

/// Determinant by the permutation expansion.
template <typename R>
R leibniz_det(const Matrix<R>& m) {
  const int n = m.rows();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  R total{};
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    R prod = ring_one<R>();
    for (int i = 0; i < n && !is_zero_coeff(prod); ++i) prod = prod * m(i, perm[static_cast<std::size_t>(i)]);
    total = inversions % 2 ? R(total - prod) : R(total + prod);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// True when a = s * b for some nonzero scalar s.
inline bool proportional(const LinPoly& a, const LinPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  auto va = a.lead(), vb = b.lead();
  if (va != vb) return false;
  if (!va) return true;
  const FieldElem s = a.coeff(*va) / b.coeff(*vb);
  return a == b.scaled(s);
}

inline bool proportional(const PertPoly& a, const PertPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.degree() != b.degree()) return false;
  return a == b.scaled(a.lead() / b.lead());
}

}  // namespace testutil
