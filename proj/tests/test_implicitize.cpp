#include <gtest/gtest.h>

#include "support.hpp"

using namespace dres;
using testutil::lin;
using testutil::load;
using testutil::proportional;

namespace {

const char* kFirstPrinted = "x1'' - x2 - 2*x2' - 2*x2'' + x3^(3) + x3'' + x3' + x3";
const char* kSecondPrinted = "8*x1' + 9*x1'' - 9*x1 + 2*x2 - 6*x3 + 9*x3' + 9*x4'' - 5*x4";

RunOptions with(const Perturbation& phi) {
  RunOptions o;
  o.perturbation = phi;
  return o;
}

}  // namespace

TEST(ExtractLowest, PicksSmallestDegree) {
  PertLinPoly dc;
  dc.add(xvar(1), PertPoly::monomial(FieldElem(2), 2));
  dc.add(xvar(2), PertPoly::monomial(FieldElem(5), 3) + PertPoly::monomial(FieldElem(-1), 2));
  dc.add(xvar(3), PertPoly::monomial(FieldElem(7), 4));
  auto [D, A] = extract_lowest(dc);
  EXPECT_EQ(D, 2);
  EXPECT_EQ(A, lin("2*x1 - x2"));
}

TEST(ExtractLowest, ConstantTermCounts) {
  PertLinPoly dc;
  dc.add(xvar(1), PertPoly::monomial(FieldElem(1), 3));
  dc.set_constant(PertPoly::monomial(FieldElem(4), 1));
  auto [D, A] = extract_lowest(dc);
  EXPECT_EQ(D, 1);
  EXPECT_EQ(A, lin("4"));
}

TEST(ExtractLowest, ZeroThrows) { EXPECT_THROW(extract_lowest(PertLinPoly{}), ZeroResultant); }

TEST(Run, FirstSystem) {
  auto doc = load("example1.dppe");
  auto d = run(doc.sys, with(*doc.phi));
  EXPECT_TRUE(d.implicit);
  EXPECT_EQ(d.cert.step, 7);
  EXPECT_EQ(d.cert.rank_S, 2);
  EXPECT_EQ(d.cert.D_phi, 1);
  EXPECT_EQ(d.cert.c_A, 1);
  EXPECT_EQ(d.cert.L, 13);
  EXPECT_EQ(d.cert.content, testutil::ore("d + 1"));
  EXPECT_EQ(d.A, lin(kFirstPrinted));
  EXPECT_TRUE(substitute(d.A, doc.sys).is_zero());
  EXPECT_FALSE(d.cert.fallback_used);
}

TEST(Run, FirstSystemDefaultMatchesDocumentPhi) {
  auto doc = load("example1.dppe");
  auto a = run(doc.sys);
  EXPECT_EQ(a.A, run(doc.sys, with(*doc.phi)).A);
  EXPECT_EQ(a.cert.perturbation.phi, doc.phi->phi);
}

TEST(Run, FirstSystemAlternatePerturbation) {
  auto doc = load("example1.dppe");
  auto psi = load("example1_psi.dppe");
  auto d = run(psi.sys, with(*psi.phi));
  EXPECT_TRUE(d.implicit);
  EXPECT_EQ(d.cert.D_phi, 2);
  EXPECT_EQ(d.cert.step, 10);
  EXPECT_EQ(d.cert.A_D, run(doc.sys, with(*doc.phi)).cert.A_D);
  EXPECT_EQ(d.A, lin(kFirstPrinted));
}

TEST(Run, SecondSystem) {
  auto doc = load("example2.dppe");
  auto d = run(doc.sys, with(*doc.phi));
  EXPECT_TRUE(d.implicit);
  EXPECT_EQ(d.cert.rank_S, 3);
  EXPECT_EQ(d.cert.D_phi, 3);
  EXPECT_EQ(d.cert.c_A, 2);
  EXPECT_EQ(d.cert.L - *d.cert.rank_ML1, 3);
  EXPECT_EQ(d.cert.step, 10);
  EXPECT_EQ(d.cert.content, testutil::ore("d^2"));
  EXPECT_TRUE(proportional(d.A, lin(kSecondPrinted)));
  EXPECT_TRUE(proportional(d.cert.A_D, lin("972*x1'' - 864*x1^(3) - 972*x1^(4) - 216*x2'' + 648*x3'' - 972*x3^(3) + 540*x4'' - 972*x4^(4)")));
}

TEST(Run, ThirdSystemHasCommonLeftFactor) {
  auto doc = load("example3.dppe");
  auto d = run(doc.sys);
  EXPECT_TRUE(d.implicit);
  EXPECT_EQ(d.cert.step, 7);
  EXPECT_EQ(d.cert.D_phi, 1);
  EXPECT_EQ(d.cert.c_A, 1);
  EXPECT_EQ(d.cert.content.degree(), 1);
  EXPECT_TRUE(substitute(d.cert.A_D, doc.sys).is_zero());
  EXPECT_TRUE(substitute(d.A, doc.sys).is_zero());
  auto cs = charset(doc.sys);
  ASSERT_EQ(cs.A0.size(), 1u);
  EXPECT_TRUE(proportional(cs.A0[0], d.A));
}

TEST(Run, ThirdSystemPerturbationsAgree) {
  auto sys = load("example3.dppe").sys;
  auto a = run(sys, with(Perturbation{{lin("u1'' + u2"), lin("u1"), lin("u2'")}}));
  auto b = run(sys, with(Perturbation{{lin("u2'' + u1"), lin("u2"), lin("u1'")}}));
  EXPECT_TRUE(a.implicit);
  EXPECT_TRUE(b.implicit);
  EXPECT_TRUE(proportional(a.A, b.A));
}

TEST(Run, RankDeficient) {
  auto sys = from_parametrization(FieldTag::Q, {lin("u1 + u2"), lin("2*u1 + 2*u2"), lin("u1 + u2 - 3")});
  auto d = run(sys);
  EXPECT_FALSE(d.implicit);
  EXPECT_EQ(d.cert.step, 2);
  EXPECT_EQ(d.cert.rank_S, 1);
  EXPECT_EQ(d.cert.D_phi, -1);
}

TEST(Run, OrderZeroSystem) {
  auto sys = from_parametrization(FieldTag::Q, {lin("u1 + 2*u2 + 1"), lin("-u1 + u2"), lin("3*u2 - 2")});
  auto d = run(sys);
  EXPECT_TRUE(d.implicit);
  EXPECT_EQ(d.cert.step, 2);
  EXPECT_EQ(d.cert.N, 0);
  EXPECT_TRUE(proportional(d.A, dcres(sys)));
  EXPECT_TRUE(substitute(d.A, sys).is_zero());
}

TEST(Run, OutputIsNormalized) {
  auto d = run(load("example2.dppe").sys);
  ASSERT_TRUE(d.A.lead());
  EXPECT_EQ(d.A.coeff(*d.A.lead()), FieldElem(1));
}

TEST(Run, RandomCertificates) {
  std::mt19937 rng(51);
  for (int it = 0; it < 60; ++it) {
    auto sys = testutil::random_system(rng, 2 + it % 2, 2);
    Decision d;
    try {
      d = run(sys);
    } catch (const ZeroResultant&) {
      continue;
    }
    const auto& c = d.cert;
    if (c.step <= 2) continue;
    EXPECT_TRUE(substitute(c.A_D, sys).is_zero());
    EXPECT_GE(c.D_phi, 0);
    EXPECT_GE(*c.c_A, 0);
    EXPECT_LE(*c.c_A, c.D_phi);
    if (c.rank_ML1) EXPECT_LE(c.L - *c.rank_ML1 - 1, c.D_phi);
    if (d.implicit) EXPECT_TRUE(substitute(d.A, sys).is_zero());
  }
}

TEST(Run, FallbackReordersEquations) {
  // Found by search: the default perturbation escalates the order of this system.
  std::mt19937 rng(52);
  int seen = 0;
  for (int it = 0; it < 400 && seen < 5; ++it) {
    auto sys = testutil::random_system(rng, 3, 2);
    RunOptions strict;
    strict.allow_fallback = false;
    try {
      run(sys, strict);
      continue;
    } catch (const OrderEscalation&) {
    } catch (const ZeroResultant&) {
    }
    Decision d;
    try {
      d = run(sys);
    } catch (const ZeroResultant&) {
      continue;
    }
    ++seen;
    EXPECT_TRUE(d.cert.fallback_used);
    EXPECT_TRUE(substitute(d.cert.A_D, sys).is_zero());
  }
  EXPECT_GT(seen, 0);
}

TEST(Run, ConstantEquation) {
  auto sys = from_parametrization(FieldTag::Q, {lin("u1' + u2"), lin("u2'' - u1"), lin("5")});
  auto d = run(sys);
  EXPECT_TRUE(d.implicit);
  EXPECT_EQ(d.cert.step, 1);
  EXPECT_TRUE(proportional(d.A, lin("x3 - 5")));
  auto e = run(from_parametrization(FieldTag::Q, {lin("u1' + u2"), lin("2"), lin("5")}));
  EXPECT_FALSE(e.implicit);
  EXPECT_EQ(e.cert.step, 1);
  auto f = run(from_parametrization(FieldTag::Q, {lin("u1' + u2"), lin("2*u1'' + 2*u2'"), lin("5")}));
  EXPECT_FALSE(f.implicit);
  EXPECT_EQ(f.cert.step, 1);
}
