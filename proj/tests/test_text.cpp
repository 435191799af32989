#include <gtest/gtest.h>

#include <dres/json_io.hpp>

#include "support.hpp"

using namespace dres;
using testutil::lin;
using testutil::load;

namespace {

template <typename E>
E catch_as(const std::string& doc) {
  try {
    parse_document(doc);
  } catch (const E& e) {
    return e;
  }
  ADD_FAILURE() << "no error for:\n" << doc;
  throw std::runtime_error("expected error");
}

}  // namespace

TEST(Parse, DerivativeNotations) {
  EXPECT_EQ(lin("u1''"), lin("u1^(2)"));
  EXPECT_EQ(lin("x3'''"), lin("x3^(3)"));
  EXPECT_EQ(lin("u2"), lin("u2^(0)"));
  EXPECT_EQ(lin("2*u1 - u1 + 0*u2'"), lin("u1"));
}

TEST(Parse, Coefficients) {
  EXPECT_EQ(parse_field_elem("(t^2 - 1)/(t - 1)"), parse_field_elem("t + 1"));
  EXPECT_EQ(parse_field_elem("-3/6"), FieldElem(Rat(-1, 2)));
  EXPECT_EQ(lin("(t+1)*u1 - u1"), lin("t*u1"));
  EXPECT_EQ(lin("u1/2 + 2^-1*u1"), lin("u1"));
}

TEST(Parse, OreProducts) {
  EXPECT_EQ(testutil::ore("d*t"), testutil::ore("t*d + 1"));
  EXPECT_EQ(testutil::ore("(d + 1)^2"), testutil::ore("d^2 + 2*d + 1"));
}

TEST(Parse, SyntaxErrorPosition) {
  auto e = catch_as<SyntaxError>("field: Q\nparams: u1\nx1 = u1 +* 2\nx2 = u1'\n");
  EXPECT_EQ(e.line, 3);
  EXPECT_EQ(e.column, 10);
  auto f = catch_as<SyntaxError>("field: Q\nparams: u1\nx1 = u1 $\nx2 = u1\n");
  EXPECT_EQ(f.line, 3);
  EXPECT_EQ(f.column, 9);
  auto g = catch_as<SyntaxError>("field: R\nparams: u1\nx1 = u1\nx2 = u1'\n");
  EXPECT_EQ(g.line, 1);
}

TEST(Parse, UnbalancedParenthesis) {
  auto e = catch_as<SyntaxError>("field: Q\nparams: u1\nx1 = (u1 + 2\nx2 = u1'\n");
  EXPECT_EQ(e.line, 3);
}

TEST(Parse, SemanticErrors) {
  catch_as<SemanticError>("field: Q\nparams: u1\nx1 = u1*u1'\nx2 = u1\n");
  catch_as<SemanticError>("field: Q\nparams: u1, u2\nx1 = u1\nx2 = u2'\n");
  catch_as<SemanticError>("field: Q\nparams: u1, u2\nx1 = u1\nx2 = u1'\nx3 = 4\n");
  catch_as<SemanticError>("field: Q\nparams: u1\nx1 = 2\nx2 = 3\n");
  catch_as<SemanticError>("field: Q\nparams: u1\nx1 = u2\nx2 = u1\n");
  catch_as<SemanticError>("field: Q\nparams: u1\nx1 = u1\nx1 = u1'\n");
  catch_as<SemanticError>("field: Q\nparams: u1\nx1 = t*u1\nx2 = u1'\n");
  catch_as<SemanticError>("field: Q\nparams: u1\nx1 = u1 + x2\nx2 = u1'\n");
  catch_as<SemanticError>("field: Q\nparams: u1\nx1 = u1\nx2 = u1'\nphi: u1\n");
  catch_as<SemanticError>("field: Q\nparams: u1\nx1 = u1/u1'\nx2 = u1\n");
}

TEST(Parse, CommentsAndBlankLines) {
  auto doc = parse_document("# header\n\nfield: Q\nparams: u1   # one\nx1 = u1 + 1\n\nx2 = u1'\n");
  EXPECT_EQ(doc.sys.n(), 2);
  EXPECT_EQ(doc.sys.a[0], FieldElem(1));
  EXPECT_EQ(parametrization(doc.sys, 2), lin("u1'"));
}

TEST(Parse, DocumentPerturbation) {
  auto doc = load("example1.dppe");
  ASSERT_TRUE(doc.phi);
  EXPECT_EQ(doc.phi->phi[0], lin("u1'' + u2"));
  EXPECT_EQ(doc.params, (std::vector<std::string>{"u1", "u2"}));
}

TEST(Render, RoundTrip) {
  for (const char* name : {"example1.dppe", "example2.dppe", "example3.dppe"}) {
    auto doc = load(name);
    auto again = parse_document(render_document(doc.sys, doc.phi));
    EXPECT_EQ(again.sys.H, doc.sys.H) << name;
    EXPECT_EQ(again.sys.a, doc.sys.a) << name;
    EXPECT_EQ(again.sys.field, doc.sys.field) << name;
  }
}

TEST(Render, RandomRoundTrip) {
  std::mt19937 rng(71);
  for (int it = 0; it < 50; ++it) {
    auto sys = testutil::random_system(rng, 2 + it % 3, 3);
    auto again = parse_document(render_document(sys));
    EXPECT_EQ(again.sys.H, sys.H);
    EXPECT_EQ(again.sys.a, sys.a);
  }
}

TEST(Render, Strings) {
  EXPECT_EQ(to_string(lin("x1 - 2*x2' + 3")), "-2*x2' + x1 + 3");
  EXPECT_EQ(to_string(testutil::ore("t*d^2 + 1")), "1 + (t)*d^2");
  EXPECT_EQ(to_string(FieldElem(Rat(-3, 4))), "-3/4");
  EXPECT_EQ(to_string(LinPoly{}), "0");
}

TEST(Json, DecisionShape) {
  auto j = to_json(run(load("example1.dppe").sys));
  EXPECT_EQ(j["decision"], "implicit");
  EXPECT_TRUE(j["implicit_equation"]["terms"].is_array());
  EXPECT_EQ(j["certificate"]["D_phi"], 1);
  EXPECT_EQ(j["certificate"]["L"], 13);
  EXPECT_EQ(j["certificate"]["permutation"], nlohmann::json::array({1, 2, 3}));
  auto k = to_json(run(from_parametrization(FieldTag::Q, {lin("u1 + u2"), lin("2*u1 + 2*u2"), lin("u1 + u2 - 3")})));
  EXPECT_EQ(k["decision"], "lower_dim");
  EXPECT_TRUE(k["implicit_equation"].is_null());
  EXPECT_EQ(k["certificate"]["step"], 2);
}
