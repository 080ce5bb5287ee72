// Copyright 2026 The parascad Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>

#include "parascad/expr.h"
#include "parascad/lang.h"
#include "support/oracles.h"

namespace parascad {
namespace {

using testing::agrees_with_affine;

ExprPtr p(std::string_view text) { return parse_expression(text); }

std::string simplified(std::string_view text) { return render_expr(*simplify(p(text))); }

TEST(LinearForm, ExpandsMixedSum) {
  auto f = to_linear_form(*p("3 + 2*var1 - var2"));
  ASSERT_TRUE(f);
  EXPECT_TRUE(f->approx_equal(LinearForm({{"var1", 2}, {"var2", -1}}, 3)));
  EXPECT_TRUE(agrees_with_affine(*p("3 + 2*var1 - var2"), {{"var1", 2}, {"var2", -1}}, 3, {}));
}

TEST(LinearForm, RejectsProducts) {
  EXPECT_FALSE(to_linear_form(*p("size_x*i")));
  EXPECT_FALSE(to_linear_form(*p("x / y")));
  EXPECT_FALSE(to_linear_form(*p("sin(x)")));
  EXPECT_FALSE(to_linear_form(*p("x > 3 ? 1 : 2")));
}

TEST(LinearForm, ConstantOffset) {
  auto f = to_linear_form(*p("size_z + 3"));
  ASSERT_TRUE(f);
  EXPECT_TRUE(f->approx_equal(LinearForm({{"size_z", 1}}, 3)));
}

TEST(LinearForm, DistributesAndCancels) {
  auto f = to_linear_form(*p("2*(a - b) + 2*b - (a + 1)/2"));
  ASSERT_TRUE(f);
  EXPECT_TRUE(f->approx_equal(LinearForm({{"a", 1.5}}, -0.5)));
  EXPECT_EQ(f->coefficients().count("b"), 0u);
}

TEST(LinearForm, CancelledProductIsStillLinear) {
  auto f = to_linear_form(*p("x*y - y*x + x"));
  ASSERT_TRUE(f);
  EXPECT_TRUE(f->approx_equal(LinearForm::of_variable("x")));
}

TEST(LinearForm, VectorIndexingOfLiteral) {
  auto f = to_linear_form(*p("[a, b + 1, c][1]"));
  ASSERT_TRUE(f);
  EXPECT_TRUE(f->approx_equal(LinearForm({{"b", 1}}, 1)));
}

TEST(Render, CanonicalForms) {
  EXPECT_EQ(render_expr(LinearForm({{"h_stem", 1}, {"thickness", 1}}, 0)), "h_stem + thickness");
  EXPECT_EQ(render_expr(LinearForm({{"width", -0.5}}, 0)), "-width/2");
  EXPECT_EQ(render_expr(LinearForm()), "0");
  EXPECT_EQ(render_expr(LinearForm({{"a", 2}, {"b", -3}}, -1.5)), "2*a - 3*b - 1.5");
  EXPECT_EQ(render_expr(LinearForm({{"r_sphere", -1}, {"r_top", 1}}, 0)), "r_top - r_sphere");
  EXPECT_EQ(render_expr(LinearForm({{"x", 0.3}}, 0)), "0.3*x");
}

TEST(Render, NumberFormatting) {
  EXPECT_EQ(format_number(3), "3");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_DOUBLE_EQ(std::stod(format_number(1.0 / 3.0)), 1.0 / 3.0);
  EXPECT_EQ(format_number(1e20), "1e+20");
}

TEST(Render, ReparsesToSameTree) {
  for (const char* text : {"a + b*c", "(a + b)*c", "-x*x", "a - (b - c)", "a ? b : c ? d : e",
                           "!(a && b) || c", "f[1][2]", "[1, [2, 3]]", "min(a, b)/2",
                           "-(-a)", "a % b * c", "2/3/4"}) {
    ExprPtr e = p(text);
    ExprPtr back = p(render_expr(*e));
    EXPECT_TRUE(structurally_equal(*e, *back)) << text << " -> " << render_expr(*e);
  }
}

TEST(Simplify, ExamplesFromTheModel) {
  EXPECT_EQ(simplified("tz + 0"), "tz");
  EXPECT_EQ(simplified("size_cube_a/2 + size_cube_b/2"), "size_cube_a/2 + size_cube_b/2");
  EXPECT_EQ(simplified("thickness + h_stem + 0"), "h_stem + thickness");
}

TEST(Simplify, NonlinearIdentities) {
  EXPECT_EQ(simplified("sin(x) * 1"), "sin(x)");
  EXPECT_EQ(simplified("sin(x) * 0"), "0");
  EXPECT_EQ(simplified("-(-sin(x))"), "sin(x)");
  EXPECT_EQ(simplified("x*y + (2 + 3)"), render_expr(*simplify(p("x*y + 5"))));
}

TEST(Simplify, PreservesValueOnRandomEnvironments) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-20, 20);
  for (const char* text : {"thickness + h_stem + 0", "2*(a - b) + 2*b", "a*b + b*a - a",
                           "abs(a - 1) + 0*b", "(a + 1)*(a - 1)"}) {
    ExprPtr e = p(text);
    ExprPtr s = simplify(e);
    for (int i = 0; i < 100; ++i) {
      Environment env{{"a", d(rng)}, {"b", d(rng)}, {"thickness", d(rng)}, {"h_stem", d(rng)}};
      double want = evaluate(*e, env);
      EXPECT_NEAR(evaluate(*s, env), want, 1e-9 * std::max(1.0, std::fabs(want))) << text;
    }
  }
}

TEST(Classify, Categories) {
  EXPECT_EQ(classify(*p("5")), ExprCategory::C1);
  EXPECT_EQ(classify(*p("2 + 3")), ExprCategory::C1);
  EXPECT_EQ(classify(*p("size_y")), ExprCategory::C2);
  EXPECT_EQ(classify(*p("size_z+3")), ExprCategory::C3);
  EXPECT_EQ(classify(*p("-width/2")), ExprCategory::C3);
  EXPECT_EQ(classify(*p("size_x*i")), ExprCategory::C4);
  EXPECT_EQ(classify(*p("a*a + 1")), ExprCategory::C4);
  EXPECT_EQ(classify(*p("(var1>3)?1:2")), ExprCategory::C5);
  EXPECT_EQ(classify(*p("sin(a)")), ExprCategory::C5);
  EXPECT_EQ(classify(*p("1 / a")), ExprCategory::C5);
}

TEST(Classify, BareVariableOnlyForC2) {
  EXPECT_EQ(classify(*p("(x)")), ExprCategory::C2);
  EXPECT_EQ(classify(*p("x + 0")), ExprCategory::C3);
  EXPECT_EQ(classify(*p("1*x")), ExprCategory::C3);
}

TEST(Evaluate, ArithmeticAndBuiltins) {
  Environment env{{"x", 2}};
  EXPECT_DOUBLE_EQ(evaluate(*p("x*x*x + 7 % 4"), env), 11);
  EXPECT_DOUBLE_EQ(evaluate(*p("sin(90) + cos(180)"), env), 0);
  EXPECT_DOUBLE_EQ(evaluate(*p("x > 1 ? 10 : 20"), env), 10);
  EXPECT_DOUBLE_EQ(evaluate(*p("max(1, x, 3) + min(4, x)"), env), 5);
  EXPECT_DOUBLE_EQ(evaluate(*p("[1, x, 3][1]"), env), 2);
}

TEST(Evaluate, Errors) {
  Environment env;
  auto kind_of = [&](const char* text) {
    try {
      evaluate(*p(text), env);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Io;
  };
  EXPECT_EQ(kind_of("missing + 1"), ErrorKind::UnboundVariable);
  EXPECT_EQ(kind_of("[1, 2]"), ErrorKind::TypeMismatch);
  EXPECT_EQ(kind_of("[1, 2][5]"), ErrorKind::IndexOutOfRange);
}

TEST(Evaluate, UnboundVariableCarriesSpan) {
  ExprPtr e = p("1 + width");
  try {
    evaluate(*e, Environment{});
    FAIL();
  } catch (const Error& err) {
    ASSERT_TRUE(err.span());
    EXPECT_EQ(err.span()->start, 4u);
    EXPECT_EQ(err.span()->end, 9u);
  }
}

}  // namespace
}  // namespace parascad
