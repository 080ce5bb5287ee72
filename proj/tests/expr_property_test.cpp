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
#include "support/generators.h"
#include "support/oracles.h"

namespace parascad {
namespace {

using testing::ExprGenerator;

constexpr int kSamples = 2000;

TEST(ExprProperties, SimplifyIsIdempotent) {
  ExprGenerator gen(1);
  for (int i = 0; i < kSamples; ++i) {
    ExprPtr s = simplify(gen.generate(4));
    ASSERT_TRUE(structurally_equal(*simplify(s), *s)) << render_expr(*s);
  }
}

TEST(ExprProperties, SimplifyPreservesValue) {
  ExprGenerator gen(2);
  for (int i = 0; i < kSamples; ++i) {
    ExprPtr e = gen.generate(4);
    ExprPtr s = simplify(e);
    Environment env = gen.environment();
    double want = evaluate(*e, env);
    ASSERT_NEAR(evaluate(*s, env), want, 1e-9 * std::max(1.0, std::fabs(want)))
        << render_expr(*e) << " => " << render_expr(*s);
  }
}

TEST(ExprProperties, LinearFormsSurviveRendering) {
  ExprGenerator gen(3);
  int linear = 0;
  for (int i = 0; i < kSamples; ++i) {
    ExprPtr e = gen.generate(3);
    auto form = to_linear_form(*e);
    if (!form) continue;
    ++linear;
    auto back = to_linear_form(*parse_expression(render_expr(*form)));
    ASSERT_TRUE(back) << render_expr(*form);
    EXPECT_TRUE(testing::agrees_with_affine(*parse_expression(render_expr(*form)),
                                            form->coefficients(), form->constant(), {}));
    EXPECT_TRUE(back->approx_equal(*form, 1e-9 * std::max(1.0, std::fabs(form->constant()))))
        << render_expr(*form);
  }
  EXPECT_GT(linear, kSamples / 10);
}

TEST(ExprProperties, LinearityMatchesClassification) {
  ExprGenerator gen(4);
  for (int i = 0; i < kSamples; ++i) {
    ExprPtr e = gen.generate(3);
    ExprCategory c = classify(*e);
    bool low = c == ExprCategory::C1 || c == ExprCategory::C2 || c == ExprCategory::C3;
    EXPECT_EQ(low, to_linear_form(*e).has_value()) << render_expr(*e);
    if (c == ExprCategory::C2) EXPECT_TRUE(e->is<expr::Variable>());
  }
}

TEST(ExprProperties, ConstantCategoryIgnoresEnvironment) {
  ExprGenerator gen(5);
  int seen = 0;
  for (int i = 0; i < kSamples; ++i) {
    ExprPtr e = gen.generate(3);
    if (classify(*e) != ExprCategory::C1) continue;
    ++seen;
    double first = evaluate(*e, gen.environment());
    for (int k = 0; k < 5; ++k) EXPECT_EQ(evaluate(*e, gen.environment()), first);
  }
  EXPECT_GT(seen, 0);
}

TEST(ExprProperties, LinearFormEvaluatesLikeSource) {
  ExprGenerator gen(6);
  for (int i = 0; i < kSamples; ++i) {
    ExprPtr e = gen.generate(3);
    auto form = to_linear_form(*e);
    if (!form) continue;
    Environment env = gen.environment();
    double want = evaluate(*e, env);
    EXPECT_NEAR(form->evaluate(env), want, 1e-9 * std::max(1.0, std::fabs(want)));
  }
}

}  // namespace
}  // namespace parascad
