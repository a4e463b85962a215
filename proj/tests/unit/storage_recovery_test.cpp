// Copyright 2026 The ppc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "ppc/errors.hpp"
#include "ppc/recovery.hpp"
#include "ppc/storage_sim.hpp"
#include "test_util.hpp"

namespace ppc {
namespace {

Answers answer_all(const std::vector<DatabaseNode>& nodes, const QueryPlan& plan) {
  Answers out;
  for (const auto& node : nodes) {
    out.push_back(answer(node, plan.candidates(), plan.queries(node.index())));
  }
  return out;
}

TEST(MessageStore, ShapeAndValidation) {
  const PrimeField f(5);
  const auto store = MessageStore::random(f, 3, 7, 2, 1);
  EXPECT_EQ(store.messages(), 3u);
  EXPECT_EQ(store.rows(), 7u);
  EXPECT_EQ(store.width(), 2u);
  EXPECT_EQ(store.point(4, 1).size(), 3u);
  EXPECT_EQ(store.point(4, 1)[2], store.message(2)[4][1]);
  EXPECT_THROW(MessageStore({}), UsageError);
  MessageStore::Message a(2, std::vector<FieldElement>(2, f.zero()));
  MessageStore::Message b(3, std::vector<FieldElement>(2, f.zero()));
  EXPECT_THROW(MessageStore({a, b}), UsageError);
}

TEST(EncodeStore, ZeroMessagesGiveZeroColumns) {
  const auto ctx = CodingContext::make(4, 2, 2, false);
  const PrimeField& f = ctx.field();
  MessageStore::Message zero(3, std::vector<FieldElement>(2, f.zero()));
  const auto nodes = encode_store(ctx, MessageStore({zero, zero}));
  ASSERT_EQ(nodes.size(), 4u);
  for (const auto& node : nodes) {
    for (const auto& col : node.column()) {
      for (const auto& c : col) EXPECT_TRUE(c.is_zero());
    }
  }
}

TEST(EncodeStore, SystematicNodesHoldMessagesVerbatim) {
  const auto ctx = CodingContext::make(5, 3, 2, true);
  const auto store = MessageStore::random(ctx.field(), 2, 6, 3, 4);
  const auto nodes = encode_store(ctx, store);
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t m = 0; m < 2; ++m) {
      for (std::size_t t = 0; t < 6; ++t) {
        EXPECT_EQ(nodes[j].column()[m][t], store.message(m)[t][j]);
      }
    }
  }
}

TEST(EncodeStore, ColumnsMatchRowEncoding) {
  const auto ctx = CodingContext::make(6, 3, 1, false, 11);
  const auto store = MessageStore::random(ctx.field(), 2, 5, 3, 9);
  const auto nodes = encode_store(ctx, store);
  for (std::size_t m = 0; m < 2; ++m) {
    for (std::size_t t = 0; t < 5; ++t) {
      const auto c = encode_row(ctx, store.message(m)[t]);
      for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(nodes[j].column()[m][t], c[j]);
    }
  }
  EXPECT_THROW(encode_store(CodingContext::make(6, 2, 1, false, 11), store), UsageError);
}

TEST(Answer, SingleTermsSumsAndCancellation) {
  const auto ctx = CodingContext::make(4, 2, 2, false);
  const auto cs = CandidateSet::canonical(2, 2, 3, ctx.field());
  const auto store = MessageStore::random(ctx.field(), 2, 64, 2, 2);
  const auto nodes = encode_store(ctx, store);
  const auto& db1 = nodes[0];
  const std::vector<TauSum> queries = {
      {0b001, 1, {{0, 5, 1}}},
      {0b101, 2, {{0, 39, 1}, {2, 27, 1}}},
      {0b001, 1, {{0, 3, 1}, {0, 3, -1}}},
  };
  const auto a = answer(db1, cs, queries);
  const auto& x = db1.column()[0];
  const auto& y = db1.column()[1];
  EXPECT_EQ(a[0], x[5]);
  EXPECT_EQ(a[1], x[39] + x[27] * y[27]);
  EXPECT_TRUE(a[2].is_zero());
  EXPECT_EQ(answer(db1, cs, queries), a);
  const std::vector<TauSum> bad_row = {{0b001, 1, {{0, 64, 1}}}};
  EXPECT_THROW(answer(db1, cs, bad_row), UsageError);
  const std::vector<TauSum> bad_cand = {{0b1000, 1, {{3, 0, 1}}}};
  EXPECT_THROW(answer(db1, cs, bad_cand), UsageError);
}

TEST(Answer, SingleSumEqualsComposedPolynomialAtNode) {
  const auto ctx = CodingContext::make(5, 2, 2, false);
  const auto cs = CandidateSet::canonical(2, 2, 5, ctx.field());
  const auto store = MessageStore::random(ctx.field(), 2, 4, 2, 6);
  const auto nodes = encode_store(ctx, store);
  for (std::size_t t = 0; t < 4; ++t) {
    const std::vector<UnivariatePoly> rows = {message_poly(ctx, store.message(0)[t]),
                                              message_poly(ctx, store.message(1)[t])};
    for (std::size_t c = 0; c < cs.size(); ++c) {
      const auto psi = compose(ctx, cs[c], rows);
      const std::vector<TauSum> q = {{TypeMask{1} << c, 1, {{c, t, 1}}}};
      for (const auto& node : nodes) {
        EXPECT_EQ(answer(node, cs, q)[0], psi(ctx.alpha()[node.index()]));
      }
    }
  }
}

TEST(Decode, GeneralN4ProjectionAndProduct) {
  const auto ctx = CodingContext::make(4, 2, 2, false);
  const auto cs = CandidateSet::canonical(2, 2, 3, ctx.field());
  for (std::size_t v : {0u, 2u}) {
    const auto run = simulate(ctx, cs, Scheme::kGeneral, v, 42);
    ASSERT_TRUE(run.exact());
    for (std::size_t t = 0; t < run.plan.beta(); ++t) {
      for (std::size_t i = 0; i < 2; ++i) {
        const auto w1 = run.store.message(0)[t][i];
        const auto w2 = run.store.message(1)[t][i];
        EXPECT_EQ(run.recovered.x[t][i], v == 0 ? w1 : w1 * w2);
      }
    }
  }
}

TEST(Decode, SystematicDirectReadRowsComeFromAnswersVerbatim) {
  const auto ctx = CodingContext::make(4, 2, 2, true);
  const auto cs = CandidateSet::canonical(2, 2, 3, ctx.field());
  const auto run = simulate(ctx, cs, Scheme::kSystematic, 1, 8);
  ASSERT_TRUE(run.exact());
  const auto& plan = run.plan;
  std::size_t checked = 0;
  for (const auto& g : plan.groups()) {
    if (g.round != 1 || !is_direct_read_row(plan.rate_matrix(), ctx, g.block)) continue;
    for (const auto& d : g.desired) {
      for (std::size_t p = 0; p < g.databases.size(); ++p) {
        const std::size_t j = g.databases[p];
        ASSERT_LT(j, ctx.k());
        const auto& ps = g.sums[p][d.type_index];
        FieldElement read = run.answers[j][ps.query_index];
        if (d.desired_sign < 0) read = -read;
        EXPECT_EQ(run.recovered.x[plan.permutation()[d.logical_row]][j], read);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 0u);
}

TEST(Decode, MissingAnswersAreDecodeErrors) {
  const auto ctx = CodingContext::make(4, 2, 2, false);
  const auto cs = CandidateSet::canonical(2, 2, 3, ctx.field());
  const auto plan = plan_general(ctx, cs, 0, 3);
  const auto store = MessageStore::random(ctx.field(), 2, plan.beta(), 2, 3);
  auto answers = answer_all(encode_store(ctx, store), plan);
  answers[2].pop_back();
  EXPECT_THROW(decode(plan, answers), DecodeError);
  answers.pop_back();
  EXPECT_THROW(decode(plan, answers), DecodeError);
}

TEST(Decode, CorruptedAnswerIsNeverSilentlyAccepted) {
  const auto ctx = CodingContext::make(5, 2, 2, false);
  const auto cs = CandidateSet::canonical(2, 2, 3, ctx.field());
  const auto plan = plan_general(ctx, cs, 1, 5);
  const auto store = MessageStore::random(ctx.field(), 2, plan.beta(), 2, 5);
  const auto truth = evaluate_table(store, cs[1]);
  auto answers = answer_all(encode_store(ctx, store), plan);
  answers[0][0] += ctx.field().one();
  bool detected = false;
  try {
    detected = decode(plan, answers) != truth;
  } catch (const ConsistencyError&) {
    detected = true;
  } catch (const DecodeError&) {
    detected = true;
  }
  EXPECT_TRUE(detected);
}

TEST(VerifyRecovery, SmallConfigsAndLinearCase) {
  for (bool sys : {false, true}) {
    const auto ctx = CodingContext::make(4, 2, 2, sys, 5);
    const auto cs = CandidateSet::canonical(2, 2, 3, ctx.field());
    const Scheme s = sys ? Scheme::kSystematic : Scheme::kGeneral;
    for (std::size_t v = 0; v < 3; ++v) EXPECT_TRUE(verify_recovery(ctx, cs, s, v, 77));
  }
  const auto lin = CodingContext::make(4, 2, 1, false);
  const auto lin_cs = CandidateSet::canonical(2, 1, 2, lin.field());
  for (std::size_t v = 0; v < 2; ++v) {
    EXPECT_TRUE(verify_recovery(lin, lin_cs, Scheme::kGeneral, v, 5));
  }
}

TEST(Simulate, StoreAndPlanAreSeedDeterministic) {
  const auto ctx = CodingContext::make(4, 2, 2, true);
  const auto cs = CandidateSet::canonical(2, 2, 3, ctx.field());
  const auto a = simulate(ctx, cs, Scheme::kSystematic, 2, 9);
  const auto b = simulate(ctx, cs, Scheme::kSystematic, 2, 9);
  EXPECT_EQ(a.answers, b.answers);
  EXPECT_EQ(a.recovered, b.recovered);
  EXPECT_EQ(format_trace(a.plan, &a.answers), format_trace(b.plan, &b.answers));
}

}  // namespace
}  // namespace ppc
