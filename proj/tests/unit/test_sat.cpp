#include <gtest/gtest.h>

#include "support/gen.hpp"
#include "u1/errors.hpp"
#include "u1/eval.hpp"
#include "u1/sat.hpp"

using namespace u1;

namespace {

const Vocabulary kVocab{{"P", 1}, {"S", 2}};

void expect_same(const SearchReport& a, const SearchReport& b) {
  EXPECT_EQ(a.bound, b.bound);
  EXPECT_EQ(a.found(), b.found());
  if (a.found() && b.found()) {
    EXPECT_EQ(*a.model, *b.model);
  }
  EXPECT_EQ(a.statistics.nodes, b.statistics.nodes);
}

}  // namespace

TEST(Sat, ThreeDistinctElements) {
  const Formula f = parse_formula("E x y z. ((~x = y & ~x = z) & ~y = z)");
  const SearchReport r = find_model(f, Vocabulary{}, 4);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.model->size(), 3);
  EXPECT_FALSE(find_model(f, Vocabulary{}, 2).found());
  EXPECT_EQ(find_model(f, Vocabulary{}, 2).bound, 2);
}

TEST(Sat, OnlyInfiniteModels) {
  const Formula f = parse_formula("((A x. E y. S(x,y) & E x. A y. ~S(y,x)) & A x. E[<=1] y. S(y,x))");
  const SearchReport r = find_model(f, Vocabulary{{"S", 2}}, 6);
  EXPECT_FALSE(r.found());
  EXPECT_EQ(r.bound, 6);
}

TEST(Sat, Constants) {
  EXPECT_FALSE(find_model(Formula::bottom(), Vocabulary{}, 5).found());
  const SearchReport top = find_model(Formula::top(), Vocabulary{}, 5);
  ASSERT_TRUE(top.found());
  EXPECT_EQ(top.model->size(), 1);
}

TEST(Sat, FirstModelInOrder) {
  // Size 1 fails (P and ~P); at size 2 the lex-first model puts d1 in P.
  const SearchReport r = find_model(parse_formula("(E x. P(x) & E x. ~P(x))"), kVocab, 3);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.model->size(), 2);
  EXPECT_EQ(r.model->relation("P").tuples(), (TupleSet{{1}}));
  EXPECT_TRUE(r.model->relation("S").tuples().empty());
}

TEST(Sat, Errors) {
  EXPECT_THROW(find_model(parse_formula("P(x)"), kVocab, 3), SearchError);
  EXPECT_THROW(find_model(Formula::top(), kVocab, 0), SearchError);
  EXPECT_THROW(find_model(parse_formula("E x. T(x,x,x,x)"), Vocabulary{{"T", 4}}, 5, {false, 256}), SearchError);
  EXPECT_THROW(find_model(parse_formula("E x. Z(x)"), kVocab, 3), ValidationError);
  EXPECT_THROW(find_model_exhaustive(parse_formula("E x. (S(x,x) & ~S(x,x))"), kVocab, 5), SearchError);
}

TEST(Sat, CellLimitConfigurable) {
  const Formula f = parse_formula("E x. T(x,x,x,x)");
  const SearchReport r = find_model(f, Vocabulary{{"T", 4}}, 5, {false, 1000});
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.model->size(), 1);
}

TEST(SatProperties, AgreesWithExhaustive) {
  u1test::Rng rng(31);
  for (int i = 0; i < 500; ++i) {
    Formula f = u1test::random_formula(rng, kVocab, u1test::pick(rng, 1, 4));
    for (const auto& v : free_variables(f)) f = Formula::exists({v}, f);
    const int n = u1test::pick(rng, 1, 3);
    const SearchReport want = find_model_exhaustive(f, kVocab, n);
    const SearchReport got = find_model(f, kVocab, n);
    const SearchReport pruned = find_model(f, kVocab, n, {true, 256});
    ASSERT_EQ(got.found(), want.found()) << print_formula(f);
    ASSERT_EQ(pruned.found(), want.found()) << print_formula(f);
    if (want.found()) {
      // Same lex-first model in the documented order.
      EXPECT_EQ(*got.model, *want.model) << print_formula(f);
      EXPECT_EQ(*pruned.model, *want.model) << print_formula(f);
      EXPECT_TRUE(eval(*got.model, {}, f));
    }
    EXPECT_LE(pruned.statistics.nodes, got.statistics.nodes);
  }
}

TEST(SatProperties, SerialParallelDeterministic) {
  u1test::Rng rng(32);
  for (int i = 0; i < 500; ++i) {
    Formula f = u1test::random_formula(rng, kVocab, u1test::pick(rng, 1, 4));
    for (const auto& v : free_variables(f)) f = Formula::exists({v}, f);
    const SearchOptions opts{u1test::coin(rng), 256};
    const SearchReport a = find_model(f, kVocab, 3, opts);
    const SearchReport b = find_model(f, kVocab, 3, opts);
    const SearchReport c = find_model_serial(f, kVocab, 3, opts);
    expect_same(a, b);
    expect_same(a, c);
  }
}

TEST(SatProperties, MinimalSize) {
  u1test::Rng rng(33);
  for (int i = 0; i < 200; ++i) {
    Formula f = u1test::random_formula(rng, kVocab, 3);
    for (const auto& v : free_variables(f)) f = Formula::exists({v}, f);
    const SearchReport r = find_model(f, kVocab, 3);
    if (!r.found()) continue;
    for (int n = 1; n < r.model->size(); ++n) EXPECT_FALSE(find_model_exhaustive(f, kVocab, n).found());
  }
}
