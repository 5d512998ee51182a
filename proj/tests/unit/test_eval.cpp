#include <gtest/gtest.h>

#include "support/gen.hpp"
#include "u1/errors.hpp"
#include "u1/eval.hpp"
#include "u1/lab.hpp"

using namespace u1;

namespace {

const Vocabulary kVocab{{"P", 1}, {"Q", 1}, {"S", 2}, {"R", 3}};

Structure loop() { return parse_structure(R"({"domain":["a"],"arities":{"R":2},"relations":{"R":[["a","a"]]}})"); }

// Assigns every free variable of f.
Assignment random_assignment(u1test::Rng& rng, const Structure& s, const Formula& f) {
  Assignment a;
  for (const auto& v : free_variables(f)) a[v] = u1test::pick(rng, 0, s.size() - 1);
  return a;
}

}  // namespace

TEST(Eval, CoveringVertex) {
  const Formula f = parse_formula("E x. A y z. (R(y,z) -> (x = y | x = z))");
  EXPECT_TRUE(eval(gen_clique(2), {}, f));
  EXPECT_FALSE(eval(gen_clique(3), {}, f));
}

TEST(Eval, Triangles) {
  const Formula f = parse_formula("E x y z. (R(x,y) & R(y,z) & R(z,x))");
  EXPECT_TRUE(eval(disjoint_copies(gen_directed_cycle(3), 4), {}, f));
  EXPECT_FALSE(eval(disjoint_copies(gen_directed_cycle(4), 3), {}, f));
}

TEST(Eval, NonEdge) {
  const Formula f = parse_formula("E x y. ~R(x,y)");
  EXPECT_FALSE(eval(loop(), {}, f));
  EXPECT_TRUE(eval(disjoint_union(loop(), loop()), {}, f));
}

TEST(Eval, TopAndBottom) {
  u1test::Rng rng(1);
  const Structure s = u1test::random_structure(rng, kVocab, 3);
  EXPECT_TRUE(eval(s, {}, Formula::top()));
  EXPECT_TRUE(satisfaction_set(s, Formula::bottom()).elements.empty());
}

TEST(Eval, InDegreeAtMostOne) {
  const Structure s = parse_structure(
      R"({"domain":["a","b","c"],"arities":{"S":2},"relations":{"S":[["a","c"],["b","c"]]}})");
  const Formula f = parse_formula("E[<=1] y. S(y,x)");
  EXPECT_FALSE(eval(s, parse_assignment(s, "x=c"), f));
  EXPECT_TRUE(eval(s, parse_assignment(s, "x=a"), f));
}

TEST(Eval, Errors) {
  const Structure s = loop();
  EXPECT_THROW(eval(s, {}, parse_formula("R(x,x)")), EvalError);
  EXPECT_THROW(eval(s, {}, parse_formula("E x. P(x)")), EvalError);
  EXPECT_THROW(eval(s, {}, parse_formula("E x. R(x,x,x)")), EvalError);
  EXPECT_THROW(satisfaction_set(s, parse_formula("R(x,y)")), EvalError);
  EXPECT_THROW(parse_assignment(s, "x=q"), EvalError);
}

TEST(SatisfactionSet, Examples) {
  const Formula covering = parse_formula("A y z. (R(y,z) -> (x = y | x = z))");
  const SatisfactionSet k2 = satisfaction_set(gen_clique(2), covering);
  EXPECT_EQ(k2.variable, "x");
  EXPECT_EQ(k2.elements, (ElementSet{0, 1}));
  EXPECT_EQ(satisfaction_set(loop(), parse_formula("~E y. ~R(x,y)")).elements, (ElementSet{0}));
  EXPECT_EQ(satisfaction_set(gen_clique(3), parse_formula("E x. R(x,x)")).elements, ElementSet{});
  EXPECT_EQ(satisfaction_set(gen_clique(3), parse_formula("E x y. R(x,y)")).elements, (ElementSet{0, 1, 2}));
}

TEST(Eval, CompiledMatchesReference) {
  u1test::Rng rng(2);
  for (int i = 0; i < 800; ++i) {
    const Formula f = u1test::random_formula(rng, kVocab, u1test::pick(rng, 0, 5));
    const Structure s = u1test::random_structure(rng, kVocab, u1test::pick(rng, 1, 3));
    const Assignment a = random_assignment(rng, s, f);
    EXPECT_EQ(eval(s, a, f), eval_reference(s, a, f)) << print_formula(f);
  }
}

TEST(Eval, Duality) {
  u1test::Rng rng(3);
  for (int i = 0; i < 600; ++i) {
    const Formula body = u1test::random_formula(rng, kVocab, u1test::pick(rng, 0, 4));
    std::vector<std::string> vars{"x", "y", "z"};
    std::shuffle(vars.begin(), vars.end(), rng);
    vars.resize(static_cast<std::size_t>(u1test::pick(rng, 1, 2)));
    const Formula lhs = Formula::negation(Formula::exists(vars, body));
    const Formula rhs = Formula::forall(vars, Formula::negation(body));
    const Structure s = u1test::random_structure(rng, kVocab, u1test::pick(rng, 1, 3));
    const Assignment a = random_assignment(rng, s, lhs);
    EXPECT_EQ(eval(s, a, lhs), eval(s, a, rhs)) << print_formula(lhs);
  }
}

TEST(Eval, AlphaInvariance) {
  u1test::Rng rng(4);
  for (int i = 0; i < 600; ++i) {
    const Formula f = u1test::random_formula(rng, kVocab, u1test::pick(rng, 1, 5));
    std::map<std::string, std::string> env;
    int counter = 0;
    const Formula g = u1test::rename_bound(f, env, counter);
    ASSERT_EQ(free_variables(f), free_variables(g));
    const Structure s = u1test::random_structure(rng, kVocab, u1test::pick(rng, 1, 3));
    const Assignment a = random_assignment(rng, s, f);
    EXPECT_EQ(eval(s, a, f), eval(s, a, g)) << print_formula(f) << "\n" << print_formula(g);
  }
}

TEST(Eval, CountingConsistency) {
  u1test::Rng rng(5);
  for (int i = 0; i < 600; ++i) {
    const Formula body = u1test::random_formula(rng, kVocab, u1test::pick(rng, 0, 3));
    const unsigned k = static_cast<unsigned>(u1test::pick(rng, 0, 3));
    const Formula ge1 = Formula::count(Comparator::kAtLeast, 1, "x", body);
    const Formula ex = Formula::exists({"x"}, body);
    const Formula eq = Formula::count(Comparator::kExactly, k, "x", body);
    const Formula both = Formula::conjunction(Formula::count(Comparator::kAtLeast, k, "x", body),
                                              Formula::count(Comparator::kAtMost, k, "x", body));
    const Structure s = u1test::random_structure(rng, kVocab, u1test::pick(rng, 1, 4));
    const Assignment a = random_assignment(rng, s, ex);
    EXPECT_EQ(eval(s, a, ge1), eval(s, a, ex));
    EXPECT_EQ(eval(s, a, eq), eval(s, a, both));
  }
}

TEST(Eval, IsomorphismInvariance) {
  u1test::Rng rng(6);
  for (int i = 0; i < 600; ++i) {
    const Formula f = u1test::random_formula(rng, kVocab, u1test::pick(rng, 1, 5));
    const Structure s = u1test::random_structure(rng, kVocab, u1test::pick(rng, 1, 4));
    std::vector<int> perm(static_cast<std::size_t>(s.size()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Structure t = u1test::permuted(s, perm);
    Assignment a = random_assignment(rng, s, f);
    Assignment b;
    for (const auto& [v, e] : a) b[v] = perm[static_cast<std::size_t>(e)];
    EXPECT_EQ(eval(s, a, f), eval(t, b, f)) << print_formula(f);
  }
}

TEST(Eval, TriangleLocalityUnderDisjointUnion) {
  u1test::Rng rng(7);
  const Vocabulary binary{{"R", 2}};
  const Formula f = parse_formula("E x y z. (R(x,y) & R(y,z) & R(z,x))");
  for (int i = 0; i < 200; ++i) {
    const Structure s1 = u1test::random_structure(rng, binary, u1test::pick(rng, 1, 4), 0.3);
    const Structure s2 = u1test::random_structure(rng, binary, u1test::pick(rng, 1, 4), 0.3);
    EXPECT_EQ(eval(disjoint_union(s1, s2), {}, f), eval(s1, {}, f) || eval(s2, {}, f));
  }
}

TEST(SatisfactionSet, ParallelSerialReference) {
  u1test::Rng rng(8);
  for (int i = 0; i < 300; ++i) {
    u1test::FragmentGen gen(rng, kVocab, u1test::Flavor::kUC1);
    const Formula f = gen.formula("x", u1test::pick(rng, 1, 5));
    const Structure s = u1test::random_structure(rng, kVocab, u1test::pick(rng, 1, 5));
    const ElementSet expected = satisfaction_set_reference(s, f).elements;
    EXPECT_EQ(satisfaction_set(s, f).elements, expected) << print_formula(f);
    EXPECT_EQ(satisfaction_set_serial(s, f).elements, expected) << print_formula(f);
  }
}
