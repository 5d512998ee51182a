#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "support/gen.hpp"
#include "u1/errors.hpp"
#include "u1/dl.hpp"

using namespace u1;

namespace {

const Vocabulary kVocab{{"A", 1}, {"B", 1}, {"R", 2}, {"Q", 3}};

Structure make(const std::string& json) { return parse_structure(json); }

Structure i1() {
  return make(R"({"domain":["u"],"arities":{"A":1,"R":2},"relations":{"A":[["u"]],"R":[["u","u"]]}})");
}

}  // namespace

TEST(Surjection, Validation) {
  EXPECT_NO_THROW(Surjection({2, 1, 1}));
  EXPECT_THROW(Surjection({1, 1}), ValidationError);
  EXPECT_THROW(Surjection({1, 3}), ValidationError);
  EXPECT_THROW(Surjection({1}), ValidationError);
  const Surjection s({3, 1, 2});
  EXPECT_TRUE(s.is_permutation());
  EXPECT_EQ(s.inverse().values(), (std::vector<int>{2, 3, 1}));
}

TEST(RoleArity, Rules) {
  EXPECT_EQ(role_arity(Role::apply(Surjection({1, 2, 2}), Role::atomic("Q")), kVocab), 2);
  EXPECT_EQ(role_arity(Role::intersection(Role::atomic("R"), Role::atomic("Q")), kVocab), 2);
  EXPECT_EQ(role_arity(Role::epsilon(), kVocab), 2);
  EXPECT_EQ(role_arity(Role::atomic("Q"), kVocab), 3);
  EXPECT_EQ(role_arity(Role::apply(Surjection({1, 2, 3}), Role::atomic("R")), kVocab), 2);
  EXPECT_THROW(role_arity(Role::atomic("Z"), kVocab), ValidationError);
  EXPECT_THROW(role_arity(Role::atomic("A"), kVocab), ValidationError);
}

TEST(RoleExtension, Examples) {
  const Structure ab = make(R"({"domain":["a","b"],"arities":{"R":2},"relations":{"R":[["a","b"]]}})");
  EXPECT_EQ(role_extension(ab, Role::epsilon()), (TupleSet{{0, 0}, {1, 1}}));
  EXPECT_EQ(role_extension(ab, Role::apply(Surjection({2, 1}), Role::atomic("R"))), (TupleSet{{1, 0}}));
  EXPECT_TRUE(role_extension(ab, Role::intersection(Role::atomic("R"), Role::negation(Role::atomic("R")))).empty());

  const Structure cd = make(R"({"domain":["c","d","e"],"arities":{"Q":3},"relations":{"Q":[["c","d","d"]]}})");
  const Role sq = Role::apply(Surjection({2, 1, 1}), Role::atomic("Q"));
  // (u1,u2) with (u2,u1,u1) in Q: only (d,c).
  EXPECT_EQ(role_extension(cd, sq), (TupleSet{{1, 0}}));
  const Structure ce = make(R"({"domain":["c","d","e"],"arities":{"Q":3},"relations":{"Q":[["c","d","e"]]}})");
  EXPECT_TRUE(role_extension(ce, sq).empty());
}

TEST(ConceptExtension, NegatedRoleWitness) {
  const Concept c = parse_concept("~exists ~R.(A)");
  EXPECT_EQ(concept_extension(i1(), c), (ElementSet{0}));
  EXPECT_TRUE(concept_extension(disjoint_union(i1(), i1()), c).empty());
}

TEST(ConceptExtension, TernaryExists) {
  const Structure s = make(R"({"domain":["a","b","c"],"arities":{"Q":3},"relations":{"Q":[["a","b","c"]]}})");
  EXPECT_EQ(concept_extension(s, Concept::exists(Role::atomic("Q"), {Concept::top(), Concept::top()})), (ElementSet{0}));
}

TEST(ConceptExtension, ArgumentCountChecked) {
  EXPECT_THROW(validate(Concept::exists(Role::atomic("Q"), {Concept::top()}), kVocab), ValidationError);
}

TEST(DlText, RoundTrip) {
  u1test::Rng rng(9);
  u1test::DlGen gen(rng, kVocab);
  for (int i = 0; i < 500; ++i) {
    const Concept c = gen.concept_of(u1test::pick(rng, 0, 4));
    EXPECT_EQ(parse_concept(print_concept(c)), c) << print_concept(c);
  }
  EXPECT_THROW(parse_concept("exists R.(A"), ParseError);
}

TEST(DlProperties, DoubleNegationAndInverse) {
  u1test::Rng rng(10);
  u1test::DlGen gen(rng, kVocab);
  for (int i = 0; i < 500; ++i) {
    const Structure s = u1test::random_structure(rng, kVocab, u1test::pick(rng, 1, 3));
    const Role r = gen.role(u1test::pick(rng, 0, 3));
    EXPECT_EQ(role_extension(s, Role::negation(Role::negation(r))), role_extension(s, r)) << print_role(r);
    const Concept c = gen.concept_of(u1test::pick(rng, 0, 3));
    EXPECT_EQ(concept_extension(s, Concept::negation(Concept::negation(c))), concept_extension(s, c));

    const int k = role_arity(r, kVocab);
    std::vector<int> values(static_cast<std::size_t>(k));
    std::iota(values.begin(), values.end(), 1);
    std::shuffle(values.begin(), values.end(), rng);
    const Surjection sigma(values);
    EXPECT_EQ(role_extension(s, Role::apply(sigma.inverse(), Role::apply(sigma, r))), role_extension(s, r));
  }
}
