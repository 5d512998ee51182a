#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "support/gen.hpp"
#include "u1/dlr.hpp"
#include "u1/errors.hpp"

using namespace u1;

namespace {

const Vocabulary kVocab{{"A", 1}, {"B", 1}, {"R", 2}, {"Q", 3}};

bool subset(const ElementSet& a, const ElementSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

ElementSet complement(const ElementSet& a, int n) {
  ElementSet out;
  for (int e = 0; e < n; ++e) {
    if (!std::binary_search(a.begin(), a.end(), e)) out.push_back(e);
  }
  return out;
}

}  // namespace

TEST(DlrRoles, Examples) {
  const Structure ab = parse_structure(R"({"domain":["a","b"],"arities":{"A":1,"R":2},"relations":{"A":[["a"]],"R":[["a","b"]]}})");
  EXPECT_EQ(dlr_role_extension(ab, DlrRole::top(2)).size(), 4U);
  EXPECT_EQ(dlr_role_extension(ab, DlrRole::select(1, 2, DlrConcept::atomic("A"))), (TupleSet{{0, 0}, {0, 1}}));
  EXPECT_TRUE(dlr_role_extension(ab, DlrRole::intersection(DlrRole::atomic("R"), DlrRole::negation(DlrRole::atomic("R")))).empty());
  EXPECT_THROW(dlr_role_extension(ab, DlrRole::intersection(DlrRole::atomic("R"), DlrRole::top(3))), ValidationError);
}

TEST(DlrBinRels, Examples) {
  const Structure s = parse_structure(R"({"domain":["a","b","c"],"arities":{"Q":3,"R":2},"relations":{"Q":[["a","b","c"]],"R":[["a","b"],["b","c"]]}})");
  EXPECT_EQ(dlr_binrel_extension(s, DlrBinRel::project(DlrRole::atomic("Q"), 2, 3)), (TupleSet{{1, 2}}));
  const DlrBinRel r = DlrBinRel::project(DlrRole::atomic("R"), 1, 2);
  EXPECT_EQ(dlr_binrel_extension(s, DlrBinRel::compose(r, r)), (TupleSet{{0, 2}}));
  const TupleSet star = dlr_binrel_extension(s, DlrBinRel::star(r));
  for (int u = 0; u < 3; ++u) EXPECT_TRUE(star.count({u, u}));
  EXPECT_TRUE(star.count({0, 2}));
  EXPECT_THROW(dlr_binrel_extension(s, DlrBinRel::project(DlrRole::atomic("R"), 1, 3)), ValidationError);
}

TEST(DlrConcepts, AtMostCountsTuples) {
  const Structure s = parse_structure(R"({"domain":["a","b","c"],"arities":{"S":2},"relations":{"S":[["a","c"],["b","c"]]}})");
  EXPECT_EQ(dlr_concept_extension(s, DlrConcept::at_most(1, 2, DlrRole::atomic("S"))), (ElementSet{0, 1}));
}

TEST(DlrConcepts, StarContainsFiller) {
  u1test::Rng rng(12);
  u1test::DlrGen gen(rng, kVocab, true, false);
  for (int i = 0; i < 100; ++i) {
    const Structure s = u1test::random_structure(rng, kVocab, u1test::pick(rng, 1, 4));
    const DlrBinRel e = gen.binrel(2);
    EXPECT_TRUE(subset(dlr_concept_extension(s, DlrConcept::atomic("A")),
                       dlr_concept_extension(s, DlrConcept::exists(DlrBinRel::star(e), DlrConcept::atomic("A")))));
  }
}

TEST(DlrText, RoundTrip) {
  u1test::Rng rng(13);
  u1test::DlrGen gen(rng, kVocab, true, true);
  for (int i = 0; i < 500; ++i) {
    const DlrConcept c = gen.concept_of(u1test::pick(rng, 0, 4));
    EXPECT_EQ(parse_dlr_concept(print_dlr_concept(c)), c) << print_dlr_concept(c);
  }
  EXPECT_EQ(parse_dlr_concept("exists R . A"),
            DlrConcept::exists(DlrBinRel::project(DlrRole::atomic("R"), 1, 2), DlrConcept::atomic("A")));
  EXPECT_THROW(parse_dlr_concept("exists[$0] R"), ParseError);
}

TEST(DlrProperties, StarIdempotent) {
  u1test::Rng rng(14);
  u1test::DlrGen gen(rng, kVocab, true, false);
  for (int i = 0; i < 500; ++i) {
    const Structure s = u1test::random_structure(rng, kVocab, u1test::pick(rng, 1, 4), 0.3);
    const DlrBinRel e = gen.binrel(u1test::pick(rng, 0, 3));
    const TupleSet once = dlr_binrel_extension(s, DlrBinRel::star(e));
    EXPECT_EQ(dlr_binrel_extension(s, DlrBinRel::star(DlrBinRel::star(e))), once) << print_dlr_binrel(e);
    // Least reflexive-transitive superset of e, by naive closure.
    TupleSet closure = dlr_binrel_extension(s, e);
    for (int u = 0; u < s.size(); ++u) closure.insert({u, u});
    bool grew = true;
    while (grew) {
      grew = false;
      const TupleSet snapshot = closure;
      for (const auto& p : snapshot) {
        for (const auto& q : snapshot) {
          if (p[1] == q[0] && closure.insert({p[0], q[1]}).second) grew = true;
        }
      }
    }
    EXPECT_EQ(once, closure);
  }
}

TEST(DlrProperties, AtMostMonotone) {
  u1test::Rng rng(15);
  u1test::DlrGen gen(rng, kVocab);
  for (int i = 0; i < 500; ++i) {
    const Structure s = u1test::random_structure(rng, kVocab, u1test::pick(rng, 1, 4));
    const int n = u1test::coin(rng) ? 2 : 3;
    const DlrRole r = gen.role(n, u1test::pick(rng, 0, 2));
    const int pos = u1test::pick(rng, 1, n);
    const unsigned k = static_cast<unsigned>(u1test::pick(rng, 0, 4));
    const unsigned k2 = k + static_cast<unsigned>(u1test::pick(rng, 0, 3));
    EXPECT_TRUE(subset(dlr_concept_extension(s, DlrConcept::at_most(k, pos, r)),
                       dlr_concept_extension(s, DlrConcept::at_most(k2, pos, r))));
    EXPECT_EQ(dlr_concept_extension(s, DlrConcept::exists_project(pos, r)),
              complement(dlr_concept_extension(s, DlrConcept::at_most(0, pos, r)), s.size()));
  }
}

TEST(TopRelations, ExplicitCoverage) {
  const Structure bad = parse_structure(
      R"({"domain":["a","b"],"arities":{"R":2,"top2":2},"relations":{"R":[["a","b"]],"top2":[["a","a"]]}})");
  EXPECT_THROW(check_top_coverage(bad), StructureError);
  u1test::Rng rng(16);
  u1test::DlrGen gen(rng, kVocab);
  for (int i = 0; i < 200; ++i) {
    const Structure s = u1test::random_structure(rng, kVocab, u1test::pick(rng, 1, 3));
    const DlrConcept c = gen.concept_of(3);
    const Structure full = with_full_tops(s, std::max(dlr_n_max(kVocab), max_top_width(c)));
    EXPECT_NO_THROW(check_top_coverage(full));
    EXPECT_EQ(dlr_concept_extension(full, c, TopMode::kExplicit), dlr_concept_extension(s, c, TopMode::kFull));
    // Every tuple of an n-ary relation lies in top<n>.
    for (const auto& [name, rel] : full.relations()) {
      if (is_top_relation_name(name) || rel.arity() < 2) continue;
      for (const auto& t : rel.tuples()) EXPECT_TRUE(full.holds(top_relation_name(rel.arity()), t));
    }
  }
}

// Copies of s with its tops copied too stay closed; taking the full tops of
// the union instead lets negated roles see cross-copy pairs.
TEST(DisjointCopies, TopsTravelWithTheCopies) {
  const Structure loop = parse_structure(R"({"domain":["a"],"arities":{"R":2},"relations":{"R":[["a","a"]]}})");
  const DlrConcept c = parse_dlr_concept("~exists[$1] ~R");
  EXPECT_EQ(dlr_concept_extension(loop, c), (ElementSet{0}));
  const Structure tops = with_full_tops(loop, 2);
  EXPECT_EQ(dlr_concept_extension(disjoint_union(tops, tops), c, TopMode::kExplicit), (ElementSet{0, 1}));
  EXPECT_TRUE(dlr_concept_extension(disjoint_union(loop, loop), c).empty());
}

TEST(DisjointCopies, RandomConcepts) {
  u1test::Rng rng(17);
  u1test::DlrGen gen(rng, kVocab);
  for (int i = 0; i < 300; ++i) {
    const Structure s = u1test::random_structure(rng, kVocab, u1test::pick(rng, 1, 3));
    const DlrConcept c = gen.concept_of(u1test::pick(rng, 1, 4));
    const Structure tops = with_full_tops(s, std::max(dlr_n_max(kVocab), max_top_width(c)));
    const ElementSet ext = dlr_concept_extension(s, c);
    ElementSet want = copy_ids(ext, s.size(), 1);
    const ElementSet second = copy_ids(ext, s.size(), 2);
    want.insert(want.end(), second.begin(), second.end());
    EXPECT_EQ(dlr_concept_extension(disjoint_union(tops, tops), c, TopMode::kExplicit), want) << print_dlr_concept(c);
  }
}
