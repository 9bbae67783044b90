#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "wicks/automorphism.hpp"
#include "wicks/canonical.hpp"
#include "wicks/flows.hpp"
#include "wicks/surface_map.hpp"

namespace wicks {
namespace {

TEST(FlowSpace, Examples) {
  EXPECT_EQ(flow_space_dimension(genus_one_word(), 2), 2);
  EXPECT_EQ(flow_space_dimension(genus_one_word(), 3), 2);
  EXPECT_EQ(flow_space_dimension(parse_word("a b a' b'"), 2), 2);
  EXPECT_EQ(flow_space_dimension(parse_word("a b a' b'"), 3), 2);
  EXPECT_THROW(flow_space_dimension(genus_one_word(), 5), std::invalid_argument);
}

TEST(FlowSpace, TwiceTheGenusOnCensus) {
  for (int g = 1; g <= 3; ++g) {
    for (const WicksWord& w : testing::classes_of_genus(g)) {
      ASSERT_EQ(flow_space_dimension(w, 2), 2 * g);
      ASSERT_EQ(flow_space_dimension(w, 3), 2 * g);
    }
  }
}

TEST(IsFlow, ThetaGraph) {
  // Edges a1, a2, a3 all run between the two vertices.
  const WicksWord w = genus_one_word();
  EXPECT_TRUE(is_flow(w, {2, {{0, 1}, {1, 1}, {2, 0}}}));
  EXPECT_FALSE(is_flow(w, {2, {{0, 1}, {1, 0}, {2, 0}}}));
  // Over Z/3, a and b close up when they run in opposite directions.
  const SurfaceMap map(w);
  const int b = map.edge_ends(0).head == map.edge_ends(1).head ? 2 : 1;
  EXPECT_TRUE(is_flow(w, {3, {{0, 1}, {1, b}, {2, 0}}}));
  EXPECT_FALSE(is_flow(w, {3, {{0, 1}, {1, 3 - b}, {2, 0}}}));
}

TEST(Involution, WorkedExample) {
  const WicksWord w = parse_word(testing::kExampleWord);
  const QuotientData q = quotient_by_involution(w, 9);
  ASSERT_FALSE(q.empty());
  EXPECT_EQ(q.r, 1);
  EXPECT_EQ(q.genus, 1);
  EXPECT_TRUE(equivalent(*q.reduced_word, parse_word("a b e a' b' e'")));
  // Orbit representatives keep input ids: a, d, e survive (d carries b's role).
  EXPECT_EQ(to_string(*q.reduced_word), "a1 a4 a5 a1' a4' a5'");
  EXPECT_EQ(q.flow->values, (std::map<int, int>{{0, 1}, {3, 1}, {4, 0}}));

  const CanonicalFlow got = canonical_flow(*q.reduced_word, *q.flow);
  const CanonicalFlow want = canonical_flow(parse_word("a b e a' b' e'"), {2, {{0, 1}, {1, 1}, {2, 0}}});
  EXPECT_EQ(got.form.text, want.form.text);
  EXPECT_EQ(got.flow, want.flow);
}

TEST(Involution, GenusFormulaAndConservation) {
  int seen = 0;
  for (int g = 1; g <= 3; ++g) {
    for (const WicksWord& w : testing::classes_of_genus(g)) {
      if (automorphisms(w).order % 2 != 0) continue;
      const QuotientData q = quotient_by_involution(w, w.length() / 2);
      ++seen;
      ASSERT_EQ(q.genus * 4, 2 * g + 1 - q.r);
      if (q.empty()) {
        ASSERT_EQ(q.r, 2 * g + 1);
        ASSERT_FALSE(q.flow.has_value());
        continue;
      }
      ASSERT_TRUE(is_wicks_form(*q.reduced_word));
      ASSERT_TRUE(is_maximal(*q.reduced_word));
      ASSERT_TRUE(is_flow(*q.reduced_word, *q.flow));
    }
  }
  EXPECT_EQ(seen, 1 + 5 + 100);
}

TEST(Involution, RejectsWrongShift) {
  const WicksWord w = parse_word(testing::kExampleWord);
  EXPECT_THROW(quotient_by_involution(w, 6), std::invalid_argument);
  EXPECT_THROW(quotient_by_involution(parse_word("a b a' b'"), 2), std::invalid_argument);
}

TEST(Order3, GenusFormulaAndConservation) {
  int seen = 0;
  for (const WicksWord& w : testing::classes_of_genus(3)) {
    if (automorphisms(w).order % 3 != 0) continue;
    const int n = w.length();
    const SymmetryParams p = symmetry_parameters(w, n / 3);
    if (p.t != 0) {
      EXPECT_THROW(quotient_by_order3(w, n / 3), std::invalid_argument);
      continue;
    }
    for (int shift : {n / 3, 2 * n / 3}) {
      const QuotientData q = quotient_by_order3(w, shift);
      ++seen;
      ASSERT_EQ(q.genus * 3, 3 + 1 - q.s);
      if (q.empty()) continue;
      ASSERT_TRUE(is_maximal(*q.reduced_word));
      ASSERT_EQ(q.reduced_word->edge_count(), 2 * 3 - 1 - 2 * q.s);
      ASSERT_TRUE(is_flow(*q.reduced_word, *q.flow));
    }
  }
  EXPECT_GT(seen, 0);
}

TEST(Order3, OrbitCount) {
  // 2g - 1 edge orbits when no edge is fixed.
  for (const WicksWord& w : testing::classes_of_genus(3)) {
    if (automorphisms(w).order % 3 != 0) continue;
    const int n = w.length();
    std::set<int> reps;
    for (int id : w.ids()) {
      int rep = id;
      Letter l{id, 1};
      for (int k = 0; k < 2; ++k) {
        l = apply_rotation(w, n / 3, l);
        rep = std::min(rep, l.id);
      }
      reps.insert(rep);
    }
    EXPECT_EQ(static_cast<int>(reps.size()), 2 * 3 - 1);
  }
}

TEST(Order3, Preconditions) {
  EXPECT_THROW(quotient_by_order3(genus_one_word(), 2), std::invalid_argument);
  const WicksWord g2 = testing::classes_of_genus(2).back();
  for (const WicksWord& w : testing::classes_of_genus(2)) {
    if (automorphisms(w).order == 3) EXPECT_THROW(quotient_by_order3(w, 6), std::invalid_argument);  // t = 1
  }
  EXPECT_THROW(quotient_by_order3(parse_word(testing::kExampleWord), 6), std::invalid_argument);
}

TEST(InvariantFlows, SmallGenus) {
  EXPECT_EQ(invariant_flow_dimension(genus_one_word(), 2), 0);
  for (const WicksWord& w : testing::classes_of_genus(2)) {
    if (automorphisms(w).order != 3) continue;
    EXPECT_EQ(invariant_flow_dimension(w, 6), 0);
  }
  EXPECT_THROW(invariant_flow_dimension(genus_one_word(), 3), std::invalid_argument);
}

TEST(InvariantFlows, GenusThreeCountsTwoBitsPerUnit) {
  // The invariant Z/2 flows form a space of dimension 2(h+1-s-t)/3.
  int seen = 0;
  for (const WicksWord& w : testing::classes_of_genus(3)) {
    if (automorphisms(w).order % 3 != 0) continue;
    const int n = w.length();
    const SymmetryParams p = symmetry_parameters(w, n / 3);
    const int dim = invariant_flow_dimension(w, n / 3);
    EXPECT_EQ(3 * dim, 2 * (3 + 1 - p.s - p.t)) << to_string(w);
    EXPECT_LE(dim, flow_space_dimension(w, 2));
    ++seen;
  }
  EXPECT_EQ(seen, 12);
}

}  // namespace
}  // namespace wicks
