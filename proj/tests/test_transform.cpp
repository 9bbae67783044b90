#include <gtest/gtest.h>

#include <set>

#include "support/fixtures.hpp"
#include "wicks/automorphism.hpp"
#include "wicks/canonical.hpp"
#include "wicks/surface_map.hpp"
#include "wicks/transform.hpp"

namespace wicks {
namespace {

std::vector<int> negative_vertices(const WicksWord& w) {
  const SignSummary s = vertex_signs(w);
  std::vector<int> out;
  for (std::size_t v = 0; v < s.signs.size(); ++v) {
    if (s.signs[v] == VertexSign::Negative) out.push_back(static_cast<int>(v));
  }
  return out;
}

TEST(Classify, ExampleWordMatchesNeighbourStructure) {
  const WicksWord w = parse_word(testing::kExampleWord);
  const SurfaceMap m(w);
  for (int v : negative_vertices(w)) {
    const auto nb = m.distinct_neighbors(v);
    const NegativeVertexType t = classify_negative_vertex(w, v);
    if (nb.size() == 3) {
      EXPECT_EQ(t, NegativeVertexType::Gamma);
    } else {
      ASSERT_EQ(nb.size(), 2u);
      EXPECT_EQ(t, m.adjacent(nb[0], nb[1]) ? NegativeVertexType::Alpha : NegativeVertexType::Beta);
    }
  }
}

TEST(Classify, RejectsPositiveVertexAndGenusOne) {
  const WicksWord w = parse_word(testing::kExampleWord);
  const SignSummary s = vertex_signs(w);
  for (std::size_t v = 0; v < s.signs.size(); ++v) {
    if (s.signs[v] == VertexSign::Positive) {
      EXPECT_THROW(classify_negative_vertex(w, static_cast<int>(v)), std::invalid_argument);
      EXPECT_THROW(reduce(w, static_cast<int>(v)), std::invalid_argument);
    }
  }
  EXPECT_THROW(classify_negative_vertex(genus_one_word(), 0), std::invalid_argument);
}

TEST(Classify, AlphaConstructionCreatesAlphaVertex) {
  int alpha = 0;
  for_each_construction(genus_one_word(), [&](const Construction& c) {
    if (c.kind != ConstructionKind::Alpha) return;
    ++alpha;
    bool found = false;
    for (int v : negative_vertices(c.word)) {
      found = found || classify_negative_vertex(c.word, v) == NegativeVertexType::Alpha;
    }
    EXPECT_TRUE(found) << to_string(c.word);
  });
  EXPECT_GT(alpha, 0);
}

TEST(Classify, EquivariantUnderAutomorphisms) {
  for (const WicksWord& w : testing::classes_of_genus(2)) {
    const AutGroup aut = automorphisms(w);
    const SurfaceMap m(w);
    for (int shift : aut.member_shifts) {
      for (int v : negative_vertices(w)) {
        const int image = m.vertex_of_corner((m.corners(v).front() + shift) % w.length());
        EXPECT_EQ(classify_negative_vertex(w, v), classify_negative_vertex(w, image));
      }
    }
  }
}

TEST(Reduce, ExampleWordReducesToTheta) {
  const WicksWord w = parse_word(testing::kExampleWord);
  const std::string theta = canonical_string(genus_one_word());
  for (int v : negative_vertices(w)) EXPECT_EQ(canonical_string(reduce(w, v)), theta);
}

TEST(Reduce, EveryGenusTwoAndThreeReductionIsMaximal) {
  std::set<std::string> genus_two;
  for (const WicksWord& w : testing::classes_of_genus(2)) genus_two.insert(canonical_string(w));
  for (int g = 2; g <= 3; ++g) {
    const auto& classes = testing::classes_of_genus(g);
    // Every genus-2 class, and a stride through the genus-3 classes.
    const std::size_t stride = g == 2 ? 1 : 17;
    for (std::size_t i = 0; i < classes.size(); i += stride) {
      const WicksWord& w = classes[i];
      for (int v : negative_vertices(w)) {
        const WicksWord r = reduce(w, v);
        ASSERT_TRUE(is_wicks_form(r));
        ASSERT_TRUE(is_maximal(r));
        ASSERT_EQ(genus(r), g - 1);
        ASSERT_EQ(r.length(), w.length() - 12);
        if (g == 3) ASSERT_TRUE(genus_two.count(canonical_string(r))) << to_string(r);
      }
    }
  }
}

TEST(Reduce, PairedVerticesGiveEquivalentResults) {
  int pairs = 0;
  for (const WicksWord& w : testing::classes_of_genus(2)) {
    const SurfaceMap m(w);
    for (int v : negative_vertices(w)) {
      if (classify_negative_vertex(w, v) == NegativeVertexType::Gamma) continue;
      const auto nb = m.neighbors(v);
      int twin = -1;
      for (std::size_t i = 0; i + 1 < nb.size(); ++i) {
        if (nb[i] == nb[i + 1]) twin = nb[i];
      }
      ASSERT_NE(twin, -1);
      EXPECT_EQ(canonical_string(reduce(w, v)), canonical_string(reduce(w, twin)));
      ++pairs;
    }
  }
  EXPECT_GT(pairs, 0);
}

TEST(Construct, GenusOneGivesTheNineClasses) {
  std::set<std::string> classes;
  std::set<ConstructionKind> kinds;
  for (const Construction& c : construct_all(genus_one_word())) {
    EXPECT_TRUE(is_wicks_form(c.word));
    EXPECT_EQ(genus(c.word), 2);
    classes.insert(canonical_string(c.word));
    kinds.insert(c.kind);
  }
  EXPECT_EQ(classes.size(), 9u);
  EXPECT_EQ(kinds.size(), 3u);
}

TEST(Construct, OrderIsReproducible) {
  const WicksWord base = testing::classes_of_genus(2)[3];
  const auto a = construct_all(base);
  const auto b = construct_all(base);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].word, b[i].word);
    EXPECT_EQ(a[i].splits, b[i].splits);
  }
}

TEST(Construct, SignCountsGrowByTwo) {
  for (const Construction& c : construct_all(testing::classes_of_genus(2)[0])) {
    const SignSummary s = vertex_signs(c.word);
    EXPECT_EQ(s.positive, 4);
    EXPECT_EQ(s.negative, 6);
  }
}

TEST(Construct, SomeReductionInvertsEveryConstruction) {
  for (int g = 1; g <= 2; ++g) {
    for (const WicksWord& base : testing::classes_of_genus(g)) {
      const std::string target = canonical_string(base);
      for_each_construction(base, [&](const Construction& c) {
        bool inverted = false;
        for (int v : negative_vertices(c.word)) {
          if (canonical_string(reduce(c.word, v)) == target) {
            inverted = true;
            break;
          }
        }
        ASSERT_TRUE(inverted) << to_string(c.kind) << " on " << to_string(base);
      });
    }
  }
}

TEST(IH, ThetaWordIsRigid) {
  const WicksWord w = genus_one_word();
  for (int id : w.ids()) EXPECT_TRUE(equivalent(ih_transform(w, id).second, w));
}

TEST(IH, PreservesGenusMaximalityAndSigns) {
  for (const WicksWord& w : testing::classes_of_genus(2)) {
    const SignSummary before = vertex_signs(w);
    for (int id : w.ids()) {
      const auto [kind, out] = ih_transform(w, id);
      ASSERT_TRUE(is_wicks_form(out));
      ASSERT_TRUE(is_maximal(out));
      ASSERT_EQ(genus(out), 2);
      const SignSummary after = vertex_signs(out);
      ASSERT_EQ(after.positive, before.positive);
      ASSERT_EQ(after.negative, before.negative);
      if (kind != IHKind::Type1) ASSERT_TRUE(equivalent(out, w));
    }
  }
}

TEST(IH, TypesOnExampleWord) {
  Alphabet names;
  const WicksWord w = parse_word(testing::kExampleWord, &names);
  std::set<IHKind> kinds;
  for (int id : w.ids()) kinds.insert(ih_transform(w, id).first);
  EXPECT_TRUE(kinds.count(IHKind::Type1));
  EXPECT_THROW(ih_transform(w, 42), std::invalid_argument);
}

}  // namespace
}  // namespace wicks
