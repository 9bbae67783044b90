#include <gtest/gtest.h>

#include <json.hpp>
#include <set>
#include <sstream>

#include "support/fixtures.hpp"
#include "support/naive_gluings.hpp"
#include "wicks/canonical.hpp"
#include "wicks/census.hpp"
#include "wicks/enumerate.hpp"

namespace wicks {
namespace {

std::vector<WicksWord> collect_gluings(int g, int jobs, GluingStats* stats = nullptr) {
  std::vector<WicksWord> out;
  const GluingStats s = enumerate_gluings(g, [&](const WicksWord& w) { out.push_back(w); }, jobs);
  if (stats) *stats = s;
  return out;
}

std::set<std::string> as_strings(const std::vector<WicksWord>& words) {
  std::set<std::string> out;
  for (const WicksWord& w : words) out.insert(to_string(w));
  return out;
}

TEST(Gluings, GenusOneMatchesNaiveOracle) {
  const testing::NaiveResult naive = testing::naive_gluings(1);
  EXPECT_EQ(naive.matchings, 15u);
  ASSERT_EQ(naive.words.size(), 1u);
  const auto words = collect_gluings(1, 1);
  EXPECT_EQ(as_strings(words), as_strings(naive.words));
}

TEST(Gluings, GenusTwoMatchesNaiveOracle) {
  const testing::NaiveResult naive = testing::naive_gluings(2);
  EXPECT_EQ(naive.matchings, testing::double_factorial_odd(18));
  EXPECT_EQ(naive.matchings, 34459425u);
  GluingStats stats;
  const auto words = collect_gluings(2, 1, &stats);
  EXPECT_EQ(words.size(), 105u);
  EXPECT_EQ(stats.emitted, 105u);
  EXPECT_LT(stats.nodes, naive.matchings);
  EXPECT_EQ(as_strings(words), as_strings(naive.words));
}

TEST(Gluings, OutputIndependentOfJobs) {
  const auto one = collect_gluings(2, 1);
  const auto four = collect_gluings(2, 4);
  EXPECT_EQ(one, four);
}

TEST(Gluings, CapacityBound) {
  EXPECT_THROW(enumerate_gluings(3, [](const WicksWord&) {}), CapacityError);
  EXPECT_THROW(enumerate_gluings(0, [](const WicksWord&) {}), std::invalid_argument);
}

TEST(Census, GenusOne) {
  const Census c = gluing_census(1);
  EXPECT_EQ(c.class_count(), 1);
  EXPECT_EQ(c.order_histogram.at(6), 1);
  EXPECT_EQ(c.mass, Rational(1, 6));
  EXPECT_EQ(c.pointed_count, 1);
}

TEST(Census, GenusTwo) {
  const Census c = gluing_census(2);
  EXPECT_EQ(c.class_count(), 9);
  EXPECT_EQ(c.source_words, 105u);
  EXPECT_EQ(c.order_histogram, (std::map<int, int>{{1, 3}, {2, 5}, {3, 1}, {6, 0}}));
  EXPECT_EQ(c.mass, Rational(35, 6));
  EXPECT_EQ(c.pointed_count, 105);
  ASSERT_EQ(c.by_r.size(), 2u);
  EXPECT_EQ(c.by_r.at(1).classes, 4);
  EXPECT_EQ(c.by_r.at(1).mass, Rational(2));
  EXPECT_EQ(c.by_r.at(5).classes, 1);
  EXPECT_EQ(c.by_r.at(5).mass, Rational(1, 2));
  ASSERT_EQ(c.by_st.size(), 1u);
  EXPECT_EQ(c.by_st.at({2, 1}).mass, Rational(1, 3));
  EXPECT_TRUE(c.by_rst.empty());
  for (const ClassRecord& rec : c.classes) {
    EXPECT_EQ(rec.positive, 2);
    EXPECT_EQ(rec.negative, 4);
  }
}

TEST(Census, GluingAndRecursiveAgree) {
  for (int g = 1; g <= 2; ++g) {
    const Census a = gluing_census(g);
    const Census b = generate_recursive(g);
    ASSERT_EQ(a.class_count(), b.class_count());
    for (std::size_t i = 0; i < a.classes.size(); ++i) {
      EXPECT_EQ(a.classes[i].canonical, b.classes[i].canonical);
      EXPECT_EQ(a.classes[i].aut_order, b.classes[i].aut_order);
    }
    EXPECT_EQ(a.mass, b.mass);
  }
}

TEST(Census, GenusThreeRecursive) {
  const Census c = build_census(testing::classes_of_genus(3));
  const MassReport rep = report(3);
  EXPECT_EQ(c.class_count(), 1726);
  for (int d : {1, 2, 3, 6}) EXPECT_EQ(Integer(c.order_histogram.at(d)), rep.exact_order_counts.at(d));
  EXPECT_EQ(c.mass, rep.m1);
  for (const auto& [r, sub] : c.by_r) EXPECT_EQ(sub.mass, rep.m2_by_r.at(r));
  for (const auto& [st, sub] : c.by_st) EXPECT_EQ(sub.mass, rep.m3_by_st.at(st));
  for (const auto& [p, sub] : c.by_rst) EXPECT_EQ(sub.mass, rep.m6_by_rst.at(p));
  EXPECT_EQ(c.by_r.size(), rep.m2_by_r.size());
  EXPECT_EQ(c.by_st.size(), rep.m3_by_st.size());
  EXPECT_EQ(c.by_rst.size(), rep.m6_by_rst.size());
}

TEST(Census, BuilderRejectsBadInput) {
  CensusBuilder b;
  EXPECT_THROW(b.add(parse_word("a b a' b'")), std::invalid_argument);
  b.add(genus_one_word());
  EXPECT_THROW(b.add(parse_word(testing::kExampleWord)), std::invalid_argument);
  EXPECT_FALSE(b.add(rotate(genus_one_word(), 2)));
  EXPECT_EQ(b.size(), 1u);
}

TEST(Census, MergeIsOrderIndependent) {
  const auto& words = testing::classes_of_genus(2);
  CensusBuilder left(2), right(2), all(2);
  for (std::size_t i = 0; i < words.size(); ++i) {
    (i % 2 ? left : right).add(rotate(words[i], static_cast<int>(i)));
    all.add(words[i]);
  }
  right.merge(left);
  const Census merged = right.finish();
  const Census direct = all.finish();
  ASSERT_EQ(merged.class_count(), direct.class_count());
  for (std::size_t i = 0; i < merged.classes.size(); ++i) {
    EXPECT_EQ(merged.classes[i].canonical, direct.classes[i].canonical);
  }
}

TEST(Census, JsonRecordStream) {
  std::ostringstream out;
  write_census_json(out, gluing_census(2));
  std::istringstream in(out.str());
  std::string line;
  std::vector<nlohmann::json> records;
  while (std::getline(in, line)) records.push_back(nlohmann::json::parse(line));
  ASSERT_EQ(records.size(), 10u);
  for (int i = 0; i < 9; ++i) EXPECT_EQ(records[i]["record"], "class");
  const auto& summary = records.back();
  EXPECT_EQ(summary["record"], "summary");
  EXPECT_EQ(summary["version"], kCensusFormatVersion);
  EXPECT_EQ(summary["mass"], "35/6");
  EXPECT_EQ(summary["pointed_count"], "105");
  EXPECT_EQ(summary["class_count"], 9);
  EXPECT_EQ(summary["order_histogram"]["2"], 5);
  EXPECT_EQ(summary["by_r"]["5"]["mass"], "1/2");
  // canonical order
  for (int i = 1; i < 9; ++i) {
    EXPECT_LT(records[i - 1]["canonical"].get<std::string>(), records[i]["canonical"].get<std::string>());
  }
}

TEST(Recursive, CapacityAndLevels) {
  EXPECT_THROW(generate_recursive(4), CapacityError);
  const auto& levels = testing::census_levels();
  ASSERT_EQ(levels.size(), 3u);
  EXPECT_EQ(levels[0].size(), 1u);
  EXPECT_EQ(levels[1].size(), 9u);
  EXPECT_EQ(levels[2].size(), 1726u);
}

}  // namespace
}  // namespace wicks
