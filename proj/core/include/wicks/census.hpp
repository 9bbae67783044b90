#pragma once

// Equivalence classes of maximal words, with automorphism data and masses.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wicks/count.hpp"
#include "wicks/word.hpp"

namespace wicks {

struct ClassRecord {
  std::string canonical;
  int aut_order = 1;
  int positive = 0;
  int negative = 0;
  std::optional<int> r;                    // order-2 element: reversed edges
  std::optional<std::pair<int, int>> st;   // order-3 elements: fixed (pos, neg)
  std::optional<ParamTuple> rst;           // order 6, unscaled (r, s, t)
};

struct SubCensus {
  int classes = 0;
  Rational mass;
};

struct Census {
  int genus = 0;
  std::vector<ClassRecord> classes;  // sorted by canonical string
  std::uint64_t source_words = 0;    // words fed in, duplicates included
  Rational mass;
  Integer pointed_count;
  std::map<int, int> order_histogram;  // keys 1, 2, 3, 6
  std::map<int, SubCensus> by_r;
  std::map<std::pair<int, int>, SubCensus> by_st;
  std::map<ParamTuple, SubCensus> by_rst;

  int class_count() const { return static_cast<int>(classes.size()); }
};

// Incremental census: keeps one canonical string per class.
class CensusBuilder {
 public:
  CensusBuilder() = default;
  explicit CensusBuilder(int genus) : genus_(genus) {}

  // Throws std::invalid_argument on a non-maximal word or mixed genus.
  // Returns true when the word opens a new class.
  bool add(const WicksWord& word);
  void merge(const CensusBuilder& other);
  bool contains(const std::string& canonical) const { return seen_.count(canonical) != 0; }
  std::size_t size() const { return seen_.size(); }

  Census finish() const;

 private:
  int genus_ = 0;
  std::uint64_t source_words_ = 0;
  std::map<std::string, WicksWord> seen_;
};

Census build_census(std::span<const WicksWord> words);

// Census record stream. JSON is one object per line: a class record per
// class in canonical order, then a summary record.
inline constexpr int kCensusFormatVersion = 1;
void write_census_json(std::ostream& out, const Census& census);
void write_census_csv(std::ostream& out, const Census& census);
void write_census_text(std::ostream& out, const Census& census);

}  // namespace wicks
