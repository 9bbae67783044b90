#pragma once

// Two independent routes to the maximal words of small genus: exhaustive
// polygon gluing, and recursive alpha/beta/gamma construction.

#include <cstdint>
#include <functional>
#include <stdexcept>

#include "wicks/census.hpp"
#include "wicks/word.hpp"

namespace wicks {

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxGluingGenus = 2;
inline constexpr int kMaxRecursiveGenus = 3;

struct GluingStats {
  std::uint64_t nodes = 0;     // partial matchings visited
  std::uint64_t complete = 0;  // complete matchings reached after pruning
  std::uint64_t emitted = 0;
};

// Perfect matchings of the 12g-6 polygon sides, each matched pair carrying a
// letter (first occurrence) and its inverse. Partial matchings are pruned as
// soon as a cancellation, a substitutable pair, or a vertex of degree other
// than 3 is forced. Words reach `sink` in a deterministic order regardless of
// `jobs`. Throws CapacityError for g > kMaxGluingGenus.
GluingStats enumerate_gluings(int g, const std::function<void(const WicksWord&)>& sink, int jobs = 1);

Census gluing_census(int g, int jobs = 1);

// Census at genus g_target built from the genus-1 word by construct_all with
// deduplication at every level. Throws CapacityError past kMaxRecursiveGenus.
Census generate_recursive(int g_target);

// Canonical representatives per level, genus 1..g_target.
std::vector<std::vector<WicksWord>> recursive_levels(int g_target);

// a1 a2 a3 a1' a2' a3'
WicksWord genus_one_word();

}  // namespace wicks
