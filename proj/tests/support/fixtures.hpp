#pragma once

#include <vector>

#include "wicks/enumerate.hpp"
#include "wicks/word.hpp"

namespace wicks::testing {

inline constexpr const char* kExampleWord = "a b c d e a' f b' e' g h c' f' i g' d' h' i'";

// Canonical class representatives for genus 1, 2, 3, computed once.
inline const std::vector<std::vector<WicksWord>>& census_levels() {
  static const auto levels = recursive_levels(3);
  return levels;
}

inline const std::vector<WicksWord>& classes_of_genus(int g) {
  return census_levels().at(static_cast<std::size_t>(g - 1));
}

}  // namespace wicks::testing
