#pragma once

#include <optional>
#include <vector>

#include "wicks/word.hpp"

namespace wicks::detail {

// Mutable combinatorial map on the darts of a one-face word.
//
// Dart i is side i of the polygon traversed along the word. alpha pairs the
// two darts of an edge; sigma rotates darts around their start vertex, with
// sigma(j) = alpha(j) + 1 on the original word so that the face permutation
// sigma * alpha is i -> i + 1.
class DartMap {
 public:
  explicit DartMap(const WicksWord& word);

  // Darts leaving the vertex whose corners are given.
  static std::vector<int> darts_at_corners(const WicksWord& word, const std::vector<int>& corners);

  void delete_edge(int dart);
  // Removes leaves and suppresses degree-2 vertices until none remain.
  // Returns false when a vertex-free cycle would appear.
  bool simplify();

  int face_count() const;
  // Reads the boundary word of the single face, with first-occurrence ids.
  std::optional<WicksWord> face_word() const;

 private:
  int degree_at(int dart) const;

  std::vector<int> alpha_;
  std::vector<int> sigma_;
  std::vector<int> sigma_inv_;
  std::vector<bool> alive_;
};

}  // namespace wicks::detail
