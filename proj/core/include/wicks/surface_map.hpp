#pragma once

// The embedded graph obtained by gluing the sides of the 2e-gon.
//
// Corner k sits between letters k and k+1 of the word. Gluing side i to its
// partner side p(i) identifies the start of side i with the end of p(i), so
// the corner permutation is sigma(k) = p(k + 1). Its cycles are the vertices,
// listed in the rotational order of the oriented surface.

#include <span>
#include <vector>

#include "wicks/word.hpp"

namespace wicks {

enum class VertexSign { Positive, Negative, Unsigned };

const char* to_string(VertexSign sign);

struct EdgeEnds {
  int tail = -1;
  int head = -1;
};

class SurfaceMap {
 public:
  explicit SurfaceMap(const WicksWord& word);

  int edge_count() const { return edge_count_; }
  int vertex_count() const { return static_cast<int>(cycles_.size()); }
  int genus() const { return genus_; }

  // Vertices are numbered by their smallest corner; each cycle starts there.
  const std::vector<std::vector<int>>& vertex_cycles() const { return cycles_; }
  std::span<const int> corners(int vertex) const { return cycles_[static_cast<std::size_t>(vertex)]; }
  int degree(int vertex) const { return static_cast<int>(corners(vertex).size()); }
  int vertex_of_corner(int corner) const { return corner_vertex_[static_cast<std::size_t>(corner)]; }
  int corner_successor(int corner) const { return sigma_[static_cast<std::size_t>(corner)]; }

  // Neighbouring vertex per incident edge end, sorted (a multiset).
  std::span<const int> neighbors(int vertex) const { return adjacency_[static_cast<std::size_t>(vertex)]; }
  // Distinct neighbours, sorted.
  std::vector<int> distinct_neighbors(int vertex) const;
  bool adjacent(int u, int v) const;

  EdgeEnds edge_ends(int id) const { return ends_[static_cast<std::size_t>(id)]; }

 private:
  int edge_count_ = 0;
  int genus_ = 0;
  std::vector<int> sigma_;
  std::vector<int> corner_vertex_;
  std::vector<std::vector<int>> cycles_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<EdgeEnds> ends_;
};

SurfaceMap build_surface_map(const WicksWord& word);

int genus(const WicksWord& word);

// Length equals 6(2g-1); equivalently every vertex has degree 3.
bool is_maximal(const WicksWord& word);

struct SignSummary {
  std::vector<VertexSign> signs;  // indexed like SurfaceMap vertices
  int positive = 0;
  int negative = 0;
};

// A degree-3 vertex is positive when its corners, taken in order of
// occurrence along the word, are chained by sigma; otherwise negative.
SignSummary vertex_signs(const SurfaceMap& map);
SignSummary vertex_signs(const WicksWord& word);

}  // namespace wicks
