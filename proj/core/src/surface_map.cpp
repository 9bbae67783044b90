#include "wicks/surface_map.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace wicks {

const char* to_string(VertexSign sign) {
  switch (sign) {
    case VertexSign::Positive:
      return "positive";
    case VertexSign::Negative:
      return "negative";
    case VertexSign::Unsigned:
      break;
  }
  return "unsigned";
}

SurfaceMap::SurfaceMap(const WicksWord& word) : edge_count_(word.edge_count()) {
  const int n = word.length();
  sigma_.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) sigma_[static_cast<std::size_t>(k)] = word.partner(word.wrap(k + 1));

  corner_vertex_.assign(static_cast<std::size_t>(n), -1);
  for (int k = 0; k < n; ++k) {
    if (corner_vertex_[static_cast<std::size_t>(k)] != -1) continue;
    const int v = static_cast<int>(cycles_.size());
    std::vector<int> cycle;
    for (int c = k; corner_vertex_[static_cast<std::size_t>(c)] == -1; c = sigma_[static_cast<std::size_t>(c)]) {
      corner_vertex_[static_cast<std::size_t>(c)] = v;
      cycle.push_back(c);
    }
    cycles_.push_back(std::move(cycle));
  }

  const int euler = vertex_count() - edge_count_ + 1;  // = 2 - 2g
  if (euler > 2 || (2 - euler) % 2 != 0) {
    throw std::logic_error("Euler characteristic " + std::to_string(euler) + " is not 2 - 2g");
  }
  genus_ = (2 - euler) / 2;

  // Side i runs from corner i-1 to corner i.
  ends_.assign(static_cast<std::size_t>(word.max_id() + 1), EdgeEnds{});
  adjacency_.assign(cycles_.size(), {});
  for (int i = 0; i < n; ++i) {
    const Letter l = word[i];
    if (l.sign < 0) continue;
    const int from = corner_vertex_[static_cast<std::size_t>(word.wrap(i - 1))];
    const int to = corner_vertex_[static_cast<std::size_t>(i)];
    ends_[static_cast<std::size_t>(l.id)] = {from, to};
    adjacency_[static_cast<std::size_t>(from)].push_back(to);
    adjacency_[static_cast<std::size_t>(to)].push_back(from);
  }
  for (auto& a : adjacency_) std::sort(a.begin(), a.end());
}

std::vector<int> SurfaceMap::distinct_neighbors(int vertex) const {
  auto n = neighbors(vertex);
  std::vector<int> out(n.begin(), n.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool SurfaceMap::adjacent(int u, int v) const {
  auto n = neighbors(u);
  return std::binary_search(n.begin(), n.end(), v);
}

SurfaceMap build_surface_map(const WicksWord& word) { return SurfaceMap(word); }

int genus(const WicksWord& word) { return SurfaceMap(word).genus(); }

bool is_maximal(const WicksWord& word) {
  const SurfaceMap map(word);
  return map.genus() >= 1 && word.length() == 6 * (2 * map.genus() - 1);
}

SignSummary vertex_signs(const SurfaceMap& map) {
  SignSummary out;
  out.signs.reserve(static_cast<std::size_t>(map.vertex_count()));
  for (int v = 0; v < map.vertex_count(); ++v) {
    auto corners = map.corners(v);
    if (corners.size() != 3) {
      out.signs.push_back(VertexSign::Unsigned);
      continue;
    }
    std::array<int, 3> sorted{corners[0], corners[1], corners[2]};
    std::sort(sorted.begin(), sorted.end());
    if (map.corner_successor(sorted[0]) == sorted[1]) {
      out.signs.push_back(VertexSign::Positive);
      ++out.positive;
    } else {
      out.signs.push_back(VertexSign::Negative);
      ++out.negative;
    }
  }
  return out;
}

SignSummary vertex_signs(const WicksWord& word) { return vertex_signs(SurfaceMap(word)); }

}  // namespace wicks
