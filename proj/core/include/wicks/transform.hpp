#pragma once

// Structural rewrites of maximal words: classification of negative vertices,
// reductions to genus g-1, alpha/beta/gamma constructions to genus g+1, and
// IH-transformations.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "wicks/word.hpp"

namespace wicks {

enum class NegativeVertexType { Alpha, Beta, Gamma };
enum class IHKind { Type1, Type2a, Type2b };
enum class ConstructionKind { Alpha, Beta, Gamma };

const char* to_string(NegativeVertexType type);
const char* to_string(IHKind kind);
const char* to_string(ConstructionKind kind);

// Alpha: two distinct neighbours, adjacent to each other.
// Beta: two distinct neighbours, not adjacent.
// Gamma: three distinct neighbours.
// `vertex` indexes SurfaceMap vertices. Requires a maximal word of genus > 1
// and a negative vertex; throws std::invalid_argument otherwise.
NegativeVertexType classify_negative_vertex(const WicksWord& word, int vertex);

// Deletes the negative vertex with its three edges, then repeatedly drops
// leaves and suppresses degree-2 vertices. The boundary word of the result
// is a maximal word of genus g-1 (checked; std::logic_error otherwise).
WicksWord reduce(const WicksWord& word, int negative_vertex);

struct Construction {
  ConstructionKind kind;
  // Positions split in turn: the first indexes the base word, later ones
  // index the word after the earlier splits.
  std::vector<int> splits;
  WicksWord word;
};

// Every alpha, beta and gamma substitution on a maximal word of genus g,
// keeping the candidates that are maximal Wicks forms of genus g+1. The
// visitor sees candidates in a fixed order (kind, then split positions
// ascending). Duplicates are not removed.
void for_each_construction(const WicksWord& word, const std::function<void(const Construction&)>& visit);
std::vector<Construction> construct_all(const WicksWord& word);

// IH-transformation on the edge `edge_id`. Throws std::invalid_argument when
// the edge is absent.
std::pair<IHKind, WicksWord> ih_transform(const WicksWord& word, int edge_id);

}  // namespace wicks
