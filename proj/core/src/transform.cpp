#include "wicks/transform.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "dart_map.hpp"
#include "wicks/surface_map.hpp"

namespace wicks {

const char* to_string(NegativeVertexType type) {
  switch (type) {
    case NegativeVertexType::Alpha:
      return "alpha";
    case NegativeVertexType::Beta:
      return "beta";
    case NegativeVertexType::Gamma:
      break;
  }
  return "gamma";
}

const char* to_string(IHKind kind) {
  switch (kind) {
    case IHKind::Type1:
      return "1";
    case IHKind::Type2a:
      return "2a";
    case IHKind::Type2b:
      break;
  }
  return "2b";
}

const char* to_string(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::Alpha:
      return "alpha";
    case ConstructionKind::Beta:
      return "beta";
    case ConstructionKind::Gamma:
      break;
  }
  return "gamma";
}

namespace {

void require_maximal(const SurfaceMap& map, const WicksWord& word, int min_genus) {
  if (word.length() != 6 * (2 * map.genus() - 1)) {
    throw std::invalid_argument("word is not maximal");
  }
  if (map.genus() < min_genus) {
    throw std::invalid_argument("word has genus " + std::to_string(map.genus()) + ", need at least " +
                                std::to_string(min_genus));
  }
}

void require_negative(const SurfaceMap& map, int vertex) {
  if (vertex < 0 || vertex >= map.vertex_count()) {
    throw std::invalid_argument("no vertex " + std::to_string(vertex));
  }
  if (vertex_signs(map).signs[static_cast<std::size_t>(vertex)] != VertexSign::Negative) {
    throw std::invalid_argument("vertex " + std::to_string(vertex) + " is not negative");
  }
}

bool is_maximal_of_genus(const WicksWord& word, int g) {
  if (word.length() != 6 * (2 * g - 1)) return false;
  if (!is_wicks_form(word)) return false;
  return SurfaceMap(word).genus() == g;
}

// Smallest ids not in use; ids released by a split are reused.
class IdPool {
 public:
  explicit IdPool(const std::vector<int>& used) {
    for (int id : used) mark(id, true);
  }
  int take() {
    auto it = std::find(used_.begin(), used_.end(), false);
    const int id = static_cast<int>(it - used_.begin());
    mark(id, true);
    return id;
  }
  void release(int id) { mark(id, false); }

 private:
  void mark(int id, bool value) {
    if (static_cast<std::size_t>(id) >= used_.size()) used_.resize(static_cast<std::size_t>(id) + 1, false);
    used_[static_cast<std::size_t>(id)] = value;
  }
  std::vector<bool> used_;
};

struct Token {
  Letter letter;
  int gap = -1;  // >= 0 marks an insertion point
};

struct Draft {
  std::vector<Token> tokens;
  IdPool pool;
};

// Subdivides the edge at the given letter index (gaps not counted) and
// leaves an insertion point between the two halves on that side.
Draft split(const Draft& in, int letter_index, int gap_label) {
  Draft out{{}, in.pool};
  int seen = -1;
  std::size_t q = 0;
  for (; q < in.tokens.size(); ++q) {
    if (in.tokens[q].gap < 0 && ++seen == letter_index) break;
  }
  const Letter l = in.tokens[q].letter;
  out.pool.release(l.id);
  const int u = out.pool.take();
  const int v = out.pool.take();
  out.tokens.reserve(in.tokens.size() + 3);
  for (std::size_t i = 0; i < in.tokens.size(); ++i) {
    const Token& t = in.tokens[i];
    if (i == q) {
      out.tokens.push_back({{u, l.sign}});
      out.tokens.push_back({{}, gap_label});
      out.tokens.push_back({{v, l.sign}});
    } else if (t.gap < 0 && t.letter.id == l.id) {
      out.tokens.push_back({{v, -l.sign}});
      out.tokens.push_back({{u, -l.sign}});
    } else {
      out.tokens.push_back(t);
    }
  }
  return out;
}

int letter_count(const Draft& d) {
  return static_cast<int>(std::count_if(d.tokens.begin(), d.tokens.end(), [](const Token& t) { return t.gap < 0; }));
}

// Block symbols: symbol index and sign, mapped to fresh ids on insertion.
using Block = std::vector<std::pair<int, int>>;

std::vector<Letter> fill_blocks(Draft& d, const std::vector<Block>& blocks, int symbols) {
  std::vector<int> fresh;
  for (int k = 0; k < symbols; ++k) fresh.push_back(d.pool.take());
  std::vector<Letter> out;
  for (const Token& t : d.tokens) {
    if (t.gap < 0) {
      out.push_back(t.letter);
      continue;
    }
    for (auto [sym, sign] : blocks[static_cast<std::size_t>(t.gap)]) {
      out.push_back({fresh[static_cast<std::size_t>(sym)], sign});
    }
  }
  return out;
}

// Cuts the cyclic word at three insertion points X < Y < Z and reassembles
// the arcs in reverse cyclic order joined by the corners of a new vertex.
std::vector<Letter> gamma_assemble(Draft& d) {
  std::array<std::size_t, 3> gaps{};
  int found = 0;
  for (std::size_t i = 0; i < d.tokens.size(); ++i) {
    if (d.tokens[i].gap >= 0) gaps[static_cast<std::size_t>(found++)] = i;
  }
  const int a = d.pool.take();
  const int b = d.pool.take();
  const int c = d.pool.take();
  auto arc = [&](std::size_t from, std::size_t to, std::vector<Letter>& out) {
    for (std::size_t i = from; i < to; ++i) out.push_back(d.tokens[i].letter);
  };
  std::vector<Letter> out;
  arc(gaps[2] + 1, d.tokens.size(), out);  // arc Z..X
  arc(0, gaps[0], out);
  out.push_back({a, 1});
  out.push_back({b, -1});
  arc(gaps[1] + 1, gaps[2], out);  // arc Y..Z
  out.push_back({c, 1});
  out.push_back({a, -1});
  arc(gaps[0] + 1, gaps[1], out);  // arc X..Y
  out.push_back({b, 1});
  out.push_back({c, -1});
  return out;
}

const std::vector<Block> kAlphaBlocks = {
    {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {1, -1}, {4, 1}, {2, -1}, {3, -1}, {4, -1}, {0, -1}}};
const std::vector<Block> kBetaBlocks = {
    {{0, 1}, {1, 1}, {2, 1}, {0, -1}},
    {{3, 1}, {1, -1}, {2, -1}, {3, -1}}};

}  // namespace

NegativeVertexType classify_negative_vertex(const WicksWord& word, int vertex) {
  const SurfaceMap map(word);
  require_maximal(map, word, 2);
  require_negative(map, vertex);
  const std::vector<int> nbrs = map.distinct_neighbors(vertex);
  if (nbrs.size() == 3) return NegativeVertexType::Gamma;
  if (nbrs.size() == 2) {
    return map.adjacent(nbrs[0], nbrs[1]) ? NegativeVertexType::Alpha : NegativeVertexType::Beta;
  }
  throw std::logic_error("negative vertex with a single neighbour in genus > 1");
}

WicksWord reduce(const WicksWord& word, int negative_vertex) {
  const SurfaceMap map(word);
  require_maximal(map, word, 2);
  require_negative(map, negative_vertex);
  detail::DartMap darts(word);
  const auto& corners = map.vertex_cycles()[static_cast<std::size_t>(negative_vertex)];
  for (int d : detail::DartMap::darts_at_corners(word, corners)) darts.delete_edge(d);
  if (!darts.simplify()) throw std::logic_error("reduction left a vertex-free cycle");
  std::optional<WicksWord> result = darts.face_word();
  if (!result) throw std::logic_error("reduction did not produce a one-face map");
  if (!is_maximal_of_genus(*result, map.genus() - 1)) {
    throw std::logic_error("reduction produced " + to_string(*result) + ", not a maximal word of genus " +
                           std::to_string(map.genus() - 1));
  }
  return *std::move(result);
}

void for_each_construction(const WicksWord& word, const std::function<void(const Construction&)>& visit) {
  const SurfaceMap map(word);
  require_maximal(map, word, 1);
  const int target = map.genus() + 1;

  Draft base{{}, IdPool(word.ids())};
  for (const Letter& l : word.letters()) base.tokens.push_back({l});

  auto emit = [&](ConstructionKind kind, std::vector<int> splits, std::vector<Letter> letters) {
    WicksWord candidate(std::move(letters));
    if (!is_maximal_of_genus(candidate, target)) return;
    visit(Construction{kind, std::move(splits), std::move(candidate)});
  };

  const int n = word.length();
  for (int p = 0; p < n; ++p) {
    Draft d = split(base, p, 0);
    emit(ConstructionKind::Alpha, {p}, fill_blocks(d, kAlphaBlocks, 5));
  }
  for (int p = 0; p < n; ++p) {
    const Draft d1 = split(base, p, 0);
    for (int q = 0; q < letter_count(d1); ++q) {
      Draft d2 = split(d1, q, 1);
      emit(ConstructionKind::Beta, {p, q}, fill_blocks(d2, kBetaBlocks, 4));
    }
  }
  for (int p = 0; p < n; ++p) {
    const Draft d1 = split(base, p, 0);
    for (int q = 0; q < letter_count(d1); ++q) {
      const Draft d2 = split(d1, q, 1);
      for (int r = 0; r < letter_count(d2); ++r) {
        Draft d3 = split(d2, r, 2);
        emit(ConstructionKind::Gamma, {p, q, r}, gamma_assemble(d3));
      }
    }
  }
}

std::vector<Construction> construct_all(const WicksWord& word) {
  std::vector<Construction> out;
  for_each_construction(word, [&](const Construction& c) { out.push_back(c); });
  return out;
}

std::pair<IHKind, WicksWord> ih_transform(const WicksWord& word, int edge_id) {
  if (!word.contains(edge_id)) {
    throw std::invalid_argument("edge " + letter_name({edge_id, 1}) + " is not in the word");
  }
  const SurfaceMap map(word);
  require_maximal(map, word, 1);
  const int n = word.length();
  const int i = word.position_of({edge_id, 1});
  const int j = word.position_of({edge_id, -1});
  const Letter a = word.cyclic(i - 1);
  const Letter b = word.cyclic(i + 1);
  const Letter c = word.cyclic(j - 1);
  const Letter d = word.cyclic(j + 1);

  std::vector<int> remaining;
  for (int id : word.ids()) {
    if (id != edge_id) remaining.push_back(id);
  }
  const int y = IdPool(remaining).take();

  IHKind kind;
  std::vector<Letter> out(word.letters().begin(), word.letters().end());
  if (c == a.inverse()) {
    // b' a x b, d' a' x' d  ->  b' y a b, d' y' a' d
    kind = IHKind::Type2a;
    out[static_cast<std::size_t>(word.wrap(i - 1))] = {y, 1};
    out[static_cast<std::size_t>(i)] = a;
    out[static_cast<std::size_t>(word.wrap(j - 1))] = {y, -1};
    out[static_cast<std::size_t>(j)] = a.inverse();
  } else if (d == b.inverse()) {
    // a x b a', c x' b' c'  ->  a b y a', c b' y' c'
    kind = IHKind::Type2b;
    out[static_cast<std::size_t>(i)] = b;
    out[static_cast<std::size_t>(word.wrap(i + 1))] = {y, 1};
    out[static_cast<std::size_t>(j)] = b.inverse();
    out[static_cast<std::size_t>(word.wrap(j + 1))] = {y, -1};
  } else {
    // axb -> ab, cx'd -> cd, d'a' -> d'ya', b'c' -> b'y'c'
    kind = IHKind::Type1;
    out.clear();
    int inserted_y = 0;
    int inserted_y_inv = 0;
    for (int k = 0; k < n; ++k) {
      if (k == i || k == j) continue;
      const Letter cur = word[k];
      out.push_back(cur);
      const Letter next = word.cyclic(k + 1);
      if (cur == d.inverse() && next == a.inverse()) {
        out.push_back({y, 1});
        ++inserted_y;
      }
      if (cur == b.inverse() && next == c.inverse()) {
        out.push_back({y, -1});
        ++inserted_y_inv;
      }
    }
    if (inserted_y != 1 || inserted_y_inv != 1) {
      throw std::logic_error("IH-transformation: factors d'a' and b'c' not found around edge " +
                             letter_name({edge_id, 1}));
    }
  }
  WicksWord result(std::move(out));
  if (!is_maximal_of_genus(result, map.genus())) {
    throw std::logic_error("IH-transformation produced " + to_string(result) + ", not maximal of genus " +
                           std::to_string(map.genus()));
  }
  return {kind, std::move(result)};
}

}  // namespace wicks
