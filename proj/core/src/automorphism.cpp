#include "wicks/automorphism.hpp"

#include <numeric>
#include <stdexcept>

#include "relabel_buffer.hpp"
#include "wicks/surface_map.hpp"

namespace wicks {

AutGroup automorphisms(const WicksWord& word) {
  detail::RelabelBuffer buffer(word);
  buffer.fill(0);
  const std::vector<int> base = buffer.codes();
  AutGroup group;
  group.word_length = word.length();
  for (int k = 0; k < word.length(); ++k) {
    buffer.fill(k);
    if (buffer.codes() == base) group.member_shifts.push_back(k);
  }
  group.order = static_cast<int>(group.member_shifts.size());
  group.generator_shift = group.order > 1 ? group.member_shifts[1] : 0;
  return group;
}

bool is_automorphism(const WicksWord& word, int shift) {
  detail::RelabelBuffer buffer(word);
  buffer.fill(0);
  const std::vector<int> base = buffer.codes();
  buffer.fill(word.wrap(shift));
  return buffer.codes() == base;
}

int rotation_order(int length, int shift) {
  const int k = ((shift % length) + length) % length;
  return length / std::gcd(length, k == 0 ? length : k);
}

Letter apply_rotation(const WicksWord& word, int shift, Letter letter) {
  const int pos = word.position_of(letter);
  if (pos < 0) throw std::invalid_argument("letter not in word");
  return word.cyclic(pos + shift);
}

namespace {

int reversed_edges(const WicksWord& word, int shift) {
  int count = 0;
  for (int k = 0; k < word.length(); ++k) {
    if (word.cyclic(k + shift) == word[k].inverse()) ++count;
  }
  return count / 2;
}

std::pair<int, int> fixed_vertices(const WicksWord& word, int shift) {
  const SurfaceMap map(word);
  const SignSummary signs = vertex_signs(map);
  int s = 0;
  int t = 0;
  for (int v = 0; v < map.vertex_count(); ++v) {
    const int c = map.corners(v).front();
    if (map.vertex_of_corner(word.wrap(c + shift)) != v) continue;
    const VertexSign sign = signs.signs[static_cast<std::size_t>(v)];
    if (sign == VertexSign::Positive) ++s;
    if (sign == VertexSign::Negative) ++t;
  }
  return {s, t};
}

}  // namespace

SymmetryParams SymmetryParams::unscaled() const {
  if (order != 6) return *this;
  return {6, r / 3, s / 2, t / 2};
}

std::string SymmetryParams::to_string() const {
  switch (order) {
    case 2:
      return "r=" + std::to_string(r);
    case 3:
      return "(s,t)=(" + std::to_string(s) + "," + std::to_string(t) + ")";
    case 6:
      return "(" + std::to_string(r) + ";" + std::to_string(s) + "," + std::to_string(t) + ")";
    default:
      return "trivial";
  }
}

SymmetryParams symmetry_parameters(const WicksWord& word, int shift) {
  const int n = word.length();
  const int k = word.wrap(shift);
  if (!is_automorphism(word, k)) {
    throw std::invalid_argument("rotation by " + std::to_string(shift) + " is not an automorphism");
  }
  const int order = rotation_order(n, k);
  SymmetryParams p;
  p.order = order;
  switch (order) {
    case 2:
      p.r = reversed_edges(word, k);
      break;
    case 3: {
      auto [s, t] = fixed_vertices(word, k);
      p.s = s;
      p.t = t;
      break;
    }
    case 6: {
      p.r = reversed_edges(word, 3 * k);
      auto [s, t] = fixed_vertices(word, 2 * k);
      p.s = s;
      p.t = t;
      if (p.r % 3 != 0 || p.s % 2 != 0 || p.t % 2 != 0) {
        throw std::logic_error("order-6 parameters " + p.to_string() + " are not of the form (3r;2s,2t)");
      }
      break;
    }
    default:
      throw std::invalid_argument("automorphism order " + std::to_string(order) + " is not 2, 3 or 6");
  }
  return p;
}

}  // namespace wicks
