#include "dart_map.hpp"

namespace wicks::detail {

DartMap::DartMap(const WicksWord& word) {
  const int n = word.length();
  alpha_.resize(static_cast<std::size_t>(n));
  sigma_.resize(static_cast<std::size_t>(n));
  sigma_inv_.resize(static_cast<std::size_t>(n));
  alive_.assign(static_cast<std::size_t>(n), true);
  for (int i = 0; i < n; ++i) alpha_[static_cast<std::size_t>(i)] = word.partner(i);
  for (int j = 0; j < n; ++j) {
    const int next = word.wrap(alpha_[static_cast<std::size_t>(j)] + 1);
    sigma_[static_cast<std::size_t>(j)] = next;
    sigma_inv_[static_cast<std::size_t>(next)] = j;
  }
}

std::vector<int> DartMap::darts_at_corners(const WicksWord& word, const std::vector<int>& corners) {
  std::vector<int> out;
  out.reserve(corners.size());
  for (int c : corners) out.push_back(word.wrap(c + 1));
  return out;
}

void DartMap::delete_edge(int dart) {
  const int other = alpha_[static_cast<std::size_t>(dart)];
  for (int d : {dart, other}) {
    const auto du = static_cast<std::size_t>(d);
    if (!alive_[du]) continue;
    const int prev = sigma_inv_[du];
    const int next = sigma_[du];
    if (next != d) {
      sigma_[static_cast<std::size_t>(prev)] = next;
      sigma_inv_[static_cast<std::size_t>(next)] = prev;
    }
    alive_[du] = false;
  }
}

int DartMap::degree_at(int dart) const {
  int deg = 1;
  for (int d = sigma_[static_cast<std::size_t>(dart)]; d != dart; d = sigma_[static_cast<std::size_t>(d)]) ++deg;
  return deg;
}

bool DartMap::simplify() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t du = 0; du < alive_.size(); ++du) {
      if (!alive_[du]) continue;
      const int d = static_cast<int>(du);
      const int deg = degree_at(d);
      if (deg == 1) {
        delete_edge(d);
        changed = true;
      } else if (deg == 2) {
        const int e = sigma_[du];
        const int ad = alpha_[du];
        const int ae = alpha_[static_cast<std::size_t>(e)];
        if (ad == e) return false;
        alive_[du] = false;
        alive_[static_cast<std::size_t>(e)] = false;
        alpha_[static_cast<std::size_t>(ad)] = ae;
        alpha_[static_cast<std::size_t>(ae)] = ad;
        changed = true;
      }
    }
  }
  return true;
}

int DartMap::face_count() const {
  std::vector<bool> seen(alive_.size(), false);
  int faces = 0;
  for (std::size_t du = 0; du < alive_.size(); ++du) {
    if (!alive_[du] || seen[du]) continue;
    ++faces;
    int d = static_cast<int>(du);
    while (!seen[static_cast<std::size_t>(d)]) {
      seen[static_cast<std::size_t>(d)] = true;
      d = sigma_[static_cast<std::size_t>(alpha_[static_cast<std::size_t>(d)])];
    }
  }
  return faces;
}

std::optional<WicksWord> DartMap::face_word() const {
  int start = -1;
  for (std::size_t du = 0; du < alive_.size(); ++du) {
    if (alive_[du]) {
      start = static_cast<int>(du);
      break;
    }
  }
  if (start < 0 || face_count() != 1) return std::nullopt;
  std::vector<int> label(alive_.size(), -1);
  std::vector<Letter> letters;
  int next_id = 0;
  int d = start;
  do {
    const auto du = static_cast<std::size_t>(d);
    const auto au = static_cast<std::size_t>(alpha_[du]);
    if (label[au] != -1) {
      letters.push_back({label[au], -1});
    } else {
      label[du] = next_id;
      letters.push_back({next_id, 1});
      ++next_id;
    }
    d = sigma_[au];
  } while (d != start);
  try {
    return WicksWord(std::move(letters));
  } catch (const InvalidWord&) {
    return std::nullopt;
  }
}

}  // namespace wicks::detail
