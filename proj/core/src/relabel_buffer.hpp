#pragma once

#include <algorithm>
#include <vector>

#include "wicks/word.hpp"

namespace wicks::detail {

// Reusable scratch space for first-occurrence relabeling. Codes are
// 2 * new_id + (inverse ? 1 : 0), which orders letters as the canonical
// tie-break requires.
class RelabelBuffer {
 public:
  explicit RelabelBuffer(const WicksWord& word)
      : word_(word),
        map_(static_cast<std::size_t>(word.max_id() + 1), -1),
        codes_(static_cast<std::size_t>(word.length())) {}

  void fill(int start) {
    std::fill(map_.begin(), map_.end(), -1);
    int next = 0;
    const int n = word_.length();
    for (int i = 0; i < n; ++i) {
      const Letter l = word_.cyclic(start + i);
      int& slot = map_[static_cast<std::size_t>(l.id)];
      if (slot == -1) {
        // The first occurrence becomes the positive letter.
        slot = 2 * next + (l.sign < 0 ? 1 : 0);
        ++next;
      }
      const int base = slot & ~1;
      const bool flip = (slot & 1) != 0;
      const bool inverse = (l.sign < 0) != flip;
      codes_[static_cast<std::size_t>(i)] = base + (inverse ? 1 : 0);
    }
  }

  const std::vector<int>& codes() const { return codes_; }

 private:
  const WicksWord& word_;
  std::vector<int> map_;
  std::vector<int> codes_;
};

}  // namespace wicks::detail
