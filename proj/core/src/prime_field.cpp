#include "prime_field.hpp"

#include <utility>

namespace wicks::detail {

namespace {

int inverse_mod(int a, int p) {
  // p is tiny, so a linear search is fine.
  for (int x = 1; x < p; ++x) {
    if ((a * x) % p == 1) return x;
  }
  return 0;
}

}  // namespace

int rank_mod(Matrix rows, int p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (auto& row : rows) {
    for (int& v : row) v = reduce_mod(v, p);
  }
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    auto& top = rows[static_cast<std::size_t>(rank)];
    const int inv = inverse_mod(top[c], p);
    for (int& v : top) v = (v * inv) % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) continue;
      const int factor = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] = reduce_mod(rows[r][k] - factor * top[k], p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace wicks::detail
