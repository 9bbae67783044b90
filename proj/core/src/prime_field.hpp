#pragma once

#include <vector>

namespace wicks::detail {

using Matrix = std::vector<std::vector<int>>;

// Rank over Z/p, p prime. Entries may be any integers; rows must share a length.
int rank_mod(Matrix rows, int p);

inline int reduce_mod(long value, int p) { return static_cast<int>(((value % p) + p) % p); }

}  // namespace wicks::detail
