#pragma once

// Canonical representatives of cyclic words up to rotation and relabeling.
//
// A relabeling is a bijection of the alphabet commuting with inversion, so a
// letter may be sent to an inverse letter. Scanning a linear word and giving
// each new id the next fresh id with sign +1 at its first occurrence picks a
// unique representative of its relabeling class; the least such
// representative over all rotations is the canonical form. Reversal is not
// applied: equivalence is orientation preserving.

#include <string>
#include <vector>

#include "wicks/word.hpp"

namespace wicks {

// First-occurrence relabeling of the word read from position `start`.
std::vector<Letter> relabel(const WicksWord& word, int start = 0);

struct CanonicalForm {
  WicksWord word;
  std::string text;
  int rotation = 0;  // smallest rotation realizing the minimum
};

CanonicalForm canonical_form(const WicksWord& word);
std::string canonical_string(const WicksWord& word);

bool equivalent(const WicksWord& a, const WicksWord& b);

}  // namespace wicks
