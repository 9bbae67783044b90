#pragma once

#include <string>
#include <vector>

#include "wicks/word.hpp"

namespace wicks {

// Rotations k with relabel(rotate(w, k)) == relabel(w); a subgroup of Z/2eZ.
struct AutGroup {
  int word_length = 0;
  int order = 1;
  int generator_shift = 0;  // smallest positive member, 0 when trivial
  std::vector<int> member_shifts;
};

AutGroup automorphisms(const WicksWord& word);

bool is_automorphism(const WicksWord& word, int shift);

// Order of a rotation by `shift` in Z/nZ.
int rotation_order(int length, int shift);

// Parameters of a rotation automorphism.
//   order 2: r = edges reversed by the rotation.
//   order 3: s, t = fixed positive and negative vertices.
//   order 6: the observed counts of the cube and the square, i.e. the
//            (3r; 2s, 2t) triple. unscaled() divides them out.
struct SymmetryParams {
  int order = 0;
  int r = 0;
  int s = 0;
  int t = 0;

  SymmetryParams unscaled() const;
  std::string to_string() const;

  friend bool operator==(const SymmetryParams&, const SymmetryParams&) = default;
};

// Throws std::invalid_argument when `shift` is not an automorphism of order
// 2, 3 or 6.
SymmetryParams symmetry_parameters(const WicksWord& word, int shift);

// Image of a letter under the relabeling induced by a rotation automorphism:
// the letter at position k goes to the letter at position k + shift.
Letter apply_rotation(const WicksWord& word, int shift, Letter letter);

}  // namespace wicks
