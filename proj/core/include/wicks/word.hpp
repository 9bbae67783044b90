#pragma once

// Cyclic words over signed letters and the three Wicks conditions.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wicks {

struct Letter {
  int id = 0;
  int sign = 1;  // -1 denotes the inverse letter

  Letter inverse() const { return {id, -sign}; }
  // Total order key: ids numerically, and x before x^-1.
  int key() const { return 2 * id + (sign < 0 ? 1 : 0); }

  friend bool operator==(const Letter&, const Letter&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Raised when a letter sequence breaks condition (i) or has a bad length.
class InvalidWord : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A cyclic word in which every id occurs exactly twice, once with each sign.
// Conditions (ii) and (iii) are not enforced here; see validate().
class WicksWord {
 public:
  explicit WicksWord(std::vector<Letter> letters);

  std::span<const Letter> letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  int edge_count() const { return length() / 2; }
  int max_id() const { return max_id_; }

  const Letter& operator[](int i) const { return letters_[static_cast<std::size_t>(i)]; }
  // Index taken modulo the length, negative values allowed.
  const Letter& cyclic(int i) const;
  int wrap(int i) const;

  // Position of the other occurrence of the id found at `position`.
  int partner(int position) const { return partner_[static_cast<std::size_t>(position)]; }
  // Position holding `letter`; -1 when absent.
  int position_of(Letter letter) const;
  bool contains(int id) const;
  // Distinct ids in increasing order.
  std::vector<int> ids() const;

  friend bool operator==(const WicksWord& a, const WicksWord& b) { return a.letters_ == b.letters_; }

 private:
  std::vector<Letter> letters_;
  std::vector<int> partner_;
  std::vector<int> plus_pos_;
  std::vector<int> minus_pos_;
  int max_id_ = -1;
};

// Maps letter ids to printable names.
using Alphabet = std::vector<std::string>;

// Word grammar: tokens separated by whitespace or commas; each token is an
// identifier [A-Za-z][A-Za-z0-9_]* optionally followed by ' or ^-1.
// Ids are assigned in order of first occurrence; `names` receives the
// identifier of each id when non-null.
WicksWord parse_word(std::string_view text, Alphabet* names = nullptr);

// Default rendering "a1 a2 a1' a2'" (id k prints as a{k+1}).
std::string to_string(const WicksWord& word);
std::string to_string(const WicksWord& word, const Alphabet& names);
std::string letter_name(Letter letter);

WicksWord rotate(const WicksWord& word, int shift);

struct Violation {
  int condition = 0;           // 2 = cancellation, 3 = substitutable pair
  std::vector<int> positions;  // starting positions of the offending factors
  std::string describe() const;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const WicksWord& word);
bool is_wicks_form(const WicksWord& word);

}  // namespace wicks
