#include "wicks/canonical.hpp"

#include <algorithm>

#include "relabel_buffer.hpp"

namespace wicks {

std::vector<Letter> relabel(const WicksWord& word, int start) {
  detail::RelabelBuffer buffer(word);
  buffer.fill(start);
  std::vector<Letter> out;
  out.reserve(buffer.codes().size());
  for (int code : buffer.codes()) out.push_back({code / 2, code % 2 == 0 ? 1 : -1});
  return out;
}

CanonicalForm canonical_form(const WicksWord& word) {
  detail::RelabelBuffer buffer(word);
  std::vector<int> best;
  int best_rotation = 0;
  for (int k = 0; k < word.length(); ++k) {
    buffer.fill(k);
    if (best.empty() || std::lexicographical_compare(buffer.codes().begin(), buffer.codes().end(),
                                                     best.begin(), best.end())) {
      best = buffer.codes();
      best_rotation = k;
    }
  }
  std::vector<Letter> letters;
  letters.reserve(best.size());
  for (int code : best) letters.push_back({code / 2, code % 2 == 0 ? 1 : -1});
  WicksWord canonical(std::move(letters));
  std::string text = to_string(canonical);
  return {std::move(canonical), std::move(text), best_rotation};
}

std::string canonical_string(const WicksWord& word) { return canonical_form(word).text; }

bool equivalent(const WicksWord& a, const WicksWord& b) {
  return a.length() == b.length() && canonical_string(a) == canonical_string(b);
}

}  // namespace wicks
