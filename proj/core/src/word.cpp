#include "wicks/word.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace wicks {

WicksWord::WicksWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  const std::size_t n = letters_.size();
  if (n < 4 || n % 2 != 0) {
    throw InvalidWord("word length must be even and at least 4, got " + std::to_string(n));
  }
  for (const Letter& l : letters_) {
    if (l.id < 0) throw InvalidWord("negative letter id");
    if (l.sign != 1 && l.sign != -1) throw InvalidWord("letter sign must be +1 or -1");
    max_id_ = std::max(max_id_, l.id);
  }
  const auto slots = static_cast<std::size_t>(max_id_) + 1;
  plus_pos_.assign(slots, -1);
  minus_pos_.assign(slots, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const Letter& l = letters_[i];
    auto& slot = l.sign > 0 ? plus_pos_[static_cast<std::size_t>(l.id)]
                            : minus_pos_[static_cast<std::size_t>(l.id)];
    if (slot != -1) {
      throw InvalidWord("condition (i): letter " + letter_name(l) + " occurs twice with the same sign");
    }
    slot = static_cast<int>(i);
  }
  partner_.assign(n, -1);
  for (std::size_t id = 0; id < slots; ++id) {
    const int p = plus_pos_[id];
    const int m = minus_pos_[id];
    if ((p == -1) != (m == -1)) {
      throw InvalidWord("condition (i): letter " + letter_name({static_cast<int>(id), 1}) +
                        " occurs only once");
    }
    if (p != -1) {
      partner_[static_cast<std::size_t>(p)] = m;
      partner_[static_cast<std::size_t>(m)] = p;
    }
  }
}

int WicksWord::wrap(int i) const {
  const int n = length();
  return ((i % n) + n) % n;
}

const Letter& WicksWord::cyclic(int i) const { return letters_[static_cast<std::size_t>(wrap(i))]; }

int WicksWord::position_of(Letter letter) const {
  if (letter.id < 0 || letter.id > max_id_) return -1;
  const auto id = static_cast<std::size_t>(letter.id);
  return letter.sign > 0 ? plus_pos_[id] : minus_pos_[id];
}

bool WicksWord::contains(int id) const { return position_of({id, 1}) != -1; }

std::vector<int> WicksWord::ids() const {
  std::vector<int> out;
  for (int id = 0; id <= max_id_; ++id) {
    if (plus_pos_[static_cast<std::size_t>(id)] != -1) out.push_back(id);
  }
  return out;
}

std::string letter_name(Letter letter) {
  std::string s = "a" + std::to_string(letter.id + 1);
  if (letter.sign < 0) s += '\'';
  return s;
}

std::string to_string(const WicksWord& word) {
  std::string out;
  for (const Letter& l : word.letters()) {
    if (!out.empty()) out += ' ';
    out += letter_name(l);
  }
  return out;
}

std::string to_string(const WicksWord& word, const Alphabet& names) {
  std::string out;
  for (const Letter& l : word.letters()) {
    if (!out.empty()) out += ' ';
    const auto id = static_cast<std::size_t>(l.id);
    out += id < names.size() ? names[id] : letter_name({l.id, 1});
    if (l.sign < 0) out += '\'';
  }
  return out;
}

WicksWord parse_word(std::string_view text, Alphabet* names) {
  std::unordered_map<std::string, int> ids;
  Alphabet local_names;
  std::vector<Letter> letters;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto is_sep = [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == ','; };
  while (i < n) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (!std::isalpha(static_cast<unsigned char>(text[i]))) {
      throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
    }
    while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
    std::string name(text.substr(start, i - start));
    int sign = 1;
    if (i < n && text[i] == '\'') {
      sign = -1;
      ++i;
    } else if (i < n && text[i] == '^') {
      if (text.substr(i, 3) != "^-1") throw ParseError("expected ^-1", i);
      sign = -1;
      i += 3;
    }
    if (i < n && !is_sep(text[i])) {
      throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
    }
    auto [it, inserted] = ids.try_emplace(name, static_cast<int>(local_names.size()));
    if (inserted) local_names.push_back(name);
    letters.push_back({it->second, sign});
  }
  if (letters.empty()) throw ParseError("empty word", 0);
  std::vector<int> plus(local_names.size(), 0);
  std::vector<int> minus(local_names.size(), 0);
  for (const Letter& l : letters) ++(l.sign > 0 ? plus : minus)[static_cast<std::size_t>(l.id)];
  for (std::size_t id = 0; id < local_names.size(); ++id) {
    if (plus[id] != 1 || minus[id] != 1) {
      throw InvalidWord("condition (i): symbol " + local_names[id] + " occurs " +
                        std::to_string(plus[id]) + " time(s) as itself and " +
                        std::to_string(minus[id]) + " time(s) inverted");
    }
  }
  WicksWord word(std::move(letters));
  if (names) *names = std::move(local_names);
  return word;
}

WicksWord rotate(const WicksWord& word, int shift) {
  const int n = word.length();
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(word.cyclic(i + shift));
  return WicksWord(std::move(out));
}

std::string Violation::describe() const {
  std::string where;
  for (int p : positions) {
    if (!where.empty()) where += ",";
    where += std::to_string(p);
  }
  if (condition == 2) return "condition (ii): cancelling factor at position " + where;
  return "condition (iii): factor and its inverse at positions " + where;
}

ValidationReport validate(const WicksWord& word) {
  ValidationReport report;
  const int n = word.length();
  for (int i = 0; i < n; ++i) {
    if (word.cyclic(i + 1) == word[i].inverse()) {
      report.violations.push_back({2, {i}});
    }
  }
  for (int i = 0; i < n; ++i) {
    const Letter x = word[i];
    const Letter y = word.cyclic(i + 1);
    if (y == x.inverse()) continue;
    const int j = word.position_of(y.inverse());
    if (j > i && word.cyclic(j + 1) == x.inverse()) {
      report.violations.push_back({3, {i, j}});
    }
  }
  return report;
}

bool is_wicks_form(const WicksWord& word) { return validate(word).ok(); }

}  // namespace wicks
