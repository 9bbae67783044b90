#include "wicks/flows.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "prime_field.hpp"
#include "wicks/automorphism.hpp"
#include "wicks/surface_map.hpp"

namespace wicks {

using detail::reduce_mod;

int FlowVector::at(int id) const {
  const auto it = values.find(id);
  return it == values.end() ? 0 : it->second;
}

namespace {

void require_prime(int p) {
  if (p != 2 && p != 3) throw std::invalid_argument("modulus must be 2 or 3, got " + std::to_string(p));
}

// Rows are vertices, columns are the word's ids in increasing order. For
// p = 3 the head of an edge gets +1 and the tail -1.
detail::Matrix incidence(const SurfaceMap& map, const std::vector<int>& ids, int p) {
  detail::Matrix rows(static_cast<std::size_t>(map.vertex_count()), std::vector<int>(ids.size(), 0));
  for (std::size_t c = 0; c < ids.size(); ++c) {
    const EdgeEnds ends = map.edge_ends(ids[c]);
    rows[static_cast<std::size_t>(ends.head)][c] += 1;
    rows[static_cast<std::size_t>(ends.tail)][c] += (p == 2 ? 1 : -1);
  }
  return rows;
}

int column_of(const std::vector<int>& ids, int id) {
  return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
}

struct OrbitLabel {
  int rep = -1;
  int flip = 1;  // letter (id, e) becomes (rep, e * flip)
};

// Orbit labels for ids under the rotation by `shift`, which must divide the
// length. The representative is the smallest id of the orbit.
std::vector<OrbitLabel> orbit_labels(const WicksWord& word, int shift) {
  std::vector<OrbitLabel> labels(static_cast<std::size_t>(word.max_id() + 1));
  const int order = word.length() / shift;
  for (int k = 0; k < shift; ++k) {
    int rep_pos = k;
    for (int m = 1; m < order; ++m) {
      const int pos = k + m * shift;
      if (word[pos].id < word[rep_pos].id) rep_pos = pos;
    }
    for (int m = 0; m < order; ++m) {
      const Letter& l = word[k + m * shift];
      labels[static_cast<std::size_t>(l.id)] = {word[rep_pos].id, l.sign * word[rep_pos].sign};
    }
  }
  return labels;
}

// Removes cyclic factors x x^-1, then (x y, y^-1 x^-1) pairs by deleting the
// candidate x of smallest id, until neither occurs.
void cancel_to_fixed_point(std::vector<Letter>& w) {
  for (;;) {
    const int n = static_cast<int>(w.size());
    if (n == 0) return;
    bool changed = false;
    for (int k = 0; k < n; ++k) {
      const int next = (k + 1) % n;
      if (w[next] == w[k].inverse() && next != k) {
        const int hi = std::max(k, next);
        const int lo = std::min(k, next);
        w.erase(w.begin() + hi);
        w.erase(w.begin() + lo);
        changed = true;
        break;
      }
    }
    if (changed) continue;

    int victim = -1;
    for (int k = 0; k < n; ++k) {
      const Letter x = w[k];
      const Letter y = w[(k + 1) % n];
      for (int j = 0; j < n; ++j) {
        if (w[j] == y.inverse() && w[(j + 1) % n] == x.inverse()) {
          if (victim == -1 || x.id < victim) victim = x.id;
          break;
        }
      }
    }
    if (victim == -1) return;
    std::erase_if(w, [victim](const Letter& l) { return l.id == victim; });
  }
}

// Finalizes a quotient: checks genus, keeps flow values of surviving ids.
void finish_quotient(QuotientData& q, std::vector<Letter> letters, const FlowVector& flow, int expected_genus) {
  cancel_to_fixed_point(letters);
  q.genus = 0;
  if (!letters.empty()) {
    WicksWord reduced(std::move(letters));
    q.genus = genus(reduced);
    FlowVector kept{flow.modulus, {}};
    for (int id : reduced.ids()) kept.values[id] = flow.at(id);
    q.reduced_word = std::move(reduced);
    q.flow = std::move(kept);
  }
  if (q.genus != expected_genus) {
    throw std::logic_error("quotient has genus " + std::to_string(q.genus) + ", expected " +
                           std::to_string(expected_genus));
  }
  if (q.flow && !is_flow(*q.reduced_word, *q.flow)) throw std::logic_error("quotient flow is not conserved");
}

// Records the value for `rep`, checking that every preimage agrees.
void assign(FlowVector& flow, int rep, int value) {
  const auto [it, fresh] = flow.values.try_emplace(rep, value);
  if (!fresh && it->second != value) throw std::logic_error("quotient flow depends on the preimage");
}

}  // namespace

bool is_flow(const WicksWord& word, const FlowVector& flow) {
  require_prime(flow.modulus);
  const SurfaceMap map(word);
  std::vector<long> sums(static_cast<std::size_t>(map.vertex_count()), 0);
  for (int id : word.ids()) {
    const int value = flow.at(id);
    const EdgeEnds ends = map.edge_ends(id);
    sums[static_cast<std::size_t>(ends.head)] += value;
    sums[static_cast<std::size_t>(ends.tail)] += (flow.modulus == 2 ? value : -value);
  }
  return std::all_of(sums.begin(), sums.end(), [&](long s) { return reduce_mod(s, flow.modulus) == 0; });
}

int flow_space_dimension(const WicksWord& word, int p) {
  require_prime(p);
  const SurfaceMap map(word);
  const std::vector<int> ids = word.ids();
  return static_cast<int>(ids.size()) - detail::rank_mod(incidence(map, ids, p), p);
}

QuotientData quotient_by_involution(const WicksWord& word, int shift) {
  const int n = word.length();
  if (!is_maximal(word)) throw std::invalid_argument("quotient requires a maximal word");
  if (2 * shift != n || !is_automorphism(word, shift)) {
    throw std::invalid_argument("shift " + std::to_string(shift) + " is not an involution of the word");
  }
  const int g = genus(word);
  QuotientData q;
  q.order = 2;
  q.r = symmetry_parameters(word, shift).r;

  std::vector<bool> reversed(static_cast<std::size_t>(n), false);
  for (int k = 0; k < n; ++k) reversed[k] = word.cyclic(k + shift) == word[k].inverse();
  std::vector<int> circle(static_cast<std::size_t>(n), 0);
  for (int k = 1; k < n; ++k) circle[k] = circle[k - 1] ^ (reversed[k - 1] ? 1 : 0);

  const auto labels = orbit_labels(word, shift);
  std::vector<Letter> letters;
  FlowVector flow{2, {}};
  for (int k = 0; k < shift; ++k) {
    if (reversed[k]) continue;
    const OrbitLabel& label = labels[static_cast<std::size_t>(word[k].id)];
    letters.push_back({label.rep, word[k].sign * label.flip});
    assign(flow, label.rep, circle[k] ^ circle[word.partner(k)]);
  }
  finish_quotient(q, std::move(letters), flow, (2 * g + 1 - q.r) / 4);
  return q;
}

QuotientData quotient_by_order3(const WicksWord& word, int shift) {
  const int n = word.length();
  if (!is_maximal(word)) throw std::invalid_argument("quotient requires a maximal word");
  if ((3 * shift != n && 3 * shift != 2 * n) || !is_automorphism(word, shift)) {
    throw std::invalid_argument("shift " + std::to_string(shift) + " is not an order-3 automorphism");
  }
  const int g = genus(word);
  if (g < 2) throw std::invalid_argument("order-3 quotient requires genus > 1");
  const SymmetryParams params = symmetry_parameters(word, shift);
  if (params.t != 0) throw std::invalid_argument("order-3 quotient requires no fixed negative vertex");
  QuotientData q;
  q.order = 3;
  q.s = params.s;
  q.t = params.t;

  const SurfaceMap map(word);
  std::vector<bool> fixed(static_cast<std::size_t>(map.vertex_count()), false);
  for (int v = 0; v < map.vertex_count(); ++v) {
    const int c = map.corners(v).front();
    fixed[v] = map.vertex_of_corner((c + shift) % n) == v;
  }
  std::vector<int> circle(static_cast<std::size_t>(n), 0);
  const int step = 3 * shift == n ? 1 : 2;
  for (int k = 1; k < n; ++k) circle[k] = (circle[k - 1] + (fixed[map.vertex_of_corner(k - 1)] ? step : 0)) % 3;

  const int base = std::min(shift, n - shift);
  const auto labels = orbit_labels(word, base);
  std::vector<Letter> letters;
  FlowVector flow{3, {}};
  for (int k = 0; k < base; ++k) {
    const EdgeEnds ends = map.edge_ends(word[k].id);
    if (fixed[ends.head] || fixed[ends.tail]) continue;
    const OrbitLabel& label = labels[static_cast<std::size_t>(word[k].id)];
    const int sign = word[k].sign * label.flip;
    letters.push_back({label.rep, sign});
    assign(flow, label.rep, reduce_mod(sign * (circle[word.partner(k)] - circle[k]), 3));
  }
  finish_quotient(q, std::move(letters), flow, (g + 1 - q.s) / 3);
  return q;
}

int invariant_flow_dimension(const WicksWord& word, int shift, int p) {
  require_prime(p);
  const int n = word.length();
  if (!is_automorphism(word, shift) || rotation_order(n, shift) != 3) {
    throw std::invalid_argument("shift " + std::to_string(shift) + " is not an order-3 automorphism");
  }
  const SurfaceMap map(word);
  const std::vector<int> ids = word.ids();
  detail::Matrix rows = incidence(map, ids, p);
  for (int k = 0; k < n; ++k) {
    if (word[k].sign < 0) continue;
    const Letter image = word.cyclic(k + shift);
    std::vector<int> row(ids.size(), 0);
    row[static_cast<std::size_t>(column_of(ids, image.id))] += 1;
    row[static_cast<std::size_t>(column_of(ids, word[k].id))] -= image.sign;
    rows.push_back(std::move(row));
  }
  return static_cast<int>(ids.size()) - detail::rank_mod(std::move(rows), p);
}

CanonicalFlow canonical_flow(const WicksWord& word, const FlowVector& flow) {
  CanonicalForm form = canonical_form(word);
  const int n = word.length();
  FlowVector out{flow.modulus, {}};
  int next = 0;
  std::vector<bool> seen(static_cast<std::size_t>(word.max_id() + 1), false);
  for (int k = 0; k < n; ++k) {
    const Letter& l = word.cyclic(form.rotation + k);
    if (seen[l.id]) continue;
    seen[l.id] = true;
    // The first occurrence becomes positive, so a negative one flips the edge.
    const int value = flow.at(l.id);
    out.values[next++] = l.sign > 0 ? value : reduce_mod(-value, flow.modulus);
  }
  return {std::move(form), std::move(out)};
}

std::string to_string(const FlowVector& flow) {
  std::string out;
  for (const auto& [id, value] : flow.values) {
    if (!out.empty()) out += ' ';
    out += letter_name({id, 1}) + "=" + std::to_string(value);
  }
  return out;
}

std::string to_string(const FlowVector& flow, const Alphabet& names) {
  std::string out;
  for (const auto& [id, value] : flow.values) {
    if (!out.empty()) out += ' ';
    const std::string name =
        id < static_cast<int>(names.size()) ? names[static_cast<std::size_t>(id)] : letter_name({id, 1});
    out += name + "=" + std::to_string(value);
  }
  return out;
}

}  // namespace wicks
