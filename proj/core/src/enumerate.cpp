#include "wicks/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "wicks/canonical.hpp"
#include "wicks/transform.hpp"

namespace wicks {

namespace {

void require_genus(int g) {
  if (g < 1) throw std::invalid_argument("genus must be at least 1, got " + std::to_string(g));
}

// Depth-first search over matchings. Position k pairs with p[k]; the corner
// permutation sigma(k) = p[k + 1] is built arrow by arrow and every closed
// cycle must have length 3, every open chain at most 2 arrows.
class GluingSearch {
 public:
  explicit GluingSearch(int n)
      : n_(n), partner_(n, -1), sigma_(n, -1), sigma_inv_(n, -1) {}

  // Runs with position 0 fixed to `first_partner`.
  void run(int first_partner, std::vector<WicksWord>& out, GluingStats& stats) {
    out_ = &out;
    stats_ = &stats;
    if (match(0, first_partner)) descend();
    unmatch(0, first_partner);
  }

 private:
  int wrap(int k) const { return (k % n_ + n_) % n_; }

  bool add_arrow(int a, int b) {
    sigma_[a] = b;
    sigma_inv_[b] = a;
    int forward = 1;
    int x = b;
    while (sigma_[x] != -1) {
      x = sigma_[x];
      if (x == b) return forward == 3;
      ++forward;
      if (forward > 3) return false;
    }
    int backward = 0;
    x = a;
    while (sigma_inv_[x] != -1) {
      x = sigma_inv_[x];
      ++backward;
    }
    return forward + backward <= 2;
  }

  void remove_arrow(int a) {
    if (sigma_[a] == -1) return;
    sigma_inv_[sigma_[a]] = -1;
    sigma_[a] = -1;
  }

  // Installs i <-> j; returns false if an arrow breaks the degree rule.
  // unmatch() must be called either way.
  bool match(int i, int j) {
    partner_[i] = j;
    partner_[j] = i;
    ++stats_->nodes;
    if (!add_arrow(wrap(i - 1), j)) return false;
    return add_arrow(wrap(j - 1), i);
  }

  void unmatch(int i, int j) {
    remove_arrow(wrap(i - 1));
    remove_arrow(wrap(j - 1));
    partner_[i] = -1;
    partner_[j] = -1;
  }

  void descend() {
    int i = 0;
    while (i < n_ && partner_[i] != -1) ++i;
    if (i == n_) {
      emit();
      return;
    }
    for (int j = i + 1; j < n_; ++j) {
      if (partner_[j] != -1) continue;
      if (match(i, j)) descend();
      unmatch(i, j);
    }
  }

  void emit() {
    ++stats_->complete;
    std::vector<Letter> letters(static_cast<std::size_t>(n_));
    int next = 0;
    for (int k = 0; k < n_; ++k) {
      if (partner_[k] > k) {
        letters[k] = {next, 1};
        letters[partner_[k]] = {next, -1};
        ++next;
      }
    }
    WicksWord word(std::move(letters));
    if (!is_wicks_form(word)) throw std::logic_error("gluing search produced " + to_string(word));
    ++stats_->emitted;
    out_->push_back(std::move(word));
  }

  int n_;
  std::vector<int> partner_;
  std::vector<int> sigma_;
  std::vector<int> sigma_inv_;
  std::vector<WicksWord>* out_ = nullptr;
  GluingStats* stats_ = nullptr;
};

}  // namespace

GluingStats enumerate_gluings(int g, const std::function<void(const WicksWord&)>& sink, int jobs) {
  require_genus(g);
  if (g > kMaxGluingGenus) {
    throw CapacityError("gluing enumeration supports genus <= " + std::to_string(kMaxGluingGenus) +
                        ", got " + std::to_string(g));
  }
  const int n = 12 * g - 6;
  if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  // One task per partner of position 0; results are merged in task order.
  const int tasks = n - 1;
  std::vector<std::vector<WicksWord>> results(static_cast<std::size_t>(tasks));
  std::vector<GluingStats> stats(static_cast<std::size_t>(tasks));
  std::atomic<int> cursor{0};
  auto worker = [&] {
    for (int t = cursor++; t < tasks; t = cursor++) {
      GluingSearch search(n);
      search.run(t + 1, results[t], stats[t]);
    }
  };
  const int threads = std::min(jobs, tasks);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
  }

  GluingStats total;
  for (int t = 0; t < tasks; ++t) {
    total.nodes += stats[t].nodes;
    total.complete += stats[t].complete;
    total.emitted += stats[t].emitted;
    for (const WicksWord& w : results[t]) sink(w);
  }
  return total;
}

Census gluing_census(int g, int jobs) {
  CensusBuilder builder(g);
  enumerate_gluings(g, [&](const WicksWord& w) { builder.add(w); }, jobs);
  return builder.finish();
}

WicksWord genus_one_word() {
  return WicksWord({{0, 1}, {1, 1}, {2, 1}, {0, -1}, {1, -1}, {2, -1}});
}

std::vector<std::vector<WicksWord>> recursive_levels(int g_target) {
  require_genus(g_target);
  if (g_target > kMaxRecursiveGenus) {
    throw CapacityError("recursive generation supports genus <= " + std::to_string(kMaxRecursiveGenus) +
                        ", got " + std::to_string(g_target));
  }
  std::vector<std::vector<WicksWord>> levels;
  levels.push_back({canonical_form(genus_one_word()).word});
  for (int g = 2; g <= g_target; ++g) {
    std::map<std::string, WicksWord> next;
    for (const WicksWord& base : levels.back()) {
      for_each_construction(base, [&](const Construction& c) {
        CanonicalForm form = canonical_form(c.word);
        next.try_emplace(std::move(form.text), std::move(form.word));
      });
    }
    std::vector<WicksWord> level;
    level.reserve(next.size());
    for (auto& [key, word] : next) level.push_back(std::move(word));
    levels.push_back(std::move(level));
  }
  return levels;
}

Census generate_recursive(int g_target) {
  const auto levels = recursive_levels(g_target);
  return build_census(levels.back());
}

}  // namespace wicks
