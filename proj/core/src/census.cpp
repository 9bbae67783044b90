#include "wicks/census.hpp"

#include <json.hpp>
#include <ostream>
#include <stdexcept>

#include "wicks/automorphism.hpp"
#include "wicks/canonical.hpp"
#include "wicks/surface_map.hpp"

namespace wicks {

bool CensusBuilder::add(const WicksWord& word) {
  const SurfaceMap map(word);
  if (word.length() != 6 * (2 * map.genus() - 1)) {
    throw std::invalid_argument("census input is not maximal: " + to_string(word));
  }
  if (genus_ == 0) genus_ = map.genus();
  if (map.genus() != genus_) {
    throw std::invalid_argument("census mixes genus " + std::to_string(genus_) + " and " +
                                std::to_string(map.genus()));
  }
  ++source_words_;
  CanonicalForm form = canonical_form(word);
  return seen_.try_emplace(std::move(form.text), std::move(form.word)).second;
}

void CensusBuilder::merge(const CensusBuilder& other) {
  if (other.genus_ == 0) return;
  if (genus_ == 0) genus_ = other.genus_;
  if (genus_ != other.genus_) throw std::invalid_argument("cannot merge censuses of different genus");
  source_words_ += other.source_words_;
  for (const auto& [key, word] : other.seen_) seen_.try_emplace(key, word);
}

Census CensusBuilder::finish() const {
  Census c;
  c.genus = genus_;
  c.source_words = source_words_;
  for (int d : {1, 2, 3, 6}) c.order_histogram[d] = 0;
  for (const auto& [key, word] : seen_) {
    ClassRecord rec;
    rec.canonical = key;
    const AutGroup aut = automorphisms(word);
    rec.aut_order = aut.order;
    const SignSummary signs = vertex_signs(word);
    rec.positive = signs.positive;
    rec.negative = signs.negative;
    const int n = word.length();
    const Rational weight(1, aut.order);
    if (aut.order % 2 == 0) {
      rec.r = symmetry_parameters(word, n / 2).r;
      auto& sub = c.by_r[*rec.r];
      ++sub.classes;
      sub.mass += weight;
    }
    if (aut.order % 3 == 0) {
      const SymmetryParams p = symmetry_parameters(word, n / 3);
      rec.st = std::pair{p.s, p.t};
      auto& sub = c.by_st[*rec.st];
      ++sub.classes;
      sub.mass += weight;
    }
    if (aut.order == 6) {
      const SymmetryParams p = symmetry_parameters(word, aut.generator_shift).unscaled();
      rec.rst = ParamTuple{p.r, p.s, p.t};
      auto& sub = c.by_rst[*rec.rst];
      ++sub.classes;
      sub.mass += weight;
    }
    ++c.order_histogram[aut.order];
    c.mass += weight;
    c.classes.push_back(std::move(rec));
  }
  if (genus_ > 0) {
    const Rational pointed = Rational(12 * genus_ - 6) * c.mass;
    if (pointed.get_den() != 1) throw std::logic_error("census pointed count is not an integer");
    c.pointed_count = pointed.get_num();
  }
  return c;
}

Census build_census(std::span<const WicksWord> words) {
  CensusBuilder builder;
  for (const WicksWord& w : words) builder.add(w);
  return builder.finish();
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json class_json(const ClassRecord& rec) {
  ordered_json j;
  j["record"] = "class";
  j["canonical"] = rec.canonical;
  j["aut_order"] = rec.aut_order;
  j["positive"] = rec.positive;
  j["negative"] = rec.negative;
  j["r"] = rec.r ? ordered_json(*rec.r) : ordered_json(nullptr);
  j["st"] = rec.st ? ordered_json::array({rec.st->first, rec.st->second}) : ordered_json(nullptr);
  j["rst"] = rec.rst ? ordered_json::array({3 * rec.rst->r, 2 * rec.rst->s, 2 * rec.rst->t})
                     : ordered_json(nullptr);
  return j;
}

ordered_json sub_json(const SubCensus& sub) {
  return ordered_json{{"classes", sub.classes}, {"mass", to_string(sub.mass)}};
}

ordered_json summary_json(const Census& census) {
  ordered_json j;
  j["record"] = "summary";
  j["format"] = "wicks-census";
  j["version"] = kCensusFormatVersion;
  j["genus"] = census.genus;
  j["class_count"] = census.class_count();
  j["source_words"] = census.source_words;
  j["mass"] = to_string(census.mass);
  j["pointed_count"] = to_string(census.pointed_count);
  ordered_json hist = ordered_json::object();
  for (const auto& [d, count] : census.order_histogram) hist[std::to_string(d)] = count;
  j["order_histogram"] = hist;
  ordered_json by_r = ordered_json::object();
  for (const auto& [r, sub] : census.by_r) by_r[std::to_string(r)] = sub_json(sub);
  j["by_r"] = by_r;
  ordered_json by_st = ordered_json::object();
  for (const auto& [st, sub] : census.by_st) {
    by_st[std::to_string(st.first) + "," + std::to_string(st.second)] = sub_json(sub);
  }
  j["by_st"] = by_st;
  ordered_json by_rst = ordered_json::object();
  for (const auto& [p, sub] : census.by_rst) {
    by_rst[std::to_string(3 * p.r) + ";" + std::to_string(2 * p.s) + "," + std::to_string(2 * p.t)] =
        sub_json(sub);
  }
  j["by_rst"] = by_rst;
  return j;
}

std::string optional_field(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

}  // namespace

void write_census_json(std::ostream& out, const Census& census) {
  for (const ClassRecord& rec : census.classes) out << class_json(rec).dump() << '\n';
  out << summary_json(census).dump() << '\n';
}

void write_census_csv(std::ostream& out, const Census& census) {
  out << "canonical,aut_order,positive,negative,r,s,t\n";
  for (const ClassRecord& rec : census.classes) {
    out << '"' << rec.canonical << "\"," << rec.aut_order << ',' << rec.positive << ',' << rec.negative << ','
        << optional_field(rec.r) << ','
        << (rec.st ? std::to_string(rec.st->first) : "") << ','
        << (rec.st ? std::to_string(rec.st->second) : "") << '\n';
  }
  out << "# genus=" << census.genus << " classes=" << census.class_count() << " mass=" << to_string(census.mass)
      << " pointed_count=" << to_string(census.pointed_count) << '\n';
}

void write_census_text(std::ostream& out, const Census& census) {
  out << "genus " << census.genus << ": " << census.class_count() << " classes, mass " << to_string(census.mass)
      << ", pointed count " << to_string(census.pointed_count) << '\n';
  out << "order histogram:";
  for (const auto& [d, count] : census.order_histogram) out << ' ' << d << ':' << count;
  out << '\n';
  for (const ClassRecord& rec : census.classes) {
    out << "  |Aut|=" << rec.aut_order << "  " << rec.canonical;
    if (rec.r) out << "  r=" << *rec.r;
    if (rec.st) out << "  (s,t)=(" << rec.st->first << ',' << rec.st->second << ')';
    out << '\n';
  }
}

}  // namespace wicks
