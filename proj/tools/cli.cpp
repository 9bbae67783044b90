#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "wicks/automorphism.hpp"
#include "wicks/canonical.hpp"
#include "wicks/census.hpp"
#include "wicks/count.hpp"
#include "wicks/enumerate.hpp"
#include "wicks/flows.hpp"
#include "wicks/surface_map.hpp"
#include "wicks/transform.hpp"
#include "wicks/word.hpp"

namespace wicks::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string output;
  int jobs = 0;
  int genus = 0;
  bool full = false;
  bool flows = false;
  bool quotient = false;
  std::string mode = "recursive";
  std::vector<std::string> word_tokens;
  std::string ih_edge;
  int reduce_vertex = -1;
  bool construct = false;
};

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

std::string st_key(int s, int t) { return std::to_string(s) + "," + std::to_string(t); }

std::string rst_key(const ParamTuple& p) {
  return std::to_string(3 * p.r) + ";" + std::to_string(2 * p.s) + "," + std::to_string(2 * p.t);
}

void require_format(const Options& opt, std::initializer_list<const char*> allowed, const char* command) {
  for (const char* f : allowed) {
    if (opt.format == f) return;
  }
  throw UsageError(std::string("format ") + opt.format + " is not available for " + command);
}

// ---- table / count -------------------------------------------------------

int cmd_table(const Options& opt, std::ostream& out) {
  std::vector<MassReport> rows;
  for (int g = 1; g <= opt.genus; ++g) rows.push_back(report(g));

  if (opt.format == "json") {
    json table = json::array();
    for (const auto& rep : rows) {
      json row{{"genus", rep.genus}, {"M1", to_string(rep.M1)}};
      if (opt.full) {
        row["M2"] = to_string(rep.M2);
        row["M3"] = to_string(rep.M3);
        row["M6"] = to_string(rep.M6);
        json exact = json::object();
        for (const auto& [d, n] : rep.exact_order_counts) exact[std::to_string(d)] = to_string(n);
        row["exact_orders"] = exact;
      }
      table.push_back(row);
    }
    out << json{{"rows", table}}.dump(2) << '\n';
    return kOk;
  }

  const char sep = opt.format == "csv" ? ',' : ' ';
  if (opt.format == "csv" || opt.full) {
    if (opt.format == "text") out << "# ";
    out << "genus" << sep << "M1";
    if (opt.full) {
      for (const char* h : {"M2", "M3", "M6", "aut1", "aut2", "aut3", "aut6"}) out << sep << h;
    }
    out << '\n';
  }
  for (const auto& rep : rows) {
    out << rep.genus << sep << to_string(rep.M1);
    if (opt.full) {
      out << sep << to_string(rep.M2) << sep << to_string(rep.M3) << sep << to_string(rep.M6);
      for (int d : {1, 2, 3, 6}) out << sep << to_string(rep.exact_order_counts.at(d));
    }
    out << '\n';
  }
  return kOk;
}

int cmd_count(const Options& opt, std::ostream& out) {
  const MassReport rep = report(opt.genus);
  if (opt.format == "json") {
    json j;
    j["genus"] = rep.genus;
    j["m1"] = to_string(rep.m1);
    json m2 = json::object();
    for (const auto& [r, v] : rep.m2_by_r) m2[std::to_string(r)] = to_string(v);
    j["m2_by_r"] = m2;
    json m3 = json::object();
    for (const auto& [st, v] : rep.m3_by_st) m3[st_key(st.first, st.second)] = to_string(v);
    j["m3_by_st"] = m3;
    json m6 = json::object();
    for (const auto& [p, v] : rep.m6_by_rst) m6[rst_key(p)] = to_string(v);
    j["m6_by_rst"] = m6;
    j["m2"] = to_string(rep.m2);
    j["m3"] = to_string(rep.m3);
    j["m6"] = to_string(rep.m6);
    j["M1"] = to_string(rep.M1);
    j["M2"] = to_string(rep.M2);
    j["M3"] = to_string(rep.M3);
    j["M6"] = to_string(rep.M6);
    json exact = json::object();
    for (const auto& [d, n] : rep.exact_order_counts) exact[std::to_string(d)] = to_string(n);
    j["exact_orders"] = exact;
    out << j.dump(2) << '\n';
    return kOk;
  }

  if (opt.format == "csv") {
    out << "quantity,parameters,value\n";
    out << "m1,," << to_string(rep.m1) << '\n';
    for (const auto& [r, v] : rep.m2_by_r) out << "m2," << r << ',' << to_string(v) << '\n';
    for (const auto& [st, v] : rep.m3_by_st) out << "m3,\"" << st_key(st.first, st.second) << "\"," << to_string(v) << '\n';
    for (const auto& [p, v] : rep.m6_by_rst) out << "m6,\"" << rst_key(p) << "\"," << to_string(v) << '\n';
    out << "M1,," << to_string(rep.M1) << "\nM2,," << to_string(rep.M2) << "\nM3,," << to_string(rep.M3)
        << "\nM6,," << to_string(rep.M6) << '\n';
    for (const auto& [d, n] : rep.exact_order_counts) out << "exact_order," << d << ',' << to_string(n) << '\n';
    return kOk;
  }

  out << "genus " << rep.genus << '\n';
  out << "  m1 = " << to_string(rep.m1) << '\n';
  for (const auto& [r, v] : rep.m2_by_r) out << "  m2(r=" << r << ") = " << to_string(v) << '\n';
  for (const auto& [st, v] : rep.m3_by_st) {
    out << "  m3(s,t=" << st_key(st.first, st.second) << ") = " << to_string(v) << '\n';
  }
  for (const auto& [p, v] : rep.m6_by_rst) out << "  m6(" << rst_key(p) << ") = " << to_string(v) << '\n';
  out << "  m2 = " << to_string(rep.m2) << ", m3 = " << to_string(rep.m3) << ", m6 = " << to_string(rep.m6) << '\n';
  out << "  M1 = " << to_string(rep.M1) << ", M2 = " << to_string(rep.M2) << ", M3 = " << to_string(rep.M3)
      << ", M6 = " << to_string(rep.M6) << '\n';
  out << "  classes by |Aut|:";
  for (const auto& [d, n] : rep.exact_order_counts) out << ' ' << d << ':' << to_string(n);
  out << '\n';
  return kOk;
}

// ---- inspect ---------------------------------------------------------------

json flow_json(const FlowVector& flow, const Alphabet& names) {
  json j = json::object();
  for (const auto& [id, value] : flow.values) {
    const std::string name =
        id < static_cast<int>(names.size()) ? names[static_cast<std::size_t>(id)] : letter_name({id, 1});
    j[name] = value;
  }
  return j;
}

json quotient_json(const QuotientData& q, int shift, const Alphabet& names) {
  json j;
  j["shift"] = shift;
  j["order"] = q.order;
  if (q.order == 2) {
    j["r"] = q.r;
  } else {
    j["s"] = q.s;
    j["t"] = q.t;
  }
  j["genus"] = q.genus;
  j["empty"] = q.empty();
  if (q.empty()) {
    j["word"] = nullptr;
    j["canonical"] = nullptr;
    j["flow"] = nullptr;
  } else {
    j["word"] = to_string(*q.reduced_word, names);
    const CanonicalFlow cf = canonical_flow(*q.reduced_word, *q.flow);
    j["canonical"] = cf.form.text;
    j["flow"] = flow_json(*q.flow, names);
    j["canonical_flow"] = flow_json(cf.flow, {});
  }
  return j;
}

json inspect_json(const WicksWord& word, const Alphabet& names, const Options& opt, bool& valid) {
  json j;
  j["word"] = to_string(word, names);
  j["length"] = word.length();
  j["edges"] = word.edge_count();
  const ValidationReport rep = validate(word);
  valid = rep.ok();
  j["valid"] = valid;
  json violations = json::array();
  for (const Violation& v : rep.violations) {
    violations.push_back({{"condition", v.condition}, {"positions", v.positions}, {"message", v.describe()}});
  }
  j["violations"] = violations;
  if (!valid) return j;

  const SurfaceMap map(word);
  const bool maximal = is_maximal(word);
  j["genus"] = map.genus();
  j["vertex_count"] = map.vertex_count();
  j["maximal"] = maximal;
  const SignSummary signs = vertex_signs(map);
  json vertices = json::array();
  for (int v = 0; v < map.vertex_count(); ++v) {
    std::vector<int> corners(map.corners(v).begin(), map.corners(v).end());
    vertices.push_back({{"index", v},
                        {"corners", corners},
                        {"degree", map.degree(v)},
                        {"sign", to_string(signs.signs[static_cast<std::size_t>(v)])}});
  }
  j["vertices"] = vertices;
  j["positive"] = signs.positive;
  j["negative"] = signs.negative;
  j["canonical"] = canonical_string(word);

  const AutGroup aut = automorphisms(word);
  j["aut"] = {{"order", aut.order}, {"shifts", aut.member_shifts}};
  if (maximal) {
    json sym = json::array();
    for (int shift : aut.member_shifts) {
      if (shift == 0) continue;
      const SymmetryParams p = symmetry_parameters(word, shift);
      json entry{{"shift", shift}, {"order", p.order}};
      if (p.order == 2) entry["r"] = p.r;
      if (p.order == 3) {
        entry["s"] = p.s;
        entry["t"] = p.t;
      }
      if (p.order == 6) entry["rst"] = json::array({p.r, p.s, p.t});
      sym.push_back(entry);
    }
    j["symmetry"] = sym;
  }

  const int n = word.length();
  if (opt.flows) {
    json flows;
    flows["z2"] = flow_space_dimension(word, 2);
    flows["z3"] = flow_space_dimension(word, 3);
    if (maximal && aut.order % 3 == 0) {
      flows["invariant_z2"] = invariant_flow_dimension(word, n / 3, 2);
    } else {
      flows["invariant_z2"] = nullptr;
    }
    j["flows"] = flows;
  }
  if (opt.quotient) {
    json quotients;
    if (maximal && aut.order % 2 == 0) {
      quotients["involution"] = quotient_json(quotient_by_involution(word, n / 2), n / 2, names);
    } else {
      quotients["involution"] = nullptr;
    }
    quotients["order3"] = nullptr;
    if (maximal && aut.order % 3 == 0) {
      const SymmetryParams p = symmetry_parameters(word, n / 3);
      if (map.genus() > 1 && p.t == 0) {
        quotients["order3"] = quotient_json(quotient_by_order3(word, n / 3), n / 3, names);
      }
    }
    j["quotients"] = quotients;
  }
  return j;
}

void inspect_text(const json& j, std::ostream& out) {
  out << "word: " << j["word"].get<std::string>() << '\n';
  out << "length " << j["length"] << ", edges " << j["edges"] << '\n';
  if (!j["valid"].get<bool>()) {
    out << "not a Wicks form:\n";
    for (const auto& v : j["violations"]) out << "  " << v["message"].get<std::string>() << '\n';
    return;
  }
  out << "genus " << j["genus"] << ", " << j["vertex_count"] << " vertices, "
      << (j["maximal"].get<bool>() ? "maximal" : "not maximal") << '\n';
  out << "canonical: " << j["canonical"].get<std::string>() << '\n';
  for (const auto& v : j["vertices"]) {
    out << "  vertex " << v["index"] << ": degree " << v["degree"] << ", " << v["sign"].get<std::string>()
        << ", corners " << v["corners"].dump() << '\n';
  }
  out << "|Aut| = " << j["aut"]["order"] << ", shifts " << j["aut"]["shifts"].dump() << '\n';
  if (j.contains("symmetry")) {
    for (const auto& s : j["symmetry"]) {
      out << "  shift " << s["shift"] << " (order " << s["order"] << ")";
      if (s.contains("r")) out << " r=" << s["r"];
      if (s.contains("s")) out << " s=" << s["s"] << " t=" << s["t"];
      if (s.contains("rst")) out << " (r,s,t)=" << s["rst"].dump();
      out << '\n';
    }
  }
  if (j.contains("flows")) {
    const auto& f = j["flows"];
    out << "flow space: dim " << f["z2"] << " over Z/2, " << f["z3"] << " over Z/3";
    if (!f["invariant_z2"].is_null()) out << "; invariant under order 3: " << f["invariant_z2"];
    out << '\n';
  }
  if (j.contains("quotients")) {
    for (const char* key : {"involution", "order3"}) {
      const auto& q = j["quotients"][key];
      if (q.is_null()) continue;
      out << key << " quotient (shift " << q["shift"] << "): genus " << q["genus"];
      if (q["empty"].get<bool>()) {
        out << ", empty\n";
        continue;
      }
      out << ", " << q["word"].get<std::string>() << "\n  flow";
      for (const auto& [name, value] : q["flow"].items()) out << ' ' << name << '=' << value;
      out << '\n';
    }
  }
}

int cmd_inspect(const Options& opt, std::ostream& out) {
  require_format(opt, {"json", "text"}, "inspect");
  Alphabet names;
  const WicksWord word = parse_word(join(opt.word_tokens), &names);
  bool valid = false;
  const json j = inspect_json(word, names, opt, valid);
  if (opt.format == "json") {
    out << j.dump(2) << '\n';
  } else {
    inspect_text(j, out);
  }
  return valid ? kOk : kMismatch;
}

// ---- enumerate -------------------------------------------------------------

int cmd_enumerate(const Options& opt, std::ostream& out) {
  const Census census = opt.mode == "gluings" ? gluing_census(opt.genus, opt.jobs) : generate_recursive(opt.genus);
  if (opt.format == "json") {
    write_census_json(out, census);
  } else if (opt.format == "csv") {
    write_census_csv(out, census);
  } else {
    write_census_text(out, census);
  }
  return kOk;
}

// ---- verify ----------------------------------------------------------------

struct Check {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
};

class Checklist {
 public:
  void add(std::string name, const std::string& expected, const std::string& actual) {
    checks_.push_back({std::move(name), expected == actual, expected, actual});
  }
  void add(std::string name, bool ok) {
    checks_.push_back({std::move(name), ok, "true", ok ? "true" : "false"});
  }
  const std::vector<Check>& checks() const { return checks_; }
  bool ok() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
  }

 private:
  std::vector<Check> checks_;
};

template <class Map, class KeyFn>
std::string masses(const Map& map, KeyFn key) {
  std::string out;
  for (const auto& [k, v] : map) {
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, SubCensus>) {
      out += key(k) + ":" + to_string(v.mass) + " ";
    } else {
      out += key(k) + ":" + to_string(v) + " ";
    }
  }
  return out;
}

void check_census(Checklist& list, const std::string& label, const Census& c, const MassReport& rep) {
  const int g = rep.genus;
  list.add(label + " class count", to_string(rep.M1), std::to_string(c.class_count()));
  list.add(label + " mass", to_string(rep.m1), to_string(c.mass));
  list.add(label + " pointed count", to_string(pointed_count(g, 1)), to_string(c.pointed_count));
  std::string expected_hist;
  std::string actual_hist;
  for (int d : {1, 2, 3, 6}) {
    expected_hist += std::to_string(d) + ":" + to_string(rep.exact_order_counts.at(d)) + " ";
    actual_hist += std::to_string(d) + ":" + std::to_string(c.order_histogram.at(d)) + " ";
  }
  list.add(label + " order histogram", expected_hist, actual_hist);
  const auto int_key = [](int k) { return std::to_string(k); };
  const auto pair_key = [](const std::pair<int, int>& k) { return st_key(k.first, k.second); };
  list.add(label + " masses by r", masses(rep.m2_by_r, int_key), masses(c.by_r, int_key));
  list.add(label + " masses by (s,t)", masses(rep.m3_by_st, pair_key), masses(c.by_st, pair_key));
  list.add(label + " masses by (r,s,t)", masses(rep.m6_by_rst, rst_key), masses(c.by_rst, rst_key));
  bool signs_ok = true;
  for (const ClassRecord& rec : c.classes) signs_ok = signs_ok && rec.positive == 2 * g - 2 && rec.negative == 2 * g;
  list.add(label + " sign counts (" + std::to_string(2 * g - 2) + " positive, " + std::to_string(2 * g) +
               " negative)",
           signs_ok);
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const int g = opt.genus;
  if (g > kMaxRecursiveGenus) {
    throw CapacityError("verify supports genus <= " + std::to_string(kMaxRecursiveGenus) + ", got " +
                        std::to_string(g));
  }
  Checklist list;
  const MassReport rep = report(g);
  list.add("formula integrality", true);
  list.add("m1 recursion identity", recursion_check(g));
  for (int d : {1, 2, 3, 6}) {
    const Integer pc = pointed_count(g, d);
    list.add("pointed count d=" + std::to_string(d) + " nonnegative", pc >= 0);
  }

  const Census recursive = generate_recursive(g);
  check_census(list, "recursive", recursive, rep);
  if (g <= kMaxGluingGenus) {
    std::uint64_t gluings = 0;
    CensusBuilder builder(g);
    enumerate_gluings(
        g,
        [&](const WicksWord& w) {
          ++gluings;
          builder.add(w);
        },
        opt.jobs);
    const Census glued = builder.finish();
    list.add("gluing count", to_string(pointed_count(g, 1)), std::to_string(gluings));
    check_census(list, "gluings", glued, rep);
    bool same = glued.class_count() == recursive.class_count();
    for (std::size_t i = 0; same && i < glued.classes.size(); ++i) {
      same = glued.classes[i].canonical == recursive.classes[i].canonical;
    }
    list.add("gluing and recursive censuses agree", same);
  }

  if (opt.format == "json") {
    json checks = json::array();
    for (const Check& c : list.checks()) {
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"expected", c.expected}, {"actual", c.actual}});
    }
    out << json{{"genus", g}, {"pass", list.ok()}, {"checks", checks}}.dump(2) << '\n';
  } else if (opt.format == "csv") {
    out << "check,status,expected,actual\n";
    for (const Check& c : list.checks()) {
      out << '"' << c.name << "\"," << (c.pass ? "pass" : "FAIL") << ",\"" << c.expected << "\",\"" << c.actual
          << "\"\n";
    }
  } else {
    for (const Check& c : list.checks()) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (c.pass) {
        if (c.expected != "true") out << ": " << c.actual;
      } else {
        out << ": expected " << c.expected << ", got " << c.actual;
      }
      out << '\n';
    }
    out << (list.ok() ? "genus " + std::to_string(g) + ": all checks passed\n"
                      : "genus " + std::to_string(g) + ": verification FAILED\n");
  }
  return list.ok() ? kOk : kMismatch;
}

// ---- transform -------------------------------------------------------------

// Names for ids past the input alphabet, avoiding collisions.
Alphabet extend_names(Alphabet names, int max_id) {
  std::set<std::string> used(names.begin(), names.end());
  int k = 1;
  while (static_cast<int>(names.size()) <= max_id) {
    std::string candidate = "y" + std::to_string(k++);
    if (used.insert(candidate).second) names.push_back(candidate);
  }
  return names;
}

json word_summary(const WicksWord& word, const std::string& rendered) {
  return {{"word", rendered},
          {"canonical", canonical_string(word)},
          {"genus", genus(word)},
          {"maximal", is_maximal(word)},
          {"valid", is_wicks_form(word)}};
}

int cmd_transform(const Options& opt, std::ostream& out) {
  require_format(opt, {"json", "text"}, "transform");
  const int chosen = (opt.ih_edge.empty() ? 0 : 1) + (opt.reduce_vertex >= 0 ? 1 : 0) + (opt.construct ? 1 : 0);
  if (chosen != 1) throw UsageError("transform needs exactly one of --ih, --reduce, --construct");
  Alphabet names;
  const WicksWord word = parse_word(join(opt.word_tokens), &names);
  json j;
  std::string text;

  if (!opt.ih_edge.empty()) {
    const auto it = std::find(names.begin(), names.end(), opt.ih_edge);
    if (it == names.end()) throw UsageError("edge " + opt.ih_edge + " does not occur in the word");
    const auto [kind, result] = ih_transform(word, static_cast<int>(it - names.begin()));
    const std::string rendered = to_string(result, extend_names(names, result.max_id()));
    j["operation"] = "ih";
    j["edge"] = opt.ih_edge;
    j["kind"] = to_string(kind);
    j["result"] = word_summary(result, rendered);
    text = "IH on " + opt.ih_edge + " (type " + to_string(kind) + "): " + rendered + "\n";
  } else if (opt.reduce_vertex >= 0) {
    const NegativeVertexType type = classify_negative_vertex(word, opt.reduce_vertex);
    const WicksWord result = reduce(word, opt.reduce_vertex);
    j["operation"] = "reduce";
    j["vertex"] = opt.reduce_vertex;
    j["type"] = to_string(type);
    j["result"] = word_summary(result, to_string(result));
    text = "reduction at vertex " + std::to_string(opt.reduce_vertex) + " (" + to_string(type) +
           "): " + to_string(result) + "\n";
  } else {
    const std::vector<Construction> all = construct_all(word);
    std::set<std::string> classes;
    json list = json::array();
    std::ostringstream lines;
    for (const Construction& c : all) {
      json entry = word_summary(c.word, to_string(c.word));
      entry["kind"] = to_string(c.kind);
      entry["splits"] = c.splits;
      classes.insert(entry["canonical"].get<std::string>());
      lines << "  " << to_string(c.kind) << ' ' << json(c.splits).dump() << ": " << to_string(c.word) << '\n';
      list.push_back(std::move(entry));
    }
    j["operation"] = "construct";
    j["count"] = all.size();
    j["classes"] = classes.size();
    j["constructions"] = list;
    text = std::to_string(all.size()) + " constructions, " + std::to_string(classes.size()) + " classes\n" +
           lines.str();
  }

  if (opt.format == "json") {
    out << j.dump(2) << '\n';
  } else {
    out << text;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Oriented maximal Wicks forms: counts, censuses, transformations and flows", "wicks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output,-o", opt.output, "Write to this file instead of standard output");
  app.add_option("--jobs,-j", opt.jobs, "Worker threads for enumeration (0: all cores)")
      ->check(CLI::NonNegativeNumber);

  auto* table = app.add_subcommand("table", "Class counts M1 for genus 1..N");
  table->add_option("max_genus", opt.genus, "Largest genus")->required()->check(CLI::Range(1, 10000));
  table->add_flag("--full", opt.full, "Also print M2, M3, M6 and counts by automorphism order");

  auto* count = app.add_subcommand("count", "Masses and class counts for one genus");
  count->add_option("genus", opt.genus)->required()->check(CLI::PositiveNumber);

  auto* inspect = app.add_subcommand("inspect", "Analyse a word");
  inspect->add_option("word", opt.word_tokens, "Letters, e.g. \"a b a' b'\"")->required();
  inspect->add_flag("--flows", opt.flows, "Flow space dimensions");
  inspect->add_flag("--quotient", opt.quotient, "Quotients by automorphisms of order 2 and 3");

  auto* enumerate = app.add_subcommand("enumerate", "Census of maximal words of one genus");
  enumerate->add_option("genus", opt.genus)->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--mode", opt.mode, "gluings or recursive")
      ->check(CLI::IsMember({"gluings", "recursive"}));

  auto* verify = app.add_subcommand("verify", "Cross-check enumeration against the count formulas");
  verify->add_option("genus", opt.genus)->required()->check(CLI::PositiveNumber);

  auto* transform = app.add_subcommand("transform", "Apply an IH move, a reduction or all constructions");
  transform->add_option("word", opt.word_tokens)->required();
  transform->add_option("--ih", opt.ih_edge, "Edge name for an IH-transformation");
  transform->add_option("--reduce", opt.reduce_vertex, "Negative vertex to reduce")->check(CLI::NonNegativeNumber);
  transform->add_flag("--construct", opt.construct, "All alpha, beta and gamma constructions");

  std::vector<std::string> argv_storage{"wicks"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (table->parsed()) {
      code = cmd_table(opt, buffer);
    } else if (count->parsed()) {
      code = cmd_count(opt, buffer);
    } else if (inspect->parsed()) {
      code = cmd_inspect(opt, buffer);
    } else if (enumerate->parsed()) {
      code = cmd_enumerate(opt, buffer);
    } else if (verify->parsed()) {
      code = cmd_verify(opt, buffer);
    } else {
      code = cmd_transform(opt, buffer);
    }
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: cannot parse word: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }

  if (opt.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(opt.output);
    if (!file) {
      err << "error: cannot write " << opt.output << '\n';
      return kUsage;
    }
    file << buffer.str();
  }
  if (code == kMismatch && inspect->parsed()) err << "error: not a Wicks form\n";
  return code;
}

}  // namespace wicks::cli
