// JSON serialization: structure files, elements, reports, quotients and
// reconstructions.  Every file carries "version": 1.
//
// Structure files come in four kinds:
//   {"version":1,"kind":"signed","n":2}
//   {"version":1,"kind":"interval","n":2}
//   {"version":1,"kind":"filter","n":2,"f":[1]}
//   {"version":1,"kind":"table","size":3,"one":0,"join":[[..]],"caret":[[..]],
//    "delta":[[..]],"labels":[..]}        (caret, delta, labels optional;
//                                          absent delta entries are -1)

#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mrcube/axioms.hpp"
#include "mrcube/collapse.hpp"
#include "mrcube/models.hpp"
#include "mrcube/reconstruct.hpp"
#include "mrcube/structure.hpp"

namespace mrcube {

using json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

/// Malformed input: bad JSON, wrong shape, unknown kind or version.
class format_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline json to_json(BoolElem x, const Universe& u) { return u.names(x); }

inline json to_json(const SignedSet& x) {
  const Universe& u = x.universe();
  return {{"pos", to_json(x.pos(), u)}, {"neg", to_json(x.neg(), u)}};
}

inline json to_json(const Interval& x) {
  const Universe& u = x.universe();
  return {{"lo", to_json(x.lo(), u)}, {"hi", to_json(x.hi(), u)}};
}

namespace detail {

inline json table_to_json(const Table& t) {
  json rows = json::array();
  for (Elem a = 0; a < t.size(); ++a) {
    json row = json::array();
    for (Elem b = 0; b < t.size(); ++b) {
      const Elem v = t(a, b);
      if (v == kAbsent) row.push_back(-1);
      else row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Table table_from_json(const json& j, std::size_t n, const char* name, bool allow_absent) {
  if (!j.is_array() || j.size() != n)
    throw format_error(std::string(name) + " must be a " + std::to_string(n) + "x" +
                       std::to_string(n) + " array");
  Table t(n);
  for (Elem a = 0; a < n; ++a) {
    const json& row = j[a];
    if (!row.is_array() || row.size() != n)
      throw format_error(std::string(name) + " row " + std::to_string(a) + " has the wrong length");
    for (Elem b = 0; b < n; ++b) {
      const json& v = row[b];
      if (!v.is_number_integer())
        throw format_error(std::string(name) + " entries must be integers");
      const auto x = v.get<long long>();
      if (x == -1 && allow_absent) continue;
      if (x < 0 || static_cast<unsigned long long>(x) >= n)
        throw format_error(std::string(name) + " entry out of range at (" + std::to_string(a) +
                           "," + std::to_string(b) + ")");
      t(a, b) = static_cast<Elem>(x);
    }
  }
  return t;
}

inline void require_version(const json& j) {
  if (!j.is_object()) throw format_error("structure file must be a JSON object");
  if (!j.contains("version") || j["version"] != kFormatVersion)
    throw format_error("unsupported or missing format version (expected 1)");
}

inline int ground_size(const json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw format_error("missing integer field \"n\"");
  const auto n = j["n"].get<long long>();
  if (n < 0 || n > 5) throw format_error("\"n\" must lie in [0, 5]");
  return static_cast<int>(n);
}

}  // namespace detail

inline json to_json(const Tables& t) {
  json j = {{"version", kFormatVersion}, {"kind", "table"}, {"size", t.size}, {"one", t.one}};
  j["join"] = detail::table_to_json(t.join);
  if (t.caret) j["caret"] = detail::table_to_json(*t.caret);
  if (t.delta) j["delta"] = detail::table_to_json(*t.delta);
  if (!t.labels.empty()) j["labels"] = t.labels;
  return j;
}

inline json to_json(const FiniteStructure& s) { return to_json(s.tables()); }

/// Parses a "table" file without validating the algebraic laws.
inline Tables tables_from_json(const json& j) {
  detail::require_version(j);
  if (j.value("kind", "") != "table") throw format_error("expected kind \"table\"");
  if (!j.contains("size") || !j["size"].is_number_integer() || j["size"].get<long long>() < 1 ||
      j["size"].get<long long>() > 4096)
    throw format_error("\"size\" must be an integer in [1, 4096]");
  Tables t;
  t.size = j["size"].get<std::size_t>();
  if (!j.contains("one") || !j["one"].is_number_integer()) throw format_error("missing \"one\"");
  const auto one = j["one"].get<long long>();
  if (one < 0 || static_cast<std::size_t>(one) >= t.size) throw format_error("\"one\" out of range");
  t.one = static_cast<Elem>(one);
  if (!j.contains("join")) throw format_error("missing \"join\" table");
  t.join = detail::table_from_json(j["join"], t.size, "join", false);
  if (j.contains("caret")) t.caret = detail::table_from_json(j["caret"], t.size, "caret", false);
  if (j.contains("delta")) t.delta = detail::table_from_json(j["delta"], t.size, "delta", true);
  if (j.contains("labels")) {
    const json& l = j["labels"];
    if (!l.is_array() || l.size() != t.size) throw format_error("\"labels\" must have one entry per element");
    for (const auto& x : l) {
      if (!x.is_string()) throw format_error("labels must be strings");
      t.labels.push_back(x.get<std::string>());
    }
  }
  return t;
}

/// The kind file for a generated model.
inline json kind_file(const std::string& kind, int n, const std::vector<int>& f = {}) {
  json j = {{"version", kFormatVersion}, {"kind", kind}, {"n", n}};
  if (kind == "filter") j["f"] = f;
  return j;
}

/// Any structure file, materialized and validated.  Throws format_error for
/// malformed files and structure_error for tables violating the laws.
inline FiniteStructure load_structure(const json& j) {
  detail::require_version(j);
  if (!j.contains("kind") || !j["kind"].is_string()) throw format_error("missing \"kind\"");
  const std::string kind = j["kind"];
  if (kind == "table") return FiniteStructure(tables_from_json(j));
  if (kind == "signed") return make_signed_model(Universe(detail::ground_size(j))).structure;
  if (kind == "interval") return make_interval_model(Universe(detail::ground_size(j))).structure;
  if (kind == "filter") {
    const Universe u(detail::ground_size(j));
    if (!j.contains("f") || !j["f"].is_array()) throw format_error("filter needs an \"f\" array");
    std::vector<int> names;
    for (const auto& x : j["f"]) {
      if (!x.is_number_integer()) throw format_error("\"f\" entries must be integers");
      names.push_back(x.get<int>());
    }
    BoolElem gen;
    try {
      gen = u.element(names);
    } catch (const std::invalid_argument& e) {
      throw format_error(e.what());
    }
    return make_filter_model(principal_filter(gen, u)).structure;
  }
  throw format_error("unknown kind \"" + kind + "\"");
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw format_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw format_error(path + ": " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

/// Deterministic single-line text form with a trailing newline.
inline std::string dump(const json& j) { return j.dump() + "\n"; }

inline json to_json(const AxiomReport& r) {
  return {{"axiom", r.axiom},
          {"passed", r.passed},
          {"counterexamples", r.counterexamples},
          {"checked", r.checked},
          {"violations", r.violations}};
}

inline json to_json(const std::vector<AxiomReport>& rs) {
  json j = json::array();
  for (const auto& r : rs) j.push_back(to_json(r));
  return j;
}

inline json to_json(const QuotientLattice& q) {
  json classes = json::array();
  for (const auto& c : q.classes)
    classes.push_back({{"representative", c.representative}, {"members", c.members}});
  return {{"version", kFormatVersion},
          {"kind", "quotient"},
          {"classes", classes},
          {"one", q.one},
          {"meet", detail::table_to_json(q.meet)},
          {"join", detail::table_to_json(q.join)},
          {"arrow", detail::table_to_json(q.arrow)}};
}

/// Element index -> {"lo": [...], "hi": [...]}.
inline json to_json(const Reconstruction& r) {
  json j = json::array();
  for (const auto& x : r.phi) j.push_back(to_json(x));
  return j;
}

}  // namespace mrcube
