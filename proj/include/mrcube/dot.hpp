// Graphviz export of Hasse diagrams (covering relation only), bottom to top.

#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "mrcube/collapse.hpp"
#include "mrcube/structure.hpp"

namespace mrcube {

/// Covering pairs (a, b) with a < b and nothing strictly between, sorted.
template <class Leq>
std::vector<std::pair<Elem, Elem>> hasse_edges(Elem n, Leq leq) {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool cover = true;
      for (Elem c = 0; c < n && cover; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) cover = false;
      if (cover) out.emplace_back(a, b);
    }
  return out;
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

inline std::string render_dot(const std::string& name, const std::vector<std::string>& labels,
                              const std::vector<std::pair<Elem, Elem>>& edges) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < labels.size(); ++i)
    os << "  n" << i << " [label=\"" << dot_escape(labels[i]) << "\"];\n";
  for (auto [a, b] : edges) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace detail

inline std::string export_dot(const FiniteStructure& s) {
  const Elem n = static_cast<Elem>(s.size());
  std::vector<std::string> labels;
  for (Elem a = 0; a < n; ++a) labels.push_back(s.label(a));
  return detail::render_dot("structure", labels,
                            hasse_edges(n, [&](Elem a, Elem b) { return s.leq(a, b); }));
}

/// Quotient classes are labelled by their representative's label.
inline std::string export_dot(const QuotientLattice& q, const FiniteStructure& s) {
  const Elem k = static_cast<Elem>(q.size());
  std::vector<std::string> labels;
  for (const auto& c : q.classes) labels.push_back("[[" + s.label(c.representative) + "]]");
  return detail::render_dot("quotient", labels,
                            hasse_edges(k, [&](Elem a, Elem b) { return q.leq(a, b); }));
}

}  // namespace mrcube
