#include "latkit/io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace latkit {

using nlohmann::json;

namespace {

[[noreturn]] void shape_error(const std::string& what) {
  throw LatticeError(ErrorKind::ParseError, what);
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

std::string join_names(const Lattice& L, const Bitset& s) {
  std::string out = "[";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ", ";
    out += quote_string(L.name(ElementId{i}));
    first = false;
  });
  return out + "]";
}

}  // namespace

std::string quote_string(std::string_view s) { return json(std::string(s)).dump(); }

LatticeDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw LatticeError(ErrorKind::ParseError, "line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  if (!j.is_object()) shape_error("top level must be an object");
  if (!j.contains("elements") || !j["elements"].is_array()) shape_error("\"elements\" must be an array");
  if (!j.contains("covers") || !j["covers"].is_array()) shape_error("\"covers\" must be an array");

  LatticeDocument doc;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) shape_error("element names must be strings");
    doc.elements.push_back(e.get<std::string>());
  }
  for (const auto& c : j["covers"]) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      shape_error("each cover must be a pair [upper, lower] of strings");
    doc.covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  if (j.contains("meta")) {
    if (!j["meta"].is_object()) shape_error("\"meta\" must be an object");
    for (const auto& [k, v] : j["meta"].items()) {
      if (!v.is_string()) shape_error("meta values must be strings");
      doc.meta.emplace(k, v.get<std::string>());
    }
  }
  return doc;
}

Lattice parse_lattice(std::string_view text) {
  auto doc = parse_document(text);
  return build_lattice(std::move(doc.elements), doc.covers);
}

LatticeDocument to_document(const Lattice& L, std::map<std::string, std::string> meta) {
  LatticeDocument doc;
  doc.elements = L.names();
  for (const auto& a : L.arrows()) doc.covers.emplace_back(L.name(a.upper), L.name(a.lower));
  doc.meta = std::move(meta);
  return doc;
}

std::string emit_document(const LatticeDocument& doc) {
  std::ostringstream os;
  os << "{\n  \"elements\": [";
  for (std::size_t i = 0; i < doc.elements.size(); ++i) os << (i ? ", " : "") << quote_string(doc.elements[i]);
  os << "],\n  \"covers\": [";
  for (std::size_t i = 0; i < doc.covers.size(); ++i)
    os << (i ? "," : "") << "\n    [" << quote_string(doc.covers[i].first) << ", " << quote_string(doc.covers[i].second) << "]";
  os << (doc.covers.empty() ? "]" : "\n  ]");
  if (!doc.meta.empty()) {
    os << ",\n  \"meta\": {";
    bool first = true;
    for (const auto& [k, v] : doc.meta) {
      os << (first ? "" : ", ") << quote_string(k) << ": " << quote_string(v);
      first = false;
    }
    os << "}";
  }
  os << "\n}\n";
  return os.str();
}

std::string emit_lattice(const Lattice& L) { return emit_document(to_document(L)); }

std::string emit_dot(const Lattice& L, const ArrowLabeling* labeling, std::optional<Interval> highlight) {
  auto inside = [&](ElementId x) {
    return highlight && L.leq(highlight->lower, x) && L.leq(x, highlight->upper);
  };
  std::ostringstream os;
  os << "digraph lattice {\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < L.size(); ++i) {
    const ElementId x{i};
    os << "  " << quote_string(L.name(x));
    if (inside(x)) os << " [style=filled, fillcolor=lightgray]";
    os << ";\n";
  }
  for (const auto& a : L.arrows()) {
    os << "  " << quote_string(L.name(a.upper)) << " -> " << quote_string(L.name(a.lower));
    std::vector<std::string> attrs;
    if (labeling) attrs.push_back("label=" + quote_string(L.name(labeling->gamma(a))));
    if (inside(a.upper) && inside(a.lower)) attrs.emplace_back("penwidth=2");
    if (!attrs.empty()) {
      os << " [";
      for (std::size_t k = 0; k < attrs.size(); ++k) os << (k ? ", " : "") << attrs[k];
      os << "]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string poset_json(const Lattice& L, const SetFamilyPoset& poset) {
  std::ostringstream os;
  os << "{\n  \"kind\": " << quote_string(to_string(poset.kind)) << ",\n  \"members\": [";
  for (std::size_t i = 0; i < poset.members.size(); ++i)
    os << (i ? "," : "") << "\n    " << join_names(L, poset.members[i]);
  os << (poset.members.empty() ? "]" : "\n  ]") << ",\n  \"witnesses\": [";
  for (std::size_t i = 0; i < poset.witnesses.size(); ++i)
    os << (i ? "," : "") << "\n    [" << quote_string(L.name(poset.witnesses[i].lower)) << ", "
       << quote_string(L.name(poset.witnesses[i].upper)) << "]";
  os << (poset.witnesses.empty() ? "]" : "\n  ]") << ",\n  \"hasse\": [";
  for (std::size_t i = 0; i < poset.hasse.size(); ++i)
    os << (i ? "," : "") << "\n    [" << poset.hasse[i].first << ", " << poset.hasse[i].second << "]";
  os << (poset.hasse.empty() ? "]" : "\n  ]") << "\n}\n";
  return os.str();
}

std::string poset_dot(const Lattice& L, const SetFamilyPoset& poset) {
  std::ostringstream os;
  os << "digraph " << to_string(poset.kind) << " {\n  node [shape=plaintext];\n  edge [dir=none];\n";
  for (const auto& m : poset.members) os << "  " << quote_string(format_set(L, m)) << ";\n";
  for (const auto& [u, l] : poset.hasse)
    os << "  " << quote_string(format_set(L, poset.members[u])) << " -> " << quote_string(format_set(L, poset.members[l]))
       << ";\n";
  os << "}\n";
  return os.str();
}

std::string order_json(const Lattice& L, const OrderRelation& order) {
  std::ostringstream os;
  os << "{\n  \"kind\": " << quote_string(to_string(order.kind)) << ",\n  \"elements\": [";
  for (std::size_t i = 0; i < L.size(); ++i) os << (i ? ", " : "") << quote_string(L.name(ElementId{i}));
  os << "],\n  \"hasse\": [";
  for (std::size_t i = 0; i < order.hasse.size(); ++i)
    os << (i ? "," : "") << "\n    [" << quote_string(L.name(ElementId{order.hasse[i].first})) << ", "
       << quote_string(L.name(ElementId{order.hasse[i].second})) << "]";
  os << (order.hasse.empty() ? "]" : "\n  ]") << "\n}\n";
  return os.str();
}

std::string order_dot(const Lattice& L, const OrderRelation& order) {
  std::ostringstream os;
  os << "digraph " << to_string(order.kind) << " {\n  node [shape=plaintext];\n  edge [dir=none];\n";
  for (std::size_t i = 0; i < L.size(); ++i) os << "  " << quote_string(L.name(ElementId{i})) << ";\n";
  for (const auto& [u, l] : order.hasse)
    os << "  " << quote_string(L.name(ElementId{u})) << " -> " << quote_string(L.name(ElementId{l})) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace latkit
