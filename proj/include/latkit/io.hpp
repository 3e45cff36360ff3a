#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latkit/cjr_orders.hpp"
#include "latkit/interval_atlas.hpp"
#include "latkit/lattice.hpp"
#include "latkit/semidistributive.hpp"

namespace latkit {

/// On-disk lattice description. Cover pairs are [upper, lower], i.e. the
/// Hasse arrow upper -> lower.
///
///   {
///     "elements": ["0", "a", "1"],
///     "covers": [
///       ["a", "0"],
///       ["1", "a"]
///     ],
///     "meta": {"source": "example"}
///   }
///
/// "meta" is optional and holds string values only.
struct LatticeDocument {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  std::map<std::string, std::string> meta;
};

/// Throws ParseError (with line number) on malformed JSON or wrong shape.
LatticeDocument parse_document(std::string_view text);
/// parse_document followed by build_lattice.
Lattice parse_lattice(std::string_view text);

/// Canonical document: elements in index order, covers sorted by (upper, lower) index.
LatticeDocument to_document(const Lattice& L, std::map<std::string, std::string> meta = {});
std::string emit_document(const LatticeDocument& doc);
std::string emit_lattice(const Lattice& L);

/// Graphviz digraph of the Hasse quiver with arrows pointing from the
/// covering element to the covered one. With a labeling, each edge carries
/// its gamma label; a highlighted interval shades its elements and arrows.
std::string emit_dot(const Lattice& L, const ArrowLabeling* labeling = nullptr,
                     std::optional<Interval> highlight = std::nullopt);

std::string poset_json(const Lattice& L, const SetFamilyPoset& poset);
std::string poset_dot(const Lattice& L, const SetFamilyPoset& poset);
std::string order_json(const Lattice& L, const OrderRelation& order);
std::string order_dot(const Lattice& L, const OrderRelation& order);

/// Double-quoted, escaped string usable in both JSON and DOT.
std::string quote_string(std::string_view s);

}  // namespace latkit
