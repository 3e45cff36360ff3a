#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latkit/bitset.hpp"
#include "latkit/error.hpp"

namespace latkit {

/// Dense index of a lattice element. Indices form a linear extension of the
/// order: x < y implies index(x) < index(y).
struct ElementId {
  std::size_t index = 0;

  constexpr ElementId() = default;
  constexpr explicit ElementId(std::size_t i) : index(i) {}

  friend constexpr auto operator<=>(ElementId, ElementId) = default;
};

/// A Hasse arrow upper -> lower, i.e. upper covers lower.
struct Arrow {
  ElementId upper;
  ElementId lower;

  friend constexpr auto operator<=>(const Arrow&, const Arrow&) = default;
};

/// Closed interval [lower, upper].
struct Interval {
  ElementId lower;
  ElementId upper;

  friend constexpr auto operator<=>(const Interval&, const Interval&) = default;
};

inline constexpr std::size_t kMaxElements = 5000;

/// Immutable finite lattice presented by its Hasse quiver.
///
/// Built once by build_lattice(); every query afterwards is const and safe to
/// call from several threads.
class Lattice {
 public:
  std::size_t size() const noexcept { return names_.size(); }

  const std::string& name(ElementId x) const { return names_[x.index]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<ElementId> find(std::string_view name) const;
  /// Throws InvalidElement for unknown names.
  ElementId id(std::string_view name) const;

  ElementId bottom() const noexcept { return bottom_; }
  ElementId top() const noexcept { return top_; }

  bool leq(ElementId a, ElementId b) const noexcept { return up_[a.index].test(b.index); }
  bool less(ElementId a, ElementId b) const noexcept { return a != b && leq(a, b); }

  /// {y | x <= y} and {y | y <= x}.
  const Bitset& up_set(ElementId x) const noexcept { return up_[x.index]; }
  const Bitset& down_set(ElementId x) const noexcept { return down_[x.index]; }

  ElementId join(ElementId a, ElementId b) const noexcept;
  ElementId meet(ElementId a, ElementId b) const noexcept;
  /// join of the empty set is bottom, meet of the empty set is top.
  ElementId join(std::span<const ElementId> xs) const noexcept;
  ElementId meet(std::span<const ElementId> xs) const noexcept;
  ElementId join(const Bitset& xs) const noexcept;
  ElementId meet(const Bitset& xs) const noexcept;

  const std::vector<ElementId>& covers_up(ElementId x) const noexcept { return covers_up_[x.index]; }
  const std::vector<ElementId>& covers_down(ElementId x) const noexcept { return covers_down_[x.index]; }
  bool covers(ElementId upper, ElementId lower) const noexcept;

  /// All Hasse arrows sorted by (upper, lower).
  std::vector<Arrow> arrows() const;
  std::size_t arrow_count() const noexcept { return arrow_count_; }

  /// All [a,b] with a <= b, in lexicographic (lower, upper) index order.
  std::vector<Interval> intervals() const;
  std::size_t interval_count() const noexcept;
  bool is_interval(Interval iv) const noexcept {
    return iv.lower.index < size() && iv.upper.index < size() && leq(iv.lower, iv.upper);
  }

  /// Join of everything strictly below x, and meet of everything strictly above.
  ElementId star_down(ElementId x) const noexcept;
  ElementId star_up(ElementId x) const noexcept;

  friend Lattice build_lattice(std::vector<std::string> names,
                               const std::vector<std::pair<std::string, std::string>>& covers);

 private:
  static constexpr std::size_t kTableLimit = 2048;

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_of_;
  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
  std::vector<std::vector<ElementId>> covers_up_;
  std::vector<std::vector<ElementId>> covers_down_;
  std::size_t arrow_count_ = 0;
  ElementId bottom_;
  ElementId top_;
  // Dense join/meet tables, only filled for size() <= kTableLimit.
  std::vector<std::uint16_t> join_table_;
  std::vector<std::uint16_t> meet_table_;
};

/// Validates a Hasse quiver and builds the lattice it presents.
///
/// covers holds (upper, lower) name pairs. Element indices are assigned by a
/// Kahn topological sort from the bottom with ties broken by input order.
/// Throws LatticeError with kind DuplicateName, UnknownName, CyclicCovers,
/// RedundantCover, NoBoundedStructure, NotALattice or TooLarge.
Lattice build_lattice(std::vector<std::string> names,
                      const std::vector<std::pair<std::string, std::string>>& covers);

/// Transitive reduction of a partial order given by up-set rows
/// (rows[x] = {y | x <= y}). Returns (upper, lower) cover pairs sorted.
std::vector<std::pair<std::size_t, std::size_t>> hasse_from_relation(const std::vector<Bitset>& rows);

}  // namespace latkit
