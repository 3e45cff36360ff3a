#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latkit/lattice.hpp"
#include "latkit/semidistributive.hpp"

namespace latkit {

/// Subset of the join-irreducibles, stored over element indices.
using JirrSet = Bitset;

/// {j in jirr | j <= upper and kappa(j) >= lower}. Throws InvalidInterval.
JirrSet jlabel(const Lattice& L, const ArrowLabeling& lab, Interval iv);

/// Labels gamma(x -> y) of all arrows with lower <= y and x <= upper.
/// Agrees with jlabel on semidistributive lattices. Throws InvalidInterval.
JirrSet jlabel_scan(const Lattice& L, const ArrowLabeling& lab, Interval iv);

/// upper = lower v join{a' | lower covered by a' <= upper}.
bool is_wide_interval(const Lattice& L, Interval iv);
/// upper <= lower v join{a' | lower covered by a'}.
bool is_ice_interval(const Lattice& L, Interval iv);

enum class IntervalKind { All, Wide, Ice };

std::string_view to_string(IntervalKind kind) noexcept;
/// Accepts "all", "wide", "ice"; throws InvalidParameter otherwise.
IntervalKind parse_interval_kind(std::string_view text);

/// Inclusion poset of the distinct jlabel images of one kind of interval.
struct SetFamilyPoset {
  IntervalKind kind = IntervalKind::All;
  /// Sorted by cardinality, then lexicographically by element index.
  std::vector<JirrSet> members;
  /// First interval (in enumeration order) whose image is members[i].
  std::vector<Interval> witnesses;
  /// (upper, lower) index pairs into members.
  std::vector<std::pair<std::size_t, std::size_t>> hasse;
};

SetFamilyPoset derived_poset(const Lattice& L, const ArrowLabeling& lab, IntervalKind kind);

/// Canonical order on sets: cardinality first, then the sorted index lists
/// compared lexicographically.
bool canonical_less(const JirrSet& a, const JirrSet& b);

/// Renders a set as "{a,b,c}" using element names in index order.
std::string format_set(const Lattice& L, const Bitset& s);

}  // namespace latkit
