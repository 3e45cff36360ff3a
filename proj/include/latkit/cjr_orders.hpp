#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "latkit/interval_atlas.hpp"

namespace latkit {

/// x = join(joinands), with joinands a pairwise orthogonal antichain of
/// join-irreducibles (i <= kappa(j) for distinct i, j).
struct CanonicalJoinRep {
  ElementId element;
  JirrSet joinands;
};

/// Labels of the arrows leaving x downwards. The three CJR invariants are
/// checked before returning; a failure throws NotSemidistributive.
CanonicalJoinRep cjr(const Lattice& L, const ArrowLabeling& lab, ElementId x);

/// Exhaustive check that rep is the canonical join representation of x:
/// rep is an antichain joining to x that refines every B with join(B) = x.
/// Independent of the labeling. Throws TooLarge above kOracleLimit elements.
inline constexpr std::size_t kOracleLimit = 12;
bool verify_cjr_oracle(const Lattice& L, ElementId x, const Bitset& rep);

/// Every y < x lies below some lower cover of x.
bool gorbunov_check(const Lattice& L, ElementId x);

/// meet{kappa(j) | j in cjr(x)}; bottom maps to top. Asserts that the
/// down-labels of x equal the up-labels of the result.
ElementId extended_kappa(const Lattice& L, const ArrowLabeling& lab, ElementId x);

/// x ^ meet{lower covers of x}.
ElementId x_down(const Lattice& L, ElementId x);

/// jlabel[x_down(x), x].
JirrSet core_labels(const Lattice& L, const ArrowLabeling& lab, ElementId x);

/// x <= y and extended_kappa(x) >= extended_kappa(y).
bool kappa_leq(const Lattice& L, const ArrowLabeling& lab, ElementId x, ElementId y);
/// core_labels(x) is a subset of core_labels(y).
bool clo_leq(const Lattice& L, const ArrowLabeling& lab, ElementId x, ElementId y);

enum class OrderKind { Kappa, Clo };

std::string_view to_string(OrderKind kind) noexcept;
/// Accepts "kappa", "clo"; throws InvalidParameter otherwise.
OrderKind parse_order_kind(std::string_view text);

struct OrderRelation {
  OrderKind kind = OrderKind::Kappa;
  /// rows[x] = {y | x <= y} in the new order.
  std::vector<Bitset> rows;
  /// (upper, lower) element index pairs, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> hasse;

  bool leq(ElementId x, ElementId y) const noexcept { return rows[x.index].test(y.index); }
};

/// Throws NotAPartialOrder if the relation is not antisymmetric (and, for
/// clo, if some x differs from the join of its core labels).
OrderRelation order_poset(const Lattice& L, const ArrowLabeling& lab, OrderKind kind);

struct CoincidenceReport {
  bool coincide = true;
  /// First (x, y) in index order where the two relations disagree.
  std::optional<std::pair<ElementId, ElementId>> witness;
};
CoincidenceReport orders_coincide(const Lattice& L, const ArrowLabeling& lab);

struct SufficientReport {
  bool holds = true;
  /// First element where core_labels(x) != {j <= x | kappa(j) >= extended_kappa(x)}.
  std::optional<ElementId> failing;
};
SufficientReport coincide_sufficient(const Lattice& L, const ArrowLabeling& lab);

}  // namespace latkit
