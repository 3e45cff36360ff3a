#pragma once

#include <optional>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

/// A triple breaking one of the pairwise semidistributive laws:
///   join law: a v x = a v y  but  a v (x ^ y) != a v x
///   meet law: a ^ x = a ^ y  but  a ^ (x v y) != a ^ x
struct SdViolation {
  enum class Law { Join, Meet };
  Law law;
  ElementId a;
  ElementId x;
  ElementId y;
};

struct SdReport {
  bool semidistributive = true;
  std::optional<SdViolation> witness;

  explicit operator bool() const noexcept { return semidistributive; }
};

/// Checks both pairwise laws in O(n^2) lattice operations. On failure the
/// witness has the smallest failing a (join law before meet law).
SdReport is_semidistributive(const Lattice& L);

/// {x | x_* != x} and {x | x^* != x}.
Bitset join_irreducibles(const Lattice& L);
Bitset meet_irreducibles(const Lattice& L);

/// min{x | lower v x = upper}. Throws NotAnArrow or NotSemidistributive.
ElementId gamma(const Lattice& L, Arrow arrow);
/// max{x | upper ^ x = lower}. Throws NotAnArrow or NotSemidistributive.
ElementId mu(const Lattice& L, Arrow arrow);

/// max{x | j ^ x = j_*}, defined for completely join-irreducible j only.
ElementId kappa(const Lattice& L, ElementId j);
/// min{x | m v x = m^*}, defined for completely meet-irreducible m only.
ElementId kappa_dual(const Lattice& L, ElementId m);

/// Both arrow labelings of a semidistributive lattice together with the
/// kappa bijection between join- and meet-irreducibles.
class ArrowLabeling {
 public:
  const Bitset& jirr() const noexcept { return jirr_; }
  const Bitset& mirr() const noexcept { return mirr_; }

  /// Arrows sorted by (upper, lower), parallel to gammas() and mus().
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const std::vector<ElementId>& gammas() const noexcept { return gamma_; }
  const std::vector<ElementId>& mus() const noexcept { return mu_; }

  ElementId gamma(ElementId upper, ElementId lower) const { return gamma_[arrow_index(upper, lower)]; }
  ElementId gamma(Arrow a) const { return gamma(a.upper, a.lower); }
  ElementId mu(ElementId upper, ElementId lower) const { return mu_[arrow_index(upper, lower)]; }
  ElementId mu(Arrow a) const { return mu(a.upper, a.lower); }

  ElementId kappa(ElementId j) const;
  ElementId kappa_dual(ElementId m) const;

  /// Labels of arrows starting at x (x -> y) and ending at x (z -> x).
  Bitset labels_down(ElementId x) const;
  Bitset labels_up(ElementId x) const;

  std::size_t element_count() const noexcept { return kappa_.size(); }

  friend ArrowLabeling full_labeling(const Lattice& L);

 private:
  std::size_t arrow_index(ElementId upper, ElementId lower) const;

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  Bitset jirr_;
  Bitset mirr_;
  std::vector<Arrow> arrows_;
  std::vector<std::size_t> first_arrow_;  // arrows with upper == u live in [first_arrow_[u], first_arrow_[u+1])
  std::vector<ElementId> gamma_;
  std::vector<ElementId> mu_;
  std::vector<std::vector<ElementId>> up_labels_;
  std::vector<std::size_t> kappa_;
  std::vector<std::size_t> kappa_dual_;
};

/// Computes gamma and mu on every arrow plus the kappa tables, after checking
/// that mu = kappa . gamma arrow-wise, that kappa and kappa_dual are mutually
/// inverse, and that j v kappa(j) = kappa(j)^* and j ^ kappa(j) = j_*.
/// Throws NotSemidistributive.
ArrowLabeling full_labeling(const Lattice& L);

}  // namespace latkit
