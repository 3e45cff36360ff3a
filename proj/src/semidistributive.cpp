#include "latkit/semidistributive.hpp"

#include <algorithm>
#include <string>

namespace latkit {

namespace {

std::string arrow_text(const Lattice& L, Arrow a) { return L.name(a.upper) + " -> " + L.name(a.lower); }

void require_arrow(const Lattice& L, Arrow a) {
  if (a.upper.index >= L.size() || a.lower.index >= L.size() || !L.covers(a.upper, a.lower))
    throw LatticeError(ErrorKind::NotAnArrow, "not a Hasse arrow");
}

// Scans a for one law. op is the lattice operation, dual is the other one.
template <typename Op, typename Dual>
std::optional<SdViolation> first_violation(const Lattice& L, SdViolation::Law law, Op op, Dual dual) {
  const std::size_t n = L.size();
  std::vector<std::size_t> class_meet(n);
  std::vector<bool> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    const ElementId ea{a};
    std::fill(seen.begin(), seen.end(), false);
    // Each class {x | op(a,x) = v} must be closed under the dual operation;
    // for finite lattices it suffices that the dual-fold of the class stays in it.
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t v = op(ea, ElementId{x}).index;
      class_meet[v] = seen[v] ? dual(ElementId{class_meet[v]}, ElementId{x}).index : x;
      seen[v] = true;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (!seen[v] || op(ea, ElementId{class_meet[v]}).index == v) continue;
      std::vector<std::size_t> members;
      for (std::size_t x = 0; x < n; ++x)
        if (op(ea, ElementId{x}).index == v) members.push_back(x);
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t k = i + 1; k < members.size(); ++k) {
          ElementId x{members[i]}, y{members[k]};
          if (op(ea, dual(x, y)).index != v) return SdViolation{law, ea, x, y};
        }
    }
  }
  return std::nullopt;
}

}  // namespace

SdReport is_semidistributive(const Lattice& L) {
  auto j = [&](ElementId a, ElementId b) { return L.join(a, b); };
  auto m = [&](ElementId a, ElementId b) { return L.meet(a, b); };
  if (auto w = first_violation(L, SdViolation::Law::Join, j, m)) return {false, w};
  if (auto w = first_violation(L, SdViolation::Law::Meet, m, j)) return {false, w};
  return {};
}

Bitset join_irreducibles(const Lattice& L) {
  Bitset out(L.size());
  for (std::size_t x = 0; x < L.size(); ++x)
    if (L.star_down(ElementId{x}).index != x) out.set(x);
  return out;
}

Bitset meet_irreducibles(const Lattice& L) {
  Bitset out(L.size());
  for (std::size_t x = 0; x < L.size(); ++x)
    if (L.star_up(ElementId{x}).index != x) out.set(x);
  return out;
}

ElementId gamma(const Lattice& L, Arrow arrow) {
  require_arrow(L, arrow);
  Bitset candidates(L.size());
  L.down_set(arrow.upper).for_each([&](std::size_t x) {
    if (L.join(arrow.lower, ElementId{x}) == arrow.upper) candidates.set(x);
  });
  ElementId j{candidates.find_first()};
  if (!candidates.is_subset_of(L.up_set(j)))
    throw LatticeError(ErrorKind::NotSemidistributive,
                       "no minimum x with lower v x = upper on " + arrow_text(L, arrow));
  if (L.meet(arrow.lower, j) != L.star_down(j) || L.star_down(j) == j)
    throw LatticeError(ErrorKind::NotSemidistributive, "label of " + arrow_text(L, arrow) + " is not join-irreducible");
  return j;
}

ElementId mu(const Lattice& L, Arrow arrow) {
  require_arrow(L, arrow);
  Bitset candidates(L.size());
  L.up_set(arrow.lower).for_each([&](std::size_t x) {
    if (L.meet(arrow.upper, ElementId{x}) == arrow.lower) candidates.set(x);
  });
  ElementId m{candidates.find_last()};
  if (!candidates.is_subset_of(L.down_set(m)))
    throw LatticeError(ErrorKind::NotSemidistributive,
                       "no maximum x with upper ^ x = lower on " + arrow_text(L, arrow));
  if (L.join(arrow.upper, m) != L.star_up(m) || L.star_up(m) == m)
    throw LatticeError(ErrorKind::NotSemidistributive, "label of " + arrow_text(L, arrow) + " is not meet-irreducible");
  return m;
}

ElementId kappa(const Lattice& L, ElementId j) {
  if (j.index >= L.size()) throw LatticeError(ErrorKind::InvalidElement, "element out of range");
  const ElementId j_star = L.star_down(j);
  if (j_star == j) throw LatticeError(ErrorKind::NotJoinIrreducible, "'" + L.name(j) + "'");
  Bitset candidates(L.size());
  L.up_set(j_star).for_each([&](std::size_t x) {
    if (L.meet(j, ElementId{x}) == j_star) candidates.set(x);
  });
  ElementId m{candidates.find_last()};
  if (!candidates.is_subset_of(L.down_set(m)))
    throw LatticeError(ErrorKind::NotSemidistributive, "kappa('" + L.name(j) + "') has no maximum");
  return m;
}

ElementId kappa_dual(const Lattice& L, ElementId m) {
  if (m.index >= L.size()) throw LatticeError(ErrorKind::InvalidElement, "element out of range");
  const ElementId m_star = L.star_up(m);
  if (m_star == m) throw LatticeError(ErrorKind::NotMeetIrreducible, "'" + L.name(m) + "'");
  Bitset candidates(L.size());
  L.down_set(m_star).for_each([&](std::size_t x) {
    if (L.join(m, ElementId{x}) == m_star) candidates.set(x);
  });
  ElementId j{candidates.find_first()};
  if (!candidates.is_subset_of(L.up_set(j)))
    throw LatticeError(ErrorKind::NotSemidistributive, "kappa_dual('" + L.name(m) + "') has no minimum");
  return j;
}

ElementId ArrowLabeling::kappa(ElementId j) const {
  if (j.index >= kappa_.size() || kappa_[j.index] == kNone)
    throw LatticeError(ErrorKind::NotJoinIrreducible, "element " + std::to_string(j.index));
  return ElementId{kappa_[j.index]};
}

ElementId ArrowLabeling::kappa_dual(ElementId m) const {
  if (m.index >= kappa_dual_.size() || kappa_dual_[m.index] == kNone)
    throw LatticeError(ErrorKind::NotMeetIrreducible, "element " + std::to_string(m.index));
  return ElementId{kappa_dual_[m.index]};
}

std::size_t ArrowLabeling::arrow_index(ElementId upper, ElementId lower) const {
  if (upper.index + 1 < first_arrow_.size()) {
    auto first = arrows_.begin() + static_cast<std::ptrdiff_t>(first_arrow_[upper.index]);
    auto last = arrows_.begin() + static_cast<std::ptrdiff_t>(first_arrow_[upper.index + 1]);
    auto it = std::lower_bound(first, last, Arrow{upper, lower});
    if (it != last && it->lower == lower) return static_cast<std::size_t>(it - arrows_.begin());
  }
  throw LatticeError(ErrorKind::NotAnArrow, "not a Hasse arrow");
}

Bitset ArrowLabeling::labels_down(ElementId x) const {
  Bitset out(element_count());
  for (std::size_t k = first_arrow_[x.index]; k < first_arrow_[x.index + 1]; ++k) out.set(gamma_[k].index);
  return out;
}

Bitset ArrowLabeling::labels_up(ElementId x) const {
  Bitset out(element_count());
  for (auto j : up_labels_[x.index]) out.set(j.index);
  return out;
}

ArrowLabeling full_labeling(const Lattice& L) {
  if (auto report = is_semidistributive(L); !report) {
    const auto& w = *report.witness;
    throw LatticeError(ErrorKind::NotSemidistributive,
                       std::string(w.law == SdViolation::Law::Join ? "join" : "meet") + " law fails at (" +
                           L.name(w.a) + ", " + L.name(w.x) + ", " + L.name(w.y) + ")");
  }
  const std::size_t n = L.size();
  ArrowLabeling lab;
  lab.jirr_ = join_irreducibles(L);
  lab.mirr_ = meet_irreducibles(L);
  lab.arrows_ = L.arrows();
  lab.first_arrow_.assign(n + 1, 0);
  for (const auto& a : lab.arrows_) ++lab.first_arrow_[a.upper.index + 1];
  for (std::size_t u = 0; u < n; ++u) lab.first_arrow_[u + 1] += lab.first_arrow_[u];

  lab.kappa_.assign(n, ArrowLabeling::kNone);
  lab.kappa_dual_.assign(n, ArrowLabeling::kNone);
  lab.jirr_.for_each([&](std::size_t j) { lab.kappa_[j] = kappa(L, ElementId{j}).index; });
  lab.mirr_.for_each([&](std::size_t m) { lab.kappa_dual_[m] = kappa_dual(L, ElementId{m}).index; });

  auto fail = [&](const std::string& what) { throw LatticeError(ErrorKind::NotSemidistributive, what); };

  lab.jirr_.for_each([&](std::size_t j) {
    const ElementId ej{j}, k{lab.kappa_[j]};
    if (lab.kappa_dual_[k.index] != j) fail("kappa_dual(kappa('" + L.name(ej) + "')) differs");
    if (L.meet(ej, k) != L.star_down(ej) || L.join(ej, k) != L.star_up(k))
      fail("kappa identities fail at '" + L.name(ej) + "'");
  });
  lab.mirr_.for_each([&](std::size_t m) {
    if (lab.kappa_[lab.kappa_dual_[m]] != m) fail("kappa(kappa_dual('" + L.name(ElementId{m}) + "')) differs");
  });

  lab.gamma_.reserve(lab.arrows_.size());
  lab.mu_.reserve(lab.arrows_.size());
  lab.up_labels_.assign(n, {});
  for (const auto& a : lab.arrows_) {
    ElementId g = gamma(L, a);
    ElementId m = mu(L, a);
    if (lab.kappa_[g.index] != m.index) fail("mu differs from kappa(gamma) on " + arrow_text(L, a));
    lab.gamma_.push_back(g);
    lab.mu_.push_back(m);
    lab.up_labels_[a.lower.index].push_back(g);
  }
  return lab;
}

}  // namespace latkit
