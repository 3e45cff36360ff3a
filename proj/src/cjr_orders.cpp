#include "latkit/cjr_orders.hpp"

#include <string>

namespace latkit {

CanonicalJoinRep cjr(const Lattice& L, const ArrowLabeling& lab, ElementId x) {
  CanonicalJoinRep rep{x, lab.labels_down(x)};
  const auto joinands = rep.joinands.indices();
  auto fail = [&](const std::string& what) {
    throw LatticeError(ErrorKind::NotSemidistributive, "canonical join representation of '" + L.name(x) + "' " + what);
  };
  if (!rep.joinands.is_subset_of(lab.jirr())) fail("has a joinand that is not join-irreducible");
  if (L.join(rep.joinands) != x) fail("does not join to the element");
  for (auto i : joinands)
    for (auto j : joinands) {
      if (i == j) continue;
      if (L.leq(ElementId{i}, ElementId{j})) fail("is not an antichain");
      if (!L.leq(ElementId{i}, lab.kappa(ElementId{j}))) fail("is not pairwise orthogonal");
    }
  return rep;
}

bool verify_cjr_oracle(const Lattice& L, ElementId x, const Bitset& rep) {
  const std::size_t n = L.size();
  if (n > kOracleLimit)
    throw LatticeError(ErrorKind::TooLarge, "oracle limited to " + std::to_string(kOracleLimit) + " elements");
  const auto a = rep.indices();
  for (auto i : a)
    for (auto j : a)
      if (i != j && L.leq(ElementId{i}, ElementId{j})) return false;
  if (L.join(rep) != x) return false;

  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Bitset b(n);
    for (std::size_t k = 0; k < n; ++k)
      if ((mask >> k) & 1U) b.set(k);
    if (L.join(b) != x) continue;
    for (auto i : a) {
      bool refined = false;
      b.for_each([&](std::size_t k) { refined = refined || L.leq(ElementId{i}, ElementId{k}); });
      if (!refined) return false;
    }
  }
  return true;
}

bool gorbunov_check(const Lattice& L, ElementId x) {
  Bitset covered(L.size());
  for (auto c : L.covers_down(x)) covered |= L.down_set(c);
  Bitset strict = L.down_set(x);
  strict.reset(x.index);
  return strict.is_subset_of(covered);
}

ElementId extended_kappa(const Lattice& L, const ArrowLabeling& lab, ElementId x) {
  const auto rep = cjr(L, lab, x);
  ElementId result = L.top();
  rep.joinands.for_each([&](std::size_t j) { result = L.meet(result, lab.kappa(ElementId{j})); });
  if (lab.labels_up(result) != rep.joinands)
    throw LatticeError(ErrorKind::NotSemidistributive,
                       "down-labels of '" + L.name(x) + "' differ from up-labels of '" + L.name(result) + "'");
  return result;
}

ElementId x_down(const Lattice& L, ElementId x) {
  return L.meet(x, L.meet(std::span<const ElementId>(L.covers_down(x))));
}

JirrSet core_labels(const Lattice& L, const ArrowLabeling& lab, ElementId x) {
  return jlabel(L, lab, Interval{x_down(L, x), x});
}

bool kappa_leq(const Lattice& L, const ArrowLabeling& lab, ElementId x, ElementId y) {
  return L.leq(x, y) && L.leq(extended_kappa(L, lab, y), extended_kappa(L, lab, x));
}

bool clo_leq(const Lattice& L, const ArrowLabeling& lab, ElementId x, ElementId y) {
  return core_labels(L, lab, x).is_subset_of(core_labels(L, lab, y));
}

std::string_view to_string(OrderKind kind) noexcept { return kind == OrderKind::Kappa ? "kappa" : "clo"; }

OrderKind parse_order_kind(std::string_view text) {
  if (text == "kappa") return OrderKind::Kappa;
  if (text == "clo") return OrderKind::Clo;
  throw LatticeError(ErrorKind::InvalidParameter, "unknown order kind '" + std::string(text) + "'");
}

namespace {

void require_antisymmetric(const Lattice& L, const std::vector<Bitset>& rows) {
  for (std::size_t x = 0; x < rows.size(); ++x)
    rows[x].for_each([&](std::size_t y) {
      if (y != x && rows[y].test(x))
        throw LatticeError(ErrorKind::NotAPartialOrder,
                           "'" + L.name(ElementId{x}) + "' and '" + L.name(ElementId{y}) + "' are mutually related");
    });
}

}  // namespace

OrderRelation order_poset(const Lattice& L, const ArrowLabeling& lab, OrderKind kind) {
  const std::size_t n = L.size();
  OrderRelation out;
  out.kind = kind;
  out.rows.assign(n, Bitset(n));
  if (kind == OrderKind::Kappa) {
    std::vector<ElementId> ek(n);
    for (std::size_t x = 0; x < n; ++x) ek[x] = extended_kappa(L, lab, ElementId{x});
    for (std::size_t x = 0; x < n; ++x)
      L.up_set(ElementId{x}).for_each([&](std::size_t y) {
        if (L.leq(ek[y], ek[x])) out.rows[x].set(y);
      });
  } else {
    std::vector<JirrSet> core(n);
    for (std::size_t x = 0; x < n; ++x) {
      core[x] = core_labels(L, lab, ElementId{x});
      if (L.join(core[x]).index != x)
        throw LatticeError(ErrorKind::NotAPartialOrder,
                           "'" + L.name(ElementId{x}) + "' is not the join of its core labels");
    }
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (core[x].is_subset_of(core[y])) out.rows[x].set(y);
  }
  require_antisymmetric(L, out.rows);
  out.hasse = hasse_from_relation(out.rows);
  return out;
}

CoincidenceReport orders_coincide(const Lattice& L, const ArrowLabeling& lab) {
  const auto kappa_order = order_poset(L, lab, OrderKind::Kappa);
  const auto clo_order = order_poset(L, lab, OrderKind::Clo);
  for (std::size_t x = 0; x < L.size(); ++x) {
    const Bitset diff = kappa_order.rows[x] ^ clo_order.rows[x];
    if (auto y = diff.find_first(); y != Bitset::npos)
      return {false, std::make_pair(ElementId{x}, ElementId{y})};
  }
  return {};
}

SufficientReport coincide_sufficient(const Lattice& L, const ArrowLabeling& lab) {
  for (std::size_t i = 0; i < L.size(); ++i) {
    const ElementId x{i};
    const ElementId ek = extended_kappa(L, lab, x);
    JirrSet rhs(L.size());
    (lab.jirr() & L.down_set(x)).for_each([&](std::size_t j) {
      if (L.leq(ek, lab.kappa(ElementId{j}))) rhs.set(j);
    });
    if (core_labels(L, lab, x) != rhs) return {false, x};
  }
  return {};
}

}  // namespace latkit
