#include "latkit/interval_atlas.hpp"

#include <algorithm>
#include <map>

namespace latkit {

namespace {

void require_interval(const Lattice& L, Interval iv) {
  if (!L.is_interval(iv)) throw LatticeError(ErrorKind::InvalidInterval, "lower is not below upper");
}

struct CanonicalLess {
  bool operator()(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

}  // namespace

JirrSet jlabel(const Lattice& L, const ArrowLabeling& lab, Interval iv) {
  require_interval(L, iv);
  JirrSet out(L.size());
  (lab.jirr() & L.down_set(iv.upper)).for_each([&](std::size_t j) {
    if (L.leq(iv.lower, lab.kappa(ElementId{j}))) out.set(j);
  });
  return out;
}

JirrSet jlabel_scan(const Lattice& L, const ArrowLabeling& lab, Interval iv) {
  require_interval(L, iv);
  JirrSet out(L.size());
  (L.up_set(iv.lower) & L.down_set(iv.upper)).for_each([&](std::size_t y) {
    const ElementId lower{y};
    for (auto upper : L.covers_up(lower))
      if (L.leq(upper, iv.upper)) out.set(lab.gamma(upper, lower).index);
  });
  return out;
}

bool is_wide_interval(const Lattice& L, Interval iv) {
  require_interval(L, iv);
  ElementId acc = iv.lower;
  for (auto c : L.covers_up(iv.lower))
    if (L.leq(c, iv.upper)) acc = L.join(acc, c);
  return acc == iv.upper;
}

bool is_ice_interval(const Lattice& L, Interval iv) {
  require_interval(L, iv);
  ElementId acc = iv.lower;
  for (auto c : L.covers_up(iv.lower)) acc = L.join(acc, c);
  return L.leq(iv.upper, acc);
}

std::string_view to_string(IntervalKind kind) noexcept {
  switch (kind) {
    case IntervalKind::All: return "all";
    case IntervalKind::Wide: return "wide";
    case IntervalKind::Ice: return "ice";
  }
  return "all";
}

IntervalKind parse_interval_kind(std::string_view text) {
  if (text == "all") return IntervalKind::All;
  if (text == "wide") return IntervalKind::Wide;
  if (text == "ice") return IntervalKind::Ice;
  throw LatticeError(ErrorKind::InvalidParameter, "unknown interval kind '" + std::string(text) + "'");
}

SetFamilyPoset derived_poset(const Lattice& L, const ArrowLabeling& lab, IntervalKind kind) {
  std::map<std::vector<std::size_t>, Interval, CanonicalLess> images;
  for (const auto& iv : L.intervals()) {
    if (kind == IntervalKind::Wide && !is_wide_interval(L, iv)) continue;
    if (kind == IntervalKind::Ice && !is_ice_interval(L, iv)) continue;
    images.emplace(jlabel(L, lab, iv).indices(), iv);
  }

  SetFamilyPoset out;
  out.kind = kind;
  for (const auto& [idx, iv] : images) {
    JirrSet s(L.size());
    for (auto i : idx) s.set(i);
    out.members.push_back(std::move(s));
    out.witnesses.push_back(iv);
  }

  const std::size_t m = out.members.size();
  std::vector<Bitset> rows(m, Bitset(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (out.members[a].is_subset_of(out.members[b])) rows[a].set(b);
  out.hasse = hasse_from_relation(rows);
  return out;
}

bool canonical_less(const JirrSet& a, const JirrSet& b) {
  return CanonicalLess{}(a.indices(), b.indices());
}

std::string format_set(const Lattice& L, const Bitset& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ',';
    out += L.name(ElementId{i});
    first = false;
  });
  return out + "}";
}

}  // namespace latkit
