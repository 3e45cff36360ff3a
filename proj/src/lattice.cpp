#include "latkit/lattice.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace latkit {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::CyclicCovers: return "CyclicCovers";
    case ErrorKind::RedundantCover: return "RedundantCover";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NoBoundedStructure: return "NoBoundedStructure";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::NotSemidistributive: return "NotSemidistributive";
    case ErrorKind::NotAnArrow: return "NotAnArrow";
    case ErrorKind::NotJoinIrreducible: return "NotJoinIrreducible";
    case ErrorKind::NotMeetIrreducible: return "NotMeetIrreducible";
    case ErrorKind::InvalidInterval: return "InvalidInterval";
    case ErrorKind::InvalidElement: return "InvalidElement";
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::optional<ElementId> Lattice::find(std::string_view name) const {
  auto it = index_of_.find(std::string(name));
  if (it == index_of_.end()) return std::nullopt;
  return ElementId{it->second};
}

ElementId Lattice::id(std::string_view name) const {
  if (auto x = find(name)) return *x;
  throw LatticeError(ErrorKind::InvalidElement, "no element named '" + std::string(name) + "'");
}

ElementId Lattice::join(ElementId a, ElementId b) const noexcept {
  if (!join_table_.empty()) return ElementId{join_table_[a.index * size() + b.index]};
  // The least common upper bound has the smallest index among them.
  return ElementId{up_[a.index].find_first_common(up_[b.index])};
}

ElementId Lattice::meet(ElementId a, ElementId b) const noexcept {
  if (!meet_table_.empty()) return ElementId{meet_table_[a.index * size() + b.index]};
  return ElementId{down_[a.index].find_last_common(down_[b.index])};
}

ElementId Lattice::join(std::span<const ElementId> xs) const noexcept {
  ElementId acc = bottom_;
  for (auto x : xs) acc = join(acc, x);
  return acc;
}

ElementId Lattice::meet(std::span<const ElementId> xs) const noexcept {
  ElementId acc = top_;
  for (auto x : xs) acc = meet(acc, x);
  return acc;
}

ElementId Lattice::join(const Bitset& xs) const noexcept {
  ElementId acc = bottom_;
  xs.for_each([&](std::size_t i) { acc = join(acc, ElementId{i}); });
  return acc;
}

ElementId Lattice::meet(const Bitset& xs) const noexcept {
  ElementId acc = top_;
  xs.for_each([&](std::size_t i) { acc = meet(acc, ElementId{i}); });
  return acc;
}

bool Lattice::covers(ElementId upper, ElementId lower) const noexcept {
  const auto& down = covers_down_[upper.index];
  return std::binary_search(down.begin(), down.end(), lower);
}

std::vector<Arrow> Lattice::arrows() const {
  std::vector<Arrow> out;
  out.reserve(arrow_count_);
  for (std::size_t u = 0; u < size(); ++u)
    for (auto l : covers_down_[u]) out.push_back({ElementId{u}, l});
  return out;
}

std::vector<Interval> Lattice::intervals() const {
  std::vector<Interval> out;
  out.reserve(interval_count());
  for (std::size_t a = 0; a < size(); ++a)
    up_[a].for_each([&](std::size_t b) { out.push_back({ElementId{a}, ElementId{b}}); });
  return out;
}

std::size_t Lattice::interval_count() const noexcept {
  std::size_t c = 0;
  for (const auto& row : up_) c += row.count();
  return c;
}

ElementId Lattice::star_down(ElementId x) const noexcept {
  Bitset strict = down_[x.index];
  strict.reset(x.index);
  return join(strict);
}

ElementId Lattice::star_up(ElementId x) const noexcept {
  Bitset strict = up_[x.index];
  strict.reset(x.index);
  return meet(strict);
}

Lattice build_lattice(std::vector<std::string> names,
                      const std::vector<std::pair<std::string, std::string>>& covers) {
  const std::size_t n = names.size();
  if (n == 0) throw LatticeError(ErrorKind::NoBoundedStructure, "no elements");
  if (n > kMaxElements)
    throw LatticeError(ErrorKind::TooLarge,
                       std::to_string(n) + " elements exceeds the cap of " + std::to_string(kMaxElements));

  std::unordered_map<std::string, std::size_t> input_pos;
  for (std::size_t i = 0; i < n; ++i)
    if (!input_pos.emplace(names[i], i).second)
      throw LatticeError(ErrorKind::DuplicateName, "'" + names[i] + "' listed twice");

  auto lookup = [&](const std::string& s) {
    auto it = input_pos.find(s);
    if (it == input_pos.end()) throw LatticeError(ErrorKind::UnknownName, "cover references '" + s + "'");
    return it->second;
  };

  // Edges in input positions.
  std::vector<std::vector<std::size_t>> lower_of(n), upper_of(n);
  for (const auto& [u, l] : covers) {
    std::size_t pu = lookup(u), pl = lookup(l);
    if (pu == pl) throw LatticeError(ErrorKind::CyclicCovers, "'" + u + "' covers itself");
    if (std::find(lower_of[pu].begin(), lower_of[pu].end(), pl) != lower_of[pu].end())
      throw LatticeError(ErrorKind::RedundantCover, "cover ('" + u + "', '" + l + "') listed twice");
    lower_of[pu].push_back(pl);
    upper_of[pl].push_back(pu);
  }

  // Kahn from the bottom; ready elements leave in input order.
  std::vector<std::size_t> pending(n);
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < n; ++i) {
    pending[i] = lower_of[i].size();
    if (pending[i] == 0) ready.push(i);
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    std::size_t p = ready.top();
    ready.pop();
    order.push_back(p);
    for (auto q : upper_of[p])
      if (--pending[q] == 0) ready.push(q);
  }
  if (order.size() != n) {
    for (std::size_t i = 0; i < n; ++i)
      if (pending[i] != 0)
        throw LatticeError(ErrorKind::CyclicCovers, "cycle through or above '" + names[i] + "'");
  }

  std::vector<std::size_t> new_index(n);
  for (std::size_t k = 0; k < n; ++k) new_index[order[k]] = k;

  Lattice L;
  L.names_.resize(n);
  for (std::size_t k = 0; k < n; ++k) L.names_[k] = std::move(names[order[k]]);
  for (std::size_t k = 0; k < n; ++k) L.index_of_.emplace(L.names_[k], k);

  L.covers_down_.assign(n, {});
  L.covers_up_.assign(n, {});
  for (std::size_t p = 0; p < n; ++p)
    for (auto q : lower_of[p]) {
      L.covers_down_[new_index[p]].push_back(ElementId{new_index[q]});
      L.covers_up_[new_index[q]].push_back(ElementId{new_index[p]});
      ++L.arrow_count_;
    }
  for (auto& v : L.covers_down_) std::sort(v.begin(), v.end());
  for (auto& v : L.covers_up_) std::sort(v.begin(), v.end());

  // Reflexive-transitive closure, bottom-up.
  L.down_.assign(n, Bitset(n));
  L.up_.assign(n, Bitset(n));
  for (std::size_t x = 0; x < n; ++x) {
    L.down_[x].set(x);
    for (auto l : L.covers_down_[x]) L.down_[x] |= L.down_[l.index];
  }
  for (std::size_t x = 0; x < n; ++x) L.down_[x].for_each([&](std::size_t y) { L.up_[y].set(x); });

  // An arrow u -> l is implied transitively iff l lies below another lower cover of u.
  for (std::size_t u = 0; u < n; ++u)
    for (auto l : L.covers_down_[u])
      for (auto c : L.covers_down_[u])
        if (c != l && L.down_[c.index].test(l.index))
          throw LatticeError(ErrorKind::RedundantCover, "cover ('" + L.names_[u] + "', '" +
                                                            L.names_[l.index] + "') is implied via '" +
                                                            L.names_[c.index] + "'");

  std::vector<std::size_t> minimal, maximal;
  for (std::size_t x = 0; x < n; ++x) {
    if (L.covers_down_[x].empty()) minimal.push_back(x);
    if (L.covers_up_[x].empty()) maximal.push_back(x);
  }
  if (minimal.size() != 1 || maximal.size() != 1)
    throw LatticeError(ErrorKind::NoBoundedStructure, std::to_string(minimal.size()) + " minimal and " +
                                                          std::to_string(maximal.size()) + " maximal elements");
  L.bottom_ = ElementId{minimal.front()};
  L.top_ = ElementId{maximal.front()};

  // With a top element, existence of all pairwise joins makes a lattice.
  const bool tables = n <= Lattice::kTableLimit;
  if (tables) {
    L.join_table_.resize(n * n);
    L.meet_table_.resize(n * n);
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      std::size_t j = L.up_[a].find_first_common(L.up_[b]);
      if (!L.up_[a].common_subset_of(L.up_[b], L.up_[j]))
        throw LatticeError(ErrorKind::NotALattice,
                           "'" + L.names_[a] + "' and '" + L.names_[b] + "' have no least upper bound");
      if (tables) {
        std::size_t m = L.down_[a].find_last_common(L.down_[b]);
        L.join_table_[a * n + b] = L.join_table_[b * n + a] = static_cast<std::uint16_t>(j);
        L.meet_table_[a * n + b] = L.meet_table_[b * n + a] = static_cast<std::uint16_t>(m);
      }
    }
  }
  return L;
}

std::vector<std::pair<std::size_t, std::size_t>> hasse_from_relation(const std::vector<Bitset>& rows) {
  const std::size_t n = rows.size();
  std::vector<Bitset> strict(rows);
  for (std::size_t x = 0; x < n; ++x) strict[x].reset(x);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < n; ++x) {
    Bitset reach_twice(n);
    strict[x].for_each([&](std::size_t z) { reach_twice |= strict[z]; });
    (strict[x] - reach_twice).for_each([&](std::size_t y) { out.emplace_back(y, x); });
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace latkit
