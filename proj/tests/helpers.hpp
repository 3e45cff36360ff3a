#pragma once

#include <set>
#include <string>
#include <vector>

#include "latkit/lattice.hpp"

namespace test {

inline std::set<std::string> names(const latkit::Lattice& L, const latkit::Bitset& s) {
  std::set<std::string> out;
  s.for_each([&](std::size_t i) { out.insert(L.name(latkit::ElementId{i})); });
  return out;
}

inline std::set<std::string> names(const latkit::Lattice& L, const std::vector<latkit::ElementId>& xs) {
  std::set<std::string> out;
  for (auto x : xs) out.insert(L.name(x));
  return out;
}

inline latkit::Bitset set_of(const latkit::Lattice& L, const std::vector<std::string>& xs) {
  latkit::Bitset out(L.size());
  for (const auto& x : xs) out.set(L.id(x).index);
  return out;
}

template <typename F>
latkit::ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const latkit::LatticeError& e) {
    return e.kind();
  }
  throw std::logic_error("expected a LatticeError");
}

}  // namespace test
