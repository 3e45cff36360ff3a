#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "latkit/generators.hpp"
#include "latkit/lattice.hpp"

namespace corpus {

struct Named {
  std::string label;
  latkit::Lattice lattice;
};

/// fig1, a2, ex424, ex426, chain(1..10), boolean(0..5), weak_sym(1..5), weak_dihedral(2..12).
inline std::vector<Named> standard() {
  using namespace latkit;
  std::vector<Named> out;
  out.push_back({"fig1", gen_fig1()});
  out.push_back({"a2", gen_a2()});
  out.push_back({"ex424", gen_ex424()});
  out.push_back({"ex426", gen_ex426()});
  for (std::size_t k = 1; k <= 10; ++k) out.push_back({"chain(" + std::to_string(k) + ")", gen_chain(k)});
  for (std::size_t k = 0; k <= 5; ++k) out.push_back({"boolean(" + std::to_string(k) + ")", gen_boolean(k)});
  for (std::size_t k = 1; k <= 5; ++k) out.push_back({"weak_sym(" + std::to_string(k) + ")", gen_weak_sym(k)});
  for (std::size_t k = 2; k <= 12; ++k)
    out.push_back({"weak_dihedral(" + std::to_string(k) + ")", gen_weak_dihedral(k)});
  return out;
}

inline latkit::Lattice m3() {
  return latkit::build_lattice({"0", "a", "b", "c", "1"},
                               {{"1", "a"}, {"1", "b"}, {"1", "c"}, {"a", "0"}, {"b", "0"}, {"c", "0"}});
}

inline latkit::Lattice n5() {
  return latkit::build_lattice({"0", "a", "b", "c", "1"}, {{"1", "b"}, {"b", "a"}, {"a", "0"}, {"1", "c"}, {"c", "0"}});
}

/// Random lattice: a family of subsets of {0..ground-1} closed under
/// intersection, containing the full set, ordered by inclusion. Covers are
/// found by brute force over the family.
inline latkit::Lattice random_closure_lattice(std::uint32_t seed, unsigned ground, unsigned generators) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<unsigned> pick(0, (1U << ground) - 1);
  std::set<unsigned> family{(1U << ground) - 1};
  for (unsigned g = 0; g < generators; ++g) family.insert(pick(rng));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<unsigned> cur(family.begin(), family.end());
    for (auto a : cur)
      for (auto b : cur)
        if (family.insert(a & b).second) grew = true;
  }
  std::vector<unsigned> sets(family.begin(), family.end());
  auto name = [](unsigned s) { return "s" + std::to_string(s); };
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
  auto sub = [](unsigned a, unsigned b) { return (a & ~b) == 0 && a != b; };
  for (auto a : sets) {
    names.push_back(name(a));
    for (auto b : sets) {
      if (!sub(b, a)) continue;
      bool cover = std::none_of(sets.begin(), sets.end(), [&](unsigned c) { return sub(b, c) && sub(c, a); });
      if (cover) covers.emplace_back(name(a), name(b));
    }
  }
  // Shuffle input order so index assignment is exercised.
  std::shuffle(names.begin(), names.end(), rng);
  std::shuffle(covers.begin(), covers.end(), rng);
  return latkit::build_lattice(std::move(names), covers);
}

}  // namespace corpus
