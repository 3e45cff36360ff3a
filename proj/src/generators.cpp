#include "latkit/generators.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

namespace latkit {

namespace {

using CoverList = std::vector<std::pair<std::string, std::string>>;

void require_range(std::size_t n, std::size_t lo, std::size_t hi, std::string_view what) {
  if (n > hi)
    throw LatticeError(ErrorKind::TooLarge, std::string(what) + "(" + std::to_string(n) + ") exceeds cap " +
                                                std::to_string(hi));
  if (n < lo)
    throw LatticeError(ErrorKind::InvalidParameter, std::string(what) + " needs n >= " + std::to_string(lo));
}

}  // namespace

Lattice gen_fig1() {
  return build_lattice({"0", "1", "2", "3", "4", "5", "4*", "5*", "1*", "2*", "3*", "0*"},
                       CoverList{{"1", "0"},   {"2", "0"},   {"3", "0"},   {"4", "3"},   {"4*", "1"},
                                 {"4*", "3"},  {"5", "2"},   {"0*", "1*"}, {"0*", "2*"}, {"0*", "3*"},
                                 {"5*", "2"},  {"2*", "4*"}, {"2*", "4"},  {"3*", "5"},  {"3*", "1"},
                                 {"1*", "5*"}, {"1*", "5"},  {"5*", "4"}});
}

Lattice gen_a2() {
  return build_lattice({"0", "z", "w", "y", "x"},
                       CoverList{{"x", "y"}, {"x", "w"}, {"y", "z"}, {"z", "0"}, {"w", "0"}});
}

Lattice gen_ex424() {
  return build_lattice({"0", "j1", "j2", "j3", "j4", "x", "y", "z", "1"},
                       CoverList{{"1", "x"},
                                 {"1", "y"},
                                 {"1", "z"},
                                 {"x", "j1"},
                                 {"x", "j4"},
                                 {"y", "j1"},
                                 {"y", "j3"},
                                 {"z", "j3"},
                                 {"z", "j4"},
                                 {"j4", "j2"},
                                 {"j1", "0"},
                                 {"j2", "0"},
                                 {"j3", "0"}});
}

Lattice gen_ex426() {
  return build_lattice({"0", "1", "2", "3", "4", "5", "6", "1*", "2*", "3*", "4*", "5*", "6*", "0*"},
                       CoverList{{"6*", "5"}, {"5*", "1"},  {"1", "0"},  {"3*", "5"}, {"4", "2"},  {"1*", "4*"},
                                 {"6*", "3"}, {"2*", "6"},  {"0*", "2*"}, {"6", "3"}, {"3", "0"},  {"2*", "6*"},
                                 {"5", "1"},  {"0*", "3*"}, {"3*", "5*"}, {"4*", "2"}, {"1*", "4"}, {"0*", "1*"},
                                 {"2", "0"},  {"5*", "4"},  {"4*", "6"}});
}

Lattice gen_chain(std::size_t n) {
  require_range(n, 1, kMaxChain, "chain");
  std::vector<std::string> names;
  CoverList covers;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    if (i > 0) covers.emplace_back(std::to_string(i), std::to_string(i - 1));
  }
  return build_lattice(std::move(names), covers);
}

Lattice gen_boolean(std::size_t n) {
  require_range(n, 0, kMaxBoolean, "boolean");
  auto subset_name = [n](std::size_t mask) {
    std::string s = "{";
    for (std::size_t k = 0; k < n; ++k)
      if ((mask >> k) & 1U) {
        if (s.size() > 1) s += ',';
        s += std::to_string(k + 1);
      }
    return s + "}";
  };
  std::vector<std::string> names;
  CoverList covers;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    names.push_back(subset_name(mask));
    for (std::size_t k = 0; k < n; ++k)
      if ((mask >> k) & 1U) covers.emplace_back(subset_name(mask), subset_name(mask & ~(std::size_t{1} << k)));
  }
  return build_lattice(std::move(names), covers);
}

Lattice gen_weak_sym(std::size_t n) {
  require_range(n, 1, kMaxWeakSym, "weak_sym");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  auto one_line = [](const std::vector<int>& p) {
    std::string s;
    for (int v : p) s += std::to_string(v);
    return s;
  };
  std::vector<std::string> names;
  CoverList covers;
  do {
    names.push_back(one_line(perm));
    // u.s_i swaps positions i, i+1; the length goes up exactly at ascents.
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (perm[i] < perm[i + 1]) {
        auto v = perm;
        std::swap(v[i], v[i + 1]);
        covers.emplace_back(one_line(v), names.back());
      }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return build_lattice(std::move(names), covers);
}

Lattice gen_weak_dihedral(std::size_t n) {
  require_range(n, 2, kMaxWeakDihedral, "weak_dihedral");
  auto word = [](char first, std::size_t len) {
    std::string w;
    for (std::size_t k = 0; k < len; ++k) w += (k % 2 == 0) == (first == 's') ? 's' : 't';
    return w;
  };
  std::vector<std::string> names{"e"};
  CoverList covers;
  for (char first : {'s', 't'}) {
    for (std::size_t len = 1; len < n; ++len) {
      names.push_back(word(first, len));
      covers.emplace_back(word(first, len), len == 1 ? "e" : word(first, len - 1));
    }
    covers.emplace_back("w0", word(first, n - 1));
  }
  names.push_back("w0");
  return build_lattice(std::move(names), covers);
}

Family parse_family(std::string_view name) {
  if (name == "fig1") return Family::Fig1;
  if (name == "a2") return Family::A2;
  if (name == "ex424") return Family::Ex424;
  if (name == "ex426") return Family::Ex426;
  if (name == "chain") return Family::Chain;
  if (name == "boolean") return Family::Boolean;
  if (name == "weak_sym") return Family::WeakSym;
  if (name == "weak_dihedral") return Family::WeakDihedral;
  throw LatticeError(ErrorKind::InvalidParameter, "unknown family '" + std::string(name) + "'");
}

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::Fig1: return "fig1";
    case Family::A2: return "a2";
    case Family::Ex424: return "ex424";
    case Family::Ex426: return "ex426";
    case Family::Chain: return "chain";
    case Family::Boolean: return "boolean";
    case Family::WeakSym: return "weak_sym";
    case Family::WeakDihedral: return "weak_dihedral";
  }
  return "fig1";
}

bool is_parametric(Family family) noexcept {
  return family == Family::Chain || family == Family::Boolean || family == Family::WeakSym ||
         family == Family::WeakDihedral;
}

Lattice generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Fig1: return gen_fig1();
    case Family::A2: return gen_a2();
    case Family::Ex424: return gen_ex424();
    case Family::Ex426: return gen_ex426();
    case Family::Chain: return gen_chain(spec.n);
    case Family::Boolean: return gen_boolean(spec.n);
    case Family::WeakSym: return gen_weak_sym(spec.n);
    case Family::WeakDihedral: return gen_weak_dihedral(spec.n);
  }
  throw LatticeError(ErrorKind::InvalidParameter, "unknown family");
}

}  // namespace latkit
