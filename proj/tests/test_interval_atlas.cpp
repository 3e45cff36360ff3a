#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "latkit/generators.hpp"
#include "latkit/interval_atlas.hpp"
#include "oracles.hpp"

using namespace latkit;
using test::error_kind;
using test::names;

namespace {

using SetFamily = std::set<std::set<std::string>>;

SetFamily family_of(const Lattice& L, const SetFamilyPoset& p) {
  SetFamily out;
  for (const auto& m : p.members) out.insert(names(L, m));
  return out;
}

// "125" -> {"1","2","5"}; "" is the empty set.
SetFamily digits(std::initializer_list<const char*> words) {
  SetFamily out;
  for (std::string w : words) {
    std::set<std::string> s;
    for (char c : w) s.insert(std::string(1, c));
    out.insert(s);
  }
  return out;
}

std::set<std::pair<std::string, std::string>> intervals_where(const Lattice& L, bool (*pred)(const Lattice&, Interval)) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& iv : L.intervals())
    if (pred(L, iv)) out.emplace(L.name(iv.lower), L.name(iv.upper));
  return out;
}

bool any_interval(const Lattice&, Interval) { return true; }

Interval iv(const Lattice& L, const char* a, const char* b) { return Interval{L.id(a), L.id(b)}; }

std::vector<corpus::Named> property_lattices() {
  auto out = corpus::standard();
  out.push_back({"n5", corpus::n5()});
  for (std::uint32_t seed = 1; seed <= 20; ++seed)
    out.push_back({"random(" + std::to_string(seed) + ")", corpus::random_closure_lattice(seed, 4, 5)});
  return out;
}

}  // namespace

TEST_CASE("jlabel of a single interval") {
  const auto F = gen_fig1();
  const auto lab = full_labeling(F);
  CHECK(names(F, jlabel(F, lab, iv(F, "3", "2*"))) == std::set<std::string>{"1", "4"});
  CHECK(names(F, jlabel_scan(F, lab, iv(F, "3", "2*"))) == std::set<std::string>{"1", "4"});
  CHECK(jlabel(F, lab, iv(F, "4", "4")).none());
  CHECK(jlabel(F, lab, Interval{F.bottom(), F.top()}).count() == 5);
  CHECK(is_wide_interval(F, iv(F, "3", "2*")));

  const auto A = gen_a2();
  const auto la = full_labeling(A);
  CHECK(names(A, jlabel(A, la, iv(A, "z", "x"))) == std::set<std::string>{"y", "w"});
  CHECK(format_set(A, jlabel(A, la, iv(A, "z", "x"))) == "{w,y}");  // index order
  CHECK(format_set(A, jlabel(A, la, iv(A, "x", "x"))) == "{}");
}

TEST_CASE("invalid intervals are rejected") {
  const auto A = gen_a2();
  const auto la = full_labeling(A);
  CHECK(error_kind([&] { jlabel(A, la, iv(A, "x", "0")); }) == ErrorKind::InvalidInterval);
  CHECK(error_kind([&] { jlabel_scan(A, la, iv(A, "y", "w")); }) == ErrorKind::InvalidInterval);
  CHECK(error_kind([&] { is_wide_interval(A, iv(A, "x", "z")); }) == ErrorKind::InvalidInterval);
  CHECK(error_kind([&] { is_ice_interval(A, iv(A, "w", "y")); }) == ErrorKind::InvalidInterval);
}

TEST_CASE("interval kind names") {
  CHECK(parse_interval_kind("wide") == IntervalKind::Wide);
  CHECK(to_string(IntervalKind::Ice) == "ice");
  CHECK(error_kind([] { parse_interval_kind("heart"); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("fig1 lattice: the three set families") {
  const auto F = gen_fig1();
  const auto lab = full_labeling(F);
  const auto all = derived_poset(F, lab, IntervalKind::All);
  const auto wide = derived_poset(F, lab, IntervalKind::Wide);
  const auto ice = derived_poset(F, lab, IntervalKind::Ice);
  CHECK(all.members.size() == 21);
  CHECK(family_of(F, all) == digits({"", "1", "2", "3", "4", "5", "13", "14", "15", "24", "25", "34", "35", "125",
                                     "134", "135", "234", "245", "1245", "2345", "12345"}));
  CHECK(wide.members.size() == 12);
  CHECK(family_of(F, wide) == digits({"", "1", "2", "3", "4", "5", "13", "14", "35", "125", "234", "12345"}));
  CHECK(ice.members.size() == 16);
  CHECK(family_of(F, ice) ==
        digits({"", "1", "2", "3", "4", "5", "13", "14", "25", "34", "35", "125", "134", "234", "2345", "12345"}));
  CHECK(intervals_where(F, any_interval).size() == 52);
  CHECK(intervals_where(F, is_wide_interval).size() == 39);
  CHECK(intervals_where(F, is_ice_interval).size() == 45);
}

TEST_CASE("A2 lattice: interval lists and set families") {
  const auto A = gen_a2();
  const auto lab = full_labeling(A);
  using Pairs = std::set<std::pair<std::string, std::string>>;
  const Pairs itv{{"0", "x"}, {"0", "y"}, {"0", "z"}, {"0", "w"}, {"0", "0"}, {"w", "x"}, {"w", "w"},
                  {"z", "x"}, {"z", "y"}, {"z", "z"}, {"y", "x"}, {"y", "y"}, {"x", "x"}};
  Pairs witv = itv, iitv = itv;
  witv.erase({"0", "y"});
  witv.erase({"z", "x"});
  iitv.erase({"z", "x"});
  CHECK(intervals_where(A, any_interval) == itv);
  CHECK(intervals_where(A, is_wide_interval) == witv);
  CHECK(intervals_where(A, is_ice_interval) == iitv);

  using S = std::set<std::string>;
  CHECK(family_of(A, derived_poset(A, lab, IntervalKind::All)) ==
        SetFamily{S{}, S{"y"}, S{"z"}, S{"w"}, S{"y", "z"}, S{"y", "w"}, S{"y", "z", "w"}});
  CHECK(family_of(A, derived_poset(A, lab, IntervalKind::Wide)) ==
        SetFamily{S{}, S{"y"}, S{"z"}, S{"w"}, S{"y", "z", "w"}});
  CHECK(family_of(A, derived_poset(A, lab, IntervalKind::Ice)) ==
        SetFamily{S{}, S{"y"}, S{"z"}, S{"w"}, S{"y", "z"}, S{"y", "z", "w"}});
}

TEST_CASE("derived poset layout: canonical order, witnesses, Hasse") {
  const auto A = gen_a2();
  const auto lab = full_labeling(A);
  const auto p = derived_poset(A, lab, IntervalKind::All);
  REQUIRE(p.members.size() == 7);
  for (std::size_t i = 1; i < p.members.size(); ++i) CHECK(canonical_less(p.members[i - 1], p.members[i]));
  CHECK(p.members.front().none());
  REQUIRE(p.witnesses.size() == p.members.size());
  for (std::size_t i = 0; i < p.members.size(); ++i) CHECK(jlabel(A, lab, p.witnesses[i]) == p.members[i]);
  // witness of the empty set is the first interval enumerated
  CHECK(p.witnesses.front() == A.intervals().front());
  // Hasse of inclusion on 7 sets: {} below 3 singletons, {y,z} and {y,w} above two each, top above both.
  CHECK(p.hasse.size() == 9);
  for (const auto& [u, l] : p.hasse) {
    CHECK(p.members[l].is_subset_of(p.members[u]));
    CHECK(p.members[u].count() == p.members[l].count() + 1);
  }
}

TEST_CASE("property: jlabel equals the label scan on every interval") {
  for (const auto& [label, L] : property_lattices()) {
    if (!is_semidistributive(L)) continue;
    CAPTURE(label);
    const auto lab = full_labeling(L);
    std::size_t bad = 0;
    for (const auto& v : L.intervals())
      if (jlabel(L, lab, v) != jlabel_scan(L, lab, v)) ++bad;
    CHECK(bad == 0);
  }
}

TEST_CASE("property: interval facts") {
  for (const auto& [label, L] : property_lattices()) {
    if (L.size() > 40 || !is_semidistributive(L)) continue;
    CAPTURE(label);
    const auto lab = full_labeling(L);
    std::size_t bad = 0;
    for (const auto& v : L.intervals()) {
      const auto s = jlabel(L, lab, v);
      if (is_wide_interval(L, v) && !is_ice_interval(L, v)) ++bad;
      // trivial intervals carry no labels, others carry at least one
      if ((v.lower == v.upper) != s.none()) ++bad;
      // shrinking the interval shrinks the label set
      for (auto c : L.covers_up(v.lower))
        if (L.leq(c, v.upper) && !jlabel(L, lab, Interval{c, v.upper}).is_subset_of(s)) ++bad;
      for (auto c : L.covers_down(v.upper))
        if (L.leq(v.lower, c) && !jlabel(L, lab, Interval{v.lower, c}).is_subset_of(s)) ++bad;
      // the upper end is the lower end joined with the labels
      if (L.join(L.join(s), v.lower) != v.upper) ++bad;
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("property: jlabel, wide and ICE agree with brute force") {
  for (const auto& [label, L] : property_lattices()) {
    if (L.size() > 40 || !is_semidistributive(L)) continue;
    CAPTURE(label);
    const auto N = oracle::NaiveLattice::from(L);
    const auto lab = full_labeling(L);
    std::size_t bad = 0;
    for (const auto& v : L.intervals()) {
      const int a = N.idx(L.name(v.lower)), b = N.idx(L.name(v.upper));
      if (oracle::to_oracle(L, N, jlabel(L, lab, v)) != N.jlabel(a, b)) ++bad;
      if (is_wide_interval(L, v) != N.is_wide(a, b)) ++bad;
      if (is_ice_interval(L, v) != N.is_ice(a, b)) ++bad;
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("property: derived posets hold exactly the distinct images") {
  for (const auto& [label, L] : property_lattices()) {
    if (L.size() > 40 || !is_semidistributive(L)) continue;
    CAPTURE(label);
    const auto lab = full_labeling(L);
    for (auto kind : {IntervalKind::All, IntervalKind::Wide, IntervalKind::Ice}) {
      std::set<std::vector<std::size_t>> images;
      for (const auto& v : L.intervals()) {
        const bool in = kind == IntervalKind::All || (kind == IntervalKind::Wide ? is_wide_interval(L, v)
                                                                                  : is_ice_interval(L, v));
        if (in) images.insert(jlabel(L, lab, v).indices());
      }
      const auto p = derived_poset(L, lab, kind);
      std::set<std::vector<std::size_t>> got;
      for (const auto& m : p.members) got.insert(m.indices());
      CHECK(got == images);
      CHECK(p.members.size() == images.size());
    }
  }
}
