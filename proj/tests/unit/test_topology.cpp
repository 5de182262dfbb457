#include "../oracles.hpp"
#include "helpers.hpp"

#include "bfh/topology.hpp"

#include <doctest.h>

using namespace bfh;

TEST_CASE("closure on the small example spaces") {
  const auto d = testing::discrete_pair();
  const auto s = testing::sierpinski();
  CHECK(closure(d, make_set(2, {0})) == make_set(2, {0}));
  CHECK(closure(s, make_set(2, {0})) == make_set(2, {0, 1}));
  CHECK(closure(s, make_set(2, {1})) == make_set(2, {1}));
  CHECK(closure(s, PointSet(2)).none());
  CHECK(closure(d, PointSet(2)).none());
}

TEST_CASE("meagre and comeagre on the small example spaces") {
  const auto d = testing::discrete_pair();
  const auto s = testing::sierpinski();
  const PointSet both = make_set(2, {0, 1});
  CHECK_FALSE(meager_in(d, make_set(2, {0}), both));
  CHECK(meager_in(s, make_set(2, {1}), both));
  CHECK(meager_in(s, PointSet(2), both));
  CHECK(meager_in(d, PointSet(2), both));
  CHECK(comeagre_in(d, both, both));
  CHECK_FALSE(comeagre_in(d, make_set(2, {0}), both));
  CHECK(comeagre_in(s, make_set(2, {0}), both));
}

TEST_CASE("constructor and argument validation") {
  CHECK_THROWS_AS(FinTopSpace({"a", "b"}, {make_set(2, {0})}), InputError);  // does not cover b
  CHECK_THROWS_AS(FinTopSpace({"a", "b", "c"}, {make_set(3, {0, 1}), make_set(3, {1, 2})}), InputError);  // basis axiom
  CHECK_THROWS_AS(make_set(2, {2}), InputError);
  const auto s = testing::sierpinski();
  CHECK_THROWS_AS(closure(s, PointSet(3)), InputError);
  CHECK_THROWS_AS(meager_in(s, PointSet(2), make_set(2, {1})), InputError);  // {b} is not open
  CHECK_THROWS_AS(comeagre_in(s, PointSet(2), make_set(2, {1})), InputError);
}

TEST_CASE("closure is a Kuratowski operator and matches the complement-of-opens oracle") {
  for (auto& e : testing::small_corpus()) {
    const auto& sp = e.inst.space();
    if (sp.size() > 8) continue;
    const auto subsets = testing::all_subsets(sp.size());
    std::vector<PointSet> cl;
    for (auto& a : subsets) cl.push_back(closure(sp, a));
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      const auto& a = subsets[i];
      REQUIRE(a.is_subset_of(cl[i]));
      REQUIRE(closure(sp, cl[i]) == cl[i]);
      REQUIRE(cl[i] == oracle::closure(sp, a));
      for (std::size_t j = i; j < subsets.size(); j += 7) REQUIRE(closure(sp, a | subsets[j]) == (cl[i] | cl[j]));
    }
  }
}

TEST_CASE("comeagre agrees with the dense-open-subset oracle on group topologies") {
  for (auto& e : testing::small_corpus()) {
    const auto& top = e.inst.group().topology();
    const auto subsets = testing::all_subsets(top.size());
    for (std::size_t k = 0; k < top.basis_size(); ++k) {
      const auto& h = top.basis(k);
      for (auto& s : subsets) REQUIRE(comeagre_in(top, s, h) == oracle::comeagre_in(top, s, h));
    }
  }
}

TEST_CASE("discrete spaces: comeagre means containing H") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<PointSet> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back(make_set(n, {i}));
    basis.push_back(full_set(n));
    const FinTopSpace sp(n, basis);
    for (auto& h : testing::all_subsets(n)) {
      for (auto& s : testing::all_subsets(n)) REQUIRE(comeagre_in(sp, s, h) == h.is_subset_of(s));
    }
  }
}

TEST_CASE("meagre is downward closed and survives shrinking H") {
  for (auto& e : testing::small_corpus(8)) {
    const auto& sp = e.inst.space();
    if (sp.size() > 6) continue;
    const auto subsets = testing::all_subsets(sp.size());
    std::vector<PointSet> opens;
    for (auto& u : subsets)
      if (sp.is_open(u)) opens.push_back(u);
    for (auto& h : opens)
      for (auto& s : subsets) {
        if (!s.is_subset_of(h) || !meager_in(sp, s, h)) continue;
        for (auto& smaller : subsets)
          if (smaller.is_subset_of(s)) REQUIRE(meager_in(sp, smaller, h));
        for (auto& h2 : opens)
          if (s.is_subset_of(h2) && h2.is_subset_of(h)) REQUIRE(meager_in(sp, s, h2));
      }
  }
}
