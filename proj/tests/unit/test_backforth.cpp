#include "../oracles.hpp"
#include "helpers.hpp"

#include "bfh/backforth.hpp"
#include "bfh/borel.hpp"

#include <doctest.h>

#include <sstream>

using namespace bfh;
using testing::digraph;

namespace {

bool same_as_oracle(const BFLevel& level, const oracle::Table& t) {
  for (std::size_t y = 0; y < level.points(); ++y)
    for (std::size_t v = 0; v < level.gbasis(); ++v)
      for (std::size_t x = 0; x < level.points(); ++x)
        for (std::size_t w = 0; w < level.gbasis(); ++w)
          if (level.at(y, v, x, w) != static_cast<bool>(t[y][v][x][w])) return false;
  return true;
}

// The successor clause without the argument swap.
BFLevel unswapped_successor(const GSpaceInstance& inst, const BFLevel& prev) {
  const auto& grp = inst.group();
  const auto np = inst.space().size(), nb = grp.basis_size();
  BFLevel next(np, nb);
  for (std::size_t y = 0; y < np; ++y)
    for (std::size_t v = 0; v < nb; ++v)
      for (std::size_t x = 0; x < np; ++x)
        for (std::size_t w = 0; w < nb; ++w) {
          bool all = true;
          for (std::size_t v2 = 0; v2 < nb && all; ++v2) {
            if (!grp.basis(v2).is_subset_of(grp.basis(v))) continue;
            bool some = false;
            for (std::size_t w2 = 0; w2 < nb && !some; ++w2)
              some = grp.basis(w2).is_subset_of(grp.basis(w)) && prev.at(y, v2, x, w2);
            all = some;
          }
          next.set(y, v, x, w, all);
        }
  return next;
}

} // namespace

TEST_CASE("trivial group on a discrete space") {
  const auto inst = named_instance("trivial-discrete");
  const auto t = compute_bf_tables(inst);
  CHECK(t.stabilized);
  CHECK(stabilization_rank(t) == 1);
  for (std::size_t y = 0; y < 3; ++y)
    for (std::size_t x = 0; x < 3; ++x) CHECK(t.level(1).at(y, 0, x, 0) == (x == y));
  const auto h = h_set_algebra(inst, 1);
  for (std::size_t y = 0; y < 3; ++y)
    for (std::size_t x = 0; x < 3; ++x) CHECK(h.level(1).h_tuple(y, x, 0, 0) == (x == y));
}

TEST_CASE("single-point space stabilizes at 1") {
  const GSpaceInstance inst(FinGroup({"e"}, {{0}}, {make_set(1, {0})}), FinTopSpace({"p"}, {make_set(1, {0})}), {{0}});
  CHECK(stabilization_rank(compute_bf_tables(inst)) == 1);
}

TEST_CASE("2-vertex digraphs: an edge is not below the empty graph at level 1") {
  const auto& tr = testing::s2_digraphs();
  const auto t = compute_bf_tables(tr.inst);
  CHECK_FALSE(t.level(1).at(tr.point(digraph(2, {{0, 1}})), 0, tr.point(digraph(2, {})), 0));
  CHECK(t.level(1).at(tr.point(digraph(2, {{0, 1}})), 0, tr.point(digraph(2, {{1, 0}})), 0));
  const auto orc = oracle::hierarchy(tr.inst, t.stab() + 1);
  CHECK(same_as_oracle(t.level(t.stab() + 1), orc.back()));
  CHECK(stabilization_rank(t) == t.stab());
}

TEST_CASE("tables agree with the definition-level oracle") {
  for (auto& e : testing::small_corpus()) {
    const auto t = compute_bf_tables(e.inst);
    const auto orc = oracle::hierarchy(e.inst, t.stab() + 2);
    for (std::size_t a = 1; a <= t.stab() + 2; ++a) REQUIRE_MESSAGE(same_as_oracle(t.level(a), orc[a - 1]), e.name);
  }
}

TEST_CASE("hierarchy laws on regular spaces") {
  for (auto& e : random_corpus(30, 3, CorpusTopology::Regular)) {
    const auto t = compute_bf_tables(e.inst);
    REQUIRE(t.stabilized);
    CHECK(anti_monotone(t));
    CHECK(reflexive_along_orbits(e.inst, t));
    for (auto& lvl : t.levels) CHECK(is_transitive(lvl));
  }
}

TEST_CASE("a non-regular space can cycle instead of stabilizing") {
  const auto inst = named_instance("z2sierpinski");
  const auto t = compute_bf_tables(inst);
  CHECK_FALSE(t.stabilized);
  CHECK(t.repeat_of == 1);
  CHECK(t.stab() == 2);
  CHECK_FALSE(anti_monotone(t));
  CHECK(t.level(3) == t.level(1));
  CHECK(t.level(4) == t.level(2));
  CHECK_THROWS_AS(stabilization_rank(t), InputError);
  const auto orc = oracle::hierarchy(inst, 4);
  for (std::size_t a = 1; a <= 4; ++a) CHECK(same_as_oracle(t.level(a), orc[a - 1]));
  const auto h = h_set_algebra(inst, t.stab());
  CHECK(h.repeat_of == t.repeat_of);
  for (std::size_t a = 1; a <= 2; ++a) CHECK(h.level(a) == t.level(a));
}

TEST_CASE("relation algebra equals the game recursion") {
  for (auto& e : testing::small_corpus()) {
    const auto t = compute_bf_tables(e.inst);
    const auto h = h_set_algebra(e.inst, t.stab());
    REQUIRE(h.stab() == t.stab());
    CHECK(h.stabilized == t.stabilized);
    for (std::size_t a = 1; a <= t.stab(); ++a) REQUIRE_MESSAGE(h.level(a) == t.level(a), e.name);
  }
}

TEST_CASE("the argument swap in the successor clause matters") {
  std::size_t differs = 0, reflexivity_broken = 0;
  for (auto& e : testing::small_corpus()) {
    const auto t = compute_bf_tables(e.inst);
    const auto wrong = unswapped_successor(e.inst, t.level(1));
    differs += !(wrong == t.level(2));
    BFTables variant;
    variant.levels = {t.level(1), wrong};
    reflexivity_broken += !reflexive_along_orbits(e.inst, variant);
  }
  CHECK(differs > 0);
  MESSAGE("unswapped successor: differs on " << differs << " instances, breaks orbit reflexivity on "
                                             << reflexivity_broken);
}

TEST_CASE("lazy evaluation matches the tables") {
  for (auto& e : testing::small_corpus(10)) {
    const auto t = compute_bf_tables(e.inst);
    LazyRelation lazy(e.inst);
    const auto np = e.inst.space().size(), nb = e.inst.group().basis_size();
    for (std::size_t a = 1; a <= t.stab() + 1; ++a)
      for (std::size_t y = 0; y < np; ++y)
        for (std::size_t v = 0; v < nb; ++v)
          for (std::size_t x = 0; x < np; ++x)
            for (std::size_t w = 0; w < nb; ++w) REQUIRE(lazy.leq(y, v, x, w, a) == t.level(a).at(y, v, x, w));
  }
  const auto inst = named_instance("trivial-discrete");
  LazyRelation lazy(inst);
  CHECK_THROWS_AS(lazy.leq(0, 0, 0, 0, 0), InputError);
  CHECK_THROWS_AS(lazy.leq(3, 0, 0, 0, 1), InputError);
  CHECK_THROWS_AS(lazy.leq(0, 1, 0, 0, 1), InputError);
}

TEST_CASE("Vaught inequality on trivial sets and on random codes") {
  const auto inst = named_instance("s2digraph");
  const auto t = compute_bf_tables(inst);
  const auto np = inst.space().size(), nb = inst.group().basis_size();
  for (std::size_t v = 0; v < nb; ++v)
    for (std::size_t w = 0; w < nb; ++w) {
      CHECK_FALSE(verify_lemma_b(inst, t, full_set(np), 1, v, w).has_value());
      CHECK_FALSE(verify_lemma_b(inst, t, PointSet(np), 1, v, w).has_value());
    }
  for (auto& code : random_codes(inst.space(), 3, 100, 9)) {
    const auto b = decode(inst.space(), code);
    for (std::size_t v = 0; v < nb; ++v)
      for (std::size_t w = 0; w < nb; ++w) REQUIRE_FALSE(verify_lemma_b(inst, t, b, pi_level(code), v, w).has_value());
  }
}

TEST_CASE("Vaught inequality agrees with an oracle-built check") {
  for (auto& e : random_corpus(10, 21, CorpusTopology::Regular)) {
    const auto& inst = e.inst;
    const auto& grp = inst.group();
    const auto t = compute_bf_tables(inst);
    const auto orc = oracle::hierarchy(inst, 4);
    for (auto& code : random_codes(inst.space(), 3, 30, 4)) {
      const auto b = decode(inst.space(), code);
      const std::size_t alpha = std::min<std::size_t>(pi_level(code), 4);
      for (std::size_t v = 0; v < grp.basis_size(); ++v)
        for (std::size_t w = 0; w < grp.basis_size(); ++w) {
          const auto sv = oracle::vaught_star(inst, b, grp.basis(v));
          const auto sw = oracle::vaught_star(inst, b, grp.basis(w));
          bool holds = true;
          for (std::size_t y = 0; y < inst.space().size(); ++y)
            for (std::size_t x = 0; x < inst.space().size(); ++x)
              if (orc[alpha - 1][y][v][x][w] && sw.test(x) && !sv.test(y)) holds = false;
          REQUIRE(holds == !verify_lemma_b(inst, t, b, alpha, v, w).has_value());
        }
    }
  }
}

TEST_CASE("levels past the computed range") {
  const auto inst = named_instance("trivial-discrete");
  BFTables partial;
  partial.levels = {bf_level_one(inst)};
  CHECK_THROWS_AS(partial.level(2), InputError);
  CHECK_THROWS_AS(partial.level(0), InputError);
  CHECK_THROWS_AS(verify_lemma_b(inst, partial, full_set(3), 2, 0, 0), InputError);
  const auto t = compute_bf_tables(inst);
  CHECK(t.level(7) == t.level(1));
}

TEST_CASE("table dump lists true entries per level") {
  const auto inst = named_instance("trivial-discrete");
  const auto t = compute_bf_tables(inst);
  std::ostringstream os;
  dump_tables(os, inst, t);
  const std::string text = os.str();
  CHECK(text.rfind("level 1 entries ", 0) == 0);
  CHECK(text.find("(a,0,a,0)") != std::string::npos);
  CHECK(text.find("(a,0,b,0)") == std::string::npos);
  CHECK(text.find("stab 1") != std::string::npos);
}
