#include "../oracles.hpp"
#include "helpers.hpp"

#include "bfh/logic/formula.hpp"
#include "bfh/logic/games.hpp"
#include "bfh/logic/structure.hpp"
#include "bfh/logic/truncation.hpp"

#include <doctest.h>

using namespace bfh;
using namespace bfh::logic;
using testing::digraph;

namespace {

CoreStructure edge_plus_triangle() { return digraph(5, {{0, 1}, {2, 3}, {3, 4}, {4, 2}}); }

CoreStructure linear_order(std::size_t n) {
  CoreStructure st(Language::digraph(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) st.add(0, {static_cast<Nat>(i), static_cast<Nat>(j)});
  return st;
}

} // namespace

TEST_CASE("structure text format") {
  const auto st = parse_structure("language E/2\ncore 3\nE 0 1   # an edge\nE 1 2\n");
  CHECK(st.core() == 3);
  CHECK(st.fact_count() == 2);
  CHECK(st.holds(0, std::vector<Nat>{1, 2}));
  CHECK_FALSE(st.holds(0, std::vector<Nat>{2, 1}));
  CHECK_FALSE(st.holds(0, std::vector<Nat>{1, 7}));
  CHECK(parse_structure(to_text(st)) == st);
  const auto two = parse_structure("language E/2 R/3\ncore 2\nR 0 1 1\n");
  CHECK(two.language().size() == 2);
  CHECK(parse_structure(to_text(two)) == two);
  CHECK_THROWS_AS(parse_structure("core 2\n"), InputError);
  CHECK_THROWS_AS(parse_structure("language E/2\n"), InputError);
  CHECK_THROWS_AS(parse_structure("language E/2\ncore 2\nE 0 2\n"), InputError);
  CHECK_THROWS_AS(parse_structure("language E/2\ncore 2\nE 0\n"), InputError);
  CHECK_THROWS_AS(parse_structure("language E/2\ncore 2\nF 0 1\n"), InputError);
  CHECK_THROWS_AS(parse_structure("language E/0\ncore 2\n"), InputError);
  CHECK_THROWS_AS(parse_structure("language E\ncore 2\n"), InputError);
  CHECK_THROWS_AS(parse_structure("language E/2\ncore -1\n"), InputError);
}

TEST_CASE("structure codes and supports") {
  for (std::size_t n = 0; n <= 2; ++n)
    for (auto& st : all_digraphs(n)) REQUIRE(CoreStructure::from_code(st.language(), n, st.code()) == st);
  CHECK(all_digraphs(2).size() == 16);
  CHECK(digraph(2, {{0, 1}}).code() == 2);
  CHECK(digraph(3, {{0, 1}}).support() == make_set(3, {0, 1}));
}

TEST_CASE("partial injections") {
  const auto s = parse_injection("0:3,2:1");
  CHECK(s.size() == 2);
  CHECK(s(2) == 1);
  CHECK(to_string(s) == "0:3,2:1");
  CHECK(parse_injection("").empty());
  CHECK(s.max_point() == 3);
  CHECK_THROWS_AS(parse_injection("0:1,2:1"), InputError);
  CHECK_THROWS_AS(parse_injection("0:1,0:2"), InputError);
  CHECK_THROWS_AS(parse_injection("0-1"), InputError);
  auto t = s;
  t.extend(5, 5);
  CHECK(t.extends(s));
  CHECK_FALSE(s.extends(t));
  CHECK_THROWS_AS(t.extend(6, 3), InputError);
}

TEST_CASE("formula grammar") {
  const auto f = parse_formula("(exists v0 (exists v1 (E v0 v1)))");
  CHECK(to_string(f) == "(exists v0 (exists v1 (E v0 v1)))");
  CHECK(f.quantifier_rank() == 2);
  CHECK(f.is_sentence());
  const auto g = parse_formula("(and (not (= v0 v1)) (or true false))");
  CHECK(g.free_vars() == std::set<std::size_t>{0, 1});
  CHECK(g.quantifier_rank() == 0);
  CHECK(parse_formula(to_string(g)) == g);
  CHECK_THROWS_AS(parse_formula("(exists x (E x x))"), InputError);
  CHECK_THROWS_AS(parse_formula("(exists v0 (E v0 v0)"), InputError);
  CHECK_THROWS_AS(parse_formula("(exists v0)"), InputError);
  CHECK_THROWS_AS(parse_formula("(not)"), InputError);
}

TEST_CASE("evaluation examples") {
  const auto exists_edge = parse_formula("(exists v0 (exists v1 (E v0 v1)))");
  const auto total = parse_formula("(forall v0 (exists v1 (E v0 v1)))");
  const auto edge = digraph(2, {{0, 1}});
  CHECK(eval_formula(edge, exists_edge));
  CHECK_FALSE(eval_formula(digraph(2, {}), exists_edge));
  CHECK_FALSE(eval_formula(edge, total));
  CHECK_FALSE(oracle::eval_finite(edge, 4, total));
  CHECK(eval_formula(edge, parse_formula("(E v0 v1)"), {0, 1}));
  CHECK_FALSE(eval_formula(edge, parse_formula("(E v0 v1)"), {1, 0}));
  CHECK_FALSE(eval_formula(edge, parse_formula("(E v0 v1)"), {0, 9}));
  CHECK_THROWS_AS(eval_formula(edge, parse_formula("(E v0 v1)"), {0}), InputError);
  CHECK_THROWS_AS(eval_formula(edge, parse_formula("(R v0)")), InputError);
}

TEST_CASE("padded evaluation equals finite evaluation with qr spare points") {
  const auto lang = Language::digraph();
  auto pool = formula_pool(lang);
  CHECK(pool.size() > 100);
  std::vector<CoreStructure> cores;
  for (std::size_t n = 0; n <= 2; ++n)
    for (auto& st : all_digraphs(n)) cores.push_back(st);
  for (auto& st : digraph_iso_representatives(3)) cores.push_back(st);
  for (auto& st : digraph_iso_representatives(2)) pool.push_back(scott_sentence(st));
  for (auto& f : pool) {
    const CompiledFormula c(f, lang);
    for (auto& st : cores) {
      const auto m = st.core() + f.quantifier_rank();
      const bool padded = c.eval_padded(st, {});
      REQUIRE(padded == oracle::eval_finite(st, m, f));
      REQUIRE(padded == c.eval_finite(st, m, {}));
    }
  }
}

TEST_CASE("B_sigma sets") {
  const auto& tr = testing::s2_digraphs();
  CHECK(b_sigma(tr, Formula::truth()).all());
  const auto some_edge = b_sigma(tr, parse_formula("(exists v0 (exists v1 (E v0 v1)))"));
  CHECK(some_edge.count() == 15);
  CHECK_FALSE(some_edge.test(tr.point(digraph(2, {}))));
  CHECK_THROWS_AS(b_sigma(tr, parse_formula("(E v0 v0)")), InputError);
  for (auto& f : formula_pool(tr.lang)) REQUIRE(is_invariant(tr.inst, b_sigma(tr, f)));
  const BSigma loops(parse_formula("(exists v0 (E v0 v0))"), tr.lang);
  CHECK(loops.contains(digraph(1, {{0, 0}})));
  CHECK_FALSE(loops.contains(digraph(3, {{0, 1}})));
}

TEST_CASE("isomorphism examples") {
  const auto cycle = digraph(3, {{0, 1}, {1, 2}, {2, 0}});
  const auto chain = digraph(3, {{0, 1}, {1, 2}});
  CHECK(iso(cycle, cycle));
  CHECK(iso(digraph(2, {{0, 1}}), digraph(2, {{1, 0}})));
  CHECK_FALSE(iso(cycle, chain));
  CHECK(iso(digraph(2, {{0, 1}}), digraph(4, {{3, 1}})));  // padding absorbs the size difference
  CHECK(iso(digraph(0, {}), digraph(3, {})));
}

TEST_CASE("EF rounds against a full game-tree search") {
  CHECK(ef_rounds(linear_order(2), linear_order(3)) == 1);
  CHECK(ef_rounds(digraph(2, {}), digraph(2, {{0, 1}})) == 1);
  CHECK(ef_rounds(digraph(2, {{0, 1}}), digraph(2, {{0, 1}})) == kDefaultEfCap);
  const auto reps = digraph_iso_representatives(2);
  for (auto& x : reps)
    for (auto& y : reps) {
      const auto k = ef_rounds(x, y, 3);
      for (std::size_t r = 1; r <= 3; ++r) {
        const auto m = std::max(x.core(), y.core()) + r;
        REQUIRE((r <= k) == oracle::ef_duplicator_wins(x, y, m, r));
      }
    }
}

TEST_CASE("Scott sentences") {
  const auto point = digraph(1, {});
  const auto sp = scott_sentence(point);
  CHECK(eval_formula(digraph(1, {}), sp));
  CHECK(eval_formula(digraph(3, {}), sp));
  CHECK_FALSE(eval_formula(digraph(1, {{0, 0}}), sp));
  const auto edge = digraph(2, {{0, 1}});
  const auto se = scott_sentence(edge);
  CHECK(se.quantifier_rank() == 2 + 2);
  CHECK(eval_formula(edge, se));
  CHECK(eval_formula(digraph(3, {{1, 0}}), se));
  CHECK_FALSE(eval_formula(digraph(2, {}), se));
  CHECK_FALSE(eval_formula(edge_plus_triangle(), se));
  CHECK(is_invariant(testing::s2_digraphs().inst, b_sigma(testing::s2_digraphs(), se)));
  std::vector<CoreStructure> cores;
  for (std::size_t n = 0; n <= 3; ++n)
    for (auto& st : all_digraphs(n)) cores.push_back(st);
  for (auto& x : digraph_iso_representatives(2)) {
    const CompiledFormula c(scott_sentence(x), x.language());
    for (auto& y : cores) REQUIRE(c.eval_padded(y, {}) == iso(x, y));
  }
}

TEST_CASE("iso representatives") {
  CHECK(digraph_iso_representatives(2).size() == 10);
  CHECK(digraph_iso_representatives(3).size() == 104);
  const auto reps = digraph_iso_representatives(3);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) REQUIRE_FALSE(iso(reps[i], reps[j]));
}
