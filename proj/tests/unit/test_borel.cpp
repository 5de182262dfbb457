#include "helpers.hpp"

#include "bfh/borel.hpp"

#include <doctest.h>

#include <functional>
#include <map>

using namespace bfh;

namespace {

using B = BorelCode;

// Largest count of Union-over-Complement edges on a root-to-leaf path.
std::size_t alternations(const BorelCode& c) {
  std::size_t best = 0;
  for (auto& k : c.children()) {
    const bool edge = c.kind() == B::Kind::Union && k.kind() == B::Kind::Complement;
    best = std::max(best, alternations(k) + (edge ? 1 : 0));
  }
  return best;
}

std::string bits(const PointSet& s) {
  std::string out;
  boost::to_string(s, out);
  return out;
}

// Codes of rank ≤ max_rank for every reachable set: Σ_1 as unions of basic
// sets, Π_n as complements, Σ_{n+1} as the closure of Σ_n ∪ Π_n under unions.
std::map<std::string, BorelCode> constructible(const FinTopSpace& sp, std::size_t max_rank) {
  std::map<std::string, BorelCode> sigma;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << sp.basis_size()); ++mask) {
    std::vector<BorelCode> kids;
    for (std::size_t n = 0; n < sp.basis_size(); ++n)
      if (mask >> n & 1U) kids.push_back(B::basic(n));
    const auto code = B::unite(std::move(kids));
    sigma.emplace(bits(decode(sp, code)), code);
  }
  std::map<std::string, BorelCode> all = sigma;
  for (std::size_t level = 2; level <= max_rank; ++level) {
    std::vector<BorelCode> gens;
    for (auto& [k, c] : sigma) {
      gens.push_back(c);
      gens.push_back(B::complement(c));
    }
    std::map<std::string, BorelCode> next;
    for (auto& g : gens) next.emplace(bits(decode(sp, g)), g);
    bool grew = true;
    while (grew) {
      grew = false;
      const auto snapshot = next;
      for (auto& [ka, a] : snapshot)
        for (auto& [kb, b] : snapshot) {
          const auto u = B::unite({a, b});
          grew |= next.emplace(bits(decode(sp, u)), u).second;
        }
    }
    sigma = next;
    for (auto& [k, c] : sigma) all.emplace(k, c);
  }
  for (auto& [k, c] : sigma) all.emplace(bits(decode(sp, B::complement(c))), B::complement(c));
  return all;
}

} // namespace

TEST_CASE("decode examples") {
  const auto s = testing::sierpinski();
  CHECK(decode(s, B::basic(0)) == make_set(2, {0}));
  CHECK(decode(s, B::complement(B::basic(0))) == make_set(2, {1}));
  CHECK(decode(s, B::unite({B::basic(0), B::complement(B::basic(1))})) == make_set(2, {0}));
  CHECK(decode(s, B::unite({})).none());
  CHECK_THROWS_AS(decode(s, B::basic(2)), InputError);
  CHECK_THROWS_AS(check_code(s, B::complement(B::basic(5))), InputError);
}

TEST_CASE("rank and classification") {
  CHECK(code_rank(B::basic(3)) == 1);
  CHECK(code_rank(B::complement(B::basic(3))) == 1);
  CHECK(code_rank(B::unite({B::complement(B::basic(0)), B::complement(B::basic(1))})) == 2);
  auto c = classify(B::basic(0));
  CHECK((c.level == 1 && c.side == Side::Sigma));
  c = classify(B::complement(B::basic(0)));
  CHECK((c.level == 1 && c.side == Side::Pi));
  // The complement of an open set is closed.
  c = classify(B::complement(B::unite({B::basic(0), B::basic(1)})));
  CHECK((c.level == 1 && c.side == Side::Pi));
  c = classify(B::complement(B::unite({B::complement(B::basic(0)), B::basic(1)})));
  CHECK((c.level == 2 && c.side == Side::Pi));
  CHECK(pi_level(B::basic(0)) == 2);
  CHECK(pi_level(B::complement(B::basic(0))) == 1);
}

TEST_CASE("text form round-trips") {
  const auto c = parse_code("C(U(B3,B5))");
  CHECK(to_string(c) == "C(U(B3,B5))");
  CHECK(parse_code(" U( B1 , C(B0) ) ") == B::unite({B::basic(1), B::complement(B::basic(0))}));
  CHECK(to_string(parse_code("U()")) == "U()");
  CHECK_THROWS_AS(parse_code("C(B3"), InputError);
  CHECK_THROWS_AS(parse_code("X1"), InputError);
  CHECK_THROWS_AS(parse_code("B"), InputError);
  CHECK_THROWS_AS(parse_code("B1 B2"), InputError);
  for (auto& code : random_codes(testing::s2_digraphs().inst.space(), 3, 200, 3))
    REQUIRE(parse_code(to_string(code)) == code);
}

TEST_CASE("random codes") {
  const auto inst = named_instance("s2digraph");
  const auto& sp = inst.space();
  CHECK(random_codes(sp, 2, 0, 1).empty());
  CHECK(random_codes(sp, 3, 50, 7) == random_codes(sp, 3, 50, 7));
  CHECK_THROWS_AS(random_codes(sp, 0, 5, 1), InputError);
  for (auto& code : random_codes(sp, 1, 300, 2)) {
    const bool basic = code.kind() == B::Kind::Basic;
    const bool co_basic = code.kind() == B::Kind::Complement && code.children()[0].kind() == B::Kind::Basic;
    bool union_of_basic = code.kind() == B::Kind::Union;
    for (auto& k : code.children()) union_of_basic &= k.kind() == B::Kind::Basic;
    REQUIRE((basic || co_basic || union_of_basic));
  }
  for (std::size_t r = 1; r <= 4; ++r)
    for (auto& code : random_codes(sp, r, 300, r)) {
      REQUIRE(code_rank(code) <= r);
      REQUIRE(decode(sp, B::complement(B::complement(code))) == decode(sp, code));
      REQUIRE(code_rank(code) <= 1 + alternations(code));
      check_code(sp, code);
    }
}

TEST_CASE("every subset of a small T0 space has a low-rank code") {
  std::vector<FinTopSpace> spaces{testing::sierpinski(), testing::discrete_pair()};
  // The 4-point chain a < b < c < d, whose opens are the initial segments.
  spaces.emplace_back(std::vector<std::string>{"a", "b", "c", "d"},
                      std::vector<PointSet>{make_set(4, {0}), make_set(4, {0, 1}), make_set(4, {0, 1, 2}),
                                            make_set(4, {0, 1, 2, 3})});
  for (auto& e : testing::small_corpus())
    if (e.inst.space().size() <= 4) spaces.push_back(e.inst.space());
  std::size_t checked = 0;
  for (auto& sp : spaces) {
    if (!sp.is_t0()) continue;
    bool discrete = true;
    for (std::size_t p = 0; p < sp.size(); ++p) discrete &= sp.minimal_open(p).count() == 1;
    const std::size_t bound = (discrete || sp.size() <= 2) ? 2 : 3;
    const auto codes = constructible(sp, bound);
    for (auto& s : testing::all_subsets(sp.size())) {
      auto it = codes.find(bits(s));
      REQUIRE(it != codes.end());
      REQUIRE(decode(sp, it->second) == s);
      REQUIRE(code_rank(it->second) <= bound);
    }
    ++checked;
  }
  CHECK(checked >= 3);
  // Rank 2 does not suffice for the chain.
  CHECK(constructible(spaces[2], 2).size() < 16);
}
