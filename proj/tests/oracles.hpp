#pragma once

// Brute-force reference implementations used only by the tests. Each one
// follows the textbook definition as literally as possible and shares no
// code with the library beyond its data types.

#include "bfh/gspace.hpp"
#include "bfh/logic/formula.hpp"
#include "bfh/logic/structure.hpp"

#include <vector>

namespace oracle {

using bfh::PointSet;

/// X minus the union of the basic opens that miss A.
PointSet closure(const bfh::FinTopSpace& space, const PointSet& a);

/// D = H minus cl(H \ S) is open; S is comeagre in H iff D is dense in H.
bool comeagre_in(const bfh::FinTopSpace& space, const PointSet& s, const PointSet& h);

/// {x : {g ∈ H : g·x ∈ B} comeagre in H}, with the group topology.
PointSet vaught_star(const bfh::GSpaceInstance& inst, const PointSet& b, const PointSet& h);

/// rel[alpha-1][y][v][x][w], straight from the recursive definition: level 1
/// by closure inclusion, successors quantifying over every basic V' ⊆ V and
/// every basic W' ⊆ W.
using Table = std::vector<std::vector<std::vector<std::vector<char>>>>;
std::vector<Table> hierarchy(const bfh::GSpaceInstance& inst, std::size_t levels);

/// Plain recursive satisfaction on the finite structure with universe
/// {0..m-1}.
bool eval_finite(const bfh::logic::CoreStructure& st, std::size_t m, const bfh::logic::Formula& f,
                 std::vector<bfh::logic::Nat> assignment = {});

/// Duplicator wins the k-round EF game on the finite structures of size m
/// (full game tree).
bool ef_duplicator_wins(const bfh::logic::CoreStructure& x, const bfh::logic::CoreStructure& y, std::size_t m,
                        std::size_t k);

/// Level-1 relation of the logic action through the product topology: for
/// every placement of y's core compatible with s, some placement of x's core
/// compatible with t shows the same facts on the window of positions in
/// play. Core points of x may also be sent outside the window.
bool logic_level_one(const bfh::logic::CoreStructure& y, const bfh::logic::PartialInjection& s,
                     const bfh::logic::CoreStructure& x, const bfh::logic::PartialInjection& t);

} // namespace oracle
