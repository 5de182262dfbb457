#pragma once

#include "bfh/logic/structure.hpp"

#include <map>
#include <vector>

namespace bfh::logic {

/// A finite view of a point of X_L: finitely many positions of ω with their
/// complete atomic diagram (facts listed are true, every other atom over the
/// positions is false).
struct AnchoredPattern {
  std::vector<Nat> positions;
  PlacedFacts facts;
};

/// Is there g ∈ S_∞ extending `s` with (g·st) restricted to the pattern's
/// positions equal to the pattern? Brute force over preimages of the
/// positions; throws InputError if the pattern is inconsistent.
bool realizable(const AnchoredPattern& pattern, const CoreStructure& st, const PartialInjection& s);

/// The full extensions of `s` on `st`: every core point outside dom(s) is
/// sent to one of `targets` (positions not in ran(s)) or to a fresh position
/// ≥ fresh_base. Fresh positions are interchangeable, so each shape appears
/// once, with fresh labels fresh_base, fresh_base+1, ... in point order.
std::vector<PartialInjection> full_pins(const CoreStructure& st, const PartialInjection& s,
                                        const std::vector<Nat>& targets, Nat fresh_base);

/// (y, N_s) ≤_α (x, N_t) for the logic action of S_∞ on padded structures.
///
/// The relation only gets harder when the left basic open shrinks and easier
/// when the right one shrinks, so the "every V' ⊆ V" and "some W' ⊆ W"
/// quantifiers of the successor clause may be restricted to extensions that
/// pin every core point: every extension lies under one of those. Up to the
/// positions already in play (ran(s) ∪ ran(t)) such extensions are finitely
/// many, with at most core-many fresh positions. Once a side pins its whole
/// core, its translate set is a single structure.
///
/// Level 1: every g·y (g ⊇ s) is a limit of h·x (h ⊇ t). For a fixed window
/// of positions, the core points of x not pinned by t may either land on the
/// positions in play or escape beyond the window, so the test is: for each
/// full pin s'' of y there is a placement of x's free core points on
/// ran(s'') ∪ ran(t) (or away from it) whose visible facts are exactly
/// those of s''·y.
bool bf_logic(const CoreStructure& y, const PartialInjection& s, const CoreStructure& x, const PartialInjection& t,
              std::size_t alpha);

/// bf_logic for a fixed pair of structures, memoized across anchors and
/// levels. Anchors are compared up to a renaming of positions.
class LogicRelation {
public:
  LogicRelation(CoreStructure y, CoreStructure x);
  /// (y, N_s) ≤_α (x, N_t).
  bool leq(const PartialInjection& s, const PartialInjection& t, std::size_t alpha);

private:
  bool rec(int left, const PartialInjection& s, const PartialInjection& t, std::size_t alpha);
  CoreStructure st_[2];
  std::map<std::vector<Nat>, bool> memo_;
};

/// Level after which bf_logic is constant on finite-core structures: after
/// one successor step both sides are fully pinned, and fully pinned pairs are
/// related at every level iff their (single) translates coincide.
inline constexpr std::size_t kLogicStableLevel = 2;

} // namespace bfh::logic
