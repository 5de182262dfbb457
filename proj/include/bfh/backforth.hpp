#pragma once

#include "bfh/gspace.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

namespace bfh {

/// One level of the graded relation: at(y, V, x, W) means (y, V_V) ≤ (x, V_W),
/// with V and W gbasis indices.
class BFLevel {
public:
  BFLevel() = default;
  BFLevel(std::size_t points, std::size_t gbasis) : np_(points), nb_(gbasis), bits_(points * gbasis * points * gbasis) {}

  std::size_t points() const { return np_; }
  std::size_t gbasis() const { return nb_; }

  std::size_t index(std::size_t y, std::size_t v, std::size_t x, std::size_t w) const {
    return ((y * nb_ + v) * np_ + x) * nb_ + w;
  }
  bool at(std::size_t y, std::size_t v, std::size_t x, std::size_t w) const { return bits_.test(index(y, v, x, w)); }
  void set(std::size_t y, std::size_t v, std::size_t x, std::size_t w, bool value = true) {
    bits_.set(index(y, v, x, w), value);
  }
  std::size_t count() const { return bits_.count(); }

  /// Every entry of `this` is also an entry of `other`.
  bool contained_in(const BFLevel& other) const { return bits_.is_subset_of(other.bits_); }

  friend bool operator==(const BFLevel& a, const BFLevel& b) {
    return a.np_ == b.np_ && a.nb_ == b.nb_ && a.bits_ == b.bits_;
  }

  /// H-set view with tuple order (x, y, n, k) meaning (x, V_k) ≤ (y, V_n),
  /// against the (y, V, x, W) order of at().
  bool h_tuple(std::size_t x, std::size_t y, std::size_t n, std::size_t k) const { return at(x, k, y, n); }

private:
  std::size_t np_ = 0, nb_ = 0;
  PointSet bits_;
};

/// Levels 1..stab of the hierarchy; level(stab) is the fixpoint and stands
/// for every later (finite or transfinite) level.
///
/// On a space that is not regular the sequence need not decrease and can
/// enter a cycle instead (a finite space is regular only when its open sets
/// are unions of blocks of a partition). Then repeat_of names the stored
/// level that the level after the last one equals, and stabilized is false.
struct BFTables {
  std::vector<BFLevel> levels;  // levels[0] is ≤_1
  bool stabilized = false;      // true when levels.back() is known to repeat
  std::size_t repeat_of = 0;    // 1-based; 0 when unknown, stab() when stabilized

  std::size_t stab() const { return levels.size(); }
  /// Table for ≤_alpha (alpha ≥ 1). Past the stored levels the repeating
  /// part is continued when known; otherwise InputError.
  const BFLevel& level(std::size_t alpha) const;
};

/// Basic-open inclusion lists: sub[V] = { V' : gbasis[V'] ⊆ gbasis[V] }.
std::vector<std::vector<std::size_t>> basis_subsets(const FinGroup& group);

/// ≤_1 by closure inclusion: cl(V·y) ⊆ cl(W·x).
BFLevel bf_level_one(const GSpaceInstance& inst);

/// ≤_{α+1} from ≤_α: (y,V) ≤_{α+1} (x,W) iff for every basic V' ⊆ V there is
/// a basic W' ⊆ W with (x,W') ≤_α (y,V'). Note the swapped arguments.
BFLevel bf_successor(const GSpaceInstance& inst, const BFLevel& prev);

/// Iterates the successor clause from ≤_1 until a table repeats.
BFTables compute_bf_tables(const GSpaceInstance& inst);

/// Same tables built through the relation algebra of the hyperarithmeticity
/// argument: H_1 from inverse translates of basis sets, H_{μ+1} by slicing,
/// projecting, union over V_s ⊆ V_n, intersection over V_r ⊆ V_k and the swap.
/// Computes `levels` levels, stopping early at a repeat.
BFTables h_set_algebra(const GSpaceInstance& inst, std::size_t levels);

/// Entry-by-entry evaluation of the same relation, for instances too large
/// to tabulate. Relies on two monotonicity facts: (a,P) ≤_α (b,Q) survives
/// shrinking P and enlarging Q. So the successor clause only needs the
/// minimal basic opens below V (for "every V'") and below W (for "some W'"),
/// and only one index per distinct set. Entries are memoized.
class LazyRelation {
public:
  explicit LazyRelation(const GSpaceInstance& inst);
  bool leq(std::size_t y, std::size_t v, std::size_t x, std::size_t w, std::size_t alpha);
  /// Minimal basic opens contained in gbasis[v], one index per distinct set.
  const std::vector<std::size_t>& minimal_below(std::size_t v) const { return minimal_[v]; }

private:
  const PointSet& closed_orbit(std::size_t p, std::size_t v);
  const GSpaceInstance* inst_;
  std::vector<std::vector<std::size_t>> minimal_;
  std::vector<PointSet> closure_;
  std::vector<char> closure_ready_;
  std::vector<std::unordered_map<std::uint64_t, bool>> memo_;  // per level
};

std::size_t stabilization_rank(const BFTables& tables);

/// Law checks used by tests and the verify suites.
bool is_transitive(const BFLevel& level);
bool anti_monotone(const BFTables& tables);
/// T[x][0][x'][0] on every level whenever x' ∈ G·x.
bool reflexive_along_orbits(const GSpaceInstance& inst, const BFTables& tables);

struct LemmaBCounterexample {
  std::size_t y, x;
};

/// For all x, y: (y,V) ≤_α (x,W) and x ∈ B^{*W} imply y ∈ B^{*V}.
/// Returns the first violating pair, if any.
std::optional<LemmaBCounterexample> verify_lemma_b(const GSpaceInstance& inst, const BFTables& tables,
                                                   const PointSet& b, std::size_t pi_level, std::size_t v,
                                                   std::size_t w);

/// Per-level listing of true entries as "(y,V,x,W)" quadruples, one level per block.
void dump_tables(std::ostream& os, const GSpaceInstance& inst, const BFTables& tables);

} // namespace bfh
