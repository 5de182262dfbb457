#pragma once

#include "bfh/backforth.hpp"
#include "bfh/borel.hpp"
#include "bfh/logic/truncation.hpp"

#include <optional>
#include <vector>

namespace bfh::logic {

/// Stage-by-stage outcome of the finite Nadel pipeline for a pair x, y.
struct NadelReport {
  std::size_t codes = 0;
  std::vector<std::size_t> invariant;       // stage 1: indices of codes with invariant sets
  bool same_sets = false;                   // stage 2
  std::optional<std::size_t> separating;    // a code whose set holds exactly one of x, y
  bool related = false;                     // stage 3: (y,G) ≤_α (x,G)
  bool checked = false;                     // stage 4 ran
  std::size_t pi_sets = 0;                  // invariant sets of Π-level ≤ α containing x
  std::optional<std::size_t> failure;       // stage 4: such a set missing y
  bool passed() const { return !failure.has_value(); }
};

/// (1) keep the codes whose decoded sets are invariant, (2) compare the
/// memberships of x and y, (3) if equal, look up (y,G) ≤_α (x,G), (4) if
/// related, check that y lies in every kept set of Π-level ≤ α containing x.
/// Throws InputError if a code does not fit the truncation's space or a
/// structure is not a point of it.
NadelReport nadel_shadow_check(const Truncation& trunc, const BFTables& tables, const CoreStructure& x,
                               const CoreStructure& y, const std::vector<BorelCode>& codes, std::size_t alpha);

} // namespace bfh::logic
