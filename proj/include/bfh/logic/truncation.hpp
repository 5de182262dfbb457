#pragma once

#include "bfh/backforth.hpp"
#include "bfh/gspace.hpp"
#include "bfh/logic/formula.hpp"
#include "bfh/logic/structure.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace bfh::logic {

/// S_m as a topological group whose basic opens are the extension sets of
/// the partial injections of {0..m-1}. Element 0 is the identity, gbasis
/// index k is the extension set of injections[k], and index 0 is the empty
/// injection. Distinct injections may name the same set.
struct SymmetricGroup {
  std::size_t m = 0;
  std::vector<std::vector<Nat>> perms;  // perms[g][i] = g(i)
  std::vector<PartialInjection> injections;
  FinGroup group;

  std::size_t gbasis_index(const PartialInjection& s) const;  // InputError if not an injection of {0..m-1}
};

/// Builds S_m; m ≤ 5 keeps the multiplication table small.
std::shared_ptr<const SymmetricGroup> make_symmetric_group(std::size_t m);

enum class TruncationBasis { Singletons, Cylinders };

/// The logic action truncated to universe {0..m-1}: a finite G-space whose
/// points are L-structures on m points and where g acts by pushing facts
/// along g. Both topologies offered are discrete (the product topology on
/// finitely many coordinates), Cylinders lists the basic cylinder sets
/// with index 0 = everything free.
struct Truncation {
  Language lang;
  std::shared_ptr<const SymmetricGroup> sym;
  std::vector<CoreStructure> structures;  // space point p, each with core m
  GSpaceInstance inst;

  std::size_t m() const { return sym->m; }
  /// The point for `st` read on m points; std::nullopt if not in this space.
  std::optional<std::size_t> find(const CoreStructure& st) const;
  std::size_t point(const CoreStructure& st) const;  // InputError if absent
};

/// `st` viewed on m ≥ core points (the extra points carry no facts).
CoreStructure pad_to(const CoreStructure& st, std::size_t m);

/// g·st for a permutation of {0..m-1}.
CoreStructure act(const std::vector<Nat>& g, const CoreStructure& st);

/// Every structure on m points; needs fewer than 32 coordinates.
Truncation full_truncation(const Language& lang, std::shared_ptr<const SymmetricGroup> sym,
                           TruncationBasis basis = TruncationBasis::Singletons);

/// The invariant subspace made of the orbits of `seeds`, with the discrete
/// topology. In a discrete space, closures of translates computed inside an
/// invariant subspace equal those of the whole space, so every entry of the
/// hierarchy between points of the subspace is the same.
Truncation orbit_truncation(const Language& lang, std::shared_ptr<const SymmetricGroup> sym,
                            const std::vector<CoreStructure>& seeds);

/// Definition-level answers on the truncation of size m, reusing one
/// subspace for many anchor pairs and levels.
class TruncationOracle {
public:
  TruncationOracle(std::shared_ptr<const SymmetricGroup> sym, const CoreStructure& y, const CoreStructure& x);
  /// (y, N_s) ≤_α (x, N_t) on the truncation.
  bool query(const PartialInjection& s, const PartialInjection& t, std::size_t alpha);
  const Truncation& truncation() const { return trunc_; }

private:
  Truncation trunc_;
  std::size_t y_, x_;
  std::unique_ptr<LazyRelation> rel_;
};

/// One-shot form. Throws InputError when m is smaller than a core or than a
/// point named by s or t.
bool truncation_oracle(const CoreStructure& y, const PartialInjection& s, const CoreStructure& x,
                       const PartialInjection& t, std::size_t alpha, std::size_t m);

/// B_σ inside a truncation: the points whose structure (on m points, no
/// padding) satisfies σ. Throws InputError for a formula with free variables.
PointSet b_sigma(const Truncation& trunc, const Formula& sigma);

/// B_σ in the padded setting, as a membership predicate.
class BSigma {
public:
  BSigma(Formula sigma, const Language& lang);
  bool contains(const CoreStructure& st) const;

private:
  CompiledFormula compiled_;
};

} // namespace bfh::logic
