#pragma once

#include "bfh/logic/formula.hpp"
#include "bfh/logic/structure.hpp"

#include <vector>

namespace bfh::logic {

/// Isomorphism of the padded structures. The smaller core is extended by
/// relation-free points to the larger size (both sides have infinitely many
/// such points), then every bijection of the cores is tried.
bool iso(const CoreStructure& x, const CoreStructure& y);

inline constexpr std::size_t kDefaultEfCap = 4;

/// Largest k ≤ cap such that Duplicator wins the k-round Ehrenfeucht-Fraïssé
/// game on the padded structures. Moves range over the core, the points
/// already played in that structure, and one fresh padding point: unplayed
/// padding points are swapped by automorphisms fixing everything played.
std::size_t ef_rounds(const CoreStructure& x, const CoreStructure& y, std::size_t cap = kDefaultEfCap);

/// ∃ distinct v0..v(n-1) [full atomic diagram of x ∧ for every symbol R,
/// ∀u (R(u) → each u_j is some v_i)]. Holds in y exactly when y ≅ x as
/// padded structures. Quantifier rank n + max arity.
Formula scott_sentence(const CoreStructure& x);

/// Sentences of quantifier rank ≤ 2 with prefix Q v0 Q v1 (or shorter) and a
/// quantifier-free matrix that is a conjunction or a disjunction of at most
/// `width` literals over the atoms and equalities of the bound variables,
/// plus true and false. Deduplicated by text.
std::vector<Formula> formula_pool(const Language& lang, std::size_t width = 2);

/// One representative per isomorphism class of digraph cores of size ≤ n
/// (cores with an isolated point also stand for the smaller core).
std::vector<CoreStructure> digraph_iso_representatives(std::size_t n);

} // namespace bfh::logic
