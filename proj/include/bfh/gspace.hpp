#pragma once

#include "bfh/pointset.hpp"
#include "bfh/topology.hpp"

#include <array>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace bfh {

/// A finite group with a topology given by an enumerated basis of element
/// subsets. Element 0 is the identity and gbasis(0) is the whole group.
class FinGroup {
public:
  FinGroup() = default;
  FinGroup(std::vector<std::string> names, std::vector<std::vector<std::size_t>> mult,
           std::vector<PointSet> gbasis);

  std::size_t order() const { return mult_.size(); }
  std::size_t mul(std::size_t g, std::size_t h) const { return mult_[g][h]; }
  std::size_t inv(std::size_t g) const { return inv_[g]; }
  const std::vector<std::vector<std::size_t>>& mult_table() const { return mult_; }
  const std::vector<std::size_t>& inverse_table() const { return inv_; }

  /// The group viewed as a topological space (points = elements, basis = gbasis).
  const FinTopSpace& topology() const { return top_; }
  std::size_t basis_size() const { return top_.basis_size(); }
  const PointSet& basis(std::size_t k) const { return top_.basis(k); }
  const std::string& name(std::size_t g) const { return top_.name(g); }

  PointSet all() const { return full_set(order()); }
  PointSet inverse(const PointSet& v) const;

private:
  std::vector<std::vector<std::size_t>> mult_;
  std::vector<std::size_t> inv_;
  FinTopSpace top_;
};

/// A finite group acting on a finite space by homeomorphisms.
class GSpaceInstance {
public:
  GSpaceInstance() = default;
  /// action[g][p] is g·p. Validates the action axioms and that each element
  /// maps basis sets to open sets.
  GSpaceInstance(FinGroup group, FinTopSpace space, std::vector<std::vector<std::size_t>> action);

  const FinGroup& group() const { return group_; }
  const FinTopSpace& space() const { return space_; }
  std::size_t act(std::size_t g, std::size_t p) const { return action_[g][p]; }
  const std::vector<std::vector<std::size_t>>& action_table() const { return action_; }

  PointSet orbit(std::size_t p) const;

private:
  FinGroup group_;
  FinTopSpace space_;
  std::vector<std::vector<std::size_t>> action_;
};

/// {g·a : g ∈ V, a ∈ A}.
PointSet translate(const GSpaceInstance& inst, const PointSet& v, const PointSet& a);

/// V⁻¹A = {g⁻¹·a : g ∈ V, a ∈ A}, computed through the inverse table as the
/// union of the single-element translates g⁻¹A.
PointSet inverse_translate(const GSpaceInstance& inst, const PointSet& v, const PointSet& a);

/// Vaught transform B^{*H} = {x : {g ∈ H : g·x ∈ B} is comeagre in H}.
/// H must be a nonempty open subset of the group.
PointSet vaught_star(const GSpaceInstance& inst, const PointSet& b, const PointSet& h);

/// translate(G, B) == B. In debug builds also checks B^{*G} == B agrees.
bool is_invariant(const GSpaceInstance& inst, const PointSet& b);

/// Every m with basis[m] ⊆ basis[k] ∩ basis[l].
std::vector<std::size_t> basis_meet_witnesses(const FinTopSpace& space, std::size_t k, std::size_t l);

/// The finite relations coding a point, the group and the action:
///   r_x = {n : x ∈ U_n},  r_o = {(k,l,n) : V_k V_l ⊆ V_n},
///   r_i = {(k,l) : V_k⁻¹ ⊆ V_l},  r_a = {(k,i,j) : V_k U_i ⊆ U_j}.
struct CodabilityRecord {
  std::set<std::size_t> r_x;
  std::set<std::array<std::size_t, 3>> r_o;
  std::set<std::array<std::size_t, 2>> r_i;
  std::set<std::array<std::size_t, 3>> r_a;
};

CodabilityRecord codability(const GSpaceInstance& inst, std::size_t x);

/// Membership in the relation {(g,x,j) : g·x ∈ U_j}, read back from r_a alone:
/// P(g,x,j) iff some (k,i,j) ∈ r_a has g ∈ V_k and x ∈ U_i.
class ActionFromCode {
public:
  ActionFromCode(const GSpaceInstance& inst, const std::set<std::array<std::size_t, 3>>& r_a);
  bool operator()(std::size_t g, std::size_t x, std::size_t j) const;

private:
  const GSpaceInstance* inst_;
  std::vector<std::array<std::size_t, 3>> triples_;
};

ActionFromCode reconstruct_action(const GSpaceInstance& inst, const CodabilityRecord& record);

struct ActionMismatch {
  std::size_t g, x, j;
  bool decoded;  // what the record claims
  bool actual;   // g·x ∈ U_j
};

/// Compares the reconstructed predicate with the action on every (g,x,j).
std::optional<ActionMismatch> verify_reconstruction(const GSpaceInstance& inst,
                                                    const CodabilityRecord& record);

} // namespace bfh
