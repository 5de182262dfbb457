#pragma once

#include "bfh/pointset.hpp"

#include <string>
#include <vector>

namespace bfh {

/// A finite topological space given by an explicitly enumerated basis.
/// Basis indices are stable: basis(n) is the basic open U_n.
class FinTopSpace {
public:
  FinTopSpace() = default;

  /// Validates that the basis covers the points and satisfies the basis
  /// axiom; throws InputError otherwise.
  FinTopSpace(std::vector<std::string> point_names, std::vector<PointSet> basis);

  /// Unnamed points "p0", "p1", ...
  FinTopSpace(std::size_t n_points, std::vector<PointSet> basis);

  std::size_t size() const { return names_.size(); }
  std::size_t basis_size() const { return basis_.size(); }
  const PointSet& basis(std::size_t n) const;
  const std::vector<PointSet>& bases() const { return basis_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t p) const { return names_.at(p); }
  std::size_t index_of(const std::string& point_name) const;

  PointSet empty() const { return PointSet(size()); }
  PointSet all() const { return full_set(size()); }

  /// Smallest open set containing p (the intersection of its basic neighbourhoods).
  const PointSet& minimal_open(std::size_t p) const { return minimal_open_.at(p); }

  /// Is `s` a union of basis sets?
  bool is_open(const PointSet& s) const;

  /// Does no pair of distinct points share all basic neighbourhoods?
  bool is_t0() const;

  void check_subset(const PointSet& s, const char* what) const;

private:
  std::vector<std::string> names_;
  std::vector<PointSet> basis_;
  std::vector<PointSet> minimal_open_;
};

/// { p : every basis set containing p meets A }.
PointSet closure(const FinTopSpace& space, const PointSet& a);

/// Union of the basis sets contained in A.
PointSet interior(const FinTopSpace& space, const PointSet& a);

/// Is S meagre in the open subspace H?
///
/// In a finite space a meagre set is a finite union of nowhere dense sets,
/// and every subset of a nowhere dense set is nowhere dense. So S is meagre
/// in H exactly when each singleton {s}, s in S, is nowhere dense in H, i.e.
/// no nonempty relatively open U with U ∩ H ⊆ cl({s}) ∩ H exists.
bool meager_in(const FinTopSpace& space, const PointSet& s, const PointSet& h);

/// Is S comeagre in the open subspace H? Equivalent to H \ S meagre in H.
bool comeagre_in(const FinTopSpace& space, const PointSet& s, const PointSet& h);

} // namespace bfh
