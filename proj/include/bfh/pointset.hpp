#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace bfh {

/// Raised when an argument lies outside the documented input domain
/// (point not in the space, non-open set where an open one is required, ...).
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Subset of a finite index range {0..n-1}; points, group elements and
/// basis indices all use it.
using PointSet = boost::dynamic_bitset<>;

inline PointSet make_set(std::size_t universe, std::initializer_list<std::size_t> members) {
  PointSet s(universe);
  for (auto m : members) {
    if (m >= universe) throw InputError("set member " + std::to_string(m) + " outside universe");
    s.set(m);
  }
  return s;
}

inline PointSet make_set(std::size_t universe, const std::vector<std::size_t>& members) {
  PointSet s(universe);
  for (auto m : members) {
    if (m >= universe) throw InputError("set member " + std::to_string(m) + " outside universe");
    s.set(m);
  }
  return s;
}

inline PointSet full_set(std::size_t universe) {
  PointSet s(universe);
  s.set();
  return s;
}

inline std::vector<std::size_t> members(const PointSet& s) {
  std::vector<std::size_t> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != PointSet::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

inline bool subset_of(const PointSet& a, const PointSet& b) { return a.is_subset_of(b); }

} // namespace bfh
