#include "bfh/topology.hpp"

#include <algorithm>

namespace bfh {

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  return names;
}

} // namespace

FinTopSpace::FinTopSpace(std::size_t n_points, std::vector<PointSet> basis)
    : FinTopSpace(default_names(n_points), std::move(basis)) {}

FinTopSpace::FinTopSpace(std::vector<std::string> point_names, std::vector<PointSet> basis)
    : names_(std::move(point_names)), basis_(std::move(basis)) {
  const auto n = names_.size();
  {
    auto sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InputError("duplicate point name");
  }
  PointSet covered(n);
  for (auto& b : basis_) {
    if (b.size() != n) throw InputError("basis set has wrong universe size");
    covered |= b;
  }
  if (covered.count() != n) throw InputError("basis does not cover the space");

  minimal_open_.assign(n, full_set(n));
  for (auto& b : basis_)
    for (auto p = b.find_first(); p != PointSet::npos; p = b.find_next(p)) minimal_open_[p] &= b;

  // Basis axiom: each point of U_k ∩ U_l has a basic neighbourhood inside the
  // intersection. For finitely many sets this holds iff the intersection of
  // all basic neighbourhoods of each point is itself a basis set.
  for (std::size_t p = 0; p < n; ++p) {
    bool found = false;
    for (auto& b : basis_) {
      if (b.test(p) && b == minimal_open_[p]) {
        found = true;
        break;
      }
    }
    if (!found)
      throw InputError("basis axiom fails at point " + names_[p] +
                       ": no basis set equals the intersection of its neighbourhoods");
  }
}

const PointSet& FinTopSpace::basis(std::size_t n) const {
  if (n >= basis_.size()) throw InputError("basis index " + std::to_string(n) + " out of range");
  return basis_[n];
}

std::size_t FinTopSpace::index_of(const std::string& point_name) const {
  auto it = std::find(names_.begin(), names_.end(), point_name);
  if (it == names_.end()) throw InputError("unknown point '" + point_name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

bool FinTopSpace::is_open(const PointSet& s) const {
  if (s.size() != size()) return false;
  for (auto p = s.find_first(); p != PointSet::npos; p = s.find_next(p))
    if (!minimal_open_[p].is_subset_of(s)) return false;
  return true;
}

bool FinTopSpace::is_t0() const {
  for (std::size_t p = 0; p < size(); ++p)
    for (std::size_t q = p + 1; q < size(); ++q)
      if (minimal_open_[p] == minimal_open_[q]) return false;
  return true;
}

void FinTopSpace::check_subset(const PointSet& s, const char* what) const {
  if (s.size() != size())
    throw InputError(std::string(what) + ": set refers to points outside the space");
}

PointSet closure(const FinTopSpace& space, const PointSet& a) {
  space.check_subset(a, "closure");
  PointSet out(space.size());
  for (std::size_t p = 0; p < space.size(); ++p)
    if (space.minimal_open(p).intersects(a)) out.set(p);
  return out;
}

PointSet interior(const FinTopSpace& space, const PointSet& a) {
  space.check_subset(a, "interior");
  PointSet out(space.size());
  for (auto& b : space.bases())
    if (b.is_subset_of(a)) out |= b;
  return out;
}

bool meager_in(const FinTopSpace& space, const PointSet& s, const PointSet& h) {
  space.check_subset(s, "meager_in");
  space.check_subset(h, "meager_in");
  if (!space.is_open(h)) throw InputError("meager_in: H is not open");
  if (!s.is_subset_of(h)) throw InputError("meager_in: S is not contained in H");
  for (auto x = s.find_first(); x != PointSet::npos; x = s.find_next(x)) {
    PointSet cl = closure(space, make_set(space.size(), {x})) & h;
    // Some point q of cl(x) ∩ H whose minimal neighbourhood (inside H, since
    // H is open) stays within cl(x): then {x} is not nowhere dense.
    for (auto q = cl.find_first(); q != PointSet::npos; q = cl.find_next(q))
      if (space.minimal_open(q).is_subset_of(cl)) return false;
  }
  return true;
}

bool comeagre_in(const FinTopSpace& space, const PointSet& s, const PointSet& h) {
  space.check_subset(s, "comeagre_in");
  space.check_subset(h, "comeagre_in");
  if (!space.is_open(h)) throw InputError("comeagre_in: H is not open");
  return meager_in(space, h - s, h);
}

} // namespace bfh
