#include "bfh/backforth.hpp"

#include <algorithm>

// Relation-algebra route to the hierarchy. A level is kept as the family of
// "slices" H(c,d) = { (a,b) : (a, V_c) ≤ (b, V_d) }, each a subset of X×X,
// and built purely from set operations: products, complements, finite
// unions and intersections, projection of a slice, and the coordinate swap.

namespace bfh {

namespace {

class PairAlgebra {
public:
  explicit PairAlgebra(std::size_t np) : np_(np) {}

  PointSet empty() const { return PointSet(np_ * np_); }
  PointSet full() const { return full_set(np_ * np_); }

  PointSet product(const PointSet& a, const PointSet& b) const {
    PointSet out = empty();
    for (auto i = a.find_first(); i != PointSet::npos; i = a.find_next(i))
      for (auto j = b.find_first(); j != PointSet::npos; j = b.find_next(j)) out.set(i * np_ + j);
    return out;
  }

  /// s(a,b) = (b,a)
  PointSet swap(const PointSet& r) const {
    PointSet out = empty();
    for (auto e = r.find_first(); e != PointSet::npos; e = r.find_next(e)) out.set((e % np_) * np_ + e / np_);
    return out;
  }

private:
  std::size_t np_;
};

using Slices = std::vector<PointSet>;  // index c * nb + d

BFLevel to_level(const Slices& h, std::size_t np, std::size_t nb) {
  BFLevel out(np, nb);
  for (std::size_t c = 0; c < nb; ++c)
    for (std::size_t d = 0; d < nb; ++d) {
      const auto& rel = h[c * nb + d];
      for (auto e = rel.find_first(); e != PointSet::npos; e = rel.find_next(e)) out.set(e / np, c, e % np, d);
    }
  return out;
}

// H_1 = ⋃_{k,n} ⋂_i ( [(X \ V_k⁻¹U_i) × X] ∪ [V_k⁻¹U_i × V_n⁻¹U_i] ) × {k} × {n}
Slices h_one(const GSpaceInstance& inst, const PairAlgebra& alg) {
  const auto& grp = inst.group();
  const auto& sp = inst.space();
  const auto nb = grp.basis_size();
  const PointSet all = sp.all();
  std::vector<PointSet> pull(nb * sp.basis_size());  // V_k⁻¹U_i
  for (std::size_t k = 0; k < nb; ++k)
    for (std::size_t i = 0; i < sp.basis_size(); ++i) {
      // V_k⁻¹U_i = ⋃ { g⁻¹U_i : g ∈ V_k }
      PointSet acc = sp.empty();
      const auto& vk = grp.basis(k);
      for (auto g = vk.find_first(); g != PointSet::npos; g = vk.find_next(g))
        acc |= inverse_translate(inst, make_set(grp.order(), {g}), sp.basis(i));
      pull[k * sp.basis_size() + i] = std::move(acc);
    }
  Slices h(nb * nb);
  for (std::size_t k = 0; k < nb; ++k)
    for (std::size_t n = 0; n < nb; ++n) {
      PointSet acc = alg.full();
      for (std::size_t i = 0; i < sp.basis_size(); ++i) {
        const auto& yk = pull[k * sp.basis_size() + i];
        const auto& xn = pull[n * sp.basis_size() + i];
        acc &= alg.product(all - yk, all) | alg.product(yk, xn);
      }
      h[k * nb + n] = std::move(acc);
    }
  return h;
}

// (y,x,k,n) ∈ H_{μ+1} iff
//   (y,x) ∈ s( ⋂_{V_r ⊆ V_k} ⋃_{V_s ⊆ V_n} π_{1,2}( H_μ ∩ (X² × {s} × {r}) ) )
// where the slice at (s, r) holds the pairs (x, y) with (x, V_s) ≤_μ (y, V_r).
Slices h_successor(const Slices& prev, const std::vector<std::vector<std::size_t>>& sub,
                   std::size_t nb, const PairAlgebra& alg) {
  Slices h(nb * nb);
  for (std::size_t k = 0; k < nb; ++k)
    for (std::size_t n = 0; n < nb; ++n) {
      PointSet inter = alg.full();
      for (auto r : sub[k]) {
        PointSet uni = alg.empty();
        for (auto s : sub[n]) uni |= prev[s * nb + r];
        inter &= uni;
      }
      h[k * nb + n] = alg.swap(inter);
    }
  return h;
}

} // namespace

BFTables h_set_algebra(const GSpaceInstance& inst, std::size_t levels) {
  const auto np = inst.space().size();
  const auto nb = inst.group().basis_size();
  const PairAlgebra alg(np);
  const auto sub = basis_subsets(inst.group());

  BFTables t;
  if (levels == 0) return t;
  std::vector<Slices> seen{h_one(inst, alg)};
  t.levels.push_back(to_level(seen.back(), np, nb));
  // Runs one step past the requested count so a repeat there is recorded.
  for (;;) {
    Slices next = h_successor(seen.back(), sub, nb, alg);
    auto hit = std::find(seen.begin(), seen.end(), next);
    if (hit != seen.end()) {
      t.repeat_of = static_cast<std::size_t>(hit - seen.begin()) + 1;
      t.stabilized = t.repeat_of == seen.size();
      return t;
    }
    if (t.levels.size() == levels) return t;
    t.levels.push_back(to_level(next, np, nb));
    seen.push_back(std::move(next));
  }
}

} // namespace bfh
