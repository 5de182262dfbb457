#include "bfh/backforth.hpp"

#include <algorithm>

namespace bfh {

const BFLevel& BFTables::level(std::size_t alpha) const {
  if (alpha == 0) throw InputError("levels start at 1");
  if (alpha <= levels.size()) return levels[alpha - 1];
  if (repeat_of != 0 && repeat_of <= levels.size()) {
    const auto period = levels.size() - repeat_of + 1;
    return levels[repeat_of - 1 + (alpha - repeat_of) % period];
  }
  throw InputError("level " + std::to_string(alpha) + " exceeds the computed levels");
}

std::vector<std::vector<std::size_t>> basis_subsets(const FinGroup& group) {
  const auto nb = group.basis_size();
  std::vector<std::vector<std::size_t>> sub(nb);
  for (std::size_t v = 0; v < nb; ++v)
    for (std::size_t u = 0; u < nb; ++u)
      if (group.basis(u).is_subset_of(group.basis(v))) sub[v].push_back(u);
  return sub;
}

BFLevel bf_level_one(const GSpaceInstance& inst) {
  const auto np = inst.space().size();
  const auto nb = inst.group().basis_size();
  // cl(V·p) for every point and basic open.
  std::vector<PointSet> cl(np * nb);
  for (std::size_t p = 0; p < np; ++p)
    for (std::size_t v = 0; v < nb; ++v)
      cl[p * nb + v] = closure(inst.space(), translate(inst, inst.group().basis(v), make_set(np, {p})));
  BFLevel out(np, nb);
  for (std::size_t y = 0; y < np; ++y)
    for (std::size_t v = 0; v < nb; ++v)
      for (std::size_t x = 0; x < np; ++x)
        for (std::size_t w = 0; w < nb; ++w)
          if (cl[y * nb + v].is_subset_of(cl[x * nb + w])) out.set(y, v, x, w);
  return out;
}

BFLevel bf_successor(const GSpaceInstance& inst, const BFLevel& prev) {
  const auto np = inst.space().size();
  const auto nb = inst.group().basis_size();
  const auto sub = basis_subsets(inst.group());
  BFLevel out(np, nb);
  for (std::size_t y = 0; y < np; ++y)
    for (std::size_t v = 0; v < nb; ++v)
      for (std::size_t x = 0; x < np; ++x)
        for (std::size_t w = 0; w < nb; ++w) {
          bool all = true;
          for (auto v2 : sub[v]) {
            bool some = false;
            for (auto w2 : sub[w])
              if (prev.at(x, w2, y, v2)) {
                some = true;
                break;
              }
            if (!some) {
              all = false;
              break;
            }
          }
          if (all) out.set(y, v, x, w);
        }
  return out;
}

BFTables compute_bf_tables(const GSpaceInstance& inst) {
  BFTables t;
  t.levels.push_back(bf_level_one(inst));
  // The successor map is monotone, so once ≤_2 ⊆ ≤_1 the sequence decreases
  // to a fixpoint. Without that (non-regular spaces) it is still eventually
  // periodic, and the first revisited table ends the run.
  for (;;) {
    BFLevel next = bf_successor(inst, t.levels.back());
    auto hit = std::find(t.levels.begin(), t.levels.end(), next);
    if (hit != t.levels.end()) {
      t.repeat_of = static_cast<std::size_t>(hit - t.levels.begin()) + 1;
      t.stabilized = t.repeat_of == t.levels.size();
      return t;
    }
    t.levels.push_back(std::move(next));
  }
}

std::size_t stabilization_rank(const BFTables& tables) {
  if (!tables.stabilized) throw InputError("the hierarchy has no fixpoint in the computed levels");
  return tables.stab();
}

bool is_transitive(const BFLevel& level) {
  const auto np = level.points();
  const auto nb = level.gbasis();
  const auto n = np * nb;
  // Relation on pairs (point, basic open) as adjacency rows.
  std::vector<PointSet> row(n, PointSet(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (level.at(a / nb, a % nb, b / nb, b % nb)) row[a].set(b);
  for (std::size_t a = 0; a < n; ++a)
    for (auto b = row[a].find_first(); b != PointSet::npos; b = row[a].find_next(b))
      if (!row[b].is_subset_of(row[a])) return false;
  return true;
}

bool anti_monotone(const BFTables& tables) {
  for (std::size_t i = 1; i < tables.levels.size(); ++i)
    if (!tables.levels[i].contained_in(tables.levels[i - 1])) return false;
  return true;
}

bool reflexive_along_orbits(const GSpaceInstance& inst, const BFTables& tables) {
  const auto np = inst.space().size();
  for (std::size_t x = 0; x < np; ++x) {
    const PointSet orb = inst.orbit(x);
    for (auto& lvl : tables.levels)
      for (auto x2 = orb.find_first(); x2 != PointSet::npos; x2 = orb.find_next(x2))
        if (!lvl.at(x, 0, x2, 0)) return false;
  }
  return true;
}

std::optional<LemmaBCounterexample> verify_lemma_b(const GSpaceInstance& inst, const BFTables& tables,
                                                   const PointSet& b, std::size_t pi_level, std::size_t v,
                                                   std::size_t w) {
  const auto& lvl = tables.level(pi_level);
  const auto& grp = inst.group();
  const PointSet star_w = vaught_star(inst, b, grp.basis(w));
  const PointSet star_v = vaught_star(inst, b, grp.basis(v));
  for (auto x = star_w.find_first(); x != PointSet::npos; x = star_w.find_next(x))
    for (std::size_t y = 0; y < inst.space().size(); ++y)
      if (lvl.at(y, v, x, w) && !star_v.test(y)) return LemmaBCounterexample{y, x};
  return std::nullopt;
}

void dump_tables(std::ostream& os, const GSpaceInstance& inst, const BFTables& tables) {
  const auto& sp = inst.space();
  const auto nb = inst.group().basis_size();
  for (std::size_t a = 0; a < tables.levels.size(); ++a) {
    const auto& lvl = tables.levels[a];
    os << "level " << (a + 1) << " entries " << lvl.count() << "\n";
    for (std::size_t y = 0; y < sp.size(); ++y)
      for (std::size_t v = 0; v < nb; ++v)
        for (std::size_t x = 0; x < sp.size(); ++x)
          for (std::size_t w = 0; w < nb; ++w)
            if (lvl.at(y, v, x, w)) os << "(" << sp.name(y) << "," << v << "," << sp.name(x) << "," << w << ")\n";
  }
  os << "stab " << tables.stab() << "\n";
}

} // namespace bfh

namespace bfh {

LazyRelation::LazyRelation(const GSpaceInstance& inst) : inst_(&inst) {
  const auto& group = inst.group();
  const auto nb = group.basis_size();
  const auto sub = basis_subsets(group);
  // Representative index per distinct set, and the sets that are minimal.
  std::vector<std::size_t> rep(nb);
  std::vector<char> minimal(nb, 0);
  for (std::size_t u = 0; u < nb; ++u) {
    rep[u] = u;
    for (std::size_t e = 0; e < u; ++e)
      if (group.basis(e) == group.basis(u)) {
        rep[u] = e;
        break;
      }
    minimal[u] = 1;
    for (auto d : sub[u])
      if (group.basis(d) != group.basis(u)) {
        minimal[u] = 0;
        break;
      }
  }
  minimal_.resize(nb);
  for (std::size_t v = 0; v < nb; ++v)
    for (auto u : sub[v])
      if (minimal[u] && rep[u] == u) minimal_[v].push_back(u);
  closure_.resize(inst.space().size() * nb);
  closure_ready_.assign(closure_.size(), 0);
}

const PointSet& LazyRelation::closed_orbit(std::size_t p, std::size_t v) {
  const auto i = p * inst_->group().basis_size() + v;
  if (!closure_ready_[i]) {
    const auto np = inst_->space().size();
    closure_[i] = closure(inst_->space(), translate(*inst_, inst_->group().basis(v), make_set(np, {p})));
    closure_ready_[i] = 1;
  }
  return closure_[i];
}

bool LazyRelation::leq(std::size_t y, std::size_t v, std::size_t x, std::size_t w, std::size_t alpha) {
  if (alpha == 0) throw InputError("levels start at 1");
  const auto np = inst_->space().size();
  const auto nb = inst_->group().basis_size();
  if (y >= np || x >= np) throw InputError("point index out of range");
  if (v >= nb || w >= nb) throw InputError("basic open index out of range");
  if (alpha == 1) return closed_orbit(y, v).is_subset_of(closed_orbit(x, w));
  if (memo_.size() < alpha + 1) memo_.resize(alpha + 1);
  const std::uint64_t key = ((std::uint64_t{y} * nb + v) * np + x) * nb + w;
  auto it = memo_[alpha].find(key);
  if (it != memo_[alpha].end()) return it->second;
  bool all = true;
  for (auto v2 : minimal_[v]) {
    bool some = false;
    for (auto w2 : minimal_[w])
      if (leq(x, w2, y, v2, alpha - 1)) {
        some = true;
        break;
      }
    if (!some) {
      all = false;
      break;
    }
  }
  memo_[alpha].emplace(key, all);
  return all;
}

} // namespace bfh
