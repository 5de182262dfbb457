#include "bfh/logic/nadel.hpp"

namespace bfh::logic {

NadelReport nadel_shadow_check(const Truncation& trunc, const BFTables& tables, const CoreStructure& x,
                               const CoreStructure& y, const std::vector<BorelCode>& codes, std::size_t alpha) {
  const auto& inst = trunc.inst;
  const std::size_t px = trunc.point(x);
  const std::size_t py = trunc.point(y);
  const auto& relation = tables.level(alpha);

  NadelReport rep;
  rep.codes = codes.size();
  std::vector<PointSet> sets;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    check_code(inst.space(), codes[i]);
    PointSet b = decode(inst.space(), codes[i]);
    if (is_invariant(inst, b)) {
      rep.invariant.push_back(i);
      sets.push_back(std::move(b));
    }
  }

  rep.same_sets = true;
  for (std::size_t k = 0; k < sets.size(); ++k)
    if (sets[k].test(px) != sets[k].test(py)) {
      rep.same_sets = false;
      rep.separating = rep.invariant[k];
      break;
    }
  if (!rep.same_sets) return rep;

  rep.related = relation.at(py, 0, px, 0);
  if (!rep.related) return rep;

  rep.checked = true;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    if (pi_level(codes[rep.invariant[k]]) > alpha || !sets[k].test(px)) continue;
    ++rep.pi_sets;
    if (!sets[k].test(py)) {
      rep.failure = rep.invariant[k];
      break;
    }
  }
  return rep;
}

} // namespace bfh::logic
