#include "bfh/gspace.hpp"

#include <cassert>

namespace bfh {

FinGroup::FinGroup(std::vector<std::string> names, std::vector<std::vector<std::size_t>> mult,
                   std::vector<PointSet> gbasis)
    : mult_(std::move(mult)) {
  const auto n = mult_.size();
  if (n == 0) throw InputError("group must be nonempty");
  if (names.size() != n) throw InputError("group element names do not match table size");
  for (auto& row : mult_) {
    if (row.size() != n) throw InputError("multiplication table is not square");
    for (auto v : row)
      if (v >= n) throw InputError("multiplication table entry out of range");
  }
  for (std::size_t g = 0; g < n; ++g)
    if (mult_[0][g] != g || mult_[g][0] != g) throw InputError("element 0 is not the identity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mult_[mult_[a][b]][c] != mult_[a][mult_[b][c]])
          throw InputError("multiplication is not associative");
  inv_.assign(n, n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (mult_[g][h] == 0 && mult_[h][g] == 0) inv_[g] = h;
  for (auto i : inv_)
    if (i == n) throw InputError("some element has no inverse");

  if (gbasis.empty() || gbasis[0].size() != n || gbasis[0].count() != n)
    throw InputError("gbasis[0] must be the whole group");
  top_ = FinTopSpace(std::move(names), std::move(gbasis));
}

PointSet FinGroup::inverse(const PointSet& v) const {
  PointSet out(order());
  for (auto g = v.find_first(); g != PointSet::npos; g = v.find_next(g)) out.set(inv_[g]);
  return out;
}

GSpaceInstance::GSpaceInstance(FinGroup group, FinTopSpace space,
                               std::vector<std::vector<std::size_t>> action)
    : group_(std::move(group)), space_(std::move(space)), action_(std::move(action)) {
  const auto ng = group_.order();
  const auto np = space_.size();
  if (action_.size() != ng) throw InputError("action table needs one row per group element");
  for (auto& row : action_) {
    if (row.size() != np) throw InputError("action row has wrong length");
    PointSet image(np);
    for (auto p : row) {
      if (p >= np) throw InputError("action image out of range");
      image.set(p);
    }
    if (image.count() != np) throw InputError("some element does not act bijectively");
  }
  for (std::size_t p = 0; p < np; ++p)
    if (action_[0][p] != p) throw InputError("identity does not act trivially");
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t h = 0; h < ng; ++h)
      for (std::size_t p = 0; p < np; ++p)
        if (action_[g][action_[h][p]] != action_[group_.mul(g, h)][p])
          throw InputError("action is not compatible with multiplication");
  for (std::size_t g = 0; g < ng; ++g)
    for (auto& b : space_.bases()) {
      PointSet image(np);
      for (auto p = b.find_first(); p != PointSet::npos; p = b.find_next(p)) image.set(action_[g][p]);
      if (!space_.is_open(image))
        throw InputError("element " + group_.name(g) + " does not map basis sets to open sets");
    }
}

PointSet GSpaceInstance::orbit(std::size_t p) const {
  return translate(*this, group_.all(), make_set(space_.size(), {p}));
}

PointSet translate(const GSpaceInstance& inst, const PointSet& v, const PointSet& a) {
  inst.group().topology().check_subset(v, "translate");
  inst.space().check_subset(a, "translate");
  PointSet out(inst.space().size());
  for (auto g = v.find_first(); g != PointSet::npos; g = v.find_next(g))
    for (auto p = a.find_first(); p != PointSet::npos; p = a.find_next(p)) out.set(inst.act(g, p));
  return out;
}

PointSet inverse_translate(const GSpaceInstance& inst, const PointSet& v, const PointSet& a) {
  return translate(inst, inst.group().inverse(v), a);
}

PointSet vaught_star(const GSpaceInstance& inst, const PointSet& b, const PointSet& h) {
  const auto& gtop = inst.group().topology();
  gtop.check_subset(h, "vaught_star");
  inst.space().check_subset(b, "vaught_star");
  if (h.none()) throw InputError("vaught_star: H is empty");
  if (!gtop.is_open(h)) throw InputError("vaught_star: H is not open in the group");
  PointSet out(inst.space().size());
  for (std::size_t x = 0; x < inst.space().size(); ++x) {
    PointSet hits(inst.group().order());
    for (auto g = h.find_first(); g != PointSet::npos; g = h.find_next(g))
      if (b.test(inst.act(g, x))) hits.set(g);
    if (comeagre_in(gtop, hits, h)) out.set(x);
  }
  return out;
}

bool is_invariant(const GSpaceInstance& inst, const PointSet& b) {
  const bool invariant = translate(inst, inst.group().all(), b) == b;
  assert(invariant == (vaught_star(inst, b, inst.group().all()) == b));
  return invariant;
}

std::vector<std::size_t> basis_meet_witnesses(const FinTopSpace& space, std::size_t k, std::size_t l) {
  const PointSet meet = space.basis(k) & space.basis(l);
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < space.basis_size(); ++m)
    if (space.basis(m).is_subset_of(meet)) out.push_back(m);
  return out;
}

CodabilityRecord codability(const GSpaceInstance& inst, std::size_t x) {
  const auto& grp = inst.group();
  const auto& sp = inst.space();
  if (x >= sp.size()) throw InputError("codability: point out of range");
  CodabilityRecord rec;
  for (std::size_t n = 0; n < sp.basis_size(); ++n)
    if (sp.basis(n).test(x)) rec.r_x.insert(n);

  const auto nb = grp.basis_size();
  for (std::size_t k = 0; k < nb; ++k) {
    const PointSet vk_inv = grp.inverse(grp.basis(k));
    for (std::size_t l = 0; l < nb; ++l) {
      if (vk_inv.is_subset_of(grp.basis(l))) rec.r_i.insert({k, l});
      PointSet prod(grp.order());
      for (auto a = grp.basis(k).find_first(); a != PointSet::npos; a = grp.basis(k).find_next(a))
        for (auto b = grp.basis(l).find_first(); b != PointSet::npos; b = grp.basis(l).find_next(b))
          prod.set(grp.mul(a, b));
      for (std::size_t n = 0; n < nb; ++n)
        if (prod.is_subset_of(grp.basis(n))) rec.r_o.insert({k, l, n});
    }
    for (std::size_t i = 0; i < sp.basis_size(); ++i) {
      const PointSet image = translate(inst, grp.basis(k), sp.basis(i));
      for (std::size_t j = 0; j < sp.basis_size(); ++j)
        if (image.is_subset_of(sp.basis(j))) rec.r_a.insert({k, i, j});
    }
  }
  return rec;
}

ActionFromCode::ActionFromCode(const GSpaceInstance& inst,
                               const std::set<std::array<std::size_t, 3>>& r_a)
    : inst_(&inst), triples_(r_a.begin(), r_a.end()) {
  for (auto& [k, i, j] : triples_)
    if (k >= inst.group().basis_size() || i >= inst.space().basis_size() ||
        j >= inst.space().basis_size())
      throw InputError("r_a triple refers to a basis index outside the instance");
}

bool ActionFromCode::operator()(std::size_t g, std::size_t x, std::size_t j) const {
  for (auto& [k, i, jj] : triples_)
    if (jj == j && inst_->group().basis(k).test(g) && inst_->space().basis(i).test(x)) return true;
  return false;
}

ActionFromCode reconstruct_action(const GSpaceInstance& inst, const CodabilityRecord& record) {
  return ActionFromCode(inst, record.r_a);
}

std::optional<ActionMismatch> verify_reconstruction(const GSpaceInstance& inst,
                                                    const CodabilityRecord& record) {
  const auto pred = reconstruct_action(inst, record);
  for (std::size_t g = 0; g < inst.group().order(); ++g)
    for (std::size_t x = 0; x < inst.space().size(); ++x)
      for (std::size_t j = 0; j < inst.space().basis_size(); ++j) {
        const bool actual = inst.space().basis(j).test(inst.act(g, x));
        const bool decoded = pred(g, x, j);
        if (actual != decoded) return ActionMismatch{g, x, j, decoded, actual};
      }
  return std::nullopt;
}

} // namespace bfh
