#include "bfh/logic/truncation.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bfh::logic {

std::size_t SymmetricGroup::gbasis_index(const PartialInjection& s) const {
  auto it = std::find(injections.begin(), injections.end(), s);
  if (it == injections.end())
    throw InputError("injection " + to_string(s) + " is not a partial injection of {0.." + std::to_string(m - 1) + "}");
  return static_cast<std::size_t>(it - injections.begin());
}

namespace {

// Partial injections of {0..m-1}, by size and then lexicographically.
std::vector<PartialInjection> all_injections(std::size_t m) {
  std::vector<PartialInjection> out;
  for (std::size_t k = 0; k <= m; ++k) {
    std::vector<std::pair<Nat, Nat>> cur;
    std::vector<char> used(m, 0);
    auto go = [&](auto& self, Nat from) -> void {
      if (cur.size() == k) {
        out.emplace_back(cur);
        return;
      }
      for (Nat i = from; i < static_cast<Nat>(m); ++i)
        for (Nat j = 0; j < static_cast<Nat>(m); ++j) {
          if (used[j]) continue;
          used[j] = 1;
          cur.emplace_back(i, j);
          self(self, i + 1);
          cur.pop_back();
          used[j] = 0;
        }
    };
    go(go, 0);
  }
  return out;
}

} // namespace

std::shared_ptr<const SymmetricGroup> make_symmetric_group(std::size_t m) {
  if (m == 0 || m > 5) throw InputError("truncation size must be between 1 and 5");
  auto sym = std::make_shared<SymmetricGroup>();
  sym->m = m;
  std::vector<Nat> p(m);
  std::iota(p.begin(), p.end(), Nat{0});
  do sym->perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  const auto n = sym->perms.size();
  auto index = [&](const std::vector<Nat>& q) {
    return static_cast<std::size_t>(std::lower_bound(sym->perms.begin(), sym->perms.end(), q) - sym->perms.begin());
  };
  std::vector<std::vector<std::size_t>> mult(n, std::vector<std::size_t>(n));
  std::vector<Nat> comp(m);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      for (std::size_t i = 0; i < m; ++i) comp[i] = sym->perms[g][static_cast<std::size_t>(sym->perms[h][i])];
      mult[g][h] = index(comp);
    }

  sym->injections = all_injections(m);
  std::vector<PointSet> gbasis;
  gbasis.reserve(sym->injections.size());
  for (auto& s : sym->injections) {
    PointSet ext(n);
    for (std::size_t g = 0; g < n; ++g) {
      bool ok = true;
      for (auto& [i, j] : s.pairs())
        if (sym->perms[g][static_cast<std::size_t>(i)] != j) {
          ok = false;
          break;
        }
      if (ok) ext.set(g);
    }
    gbasis.push_back(std::move(ext));
  }
  std::vector<std::string> names;
  for (std::size_t g = 0; g < n; ++g) {
    std::string name;
    for (auto v : sym->perms[g]) name += std::to_string(v);
    names.push_back("p" + name);
  }
  sym->group = FinGroup(std::move(names), std::move(mult), std::move(gbasis));
  return sym;
}

CoreStructure pad_to(const CoreStructure& st, std::size_t m) {
  if (st.core() > m) throw InputError("structure core " + std::to_string(st.core()) + " exceeds truncation size " + std::to_string(m));
  CoreStructure out(st.language(), m);
  for (auto& [s, t] : st.facts()) out.add(s, t);
  return out;
}

CoreStructure act(const std::vector<Nat>& g, const CoreStructure& st) {
  if (g.size() != st.core()) throw InputError("permutation size differs from the structure size");
  CoreStructure out(st.language(), st.core());
  std::vector<Nat> image;
  for (auto& [s, t] : st.facts()) {
    image.clear();
    for (auto a : t) image.push_back(g[static_cast<std::size_t>(a)]);
    out.add(s, image);
  }
  return out;
}

std::optional<std::size_t> Truncation::find(const CoreStructure& st) const {
  if (st.core() > m()) return std::nullopt;
  const auto code = pad_to(st, m()).code();
  auto it = std::lower_bound(structures.begin(), structures.end(), code,
                             [](const CoreStructure& a, std::uint64_t c) { return a.code() < c; });
  if (it == structures.end() || it->code() != code) return std::nullopt;
  return static_cast<std::size_t>(it - structures.begin());
}

std::size_t Truncation::point(const CoreStructure& st) const {
  auto p = find(st);
  if (!p) throw InputError("structure is not a point of this truncation");
  return *p;
}

namespace {

// Points sorted by code; the action table is filled by pushing facts.
Truncation assemble(const Language& lang, std::shared_ptr<const SymmetricGroup> sym,
                    std::vector<CoreStructure> points, std::vector<PointSet> basis_override) {
  std::sort(points.begin(), points.end(), [](const CoreStructure& a, const CoreStructure& b) { return a.code() < b.code(); });
  Truncation tr;
  tr.lang = lang;
  tr.sym = sym;
  tr.structures = std::move(points);
  const auto np = tr.structures.size();
  std::vector<std::string> names;
  for (auto& st : tr.structures) names.push_back("x" + std::to_string(st.code()));
  std::vector<PointSet> basis = std::move(basis_override);
  if (basis.empty())
    for (std::size_t p = 0; p < np; ++p) basis.push_back(make_set(np, {p}));
  std::vector<std::vector<std::size_t>> action(sym->perms.size(), std::vector<std::size_t>(np));
  for (std::size_t g = 0; g < sym->perms.size(); ++g)
    for (std::size_t p = 0; p < np; ++p) action[g][p] = tr.point(act(sym->perms[g], tr.structures[p]));
  tr.inst = GSpaceInstance(sym->group, FinTopSpace(std::move(names), std::move(basis)), std::move(action));
  return tr;
}

} // namespace

Truncation full_truncation(const Language& lang, std::shared_ptr<const SymmetricGroup> sym, TruncationBasis basis) {
  const auto m = sym->m;
  const auto coords = CoreStructure::coordinate_count(lang, m);
  if (coords >= 32) throw InputError("full truncation has too many structures");
  std::vector<CoreStructure> points;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << coords); ++c) points.push_back(CoreStructure::from_code(lang, m, c));
  std::vector<PointSet> sets;
  if (basis == TruncationBasis::Cylinders) {
    if (coords > 8) throw InputError("too many coordinates for a cylinder basis");
    // Ternary digit per coordinate: 0 free, 1 forced false, 2 forced true.
    std::size_t count = 1;
    for (std::size_t i = 0; i < coords; ++i) count *= 3;
    for (std::size_t k = 0; k < count; ++k) {
      PointSet cyl(points.size());
      for (std::uint64_t c = 0; c < points.size(); ++c) {
        std::size_t r = k;
        bool ok = true;
        for (std::size_t i = 0; i < coords && ok; ++i, r /= 3) {
          const auto digit = r % 3;
          const bool bit = (c >> i) & 1U;
          if ((digit == 1 && bit) || (digit == 2 && !bit)) ok = false;
        }
        if (ok) cyl.set(c);
      }
      sets.push_back(std::move(cyl));
    }
  }
  return assemble(lang, std::move(sym), std::move(points), std::move(sets));
}

Truncation orbit_truncation(const Language& lang, std::shared_ptr<const SymmetricGroup> sym,
                            const std::vector<CoreStructure>& seeds) {
  std::set<std::uint64_t> seen;
  std::vector<CoreStructure> points;
  for (auto& seed : seeds) {
    if (!(seed.language() == lang)) throw InputError("seed structure uses another language");
    const auto padded = pad_to(seed, sym->m);
    for (auto& g : sym->perms) {
      auto img = act(g, padded);
      if (seen.insert(img.code()).second) points.push_back(std::move(img));
    }
  }
  return assemble(lang, std::move(sym), std::move(points), {});
}

TruncationOracle::TruncationOracle(std::shared_ptr<const SymmetricGroup> sym, const CoreStructure& y,
                                   const CoreStructure& x) {
  if (!(y.language() == x.language())) throw InputError("structures use different languages");
  if (y.core() > sym->m || x.core() > sym->m) throw InputError("truncation size smaller than a core");
  trunc_ = orbit_truncation(y.language(), std::move(sym), {y, x});
  y_ = trunc_.point(y);
  x_ = trunc_.point(x);
  rel_ = std::make_unique<LazyRelation>(trunc_.inst);
}

bool TruncationOracle::query(const PartialInjection& s, const PartialInjection& t, std::size_t alpha) {
  if (s.max_point() >= static_cast<Nat>(trunc_.m()) || t.max_point() >= static_cast<Nat>(trunc_.m()))
    throw InputError("truncation size smaller than a point named by the anchors");
  return rel_->leq(y_, trunc_.sym->gbasis_index(s), x_, trunc_.sym->gbasis_index(t), alpha);
}

bool truncation_oracle(const CoreStructure& y, const PartialInjection& s, const CoreStructure& x,
                       const PartialInjection& t, std::size_t alpha, std::size_t m) {
  if (alpha == 0) throw InputError("levels start at 1");
  TruncationOracle oracle(make_symmetric_group(m), y, x);
  return oracle.query(s, t, alpha);
}

PointSet b_sigma(const Truncation& trunc, const Formula& sigma) {
  if (!sigma.is_sentence()) throw InputError("B_sigma needs a sentence");
  const CompiledFormula f(sigma, trunc.lang);
  PointSet out(trunc.structures.size());
  for (std::size_t p = 0; p < trunc.structures.size(); ++p)
    if (f.eval_finite(trunc.structures[p], trunc.m(), {})) out.set(p);
  return out;
}

namespace {

Formula require_sentence(Formula f) {
  if (!f.is_sentence()) throw InputError("B_sigma needs a sentence");
  return f;
}

} // namespace

BSigma::BSigma(Formula sigma, const Language& lang) : compiled_(require_sentence(std::move(sigma)), lang) {}

bool BSigma::contains(const CoreStructure& st) const { return compiled_.eval_padded(st, {}); }

} // namespace bfh::logic
