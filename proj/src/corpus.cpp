#include "bfh/corpus.hpp"

#include "bfh/logic/truncation.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <random>
#include <set>

namespace bfh {

namespace {

struct GroupData {
  std::string label;
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> mult;
};

GroupData cyclic(std::size_t n) {
  GroupData d{"Z" + std::to_string(n), {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    d.names.push_back(i == 0 ? "e" : "a" + std::to_string(i));
    std::vector<std::size_t> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = (i + j) % n;
    d.mult.push_back(std::move(row));
  }
  return d;
}

GroupData klein() {
  GroupData d{"Z2xZ2", {"e", "a", "b", "ab"}, {}};
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<std::size_t> row(4);
    for (std::size_t j = 0; j < 4; ++j) row[j] = i ^ j;
    d.mult.push_back(std::move(row));
  }
  return d;
}

GroupData s3() {
  std::vector<std::array<std::size_t, 3>> perms;
  std::array<std::size_t, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  GroupData d{"S3", {}, {}};
  for (auto& q : perms) d.names.push_back("p" + std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
  for (auto& g : perms) {
    std::vector<std::size_t> row;
    for (auto& h : perms) {
      std::array<std::size_t, 3> c{g[h[0]], g[h[1]], g[h[2]]};
      row.push_back(static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin()));
    }
    d.mult.push_back(std::move(row));
  }
  return d;
}

std::vector<PointSet> subgroups(const GroupData& g) {
  const auto n = g.names.size();
  std::vector<PointSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {  // identity included
    PointSet s(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) s.set(i);
    bool closed = true;
    for (auto a = s.find_first(); a != PointSet::npos && closed; a = s.find_next(a))
      for (auto b = s.find_first(); b != PointSet::npos; b = s.find_next(b))
        if (!s.test(g.mult[a][b])) {
          closed = false;
          break;
        }
    if (closed) out.push_back(std::move(s));
  }
  return out;
}

std::size_t inverse_of(const GroupData& g, std::size_t a) {
  for (std::size_t b = 0; b < g.names.size(); ++b)
    if (g.mult[a][b] == 0) return b;
  throw InputError("element without inverse");
}

bool is_normal(const GroupData& g, const PointSet& n) {
  for (std::size_t a = 0; a < g.names.size(); ++a)
    for (auto x = n.find_first(); x != PointSet::npos; x = n.find_next(x))
      if (!n.test(g.mult[g.mult[a][x]][inverse_of(g, a)])) return false;
  return true;
}

// Left cosets aS, in order of first element.
std::vector<PointSet> left_cosets(const GroupData& g, const PointSet& s) {
  std::vector<PointSet> out;
  const auto n = g.names.size();
  PointSet covered(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (covered.test(a)) continue;
    PointSet c(n);
    for (auto k = s.find_first(); k != PointSet::npos; k = s.find_next(k)) c.set(g.mult[a][k]);
    covered |= c;
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<GSpaceInstance> try_random(std::mt19937_64& rng, CorpusTopology topology, std::string& label) {
  static const std::vector<GroupData> groups = {cyclic(1), cyclic(2), cyclic(3), cyclic(4), cyclic(5),
                                                cyclic(6), klein(),   s3()};
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  const GroupData& g = groups[pick(groups.size())];
  const auto ng = g.names.size();
  const auto subs = subgroups(g);
  std::vector<PointSet> normals;
  for (auto& s : subs)
    if (is_normal(g, s)) normals.push_back(s);
  const PointSet nsub = normals[pick(normals.size())];

  // Group basis: G, the cosets of N, and up to two unions of cosets.
  const auto cosets = left_cosets(g, nsub);
  std::vector<PointSet> gbasis{full_set(ng)};
  auto add_unique = [](std::vector<PointSet>& v, PointSet s) {
    if (s.any() && std::find(v.begin(), v.end(), s) == v.end()) v.push_back(std::move(s));
  };
  for (auto& c : cosets) add_unique(gbasis, c);
  if (cosets.size() > 2)
    for (std::size_t extra = pick(3); extra-- > 0;) {
      PointSet u(ng);
      for (auto& c : cosets)
        if (pick(2)) u |= c;
      if (u.count() > nsub.count() && u.count() < ng) add_unique(gbasis, u);
    }

  // Space: disjoint union of coset spaces G/K, at most 8 points.
  struct Point {
    std::size_t component;
    PointSet coset;
  };
  std::vector<Point> pts;
  std::vector<PointSet> ks;
  const std::size_t comps = 1 + pick(3);
  for (std::size_t c = 0; c < comps; ++c) {
    const PointSet& k = subs[pick(subs.size())];
    auto cs = left_cosets(g, k);
    if (pts.size() + cs.size() > 8) continue;
    for (auto& co : cs) pts.push_back({ks.size(), co});
    ks.push_back(k);
  }
  if (pts.empty()) return std::nullopt;
  const auto np = pts.size();
  std::vector<std::vector<std::size_t>> action(ng, std::vector<std::size_t>(np));
  for (std::size_t a = 0; a < ng; ++a)
    for (std::size_t p = 0; p < np; ++p) {
      PointSet img(ng);
      for (auto x = pts[p].coset.find_first(); x != PointSet::npos; x = pts[p].coset.find_next(x)) img.set(g.mult[a][x]);
      for (std::size_t q = 0; q < np; ++q)
        if (pts[q].component == pts[p].component && pts[q].coset == img) action[a][p] = q;
    }

  // N-orbits of points; generators are unions of them and their translates.
  std::vector<PointSet> norbits;
  {
    PointSet covered(np);
    for (std::size_t p = 0; p < np; ++p) {
      if (covered.test(p)) continue;
      PointSet o(np);
      for (auto x = nsub.find_first(); x != PointSet::npos; x = nsub.find_next(x)) o.set(action[x][p]);
      covered |= o;
      norbits.push_back(std::move(o));
    }
  }
  std::vector<PointSet> subbasis;
  for (std::size_t gen = 1 + pick(2); gen-- > 0;) {
    PointSet s(np);
    for (auto& o : norbits)
      if (pick(2)) s |= o;
    for (std::size_t a = 0; a < ng; ++a) {
      PointSet t(np);
      for (auto p = s.find_first(); p != PointSet::npos; p = s.find_next(p)) t.set(action[a][p]);
      subbasis.push_back(std::move(t));
    }
  }
  // Regular: blocks are the atoms of the Boolean algebra generated by the
  // translates. General: minimal open sets of the topology they generate.
  std::vector<PointSet> basis{full_set(np)};
  for (std::size_t p = 0; p < np; ++p) {
    PointSet m = full_set(np);
    for (auto& s : subbasis) {
      if (s.test(p))
        m &= s;
      else if (topology == CorpusTopology::Regular)
        m &= ~s;
    }
    add_unique(basis, m);
  }
  const std::size_t minimal = basis.size();
  for (std::size_t extra = pick(3); extra-- > 0 && minimal > 2;) {
    PointSet u = basis[1 + pick(minimal - 1)] | basis[1 + pick(minimal - 1)];
    add_unique(basis, u);
  }
  if (basis.size() > 10) return std::nullopt;

  std::vector<std::string> pnames;
  for (std::size_t p = 0; p < np; ++p) pnames.push_back("p" + std::to_string(p));
  label = std::string(topology == CorpusTopology::Regular ? "reg:" : "gen:") + g.label + "/N" + std::to_string(nsub.count()) + "/X" + std::to_string(np);
  return GSpaceInstance(FinGroup(g.names, g.mult, gbasis), FinTopSpace(pnames, basis), action);
}

GSpaceInstance z2_sierpinski() {
  FinGroup grp({"e", "r"}, {{0, 1}, {1, 0}}, {make_set(2, {0, 1}), make_set(2, {0}), make_set(2, {1})});
  FinTopSpace sp({"a", "b", "c", "d"}, {make_set(4, {0, 1, 2, 3}), make_set(4, {0}), make_set(4, {1}),
                                        make_set(4, {0, 2}), make_set(4, {1, 3})});
  return GSpaceInstance(grp, sp, {{0, 1, 2, 3}, {1, 0, 3, 2}});
}

GSpaceInstance trivial_discrete() {
  FinGroup grp({"e"}, {{0}}, {make_set(1, {0})});
  FinTopSpace sp({"a", "b", "c"}, {make_set(3, {0, 1, 2}), make_set(3, {0}), make_set(3, {1}), make_set(3, {2})});
  return GSpaceInstance(grp, sp, {{0, 1, 2}});
}

} // namespace

std::vector<CorpusEntry> random_corpus(std::size_t count, std::uint64_t seed, CorpusTopology topology) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusEntry> out;
  while (out.size() < count) {
    std::string label;
    if (auto inst = try_random(rng, topology, label)) out.push_back({"rand" + std::to_string(out.size()) + ":" + label, std::move(*inst)});
  }
  return out;
}

std::vector<std::string> named_instances() { return {"s2digraph", "z2sierpinski", "trivial-discrete"}; }

GSpaceInstance named_instance(std::string_view name) {
  if (name == "s2digraph")
    return logic::full_truncation(logic::Language::digraph(), logic::make_symmetric_group(2), logic::TruncationBasis::Cylinders).inst;
  if (name == "z2sierpinski") return z2_sierpinski();
  if (name == "trivial-discrete") return trivial_discrete();
  throw InputError("unknown built-in instance '" + std::string(name) + "'");
}

} // namespace bfh
