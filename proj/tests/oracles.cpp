#include "oracles.hpp"

#include <functional>
#include <map>
#include <set>

namespace oracle {

using namespace bfh;
using namespace bfh::logic;

PointSet closure(const FinTopSpace& space, const PointSet& a) {
  PointSet missed(space.size());
  for (auto& u : space.bases())
    if (!u.intersects(a)) missed |= u;
  return ~missed;
}

bool comeagre_in(const FinTopSpace& space, const PointSet& s, const PointSet& h) {
  const PointSet d = h - oracle::closure(space, h - s);
  return h.is_subset_of(oracle::closure(space, d));
}

PointSet vaught_star(const GSpaceInstance& inst, const PointSet& b, const PointSet& h) {
  const auto& grp = inst.group();
  PointSet out(inst.space().size());
  for (std::size_t x = 0; x < inst.space().size(); ++x) {
    PointSet a(grp.order());
    for (std::size_t g = 0; g < grp.order(); ++g)
      if (h.test(g) && b.test(inst.act(g, x))) a.set(g);
    if (oracle::comeagre_in(grp.topology(), a, h)) out.set(x);
  }
  return out;
}

std::vector<Table> hierarchy(const GSpaceInstance& inst, std::size_t levels) {
  const auto& grp = inst.group();
  const auto& sp = inst.space();
  const std::size_t np = sp.size(), nb = grp.basis_size();
  auto blank = [&] {
    return Table(np, std::vector<std::vector<std::vector<char>>>(nb, std::vector<std::vector<char>>(np, std::vector<char>(nb, 0))));
  };
  auto translate_point = [&](std::size_t v, std::size_t y) {
    PointSet s(np);
    for (std::size_t g = 0; g < grp.order(); ++g)
      if (grp.basis(v).test(g)) s.set(inst.act(g, y));
    return s;
  };
  std::vector<Table> out;
  Table first = blank();
  for (std::size_t y = 0; y < np; ++y)
    for (std::size_t v = 0; v < nb; ++v)
      for (std::size_t x = 0; x < np; ++x)
        for (std::size_t w = 0; w < nb; ++w)
          first[y][v][x][w] = oracle::closure(sp, translate_point(v, y)).is_subset_of(oracle::closure(sp, translate_point(w, x)));
  out.push_back(std::move(first));
  while (out.size() < levels) {
    const Table& prev = out.back();
    Table next = blank();
    for (std::size_t y = 0; y < np; ++y)
      for (std::size_t v = 0; v < nb; ++v)
        for (std::size_t x = 0; x < np; ++x)
          for (std::size_t w = 0; w < nb; ++w) {
            bool all = true;
            for (std::size_t v2 = 0; v2 < nb && all; ++v2) {
              if (!grp.basis(v2).is_subset_of(grp.basis(v))) continue;
              bool some = false;
              for (std::size_t w2 = 0; w2 < nb && !some; ++w2)
                some = grp.basis(w2).is_subset_of(grp.basis(w)) && prev[x][w2][y][v2];
              all = some;
            }
            next[y][v][x][w] = all;
          }
    out.push_back(std::move(next));
  }
  return out;
}

namespace {

bool holds_finite(const CoreStructure& st, std::size_t symbol, const std::vector<Nat>& tuple) {
  for (auto& [sym, t] : st.facts())
    if (sym == symbol && t == tuple) return true;
  return false;
}

} // namespace

bool eval_finite(const CoreStructure& st, std::size_t m, const Formula& f, std::vector<Nat> asg) {
  auto value = [&](std::size_t v) {
    if (v >= asg.size() || asg[v] < 0) throw InputError("unbound variable");
    return asg[v];
  };
  switch (f.kind()) {
  case Formula::Kind::Atom: {
    std::vector<Nat> tuple;
    for (auto v : f.vars()) tuple.push_back(value(v));
    return holds_finite(st, st.language().find(f.symbol()), tuple);
  }
  case Formula::Kind::Eq:
    return value(f.vars()[0]) == value(f.vars()[1]);
  case Formula::Kind::Not:
    return !eval_finite(st, m, f.children()[0], asg);
  case Formula::Kind::And:
    for (auto& c : f.children())
      if (!eval_finite(st, m, c, asg)) return false;
    return true;
  case Formula::Kind::Or:
    for (auto& c : f.children())
      if (eval_finite(st, m, c, asg)) return true;
    return false;
  case Formula::Kind::Exists:
  case Formula::Kind::Forall: {
    const bool want = f.kind() == Formula::Kind::Exists;
    const auto var = f.vars()[0];
    if (asg.size() <= var) asg.resize(var + 1, -1);
    for (std::size_t a = 0; a < m; ++a) {
      asg[var] = static_cast<Nat>(a);
      if (eval_finite(st, m, f.children()[0], asg) == want) return want;
    }
    return !want;
  }
  }
  return false;
}

namespace {

bool partial_iso(const CoreStructure& x, const CoreStructure& y, const std::vector<Nat>& a, const std::vector<Nat>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if ((a[i] == a[j]) != (b[i] == b[j])) return false;
  const auto& lang = x.language();
  for (std::size_t sym = 0; sym < lang.size(); ++sym) {
    const auto arity = lang.symbol(sym).arity;
    if (a.empty()) break;
    std::vector<std::size_t> idx(arity, 0);
    while (true) {
      std::vector<Nat> ta, tb;
      for (auto i : idx) {
        ta.push_back(a[i]);
        tb.push_back(b[i]);
      }
      if (x.holds(sym, ta) != y.holds(sym, tb)) return false;
      std::size_t p = 0;
      while (p < arity && ++idx[p] == a.size()) idx[p++] = 0;
      if (p == arity) break;
    }
  }
  return true;
}

bool duplicator(const CoreStructure& x, const CoreStructure& y, std::size_t m, std::size_t k, std::vector<Nat>& a,
                std::vector<Nat>& b) {
  if (!partial_iso(x, y, a, b)) return false;
  if (k == 0) return true;
  for (int side = 0; side < 2; ++side)
    for (std::size_t p = 0; p < m; ++p) {
      bool answered = false;
      for (std::size_t q = 0; q < m && !answered; ++q) {
        a.push_back(static_cast<Nat>(side == 0 ? p : q));
        b.push_back(static_cast<Nat>(side == 0 ? q : p));
        answered = duplicator(x, y, m, k - 1, a, b);
        a.pop_back();
        b.pop_back();
      }
      if (!answered) return false;
    }
  return true;
}

} // namespace

bool ef_duplicator_wins(const CoreStructure& x, const CoreStructure& y, std::size_t m, std::size_t k) {
  std::vector<Nat> a, b;
  return duplicator(x, y, m, k, a, b);
}

bool logic_level_one(const CoreStructure& y, const PartialInjection& s, const CoreStructure& x,
                     const PartialInjection& t) {
  Nat top = std::max(s.max_point(), t.max_point());
  for (auto& [i, j] : s.pairs()) top = std::max(top, i);
  for (auto& [i, j] : t.pairs()) top = std::max(top, i);
  std::vector<Nat> pool;  // candidate images for free core points of y
  for (auto j : t.range())
    if (!s.in_range(j)) pool.push_back(j);
  for (std::size_t f = 1; f <= y.core(); ++f) pool.push_back(top + static_cast<Nat>(f));

  // Every placement of y's free core points, injective and avoiding ran(s).
  std::vector<std::map<Nat, Nat>> ys;
  std::function<void(std::size_t, std::map<Nat, Nat>&)> place_y = [&](std::size_t p, std::map<Nat, Nat>& pl) {
    if (p == y.core()) {
      ys.push_back(pl);
      return;
    }
    const Nat pt = static_cast<Nat>(p);
    if (s.in_domain(pt)) {
      pl[pt] = s(pt);
      place_y(p + 1, pl);
      pl.erase(pt);
      return;
    }
    for (auto c : pool) {
      bool used = false;
      for (auto& [k, v] : pl) used |= v == c;
      if (used) continue;
      pl[pt] = c;
      place_y(p + 1, pl);
      pl.erase(pt);
    }
  };
  std::map<Nat, Nat> start;
  place_y(0, start);

  for (auto& gy : ys) {
    std::set<Nat> window = t.range();
    for (auto j : s.range()) window.insert(j);
    for (auto& [k, v] : gy) window.insert(v);
    const PlacedFacts target = push_facts(y, gy);
    // x's free core points go to window positions outside ran(t), or away.
    std::vector<Nat> slots;
    for (auto w : window)
      if (!t.in_range(w)) slots.push_back(w);
    bool found = false;
    std::function<void(std::size_t, std::map<Nat, Nat>&, Nat)> place_x = [&](std::size_t p, std::map<Nat, Nat>& pl,
                                                                            Nat away) {
      if (found) return;
      if (p == x.core()) {
        PlacedFacts seen;
        for (auto& fact : push_facts(x, pl)) {
          bool inside = true;
          for (auto v : fact.second) inside &= window.count(v) != 0;
          if (inside) seen.insert(fact);
        }
        found = seen == target;
        return;
      }
      const Nat pt = static_cast<Nat>(p);
      if (t.in_domain(pt)) {
        pl[pt] = t(pt);
        place_x(p + 1, pl, away);
        pl.erase(pt);
        return;
      }
      for (auto c : slots) {
        bool used = false;
        for (auto& [k, v] : pl) used |= v == c;
        if (used) continue;
        pl[pt] = c;
        place_x(p + 1, pl, away);
        pl.erase(pt);
      }
      pl[pt] = away;
      place_x(p + 1, pl, away + 1);
      pl.erase(pt);
    };
    std::map<Nat, Nat> px;
    const Nat away = window.empty() ? 1000 : *window.rbegin() + 1000;
    place_x(0, px, away);
    if (!found) return false;
  }
  return true;
}

} // namespace oracle
