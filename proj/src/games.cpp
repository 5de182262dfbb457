#include "bfh/logic/games.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace bfh::logic {

namespace {

bool same_facts_under(const CoreStructure& x, const CoreStructure& y, const std::vector<Nat>& perm) {
  if (x.fact_count() != y.fact_count()) return false;
  std::vector<Nat> image;
  for (auto& [s, t] : x.facts()) {
    image.clear();
    for (auto a : t) image.push_back(perm[static_cast<std::size_t>(a)]);
    if (!y.holds(s, image)) return false;
  }
  return true;
}

// Padding a core with relation-free points does not change the point of X_L.
CoreStructure widen(const CoreStructure& st, std::size_t n) {
  if (st.core() >= n) return st;
  CoreStructure out(st.language(), n);
  for (auto& [s, t] : st.facts()) out.add(s, t);
  return out;
}

} // namespace

bool iso(const CoreStructure& x, const CoreStructure& y) {
  if (!(x.language() == y.language())) return false;
  if (x.fact_count() != y.fact_count()) return false;
  const auto n = std::max(x.core(), y.core());
  const auto a = widen(x, n);
  const auto b = widen(y, n);
  std::vector<Nat> perm(n);
  std::iota(perm.begin(), perm.end(), Nat{0});
  do
    if (same_facts_under(a, b, perm)) return true;
  while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace {

class EfGame {
public:
  EfGame(const CoreStructure& x, const CoreStructure& y) : x_(x), y_(y) {}

  bool duplicator_wins(std::size_t rounds) {
    a_.clear();
    b_.clear();
    return wins(rounds);
  }

private:
  bool partial_iso() const {
    const auto k = a_.size();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if ((a_[i] == a_[j]) != (b_[i] == b_[j])) return false;
    const auto& lang = x_.language();
    std::vector<std::size_t> idx;
    std::vector<Nat> ta, tb;
    for (std::size_t s = 0; s < lang.size(); ++s) {
      const auto r = lang.symbol(s).arity;
      if (k == 0) continue;
      idx.assign(r, 0);
      for (;;) {
        ta.clear();
        tb.clear();
        for (auto i : idx) {
          ta.push_back(a_[i]);
          tb.push_back(b_[i]);
        }
        if (x_.holds(s, ta) != y_.holds(s, tb)) return false;
        std::size_t pos = 0;
        while (pos < r && ++idx[pos] == k) idx[pos++] = 0;
        if (pos == r) break;
      }
    }
    return true;
  }

  static std::vector<Nat> candidates(const CoreStructure& st, const std::vector<Nat>& played) {
    std::vector<Nat> out;
    Nat fresh = static_cast<Nat>(st.core());
    for (Nat p = 0; p < static_cast<Nat>(st.core()); ++p) out.push_back(p);
    for (auto p : played)
      if (p >= static_cast<Nat>(st.core())) {
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
        fresh = std::max(fresh, p + 1);
      }
    out.push_back(fresh);
    return out;
  }

  bool wins(std::size_t k) {
    if (!partial_iso()) return false;
    if (k == 0) return true;
    for (int side = 0; side < 2; ++side) {
      auto& mine = side == 0 ? a_ : b_;
      auto& theirs = side == 0 ? b_ : a_;
      const auto& my_st = side == 0 ? x_ : y_;
      const auto& their_st = side == 0 ? y_ : x_;
      for (auto c : candidates(my_st, mine)) {
        bool answered = false;
        const auto replies = candidates(their_st, theirs);
        mine.push_back(c);
        for (auto d : replies) {
          theirs.push_back(d);
          const bool ok = wins(k - 1);
          theirs.pop_back();
          if (ok) {
            answered = true;
            break;
          }
        }
        mine.pop_back();
        if (!answered) return false;
      }
    }
    return true;
  }

  const CoreStructure& x_;
  const CoreStructure& y_;
  std::vector<Nat> a_, b_;
};

} // namespace

std::size_t ef_rounds(const CoreStructure& x, const CoreStructure& y, std::size_t cap) {
  if (!(x.language() == y.language())) return 0;
  EfGame game(x, y);
  std::size_t k = 0;
  while (k < cap && game.duplicator_wins(k + 1)) ++k;
  return k;
}

Formula scott_sentence(const CoreStructure& x) {
  const auto n = x.core();
  const auto& lang = x.language();
  std::vector<Formula> body;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) body.push_back(Formula::negate(Formula::eq(i, j)));
  // Full atomic diagram on v0..v(n-1).
  for (std::size_t s = 0; s < lang.size(); ++s) {
    const auto r = lang.symbol(s).arity;
    if (n == 0) continue;
    std::vector<std::size_t> idx(r, 0);
    std::vector<Nat> tuple(r);
    for (;;) {
      for (std::size_t q = 0; q < r; ++q) tuple[q] = static_cast<Nat>(idx[q]);
      auto atom = Formula::atom(lang.symbol(s).name, idx);
      body.push_back(x.holds(s, tuple) ? atom : Formula::negate(atom));
      std::size_t pos = r;
      while (pos > 0 && ++idx[pos - 1] == n) idx[--pos] = 0;
      if (pos == 0) break;
    }
  }
  // Nothing outside v0..v(n-1) takes part in a fact.
  for (std::size_t s = 0; s < lang.size(); ++s) {
    const auto r = lang.symbol(s).arity;
    std::vector<std::size_t> u(r);
    std::iota(u.begin(), u.end(), n);
    std::vector<Formula> inside;
    for (auto uj : u) {
      std::vector<Formula> named;
      for (std::size_t i = 0; i < n; ++i) named.push_back(Formula::eq(uj, i));
      inside.push_back(Formula::any_of(std::move(named)));
    }
    Formula f = Formula::any_of({Formula::negate(Formula::atom(lang.symbol(s).name, u)), Formula::all_of(std::move(inside))});
    for (std::size_t q = r; q-- > 0;) f = Formula::forall(u[q], f);
    body.push_back(f);
  }
  Formula out = Formula::all_of(std::move(body));
  for (std::size_t i = n; i-- > 0;) out = Formula::exists(i, out);
  return out;
}

namespace {

std::vector<Formula> literals(const Language& lang, std::size_t nvars) {
  std::vector<Formula> atoms;
  for (auto& sym : lang.symbols()) {
    if (nvars == 0) break;
    std::vector<std::size_t> idx(sym.arity, 0);
    for (;;) {
      atoms.push_back(Formula::atom(sym.name, idx));
      std::size_t pos = sym.arity;
      while (pos > 0 && ++idx[pos - 1] == nvars) idx[--pos] = 0;
      if (pos == 0) break;
    }
  }
  for (std::size_t i = 0; i < nvars; ++i)
    for (std::size_t j = i + 1; j < nvars; ++j) atoms.push_back(Formula::eq(i, j));
  std::vector<Formula> out;
  for (auto& a : atoms) {
    out.push_back(a);
    out.push_back(Formula::negate(a));
  }
  return out;
}

} // namespace

std::vector<Formula> formula_pool(const Language& lang, std::size_t width) {
  std::vector<Formula> out{Formula::truth(), Formula::falsity()};
  std::set<std::string> seen{to_string(out[0]), to_string(out[1])};
  auto add = [&](Formula f) {
    if (seen.insert(to_string(f)).second) out.push_back(std::move(f));
  };
  for (std::size_t q = 1; q <= 2; ++q) {
    const auto lits = literals(lang, q);
    // Matrices: conjunctions and disjunctions of 1..width distinct literals.
    std::vector<Formula> matrices;
    std::vector<std::size_t> pick;
    auto choose = [&](auto& self, std::size_t from) -> void {
      if (!pick.empty()) {
        std::vector<Formula> parts;
        for (auto i : pick) parts.push_back(lits[i]);
        if (parts.size() == 1) {
          matrices.push_back(parts[0]);
        } else {
          matrices.push_back(Formula::all_of(parts));
          matrices.push_back(Formula::any_of(parts));
        }
      }
      if (pick.size() == width) return;
      for (std::size_t i = from; i < lits.size(); ++i) {
        pick.push_back(i);
        self(self, i + 1);
        pick.pop_back();
      }
    };
    choose(choose, 0);
    for (std::size_t prefix = 0; prefix < (std::size_t{1} << q); ++prefix)
      for (auto& m : matrices) {
        Formula f = m;
        for (std::size_t v = q; v-- > 0;) f = (prefix >> v & 1U) ? Formula::forall(v, f) : Formula::exists(v, f);
        add(std::move(f));
      }
  }
  return out;
}

std::vector<CoreStructure> digraph_iso_representatives(std::size_t n) {
  std::vector<CoreStructure> out;
  std::set<std::uint64_t> seen;
  std::vector<Nat> perm(n);
  for (auto& st : all_digraphs(n)) {
    if (seen.count(st.code())) continue;
    out.push_back(st);
    std::iota(perm.begin(), perm.end(), Nat{0});
    do {
      CoreStructure img(st.language(), n);
      for (auto& [s, t] : st.facts()) img.add(s, {perm[static_cast<std::size_t>(t[0])], perm[static_cast<std::size_t>(t[1])]});
      seen.insert(img.code());
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

} // namespace bfh::logic
