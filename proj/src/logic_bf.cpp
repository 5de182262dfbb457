#include "bfh/logic/logic_bf.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace bfh::logic {

namespace {

Nat next_free_position(const PartialInjection& a, const PartialInjection& b) {
  Nat m = -1;
  for (auto& [i, j] : a.pairs()) m = std::max(m, j);
  for (auto& [i, j] : b.pairs()) m = std::max(m, j);
  return m + 1;
}

std::vector<Nat> range_minus(const PartialInjection& a, const PartialInjection& b) {
  std::vector<Nat> out;
  for (auto& [i, j] : a.pairs())
    if (!b.in_range(j)) out.push_back(j);
  return out;
}

std::uint64_t fact_key(std::size_t symbol, const std::vector<Nat>& tuple) {
  std::uint64_t key = symbol;
  for (auto a : tuple) key = key * 1024 + static_cast<std::uint64_t>(a);
  return key;
}

// Is there a placement of x's core points outside dom(t) onto `slots`
// (injectively) or off the window, whose visible facts are exactly `target`?
// A fact is checked as soon as its last free point is decided; since the
// placement is injective, distinct visible facts land on distinct tuples, so
// at the end it only remains to compare counts.
class PlacementSearch {
public:
  PlacementSearch(const CoreStructure& x, const PartialInjection& t, std::vector<Nat> slots,
                  std::vector<std::uint64_t> target)
      : slots_(std::move(slots)), target_(std::move(target)), used_(slots_.size(), 0) {
    std::sort(target_.begin(), target_.end());
    place_.assign(x.core(), kUnplaced);
    std::vector<int> order(x.core(), -1);
    for (Nat p = 0; p < static_cast<Nat>(x.core()); ++p) {
      if (t.in_domain(p)) {
        place_[static_cast<std::size_t>(p)] = t(p);
      } else {
        order[static_cast<std::size_t>(p)] = static_cast<int>(free_.size());
        free_.push_back(p);
      }
    }
    decided_.resize(free_.size() + 1);
    for (auto& f : x.facts()) {
      int last = -1;
      for (auto a : f.second) last = std::max(last, order[static_cast<std::size_t>(a)]);
      decided_[static_cast<std::size_t>(last + 1)].push_back(f);
    }
  }

  bool run() {
    std::size_t visible = 0;
    if (!check(0, visible)) return false;
    return go(0, visible);
  }

private:
  static constexpr Nat kUnplaced = -1;
  static constexpr Nat kEscaped = -2;

  // Facts decided at `level`: all placed must be in the target.
  bool check(std::size_t level, std::size_t& visible) {
    for (auto& [sym, tuple] : decided_[level]) {
      image_.clear();
      bool seen = true;
      for (auto a : tuple) {
        const Nat q = place_[static_cast<std::size_t>(a)];
        if (q < 0) {
          seen = false;
          break;
        }
        image_.push_back(q);
      }
      if (!seen) continue;
      if (!std::binary_search(target_.begin(), target_.end(), fact_key(sym, image_))) return false;
      ++visible;
    }
    return true;
  }

  bool go(std::size_t k, std::size_t visible) {
    if (k == free_.size()) return visible == target_.size();
    const auto p = static_cast<std::size_t>(free_[k]);
    auto attempt = [&](Nat where) {
      place_[p] = where;
      std::size_t v = visible;
      const bool ok = check(k + 1, v) && go(k + 1, v);
      place_[p] = kUnplaced;
      return ok;
    };
    if (attempt(kEscaped)) return true;
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      if (used_[i]) continue;
      used_[i] = 1;
      const bool ok = attempt(slots_[i]);
      used_[i] = 0;
      if (ok) return true;
    }
    return false;
  }

  std::vector<Nat> slots_;
  std::vector<std::uint64_t> target_;
  std::vector<char> used_;
  std::vector<Nat> place_;
  std::vector<Nat> free_;
  std::vector<std::vector<std::pair<std::size_t, std::vector<Nat>>>> decided_;
  std::vector<Nat> image_;
};

bool level_one(const CoreStructure& y, const PartialInjection& s, const CoreStructure& x, const PartialInjection& t) {
  const Nat base = next_free_position(s, t);
  const auto y_facts = y.facts();
  for (auto& s2 : full_pins(y, s, range_minus(t, s), base)) {
    std::vector<std::uint64_t> target;
    std::vector<Nat> image;
    for (auto& [sym, tuple] : y_facts) {
      image.clear();
      for (auto a : tuple) image.push_back(s2(a));
      target.push_back(fact_key(sym, image));
    }
    // Window positions not already occupied by t.
    PlacementSearch search(x, t, range_minus(s2, t), std::move(target));
    if (!search.run()) return false;
  }
  return true;
}

} // namespace

std::vector<PartialInjection> full_pins(const CoreStructure& st, const PartialInjection& s,
                                        const std::vector<Nat>& targets, Nat fresh_base) {
  for (auto tg : targets)
    if (s.in_range(tg)) throw InputError("full_pins: target already in the range of the injection");
  std::vector<Nat> free_points;
  for (Nat p = 0; p < static_cast<Nat>(st.core()); ++p)
    if (!s.in_domain(p)) free_points.push_back(p);

  std::vector<PartialInjection> out;
  PartialInjection cur = s;
  std::vector<char> used(targets.size(), 0);
  std::function<void(std::size_t, Nat)> go = [&](std::size_t k, Nat fresh) {
    if (k == free_points.size()) {
      out.push_back(cur);
      return;
    }
    const Nat p = free_points[k];
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (used[i]) continue;
      used[i] = 1;
      PartialInjection saved = cur;
      cur.extend(p, targets[i]);
      go(k + 1, fresh);
      cur = std::move(saved);
      used[i] = 0;
    }
    PartialInjection saved = cur;
    cur.extend(p, fresh);
    go(k + 1, fresh + 1);
    cur = std::move(saved);
  };
  go(0, fresh_base);
  return out;
}

namespace {

// Renames the positions in play to 0, 1, ... in order of appearance (s by
// domain, then t). Applying one permutation of ω to both anchors conjugates
// the basic opens and moves both translate sets by the same homeomorphism,
// so the relation does not change.
std::pair<PartialInjection, PartialInjection> canonical(const PartialInjection& s, const PartialInjection& t) {
  std::map<Nat, Nat> label;
  auto rename = [&](const PartialInjection& u) {
    PartialInjection out;
    for (auto& [i, j] : u.pairs()) {
      auto it = label.try_emplace(j, static_cast<Nat>(label.size())).first;
      out.extend(i, it->second);
    }
    return out;
  };
  auto cs = rename(s);
  auto ct = rename(t);
  return {std::move(cs), std::move(ct)};
}

} // namespace

LogicRelation::LogicRelation(CoreStructure y, CoreStructure x) : st_{std::move(y), std::move(x)} {
  if (!(st_[0].language() == st_[1].language())) throw InputError("bf_logic: structures use different languages");
}

bool LogicRelation::leq(const PartialInjection& s, const PartialInjection& t, std::size_t alpha) {
  if (alpha == 0) throw InputError("bf_logic: alpha must be at least 1");
  return rec(0, s, t, alpha);
}

bool LogicRelation::rec(int left, const PartialInjection& s0, const PartialInjection& t0, std::size_t alpha) {
  auto [s, t] = canonical(s0, t0);
  std::vector<Nat> key{left, static_cast<Nat>(alpha), static_cast<Nat>(s.size())};
  for (auto& [i, j] : s.pairs()) key.insert(key.end(), {i, j});
  for (auto& [i, j] : t.pairs()) key.insert(key.end(), {i, j});
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const CoreStructure& a = st_[left];
  const CoreStructure& b = st_[1 - left];
  bool result = true;
  if (alpha == 1) {
    result = level_one(a, s, b, t);
  } else {
    const Nat base = next_free_position(s, t);
    for (auto& s2 : full_pins(a, s, range_minus(t, s), base)) {
      const Nat base2 = next_free_position(s2, t);
      bool some = false;
      for (auto& t2 : full_pins(b, t, range_minus(s2, t), base2))
        if (rec(1 - left, t2, s2, alpha - 1)) {
          some = true;
          break;
        }
      if (!some) {
        result = false;
        break;
      }
    }
  }
  memo_.emplace(std::move(key), result);
  return result;
}

bool bf_logic(const CoreStructure& y, const PartialInjection& s, const CoreStructure& x, const PartialInjection& t,
              std::size_t alpha) {
  return LogicRelation(y, x).leq(s, t, alpha);
}

bool realizable(const AnchoredPattern& pattern, const CoreStructure& st, const PartialInjection& s) {
  std::set<Nat> pos(pattern.positions.begin(), pattern.positions.end());
  if (pos.size() != pattern.positions.size()) throw InputError("pattern lists a position twice");
  for (auto& [sym, tuple] : pattern.facts)
    for (auto a : tuple)
      if (!pos.count(a)) throw InputError("pattern fact mentions a position outside the pattern");

  // Preimage of each position; anchored positions are forced by s.
  std::map<Nat, Nat> preimage;
  std::vector<Nat> open;
  for (auto p : pattern.positions) {
    bool anchored = false;
    for (auto& [i, j] : s.pairs())
      if (j == p) {
        preimage[p] = i;
        anchored = true;
      }
    if (!anchored) open.push_back(p);
  }
  Nat pad = std::max<Nat>(static_cast<Nat>(st.core()), s.max_point() + 1);
  std::set<Nat> taken;
  for (auto& [i, j] : s.pairs()) taken.insert(i);

  std::function<bool(std::size_t)> go = [&](std::size_t k) -> bool {
    if (k == open.size()) {
      std::map<Nat, Nat> placement;
      for (auto& [p, i] : preimage) placement[i] = p;
      return push_facts(st, placement) == pattern.facts;
    }
    const Nat p = open[k];
    for (Nat c = 0; c < static_cast<Nat>(st.core()); ++c) {
      if (taken.count(c)) continue;
      taken.insert(c);
      preimage[p] = c;
      const bool ok = go(k + 1);
      taken.erase(c);
      if (ok) return true;
    }
    // A padding point outside dom(s); distinct per position.
    const Nat fresh = pad + static_cast<Nat>(k);
    preimage[p] = fresh;
    const bool ok = go(k + 1);
    preimage.erase(p);
    return ok;
  };
  return go(0);
}

} // namespace bfh::logic
