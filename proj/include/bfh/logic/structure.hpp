#pragma once

#include "bfh/pointset.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bfh::logic {

/// A point of ω.
using Nat = std::int64_t;

/// Ordered list of relation symbols; the order fixes the coordinate layout of
/// structure codes.
class Language {
public:
  struct Symbol {
    std::string name;
    std::size_t arity;
    friend bool operator==(const Symbol&, const Symbol&) = default;
  };

  Language() = default;
  explicit Language(std::vector<Symbol> symbols);

  static Language digraph() { return Language({{"E", 2}}); }

  std::size_t size() const { return symbols_.size(); }
  const Symbol& symbol(std::size_t i) const { return symbols_.at(i); }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::size_t find(std::string_view name) const;  // throws InputError
  std::size_t max_arity() const;

  friend bool operator==(const Language&, const Language&) = default;

private:
  std::vector<Symbol> symbols_;
};

/// A finite L-structure on {0..core-1}, read as a structure on all of ω in
/// which every point ≥ core is relation-free.
class CoreStructure {
public:
  CoreStructure() = default;
  CoreStructure(Language lang, std::size_t core);

  const Language& language() const { return lang_; }
  std::size_t core() const { return core_; }

  /// Tuple entries must be < core.
  void add(std::size_t symbol, std::span<const Nat> tuple);
  void add(std::size_t symbol, std::initializer_list<Nat> tuple) {
    add(symbol, std::span<const Nat>(tuple.begin(), tuple.size()));
  }

  /// Truth of R_symbol(tuple) in the padded structure.
  bool holds(std::size_t symbol, std::span<const Nat> tuple) const {
    std::size_t code = 0;
    for (auto a : tuple) {
      if (a < 0 || static_cast<std::size_t>(a) >= core_) return false;
      code = code * core_ + static_cast<std::size_t>(a);
    }
    return table_[symbol].test(code);
  }

  /// All facts as (symbol, tuple), symbols in language order, tuples lexicographic.
  std::vector<std::pair<std::size_t, std::vector<Nat>>> facts() const;
  std::size_t fact_count() const;

  /// Core points that occur in some fact.
  PointSet support() const;

  /// Coordinate layout of the truncated product: symbol order, then
  /// lexicographic tuple order over {0..core-1}; bit i of the code is
  /// coordinate i. Only defined when the total coordinate count is < 64.
  std::uint64_t code() const;
  static CoreStructure from_code(const Language& lang, std::size_t core, std::uint64_t code);
  static std::size_t coordinate_count(const Language& lang, std::size_t core);

  friend bool operator==(const CoreStructure& a, const CoreStructure& b) {
    return a.lang_ == b.lang_ && a.core_ == b.core_ && a.table_ == b.table_;
  }

private:
  Language lang_;
  std::size_t core_ = 0;
  std::vector<PointSet> table_;  // per symbol, indexed by base-core tuple code
};

/// Finite partial injection i ↦ j of ω, naming the basic open
/// { g ∈ S_∞ : g(i) = j for every pair } of the logic action.
class PartialInjection {
public:
  PartialInjection() = default;
  /// Throws InputError if the pairs are not functional and injective.
  explicit PartialInjection(std::vector<std::pair<Nat, Nat>> pairs);

  const std::map<Nat, Nat>& pairs() const { return fwd_; }
  std::size_t size() const { return fwd_.size(); }
  bool empty() const { return fwd_.empty(); }
  bool in_domain(Nat i) const { return fwd_.count(i) != 0; }
  bool in_range(Nat j) const { return bwd_.count(j) != 0; }
  Nat operator()(Nat i) const { return fwd_.at(i); }
  std::set<Nat> range() const;
  Nat max_point() const;  // -1 when empty

  /// Adds i ↦ j; InputError when it breaks injectivity.
  void extend(Nat i, Nat j);
  bool extends(const PartialInjection& smaller) const;

  friend bool operator==(const PartialInjection& a, const PartialInjection& b) { return a.fwd_ == b.fwd_; }

private:
  std::map<Nat, Nat> fwd_, bwd_;
};

/// Facts placed on positions of ω, e.g. the image g·x restricted to where g
/// is known. Kept sorted so equality is set equality.
using PlacedFacts = std::set<std::pair<std::size_t, std::vector<Nat>>>;

/// The facts of `st` pushed along `placement` (a map from structure points
/// to positions). Facts mentioning an unplaced point are dropped.
PlacedFacts push_facts(const CoreStructure& st, const std::map<Nat, Nat>& placement);

/// Parse the structure text format:
///   language E/2 [R/3 ...]
///   core <n>
///   <symbol> <a1> ... <ak>     (one fact per line; '#' starts a comment)
CoreStructure parse_structure(std::string_view text);
std::string to_text(const CoreStructure& st);

/// "i:j,i:j" (empty string = empty injection).
PartialInjection parse_injection(std::string_view text);
std::string to_string(const PartialInjection& s);

/// Every digraph (one binary symbol, loops allowed) on `core` points.
std::vector<CoreStructure> all_digraphs(std::size_t core);

} // namespace bfh::logic
