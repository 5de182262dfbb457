#pragma once

#include "bfh/logic/structure.hpp"

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace bfh::logic {

/// First-order formula over a relational language with equality; finite
/// conjunctions and disjunctions of arbitrary width.
class Formula {
public:
  enum class Kind { Atom, Eq, Not, And, Or, Exists, Forall };

  static Formula atom(std::string symbol, std::vector<std::size_t> vars);
  static Formula eq(std::size_t a, std::size_t b);
  static Formula negate(Formula f);
  static Formula all_of(std::vector<Formula> fs);  // empty = true
  static Formula any_of(std::vector<Formula> fs);  // empty = false
  static Formula exists(std::size_t var, Formula body);
  static Formula forall(std::size_t var, Formula body);
  static Formula truth() { return all_of({}); }
  static Formula falsity() { return any_of({}); }

  Kind kind() const { return n_->kind; }
  const std::string& symbol() const { return n_->symbol; }
  const std::vector<std::size_t>& vars() const { return n_->vars; }  // atom / eq args, or the bound variable
  const std::vector<Formula>& children() const { return n_->children; }

  std::size_t quantifier_rank() const;
  std::set<std::size_t> free_vars() const;
  bool is_sentence() const { return free_vars().empty(); }
  std::size_t max_var() const;  // highest variable index mentioned, 0 if none

  friend bool operator==(const Formula& a, const Formula& b);

private:
  struct Node {
    Kind kind;
    std::string symbol;
    std::vector<std::size_t> vars;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

/// Variable assignment into ω; unset variables are std::nullopt.
using Assignment = std::vector<std::optional<Nat>>;

/// A formula resolved against a language, for repeated evaluation.
class CompiledFormula {
public:
  CompiledFormula(const Formula& f, const Language& lang);

  /// Satisfaction in the padded structure (universe ω). A quantifier ranges
  /// over the core, the points already named by the assignment, and one
  /// fresh padding point: padding points not named are interchangeable by
  /// an automorphism fixing everything named, so one representative decides
  /// the quantifier exactly.
  bool eval_padded(const CoreStructure& st, const Assignment& asg) const;

  /// Plain satisfaction in the finite structure with universe {0..m-1}
  /// (m ≥ core; points ≥ core are relation-free). Assigned values must be < m.
  bool eval_finite(const CoreStructure& st, std::size_t m, const Assignment& asg) const;

private:
  struct Op {
    Formula::Kind kind;
    std::size_t symbol = 0;
    std::vector<std::size_t> vars;
    std::vector<std::size_t> kids;  // indices into ops_
  };
  std::size_t build(const Formula& f, const Language& lang);
  bool padded(std::size_t op, const CoreStructure& st, std::vector<Nat>& val, std::vector<char>& bound) const;
  bool finite(std::size_t op, const CoreStructure& st, std::size_t m, std::vector<Nat>& val) const;
  bool atom_true(const Op& o, const CoreStructure& st, const std::vector<Nat>& val) const;

  std::vector<Op> ops_;
  std::size_t root_ = 0;
  std::size_t nvars_ = 0;
  std::set<std::size_t> free_;
};

/// Satisfaction over the padded structure; throws InputError when a free
/// variable is unbound.
bool eval_formula(const CoreStructure& st, const Formula& f, const Assignment& asg = {});

/// Text grammar (s-expressions):
///   true | false | (not F) | (and F...) | (or F...) | (= vI vJ)
///   | (exists vK F) | (forall vK F) | (R vI ... vJ)
Formula parse_formula(std::string_view text);
std::string to_string(const Formula& f);

} // namespace bfh::logic
