#include "bfh/logic/formula.hpp"

#include <algorithm>
#include <cctype>

namespace bfh::logic {

Formula Formula::atom(std::string symbol, std::vector<std::size_t> vars) {
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(symbol), std::move(vars), {}}));
}
Formula Formula::eq(std::size_t a, std::size_t b) {
  return Formula(std::make_shared<const Node>(Node{Kind::Eq, {}, {a, b}, {}}));
}
Formula Formula::negate(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, {}, {std::move(f)}}));
}
Formula Formula::all_of(std::vector<Formula> fs) {
  return Formula(std::make_shared<const Node>(Node{Kind::And, {}, {}, std::move(fs)}));
}
Formula Formula::any_of(std::vector<Formula> fs) {
  return Formula(std::make_shared<const Node>(Node{Kind::Or, {}, {}, std::move(fs)}));
}
Formula Formula::exists(std::size_t var, Formula body) {
  return Formula(std::make_shared<const Node>(Node{Kind::Exists, {}, {var}, {std::move(body)}}));
}
Formula Formula::forall(std::size_t var, Formula body) {
  return Formula(std::make_shared<const Node>(Node{Kind::Forall, {}, {var}, {std::move(body)}}));
}

std::size_t Formula::quantifier_rank() const {
  std::size_t r = 0;
  for (auto& c : children()) r = std::max(r, c.quantifier_rank());
  if (kind() == Kind::Exists || kind() == Kind::Forall) ++r;
  return r;
}

std::set<std::size_t> Formula::free_vars() const {
  switch (kind()) {
    case Kind::Atom:
    case Kind::Eq:
      return {vars().begin(), vars().end()};
    case Kind::Exists:
    case Kind::Forall: {
      auto s = children().front().free_vars();
      s.erase(vars().front());
      return s;
    }
    default: {
      std::set<std::size_t> s;
      for (auto& c : children()) {
        auto cs = c.free_vars();
        s.insert(cs.begin(), cs.end());
      }
      return s;
    }
  }
}

std::size_t Formula::max_var() const {
  std::size_t m = 0;
  for (auto v : vars()) m = std::max(m, v);
  for (auto& c : children()) m = std::max(m, c.max_var());
  return m;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.n_ == b.n_) return true;
  return a.kind() == b.kind() && a.symbol() == b.symbol() && a.vars() == b.vars() && a.children() == b.children();
}

CompiledFormula::CompiledFormula(const Formula& f, const Language& lang)
    : nvars_(f.max_var() + 1), free_(f.free_vars()) {
  root_ = build(f, lang);
}

std::size_t CompiledFormula::build(const Formula& f, const Language& lang) {
  Op op{f.kind(), 0, f.vars(), {}};
  if (f.kind() == Formula::Kind::Atom) {
    op.symbol = lang.find(f.symbol());
    if (lang.symbol(op.symbol).arity != f.vars().size())
      throw InputError("atom " + f.symbol() + " used with wrong arity");
  }
  for (auto& c : f.children()) op.kids.push_back(build(c, lang));
  ops_.push_back(std::move(op));
  return ops_.size() - 1;
}

bool CompiledFormula::atom_true(const Op& o, const CoreStructure& st, const std::vector<Nat>& val) const {
  if (o.kind == Formula::Kind::Eq) return val[o.vars[0]] == val[o.vars[1]];
  Nat tuple[8];
  std::vector<Nat> big;
  Nat* t = tuple;
  if (o.vars.size() > 8) {
    big.resize(o.vars.size());
    t = big.data();
  }
  for (std::size_t i = 0; i < o.vars.size(); ++i) t[i] = val[o.vars[i]];
  return st.holds(o.symbol, std::span<const Nat>(t, o.vars.size()));
}

bool CompiledFormula::padded(std::size_t idx, const CoreStructure& st, std::vector<Nat>& val,
                             std::vector<char>& bound) const {
  const Op& o = ops_[idx];
  switch (o.kind) {
    case Formula::Kind::Atom:
    case Formula::Kind::Eq:
      return atom_true(o, st, val);
    case Formula::Kind::Not:
      return !padded(o.kids[0], st, val, bound);
    case Formula::Kind::And:
      for (auto k : o.kids)
        if (!padded(k, st, val, bound)) return false;
      return true;
    case Formula::Kind::Or:
      for (auto k : o.kids)
        if (padded(k, st, val, bound)) return true;
      return false;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      const bool want = o.kind == Formula::Kind::Exists;
      const auto v = o.vars[0];
      const Nat core = static_cast<Nat>(st.core());
      // Candidates: the core, named padding points, one fresh padding point.
      std::vector<Nat> named;
      for (std::size_t u = 0; u < val.size(); ++u)
        if (bound[u] && val[u] >= core) named.push_back(val[u]);
      std::sort(named.begin(), named.end());
      named.erase(std::unique(named.begin(), named.end()), named.end());
      Nat fresh = core;
      for (auto n : named)
        if (n == fresh) ++fresh;
      const Nat saved = val[v];
      const char saved_bound = bound[v];
      bound[v] = 1;
      auto try_value = [&](Nat a) {
        val[v] = a;
        return padded(o.kids[0], st, val, bound) == want;
      };
      bool hit = false;
      for (Nat a = 0; a < core && !hit; ++a) hit = try_value(a);
      for (std::size_t i = 0; i < named.size() && !hit; ++i) hit = try_value(named[i]);
      if (!hit) hit = try_value(fresh);
      val[v] = saved;
      bound[v] = saved_bound;
      return want ? hit : !hit;
    }
  }
  return false;
}

bool CompiledFormula::finite(std::size_t idx, const CoreStructure& st, std::size_t m, std::vector<Nat>& val) const {
  const Op& o = ops_[idx];
  switch (o.kind) {
    case Formula::Kind::Atom:
    case Formula::Kind::Eq:
      return atom_true(o, st, val);
    case Formula::Kind::Not:
      return !finite(o.kids[0], st, m, val);
    case Formula::Kind::And:
      for (auto k : o.kids)
        if (!finite(k, st, m, val)) return false;
      return true;
    case Formula::Kind::Or:
      for (auto k : o.kids)
        if (finite(k, st, m, val)) return true;
      return false;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      const bool want = o.kind == Formula::Kind::Exists;
      const auto v = o.vars[0];
      const Nat saved = val[v];
      bool hit = false;
      for (Nat a = 0; a < static_cast<Nat>(m) && !hit; ++a) {
        val[v] = a;
        hit = finite(o.kids[0], st, m, val) == want;
      }
      val[v] = saved;
      return want ? hit : !hit;
    }
  }
  return false;
}

namespace {

void bind_assignment(const Assignment& asg, const std::set<std::size_t>& free_vars, std::size_t nvars,
                     std::vector<Nat>& val, std::vector<char>& bound) {
  val.assign(std::max(nvars, asg.size()), 0);
  bound.assign(val.size(), 0);
  for (std::size_t v = 0; v < asg.size(); ++v)
    if (asg[v]) {
      if (*asg[v] < 0) throw InputError("assignment values must be natural numbers");
      val[v] = *asg[v];
      bound[v] = 1;
    }
  for (auto v : free_vars)
    if (!bound[v]) throw InputError("free variable v" + std::to_string(v) + " is unbound");
}

} // namespace

bool CompiledFormula::eval_padded(const CoreStructure& st, const Assignment& asg) const {
  std::vector<Nat> val;
  std::vector<char> bound;
  bind_assignment(asg, free_, nvars_, val, bound);
  return padded(root_, st, val, bound);
}

bool CompiledFormula::eval_finite(const CoreStructure& st, std::size_t m, const Assignment& asg) const {
  if (m < st.core()) throw InputError("finite universe smaller than the core");
  std::vector<Nat> val;
  std::vector<char> bound;
  bind_assignment(asg, free_, nvars_, val, bound);
  for (std::size_t v = 0; v < val.size(); ++v)
    if (bound[v] && val[v] >= static_cast<Nat>(m)) throw InputError("assignment leaves the finite universe");
  return finite(root_, st, m, val);
}

bool eval_formula(const CoreStructure& st, const Formula& f, const Assignment& asg) {
  return CompiledFormula(f, st.language()).eval_padded(st, asg);
}

namespace {

class FormulaParser {
public:
  explicit FormulaParser(std::string_view s) : s_(s) {}

  Formula parse() {
    auto f = formula();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return f;
  }

private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("formula: " + why + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::string token() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '(' &&
           s_[pos_] != ')')
      ++pos_;
    if (start == pos_) fail("expected a token");
    return std::string(s_.substr(start, pos_ - start));
  }
  std::size_t variable() {
    auto t = token();
    if (t.size() < 2 || t[0] != 'v' || !std::all_of(t.begin() + 1, t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      fail("expected a variable vN, got '" + t + "'");
    return std::stoul(t.substr(1));
  }
  bool at_close() {
    skip();
    return pos_ < s_.size() && s_[pos_] == ')';
  }
  void close() {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
    ++pos_;
  }

  Formula formula() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (s_[pos_] != '(') {
      auto t = token();
      if (t == "true") return Formula::truth();
      if (t == "false") return Formula::falsity();
      fail("expected '(' or true/false, got '" + t + "'");
    }
    ++pos_;
    auto head = token();
    if (head == "not") {
      auto f = formula();
      close();
      return Formula::negate(std::move(f));
    }
    if (head == "and" || head == "or") {
      std::vector<Formula> kids;
      while (!at_close()) kids.push_back(formula());
      close();
      return head == "and" ? Formula::all_of(std::move(kids)) : Formula::any_of(std::move(kids));
    }
    if (head == "exists" || head == "forall") {
      auto v = variable();
      auto body = formula();
      close();
      return head == "exists" ? Formula::exists(v, std::move(body)) : Formula::forall(v, std::move(body));
    }
    if (head == "=") {
      auto a = variable();
      auto b = variable();
      close();
      return Formula::eq(a, b);
    }
    std::vector<std::size_t> args;
    while (!at_close()) args.push_back(variable());
    close();
    if (args.empty()) fail("atom " + head + " needs arguments");
    return Formula::atom(head, std::move(args));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

void write(std::string& out, const Formula& f) {
  auto var = [&](std::size_t v) { out += " v" + std::to_string(v); };
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += "(" + f.symbol();
      for (auto v : f.vars()) var(v);
      out += ")";
      return;
    case Formula::Kind::Eq:
      out += "(=";
      var(f.vars()[0]);
      var(f.vars()[1]);
      out += ")";
      return;
    case Formula::Kind::Not:
      out += "(not ";
      write(out, f.children()[0]);
      out += ")";
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      if (f.children().empty()) {
        out += f.kind() == Formula::Kind::And ? "true" : "false";
        return;
      }
      out += f.kind() == Formula::Kind::And ? "(and" : "(or";
      for (auto& c : f.children()) {
        out += ' ';
        write(out, c);
      }
      out += ")";
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      out += f.kind() == Formula::Kind::Exists ? "(exists" : "(forall";
      var(f.vars()[0]);
      out += ' ';
      write(out, f.children()[0]);
      out += ")";
      return;
  }
}

} // namespace

Formula parse_formula(std::string_view text) { return FormulaParser(text).parse(); }

std::string to_string(const Formula& f) {
  std::string out;
  write(out, f);
  return out;
}

} // namespace bfh::logic
