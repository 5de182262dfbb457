#include "bfh/logic/structure.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace bfh::logic {

Language::Language(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].arity == 0) throw InputError("symbol " + symbols_[i].name + " must have positive arity");
    if (symbols_[i].name.empty()) throw InputError("empty symbol name");
    for (std::size_t j = 0; j < i; ++j)
      if (symbols_[j].name == symbols_[i].name) throw InputError("duplicate symbol " + symbols_[i].name);
  }
}

std::size_t Language::find(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name == name) return i;
  throw InputError("unknown relation symbol '" + std::string(name) + "'");
}

std::size_t Language::max_arity() const {
  std::size_t m = 0;
  for (auto& s : symbols_) m = std::max(m, s.arity);
  return m;
}

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<Nat> decode_tuple(std::size_t code, std::size_t core, std::size_t arity) {
  std::vector<Nat> t(arity);
  for (std::size_t k = arity; k-- > 0;) {
    t[k] = static_cast<Nat>(code % core);
    code /= core;
  }
  return t;
}

} // namespace

CoreStructure::CoreStructure(Language lang, std::size_t core) : lang_(std::move(lang)), core_(core) {
  table_.reserve(lang_.size());
  for (auto& s : lang_.symbols()) table_.emplace_back(core_ == 0 ? 0 : ipow(core_, s.arity));
}

void CoreStructure::add(std::size_t symbol, std::span<const Nat> tuple) {
  if (symbol >= lang_.size()) throw InputError("symbol index out of range");
  if (tuple.size() != lang_.symbol(symbol).arity)
    throw InputError("fact for " + lang_.symbol(symbol).name + " has wrong arity");
  std::size_t code = 0;
  for (auto a : tuple) {
    if (a < 0 || static_cast<std::size_t>(a) >= core_)
      throw InputError("fact mentions point " + std::to_string(a) + " outside core of size " + std::to_string(core_));
    code = code * core_ + static_cast<std::size_t>(a);
  }
  table_[symbol].set(code);
}

std::vector<std::pair<std::size_t, std::vector<Nat>>> CoreStructure::facts() const {
  std::vector<std::pair<std::size_t, std::vector<Nat>>> out;
  for (std::size_t s = 0; s < table_.size(); ++s)
    for (auto c = table_[s].find_first(); c != PointSet::npos; c = table_[s].find_next(c))
      out.emplace_back(s, decode_tuple(c, core_, lang_.symbol(s).arity));
  return out;
}

std::size_t CoreStructure::fact_count() const {
  std::size_t n = 0;
  for (auto& t : table_) n += t.count();
  return n;
}

PointSet CoreStructure::support() const {
  PointSet out(core_);
  for (auto& [s, t] : facts())
    for (auto a : t) out.set(static_cast<std::size_t>(a));
  return out;
}

std::size_t CoreStructure::coordinate_count(const Language& lang, std::size_t core) {
  std::size_t n = 0;
  for (auto& s : lang.symbols()) n += ipow(core, s.arity);
  return n;
}

std::uint64_t CoreStructure::code() const {
  if (coordinate_count(lang_, core_) >= 64) throw InputError("structure code needs more than 63 coordinates");
  std::uint64_t out = 0;
  std::size_t offset = 0;
  for (auto& t : table_) {
    for (auto c = t.find_first(); c != PointSet::npos; c = t.find_next(c)) out |= std::uint64_t{1} << (offset + c);
    offset += t.size();
  }
  return out;
}

CoreStructure CoreStructure::from_code(const Language& lang, std::size_t core, std::uint64_t code) {
  if (coordinate_count(lang, core) >= 64) throw InputError("structure code needs more than 63 coordinates");
  CoreStructure st(lang, core);
  std::size_t offset = 0;
  for (std::size_t s = 0; s < lang.size(); ++s) {
    const auto n = st.table_[s].size();
    for (std::size_t c = 0; c < n; ++c)
      if (code >> (offset + c) & 1U) st.table_[s].set(c);
    offset += n;
  }
  return st;
}

PartialInjection::PartialInjection(std::vector<std::pair<Nat, Nat>> pairs) {
  for (auto [i, j] : pairs) extend(i, j);
}

void PartialInjection::extend(Nat i, Nat j) {
  if (i < 0 || j < 0) throw InputError("partial injection entries must be natural numbers");
  auto f = fwd_.find(i);
  if (f != fwd_.end()) {
    if (f->second != j) throw InputError("partial injection is not functional at " + std::to_string(i));
    return;
  }
  if (bwd_.count(j)) throw InputError("partial injection is not injective at image " + std::to_string(j));
  fwd_[i] = j;
  bwd_[j] = i;
}

std::set<Nat> PartialInjection::range() const {
  std::set<Nat> r;
  for (auto& [i, j] : fwd_) r.insert(j);
  return r;
}

Nat PartialInjection::max_point() const {
  Nat m = -1;
  for (auto& [i, j] : fwd_) m = std::max({m, i, j});
  return m;
}

bool PartialInjection::extends(const PartialInjection& smaller) const {
  for (auto& [i, j] : smaller.fwd_) {
    auto f = fwd_.find(i);
    if (f == fwd_.end() || f->second != j) return false;
  }
  return true;
}

PlacedFacts push_facts(const CoreStructure& st, const std::map<Nat, Nat>& placement) {
  PlacedFacts out;
  for (auto& [s, t] : st.facts()) {
    std::vector<Nat> image;
    image.reserve(t.size());
    bool placed = true;
    for (auto a : t) {
      auto it = placement.find(a);
      if (it == placement.end()) {
        placed = false;
        break;
      }
      image.push_back(it->second);
    }
    if (placed) out.emplace(s, std::move(image));
  }
  return out;
}

namespace {

std::string strip_comment(std::string line) {
  auto h = line.find('#');
  if (h != std::string::npos) line.erase(h);
  return line;
}

Nat parse_nat(const std::string& tok, const char* what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size() || v < 0) throw InputError("");
    return static_cast<Nat>(v);
  } catch (const std::exception&) {
    throw InputError(std::string("expected a natural number for ") + what + ", got '" + tok + "'");
  }
}

} // namespace

CoreStructure parse_structure(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Language> lang;
  std::optional<std::size_t> core;
  std::vector<std::pair<std::string, std::vector<Nat>>> pending;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(strip_comment(line));
    std::string head;
    if (!(ls >> head)) continue;
    auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };
    if (head == "language") {
      std::vector<Language::Symbol> syms;
      std::string tok;
      while (ls >> tok) {
        auto slash = tok.find('/');
        if (slash == std::string::npos) throw InputError("expected NAME/ARITY, got '" + tok + "'" + where());
        syms.push_back({tok.substr(0, slash), static_cast<std::size_t>(parse_nat(tok.substr(slash + 1), "arity"))});
      }
      lang = Language(std::move(syms));
    } else if (head == "core") {
      std::string tok;
      if (!(ls >> tok)) throw InputError("core needs a size" + where());
      core = static_cast<std::size_t>(parse_nat(tok, "core size"));
    } else {
      std::vector<Nat> tuple;
      std::string tok;
      while (ls >> tok) tuple.push_back(parse_nat(tok, "tuple entry"));
      pending.emplace_back(head, std::move(tuple));
    }
  }
  if (!lang) throw InputError("structure has no 'language' line");
  if (!core) throw InputError("structure has no 'core' line");
  CoreStructure st(*lang, *core);
  for (auto& [name, tuple] : pending) st.add(lang->find(name), tuple);
  return st;
}

std::string to_text(const CoreStructure& st) {
  std::ostringstream out;
  out << "language";
  for (auto& s : st.language().symbols()) out << ' ' << s.name << '/' << s.arity;
  out << "\ncore " << st.core() << "\n";
  for (auto& [s, t] : st.facts()) {
    out << st.language().symbol(s).name;
    for (auto a : t) out << ' ' << a;
    out << "\n";
  }
  return out.str();
}

PartialInjection parse_injection(std::string_view text) {
  PartialInjection s;
  std::string buf(text);
  std::replace(buf.begin(), buf.end(), ',', ' ');
  std::istringstream in(buf);
  std::string tok;
  while (in >> tok) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw InputError("expected i:j in partial injection, got '" + tok + "'");
    s.extend(parse_nat(tok.substr(0, colon), "injection source"), parse_nat(tok.substr(colon + 1), "injection target"));
  }
  return s;
}

std::string to_string(const PartialInjection& s) {
  std::string out;
  for (auto& [i, j] : s.pairs()) {
    if (!out.empty()) out += ',';
    out += std::to_string(i) + ":" + std::to_string(j);
  }
  return out;
}

std::vector<CoreStructure> all_digraphs(std::size_t core) {
  const auto lang = Language::digraph();
  const auto coords = CoreStructure::coordinate_count(lang, core);
  if (coords >= 32) throw InputError("all_digraphs: too many structures");
  std::vector<CoreStructure> out;
  out.reserve(std::size_t{1} << coords);
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << coords); ++c) out.push_back(CoreStructure::from_code(lang, core, c));
  return out;
}

} // namespace bfh::logic
