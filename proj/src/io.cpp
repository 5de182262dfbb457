#include "bfh/io.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace bfh {

namespace {

struct Line {
  std::size_t number;
  std::string head;
  std::vector<std::string> args;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream ls(raw);
    Line line{n, {}, {}};
    if (!(ls >> line.head)) continue;
    std::string tok;
    while (ls >> tok) line.args.push_back(tok);
    out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(const Line& l, const std::string& msg) {
  throw InputError("line " + std::to_string(l.number) + ": " + msg);
}

std::map<std::string, std::size_t> index_names(const std::vector<std::string>& names, const Line& l) {
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!idx.emplace(names[i], i).second) fail(l, "duplicate name '" + names[i] + "'");
  return idx;
}

std::size_t lookup(const std::map<std::string, std::size_t>& idx, const std::string& name, const Line& l,
                   const char* what) {
  auto it = idx.find(name);
  if (it == idx.end()) fail(l, std::string("unknown ") + what + " '" + name + "'");
  return it->second;
}

// Collects `points` and `open` lines; other lines are left to the caller.
class SpaceBuilder {
public:
  bool accept(const Line& l) {
    if (l.head == "points") {
      if (!names_.empty()) fail(l, "points given twice");
      if (l.args.empty()) fail(l, "points needs at least one name");
      names_ = l.args;
      idx_ = index_names(names_, l);
      return true;
    }
    if (l.head == "open") {
      if (names_.empty()) fail(l, "open before points");
      PointSet s(names_.size());
      for (auto& a : l.args) s.set(lookup(idx_, a, l, "point"));
      basis_.push_back(std::move(s));
      return true;
    }
    return false;
  }
  bool started() const { return !names_.empty(); }
  FinTopSpace build() const {
    if (names_.empty()) throw InputError("space has no 'points' line");
    return FinTopSpace(names_, basis_);
  }

private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> idx_;
  std::vector<PointSet> basis_;
};

} // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FinTopSpace parse_space(std::string_view text) {
  SpaceBuilder sb;
  for (auto& l : tokenize(text))
    if (!sb.accept(l)) fail(l, "unknown directive '" + l.head + "'");
  return sb.build();
}

std::string to_text(const FinTopSpace& space) {
  std::ostringstream out;
  out << "points";
  for (auto& n : space.names()) out << ' ' << n;
  out << '\n';
  for (auto& b : space.bases()) {
    out << "open";
    for (auto p : members(b)) out << ' ' << space.name(p);
    out << '\n';
  }
  return out.str();
}

GSpaceInstance parse_gspace(std::string_view text, const std::filesystem::path& base_dir) {
  std::vector<std::string> elements;
  std::map<std::string, std::size_t> eidx;
  std::vector<std::vector<std::size_t>> mult;
  std::vector<PointSet> gbasis;
  SpaceBuilder inline_space;
  std::optional<FinTopSpace> space;
  std::vector<std::pair<Line, std::size_t>> actions;  // deferred until the space is known

  for (auto& l : tokenize(text)) {
    if (l.head == "elements") {
      if (!elements.empty()) fail(l, "elements given twice");
      if (l.args.empty()) fail(l, "elements needs at least one name");
      elements = l.args;
      eidx = index_names(elements, l);
    } else if (l.head == "mult") {
      if (elements.empty()) fail(l, "mult before elements");
      if (l.args.size() != elements.size()) fail(l, "mult row needs one entry per element");
      std::vector<std::size_t> row;
      for (auto& a : l.args) row.push_back(lookup(eidx, a, l, "element"));
      mult.push_back(std::move(row));
    } else if (l.head == "gopen") {
      if (elements.empty()) fail(l, "gopen before elements");
      PointSet s(elements.size());
      for (auto& a : l.args) s.set(lookup(eidx, a, l, "element"));
      gbasis.push_back(std::move(s));
    } else if (l.head == "space") {
      if (space || inline_space.started()) fail(l, "space given twice");
      if (l.args.size() != 1) fail(l, "space needs one file name");
      std::filesystem::path p(l.args[0]);
      if (p.is_relative()) p = base_dir / p;
      space = parse_space(read_file(p));
    } else if (l.head == "action") {
      if (elements.empty()) fail(l, "action before elements");
      if (l.args.empty()) fail(l, "action needs an element");
      actions.emplace_back(l, lookup(eidx, l.args[0], l, "element"));
    } else if (!inline_space.accept(l)) {
      fail(l, "unknown directive '" + l.head + "'");
    }
  }
  if (elements.empty()) throw InputError("G-space has no 'elements' line");
  if (mult.size() != elements.size()) throw InputError("G-space needs one mult row per element");
  if (space && inline_space.started()) throw InputError("space given both by file and inline");
  if (!space) space = inline_space.build();
  std::map<std::string, std::size_t> pidx;
  for (std::size_t p = 0; p < space->size(); ++p) pidx.emplace(space->name(p), p);
  std::vector<std::vector<std::size_t>> action(elements.size());
  std::vector<char> seen(elements.size(), 0);
  for (auto& [l, g] : actions) {
    if (seen[g]) fail(l, "action for " + elements[g] + " given twice");
    seen[g] = 1;
    if (l.args.size() != space->size() + 1) fail(l, "action needs one image per point");
    for (std::size_t i = 1; i < l.args.size(); ++i) action[g].push_back(lookup(pidx, l.args[i], l, "point"));
  }
  for (std::size_t g = 0; g < elements.size(); ++g)
    if (!seen[g]) throw InputError("no action line for element " + elements[g]);
  return GSpaceInstance(FinGroup(elements, mult, gbasis), *space, action);
}

std::string to_text(const GSpaceInstance& inst) {
  const auto& grp = inst.group();
  const auto& sp = inst.space();
  std::ostringstream out;
  out << "elements";
  for (std::size_t g = 0; g < grp.order(); ++g) out << ' ' << grp.name(g);
  out << '\n';
  for (std::size_t g = 0; g < grp.order(); ++g) {
    out << "mult";
    for (std::size_t h = 0; h < grp.order(); ++h) out << ' ' << grp.name(grp.mul(g, h));
    out << '\n';
  }
  for (std::size_t k = 0; k < grp.basis_size(); ++k) {
    out << "gopen";
    for (auto g : members(grp.basis(k))) out << ' ' << grp.name(g);
    out << '\n';
  }
  out << to_text(sp);
  for (std::size_t g = 0; g < grp.order(); ++g) {
    out << "action " << grp.name(g);
    for (std::size_t p = 0; p < sp.size(); ++p) out << ' ' << sp.name(inst.act(g, p));
    out << '\n';
  }
  return out.str();
}

} // namespace bfh
