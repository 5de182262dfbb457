#include "bfh/borel.hpp"

#include <algorithm>
#include <cctype>
#include <random>

namespace bfh {

BorelCode BorelCode::basic(std::size_t n) {
  return BorelCode(std::make_shared<const Node>(Node{Kind::Basic, n, {}}));
}

BorelCode BorelCode::unite(std::vector<BorelCode> children) {
  return BorelCode(std::make_shared<const Node>(Node{Kind::Union, 0, std::move(children)}));
}

BorelCode BorelCode::complement(BorelCode child) {
  return BorelCode(std::make_shared<const Node>(Node{Kind::Complement, 0, {std::move(child)}}));
}

bool operator==(const BorelCode& a, const BorelCode& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == BorelCode::Kind::Basic) return a.basis_index() == b.basis_index();
  return a.children() == b.children();
}

PointSet decode(const FinTopSpace& space, const BorelCode& code) {
  switch (code.kind()) {
    case BorelCode::Kind::Basic:
      return space.basis(code.basis_index());
    case BorelCode::Kind::Complement:
      return space.all() - decode(space, code.children().front());
    case BorelCode::Kind::Union: {
      PointSet acc = space.empty();
      for (auto& c : code.children()) acc |= decode(space, c);
      return acc;
    }
  }
  return space.empty();
}

Classification classify(const BorelCode& code) {
  switch (code.kind()) {
    case BorelCode::Kind::Basic:
      return {1, Side::Sigma};
    case BorelCode::Kind::Complement: {
      auto c = classify(code.children().front());
      return {c.level, c.side == Side::Sigma ? Side::Pi : Side::Sigma};
    }
    case BorelCode::Kind::Union: {
      std::size_t level = 1;
      for (auto& child : code.children()) {
        auto c = classify(child);
        level = std::max(level, c.side == Side::Sigma ? c.level : c.level + 1);
      }
      return {level, Side::Sigma};
    }
  }
  return {1, Side::Sigma};
}

std::size_t code_rank(const BorelCode& code) { return classify(code).level; }

std::size_t pi_level(const BorelCode& code) {
  auto c = classify(code);
  return c.side == Side::Pi ? c.level : c.level + 1;
}

namespace {

class CodeSampler {
public:
  CodeSampler(std::size_t basis_size, std::uint64_t seed, std::size_t width)
      : nb_(basis_size), rng_(seed), width_(std::max<std::size_t>(1, width)) {}

  BorelCode any(std::size_t budget, std::size_t depth) {
    if (budget <= 1) return rank_one();
    if (depth >= kMaxDepth) return leaf();
    switch (pick(4)) {
      case 0:
        return leaf();
      case 1:
        return BorelCode::complement(any(budget, depth + 1));
      default:
        return union_of(budget, depth + 1);
    }
  }

private:
  static constexpr std::size_t kMaxDepth = 5;

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  BorelCode leaf() { return BorelCode::basic(pick(nb_)); }

  BorelCode rank_one() {
    switch (pick(3)) {
      case 0:
        return leaf();
      case 1:
        return BorelCode::complement(leaf());
      default: {
        std::vector<BorelCode> kids;
        const auto k = 1 + pick(width_);
        for (std::size_t i = 0; i < k; ++i) kids.push_back(leaf());
        return BorelCode::unite(std::move(kids));
      }
    }
  }

  // Σ children may use the whole budget; Π children one level less.
  BorelCode union_of(std::size_t budget, std::size_t depth) {
    std::vector<BorelCode> kids;
    const auto k = 1 + pick(width_);
    for (std::size_t i = 0; i < k; ++i) {
      if (pick(2) == 0)
        kids.push_back(BorelCode::complement(any(budget - 1, depth + 1)));
      else if (depth + 1 < kMaxDepth && pick(3) == 0)
        kids.push_back(union_of(budget, depth + 1));
      else
        kids.push_back(leaf());
    }
    return BorelCode::unite(std::move(kids));
  }

  std::size_t nb_;
  std::mt19937_64 rng_;
  std::size_t width_;
};

void write(std::string& out, const BorelCode& code) {
  switch (code.kind()) {
    case BorelCode::Kind::Basic:
      out += 'B';
      out += std::to_string(code.basis_index());
      return;
    case BorelCode::Kind::Complement:
      out += "C(";
      write(out, code.children().front());
      out += ')';
      return;
    case BorelCode::Kind::Union:
      out += "U(";
      for (std::size_t i = 0; i < code.children().size(); ++i) {
        if (i) out += ',';
        write(out, code.children()[i]);
      }
      out += ')';
      return;
  }
}

class CodeParser {
public:
  explicit CodeParser(std::string_view s) : s_(s) {}

  BorelCode parse() {
    auto c = code();
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return c;
  }

private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("borel code: " + why + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char ch) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  BorelCode code() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char head = s_[pos_++];
    if (head == 'B') {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected basis index");
      return BorelCode::basic(std::stoul(std::string(s_.substr(start, pos_ - start))));
    }
    if (head == 'C') {
      expect('(');
      auto child = code();
      expect(')');
      return BorelCode::complement(std::move(child));
    }
    if (head == 'U') {
      expect('(');
      std::vector<BorelCode> kids;
      skip();
      if (pos_ < s_.size() && s_[pos_] == ')') {
        ++pos_;
        return BorelCode::unite({});
      }
      for (;;) {
        kids.push_back(code());
        skip();
        if (pos_ < s_.size() && s_[pos_] == ',') {
          ++pos_;
          continue;
        }
        expect(')');
        return BorelCode::unite(std::move(kids));
      }
    }
    --pos_;
    fail("expected B, C or U");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace

std::vector<BorelCode> random_codes(const FinTopSpace& space, std::size_t max_rank, std::size_t count,
                                    std::uint64_t seed, std::size_t width) {
  if (max_rank == 0) throw InputError("random_codes: max_rank must be at least 1");
  if (space.basis_size() == 0) throw InputError("random_codes: space has no basis sets");
  CodeSampler sampler(space.basis_size(), seed, width);
  std::vector<BorelCode> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sampler.any(max_rank, 0));
  return out;
}

std::string to_string(const BorelCode& code) {
  std::string out;
  write(out, code);
  return out;
}

BorelCode parse_code(std::string_view text) { return CodeParser(text).parse(); }

void check_code(const FinTopSpace& space, const BorelCode& code) {
  if (code.kind() == BorelCode::Kind::Basic) {
    if (code.basis_index() >= space.basis_size())
      throw InputError("borel code names basis index " + std::to_string(code.basis_index()) +
                       " but the space has " + std::to_string(space.basis_size()));
    return;
  }
  for (auto& c : code.children()) check_code(space, c);
}

} // namespace bfh
