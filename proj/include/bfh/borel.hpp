#pragma once

#include "bfh/topology.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace bfh {

/// Finite Borel code: leaves name basic opens, inner nodes are finite unions
/// or complements. Codes are immutable and share subtrees; equality is
/// structural.
class BorelCode {
public:
  enum class Kind { Basic, Union, Complement };

  static BorelCode basic(std::size_t n);
  static BorelCode unite(std::vector<BorelCode> children);
  static BorelCode complement(BorelCode child);

  Kind kind() const { return node_->kind; }
  std::size_t basis_index() const { return node_->index; }
  const std::vector<BorelCode>& children() const { return node_->children; }

  friend bool operator==(const BorelCode& a, const BorelCode& b);

private:
  struct Node {
    Kind kind;
    std::size_t index = 0;
    std::vector<BorelCode> children;
  };
  explicit BorelCode(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// π: Basic(n) ↦ U_n, Union ↦ union, Complement ↦ X minus the child.
PointSet decode(const FinTopSpace& space, const BorelCode& code);

enum class Side { Sigma, Pi };

struct Classification {
  std::size_t level;
  Side side;
};

/// Syntactic Borel class of a code.
///
///   Basic(n)          → (1, Σ)
///   Complement(c)     → (level(c), opposite side of c)
///   Union(c1..ck)     → (max_i contrib(ci), Σ), where a Σ child contributes
///                       its level and a Π child its level + 1; the empty
///                       union is (1, Σ).
///
/// So a Π_ξ set is also Σ_{ξ+1}, and unions of Σ_ξ sets stay Σ_ξ.
Classification classify(const BorelCode& code);

/// The level of classify(); rank(Complement(c)) = rank(c).
std::size_t code_rank(const BorelCode& code);

/// Least α with the code's set in Π_α: its level if it is Π, level + 1 if Σ.
std::size_t pi_level(const BorelCode& code);

/// Deterministic sample of `count` codes of rank ≤ max_rank; unions have
/// between 1 and `width` children. Basic indices are drawn from the space.
std::vector<BorelCode> random_codes(const FinTopSpace& space, std::size_t max_rank, std::size_t count,
                                    std::uint64_t seed, std::size_t width = 3);

/// Text form: B<n> | C(<code>) | U(<code>,<code>,...)   e.g. C(U(B3,B5)).
std::string to_string(const BorelCode& code);
BorelCode parse_code(std::string_view text);

/// Throws InputError when some Basic index is not a basis index of the space.
void check_code(const FinTopSpace& space, const BorelCode& code);

} // namespace bfh
