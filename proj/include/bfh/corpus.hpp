#pragma once

#include "bfh/gspace.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bfh {

struct CorpusEntry {
  std::string name;
  GSpaceInstance inst;
};

enum class CorpusTopology { Regular, General };

/// Random finite G-spaces with continuous actions, deterministic for a seed.
///
/// The group is one of Z1..Z6, Z2×Z2, S3, topologized by the cosets of a
/// random normal subgroup N (plus G and a few unions of cosets). The space
/// is a disjoint union of coset spaces G/K with at most 8 points, and its
/// topology comes from the G-translates of a few N-invariant sets, so
/// translations are homeomorphisms and gN·O = g·O for every open O.
///
/// Regular: the open sets are the unions of the atoms of the Boolean algebra
/// those translates generate, a partition topology, which is what regularity
/// means for a finite space (as metrizable spaces are regular). General: the
/// translates generate the topology directly; such spaces are usually not
/// regular. The basis is X, the minimal open sets, and some of their unions,
/// at most 10 sets.
std::vector<CorpusEntry> random_corpus(std::size_t count, std::uint64_t seed,
                                       CorpusTopology topology = CorpusTopology::Regular);

/// Built-in instances: "s2digraph" (the logic action truncated to 2 points,
/// with the cylinder basis), "z2sierpinski", "trivial-discrete".
std::vector<std::string> named_instances();
GSpaceInstance named_instance(std::string_view name);  // InputError if unknown

} // namespace bfh
