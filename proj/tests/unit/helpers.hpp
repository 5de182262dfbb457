#pragma once

#include "bfh/corpus.hpp"
#include "bfh/gspace.hpp"
#include "bfh/logic/truncation.hpp"

namespace testing {

inline bfh::FinTopSpace sierpinski() {
  return bfh::FinTopSpace({"a", "b"}, {bfh::make_set(2, {0}), bfh::make_set(2, {0, 1})});
}

inline bfh::FinTopSpace discrete_pair() {
  return bfh::FinTopSpace({"e", "s"}, {bfh::make_set(2, {0}), bfh::make_set(2, {1}), bfh::make_set(2, {0, 1})});
}

/// S_2 acting on the 16 digraphs on {0,1}, discrete, with singleton basis.
inline const bfh::logic::Truncation& s2_digraphs() {
  static const auto t = bfh::logic::full_truncation(bfh::logic::Language::digraph(), bfh::logic::make_symmetric_group(2));
  return t;
}

inline bfh::logic::CoreStructure digraph(std::size_t core, std::initializer_list<std::pair<int, int>> edges) {
  bfh::logic::CoreStructure st(bfh::logic::Language::digraph(), core);
  for (auto [a, b] : edges) st.add(0, {a, b});
  return st;
}

/// A small mixed corpus: random regular and general instances plus the built-ins.
inline std::vector<bfh::CorpusEntry> small_corpus(std::size_t per_kind = 15) {
  auto out = bfh::random_corpus(per_kind, 11, bfh::CorpusTopology::Regular);
  for (auto& e : bfh::random_corpus(per_kind, 12, bfh::CorpusTopology::General)) out.push_back(std::move(e));
  for (auto& n : bfh::named_instances()) out.push_back({n, bfh::named_instance(n)});
  return out;
}

inline std::vector<bfh::PointSet> all_subsets(std::size_t n) {
  std::vector<bfh::PointSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bfh::PointSet s(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) s.set(i);
    out.push_back(std::move(s));
  }
  return out;
}

} // namespace testing
