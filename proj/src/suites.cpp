#include "bfh/suites.hpp"

#include "bfh/backforth.hpp"
#include "bfh/borel.hpp"
#include "bfh/corpus.hpp"
#include "bfh/gspace.hpp"
#include "bfh/logic/games.hpp"
#include "bfh/logic/logic_bf.hpp"
#include "bfh/logic/nadel.hpp"
#include "bfh/logic/truncation.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>

namespace bfh {

using nlohmann::ordered_json;
using logic::CoreStructure;
using logic::Language;
using logic::Nat;
using logic::PartialInjection;

namespace {

constexpr std::size_t kCorpusSize = 60;

std::vector<CorpusEntry> corpus_for(const SuiteOptions& opt, CorpusTopology topology) {
  if (opt.space) return {{*opt.space, named_instance(*opt.space)}};
  return random_corpus(kCorpusSize, opt.seed, topology);
}

// The regular corpus, then the general one, then the built-ins.
std::vector<CorpusEntry> wide_corpus(const SuiteOptions& opt) {
  if (opt.space) return corpus_for(opt, CorpusTopology::Regular);
  auto out = random_corpus(kCorpusSize, opt.seed, CorpusTopology::Regular);
  for (auto& e : random_corpus(kCorpusSize, opt.seed, CorpusTopology::General)) out.push_back(std::move(e));
  for (auto& n : named_instances()) out.push_back({n, named_instance(n)});
  return out;
}

ordered_json set_json(const FinTopSpace& sp, const PointSet& s) {
  ordered_json out = ordered_json::array();
  for (auto p : members(s)) out.push_back(sp.name(p));
  return out;
}

SuiteResult hierarchy_laws(const SuiteOptions& opt) {
  SuiteResult r;
  std::size_t levels = 0, max_stab = 0;
  auto corpus = corpus_for(opt, CorpusTopology::Regular);
  for (auto& e : corpus) {
    const auto t = compute_bf_tables(e.inst);
    levels += t.stab();
    max_stab = std::max(max_stab, t.stab());
    std::string law;
    if (!t.stabilized)
      law = "no fixpoint";
    else if (!anti_monotone(t))
      law = "anti-monotonicity";
    else if (!reflexive_along_orbits(e.inst, t))
      law = "reflexivity along orbits";
    else
      for (std::size_t a = 0; a < t.stab() && law.empty(); ++a)
        if (!is_transitive(t.levels[a])) law = "transitivity at level " + std::to_string(a + 1);
    if (!law.empty() && r.counterexample.is_null()) r.counterexample = {{"instance", e.name}, {"law", law}};
  }
  r.passed = r.counterexample.is_null();
  r.stats["instances"] = corpus.size();
  r.stats["levels"] = levels;
  r.stats["max_stab"] = max_stab;
  if (!opt.space) {
    // Diagnostic only: the same laws on spaces that need not be regular.
    std::size_t cyc = 0, nonmono = 0;
    for (auto& e : random_corpus(kCorpusSize, opt.seed, CorpusTopology::General)) {
      const auto t = compute_bf_tables(e.inst);
      cyc += !t.stabilized;
      nonmono += !anti_monotone(t);
    }
    r.stats["general_corpus_cycling"] = cyc;
    r.stats["general_corpus_not_anti_monotone"] = nonmono;
  }
  r.detail = std::to_string(corpus.size()) + " regular instances, " + std::to_string(levels) + " levels, max stab " +
             std::to_string(max_stab);
  r.limit_seconds = 60;
  return r;
}

SuiteResult hset_equivalence(const SuiteOptions& opt) {
  SuiteResult r;
  auto corpus = wide_corpus(opt);
  std::size_t levels = 0;
  for (auto& e : corpus) {
    const auto t = compute_bf_tables(e.inst);
    const auto h = h_set_algebra(e.inst, t.stab());
    levels += t.stab();
    bool same = h.levels.size() == t.levels.size() && h.repeat_of == t.repeat_of && h.stabilized == t.stabilized;
    std::size_t bad = 0;
    for (std::size_t a = 0; same && a < t.levels.size(); ++a)
      if (!(h.levels[a] == t.levels[a])) {
        same = false;
        bad = a + 1;
      }
    if (!same && r.counterexample.is_null()) r.counterexample = {{"instance", e.name}, {"level", bad}};
  }
  r.passed = r.counterexample.is_null();
  r.stats["instances"] = corpus.size();
  r.stats["levels"] = levels;
  r.detail = std::to_string(corpus.size()) + " instances, " + std::to_string(levels) + " levels compared";
  r.limit_seconds = 60;
  return r;
}

SuiteResult lemma_b(const SuiteOptions& opt) {
  SuiteResult r;
  auto corpus = corpus_for(opt, CorpusTopology::Regular);
  std::size_t checks = 0, instance_no = 0;
  for (auto& e : corpus) {
    const auto t = compute_bf_tables(e.inst);
    const auto& sp = e.inst.space();
    const auto nb = e.inst.group().basis_size();
    const auto codes = random_codes(sp, 3, 200, opt.seed * 7919 + instance_no++);
    for (auto& code : codes) {
      const PointSet b = decode(sp, code);
      const auto p = pi_level(code);
      for (std::size_t alpha = p; alpha <= std::max(p, t.stab()); ++alpha)
        for (std::size_t v = 0; v < nb; ++v)
          for (std::size_t w = 0; w < nb; ++w) {
            ++checks;
            if (auto ce = verify_lemma_b(e.inst, t, b, alpha, v, w); ce && r.counterexample.is_null())
              r.counterexample = {{"instance", e.name}, {"code", to_string(code)}, {"alpha", alpha}, {"V", v},
                                  {"W", w}, {"y", sp.name(ce->y)}, {"x", sp.name(ce->x)}};
          }
    }
  }
  r.passed = r.counterexample.is_null();
  r.stats["instances"] = corpus.size();
  r.stats["checks"] = checks;
  r.detail = std::to_string(checks) + " (code, level, V, W) checks";
  r.limit_seconds = 300;
  return r;
}

SuiteResult vaught(const SuiteOptions& opt) {
  SuiteResult r;
  auto corpus = wide_corpus(opt);
  std::mt19937_64 rng(opt.seed);
  std::size_t subsets = 0, exhaustive = 0;
  for (auto& e : corpus) {
    const auto& sp = e.inst.space();
    const auto np = sp.size();
    const PointSet g = e.inst.group().all();
    auto check = [&](const PointSet& b) {
      ++subsets;
      const bool star = vaught_star(e.inst, b, g) == b;
      const bool inv = translate(e.inst, g, b) == b;
      if (star != inv && r.counterexample.is_null())
        r.counterexample = {{"instance", e.name}, {"set", set_json(sp, b)}, {"star_fixed", star}, {"invariant", inv}};
    };
    if (np <= 4) {
      ++exhaustive;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << np); ++mask) {
        PointSet b(np);
        for (std::size_t p = 0; p < np; ++p)
          if (mask >> p & 1U) b.set(p);
        check(b);
      }
    } else {
      for (int i = 0; i < 10000; ++i) {
        PointSet b(np);
        for (std::size_t p = 0; p < np; ++p)
          if (rng() & 1U) b.set(p);
        check(b);
      }
    }
  }
  r.passed = r.counterexample.is_null();
  r.stats["instances"] = corpus.size();
  r.stats["exhaustive_instances"] = exhaustive;
  r.stats["subsets"] = subsets;
  r.detail = std::to_string(subsets) + " subsets over " + std::to_string(corpus.size()) + " instances";
  return r;
}

// Mutations per kind and instance; larger lists are sampled.
constexpr std::size_t kMutationSample = 300;

void sample_down(std::vector<std::array<std::size_t, 3>>& v, std::mt19937_64& rng) {
  if (v.size() <= kMutationSample) return;
  std::shuffle(v.begin(), v.end(), rng);
  v.resize(kMutationSample);
}

SuiteResult codability_suite(const SuiteOptions& opt) {
  SuiteResult r;
  auto corpus = wide_corpus(opt);
  std::size_t added = 0, removed = 0, removals_detected = 0;
  std::mt19937_64 rng(opt.seed);
  auto fail = [&](ordered_json ce) {
    if (r.counterexample.is_null()) r.counterexample = std::move(ce);
  };
  for (auto& e : corpus) {
    const auto& grp = e.inst.group();
    const auto& sp = e.inst.space();
    const auto rec = codability(e.inst, 0);
    if (auto m = verify_reconstruction(e.inst, rec)) {
      fail({{"instance", e.name}, {"mutation", "none"}, {"g", m->g}, {"x", m->x}, {"j", m->j}});
      continue;
    }
    // Witness counts per true (g,x,j), computed from the definition of r_a.
    std::map<std::array<std::size_t, 3>, std::size_t> witnesses;
    for (auto& [k, i, j] : rec.r_a)
      for (auto g : members(grp.basis(k)))
        for (auto x : members(sp.basis(i))) ++witnesses[{g, x, j}];
    std::vector<std::array<std::size_t, 3>> removals(rec.r_a.begin(), rec.r_a.end()), additions;
    for (std::size_t k = 0; k < grp.basis_size(); ++k)
      for (std::size_t i = 0; i < sp.basis_size(); ++i)
        for (std::size_t j = 0; j < sp.basis_size(); ++j)
          if (!rec.r_a.count({k, i, j})) additions.push_back({k, i, j});
    sample_down(removals, rng);
    sample_down(additions, rng);
    for (auto& triple : removals) {
      ++removed;
      bool unique = false;
      for (auto g : members(grp.basis(triple[0])))
        for (auto x : members(sp.basis(triple[1]))) unique |= witnesses[{g, x, triple[2]}] == 1;
      auto mutated = rec;
      mutated.r_a.erase(triple);
      const bool detected = verify_reconstruction(e.inst, mutated).has_value();
      removals_detected += detected;
      if (detected != unique)
        fail({{"instance", e.name}, {"mutation", "remove"}, {"triple", triple}, {"detected", detected}});
    }
    for (auto& triple : additions) {
      ++added;
      auto mutated = rec;
      mutated.r_a.insert(triple);
      if (!verify_reconstruction(e.inst, mutated))
        fail({{"instance", e.name}, {"mutation", "add"}, {"triple", triple}});
    }
  }
  r.passed = r.counterexample.is_null();
  r.stats["instances"] = corpus.size();
  r.stats["added_false_triples"] = added;
  r.stats["removed_triples"] = removed;
  r.stats["removals_detected"] = removals_detected;
  r.detail = std::to_string(added) + " additions all detected, " + std::to_string(removals_detected) + "/" +
             std::to_string(removed) + " removals detected, matching the unique-witness count";
  return r;
}

std::vector<PartialInjection> small_anchors(Nat points, std::size_t max_pins) {
  std::vector<PartialInjection> out{PartialInjection{}};
  if (max_pins >= 1)
    for (Nat i = 0; i < points; ++i)
      for (Nat j = 0; j < points; ++j) out.emplace_back(std::vector<std::pair<Nat, Nat>>{{i, j}});
  if (max_pins >= 2)
    for (Nat i = 0; i < points; ++i)
      for (Nat i2 = i + 1; i2 < points; ++i2)
        for (Nat j = 0; j < points; ++j)
          for (Nat j2 = 0; j2 < points; ++j2)
            if (j != j2) out.emplace_back(std::vector<std::pair<Nat, Nat>>{{i, j}, {i2, j2}});
  return out;
}

SuiteResult logic_oracle(const SuiteOptions&) {
  SuiteResult r;
  const auto reps = logic::digraph_iso_representatives(3);
  const auto anchors = small_anchors(3, 2);
  const std::size_t sizes[2] = {3, 4};  // smallest admissible and one larger
  std::shared_ptr<const logic::SymmetricGroup> groups[2] = {logic::make_symmetric_group(3),
                                                             logic::make_symmetric_group(4)};
  std::size_t checks = 0;
  std::size_t disagree[2][3] = {};
  std::size_t level1_true_only_padded = 0;
  for (auto& y : reps)
    for (auto& x : reps) {
      logic::LogicRelation rel(y, x);
      logic::TruncationOracle o0(groups[0], y, x), o1(groups[1], y, x);
      logic::TruncationOracle* oracles[2] = {&o0, &o1};
      for (auto& s : anchors)
        for (auto& t : anchors)
          for (std::size_t alpha = 1; alpha <= 3; ++alpha) {
            const bool engine = rel.leq(s, t, alpha);
            for (int k = 0; k < 2; ++k) {
              ++checks;
              const bool oracle = oracles[k]->query(s, t, alpha);
              if (engine == oracle) continue;
              ++disagree[k][alpha - 1];
              if (alpha == 1 && engine && !oracle) ++level1_true_only_padded;
              if (r.counterexample.is_null())
                r.counterexample = {{"y", logic::to_text(y)}, {"s", to_string(s)}, {"x", logic::to_text(x)},
                                    {"t", to_string(t)}, {"alpha", alpha}, {"m", sizes[k]},
                                    {"bf_logic", engine}, {"truncation", oracle}};
            }
          }
    }
  std::size_t total = 0;
  for (int k = 0; k < 2; ++k) {
    ordered_json row = ordered_json::array();
    for (int a = 0; a < 3; ++a) {
      row.push_back(disagree[k][a]);
      total += disagree[k][a];
    }
    r.stats["disagreements_m" + std::to_string(sizes[k]) + "_by_alpha"] = row;
  }
  r.stats["checks"] = checks;
  r.stats["level1_padded_true_truncation_false"] = level1_true_only_padded;
  r.passed = total == 0;
  r.detail = std::to_string(total) + " disagreements in " + std::to_string(checks) + " checks (" +
             std::to_string(reps.size()) + " cores up to isomorphism, " + std::to_string(anchors.size()) +
             " anchors per side, alpha 1..3, m = 3 and 4)";
  r.limit_seconds = 600;
  return r;
}

std::vector<CoreStructure> cores_up_to(std::size_t n) {
  std::vector<CoreStructure> out;
  for (std::size_t k = 0; k <= n; ++k)
    for (auto& st : logic::all_digraphs(k)) out.push_back(st);
  return out;
}

SuiteResult iso_suite(const SuiteOptions& opt) {
  SuiteResult r;
  const auto cores = cores_up_to(3);
  std::size_t pairs = 0, isomorphic = 0;
  auto check = [&](const CoreStructure& x, const CoreStructure& y) {
    ++pairs;
    const bool mutual = logic::LogicRelation(x, y).leq({}, {}, logic::kLogicStableLevel) &&
                        logic::LogicRelation(y, x).leq({}, {}, logic::kLogicStableLevel);
    const bool brute = logic::iso(x, y);
    isomorphic += brute;
    if (mutual != brute && r.counterexample.is_null())
      r.counterexample = {{"x", logic::to_text(x)}, {"y", logic::to_text(y)}, {"mutual_bf", mutual}, {"iso", brute}};
  };
  for (auto& x : cores)
    for (auto& y : cores) check(x, y);
  // Size 4: half the pairs are a random relabelling, so both answers occur.
  std::mt19937_64 rng(opt.seed);
  const auto lang = Language::digraph();
  for (int i = 0; i < 200; ++i) {
    const auto x = CoreStructure::from_code(lang, 4, rng() & 0xFFFFU);
    CoreStructure y;
    if (i % 2 == 0) {
      std::vector<Nat> perm{0, 1, 2, 3};
      std::shuffle(perm.begin(), perm.end(), rng);
      y = logic::act(perm, x);
    } else {
      y = CoreStructure::from_code(lang, 4, rng() & 0xFFFFU);
    }
    check(x, y);
  }
  r.passed = r.counterexample.is_null();
  r.stats["pairs"] = pairs;
  r.stats["isomorphic_pairs"] = isomorphic;
  r.detail = std::to_string(pairs) + " pairs (" + std::to_string(cores.size()) + "^2 exhaustive + 200 of size 4), " +
             std::to_string(isomorphic) + " isomorphic";
  return r;
}

SuiteResult grading(const SuiteOptions&) {
  SuiteResult r;
  const auto lang = Language::digraph();
  CoreStructure edge(lang, 2);
  edge.add(0, {0, 1});
  CoreStructure both(lang, 5);
  both.add(0, {0, 1});
  both.add(0, {2, 3});
  both.add(0, {3, 4});
  both.add(0, {4, 2});
  const bool l1 = logic::bf_logic(edge, {}, both, {}, 1);
  const bool l2 = logic::bf_logic(edge, {}, both, {}, 2);
  r.stats["alpha1"] = l1;
  r.stats["alpha2"] = l2;
  r.passed = l1 && !l2;
  if (!r.passed) r.counterexample = {{"alpha1", l1}, {"alpha2", l2}};
  r.detail = std::string("edge vs edge+triangle: alpha 1 ") + (l1 ? "true" : "false") + ", alpha 2 " +
             (l2 ? "true" : "false");
  return r;
}

SuiteResult scott(const SuiteOptions&) {
  SuiteResult r;
  const auto xs = cores_up_to(3);
  const auto ys = cores_up_to(4);
  const auto lang = Language::digraph();
  std::size_t evals = 0;
  for (auto& x : xs) {
    const logic::CompiledFormula sigma(logic::scott_sentence(x), lang);
    for (auto& y : ys) {
      ++evals;
      const bool sat = sigma.eval_padded(y, {});
      const bool same = logic::iso(x, y);
      if (sat != same && r.counterexample.is_null())
        r.counterexample = {{"x", logic::to_text(x)}, {"y", logic::to_text(y)}, {"satisfies", sat}, {"iso", same}};
    }
  }
  r.passed = r.counterexample.is_null();
  r.stats["sentences"] = xs.size();
  r.stats["structures"] = ys.size();
  r.stats["evaluations"] = evals;
  r.detail = std::to_string(evals) + " evaluations (" + std::to_string(xs.size()) + " sentences x " +
             std::to_string(ys.size()) + " structures of size <= 4)";
  return r;
}

SuiteResult lopez_escobar(const SuiteOptions&) {
  SuiteResult r;
  const auto lang = Language::digraph();
  const auto trunc = logic::full_truncation(lang, logic::make_symmetric_group(2));
  const auto& inst = trunc.inst;
  const auto np = trunc.structures.size();
  std::vector<PointSet> orbits;
  std::vector<std::size_t> rep;
  {
    PointSet covered(np);
    for (std::size_t p = 0; p < np; ++p)
      if (!covered.test(p)) {
        orbits.push_back(inst.orbit(p));
        rep.push_back(p);
        covered |= orbits.back();
      }
  }
  std::vector<logic::Formula> pool = logic::formula_pool(lang);
  for (auto& st : logic::digraph_iso_representatives(2)) pool.push_back(logic::scott_sentence(st));
  std::set<std::string> base_sets;  // as bit strings
  for (auto& f : pool) {
    const auto b = logic::b_sigma(trunc, f);
    if (!is_invariant(inst, b) && r.counterexample.is_null())
      r.counterexample = {{"sentence", logic::to_string(f)}, {"reason", "B_sigma not invariant"}};
    std::string bits;
    boost::to_string(b, bits);
    base_sets.insert(bits);
  }
  std::size_t covered = 0, base_covered = 0;
  const std::size_t total = std::size_t{1} << orbits.size();
  for (std::size_t mask = 0; mask < total; ++mask) {
    PointSet target(np);
    std::vector<logic::Formula> parts;
    for (std::size_t o = 0; o < orbits.size(); ++o)
      if (mask >> o & 1U) {
        target |= orbits[o];
        parts.push_back(logic::scott_sentence(trunc.structures[rep[o]]));
      }
    std::string bits;
    boost::to_string(target, bits);
    base_covered += base_sets.count(bits);
    if (logic::b_sigma(trunc, logic::Formula::any_of(std::move(parts))) == target)
      ++covered;
    else if (r.counterexample.is_null())
      r.counterexample = {{"orbit_mask", mask}, {"reason", "disjunction of orbit Scott sentences misses the set"}};
  }
  r.passed = r.counterexample.is_null() && covered == total;
  r.stats["points"] = np;
  r.stats["orbits"] = orbits.size();
  r.stats["invariant_sets"] = total;
  r.stats["pool_size"] = pool.size();
  r.stats["covered_by_base_pool"] = base_covered;
  r.stats["covered_with_disjunctions"] = covered;
  r.detail = std::to_string(covered) + "/" + std::to_string(total) + " invariant sets defined (" +
             std::to_string(base_covered) + " by the base pool of " + std::to_string(pool.size()) + " sentences)";
  r.limit_seconds = 60;
  return r;
}

SuiteResult nadel(const SuiteOptions& opt) {
  SuiteResult r;
  const auto lang = Language::digraph();
  const auto trunc = logic::full_truncation(lang, logic::make_symmetric_group(2), logic::TruncationBasis::Cylinders);
  const auto tables = compute_bf_tables(trunc.inst);
  std::size_t runs = 0, reached3 = 0, reached4 = 0, pi_checks = 0;
  for (std::size_t fam = 0; fam < 500; ++fam) {
    const auto codes = random_codes(trunc.inst.space(), 3, 8, opt.seed * 100003 + fam);
    for (auto& x : trunc.structures)
      for (auto& y : trunc.structures)
        for (std::size_t alpha = 1; alpha <= 2; ++alpha) {
          ++runs;
          const auto rep = logic::nadel_shadow_check(trunc, tables, x, y, codes, alpha);
          reached3 += rep.same_sets;
          reached4 += rep.checked;
          pi_checks += rep.pi_sets;
          if (!rep.passed() && r.counterexample.is_null())
            r.counterexample = {{"family", fam}, {"x", logic::to_text(x)}, {"y", logic::to_text(y)}, {"alpha", alpha},
                                {"code", to_string(codes[*rep.failure])}};
        }
  }
  r.passed = r.counterexample.is_null();
  r.stats["runs"] = runs;
  r.stats["same_invariant_sets"] = reached3;
  r.stats["reached_stage4"] = reached4;
  r.stats["pi_set_checks"] = pi_checks;
  r.detail = std::to_string(runs) + " runs, " + std::to_string(reached4) + " reached stage 4, " +
             std::to_string(pi_checks) + " set memberships checked";
  return r;
}

const std::vector<std::pair<std::string, std::function<SuiteResult(const SuiteOptions&)>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<SuiteResult(const SuiteOptions&)>>> suites = {
      {"hierarchy-laws", hierarchy_laws}, {"hset-equivalence", hset_equivalence},
      {"lemma-b", lemma_b},               {"vaught", vaught},
      {"codability", codability_suite},   {"logic-oracle", logic_oracle},
      {"iso", iso_suite},                 {"grading", grading},
      {"scott", scott},                   {"lopez-escobar", lopez_escobar},
      {"nadel", nadel},
  };
  return suites;
}

} // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (auto& [n, f] : registry()) out.push_back(n);
  return out;
}

SuiteResult run_suite(std::string_view name, const SuiteOptions& options) {
  for (auto& [n, f] : registry())
    if (n == name) {
      const auto start = std::chrono::steady_clock::now();
      SuiteResult r = f(options);
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      r.name = n;
      if (r.limit_seconds && r.seconds > *r.limit_seconds) {
        r.passed = false;
        r.detail += "; exceeded the time limit";
      }
      return r;
    }
  throw InputError("unknown suite '" + std::string(name) + "'");
}

} // namespace bfh
