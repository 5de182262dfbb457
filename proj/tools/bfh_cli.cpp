// bfh: command-line front end for the back-and-forth toolkit.

#include "bfh/backforth.hpp"
#include "bfh/borel.hpp"
#include "bfh/corpus.hpp"
#include "bfh/gspace.hpp"
#include "bfh/io.hpp"
#include "bfh/logic/formula.hpp"
#include "bfh/logic/games.hpp"
#include "bfh/logic/logic_bf.hpp"
#include "bfh/logic/nadel.hpp"
#include "bfh/logic/truncation.hpp"
#include "bfh/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::ordered_json;
namespace lg = bfh::logic;

constexpr int kExitUsage = 1;
constexpr int kExitCounterexample = 2;

std::string fnv1a(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct Context {
  ordered_json inputs = ordered_json::object();
  std::string read(const std::string& path) {
    std::string text = bfh::read_file(path);
    inputs[path] = "fnv1a:" + fnv1a(text);
    return text;
  }
  bfh::GSpaceInstance gspace(const std::string& path, const std::string& builtin) {
    if (!builtin.empty()) {
      inputs["builtin:" + builtin] = "builtin";
      return bfh::named_instance(builtin);
    }
    if (path.empty()) throw bfh::InputError("a G-space file or --space is required");
    return bfh::parse_gspace(read(path), std::filesystem::path(path).parent_path());
  }
  lg::CoreStructure structure(const std::string& path) { return lg::parse_structure(read(path)); }
};

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

ordered_json names(const bfh::FinTopSpace& sp, const bfh::PointSet& s) {
  ordered_json out = ordered_json::array();
  for (auto p : bfh::members(s)) out.push_back(sp.name(p));
  return out;
}

bfh::PointSet parse_points(const bfh::FinTopSpace& sp, const std::string& list) {
  bfh::PointSet s(sp.size());
  std::stringstream in(list);
  for (std::string tok; std::getline(in, tok, ',');) {
    if (tok.empty()) continue;
    bool found = false;
    for (std::size_t p = 0; p < sp.size() && !found; ++p)
      if (sp.name(p) == tok) {
        s.set(p);
        found = true;
      }
    if (!found) throw bfh::InputError("unknown point '" + tok + "'");
  }
  return s;
}

std::vector<bfh::BorelCode> parse_codes(const std::string& list) {
  std::vector<bfh::BorelCode> out;
  std::stringstream in(list);
  for (std::string tok; std::getline(in, tok, ';');)
    if (!tok.empty()) out.push_back(bfh::parse_code(tok));
  return out;
}

void render_text(std::ostream& os, const ordered_json& j, const std::string& indent = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = it.value();
    if (v.is_string()) {
      os << indent << it.key() << ": " << v.get<std::string>() << '\n';
    } else if (v.is_array() && !v.empty() && v.front().is_string() && it.key() == "tables") {
      os << indent << it.key() << ":\n";
      for (auto& l : v) os << indent << "  " << l.get<std::string>() << '\n';
    } else if (v.is_object() && !v.empty()) {
      os << indent << it.key() << ":\n";
      render_text(os, v, indent + "  ");
    } else {
      os << indent << it.key() << ": " << v.dump() << '\n';
    }
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded back-and-forth relations on finite G-spaces and padded structures"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  std::string out_path, format = "json";
  bool timing = false;
  app.add_option("--seed", seed, "Seed for sampled inputs")->capture_default_str();
  app.add_option("--out", out_path, "Write the report to a file instead of stdout");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_flag("--timing", timing, "Include wall-clock timing in the report");
  app.fallthrough();

  std::string gfile, builtin, ypath, xpath, formula_text, set_text, sanchor, tanchor, point, codes_text, suite;
  std::size_t alpha = 1, hset_levels = 0, hindex = 0, trunc_m = 2, random_count = 8;

  auto* bf = app.add_subcommand("bf", "Compute the hierarchy tables and the stabilization rank");
  auto* hset = app.add_subcommand("hset", "Build the tables through the relation algebra and diff them");
  auto* vaught = app.add_subcommand("vaught", "Vaught transform of a set");
  auto* codab = app.add_subcommand("codability", "Coding relations of a point, with round-trip check");
  for (auto* c : {bf, hset, vaught, codab}) {
    c->add_option("gspace", gfile, "G-space file");
    c->add_option("--space", builtin, "Built-in instance instead of a file");
  }
  hset->add_option("--levels", hset_levels, "Levels to build (default: up to stabilization)");
  vaught->add_option("--set", set_text, "Comma-separated point names")->required();
  vaught->add_option("--h-index", hindex, "Group basis index of H")->capture_default_str();
  codab->add_option("--point", point, "Point name (default: the first point)");

  auto* iso = app.add_subcommand("iso", "Isomorphism of two padded structures");
  iso->add_option("a", xpath, "Structure file")->required();
  iso->add_option("b", ypath, "Structure file")->required();
  auto* eval = app.add_subcommand("eval", "Evaluate a sentence on a padded structure");
  eval->add_option("structure", xpath, "Structure file")->required();
  eval->add_option("formula", formula_text, "Formula text")->required();
  auto* scott = app.add_subcommand("scott", "Scott sentence of a structure");
  scott->add_option("structure", xpath, "Structure file")->required();
  auto* lbf = app.add_subcommand("logic-bf", "(y, N_s) <=_alpha (x, N_t) for the logic action");
  lbf->add_option("y", ypath, "Structure file")->required();
  lbf->add_option("x", xpath, "Structure file")->required();
  lbf->add_option("--s", sanchor, "Anchor of y, as i:j,i:j");
  lbf->add_option("--t", tanchor, "Anchor of x, as i:j,i:j");
  lbf->add_option("--alpha", alpha, "Level of the hierarchy")->capture_default_str();
  auto* nadel = app.add_subcommand("nadel", "Shadow pipeline on a full truncation");
  nadel->add_option("x", xpath, "Structure file")->required();
  nadel->add_option("y", ypath, "Structure file")->required();
  nadel->add_option("--codes", codes_text, "Borel codes separated by ';' (default: random codes)");
  nadel->add_option("--random", random_count, "Number of random codes when --codes is absent")->capture_default_str();
  nadel->add_option("--alpha", alpha, "Level of the hierarchy")->capture_default_str();
  nadel->add_option("--m", trunc_m, "Truncation size")->capture_default_str();
  auto* verify = app.add_subcommand("verify", "Run an acceptance suite");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(bfh::suite_names()));
  verify->add_option("--space", builtin, "Built-in instance replacing the random corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  ordered_json report;
  ordered_json command = ordered_json::array();
  for (int i = 1; i < argc; ++i) command.push_back(argv[i]);
  report["command"] = command;
  report["seed"] = seed;
  Context ctx;
  ordered_json result = ordered_json::object();
  int status = 0;
  const auto start = std::chrono::steady_clock::now();

  try {
    if (*bf) {
      const auto inst = ctx.gspace(gfile, builtin);
      const auto t = bfh::compute_bf_tables(inst);
      result["levels"] = t.stab();
      result["stabilized"] = t.stabilized;
      result["repeat_of"] = t.repeat_of;
      if (t.stabilized) result["stabilization_rank"] = bfh::stabilization_rank(t);
      result["anti_monotone"] = bfh::anti_monotone(t);
      std::ostringstream dump;
      bfh::dump_tables(dump, inst, t);
      result["tables"] = lines_of(dump.str());
    } else if (*hset) {
      const auto inst = ctx.gspace(gfile, builtin);
      const auto t = bfh::compute_bf_tables(inst);
      const auto h = bfh::h_set_algebra(inst, hset_levels ? hset_levels : t.stab());
      ordered_json diff = ordered_json::array();
      bool equal = true;
      for (std::size_t a = 1; a <= h.stab(); ++a) {
        const bool same = h.level(a) == t.level(a);
        equal &= same;
        diff.push_back({{"level", a}, {"equal", same}, {"entries", h.level(a).count()}});
      }
      result["levels"] = diff;
      result["equal"] = equal;
      if (!equal) status = kExitCounterexample;
    } else if (*vaught) {
      const auto inst = ctx.gspace(gfile, builtin);
      if (hindex >= inst.group().basis_size()) throw bfh::InputError("--h-index is not a group basis index");
      const auto b = parse_points(inst.space(), set_text);
      const auto star = bfh::vaught_star(inst, b, inst.group().basis(hindex));
      result["set"] = names(inst.space(), b);
      result["transform"] = names(inst.space(), star);
      result["invariant"] = bfh::is_invariant(inst, b);
    } else if (*codab) {
      const auto inst = ctx.gspace(gfile, builtin);
      std::size_t x = 0;
      if (!point.empty()) x = bfh::members(parse_points(inst.space(), point)).at(0);
      const auto rec = bfh::codability(inst, x);
      result["point"] = inst.space().name(x);
      result["r_x"] = rec.r_x;
      result["r_o"] = rec.r_o;
      result["r_i"] = rec.r_i;
      result["r_a"] = rec.r_a;
      if (auto m = bfh::verify_reconstruction(inst, rec)) {
        result["verified"] = false;
        report["counterexample"] = {{"g", m->g}, {"x", m->x}, {"j", m->j}, {"decoded", m->decoded}, {"actual", m->actual}};
        status = kExitCounterexample;
      } else {
        result["verified"] = true;
      }
    } else if (*iso) {
      result["result"] = lg::iso(ctx.structure(xpath), ctx.structure(ypath));
    } else if (*eval) {
      const auto st = ctx.structure(xpath);
      const auto f = lg::parse_formula(formula_text);
      result["formula"] = lg::to_string(f);
      result["quantifier_rank"] = f.quantifier_rank();
      result["result"] = lg::eval_formula(st, f);
    } else if (*scott) {
      const auto f = lg::scott_sentence(ctx.structure(xpath));
      result["sentence"] = lg::to_string(f);
      result["quantifier_rank"] = f.quantifier_rank();
    } else if (*lbf) {
      const auto y = ctx.structure(ypath);
      const auto x = ctx.structure(xpath);
      result["alpha"] = alpha;
      result["result"] = lg::bf_logic(y, lg::parse_injection(sanchor), x, lg::parse_injection(tanchor), alpha);
    } else if (*nadel) {
      const auto x = ctx.structure(xpath);
      const auto y = ctx.structure(ypath);
      const auto trunc = lg::full_truncation(x.language(), lg::make_symmetric_group(trunc_m), lg::TruncationBasis::Cylinders);
      const auto tables = bfh::compute_bf_tables(trunc.inst);
      const auto codes = codes_text.empty() ? bfh::random_codes(trunc.inst.space(), 3, random_count, seed)
                                            : parse_codes(codes_text);
      const auto r = lg::nadel_shadow_check(trunc, tables, x, y, codes, alpha);
      ordered_json code_text = ordered_json::array();
      for (auto& c : codes) code_text.push_back(bfh::to_string(c));
      result["codes"] = code_text;
      result["invariant_codes"] = r.invariant;
      result["same_sets"] = r.same_sets;
      if (r.separating) result["separating_code"] = *r.separating;
      result["related"] = r.related;
      result["stage4_checked"] = r.checked;
      result["pi_sets"] = r.pi_sets;
      result["passed"] = r.passed();
      if (!r.passed()) {
        report["counterexample"] = {{"code", bfh::to_string(codes[*r.failure])}};
        status = kExitCounterexample;
      }
    } else if (*verify) {
      bfh::SuiteOptions opt;
      opt.seed = seed;
      if (!builtin.empty()) opt.space = builtin;
      const auto r = bfh::run_suite(suite, opt);
      result["suite"] = r.name;
      result["passed"] = r.passed;
      result["detail"] = r.detail;
      result["stats"] = r.stats;
      if (r.limit_seconds) result["limit_seconds"] = *r.limit_seconds;
      if (!r.counterexample.is_null()) report["counterexample"] = r.counterexample;
      if (timing) report["suite_seconds"] = r.seconds;
      if (!r.passed) status = kExitCounterexample;
    }
  } catch (const bfh::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  report["inputs"] = ctx.inputs;
  report["result"] = result;
  if (timing)
    report["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
  report["exit"] = status;

  std::ostringstream text;
  if (format == "json")
    text << report.dump(2) << '\n';
  else
    render_text(text, report);
  if (out_path.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return kExitUsage;
    }
    out << text.str();
  }
  return status;
}
