// Command-line surface for the provability-logic workbench: formula/ordinal
// parsing, Hilbert proof checking and construction, Muenchhausen-style level
// operators over finite GL frames, and the property suites.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "glpwb/derive.hpp"
#include "glpwb/frame.hpp"
#include "glpwb/muench.hpp"
#include "glpwb/parallel.hpp"
#include "glpwb/proof.hpp"
#include "glpwb/uniformpp.hpp"

namespace {

using nlohmann::ordered_json;
using namespace glpwb;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct FrameSource {
  std::string label;
  Frame frame;
};

struct RunConfig {
  std::string frame_path;
  std::string random_spec;  // "count,size,seed"
  std::string grid_spec = "0,1,2";
  std::string mode = "single";
  int max_len = 0;  // 0 = saturate
  std::string oracles = "full";
  std::string out_path;
  std::uint64_t draws = 1000;
};

std::vector<FrameSource> frames_from_config(const RunConfig& cfg) {
  std::vector<FrameSource> out;
  if (!cfg.frame_path.empty() && !cfg.random_spec.empty())
    throw std::invalid_argument("give either --frame or --random, not both");
  if (!cfg.frame_path.empty()) {
    Frame f = load_frame_file(cfg.frame_path);
    out.push_back({"file:" + cfg.frame_path, std::move(f)});
    return out;
  }
  if (cfg.random_spec.empty())
    throw std::invalid_argument("a frame source is required (--frame or --random count,size,seed)");
  std::uint64_t count = 0, size = 0, seed = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(cfg.random_spec);
  if (!(in >> count >> c1 >> size >> c2 >> seed) || c1 != ',' || c2 != ',' || count == 0 ||
      size == 0 || size > Frame::kMaxWorlds)
    throw std::invalid_argument("--random expects count,size,seed with 1 <= size <= 16");
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t s = seed + i;
    const int n = static_cast<int>(1 + (s % size));
    out.push_back({"seed:" + std::to_string(s), random_frame(s, n)});
  }
  return out;
}

OracleUniverse universe_from_config(const RunConfig& cfg, const Frame& f) {
  if (cfg.oracles == "full") return OracleUniverse::full(f);
  std::vector<Elem> elems;
  std::istringstream in(cfg.oracles);
  std::string tok;
  while (std::getline(in, tok, ',')) elems.push_back(static_cast<Elem>(std::stoul(tok, nullptr, 0)));
  if (elems.empty()) throw std::invalid_argument("--oracles needs 'full' or element masks");
  return OracleUniverse::listed(std::move(elems));
}

LevelledPredicate predicate_from_config(const RunConfig& cfg, const Frame& f,
                                        const OrdinalGrid& grid) {
  const OracleUniverse u = universe_from_config(cfg, f);
  if (cfg.mode == "single") return eval_single(f, grid, u);
  if (cfg.mode == "vector") {
    const int len = cfg.max_len > 0 ? cfg.max_len : saturating_len(f);
    return eval_vector(f, grid, u, len);
  }
  throw std::invalid_argument("--mode must be single or vector");
}

void emit(const RunConfig& cfg, const ordered_json& report) {
  const std::string text = report.dump(2) + "\n";
  if (cfg.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + cfg.out_path);
    out << text;
  }
}

std::uint64_t fnv1a(const std::vector<Elem>& table) {
  std::uint64_t h = 1469598103934665603ull;
  for (Elem e : table) {
    for (int b = 0; b < 4; ++b) {
      h ^= (e >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  return h;
}

ordered_json law_record_json(const LawRecord& r) {
  ordered_json j;
  j["law"] = r.law;
  j["mode"] = r.mode == Mode::kSingle ? "single" : "vector";
  j["level"] = r.level;
  j["asserted"] = r.asserted;
  j["checked"] = r.checked;
  j["violations"] = r.violations;
  j["holds"] = r.holds();
  if (r.witness) {
    j["witness_x"] = r.witness->first;
    j["witness_y"] = r.witness->second;
  } else {
    j["witness_x"] = nullptr;
    j["witness_y"] = nullptr;
  }
  return j;
}

ordered_json config_json(const RunConfig& cfg) {
  ordered_json j;
  if (!cfg.frame_path.empty()) j["frame"] = cfg.frame_path;
  if (!cfg.random_spec.empty()) j["random"] = cfg.random_spec;
  j["grid"] = cfg.grid_spec;
  j["mode"] = cfg.mode;
  j["max_len"] = cfg.max_len;
  j["oracles"] = cfg.oracles;
  return j;
}

int cmd_parse(const std::string& text, bool as_ordinal) {
  try {
    if (as_ordinal) {
      const Ordinal o = Ordinal::parse(text);
      std::cout << o.str() << "\n";
      std::cout << "limit: " << (o.is_limit() ? "yes" : "no") << "\n";
      std::cout << "successor: " << o.succ().str() << "\n";
      return kExitOk;
    }
    const Fptr f = parse_formula(text);
    std::cout << print_formula(f) << "\n";
    std::string sig;
    for (const Ordinal& o : signature(f)) {
      if (!sig.empty()) sig += ",";
      sig += o.str();
    }
    std::cout << "signature: {" << sig << "}\n";
    return kExitOk;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_check_proof(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return kExitUsage;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  Proof proof;
  try {
    proof = parse_proof(buf.str());
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (const auto err = check_proof(proof)) {
    std::cerr << "line " << err->line << ": " << err->reason << "\n";
    return kExitFail;
  }
  std::cout << "ok: " << print_formula(proof.conclusion()) << "\n";
  return kExitOk;
}

int cmd_derive(const std::string& lemma, const std::string& alpha_s, const std::string& beta_s,
               const std::string& phi_s, const std::string& psi_s, const std::string& out_path) {
  try {
    Proof proof;
    if (lemma == "cons-provable") {
      proof = derive_cons_provable(Ordinal::parse(alpha_s), Ordinal::parse(beta_s));
    } else if (lemma == "cons-absorption") {
      proof = derive_cons_absorption(Ordinal::parse(alpha_s), Ordinal::parse(beta_s),
                                     parse_formula(phi_s));
    } else if (lemma == "box-disjunction") {
      proof = derive_box_disjunction(Ordinal::parse(alpha_s), Ordinal::parse(beta_s),
                                     parse_formula(phi_s), parse_formula(psi_s));
    } else if (lemma == "blacksquare-lob") {
      proof = derive_blacksquare_lob(parse_formula(phi_s));
    } else {
      std::cerr << "unknown lemma '" << lemma
                << "' (cons-provable | cons-absorption | box-disjunction | blacksquare-lob)\n";
      return kExitUsage;
    }
    const std::string text = write_proof(proof);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        std::cerr << "cannot open " << out_path << "\n";
        return kExitUsage;
      }
      out << text;
    }
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "derive failed: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_eval(const RunConfig& cfg) {
  const OrdinalGrid grid = OrdinalGrid::parse(cfg.grid_spec);
  const std::vector<FrameSource> frames = frames_from_config(cfg);
  std::vector<ordered_json> per_frame(frames.size());
  parallel_for_indexed(frames.size(), [&](std::size_t i) {
    const Frame& f = frames[i].frame;
    const LevelledPredicate p = predicate_from_config(cfg, f, grid);
    ordered_json fj;
    fj["source"] = frames[i].label;
    fj["worlds"] = f.worlds();
    auto edges = ordered_json::array();
    for (const auto& [a, b] : f.edges()) edges.push_back({a, b});
    fj["edges"] = std::move(edges);
    auto levels = ordered_json::array();
    for (std::size_t lev = 0; lev < grid.size(); ++lev) {
      ordered_json lj;
      lj["level"] = grid.points[lev].str();
      if (f.worlds() <= 4) {
        lj["table"] = p.table[lev];
      } else {
        char buf[32];
        std::snprintf(buf, sizeof buf, "fnv64:%016llx",
                      static_cast<unsigned long long>(fnv1a(p.table[lev])));
        lj["digest"] = buf;
      }
      lj["diamond_top"] = p.dia(lev, f.full());  // the consistency element <level>T
      levels.push_back(std::move(lj));
    }
    fj["levels"] = std::move(levels);
    if (p.stabilization)
      fj["stabilization"] = grid.points[*p.stabilization].str();
    else
      fj["stabilization"] = nullptr;
    per_frame[i] = std::move(fj);
  });
  ordered_json report;
  report["command"] = "eval";
  report["config"] = config_json(cfg);
  report["frames"] = per_frame;
  emit(cfg, report);
  std::cerr << "eval: " << frames.size() << " frame(s), grid {" << grid.str() << "}, "
            << cfg.mode << " mode\n";
  return kExitOk;
}

int cmd_explore(const RunConfig& cfg) {
  const OrdinalGrid grid = OrdinalGrid::parse(cfg.grid_spec);
  const std::vector<FrameSource> frames = frames_from_config(cfg);
  std::vector<ordered_json> per_frame(frames.size());
  parallel_for_indexed(frames.size(), [&](std::size_t i) {
    const Frame& f = frames[i].frame;
    const LevelledPredicate p = eval_single(f, grid, universe_from_config(cfg, f));
    const ClosureReport rep = explore_closure_failures(f, p);
    ordered_json fj;
    fj["source"] = frames[i].label;
    fj["worlds"] = f.worlds();
    fj["checked"] = rep.checked;
    ordered_json counts;
    for (const auto& [law, count] : rep.counts) counts[law] = count;
    fj["violation_counts"] = std::move(counts);
    auto samples = ordered_json::array();
    for (const ClosureFinding& s : rep.samples) {
      ordered_json sj;
      sj["law"] = s.law;
      sj["level"] = s.level;
      sj["x"] = s.x;
      sj["y"] = s.y;
      samples.push_back(std::move(sj));
    }
    fj["samples"] = std::move(samples);
    per_frame[i] = std::move(fj);
  });
  ordered_json report;
  report["command"] = "explore";
  report["config"] = config_json(cfg);
  report["frames"] = per_frame;
  emit(cfg, report);
  std::uint64_t total = 0;
  for (const auto& fj : per_frame)
    for (const auto& [law, count] : fj.at("violation_counts").items())
      total += count.get<std::uint64_t>();
  std::cerr << "explore: " << frames.size() << " frame(s), " << total
            << " closure finding(s) recorded\n";
  return kExitOk;
}

int cmd_suite(const std::string& name, RunConfig cfg) {
  // The soundness suites fix their own mode.
  if (name == "vector-soundness") cfg.mode = "vector";
  if (name == "single-asserted" || name == "single-exploratory") cfg.mode = "single";
  const OrdinalGrid grid = OrdinalGrid::parse(cfg.grid_spec);
  const std::vector<FrameSource> frames = frames_from_config(cfg);
  std::vector<ordered_json> per_frame(frames.size());
  std::vector<char> frame_ok(frames.size(), 1);
  const bool exploratory = name == "single-exploratory";

  auto soundness_frame = [&](std::size_t i) {
    const Frame& f = frames[i].frame;
    const LevelledPredicate p = predicate_from_config(cfg, f, grid);
    const SoundnessReport rep = soundness_suite(p, /*seed=*/1 + i);
    ordered_json fj;
    fj["source"] = frames[i].label;
    fj["worlds"] = f.worlds();
    auto records = ordered_json::array();
    for (const LawRecord& r : rep.records) records.push_back(law_record_json(r));
    fj["records"] = std::move(records);
    per_frame[i] = std::move(fj);
    frame_ok[i] = rep.asserted_ok() ? 1 : 0;
  };

  if (name == "vector-soundness" || name == "single-asserted" || name == "single-exploratory") {
    parallel_for_indexed(frames.size(), soundness_frame);
  } else if (name == "reflexive-induction") {
    parallel_for_indexed(frames.size(), [&](std::size_t i) {
      const Frame& f = frames[i].frame;
      std::mt19937_64 rng(1000 + i);
      std::uint64_t failures = 0;
      for (std::uint64_t d = 0; d < cfg.draws; ++d) {
        std::vector<Elem> phi(grid.size());
        for (Elem& e : phi) e = static_cast<Elem>(rng()) & f.full();
        if (!reflexive_induction_check(f, grid, phi)) ++failures;
      }
      ordered_json fj;
      fj["source"] = frames[i].label;
      fj["worlds"] = f.worlds();
      fj["draws"] = cfg.draws;
      fj["failures"] = failures;
      per_frame[i] = std::move(fj);
      frame_ok[i] = failures == 0 ? 1 : 0;
    });
  } else if (name == "boxbox-equivalence") {
    parallel_for_indexed(frames.size(), [&](std::size_t i) {
      const Frame& f = frames[i].frame;
      const OracleUniverse u = universe_from_config(cfg, f);
      const LevelledPredicate p = eval_single(f, grid, u);
      std::uint64_t mismatches = 0;
      for (std::size_t lev = 0; lev < grid.size(); ++lev) {
        // The finite-level operator matches the grid operator exactly when
        // the grid is an initial segment of the naturals up to this point.
        if (!grid.points[lev].is_nat() || grid.points[lev].nat_value() != lev) continue;
        if (finite_level_boxbox(f, static_cast<int>(lev), u) != p.table[lev]) ++mismatches;
      }
      ordered_json fj;
      fj["source"] = frames[i].label;
      fj["worlds"] = f.worlds();
      fj["levels"] = grid.size();
      fj["mismatches"] = mismatches;
      per_frame[i] = std::move(fj);
      frame_ok[i] = mismatches == 0 ? 1 : 0;
    });
  } else if (name == "imc-uniqueness") {
    parallel_for_indexed(frames.size(), [&](std::size_t i) {
      const Frame& f = frames[i].frame;
      const ImcResult res = build_imc(f, grid, universe_from_config(cfg, f));
      ordered_json fj;
      fj["source"] = frames[i].label;
      fj["worlds"] = f.worlds();
      fj["verified"] = res.verified;
      fj["unique_per_world"] = res.unique_per_world;
      fj["candidates_checked"] = res.candidates_checked;
      per_frame[i] = std::move(fj);
      frame_ok[i] = (res.verified && res.unique_per_world) ? 1 : 0;
    });
  } else if (name == "uniform-pp") {
    parallel_for_indexed(frames.size(), [&](std::size_t i) {
      const Frame& f = frames[i].frame;
      const PiContext ctx = PiContext::make(f, grid, universe_from_config(cfg, f));
      std::uint64_t agreement_violations = 0;
      for (const Ordinal& lam : grid.points) {
        for (Elem phi = 0;; ++phi) {
          const bool cert = exists_certificate(lam, phi, ctx).has_value();
          if (cert != global_provable(lam, phi, ctx)) ++agreement_violations;
          if (phi == f.full()) break;
        }
      }
      const UniformReport norm = normalization_checks(ctx);
      const UniformReport props = uprov_property_suite(ctx);
      ordered_json fj;
      fj["source"] = frames[i].label;
      fj["worlds"] = f.worlds();
      fj["certificate_agreement_violations"] = agreement_violations;
      auto checks = ordered_json::array();
      for (const auto* rep : {&norm, &props}) {
        for (const CheckCounter& c : rep->checks) {
          ordered_json cj;
          cj["check"] = c.name;
          cj["checked"] = c.checked;
          cj["violations"] = c.violations;
          cj["out_of_scope"] = c.out_of_scope;
          checks.push_back(std::move(cj));
        }
      }
      fj["checks"] = std::move(checks);
      per_frame[i] = std::move(fj);
      frame_ok[i] = (agreement_violations == 0 && norm.ok() && props.ok()) ? 1 : 0;
    });
  } else if (name == "gl-laws") {
    parallel_for_indexed(frames.size(), [&](std::size_t i) {
      const Frame& f = frames[i].frame;
      const GlLawReport rep = check_gl_laws(f);
      ordered_json fj;
      fj["source"] = frames[i].label;
      fj["worlds"] = f.worlds();
      fj["checked"] = rep.checked;
      fj["violations"] = rep.violations.size();
      per_frame[i] = std::move(fj);
      frame_ok[i] = rep.ok() ? 1 : 0;
    });
  } else {
    std::cerr << "unknown suite '" << name
              << "' (vector-soundness | single-asserted | single-exploratory | "
                 "reflexive-induction | boxbox-equivalence | imc-uniqueness | uniform-pp | "
                 "gl-laws)\n";
    return kExitUsage;
  }

  bool all_ok = true;
  for (char ok : frame_ok) all_ok = all_ok && ok;
  const bool exit_ok = exploratory || all_ok;

  ordered_json report;
  report["command"] = "suite";
  report["suite"] = name;
  report["exploratory"] = exploratory;
  report["config"] = config_json(cfg);
  report["asserted_ok"] = all_ok;
  report["frames"] = per_frame;
  emit(cfg, report);
  std::cerr << "suite " << name << ": " << frames.size() << " frame(s), asserted checks "
            << (all_ok ? "ok" : "FAILED") << (exploratory ? " (exploratory run)" : "") << "\n";
  return exit_ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for transfinite provability logic over finite GL frames"};
  app.require_subcommand(1);

  std::string parse_text;
  bool parse_ordinal = false;
  auto* parse_cmd = app.add_subcommand("parse", "Parse and reprint a formula (or ordinal)");
  parse_cmd->add_option("text", parse_text, "formula or ordinal text")->required();
  parse_cmd->add_flag("--ordinal", parse_ordinal, "parse as an ordinal");

  std::string proof_path;
  auto* check_cmd = app.add_subcommand("check-proof", "Check a Hilbert proof file");
  check_cmd->add_option("path", proof_path, "proof file")->required();

  std::string lemma, alpha_s = "1", beta_s = "0", phi_s = "p", psi_s = "q", derive_out;
  auto* derive_cmd = app.add_subcommand("derive", "Emit a checkable proof of a stock lemma");
  derive_cmd->add_option("lemma", lemma, "cons-provable | cons-absorption | box-disjunction | blacksquare-lob")
      ->required();
  derive_cmd->add_option("--alpha", alpha_s, "ordinal parameter alpha");
  derive_cmd->add_option("--beta", beta_s, "ordinal parameter beta");
  derive_cmd->add_option("--phi", phi_s, "formula parameter phi");
  derive_cmd->add_option("--psi", psi_s, "formula parameter psi");
  derive_cmd->add_option("--out", derive_out, "output path (default stdout)");

  RunConfig eval_cfg;
  auto add_common = [](CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--frame", cfg.frame_path, "frame JSON file");
    cmd->add_option("--random", cfg.random_spec, "random frames: count,size,seed");
    cmd->add_option("--grid", cfg.grid_spec, "grid points, e.g. \"0,1,2,w\"");
    cmd->add_option("--mode", cfg.mode, "single | vector");
    cmd->add_option("--max-len", cfg.max_len, "vector oracle length bound (0 = saturate)");
    cmd->add_option("--oracles", cfg.oracles, "full | comma-separated element masks");
    cmd->add_option("--out", cfg.out_path, "report path (default stdout)");
  };
  auto* eval_cmd = app.add_subcommand("eval", "Compute level operator tables over frames");
  add_common(eval_cmd, eval_cfg);

  std::string suite_name;
  RunConfig suite_cfg;
  auto* suite_cmd = app.add_subcommand("suite", "Run a property suite");
  suite_cmd->add_option("name", suite_name, "suite name")->required();
  add_common(suite_cmd, suite_cfg);
  suite_cmd->add_option("--draws", suite_cfg.draws, "random draws per frame where applicable");

  RunConfig explore_cfg;
  auto* explore_cmd = app.add_subcommand("explore", "Gather single-oracle closure findings");
  add_common(explore_cmd, explore_cfg);

  CLI11_PARSE(app, argc, argv);

  try {
    if (parse_cmd->parsed()) return cmd_parse(parse_text, parse_ordinal);
    if (check_cmd->parsed()) return cmd_check_proof(proof_path);
    if (derive_cmd->parsed()) return cmd_derive(lemma, alpha_s, beta_s, phi_s, psi_s, derive_out);
    if (eval_cmd->parsed()) return cmd_eval(eval_cfg);
    if (suite_cmd->parsed()) return cmd_suite(suite_name, suite_cfg);
    if (explore_cmd->parsed()) return cmd_explore(explore_cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
