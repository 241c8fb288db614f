#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hlab/equivalence.hpp"
#include "hlab/errors.hpp"
#include "hlab/fuzz.hpp"
#include "hlab/herbrand.hpp"
#include "hlab/json_io.hpp"
#include "hlab/sld.hpp"
#include "hlab/syntax.hpp"

namespace {

using namespace hlab;

struct CommandConfig {
  std::string program_path;
  std::string query;
  std::string alphabet;   // symbol list; overrides/extends the directive
  std::string occurring;  // counterexample: the F0 symbol list
  int max_depth = 128;
  std::uint64_t max_nodes = 2'000'000;
  int depth_cap = 3;
  std::string format = "text";
  std::uint64_t seed = 0;
  bool seed_given = false;
  int cases = 100;
  std::string property = "theorem1";
  bool keep_duplicates = false;
  bool record_cases = false;
};

struct Workspace {
  Program program;
  Signature sig;
  Query query;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Effective alphabet: --alphabet > directive > occurring symbols, always
// closed under the symbols occurring in the program and the query.
Workspace load(const CommandConfig& cfg, bool need_query) {
  Workspace w;
  auto [p, sig] = parse_program(read_file(cfg.program_path));
  w.program = std::move(p);
  w.sig = std::move(sig);
  if (!cfg.alphabet.empty()) {
    Signature flag;
    for (const auto& s : parse_symbol_list(cfg.alphabet))
      flag.functions.insert(s);
    for (const auto& s : occurring_symbols(w.program)) flag.functions.insert(s);
    flag.predicates = w.sig.predicates;
    w.sig = flag;
  }
  if (need_query) {
    if (cfg.query.empty()) throw std::runtime_error("missing --query");
    w.query = parse_query(cfg.query);
    for (const auto& s : occurring_symbols(w.query)) w.sig.functions.insert(s);
    for (const auto& s : occurring_predicates(w.query))
      w.sig.predicates.insert(s);
  }
  if (!w.sig.has_constant())
    throw std::runtime_error("alphabet has no constant: empty Herbrand universe");
  return w;
}

Budget budget_of(const CommandConfig& cfg) {
  return Budget{cfg.max_depth, cfg.max_nodes};
}

bool json_out(const CommandConfig& cfg) { return cfg.format == "json"; }

void emit(const CommandConfig& cfg, const json& j, const std::string& text) {
  if (json_out(cfg))
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
}

std::string verdict_line(const std::string& label, const Verdict& v) {
  std::string s = label + ": " + verdict_kind_name(v.kind);
  if (v.holds_up_to) s += " (up to depth " + std::to_string(*v.holds_up_to) + ")";
  if (!v.detail.empty()) s += "  [" + v.detail + "]";
  return s + "\n";
}

int cmd_solve(const CommandConfig& cfg) {
  Workspace w = load(cfg, true);
  SldResult r = sld_answers(w.program, w.query, budget_of(cfg),
                            cfg.keep_duplicates);
  std::ostringstream out;
  for (const auto& a : r.answers)
    out << (a.empty() ? "true" : render_subst(a)) << "\n";
  out << "exhausted: " << (r.exhausted ? "yes" : "no") << "\n";
  emit(cfg, to_json(r), out.str());
  return 0;
}

int cmd_entails(const CommandConfig& cfg) {
  Workspace w = load(cfg, true);
  Verdict v = entails(w.program, w.query, budget_of(cfg));
  emit(cfg, to_json(v), verdict_line("P |= Q", v));
  return v.definite() ? 0 : 1;
}

int cmd_check(const CommandConfig& cfg) {
  Workspace w = load(cfg, true);
  EquivalenceReport r = equivalence_verdict(w.program, w.query, w.sig,
                                            budget_of(cfg), cfg.depth_cap);
  std::ostringstream out;
  out << verdict_line("M_P |= Q", r.model_verdict);
  out << verdict_line("P |= Q", r.entails_verdict);
  out << "conditions: " << (r.conditions.holds ? "hold" : "violated");
  if (r.conditions.cond_a && r.conditions.cond_a_witness)
    out << " (a: " << r.conditions.cond_a_witness->first << "/"
        << r.conditions.cond_a_witness->second << ")";
  else if (r.conditions.cond_b)
    out << " (b: per-atom spare constants)";
  out << "\n";
  emit(cfg, to_json(r), out.str());
  return report_exit_code(r);
}

int cmd_generalize(const CommandConfig& cfg) {
  Workspace w = load(cfg, true);
  GeneralizationResult g = generalize(w.query, w.program);
  std::ostringstream out;
  out << render_query(g.generalized) << "\n";
  out << "rho: " << render_subst(g.rho) << "\n";
  emit(cfg, to_json(g), out.str());
  return 0;
}

int cmd_aliens(const CommandConfig& cfg) {
  Workspace w = load(cfg, true);
  auto aliens = maximal_aliens(w.query, occurring_symbols(w.program));
  std::ostringstream out;
  for (const auto& a : aliens) {
    out << render_term(a.term) << " at";
    for (const auto& p : a.paths) {
      out << " [";
      for (std::size_t i = 0; i < p.size(); ++i)
        out << (i ? "," : "") << p[i];
      out << "]";
    }
    out << "\n";
  }
  emit(cfg, to_json(aliens), out.str());
  return 0;
}

int cmd_model(const CommandConfig& cfg) {
  Workspace w = load(cfg, false);
  ModelApprox m = least_model_upto(w.program, w.sig, cfg.depth_cap);
  std::ostringstream out;
  for (const auto& a : m.atoms) out << render_term(a) << "\n";
  out << "stage: " << m.stage << "\n";
  out << "fixpoint: " << (m.fixpoint_reached ? "yes" : "no") << "\n";
  emit(cfg, to_json(m), out.str());
  return 0;
}

int cmd_counterexample(const CommandConfig& cfg) {
  if (cfg.occurring.empty()) throw std::runtime_error("missing --occurring");
  if (cfg.alphabet.empty()) throw std::runtime_error("missing --alphabet");
  if (cfg.query.empty()) throw std::runtime_error("missing --query");
  SymbolSet f0;
  for (const auto& s : parse_symbol_list(cfg.occurring)) f0.insert(s);
  Signature sig;
  for (const auto& s : parse_symbol_list(cfg.alphabet)) sig.functions.insert(s);
  Query q = parse_query(cfg.query);
  for (const auto& s : occurring_predicates(q)) sig.predicates.insert(s);
  Counterexample c = build_counterexample(f0, sig, q);
  std::ostringstream out;
  out << render_program(c.program);
  out << "witness: " << render_term(c.witness) << "\n";
  out << "extended alphabet: " << render_symbols(c.extended_sig.functions)
      << "\n";
  emit(cfg, to_json(c), out.str());
  return 0;
}

int cmd_fuzz(const CommandConfig& cfg, bool depth_set, bool nodes_set) {
  FuzzConfig fc;
  fc.seed = cfg.seed;
  fc.cases = cfg.cases;
  fc.property = cfg.property;
  if (depth_set) fc.budget.max_depth = cfg.max_depth;
  if (nodes_set) fc.budget.max_nodes = cfg.max_nodes;
  fc.record_cases = cfg.record_cases;
  CampaignReport r = fuzz(fc);
  std::ostringstream out;
  out << "property: " << r.config.property << "\n";
  out << "cases: " << r.cases << "  definite: " << r.definite
      << "  unknown: " << r.unknown << "  violations: " << r.violations
      << "\n";
  for (const auto& c : r.records) {
    if (!c.violation) continue;
    out << "violation seed=" << c.case_seed << " program=" << c.program
        << " query=" << c.query << " note=" << c.note << "\n";
  }
  emit(cfg, to_json(r), out.str());
  return r.violations == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"laboratory for definite-program answers and Herbrand models"};
  app.require_subcommand(1);

  CommandConfig cfg;
  if (const char* env = std::getenv("HERBRAND_LAB_SEED")) {
    cfg.seed = std::strtoull(env, nullptr, 10);
    cfg.seed_given = true;
  }
  if (!cfg.seed_given) cfg.seed = 1;

  auto add_common = [&](CLI::App* sub, bool with_program, bool with_query) {
    if (with_program)
      sub->add_option("--program", cfg.program_path, "program file")
          ->required();
    if (with_query) sub->add_option("--query", cfg.query, "query text");
    sub->add_option("--alphabet", cfg.alphabet,
                    "function symbols, e.g. \"a/0, f/1\"");
    sub->add_option("--depth", cfg.max_depth, "resolution depth budget")
        ->check(CLI::PositiveNumber);
    sub->add_option("--nodes", cfg.max_nodes, "SLD node budget")
        ->check(CLI::PositiveNumber);
    sub->add_option("--depth-cap", cfg.depth_cap, "term depth cap")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* solve = app.add_subcommand("solve", "computed answers for a query");
  add_common(solve, true, true);
  solve->add_flag("--keep-duplicates", cfg.keep_duplicates,
                  "report every derivation's answer");

  auto* entails_cmd = app.add_subcommand("entails", "decide P |= Q");
  add_common(entails_cmd, true, true);

  auto* check = app.add_subcommand(
      "check", "compare model truth with entailment and the conditions");
  add_common(check, true, true);

  auto* gen = app.add_subcommand("generalize", "replace maximal aliens");
  add_common(gen, true, true);

  auto* aliens_cmd = app.add_subcommand("aliens", "list maximal aliens");
  add_common(aliens_cmd, true, true);

  auto* model = app.add_subcommand("model", "bounded least-model iteration");
  add_common(model, true, false);

  auto* cex = app.add_subcommand("counterexample",
                                 "program making the query true in the model "
                                 "but not entailed");
  cex->add_option("--occurring", cfg.occurring, "symbols the program may use")
      ->required();
  cex->add_option("--alphabet", cfg.alphabet, "underlying alphabet")
      ->required();
  cex->add_option("--query", cfg.query, "query text")->required();
  cex->add_option("--format", cfg.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* fz = app.add_subcommand("fuzz", "property campaign");
  fz->add_option("--property", cfg.property, "property name")
      ->check(CLI::IsMember(fuzz_properties()));
  fz->add_option("--cases", cfg.cases, "number of cases")
      ->check(CLI::PositiveNumber);
  fz->add_option("--seed", cfg.seed, "campaign seed");
  fz->add_option("--depth", cfg.max_depth, "resolution depth budget");
  fz->add_option("--nodes", cfg.max_nodes, "SLD node budget");
  fz->add_flag("--record-cases", cfg.record_cases, "keep per-case records");
  fz->add_option("--format", cfg.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(cfg);
    if (entails_cmd->parsed()) return cmd_entails(cfg);
    if (check->parsed()) return cmd_check(cfg);
    if (gen->parsed()) return cmd_generalize(cfg);
    if (aliens_cmd->parsed()) return cmd_aliens(cfg);
    if (model->parsed()) return cmd_model(cfg);
    if (cex->parsed()) return cmd_counterexample(cfg);
    if (fz->parsed())
      return cmd_fuzz(cfg, fz->count("--depth") > 0, fz->count("--nodes") > 0);
  } catch (const hlab::InternalInconsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 3;
  } catch (const hlab::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
