#include "hlab/fuzz.hpp"

#include <algorithm>

#include "hlab/alien.hpp"
#include "hlab/errors.hpp"
#include "hlab/herbrand.hpp"

namespace hlab {

TermPtr random_term(Rng& rng, const std::vector<Symbol>& functions,
                    const std::vector<std::string>& vars, int depth) {
  std::vector<Symbol> leaves;
  for (const auto& s : functions)
    if (s.second == 0) leaves.push_back(s);
  auto leaf = [&]() -> TermPtr {
    int total = static_cast<int>(leaves.size() + vars.size());
    int pick = rng.below(total);
    if (pick < static_cast<int>(vars.size())) return Term::var(vars[pick]);
    return Term::constant(leaves[pick - vars.size()].first);
  };
  if (depth <= 0 || rng.chance(0.45)) return leaf();
  const Symbol& f = functions[rng.below(static_cast<int>(functions.size()))];
  if (f.second == 0) return Term::constant(f.first);
  std::vector<TermPtr> args;
  for (int i = 0; i < f.second; ++i)
    args.push_back(random_term(rng, functions, vars, depth - 1));
  return Term::make(f.first, std::move(args));
}

GeneratedProgram random_program(Rng& rng, const GeneratorOptions& opts) {
  GeneratedProgram gp;
  std::vector<Symbol> pool{{"a", 0}, {"b", 0}, {"f", 1}};
  if (opts.allow_binary) pool.push_back({"g", 2});
  std::vector<Symbol> fns{{"a", 0}};  // keep the universe nonempty
  for (const auto& s : pool)
    if (s != Symbol{"a", 0} && rng.chance(0.6)) fns.push_back(s);
  gp.sig.functions.insert(fns.begin(), fns.end());

  // predicate order doubles as the acyclicity order
  gp.predicates = {{"p", 1 + rng.below(2)}, {"q", 1 + rng.below(2)},
                   {"r", 1 + rng.below(3)}};
  std::vector<std::string> vars{"X", "Y", "Z"};
  auto random_atom = [&](int max_pred_index) {
    int pi = rng.below(max_pred_index);
    const Symbol& pred = gp.predicates[pi];
    std::vector<TermPtr> args;
    for (int i = 0; i < pred.second; ++i)
      args.push_back(random_term(rng, fns, vars, opts.max_term_depth - 1));
    return std::pair<TermPtr, int>(Term::make(pred.first, std::move(args)), pi);
  };

  int clauses = 1 + rng.below(opts.max_clauses);
  for (int i = 0; i < clauses; ++i) {
    auto [head, head_index] = random_atom(static_cast<int>(gp.predicates.size()));
    Clause c{head, {}};
    int body = rng.chance(0.55) ? 0 : 1 + rng.below(opts.max_body);
    for (int j = 0; j < body; ++j) {
      bool recursive = rng.chance(opts.recursion_rate);
      // acyclic default: body predicates strictly before the head's
      if (!recursive && head_index == 0) continue;
      int bound =
          recursive ? static_cast<int>(gp.predicates.size()) : head_index;
      c.body.push_back(random_atom(bound).first);
    }
    gp.program.clauses.push_back(c);
  }
  gp.sig.predicates.insert(gp.predicates.begin(), gp.predicates.end());
  return gp;
}

Query random_query(Rng& rng, const GeneratedProgram& gp, int max_atoms,
                   const std::vector<Symbol>& extra_symbols) {
  std::vector<Symbol> fns(gp.sig.functions.begin(), gp.sig.functions.end());
  fns.insert(fns.end(), extra_symbols.begin(), extra_symbols.end());
  std::vector<std::string> vars{"U", "V", "W"};
  Query q;
  int atoms = 1 + rng.below(max_atoms);
  for (int i = 0; i < atoms; ++i) {
    const Symbol& pred =
        gp.predicates[rng.below(static_cast<int>(gp.predicates.size()))];
    std::vector<TermPtr> args;
    for (int j = 0; j < pred.second; ++j)
      args.push_back(random_term(rng, fns, vars, 1));
    q.atoms.push_back(Term::make(pred.first, std::move(args)));
  }
  return q;
}

namespace {

struct Campaign {
  FuzzConfig cfg;
  CampaignReport report;

  void add(std::uint64_t case_seed, const std::string& program,
           const std::string& query, const std::string& note, bool definite,
           bool violation) {
    ++report.cases;
    definite ? ++report.definite : ++report.unknown;
    if (violation) ++report.violations;
    if (violation || cfg.record_cases)
      report.records.push_back(
          {case_seed, program, query, note, definite, violation});
  }
};

std::uint64_t case_seed(const FuzzConfig& cfg, int i) {
  return cfg.seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(i) + 1;
}

void run_theorem1(Campaign& c) {
  for (int i = 0; i < c.cfg.cases; ++i) {
    std::uint64_t s = case_seed(c.cfg, i);
    Rng rng(s);
    GeneratorOptions opts;
    opts.allow_binary = false;  // keeps the model instance space small
    auto gp = random_program(rng, opts);
    // sometimes enlarge the language so the conditions hold
    if (rng.chance(0.5)) {
      std::vector<Symbol> extra;
      if (rng.chance(0.5)) extra.push_back({"h", 1});
      if (rng.chance(0.6)) extra.push_back({"c", 0});
      if (rng.chance(0.4)) extra.push_back({"d", 0});
      for (const auto& e : extra)
        if (!gp.sig.functions.count(e)) gp.sig = extend_signature(gp.sig, {e});
    }
    Query q = random_query(rng, gp, 2, {});
    bool violation = false;
    bool definite = false;
    std::string note;
    try {
      auto rep = equivalence_verdict(gp.program, q, gp.sig, c.cfg.budget,
                                     c.cfg.depth_cap);
      definite = rep.model_verdict.definite() && rep.entails_verdict.definite();
      note = "model=" + verdict_kind_name(rep.model_verdict.kind) +
             " entails=" + verdict_kind_name(rep.entails_verdict.kind) +
             " conditions=" + (rep.conditions.holds ? "hold" : "violated");
    } catch (const InternalInconsistencyError& e) {
      violation = true;
      note = e.what();
    }
    c.add(s, render_program(gp.program), render_query(q), note, definite,
          violation);
  }
}

void run_lemma1(Campaign& c) {
  for (int i = 0; i < c.cfg.cases; ++i) {
    std::uint64_t s = case_seed(c.cfg, i);
    Rng rng(s);
    auto gp = random_program(rng, GeneratorOptions{});
    Query q = random_query(rng, gp, 2, {});
    // rho: distinct variables of Q to distinct aliens w.r.t. occ(P) u occ(Q);
    // reserved symbols never used by the generators above
    std::vector<Symbol> alien_pool{{"h", 1}, {"k", 2}, {"c", 0}, {"d", 0}};
    std::vector<Symbol> arg_fns(gp.sig.functions.begin(), gp.sig.functions.end());
    arg_fns.insert(arg_fns.end(), alien_pool.begin(), alien_pool.end());
    auto qvars = vars_of(q.atoms);
    std::map<std::string, TermPtr> rho_map;
    std::vector<TermPtr> used;
    for (const auto& v : qvars) {
      if (rng.chance(0.3)) continue;  // Q may keep other variables
      for (int attempt = 0; attempt < 16; ++attempt) {
        const Symbol& f = alien_pool[rng.below((int)alien_pool.size())];
        std::vector<TermPtr> args;
        for (int j = 0; j < f.second; ++j)
          args.push_back(random_term(rng, arg_fns, qvars, 1));
        TermPtr t = Term::make(f.first, std::move(args));
        bool dup = false;
        for (const auto& u : used) dup = dup || term_eq(u, t);
        if (!dup) {
          used.push_back(t);
          rho_map[v] = t;
          break;
        }
      }
    }
    Subst rho = Subst::from_map(rho_map);
    Query q_rho{rho.apply(q.atoms)};
    bool violation = false;
    bool definite = false;
    std::string note;
    try {
      Verdict lhs = entails(gp.program, q, c.cfg.budget);
      Verdict rhs = entails(gp.program, q_rho, c.cfg.budget);
      definite = lhs.definite() && rhs.definite();
      if (definite && lhs.kind != rhs.kind) violation = true;
      note = "Q=" + verdict_kind_name(lhs.kind) +
             " Qrho=" + verdict_kind_name(rhs.kind) +
             " rho=" + render_subst(rho);
    } catch (const InternalInconsistencyError& e) {
      violation = true;
      note = e.what();
    }
    c.add(s, render_program(gp.program), render_query(q), note, definite,
          violation);
  }
}

void run_corollary1(Campaign& c) {
  for (int i = 0; i < c.cfg.cases; ++i) {
    std::uint64_t s = case_seed(c.cfg, i);
    Rng rng(s);
    auto gp = random_program(rng, GeneratorOptions{});
    // queries may contain aliens w.r.t. the program
    Query q = random_query(rng, gp, 2, {{"h", 1}, {"c", 0}});
    auto gen = generalize(q, occurring_symbols(gp.program));
    bool violation = false;
    bool definite = false;
    std::string note;
    try {
      Verdict lhs = entails(gp.program, q, c.cfg.budget);
      Verdict rhs = entails(gp.program, gen.generalized, c.cfg.budget);
      definite = lhs.definite() && rhs.definite();
      if (definite && lhs.kind != rhs.kind) violation = true;
      note = "Q=" + verdict_kind_name(lhs.kind) +
             " Q'=" + verdict_kind_name(rhs.kind);
    } catch (const InternalInconsistencyError& e) {
      violation = true;
      note = e.what();
    }
    c.add(s, render_program(gp.program), render_query(q), note, definite,
          violation);
  }
}

void run_lemma2(Campaign& c) {
  std::vector<Symbol> fns{{"a", 0}, {"f", 1}, {"g", 2}};
  std::vector<std::string> vars{"X", "Y"};
  // candidate universe: every term of depth <= 2 over {a, f, g} with variable
  // leaves allowed, extended to depth 3 along unary spines
  std::vector<TermPtr> universe;
  {
    std::vector<TermPtr> level{Term::constant("a"), Term::var("X"), Term::var("Y")};
    std::vector<TermPtr> all = level;
    for (int d = 0; d < 2; ++d) {
      std::vector<TermPtr> next;
      for (const auto& t : all) next.push_back(Term::make("f", {t}));
      for (const auto& t1 : all)
        for (const auto& t2 : all) next.push_back(Term::make("g", {t1, t2}));
      all.insert(all.end(), next.begin(), next.end());
      std::sort(all.begin(), all.end(), [](const TermPtr& x, const TermPtr& y) {
        return term_compare(x, y) < 0;
      });
      all.erase(std::unique(all.begin(), all.end(),
                            [](const TermPtr& x, const TermPtr& y) {
                              return term_eq(x, y);
                            }),
                all.end());
    }
    universe = all;
    for (const auto& t : all)
      if (term_depth(t) == 2) universe.push_back(Term::make("f", {t}));
  }
  for (int i = 0; i < c.cfg.cases; ++i) {
    std::uint64_t s = case_seed(c.cfg, i);
    Rng rng(s);
    TermPtr t1 = random_term(rng, fns, vars, 2);
    TermPtr t2 = random_term(rng, fns, vars, 2);
    if (term_eq(t1, t2)) t2 = Term::make("f", {t2});
    auto unifiers = single_binding_unifiers(t1, t2, universe);
    bool violation = unifiers.size() > 1;
    c.add(s, "", render_term(t1) + " ~ " + render_term(t2),
          std::to_string(unifiers.size()) + " single-binding unifier(s)", true,
          violation);
  }
}

void run_lemma3(Campaign& c) {
  for (int i = 0; i < c.cfg.cases; ++i) {
    std::uint64_t s = case_seed(c.cfg, i);
    Rng rng(s);
    Signature sig;
    sig.functions = {{"a", 0}, {"c", 0}, {"f", 1}};
    if (rng.chance(0.5)) sig.functions.insert({"g", 2});
    SymbolSet F;
    if (rng.chance(0.7)) F.insert({"a", 0});
    if (rng.chance(0.3)) F.insert({"c", 0});
    std::vector<Symbol> alien_fns;
    for (const auto& sym : sig.functions)
      if (!F.count(sym)) alien_fns.push_back(sym);
    std::vector<Symbol> all_fns(sig.functions.begin(), sig.functions.end());
    std::vector<std::string> vars{"Y1", "Y2", "Y3"};
    int n = rng.below(3);
    int aliens = 1 + rng.below(2);
    std::vector<TermPtr> ts;
    for (int j = 0; j < n; ++j) ts.push_back(Term::var(vars[j]));
    for (int j = 0; j < aliens; ++j) {
      for (int attempt = 0; attempt < 24; ++attempt) {
        const Symbol& f = alien_fns[rng.below((int)alien_fns.size())];
        TermPtr t;
        if (f.second == 0) {
          t = Term::constant(f.first);
        } else {
          std::vector<TermPtr> args;
          for (int m = 0; m < f.second; ++m)
            args.push_back(random_term(rng, all_fns, vars, 1));
          t = Term::make(f.first, std::move(args));
        }
        bool dup = false;
        for (const auto& u : ts) dup = dup || term_eq(u, t);
        if (!dup) {
          ts.push_back(t);
          break;
        }
      }
    }
    bool violation = false;
    std::string note;
    try {
      Subst sigma = distinct_alien_instance(ts, F, sig);
      auto out = sigma.apply(ts);
      for (std::size_t x = 0; x < out.size(); ++x) {
        if (!is_ground(out[x]) || !is_alien(out[x], F)) violation = true;
        for (std::size_t y = x + 1; y < out.size(); ++y)
          if (term_eq(out[x], out[y])) violation = true;
      }
      note = "sigma=" + render_subst(sigma);
    } catch (const PremiseError& e) {
      // ground-suffix case without enough spare aliens: premise not shaped
      note = std::string("skipped: ") + e.what();
    }
    c.add(s, "", render_atoms(ts), note, true, violation);
  }
}

void run_lemma4(Campaign& c) {
  for (int i = 0; i < c.cfg.cases; ++i) {
    std::uint64_t s = case_seed(c.cfg, i);
    Rng rng(s);
    GeneratorOptions opts;
    opts.allow_binary = false;
    auto gp = random_program(rng, opts);
    // a non-constant symbol outside the program keeps condition (a) true
    if (!gp.sig.functions.count({"h", 1}))
      gp.sig = extend_signature(gp.sig, {{"h", 1}});
    Query q = random_query(rng, gp, 1, {{"h", 1}});
    bool violation = false;
    bool definite = false;
    std::string note;
    try {
      auto rep = check_lemma4(gp.program, q.atoms[0], gp.sig, c.cfg.budget,
                              c.cfg.depth_cap);
      definite = rep.both_definite;
      violation = !rep.iff_holds;
      note = "model=" + verdict_kind_name(rep.model_verdict.kind) +
             " entails(Q')=" + verdict_kind_name(rep.entails_verdict.kind);
    } catch (const InternalInconsistencyError& e) {
      violation = true;
      note = e.what();
    }
    c.add(s, render_program(gp.program), render_query(q), note, definite,
          violation);
  }
}

void run_prop1(Campaign& c) {
  for (int i = 0; i < c.cfg.cases; ++i) {
    std::uint64_t s = case_seed(c.cfg, i);
    Rng rng(s);
    // language: all non-constant symbols must live in F0
    bool with_unary = rng.chance(0.6);
    bool with_binary = !with_unary && rng.chance(0.3);
    SymbolSet f0;
    Signature sig;
    if (rng.chance(0.8)) f0.insert({"a", 0});
    if (with_unary) f0.insert({"f", 1});
    if (with_binary) f0.insert({"g", 2});
    sig.functions = f0;
    int k = 1 + rng.below(with_binary ? 1 : 2);  // selected atom's variables
    int spare = rng.below(k);                    // strictly fewer than k
    for (int j = 0; j < spare; ++j)
      sig.functions.insert({"d" + std::to_string(j + 1), 0});
    int out_consts = rng.below(2);  // the b constants of the atom
    for (int j = 0; j < out_consts; ++j)
      sig.functions.insert({"e" + std::to_string(j + 1), 0});
    if (!sig.has_constant()) {
      sig.functions.insert({"a", 0});
      f0.insert({"a", 0});
    }
    std::vector<Symbol> f0_fns(f0.begin(), f0.end());
    std::vector<std::string> yvars;
    for (int j = 0; j < k; ++j) yvars.push_back("Y" + std::to_string(j + 1));
    std::vector<TermPtr> args;
    for (const auto& v : yvars) args.push_back(Term::var(v));
    for (int j = 0; j < out_consts; ++j)
      args.push_back(Term::constant("e" + std::to_string(j + 1)));
    bool f0_has_constant = f0.count({"a", 0}) != 0;
    if (rng.chance(0.4) && f0_has_constant)
      args.push_back(random_term(rng, f0_fns, {}, 1));
    // shuffle argument order
    for (std::size_t j = args.size(); j > 1; --j)
      std::swap(args[j - 1], args[rng.below((int)j)]);
    Query q{{Term::make("p", args)}};
    if (rng.chance(0.3) && f0_has_constant) {
      std::vector<TermPtr> qargs{random_term(rng, f0_fns, {}, 1)};
      q.atoms.push_back(Term::make("q", qargs));
    }
    sig.predicates = occurring_predicates(q);

    bool violation = false;
    std::string note;
    try {
      Counterexample ce = build_counterexample(f0, sig, q);
      // (a) occurring symbols are exactly F0
      if (occurring_symbols(ce.program) != f0) {
        violation = true;
        note += "occurring symbols differ from F0; ";
      }
      // (b) every ground template instance over the original language is an
      // instance of some clause
      auto universe = ground_terms_upto_depth(sig.functions, 2);
      std::size_t slots = ce.slot_vars.size();
      std::vector<std::size_t> idx(slots, 0);
      bool covered = true;
      for (;;) {
        std::map<std::string, TermPtr> m;
        for (std::size_t j = 0; j < slots; ++j)
          m[ce.slot_vars[j]] = universe[idx[j]];
        TermPtr inst = Subst::from_map(m).apply(ce.template_atom);
        bool found = false;
        for (const auto& clause : ce.program.clauses)
          if (clause.body.empty() && match(clause.head, inst)) {
            found = true;
            break;
          }
        if (!found) {
          covered = false;
          note += "uncovered instance " + render_term(inst) + "; ";
          break;
        }
        std::size_t j = slots;
        while (j > 0 && ++idx[j - 1] == universe.size()) idx[--j] = 0;
        if (j == 0) break;
      }
      violation = violation || !covered;
      // (c) the witness is refuted once the alphabet is extended
      Verdict w = entails(ce.program, Query{{ce.witness}}, c.cfg.budget);
      if (!w.fails()) {
        violation = true;
        note += "witness " + render_term(ce.witness) + " not refuted; ";
      }
      // and the query is true in the bounded model over the original language
      Verdict m = model_satisfies(ce.program, sig, q, c.cfg.budget, 1);
      if (m.fails() || (m.unknown() && !m.holds_up_to)) {
        violation = true;
        note += "model check " + verdict_kind_name(m.kind) + "; ";
      }
      if (note.empty()) note = "ok: " + std::to_string(ce.program.clauses.size()) +
                               " clauses, witness " + render_term(ce.witness);
      c.add(s, render_program(ce.program), render_query(q), note, true, violation);
    } catch (const PremiseError& e) {
      c.add(s, "", render_query(q), std::string("premise: ") + e.what(), true,
            true);
    }
  }
}

void run_ground_eq1(Campaign& c) {
  int atoms_checked = 0;
  for (int i = 0; atoms_checked < c.cfg.cases && i < c.cfg.cases * 20; ++i) {
    std::uint64_t s = case_seed(c.cfg, i);
    Rng rng(s);
    GeneratorOptions opts;
    opts.recursion_rate = 0;  // acyclic, so ground SLD always terminates
    auto gp = random_program(rng, opts);
    // constants only: the universe is finite and the fixpoint is exact
    Signature sig;
    for (const auto& sym : gp.sig.functions)
      if (sym.second == 0) sig.functions.insert(sym);
    if (!sig.has_constant()) sig.functions.insert({"a", 0});
    sig.predicates = gp.sig.predicates;
    Program p;  // strip non-constant symbols from the program
    for (const auto& clause : gp.program.clauses) {
      bool ok = true;
      for (const auto& sym : occurring_symbols(Query{{clause.head}}))
        ok = ok && sig.functions.count(sym);
      for (const auto& b : clause.body)
        for (const auto& sym : occurring_symbols(Query{{b}}))
          ok = ok && sig.functions.count(sym);
      if (ok) p.clauses.push_back(clause);
    }
    if (p.clauses.empty()) continue;
    auto model = least_model_upto(p, sig, 1);
    if (!model.fixpoint_reached) continue;
    auto consts = ground_terms_upto_depth(sig.functions, 0);
    auto preds = occurring_predicates(p);
    std::vector<Symbol> pred_list(preds.begin(), preds.end());
    for (int j = 0; j < 5 && atoms_checked < c.cfg.cases; ++j) {
      const Symbol& pred = pred_list[rng.below((int)pred_list.size())];
      std::vector<TermPtr> args;
      for (int m = 0; m < pred.second; ++m)
        args.push_back(consts[rng.below((int)consts.size())]);
      TermPtr atom = Term::make(pred.first, std::move(args));
      Verdict v = entails_direct(p, Query{{atom}}, c.cfg.budget);
      bool member = model.contains(atom);
      bool violation = !v.definite() || (v.holds() != member);
      ++atoms_checked;
      c.add(s, render_program(p), render_term(atom),
            std::string("member=") + (member ? "yes" : "no") +
                " sld=" + verdict_kind_name(v.kind),
            v.definite(), violation);
    }
  }
}

}  // namespace

std::vector<std::string> fuzz_properties() {
  return {"theorem1", "lemma1", "corollary1", "lemma2",
          "lemma3",   "lemma4", "prop1",      "ground_eq1"};
}

CampaignReport fuzz(const FuzzConfig& config) {
  Campaign c{config, {}};
  c.report.config = config;
  if (config.cases <= 0) return c.report;
  if (config.property == "theorem1") run_theorem1(c);
  else if (config.property == "lemma1") run_lemma1(c);
  else if (config.property == "corollary1") run_corollary1(c);
  else if (config.property == "lemma2") run_lemma2(c);
  else if (config.property == "lemma3") run_lemma3(c);
  else if (config.property == "lemma4") run_lemma4(c);
  else if (config.property == "prop1") run_prop1(c);
  else if (config.property == "ground_eq1") run_ground_eq1(c);
  else throw PremiseError("unknown fuzz property '" + config.property + "'");
  return c.report;
}

}  // namespace hlab
