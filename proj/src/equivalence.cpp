#include "hlab/equivalence.hpp"

#include <algorithm>

#include "hlab/errors.hpp"

namespace hlab {

namespace {

std::set<std::string> constant_names(const SymbolSet& syms) {
  std::set<std::string> out;
  for (const auto& [n, a] : syms)
    if (a == 0) out.insert(n);
  return out;
}

}  // namespace

ConditionReport check_conditions(const Program& p, const Query& q,
                                 const Signature& sig) {
  ConditionReport r;
  SymbolSet occ_p = occurring_symbols(p);
  for (const auto& s : sig.functions) {
    if (s.second > 0 && !occ_p.count(s)) {
      r.cond_a = true;
      r.cond_a_witness = s;
      break;
    }
  }
  r.cond_b = true;
  for (const auto& atom : q.atoms) {
    AtomCondition ac;
    ac.atom = atom;
    ac.distinct_vars = static_cast<int>(var_set(atom).size());
    SymbolSet occ_a = occurring_symbols(atom);
    int spare = 0;
    for (const auto& s : sig.functions)
      if (s.second == 0 && !occ_p.count(s) && !occ_a.count(s)) ++spare;
    ac.spare_constants = spare;
    ac.satisfied = spare >= ac.distinct_vars;
    r.cond_b = r.cond_b && ac.satisfied;
    r.per_atom.push_back(ac);
  }
  r.holds = r.cond_a || r.cond_b;
  // simpler sufficient variant: k constants outside P,Q; every atom has <= k vars
  SymbolSet occ_q = occurring_symbols(q);
  int k = 0;
  for (const auto& s : sig.functions)
    if (s.second == 0 && !occ_p.count(s) && !occ_q.count(s)) ++k;
  r.simple_sufficient = true;
  for (const auto& ac : r.per_atom)
    r.simple_sufficient = r.simple_sufficient && ac.distinct_vars <= k;
  return r;
}

EquivalenceReport equivalence_verdict(const Program& p, const Query& q,
                                      const Signature& sig, const Budget& b,
                                      int depth_cap) {
  EquivalenceReport r;
  r.conditions = check_conditions(p, q, sig);
  r.model_verdict = model_satisfies(p, sig, q, b, depth_cap);
  r.entails_verdict = entails(p, q, b);
  bool both_definite = r.model_verdict.definite() && r.entails_verdict.definite();
  if (r.conditions.holds && both_definite &&
      r.model_verdict.kind != r.entails_verdict.kind) {
    r.consistent_with_theorem = false;
    throw InternalInconsistencyError(
        "definite verdicts violate the equivalence under satisfied "
        "conditions\nprogram:\n" +
        render_program(p) + "query: " + render_query(q) +
        "\nmodel: " + verdict_kind_name(r.model_verdict.kind) +
        "\nentails: " + verdict_kind_name(r.entails_verdict.kind));
  }
  return r;
}

namespace {

GeneralizationCheck compare_generalized(const Program& p, const Query& original,
                                        const Query& generalized,
                                        const Signature& sig, const Budget& b,
                                        int depth_cap) {
  GeneralizationCheck r;
  r.generalized = generalized;
  r.model_verdict = model_satisfies(p, sig, original, b, depth_cap);
  r.entails_verdict = entails(p, generalized, b);
  r.both_definite = r.model_verdict.definite() && r.entails_verdict.definite();
  r.iff_holds = !r.both_definite || r.model_verdict.kind == r.entails_verdict.kind;
  return r;
}

}  // namespace

GeneralizationCheck check_lemma4(const Program& p, const TermPtr& atom,
                                 const Signature& sig, const Budget& b,
                                 int depth_cap) {
  Query q{{atom}};
  ConditionReport cond = check_conditions(p, q, sig);
  // atomic premise: condition (a), or n constants outside P,Q for the atom's
  // n distinct variables
  bool cond_b_atomic = true;
  {
    SymbolSet occ_p = occurring_symbols(p);
    SymbolSet occ_q = occurring_symbols(q);
    int spare = 0;
    for (const auto& s : sig.functions)
      if (s.second == 0 && !occ_p.count(s) && !occ_q.count(s)) ++spare;
    cond_b_atomic = spare >= static_cast<int>(var_set(atom).size());
  }
  if (!cond.cond_a && !cond_b_atomic)
    throw PremiseError("check_lemma4: neither condition (a) nor (b) holds");
  auto gen = generalize(q, occurring_symbols(p));
  return compare_generalized(p, q, gen.generalized, sig, b, depth_cap);
}

GeneralizationCheck check_lemma4_remark(const Program& p, const TermPtr& atom,
                                        const TermPtr& generalized,
                                        const Subst& phi, const Signature& sig,
                                        const Budget& b, int depth_cap) {
  if (!term_eq(phi.apply(generalized), atom))
    throw PremiseError("check_lemma4_remark: Q != Q' phi");
  auto q_vars = var_set(atom);
  SymbolSet ref = occurring_symbols(p);
  SymbolSet occ_gen = occurring_symbols(generalized);
  ref.insert(occ_gen.begin(), occ_gen.end());
  std::vector<TermPtr> values;
  for (const auto& [x, u] : phi.bindings()) {
    if (q_vars.count(x))
      throw PremiseError("check_lemma4_remark: variable " + x + " occurs in Q");
    if (!is_alien(u, ref))
      throw PremiseError("check_lemma4_remark: " + render_term(u) +
                         " is not an alien w.r.t. P and Q'");
    values.push_back(u);
  }
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (term_eq(values[i], values[j]))
        throw PremiseError("check_lemma4_remark: phi values not distinct");
  Query q{{atom}};
  Query gen{{generalized}};
  return compare_generalized(p, q, gen, sig, b, depth_cap);
}

GeneralizationCheck check_corollary2(const Program& p, const Query& q,
                                     const Signature& sig, const Budget& b,
                                     int depth_cap) {
  ConditionReport cond = check_conditions(p, q, sig);
  if (!cond.cond_a && !cond.cond_b)
    throw PremiseError("check_corollary2: neither condition (a) nor (c) holds");
  auto gen = generalize(q, occurring_symbols(p));
  return compare_generalized(p, q, gen.generalized, sig, b, depth_cap);
}

namespace {

TermPtr build_template(const TermPtr& t, const SymbolSet& f0,
                       std::vector<std::string>& slot_vars,
                       std::vector<TermPtr>& slot_constants,
                       std::map<std::string, std::size_t>& slot_by_key,
                       VarGen& gen, std::set<std::string>& avoid) {
  bool slot = t->is_variable || (t->args.empty() && !f0.count({t->symbol, 0}));
  if (slot) {
    std::string key = (t->is_variable ? "v:" : "c:") + t->symbol;
    auto it = slot_by_key.find(key);
    std::size_t index;
    if (it == slot_by_key.end()) {
      std::string name = gen.fresh(avoid);
      avoid.insert(name);
      slot_vars.push_back(name);
      slot_constants.push_back(t->is_variable ? nullptr : t);
      index = slot_vars.size() - 1;
      slot_by_key.emplace(key, index);
    } else {
      index = it->second;
    }
    return Term::var(slot_vars[index]);
  }
  if (t->args.empty()) return t;
  std::vector<TermPtr> args;
  args.reserve(t->args.size());
  for (const auto& a : t->args)
    args.push_back(build_template(a, f0, slot_vars, slot_constants, slot_by_key,
                                  gen, avoid));
  return Term::make(t->symbol, std::move(args));
}

TermPtr instantiate_slots(const TermPtr& tmpl,
                          const std::vector<std::string>& slot_vars,
                          const std::vector<TermPtr>& values) {
  std::map<std::string, TermPtr> m;
  for (std::size_t i = 0; i < slot_vars.size(); ++i) m[slot_vars[i]] = values[i];
  return Subst::from_map(m).apply(tmpl);
}

}  // namespace

Counterexample build_counterexample(const SymbolSet& f0, const Signature& sig,
                                    const Query& q) {
  // premises
  std::set<std::string> preds;
  for (const auto& a : q.atoms)
    if (!preds.insert(a->symbol + "/" + std::to_string(a->arity())).second)
      throw PremiseError("build_counterexample: query predicates not distinct");
  for (const auto& s : f0)
    if (!sig.functions.count(s))
      throw PremiseError("build_counterexample: F0 must be a subset of the alphabet");
  for (const auto& s : sig.functions)
    if (s.second > 0 && !f0.count(s))
      throw PremiseError(
          "build_counterexample: non-constant symbol " + s.first +
          " outside F0 (condition (a) would hold)");
  SymbolSet occ_q = occurring_symbols(q);
  for (const auto& s : occ_q)
    if (!sig.functions.count(s))
      throw PremiseError("build_counterexample: query symbol " + s.first +
                         " outside the alphabet");
  if (!sig.has_constant())
    throw PremiseError("build_counterexample: empty Herbrand universe");

  // pick the first atom violating the per-atom constants condition
  int selected = -1;
  int k = 0, l = 0;
  for (std::size_t i = 0; i < q.atoms.size(); ++i) {
    const auto& atom = q.atoms[i];
    int vars = static_cast<int>(var_set(atom).size());
    SymbolSet occ_a = occurring_symbols(atom);
    int spare = 0;
    for (const auto& s : sig.functions)
      if (s.second == 0 && !f0.count(s) && !occ_a.count(s)) ++spare;
    if (spare < vars) {
      selected = static_cast<int>(i);
      k = vars;
      l = spare;
      break;
    }
  }
  if (selected < 0)
    throw PremiseError(
        "build_counterexample: the sufficient condition holds for (F0, sig, Q)");

  for (std::size_t i = 0; i < q.atoms.size(); ++i) {
    if (static_cast<int>(i) == selected) continue;
    for (const auto& s : occurring_symbols(q.atoms[i]))
      if (!f0.count(s))
        throw PremiseError(
            "build_counterexample: non-selected atom uses symbol " + s.first +
            " outside F0");
  }

  Counterexample ce;
  ce.selected_atom = selected;
  const TermPtr& atom = q.atoms[selected];

  // template: abstract out-of-F0 constants and variables into ordered slots
  std::map<std::string, std::size_t> slot_by_key;
  VarGen gen;
  std::set<std::string> avoid = var_set(q.atoms);
  std::vector<TermPtr> tmpl_args;
  for (const auto& a : atom->args)
    tmpl_args.push_back(build_template(a, f0, ce.slot_vars, ce.slot_constants,
                                       slot_by_key, gen, avoid));
  ce.template_atom = Term::make(atom->symbol, std::move(tmpl_args));
  std::size_t slots = ce.slot_vars.size();  // n + k

  // clause variables X1..X_{slots-1} and the two clause forms
  auto make_xs = [&](std::size_t count) {
    std::vector<TermPtr> xs;
    for (std::size_t i = 1; i <= count; ++i)
      xs.push_back(Term::var("X" + std::to_string(i)));
    return xs;
  };
  Program prog;
  prog.name = "counterexample";
  for (std::size_t i = 0; i < q.atoms.size(); ++i)
    if (static_cast<int>(i) != selected) prog.clauses.push_back({q.atoms[i], {}});
  if (slots >= 2) {
    // form (i): two slots share a variable, the rest are pairwise distinct
    auto xs = make_xs(slots - 1);
    for (std::size_t p1 = 0; p1 < slots; ++p1) {
      for (std::size_t p2 = p1 + 1; p2 < slots; ++p2) {
        std::vector<TermPtr> values(slots);
        values[p1] = values[p2] = xs[0];
        std::size_t next = 1;
        for (std::size_t s = 0; s < slots; ++s)
          if (s != p1 && s != p2) values[s] = xs[next++];
        prog.clauses.push_back(
            {instantiate_slots(ce.template_atom, ce.slot_vars, values), {}});
      }
    }
  }
  // form (ii): one slot holds f(Z...) for f in F0, the rest distinct variables
  for (const auto& [fname, farity] : f0) {
    std::vector<TermPtr> zs;
    for (int i = 1; i <= farity; ++i)
      zs.push_back(Term::var("Z" + std::to_string(i)));
    TermPtr fz = Term::make(fname, zs);
    auto xs = make_xs(slots == 0 ? 0 : slots - 1);
    for (std::size_t pos = 0; pos < slots; ++pos) {
      std::vector<TermPtr> values(slots);
      values[pos] = fz;
      std::size_t next = 0;
      for (std::size_t s = 0; s < slots; ++s)
        if (s != pos) values[s] = xs[next++];
      prog.clauses.push_back(
          {instantiate_slots(ce.template_atom, ce.slot_vars, values), {}});
    }
  }
  ce.program = std::move(prog);

  // witness B[b..., a...]: constants keep their slots; variable slots get the
  // spare constants first, then fresh ones
  std::set<std::string> occ_a_names;
  for (const auto& s : occurring_symbols(atom))
    if (s.second == 0) occ_a_names.insert(s.first);
  for (const auto& [n, a] : sig.functions)
    if (a == 0 && !f0.count({n, 0}) && !occ_a_names.count(n))
      ce.spare_constants.push_back(Term::constant(n));
  // l spare constants exist; k - l fresh ones are needed
  std::set<std::string> taken;
  for (int i = l; i < k; ++i) {
    Symbol c = fresh_constant(sig, taken, "a");
    taken.insert(c.first);
    ce.fresh_constants.push_back(c);
  }
  ce.extended_sig = extend_signature(sig, ce.fresh_constants);

  std::vector<TermPtr> witness_values(slots);
  std::size_t spare_used = 0, fresh_used = 0;
  for (std::size_t s = 0; s < slots; ++s) {
    if (ce.slot_constants[s]) {
      witness_values[s] = ce.slot_constants[s];
    } else if (spare_used < ce.spare_constants.size()) {
      witness_values[s] = ce.spare_constants[spare_used++];
    } else {
      witness_values[s] = Term::constant(ce.fresh_constants[fresh_used++].first);
    }
  }
  ce.witness = instantiate_slots(ce.template_atom, ce.slot_vars, witness_values);
  return ce;
}

int report_exit_code(const EquivalenceReport& r) {
  if (!r.consistent_with_theorem) return 3;
  if (r.model_verdict.definite() && r.entails_verdict.definite()) return 0;
  return 1;
}

}  // namespace hlab
