#include "hlab/sld.hpp"

#include <algorithm>

#include "hlab/errors.hpp"

namespace hlab {

std::string verdict_kind_name(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Holds: return "holds";
    case Verdict::Kind::Fails: return "fails";
    case Verdict::Kind::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

// Renames all clause variables into the reserved "_#n" namespace, which the
// parser cannot produce, so clause variables never clash with query ones.
Clause rename_clause(const Clause& c, std::uint64_t& counter) {
  std::map<std::string, TermPtr> m;
  for (const auto& v : vars_of(c.head)) m.emplace(v, nullptr);
  for (const auto& b : c.body)
    for (const auto& v : vars_of(b)) m.emplace(v, nullptr);
  for (auto& [v, t] : m) t = Term::var("_#" + std::to_string(++counter));
  Subst s = Subst::from_map(m);
  Clause out;
  out.head = s.apply(c.head);
  out.body = s.apply(c.body);
  return out;
}

void count_var_occurrences(const TermPtr& t, std::map<std::string, int>& out) {
  if (t->is_variable) {
    ++out[t->symbol];
    return;
  }
  for (const auto& a : t->args) count_var_occurrences(a, out);
}

// Presentation form of a computed answer: a binding to a one-off output
// variable is dropped (the query variable stays effectively free), and the
// remaining out-of-query variables get canonical names.
Subst normalize_answer(const Subst& a, const std::set<std::string>& qvars) {
  std::map<std::string, int> occ;
  for (const auto& [v, t] : a.bindings()) count_var_occurrences(t, occ);
  std::map<std::string, TermPtr> kept;
  for (const auto& [v, t] : a.bindings()) {
    if (t->is_variable && !qvars.count(t->symbol) && occ[t->symbol] == 1)
      continue;
    kept[v] = t;
  }
  VarGen gen;
  std::map<std::string, TermPtr> ren;
  for (const auto& [v, t] : kept)
    for (const auto& w : vars_of(t))
      if (!qvars.count(w) && !ren.count(w)) ren[w] = Term::var(gen.fresh(qvars));
  Subst rename = Subst::from_map(ren);
  for (auto& [v, t] : kept) t = rename.apply(t);
  return Subst::from_map(kept);
}

struct Search {
  const Program& program;
  Budget budget;
  std::set<std::string> query_vars;
  std::uint64_t nodes = 0;
  std::uint64_t rename_counter = 0;
  bool node_budget_hit = false;
  bool cutoff = false;
  std::vector<Subst> answers;
  bool stop_at_first = false;
  bool found = false;

  // goals carry the accumulated substitution already applied
  void dfs(const std::vector<TermPtr>& goals, const Subst& acc, int depth_left) {
    if (node_budget_hit || (stop_at_first && found)) return;
    if (goals.empty()) {
      answers.push_back(normalize_answer(acc.restricted(query_vars), query_vars));
      found = true;
      return;
    }
    if (depth_left == 0) {
      cutoff = true;
      return;
    }
    const TermPtr& selected = goals.front();
    for (const auto& clause : program.clauses) {
      if (++nodes > budget.max_nodes) {
        node_budget_hit = true;
        return;
      }
      Clause c = rename_clause(clause, rename_counter);
      auto mgu = unify(selected, c.head);
      if (!mgu) continue;
      std::vector<TermPtr> rest;
      rest.reserve(c.body.size() + goals.size() - 1);
      for (const auto& b : c.body) rest.push_back(mgu->apply(b));
      for (std::size_t i = 1; i < goals.size(); ++i)
        rest.push_back(mgu->apply(goals[i]));
      dfs(rest, acc.compose(*mgu), depth_left - 1);
      if (node_budget_hit || (stop_at_first && found)) return;
    }
  }
};

struct RawResult {
  std::vector<Subst> answers;
  bool exhausted;
  std::uint64_t nodes;
  int depth_used;
  bool found;
};

// Iterative deepening driver. With stop_at_first, returns as soon as any
// refutation is found (used by the ground route).
RawResult sld_search(const Program& p, const Query& q, const Budget& b,
                     bool stop_at_first = false) {
  RawResult out{{}, false, 0, 0, false};
  std::vector<Subst> last_completed;
  bool any_completed = false;
  std::uint64_t total_nodes = 0;
  for (int d = 1; d <= b.max_depth; ++d) {
    Search s{p, b, var_set(q.atoms)};
    s.budget.max_nodes = b.max_nodes > total_nodes ? b.max_nodes - total_nodes : 0;
    s.stop_at_first = stop_at_first;
    s.dfs(q.atoms, Subst{}, d);
    total_nodes += s.nodes;
    out.nodes = total_nodes;
    out.depth_used = d;
    out.found = out.found || s.found;
    if (stop_at_first && s.found) {
      out.answers = std::move(s.answers);
      return out;
    }
    if (s.node_budget_hit) {
      out.answers = any_completed ? std::move(last_completed) : std::move(s.answers);
      out.exhausted = false;
      return out;
    }
    last_completed = std::move(s.answers);
    any_completed = true;
    if (!s.cutoff) {
      // the whole (finite) tree was explored with room to spare
      out.answers = std::move(last_completed);
      out.exhausted = true;
      return out;
    }
  }
  out.answers = std::move(last_completed);
  out.exhausted = false;
  return out;
}

bool is_instance_of(const std::vector<TermPtr>& specific,
                    const std::vector<TermPtr>& general) {
  return match(general, specific).has_value();
}

}  // namespace

SldResult sld_answers(const Program& p, const Query& q, const Budget& b,
                      bool keep_duplicates) {
  RawResult raw = sld_search(p, q, b);
  SldResult out;
  out.exhausted = raw.exhausted;
  out.nodes = raw.nodes;
  out.depth_used = raw.depth_used;
  if (keep_duplicates) {
    out.answers = std::move(raw.answers);
    return out;
  }
  // drop answers that are variants or proper instances of another answer
  std::vector<std::vector<TermPtr>> instances;
  instances.reserve(raw.answers.size());
  for (const auto& a : raw.answers) instances.push_back(a.apply(q.atoms));
  std::vector<bool> keep(raw.answers.size(), true);
  for (std::size_t i = 0; i < raw.answers.size(); ++i) {
    for (std::size_t j = 0; j < raw.answers.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if (variant_of(instances[i], instances[j])) {
        if (j < i) keep[i] = false;  // keep the first of a variant class
      } else if (is_instance_of(instances[i], instances[j])) {
        keep[i] = false;
      }
    }
  }
  for (std::size_t i = 0; i < raw.answers.size(); ++i)
    if (keep[i]) out.answers.push_back(raw.answers[i]);
  return out;
}

Verdict entails_direct(const Program& p, const Query& q, const Budget& b) {
  RawResult raw = sld_search(p, q, b);
  for (const auto& a : raw.answers) {
    auto inst = a.apply(q.atoms);
    if (variant_of(inst, q.atoms))
      return Verdict::make_holds("computed answer " + render_subst(a) +
                                 " leaves the query a variant of itself");
  }
  if (raw.exhausted)
    return Verdict::make_fails("SLD tree exhausted with no variant answer");
  return Verdict::make_unknown("budget exceeded at depth " +
                               std::to_string(raw.depth_used) + ", " +
                               std::to_string(raw.nodes) + " nodes");
}

Verdict entails_via_grounding(const Program& p, const Query& q, const Budget& b) {
  auto vars = vars_of(q.atoms);
  std::map<std::string, TermPtr> rho;
  for (std::size_t i = 0; i < vars.size(); ++i)
    rho[vars[i]] = Term::constant("$c" + std::to_string(i + 1));
  Query ground{Subst::from_map(rho).apply(q.atoms)};
  RawResult raw = sld_search(p, ground, b, /*stop_at_first=*/true);
  if (raw.found)
    return Verdict::make_holds("ground instance " + render_query(ground) +
                               " provable");
  if (raw.exhausted)
    return Verdict::make_fails("ground instance " + render_query(ground) +
                               " finitely failed");
  return Verdict::make_unknown("budget exceeded on ground instance " +
                               render_query(ground));
}

Verdict entails(const Program& p, const Query& q, const Budget& b) {
  Verdict direct = entails_direct(p, q, b);
  Verdict grounded = entails_via_grounding(p, q, b);
  if (direct.definite() && grounded.definite() && direct.kind != grounded.kind) {
    throw InternalInconsistencyError(
        "entailment routes disagree\nprogram:\n" + render_program(p) +
        "query: " + render_query(q) + "\ndirect: " +
        verdict_kind_name(direct.kind) + " (" + direct.detail + ")\n" +
        "grounding: " + verdict_kind_name(grounded.kind) + " (" +
        grounded.detail + ")");
  }
  if (direct.definite()) return direct;
  if (grounded.definite()) return grounded;
  return Verdict::make_unknown("both routes inconclusive: " + direct.detail);
}

}  // namespace hlab
