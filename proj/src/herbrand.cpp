#include "hlab/herbrand.hpp"

#include <algorithm>

namespace hlab {

int atom_depth(const TermPtr& atom) {
  int d = 0;
  for (const auto& a : atom->args) d = std::max(d, term_depth(a));
  return d;
}

bool ModelApprox::contains(const TermPtr& ground_atom) const {
  auto it = std::lower_bound(
      atoms.begin(), atoms.end(), ground_atom,
      [](const TermPtr& a, const TermPtr& b) { return term_compare(a, b) < 0; });
  return it != atoms.end() && term_eq(*it, ground_atom);
}

namespace {

struct TermLess {
  bool operator()(const TermPtr& a, const TermPtr& b) const {
    return term_compare(a, b) < 0;
  }
};

struct AtomIndex {
  std::set<TermPtr, TermLess> keys;

  bool insert(const TermPtr& a) { return keys.insert(a).second; }
};

// Enumerates ground substitutions, one candidate list per variable.
template <typename Fn>
void for_groundings(const std::vector<std::string>& vars,
                    const std::vector<std::vector<TermPtr>>& cands, Fn&& fn) {
  if (vars.empty()) {
    fn(Subst{});
    return;
  }
  for (const auto& c : cands)
    if (c.empty()) return;
  std::vector<std::size_t> idx(vars.size(), 0);
  for (;;) {
    std::map<std::string, TermPtr> m;
    for (std::size_t i = 0; i < vars.size(); ++i) m[vars[i]] = cands[i][idx[i]];
    fn(Subst::from_map(m));
    std::size_t i = vars.size();
    while (i > 0 && ++idx[i - 1] == cands[i - 1].size()) idx[--i] = 0;
    if (i == 0) break;
  }
}

// Deepest nesting level at which each variable occurs below an atom's args.
void var_position_depths(const TermPtr& t, int level,
                         std::map<std::string, int>& out) {
  if (t->is_variable) {
    auto [it, fresh] = out.emplace(t->symbol, level);
    if (!fresh && level > it->second) it->second = level;
    return;
  }
  for (const auto& a : t->args) var_position_depths(a, level + 1, out);
}

// Candidate universe terms per allowed depth, filtered lazily. Using a
// pruned list means some derivable instance lies beyond the cap.
struct UniverseFilter {
  const std::vector<TermPtr>& universe;
  std::map<int, std::vector<TermPtr>> by_allowed;

  const std::vector<TermPtr>& get(int allowed, bool& discarded) {
    auto it = by_allowed.find(allowed);
    if (it == by_allowed.end()) {
      std::vector<TermPtr> v;
      for (const auto& t : universe)
        if (term_depth(t) <= allowed) v.push_back(t);
      it = by_allowed.emplace(allowed, std::move(v)).first;
    }
    if (it->second.size() < universe.size()) discarded = true;
    return it->second;
  }
};

// Grounds the remaining head variables of each matched body substitution.
void ground_heads(const Clause& clause, const std::vector<Subst>& partial,
                  UniverseFilter& filter, bool universe_infinite, int depth_cap,
                  std::vector<TermPtr>& out, bool& discarded) {
  // a variable nested at level d only admits terms of depth cap - d
  std::map<std::string, int> pos;
  for (const auto& a : clause.head->args) var_position_depths(a, 0, pos);

  for (const auto& theta : partial) {
    TermPtr head = theta.apply(clause.head);
    auto head_vars = vars_of(head);
    if (head_vars.empty()) {
      if (atom_depth(head) <= depth_cap) out.push_back(head);
      else discarded = true;
      continue;
    }
    // deeper groundings than the universe provides always exist when the
    // Herbrand universe is infinite
    if (universe_infinite) discarded = true;
    if (head_vars.size() == 1) {
      for (const auto& t :
           filter.get(depth_cap - pos[head_vars[0]], discarded)) {
        TermPtr inst = Subst::singleton(head_vars[0], t).apply(head);
        if (atom_depth(inst) <= depth_cap) out.push_back(inst);
        else discarded = true;
      }
      continue;
    }
    std::vector<std::vector<TermPtr>> cands(head_vars.size());
    for (std::size_t i = 0; i < head_vars.size(); ++i)
      cands[i] = filter.get(depth_cap - pos[head_vars[i]], discarded);
    for_groundings(head_vars, cands, [&](const Subst& g) {
      TermPtr inst = g.apply(head);
      if (atom_depth(inst) <= depth_cap) out.push_back(inst);
      else discarded = true;
    });
  }
}

void match_against(const TermPtr& body_atom, const TermPtr* begin,
                   const TermPtr* end, std::vector<Subst>& partial) {
  std::vector<Subst> next;
  for (const auto& theta : partial) {
    TermPtr pat = theta.apply(body_atom);
    for (const TermPtr* p = begin; p != end; ++p)
      if (auto m = match(pat, *p)) next.push_back(theta.compose(*m));
  }
  partial = std::move(next);
}

// Matches the clause body (left to right) against the ground atoms of the
// interpretation, then grounds any remaining head variables.
void fire_clause(const Clause& clause, const std::vector<TermPtr>& interp,
                 UniverseFilter& filter, bool universe_infinite, int depth_cap,
                 std::vector<TermPtr>& out, bool& discarded) {
  std::vector<Subst> partial{Subst{}};
  for (const auto& body_atom : clause.body) {
    match_against(body_atom, interp.data(), interp.data() + interp.size(),
                  partial);
    if (partial.empty()) return;
  }
  ground_heads(clause, partial, filter, universe_infinite, depth_cap, out,
               discarded);
}

// Semi-naive firing: only body matches touching the freshly derived atoms.
// `full` already includes `delta`; its first prev_size atoms predate it.
void fire_clause_seeded(const Clause& clause, const std::vector<TermPtr>& full,
                        std::size_t prev_size,
                        const std::vector<TermPtr>& delta,
                        UniverseFilter& filter, bool universe_infinite,
                        int depth_cap, std::vector<TermPtr>& out,
                        bool& discarded) {
  for (std::size_t seed = 0; seed < clause.body.size(); ++seed) {
    std::vector<Subst> partial{Subst{}};
    for (std::size_t i = 0; i < clause.body.size() && !partial.empty(); ++i) {
      const TermPtr* b = full.data();
      const TermPtr* e = full.data() + full.size();
      if (i < seed) e = full.data() + prev_size;
      if (i == seed) {
        b = delta.data();
        e = delta.data() + delta.size();
      }
      match_against(clause.body[i], b, e, partial);
    }
    if (!partial.empty())
      ground_heads(clause, partial, filter, universe_infinite, depth_cap, out,
                   discarded);
  }
}

}  // namespace

std::vector<TermPtr> tp_step(const Program& p, const std::vector<TermPtr>& interp,
                             const Signature& sig, int depth_cap,
                             bool* discarded_out) {
  bool discarded = false;
  auto universe = ground_terms_upto_depth(sig.functions, depth_cap);
  UniverseFilter filter{universe, {}};
  bool infinite = !sig.finite_universe();
  AtomIndex index;
  std::vector<TermPtr> result = interp;
  for (const auto& a : interp) index.insert(a);
  std::vector<TermPtr> derived;
  for (const auto& clause : p.clauses)
    fire_clause(clause, interp, filter, infinite, depth_cap, derived, discarded);
  for (const auto& a : derived)
    if (index.insert(a)) result.push_back(a);
  std::sort(result.begin(), result.end(),
            [](const TermPtr& a, const TermPtr& b) { return term_compare(a, b) < 0; });
  if (discarded_out) *discarded_out = discarded;
  return result;
}

ModelApprox least_model_upto(const Program& p, const Signature& sig,
                             int depth_cap, int max_stages) {
  ModelApprox model;
  model.depth_cap = depth_cap;
  auto universe = ground_terms_upto_depth(sig.functions, depth_cap);
  UniverseFilter filter{universe, {}};
  bool infinite = !sig.finite_universe();
  // a discard in any round would also show up in the closing naive step,
  // so one sticky flag decides the fixpoint claim
  bool discarded = false;
  AtomIndex index;
  std::vector<TermPtr> full, delta, derived;

  const std::vector<TermPtr> empty;
  for (const auto& clause : p.clauses)
    fire_clause(clause, empty, filter, infinite, depth_cap, derived, discarded);
  for (const auto& a : derived)
    if (index.insert(a)) delta.push_back(a);

  bool closed = delta.empty();
  model.stage = closed ? 0 : 1;
  for (int round = 2; !closed && round <= max_stages; ++round) {
    std::size_t prev_size = full.size();
    full.insert(full.end(), delta.begin(), delta.end());
    derived.clear();
    for (const auto& clause : p.clauses) {
      if (clause.body.empty()) continue;  // facts fired in the first round
      fire_clause_seeded(clause, full, prev_size, delta, filter, infinite,
                         depth_cap, derived, discarded);
    }
    std::vector<TermPtr> next;
    for (const auto& a : derived)
      if (index.insert(a)) next.push_back(a);
    delta = std::move(next);
    if (delta.empty()) closed = true;
    else ++model.stage;
  }
  full.insert(full.end(), delta.begin(), delta.end());
  model.fixpoint_reached = closed && !discarded;
  std::sort(full.begin(), full.end(),
            [](const TermPtr& a, const TermPtr& b) { return term_compare(a, b) < 0; });
  model.atoms = std::move(full);
  return model;
}

Verdict model_satisfies(const Program& p, const Signature& sig, const Query& q,
                        const Budget& b, int depth_cap) {
  auto vars = vars_of(q.atoms);

  auto ground_check = [&](const Query& inst) -> Verdict {
    // sound and complete for ground queries
    return entails_direct(p, inst, b);
  };

  if (vars.empty()) {
    Verdict v = ground_check(q);
    if (v.holds()) return Verdict::make_holds("ground query provable");
    if (v.fails())
      return Verdict::make_fails("witness " + render_query(q) + " refuted");
    return v;
  }

  bool finite = sig.finite_universe();
  auto universe = ground_terms_upto_depth(sig.functions, finite ? 0 : depth_cap);
  if (universe.empty())
    return Verdict::make_unknown("empty Herbrand universe fragment");

  bool any_unknown = false;
  std::string witness;
  bool refuted = false;
  std::vector<std::size_t> idx(vars.size(), 0);
  for (;;) {
    std::map<std::string, TermPtr> m;
    for (std::size_t i = 0; i < vars.size(); ++i) m[vars[i]] = universe[idx[i]];
    Query inst{Subst::from_map(m).apply(q.atoms)};
    Verdict v = ground_check(inst);
    if (v.fails()) {
      refuted = true;
      witness = render_query(inst);
      break;
    }
    if (v.unknown()) any_unknown = true;
    std::size_t i = vars.size();
    while (i > 0 && ++idx[i - 1] == universe.size()) idx[--i] = 0;
    if (i == 0) break;
  }
  if (refuted) return Verdict::make_fails("witness " + witness + " refuted");
  if (any_unknown)
    return Verdict::make_unknown("some ground instances undecided within budget");
  if (finite)
    return Verdict::make_holds("all ground instances over the finite universe provable");
  return Verdict::make_unknown(
      "all instances up to depth " + std::to_string(depth_cap) + " provable",
      depth_cap);
}

}  // namespace hlab
