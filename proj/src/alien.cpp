#include "hlab/alien.hpp"

#include <algorithm>

#include "hlab/errors.hpp"

namespace hlab {

bool is_alien(const TermPtr& t, const SymbolSet& F) {
  return !t->is_variable && !F.count({t->symbol, t->arity()});
}

namespace {

void scan(const TermPtr& t, Path& path, const SymbolSet& F,
          std::vector<AlienOccurrences>& out) {
  if (is_alien(t, F)) {
    for (auto& occ : out) {
      if (term_eq(occ.term, t)) {
        occ.paths.push_back(path);
        return;
      }
    }
    out.push_back({t, {path}});
    return;  // do not descend: inner aliens are not maximal
  }
  for (int i = 0; i < t->arity(); ++i) {
    path.push_back(i);
    scan(t->args[i], path, F, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<AlienOccurrences> maximal_aliens(const Query& q, const SymbolSet& F) {
  std::vector<AlienOccurrences> out;
  for (std::size_t i = 0; i < q.atoms.size(); ++i) {
    const TermPtr& atom = q.atoms[i];
    for (int j = 0; j < atom->arity(); ++j) {
      Path path{static_cast<int>(i), j};
      scan(atom->args[j], path, F, out);
    }
  }
  return out;
}

std::vector<AlienOccurrences> maximal_aliens(const TermPtr& atom,
                                             const SymbolSet& F) {
  Query q{{atom}};
  return maximal_aliens(q, F);
}

namespace {

TermPtr replace_aliens(const TermPtr& t, const SymbolSet& F,
                       const std::vector<AlienOccurrences>& aliens,
                       const std::vector<TermPtr>& vars) {
  if (is_alien(t, F)) {
    for (std::size_t i = 0; i < aliens.size(); ++i)
      if (term_eq(aliens[i].term, t)) return vars[i];
    return t;  // unreachable for terms scanned by maximal_aliens
  }
  if (t->is_variable || t->args.empty()) return t;
  std::vector<TermPtr> args;
  args.reserve(t->args.size());
  for (const auto& a : t->args) args.push_back(replace_aliens(a, F, aliens, vars));
  return Term::make(t->symbol, std::move(args));
}

}  // namespace

GeneralizationResult generalize(const Query& q, const SymbolSet& F) {
  GeneralizationResult res;
  auto aliens = maximal_aliens(q, F);
  std::set<std::string> avoid = var_set(q.atoms);
  VarGen gen;
  std::vector<TermPtr> vars;
  std::map<std::string, TermPtr> rho;
  for (const auto& occ : aliens) {
    std::string name = gen.fresh(avoid);
    avoid.insert(name);
    vars.push_back(Term::var(name));
    rho[name] = occ.term;
    for (const auto& p : occ.paths) res.positions.push_back(p);
  }
  std::sort(res.positions.begin(), res.positions.end());
  for (const auto& atom : q.atoms) {
    std::vector<TermPtr> args;
    args.reserve(atom->args.size());
    for (const auto& a : atom->args)
      args.push_back(replace_aliens(a, F, aliens, vars));
    res.generalized.atoms.push_back(Term::make(atom->symbol, std::move(args)));
  }
  res.rho = Subst::from_map(rho);
  return res;
}

GeneralizationResult generalize(const Query& q, const Program& p) {
  return generalize(q, occurring_symbols(p));
}

std::vector<TermPtr> enumerate_ground_aliens(const SymbolSet& F,
                                             const Signature& sig,
                                             std::size_t limit) {
  std::vector<TermPtr> out;
  if (limit == 0) return out;
  // Finitely many aliens exist iff every alien main symbol is a constant.
  bool infinite = false;
  bool any_alien_symbol = false;
  for (const auto& s : sig.functions) {
    if (F.count(s)) continue;
    any_alien_symbol = true;
    if (s.second > 0 && sig.has_constant()) infinite = true;
  }
  if (!any_alien_symbol) return out;
  GroundTermEnumerator en(sig.functions);
  while (out.size() < limit) {
    TermPtr t = en.next();
    if (!t) break;
    if (is_alien(t, F)) out.push_back(t);
    if (!infinite && !out.empty()) {
      // only constants can be aliens; stop once past size-1 terms
      if (term_size(t) > 1) break;
    }
  }
  return out;
}

Subst distinct_alien_instance(const std::vector<TermPtr>& ts, const SymbolSet& F,
                              const Signature& sig) {
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i + 1; j < ts.size(); ++j)
      if (term_eq(ts[i], ts[j]))
        throw PremiseError("distinct_alien_instance: input terms not distinct");
  std::size_t n = 0;
  while (n < ts.size() && ts[n]->is_variable) ++n;
  for (std::size_t i = n; i < ts.size(); ++i)
    if (!is_alien(ts[i], F))
      throw PremiseError(
          "distinct_alien_instance: expected a variable prefix followed by "
          "aliens");
  bool suffix_ground = true;
  for (std::size_t i = n; i < ts.size(); ++i)
    suffix_ground = suffix_ground && is_ground(ts[i]);

  auto distinct_from_suffix = [&](const TermPtr& u) {
    for (std::size_t i = n; i < ts.size(); ++i)
      if (term_eq(u, ts[i])) return false;
    return true;
  };

  if (suffix_ground) {
    // bind each prefix variable to a spare ground alien
    std::size_t want = n + (ts.size() - n);  // pool may collide with suffix
    auto pool = enumerate_ground_aliens(F, sig, want + n);
    std::map<std::string, TermPtr> sigma;
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      while (next < pool.size() && !distinct_from_suffix(pool[next])) ++next;
      if (next >= pool.size())
        throw PremiseError(
            "distinct_alien_instance: not enough ground aliens in the "
            "signature for the ground-suffix case");
      sigma[ts[i]->symbol] = pool[next++];
    }
    return Subst::from_map(sigma);
  }

  // Nonground suffix: a non-constant alien symbol exists, so the ground
  // alien pool is infinite. Bind variables one at a time, always taking the
  // first candidate that keeps every pair of terms distinct.
  auto vars = vars_of(ts);
  std::size_t pairs = ts.size() * (ts.size() - 1) / 2;
  auto pool = enumerate_ground_aliens(F, sig, pairs + ts.size() + 4);
  std::vector<TermPtr> cur = ts;
  Subst sigma;
  for (const auto& v : vars) {
    bool placed = false;
    for (const auto& s : pool) {
      Subst theta = Subst::singleton(v, s);
      bool ok = true;
      for (std::size_t i = 0; i < cur.size() && ok; ++i)
        for (std::size_t j = i + 1; j < cur.size() && ok; ++j)
          if (term_eq(theta.apply(cur[i]), theta.apply(cur[j]))) ok = false;
      if (ok) {
        cur = theta.apply(cur);
        sigma = sigma.compose(theta);
        placed = true;
        break;
      }
    }
    if (!placed)
      throw PremiseError("distinct_alien_instance: alien pool exhausted");
  }
  for (const auto& t : cur)
    if (!is_ground(t) || !is_alien(t, F))
      throw PremiseError("distinct_alien_instance: premise-shaped input required");
  std::set<std::string> dom(vars.begin(), vars.end());
  return sigma.restricted(dom);
}

}  // namespace hlab
