#include "hlab/term.hpp"

#include <algorithm>

#include "hlab/errors.hpp"

namespace hlab {

TermPtr Term::var(std::string name) {
  auto t = std::make_shared<Term>();
  t->symbol = std::move(name);
  t->is_variable = true;
  return t;
}

TermPtr Term::make(std::string functor, std::vector<TermPtr> args) {
  auto t = std::make_shared<Term>();
  t->symbol = std::move(functor);
  t->args = std::move(args);
  return t;
}

bool term_eq(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->is_variable != b->is_variable || a->symbol != b->symbol ||
      a->args.size() != b->args.size())
    return false;
  for (std::size_t i = 0; i < a->args.size(); ++i)
    if (!term_eq(a->args[i], b->args[i])) return false;
  return true;
}

int term_compare(const TermPtr& a, const TermPtr& b) {
  std::size_t sa = term_size(a), sb = term_size(b);
  if (sa != sb) return sa < sb ? -1 : 1;
  if (a->is_variable != b->is_variable) return a->is_variable ? -1 : 1;
  if (int c = a->symbol.compare(b->symbol); c != 0) return c < 0 ? -1 : 1;
  if (a->args.size() != b->args.size())
    return a->args.size() < b->args.size() ? -1 : 1;
  for (std::size_t i = 0; i < a->args.size(); ++i)
    if (int c = term_compare(a->args[i], b->args[i]); c != 0) return c;
  return 0;
}

std::size_t term_size(const TermPtr& t) {
  std::size_t n = 1;
  for (const auto& a : t->args) n += term_size(a);
  return n;
}

int term_depth(const TermPtr& t) {
  if (t->args.empty()) return 0;
  int d = 0;
  for (const auto& a : t->args) d = std::max(d, term_depth(a));
  return 1 + d;
}

bool is_ground(const TermPtr& t) {
  if (t->is_variable) return false;
  for (const auto& a : t->args)
    if (!is_ground(a)) return false;
  return true;
}

static void collect_vars(const TermPtr& t, std::vector<std::string>& order,
                         std::set<std::string>& seen) {
  if (t->is_variable) {
    if (seen.insert(t->symbol).second) order.push_back(t->symbol);
    return;
  }
  for (const auto& a : t->args) collect_vars(a, order, seen);
}

std::vector<std::string> vars_of(const TermPtr& t) {
  std::vector<std::string> order;
  std::set<std::string> seen;
  collect_vars(t, order, seen);
  return order;
}

std::vector<std::string> vars_of(const std::vector<TermPtr>& ts) {
  std::vector<std::string> order;
  std::set<std::string> seen;
  for (const auto& t : ts) collect_vars(t, order, seen);
  return order;
}

std::set<std::string> var_set(const TermPtr& t) {
  auto v = vars_of(t);
  return {v.begin(), v.end()};
}

std::set<std::string> var_set(const std::vector<TermPtr>& ts) {
  auto v = vars_of(ts);
  return {v.begin(), v.end()};
}

void collect_symbols(const TermPtr& t, SymbolSet& out) {
  if (t->is_variable) return;
  out.emplace(t->symbol, t->arity());
  for (const auto& a : t->args) collect_symbols(a, out);
}

SymbolSet symbols_of(const TermPtr& t) {
  SymbolSet out;
  collect_symbols(t, out);
  return out;
}

Subst Subst::singleton(const std::string& v, const TermPtr& t) {
  Subst s;
  if (!(t->is_variable && t->symbol == v)) s.bindings_[v] = t;
  return s;
}

Subst Subst::from_map(const std::map<std::string, TermPtr>& m) {
  Subst s;
  for (const auto& [v, t] : m)
    if (!(t->is_variable && t->symbol == v)) s.bindings_[v] = t;
  return s;
}

TermPtr Subst::lookup(const std::string& v) const {
  auto it = bindings_.find(v);
  return it == bindings_.end() ? nullptr : it->second;
}

TermPtr Subst::apply(const TermPtr& t) const {
  if (bindings_.empty()) return t;
  if (t->is_variable) {
    auto it = bindings_.find(t->symbol);
    return it == bindings_.end() ? t : it->second;
  }
  if (t->args.empty()) return t;
  std::vector<TermPtr> args;
  args.reserve(t->args.size());
  bool changed = false;
  for (const auto& a : t->args) {
    args.push_back(apply(a));
    changed = changed || args.back().get() != a.get();
  }
  return changed ? Term::make(t->symbol, std::move(args)) : t;
}

std::vector<TermPtr> Subst::apply(const std::vector<TermPtr>& ts) const {
  std::vector<TermPtr> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(apply(t));
  return out;
}

Subst Subst::compose(const Subst& other) const {
  Subst out;
  for (const auto& [v, t] : bindings_) {
    TermPtr t2 = other.apply(t);
    if (!(t2->is_variable && t2->symbol == v)) out.bindings_[v] = t2;
  }
  for (const auto& [v, t] : other.bindings_)
    if (!bindings_.count(v)) out.bindings_[v] = t;
  return out;
}

Subst Subst::restricted(const std::set<std::string>& vars) const {
  Subst out;
  for (const auto& [v, t] : bindings_)
    if (vars.count(v)) out.bindings_[v] = t;
  return out;
}

bool Subst::idempotent() const {
  for (const auto& [v, t] : bindings_)
    if (!term_eq(apply(t), t)) return false;
  return true;
}

static bool occurs(const std::string& v, const TermPtr& t) {
  if (t->is_variable) return t->symbol == v;
  for (const auto& a : t->args)
    if (occurs(v, a)) return true;
  return false;
}

std::optional<Subst> unify(const std::vector<TermPtr>& as,
                           const std::vector<TermPtr>& bs) {
  if (as.size() != bs.size()) return std::nullopt;
  Subst s;
  std::vector<std::pair<TermPtr, TermPtr>> todo;
  for (std::size_t i = as.size(); i > 0; --i)
    todo.emplace_back(as[i - 1], bs[i - 1]);
  while (!todo.empty()) {
    auto [x, y] = todo.back();
    todo.pop_back();
    x = s.apply(x);
    y = s.apply(y);
    if (term_eq(x, y)) continue;
    if (x->is_variable || y->is_variable) {
      if (!x->is_variable) std::swap(x, y);
      if (occurs(x->symbol, y)) return std::nullopt;
      s = s.compose(Subst::singleton(x->symbol, y));
      continue;
    }
    if (x->symbol != y->symbol || x->args.size() != y->args.size())
      return std::nullopt;
    for (std::size_t i = x->args.size(); i > 0; --i)
      todo.emplace_back(x->args[i - 1], y->args[i - 1]);
  }
  return s;
}

std::optional<Subst> unify(const TermPtr& a, const TermPtr& b) {
  return unify(std::vector<TermPtr>{a}, std::vector<TermPtr>{b});
}

static bool match_rec(const TermPtr& pat, const TermPtr& tgt,
                      std::map<std::string, TermPtr>& bound) {
  if (pat->is_variable) {
    auto it = bound.find(pat->symbol);
    if (it != bound.end()) return term_eq(it->second, tgt);
    bound[pat->symbol] = tgt;
    return true;
  }
  if (tgt->is_variable || pat->symbol != tgt->symbol ||
      pat->args.size() != tgt->args.size())
    return false;
  for (std::size_t i = 0; i < pat->args.size(); ++i)
    if (!match_rec(pat->args[i], tgt->args[i], bound)) return false;
  return true;
}

std::optional<Subst> match(const std::vector<TermPtr>& patterns,
                           const std::vector<TermPtr>& targets) {
  if (patterns.size() != targets.size()) return std::nullopt;
  std::map<std::string, TermPtr> bound;
  for (std::size_t i = 0; i < patterns.size(); ++i)
    if (!match_rec(patterns[i], targets[i], bound)) return std::nullopt;
  return Subst::from_map(bound);
}

std::optional<Subst> match(const TermPtr& pattern, const TermPtr& target) {
  return match(std::vector<TermPtr>{pattern}, std::vector<TermPtr>{target});
}

static bool variant_rec(const TermPtr& a, const TermPtr& b,
                        std::map<std::string, std::string>& fwd,
                        std::map<std::string, std::string>& bwd) {
  if (a->is_variable != b->is_variable) return false;
  if (a->is_variable) {
    auto f = fwd.find(a->symbol);
    auto g = bwd.find(b->symbol);
    if (f == fwd.end() && g == bwd.end()) {
      fwd[a->symbol] = b->symbol;
      bwd[b->symbol] = a->symbol;
      return true;
    }
    return f != fwd.end() && g != bwd.end() && f->second == b->symbol &&
           g->second == a->symbol;
  }
  if (a->symbol != b->symbol || a->args.size() != b->args.size()) return false;
  for (std::size_t i = 0; i < a->args.size(); ++i)
    if (!variant_rec(a->args[i], b->args[i], fwd, bwd)) return false;
  return true;
}

bool variant_of(const std::vector<TermPtr>& as, const std::vector<TermPtr>& bs) {
  if (as.size() != bs.size()) return false;
  std::map<std::string, std::string> fwd, bwd;
  for (std::size_t i = 0; i < as.size(); ++i)
    if (!variant_rec(as[i], bs[i], fwd, bwd)) return false;
  return true;
}

bool variant_of(const TermPtr& a, const TermPtr& b) {
  return variant_of(std::vector<TermPtr>{a}, std::vector<TermPtr>{b});
}

std::vector<Subst> single_binding_unifiers(const TermPtr& s1, const TermPtr& s2,
                                           const std::vector<TermPtr>& universe) {
  if (term_eq(s1, s2))
    throw PremiseError("single_binding_unifiers: terms must be distinct");
  std::vector<Subst> out;
  std::set<std::pair<std::string, std::string>> seen;  // (var, rendered term)
  auto vars = vars_of(std::vector<TermPtr>{s1, s2});
  for (const auto& v : vars) {
    for (const auto& u : universe) {
      if (u->is_variable) continue;
      Subst theta = Subst::singleton(v, u);
      if (theta.empty()) continue;
      if (term_eq(theta.apply(s1), theta.apply(s2))) {
        // dedup by structural identity of the binding
        std::string key;
        key.reserve(32);
        // cheap structural key: preorder walk
        std::vector<TermPtr> stack{u};
        while (!stack.empty()) {
          TermPtr t = stack.back();
          stack.pop_back();
          key += t->symbol;
          key += t->is_variable ? '?' : '(';
          for (auto it = t->args.rbegin(); it != t->args.rend(); ++it)
            stack.push_back(*it);
        }
        if (seen.emplace(v, key).second) out.push_back(theta);
      }
    }
  }
  return out;
}

std::string VarGen::fresh(const std::set<std::string>& avoid) {
  for (;;) {
    std::string name = "V" + std::to_string(next_++);
    if (!avoid.count(name)) return name;
  }
}

}  // namespace hlab
