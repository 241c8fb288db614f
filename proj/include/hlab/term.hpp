#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hlab {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// First-order term: a variable, or a functor applied to argument terms.
// Constants are compounds with no arguments. Immutable after construction.
struct Term {
  std::string symbol;         // variable name, or functor
  std::vector<TermPtr> args;  // always empty for variables
  bool is_variable = false;

  static TermPtr var(std::string name);
  static TermPtr make(std::string functor, std::vector<TermPtr> args = {});
  static TermPtr constant(std::string name) { return make(std::move(name)); }

  bool is_var() const { return is_variable; }
  bool is_constant() const { return !is_variable && args.empty(); }
  int arity() const { return static_cast<int>(args.size()); }
};

// (name, arity) pair; arity-0 symbols are constants.
using Symbol = std::pair<std::string, int>;
using SymbolSet = std::set<Symbol>;

bool term_eq(const TermPtr& a, const TermPtr& b);

// Canonical order: by node count, then variables before compounds,
// then symbol name, then arity, then arguments recursively.
int term_compare(const TermPtr& a, const TermPtr& b);

// Node count; a proper subterm is always strictly smaller.
std::size_t term_size(const TermPtr& t);

// Nesting depth: variables and constants have depth 0.
int term_depth(const TermPtr& t);

bool is_ground(const TermPtr& t);

// Variables in order of first occurrence.
std::vector<std::string> vars_of(const TermPtr& t);
std::vector<std::string> vars_of(const std::vector<TermPtr>& ts);
std::set<std::string> var_set(const TermPtr& t);
std::set<std::string> var_set(const std::vector<TermPtr>& ts);

// All function symbols of a term (every non-variable node).
void collect_symbols(const TermPtr& t, SymbolSet& out);
SymbolSet symbols_of(const TermPtr& t);

// Finite map variable -> term with no identity bindings.
class Subst {
 public:
  Subst() = default;

  // Singleton {v/t}; an identity binding yields the empty substitution.
  static Subst singleton(const std::string& v, const TermPtr& t);

  // Simultaneous bindings; identity pairs are dropped.
  static Subst from_map(const std::map<std::string, TermPtr>& m);

  const std::map<std::string, TermPtr>& bindings() const { return bindings_; }
  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }
  bool binds(const std::string& v) const { return bindings_.count(v) != 0; }
  TermPtr lookup(const std::string& v) const;

  TermPtr apply(const TermPtr& t) const;
  std::vector<TermPtr> apply(const std::vector<TermPtr>& ts) const;

  // this, then other:  (t)(this.compose(other)) == other.apply(this.apply(t)).
  Subst compose(const Subst& other) const;

  Subst restricted(const std::set<std::string>& vars) const;

  bool idempotent() const;

 private:
  std::map<std::string, TermPtr> bindings_;
};

// Most general idempotent unifier with occurs check; absent if none exists.
std::optional<Subst> unify(const TermPtr& a, const TermPtr& b);
std::optional<Subst> unify(const std::vector<TermPtr>& as,
                           const std::vector<TermPtr>& bs);

// One-way matching: a substitution s over Var(pattern) with
// s(pattern) == target.
std::optional<Subst> match(const TermPtr& pattern, const TermPtr& target);
std::optional<Subst> match(const std::vector<TermPtr>& patterns,
                           const std::vector<TermPtr>& targets);

// Equality up to consistent variable renaming.
bool variant_of(const TermPtr& a, const TermPtr& b);
bool variant_of(const std::vector<TermPtr>& as, const std::vector<TermPtr>& bs);

// All substitutions {X/u} with X a variable of s1 or s2 and u a non-variable
// from the universe that make s1 and s2 equal. Brute-force oracle; rejects
// s1 == s2.
std::vector<Subst> single_binding_unifiers(const TermPtr& s1, const TermPtr& s2,
                                           const std::vector<TermPtr>& universe);

// Monotone fresh-variable source for one workspace. Produces V1, V2, ...
// skipping names in the avoid set.
class VarGen {
 public:
  std::string fresh(const std::set<std::string>& avoid);

 private:
  int next_ = 1;
};

}  // namespace hlab
