#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hlab/term.hpp"

namespace hlab {

// Definite clause: head atom plus a possibly empty body.
struct Clause {
  TermPtr head;
  std::vector<TermPtr> body;
};

struct Program {
  std::vector<Clause> clauses;
  std::string name;
};

// Nonempty conjunction of atoms.
struct Query {
  std::vector<TermPtr> atoms;
};

// The underlying language: function symbols (possibly strictly larger than
// what occurs in any program) and predicate symbols. Function and predicate
// namespaces are disjoint; the same spelling may appear in both.
struct Signature {
  SymbolSet functions;
  SymbolSet predicates;

  bool has_constant() const;
  // True iff the Herbrand universe is finite (no non-constant symbol).
  bool finite_universe() const;
};

// Parses the pure-Prolog subset with an optional `#alphabet f/2, a/0.`
// directive. Without a directive the signature defaults to the symbols
// occurring in the program. Rejects programs whose declared alphabet misses
// an occurring symbol, and alphabets with no constant (empty Herbrand
// universe).
std::pair<Program, Signature> parse_program(const std::string& text);

Query parse_query(const std::string& text);
TermPtr parse_term(const std::string& text);

// "a/0, f/1" with optional quoting: "'[]'/0, '.'/2".
std::vector<Symbol> parse_symbol_list(const std::string& text);

SymbolSet occurring_symbols(const Program& p);
SymbolSet occurring_symbols(const Query& q);
SymbolSet occurring_symbols(const TermPtr& atom);  // function symbols of args
SymbolSet occurring_predicates(const Program& p);
SymbolSet occurring_predicates(const Query& q);

// Enlarges the alphabet; a clash with an existing symbol is an error.
Signature extend_signature(const Signature& sig, const std::vector<Symbol>& fresh);

// A constant name not in sig and not among `taken`; tries base1, base2, ...
Symbol fresh_constant(const Signature& sig, const std::set<std::string>& taken,
                      const std::string& base = "c");

std::string render_term(const TermPtr& t);
std::string render_atoms(const std::vector<TermPtr>& atoms);
std::string render_query(const Query& q);
std::string render_clause(const Clause& c);
std::string render_program(const Program& p);
std::string render_subst(const Subst& s);
std::string render_symbols(const SymbolSet& syms);

// All ground terms over the function symbols with nesting depth <= depth,
// in canonical term order.
std::vector<TermPtr> ground_terms_upto_depth(const SymbolSet& functions,
                                             int depth);

// Streams the Herbrand universe in canonical term order (size-major).
class GroundTermEnumerator {
 public:
  explicit GroundTermEnumerator(SymbolSet functions);
  // Next term, or nullptr when the universe is exhausted (finite case).
  TermPtr next();

 private:
  const std::vector<TermPtr>& bucket(std::size_t size);
  SymbolSet functions_;
  bool infinite_;
  std::vector<std::vector<TermPtr>> by_size_;  // by_size_[s] = terms of size s
  std::size_t size_ = 1;
  std::size_t index_ = 0;
};

}  // namespace hlab
