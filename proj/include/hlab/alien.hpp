#pragma once

#include <vector>

#include "hlab/syntax.hpp"
#include "hlab/term.hpp"

namespace hlab {

// Occurrence path: atom index in the query, then argument indices from the
// atom root down to the occurrence (all 0-based).
using Path = std::vector<int>;

struct AlienOccurrences {
  TermPtr term;
  std::vector<Path> paths;  // all maximal occurrences of this term
};

struct GeneralizationResult {
  Query generalized;
  Subst rho;                 // fresh variable -> replaced alien term
  std::vector<Path> positions;
};

// Non-variable term whose main symbol is outside F.
bool is_alien(const TermPtr& t, const SymbolSet& F);

// Distinct terms whose occurrences in the query are maximal aliens w.r.t. F,
// in order of first occurrence; subterms of aliens are not reported.
std::vector<AlienOccurrences> maximal_aliens(const Query& q, const SymbolSet& F);
std::vector<AlienOccurrences> maximal_aliens(const TermPtr& atom,
                                             const SymbolSet& F);

// Systematic replacement of maximal aliens by fresh distinct variables;
// equal alien terms share one variable, numbered by first occurrence.
GeneralizationResult generalize(const Query& q, const SymbolSet& F);
GeneralizationResult generalize(const Query& q, const Program& p);

// First `limit` ground terms over sig with main symbol outside F, in
// canonical term order.
std::vector<TermPtr> enumerate_ground_aliens(const SymbolSet& F,
                                             const Signature& sig,
                                             std::size_t limit);

// Grounds a premise-shaped sequence (a prefix of distinct variables followed
// by aliens w.r.t. F) to pairwise distinct ground aliens. Deterministic:
// each variable gets the first canonical ground alien that keeps every pair
// distinct. Throws PremiseError on a violated premise.
Subst distinct_alien_instance(const std::vector<TermPtr>& ts, const SymbolSet& F,
                              const Signature& sig);

}  // namespace hlab
