#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hlab/alien.hpp"
#include "hlab/herbrand.hpp"
#include "hlab/sld.hpp"
#include "hlab/syntax.hpp"

namespace hlab {

struct AtomCondition {
  TermPtr atom;
  int distinct_vars = 0;    // k
  int spare_constants = 0;  // constants in sig outside P and this atom
  bool satisfied = false;
};

// Sufficient condition for "M_P |= Q iff P |= Q": (a) a non-constant function
// symbol outside the program, or (b) per atom, enough spare constants.
struct ConditionReport {
  bool cond_a = false;
  std::optional<Symbol> cond_a_witness;
  std::vector<AtomCondition> per_atom;
  bool cond_b = false;
  bool holds = false;
  // simpler variant: k constants outside P,Q and no atom with more than k vars
  bool simple_sufficient = false;
};

struct EquivalenceReport {
  Verdict model_verdict;
  Verdict entails_verdict;
  ConditionReport conditions;
  bool consistent_with_theorem = true;
};

ConditionReport check_conditions(const Program& p, const Query& q,
                                 const Signature& sig);

// Runs both semantics and the condition check. A definite-verdict violation
// of the theorem escalates as InternalInconsistencyError.
EquivalenceReport equivalence_verdict(const Program& p, const Query& q,
                                      const Signature& sig, const Budget& b,
                                      int depth_cap);

struct GeneralizationCheck {
  Query generalized;
  Verdict model_verdict;    // M_P |= Q
  Verdict entails_verdict;  // P |= Q'
  bool both_definite = false;
  bool iff_holds = false;   // vacuously true unless both definite
};

// Atomic Q: compares M_P |= Q with P |= Q' for Q' = Q generalized for P.
// Requires condition (a) or (b) of the atomic lemma.
GeneralizationCheck check_lemma4(const Program& p, const TermPtr& atom,
                                 const Signature& sig, const Budget& b,
                                 int depth_cap);

// Weakened-premise mode: the caller supplies Q' and phi with Q = Q'phi,
// the phi values distinct aliens w.r.t. P and Q', and Dom(phi) disjoint
// from Var(Q). Validated, then the same comparison runs.
GeneralizationCheck check_lemma4_remark(const Program& p, const TermPtr& atom,
                                        const TermPtr& generalized,
                                        const Subst& phi, const Signature& sig,
                                        const Budget& b, int depth_cap);

// Non-atomic queries with the per-atom constants condition (c).
GeneralizationCheck check_corollary2(const Program& p, const Query& q,
                                     const Signature& sig, const Budget& b,
                                     int depth_cap);

// Counterexample program for a query violating the sufficient condition:
// the template atom's slot arrangements of forms (i) and (ii), plus the
// other query atoms as unit clauses.
struct Counterexample {
  Program program;
  int selected_atom = 0;
  TermPtr template_atom;                 // slots as variables V1..V_{n+k}
  std::vector<std::string> slot_vars;    // slot order by first occurrence
  std::vector<TermPtr> slot_constants;   // nullptr for variable slots
  std::vector<TermPtr> spare_constants;  // existing constants outside F0, A
  std::vector<Symbol> fresh_constants;   // added to refute the witness
  Signature extended_sig;
  TermPtr witness;  // ground template instance false in the extended model
};

Counterexample build_counterexample(const SymbolSet& f0, const Signature& sig,
                                    const Query& q);

// Exit-code policy for equivalence reports: 0 consistent with a definite
// comparison, 1 unknown-dominated, 3 internal inconsistency.
int report_exit_code(const EquivalenceReport& r);

}  // namespace hlab
