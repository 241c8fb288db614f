#pragma once

#include <set>
#include <string>
#include <vector>

#include "hlab/sld.hpp"
#include "hlab/syntax.hpp"

namespace hlab {

// Maximum nesting depth of the argument terms of an atom.
int atom_depth(const TermPtr& atom);

// Bounded approximation of the least Herbrand model: the atoms derivable by
// immediate-consequence iteration while never retaining an atom deeper than
// the cap. Always a subset of the least model.
struct ModelApprox {
  std::vector<TermPtr> atoms;  // canonical order
  int stage = 0;               // iterations until closure or the stage bound
  int depth_cap = 0;
  bool fixpoint_reached = false;

  bool contains(const TermPtr& ground_atom) const;
};

// One immediate-consequence step restricted to the depth cap. Sets
// `discarded` when a derivable head instance was dropped (deeper than the
// cap, or the variable grounding space reaches past it).
std::vector<TermPtr> tp_step(const Program& p, const std::vector<TermPtr>& interp,
                             const Signature& sig, int depth_cap,
                             bool* discarded = nullptr);

ModelApprox least_model_upto(const Program& p, const Signature& sig,
                             int depth_cap, int max_stages = 64);

// Decides whether every ground instance of Q over the signature is in M_P.
// Instances are enumerated up to the depth cap and decided by ground SLD.
// Holds only for a finite, fully verified instance space; an infinite space
// with all instances verified yields Unknown carrying holds_up_to.
Verdict model_satisfies(const Program& p, const Signature& sig, const Query& q,
                        const Budget& b, int depth_cap);

}  // namespace hlab
