#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hlab/syntax.hpp"
#include "hlab/term.hpp"

namespace hlab {

struct Budget {
  int max_depth = 128;              // resolution steps per derivation
  std::uint64_t max_nodes = 2'000'000;  // total SLD-tree nodes
};

// Three-valued result. Holds and Fails are definite: they are never emitted
// on a budget cut.
struct Verdict {
  enum class Kind { Holds, Fails, Unknown };
  Kind kind = Kind::Unknown;
  std::string detail;                // evidence / witness / frontier note
  std::optional<int> holds_up_to;    // model checks: verified depth

  bool holds() const { return kind == Kind::Holds; }
  bool fails() const { return kind == Kind::Fails; }
  bool unknown() const { return kind == Kind::Unknown; }
  bool definite() const { return kind != Kind::Unknown; }

  static Verdict make_holds(std::string detail = "") {
    return {Kind::Holds, std::move(detail), std::nullopt};
  }
  static Verdict make_fails(std::string detail = "") {
    return {Kind::Fails, std::move(detail), std::nullopt};
  }
  static Verdict make_unknown(std::string detail = "",
                              std::optional<int> up_to = std::nullopt) {
    return {Kind::Unknown, std::move(detail), up_to};
  }
};

std::string verdict_kind_name(Verdict::Kind k);

struct SldResult {
  std::vector<Subst> answers;  // restricted to Var(Q), derivation order
  bool exhausted = false;      // whole SLD tree finite and fully explored
  std::uint64_t nodes = 0;
  int depth_used = 0;
};

// Fair SLD search: iterative deepening over derivation length, leftmost
// selection. Without keep_duplicates, answers that are variants or instances
// of another reported answer are dropped.
SldResult sld_answers(const Program& p, const Query& q, const Budget& b,
                      bool keep_duplicates = false);

// P |= Q via the computed-answer route: Holds iff some computed answer
// leaves Q a variant of itself; Fails only on an exhausted tree.
Verdict entails_direct(const Program& p, const Query& q, const Budget& b);

// P |= Q via grounding: replace the query variables by fresh constants from
// the reserved '$' namespace and decide the ground query by SLD.
Verdict entails_via_grounding(const Program& p, const Query& q, const Budget& b);

// Runs both routes and cross-checks: definite verdicts must agree, else an
// InternalInconsistencyError with a reproduction bundle is thrown.
Verdict entails(const Program& p, const Query& q, const Budget& b);

}  // namespace hlab
