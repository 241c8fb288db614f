#include <doctest.h>

#include "hlab/equivalence.hpp"
#include "hlab/errors.hpp"
#include "hlab/syntax.hpp"

using namespace hlab;

namespace {

const char* kAppend =
    "#alphabet '[]'/0, '.'/2.\n"
    "app([], L, L).\n"
    "app([H|T], L, [H|R]) :- app(T, L, R).\n";

Signature with_functions(Signature sig, const SymbolSet& extra) {
  for (const auto& s : extra) sig.functions.insert(s);
  return sig;
}

}  // namespace

TEST_CASE("condition (a): a non-constant symbol outside the program") {
  auto [p, sig] = parse_program(kAppend);
  Query q = parse_query("app([X], [Y], [X,Y])");

  auto bare = check_conditions(p, q, sig);
  CHECK(!bare.cond_a);
  CHECK(!bare.holds);

  auto ext = check_conditions(p, q, with_functions(sig, {{"g", 1}}));
  CHECK(ext.cond_a);
  REQUIRE(ext.cond_a_witness.has_value());
  CHECK(*ext.cond_a_witness == Symbol{"g", 1});
  CHECK(ext.holds);
}

TEST_CASE("condition (b): per-atom spare constants") {
  auto [p, sig] = parse_program("#alphabet a/0.\np(a).\n");
  Query q = parse_query("p(X)");  // one variable, zero spare constants
  CHECK(!check_conditions(p, q, sig).holds);

  auto one_spare = check_conditions(p, q, with_functions(sig, {{"b", 0}}));
  CHECK(one_spare.cond_b);
  CHECK(one_spare.holds);
  REQUIRE(one_spare.per_atom.size() == 1);
  CHECK(one_spare.per_atom[0].distinct_vars == 1);
  CHECK(one_spare.per_atom[0].spare_constants == 1);

  // a repeated variable counts once
  Query q2 = parse_query("p(X), q(X, X)");
  auto r2 = check_conditions(p, q2, with_functions(sig, {{"b", 0}}));
  CHECK(r2.cond_b);
}

TEST_CASE("constants of the atom itself are not spare") {
  auto [p, sig] = parse_program("#alphabet a/0, b/0.\np(a, a).\n");
  Query q = parse_query("p(X, b)");  // b occurs in the atom
  CHECK(!check_conditions(p, q, sig).holds);
}

TEST_CASE("introductory counterexample: model holds, entailment fails") {
  auto [p, sig] = parse_program("#alphabet a/0.\np(a).\n");
  Query q = parse_query("p(X)");
  auto r = equivalence_verdict(p, q, sig, Budget{}, 2);
  CHECK(r.model_verdict.holds());
  CHECK(r.entails_verdict.fails());
  CHECK(!r.conditions.holds);
  CHECK(r.consistent_with_theorem);
  CHECK(report_exit_code(r) == 0);
}

TEST_CASE("conditions holding forces agreement on definite verdicts") {
  auto [p, sig] = parse_program("#alphabet a/0, b/0.\np(a).\n");
  Query q = parse_query("p(X)");
  auto r = equivalence_verdict(p, q, sig, Budget{}, 2);
  CHECK(r.conditions.holds);
  CHECK(r.model_verdict.fails());
  CHECK(r.entails_verdict.fails());
  CHECK(r.consistent_with_theorem);
}

TEST_CASE("exit codes are a total function of the report kind") {
  EquivalenceReport r;
  r.consistent_with_theorem = false;
  CHECK(report_exit_code(r) == 3);
  r.consistent_with_theorem = true;
  for (auto mk : {Verdict::Kind::Holds, Verdict::Kind::Fails,
                  Verdict::Kind::Unknown})
    for (auto ek : {Verdict::Kind::Holds, Verdict::Kind::Fails,
                    Verdict::Kind::Unknown}) {
      r.model_verdict.kind = mk;
      r.entails_verdict.kind = ek;
      int code = report_exit_code(r);
      if (mk != Verdict::Kind::Unknown && ek != Verdict::Kind::Unknown)
        CHECK(code == 0);
      else
        CHECK(code == 1);
    }
}

TEST_CASE("atomic generalization check under condition (a)") {
  auto [p, sig] = parse_program(kAppend);
  sig = with_functions(sig, {{"a", 0}, {"b", 0}, {"g", 1}});
  auto g = check_lemma4(p, parse_term("app([a], [b], [a,b])"), sig, Budget{}, 3);
  CHECK(variant_of(g.generalized.atoms,
                   parse_query("app([V1], [V2], [V1,V2])").atoms));
  CHECK(g.model_verdict.holds());
  CHECK(g.entails_verdict.holds());
  CHECK(g.both_definite);
  CHECK(g.iff_holds);
}

TEST_CASE("atomic generalization requires condition (a) or (b)") {
  auto [p, sig] = parse_program(kAppend);
  CHECK_THROWS_AS(
      check_lemma4(p, parse_term("app([X], [Y], [X,Y])"), sig, Budget{}, 3),
      PremiseError);
}

TEST_CASE("caller-supplied generalization is validated") {
  auto [p, sig] = parse_program(kAppend);
  sig = with_functions(sig, {{"a", 0}, {"g", 1}});
  TermPtr atom = parse_term("app([a], [], [a])");
  TermPtr gen = parse_term("app([V1], [], [V1])");
  Subst phi = Subst::singleton("V1", parse_term("a"));
  auto g = check_lemma4_remark(p, atom, gen, phi, sig, Budget{}, 3);
  CHECK(g.entails_verdict.holds());

  // phi value must be an alien
  Subst bad = Subst::singleton("V1", parse_term("[]"));
  CHECK_THROWS_AS(check_lemma4_remark(p, parse_term("app([[]], [], [[]])"),
                                      gen, bad, sig, Budget{}, 3),
                  PremiseError);
  // Q must equal the generalization instantiated
  CHECK_THROWS_AS(check_lemma4_remark(p, parse_term("app([], [], [])"), gen,
                                      phi, sig, Budget{}, 3),
                  PremiseError);
}

TEST_CASE("non-atomic queries need the per-atom constants condition") {
  auto [p, sig] = parse_program("#alphabet a/0, b/0, c/0.\nq(a).\nr(a).\n");
  Query q = parse_query("q(X), r(X)");
  auto g = check_corollary2(p, q, sig, Budget{}, 2);
  CHECK(g.model_verdict.definite());
  CHECK(g.entails_verdict.definite());
  CHECK(g.iff_holds);
}

TEST_CASE("counterexample for p(V) over alphabet {a}") {
  SymbolSet f0{{"a", 0}};
  Signature sig;
  sig.functions = {{"a", 0}};
  sig.predicates = {{"p", 1}};
  Query q = parse_query("p(V)");
  auto c = build_counterexample(f0, sig, q);
  CHECK(render_program(c.program) == "p(a).\n");
  CHECK(is_ground(c.witness));

  // the program satisfies the query in its model but does not entail it
  Budget b;
  CHECK(model_satisfies(c.program, sig, q, b, 2).holds());
  CHECK(entails(c.program, q, b).fails());
  // the witness instance is refuted
  CHECK(entails(c.program, Query{{c.witness}}, b).fails());
}

TEST_CASE("counterexample covers out-of-alphabet constants and variables") {
  SymbolSet f0{{"a", 0}, {"f", 1}};
  Signature sig;
  sig.functions = {{"a", 0}, {"b", 0}, {"f", 1}};
  sig.predicates = {{"p", 3}};
  Query q = parse_query("p(X, b, f(X))");
  auto c = build_counterexample(f0, sig, q);

  CHECK(occurring_symbols(c.program) == f0);
  Budget b;
  CHECK(entails(c.program, q, b).fails());
  // every shallow ground instance over the original alphabet is in the model
  auto m = least_model_upto(c.program, sig, 2);
  for (const auto& t : ground_terms_upto_depth(sig.functions, 1)) {
    Subst s = Subst::singleton("X", t);
    CHECK(m.contains(s.apply(q.atoms[0])));
  }
}

TEST_CASE("counterexample premises are validated") {
  Signature sig;
  sig.functions = {{"a", 0}};
  sig.predicates = {{"p", 1}};
  // query predicates must be distinct
  CHECK_THROWS_AS(
      build_counterexample({{"a", 0}}, sig, parse_query("p(X), p(Y)")),
      PremiseError);
  // the query must violate the sufficient condition
  Signature big = sig;
  big.functions.insert({"g", 1});
  CHECK_THROWS_AS(build_counterexample({{"a", 0}}, big, parse_query("p(X)")),
                  PremiseError);
}
