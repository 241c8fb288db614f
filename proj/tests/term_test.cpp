#include <doctest.h>

#include "hlab/errors.hpp"
#include "hlab/syntax.hpp"
#include "hlab/term.hpp"

using namespace hlab;

namespace {
TermPtr T(const std::string& s) { return parse_term(s); }
}  // namespace

TEST_CASE("term basics") {
  auto x = Term::var("X");
  auto a = Term::constant("a");
  auto fx = Term::make("f", {x});
  CHECK(x->is_var());
  CHECK(a->is_constant());
  CHECK(fx->arity() == 1);
  CHECK(term_size(fx) == 2);
  CHECK(term_depth(fx) == 1);
  CHECK(term_depth(a) == 0);
  CHECK(term_depth(x) == 0);
  CHECK(!is_ground(fx));
  CHECK(is_ground(T("f(g(a,b))")));
}

TEST_CASE("canonical order is size-major and total on distinct terms") {
  CHECK(term_compare(T("a"), T("f(a)")) < 0);
  CHECK(term_compare(Term::var("X"), T("a")) < 0);  // same size: vars first
  CHECK(term_compare(T("a"), T("b")) < 0);
  CHECK(term_compare(T("f(a)"), T("f(b)")) < 0);
  CHECK(term_compare(T("f(a)"), T("f(a)")) == 0);
  CHECK(term_compare(T("g(a,b)"), T("f(f(a))")) != 0);
}

TEST_CASE("vars_of reports first-occurrence order") {
  auto t = T("f(Y, g(X, Y), Z)");
  CHECK(vars_of(t) == std::vector<std::string>{"Y", "X", "Z"});
  CHECK(var_set(t) == std::set<std::string>{"X", "Y", "Z"});
}

TEST_CASE("collect_symbols covers every non-variable node") {
  auto s = symbols_of(T("f(g(a, X), b)"));
  CHECK(s == SymbolSet{{"f", 2}, {"g", 2}, {"a", 0}, {"b", 0}});
}

TEST_CASE("substitution application and composition") {
  Subst s1 = Subst::singleton("X", T("f(Y)"));
  Subst s2 = Subst::singleton("Y", T("a"));
  auto t = T("g(X, Y)");
  CHECK(term_eq(s2.apply(s1.apply(t)), s1.compose(s2).apply(t)));
  CHECK(term_eq(s1.compose(s2).apply(t), T("g(f(a), a)")));
  CHECK(Subst::singleton("X", Term::var("X")).empty());

  // from_map is simultaneous
  Subst swap = Subst::from_map({{"X", Term::var("Y")}, {"Y", Term::var("X")}});
  CHECK(term_eq(swap.apply(T("f(X, Y)")), T("f(Y, X)")));
}

TEST_CASE("restricted keeps only the requested variables") {
  Subst s = Subst::from_map({{"X", T("a")}, {"Y", T("b")}});
  Subst r = s.restricted({"X"});
  CHECK(r.size() == 1);
  CHECK(r.binds("X"));
  CHECK(!r.binds("Y"));
}

TEST_CASE("unify computes idempotent mgus") {
  auto u = unify(T("f(X, g(X))"), T("f(a, Y)"));
  REQUIRE(u);
  CHECK(u->idempotent());
  CHECK(term_eq(u->apply(T("f(X, g(X))")), u->apply(T("f(a, Y)"))));
  CHECK(term_eq(u->apply(Term::var("Y")), T("g(a)")));
}

TEST_CASE("unify fails on clash and on occurs check") {
  CHECK(!unify(T("f(a)"), T("g(a)")));
  CHECK(!unify(T("a"), T("b")));
  CHECK(!unify(Term::var("X"), T("f(X)")));
}

TEST_CASE("mgu is most general: any unifier factors through it") {
  auto s1 = T("f(X, Y)");
  auto s2 = T("f(Y, Z)");
  auto u = unify(s1, s2);
  REQUIRE(u);
  // the specific unifier {X/a, Y/a, Z/a}
  Subst g = Subst::from_map({{"X", T("a")}, {"Y", T("a")}, {"Z", T("a")}});
  auto lhs = g.apply(s1);
  auto via = u->apply(s1);
  auto m = match(via, lhs);
  CHECK(m);
}

TEST_CASE("match is one-way") {
  CHECK(match(T("f(X, X)"), T("f(a, a)")));
  CHECK(!match(T("f(X, X)"), T("f(a, b)")));
  CHECK(!match(T("f(a)"), T("f(X)")));
  // pattern variable kept identical stays consistent
  auto m = match(T("f(X, Y)"), T("f(X, a)"));
  REQUIRE(m);
  CHECK(term_eq(m->apply(T("f(X, Y)")), T("f(X, a)")));
}

TEST_CASE("variant_of is a bijective renaming check") {
  CHECK(variant_of(T("f(X, Y, X)"), T("f(A, B, A)")));
  CHECK(!variant_of(T("f(X, Y)"), T("f(A, A)")));
  CHECK(!variant_of(T("f(X, X)"), T("f(A, B)")));
  CHECK(!variant_of(T("f(X)"), T("f(a)")));
  CHECK(variant_of(T("f(X)"), T("f(X)")));
}

TEST_CASE("single_binding_unifiers finds at most one unifier") {
  std::vector<TermPtr> universe;
  for (const auto& s : {"a", "f(a)", "f(f(a))", "f(X)"}) universe.push_back(T(s));

  auto r = single_binding_unifiers(T("f(X)"), T("f(f(a))"), universe);
  REQUIRE(r.size() == 1);
  CHECK(term_eq(r[0].lookup("X"), T("f(a)")));

  CHECK(single_binding_unifiers(T("g(X, X)"), T("g(a, f(a))"), universe).empty());
  CHECK_THROWS_AS(single_binding_unifiers(T("f(X)"), T("f(X)"), universe),
                  PremiseError);
}

TEST_CASE("VarGen skips the avoid set") {
  VarGen gen;
  CHECK(gen.fresh({"V1", "V3"}) == "V2");
  CHECK(gen.fresh({"V1", "V3"}) == "V4");
}
