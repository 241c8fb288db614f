#include <doctest.h>

#include "hlab/errors.hpp"
#include "hlab/syntax.hpp"

using namespace hlab;

TEST_CASE("parse_program reads clauses, facts and comments") {
  auto [p, sig] = parse_program(
      "% list membership\n"
      "mem(X, [X]).\n"
      "mem(X, [_H|T]) :- mem(X, T).\n");
  REQUIRE(p.clauses.size() == 2);
  CHECK(p.clauses[0].body.empty());
  CHECK(p.clauses[1].body.size() == 1);
  CHECK(sig.functions == SymbolSet{{"[]", 0}, {".", 2}});
  CHECK(sig.predicates == SymbolSet{{"mem", 2}});
}

TEST_CASE("alphabet directive sets the signature") {
  auto [p, sig] = parse_program("#alphabet a/0, f/1, g/2.\np(a).\n");
  CHECK(sig.functions == SymbolSet{{"a", 0}, {"f", 1}, {"g", 2}});
  CHECK(!sig.finite_universe());
  (void)p;
}

TEST_CASE("directive must cover the occurring symbols") {
  CHECK_THROWS_AS(parse_program("#alphabet a/0.\np(f(a)).\n"), ParseError);
}

TEST_CASE("an alphabet without constants is rejected") {
  CHECK_THROWS_AS(parse_program("#alphabet f/1.\np(X).\n"), ParseError);
  // no directive, no constant occurring anywhere
  CHECK_THROWS_AS(parse_program("p(X).\n"), ParseError);
}

TEST_CASE("list sugar desugars to './2' and '[]'") {
  auto t = parse_term("[a,b|T]");
  CHECK(render_term(t) == "[a,b|T]");
  CHECK(term_eq(t, parse_term("'.'(a, '.'(b, T))")));
  CHECK(term_eq(parse_term("[a]"), parse_term("'.'(a, [])")));
}

TEST_CASE("quoted atoms and rendering round-trip") {
  auto t = parse_term("'Foo bar'(a, 'it''s')");
  CHECK(render_term(t) == "'Foo bar'(a,'it''s')");
  CHECK(term_eq(parse_term(render_term(t)), t));
}

TEST_CASE("reserved namespaces are rejected by the lexer") {
  CHECK_THROWS_AS(parse_term("'$c1'"), ParseError);
  CHECK_THROWS_AS(parse_query("p('$x')"), ParseError);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_program("p(a).\nq(.\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.col() >= 3);
  }
}

TEST_CASE("parse_symbol_list handles quoting") {
  auto syms = parse_symbol_list("'[]'/0, '.'/2, f/1");
  CHECK(syms == std::vector<Symbol>{{"[]", 0}, {".", 2}, {"f", 1}});
}

TEST_CASE("extend_signature rejects arity clashes") {
  Signature sig;
  sig.functions = {{"a", 0}, {"f", 1}};
  auto ext = extend_signature(sig, {{"g", 2}});
  CHECK(ext.functions.count({"g", 2}) == 1);
  CHECK_THROWS_AS(extend_signature(sig, {{"f", 2}}), PremiseError);
}

TEST_CASE("fresh_constant avoids the signature and the taken set") {
  Signature sig;
  sig.functions = {{"c1", 0}};
  auto c = fresh_constant(sig, {"c2"});
  CHECK(c == Symbol{"c3", 0});
}

TEST_CASE("ground_terms_upto_depth enumerates the bounded universe") {
  SymbolSet fs{{"a", 0}, {"f", 1}};
  auto d0 = ground_terms_upto_depth(fs, 0);
  REQUIRE(d0.size() == 1);
  auto d2 = ground_terms_upto_depth(fs, 2);
  CHECK(d2.size() == 3);  // a, f(a), f(f(a))

  SymbolSet gs{{"a", 0}, {"b", 0}, {"g", 2}};
  auto g1 = ground_terms_upto_depth(gs, 1);
  CHECK(g1.size() == 2 + 4);
}

TEST_CASE("GroundTermEnumerator streams in canonical order without repeats") {
  GroundTermEnumerator en({{"a", 0}, {"f", 1}, {"g", 2}});
  std::vector<TermPtr> seen;
  for (int i = 0; i < 30; ++i) {
    auto t = en.next();
    REQUIRE(t);
    CHECK(is_ground(t));
    if (!seen.empty()) CHECK(term_compare(seen.back(), t) < 0);
    seen.push_back(t);
  }

  GroundTermEnumerator fin({{"a", 0}, {"b", 0}});
  CHECK(fin.next());
  CHECK(fin.next());
  CHECK(fin.next() == nullptr);
}

TEST_CASE("occurring symbols of program and query") {
  auto [p, sig] = parse_program("#alphabet a/0, b/0.\np(a) :- q(b).\n");
  CHECK(occurring_symbols(p) == SymbolSet{{"a", 0}, {"b", 0}});
  CHECK(occurring_predicates(p) == SymbolSet{{"p", 1}, {"q", 1}});
  Query q = parse_query("p(f(X)), r(a)");
  CHECK(occurring_symbols(q) == SymbolSet{{"f", 1}, {"a", 0}});
  CHECK(occurring_predicates(q) == SymbolSet{{"p", 1}, {"r", 1}});
}
