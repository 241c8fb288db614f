#include <doctest.h>

#include "hlab/alien.hpp"
#include "hlab/errors.hpp"
#include "hlab/syntax.hpp"

using namespace hlab;

namespace {

const SymbolSet kListSyms{{"[]", 0}, {".", 2}};

}  // namespace

TEST_CASE("is_alien looks at the main symbol only") {
  CHECK(is_alien(parse_term("a"), kListSyms));
  CHECK(is_alien(parse_term("f([a,b])"), kListSyms));
  CHECK(!is_alien(parse_term("[a,b]"), kListSyms));  // main symbol './2'
  CHECK(!is_alien(parse_term("X"), kListSyms));
}

TEST_CASE("maximal aliens of the three-list atom") {
  Query q = parse_query("app([a], [[]|g(a,X)], [g(a,Y),Z,[a]])");
  auto aliens = maximal_aliens(q, kListSyms);
  REQUIRE(aliens.size() == 3);

  CHECK(term_eq(aliens[0].term, parse_term("a")));
  CHECK(aliens[0].paths ==
        std::vector<Path>{{0, 0, 0}, {0, 2, 1, 1, 0, 0}});

  CHECK(variant_of(aliens[1].term, parse_term("g(a,X)")));
  CHECK(aliens[1].paths == std::vector<Path>{{0, 1, 1}});

  CHECK(variant_of(aliens[2].term, parse_term("g(a,Y)")));
  CHECK(aliens[2].paths == std::vector<Path>{{0, 2, 0}});

  // g(a,X) and g(a,Y) are distinct aliens even though variants
  CHECK(!term_eq(aliens[1].term, aliens[2].term));
}

TEST_CASE("generalize replaces maximal aliens by fresh shared variables") {
  Query q = parse_query("app([a], [[]|g(a,X)], [g(a,Y),Z,[a]])");
  auto g = generalize(q, kListSyms);
  CHECK(variant_of(g.generalized.atoms,
                   parse_query("app([V1], [[]|V2], [V3,Z,[V1]])").atoms));
  CHECK(g.rho.size() == 3);
  CHECK(term_eq(g.rho.apply(g.generalized.atoms[0]), q.atoms[0]));
}

TEST_CASE("equal aliens share one variable") {
  auto g = generalize(parse_query("p(f(a), f(a), f(b))"), SymbolSet{{"a", 0}});
  CHECK(variant_of(g.generalized.atoms, parse_query("p(V1, V1, V2)").atoms));
}

TEST_CASE("a query without aliens generalizes to itself") {
  Query q = parse_query("p(X, a)");
  auto g = generalize(q, SymbolSet{{"a", 0}});
  CHECK(term_eq(g.generalized.atoms[0], q.atoms[0]));
  CHECK(g.rho.empty());
}

TEST_CASE("fresh variables avoid the query's own variables") {
  Query q = parse_query("p(g(a), V1)");
  auto g = generalize(q, SymbolSet{{"a", 0}});
  auto vars = var_set(g.generalized.atoms);
  CHECK(vars.size() == 2);
  CHECK(vars.count("V1") == 1);
  CHECK(g.rho.size() == 1);
  CHECK(!g.rho.binds("V1"));
}

TEST_CASE("enumerate_ground_aliens respects F and the signature") {
  Signature sig;
  sig.functions = {{"a", 0}, {"f", 1}, {"g", 1}};
  SymbolSet F{{"a", 0}, {"f", 1}};
  auto aliens = enumerate_ground_aliens(F, sig, 5);
  REQUIRE(aliens.size() == 5);
  for (const auto& t : aliens) {
    CHECK(is_ground(t));
    CHECK(is_alien(t, F));
  }
  CHECK(term_eq(aliens[0], parse_term("g(a)")));
  // nested aliens count: g(g(a)) is itself an alien
  bool nested = false;
  for (const auto& t : aliens) nested |= term_eq(t, parse_term("g(g(a))"));
  CHECK(nested);
}

TEST_CASE("distinct_alien_instance grounds the premise shape") {
  Signature sig;
  sig.functions = {{"a", 0}, {"f", 1}, {"g", 1}};
  SymbolSet F{{"a", 0}, {"f", 1}};
  std::vector<TermPtr> ts{Term::var("X"), Term::var("Y"), parse_term("g(a)"),
                          parse_term("g(X)")};
  Subst s = distinct_alien_instance(ts, F, sig);
  auto inst = s.apply(ts);
  for (std::size_t i = 0; i < inst.size(); ++i) {
    CHECK(is_ground(inst[i]));
    CHECK(is_alien(inst[i], F));
    for (std::size_t j = i + 1; j < inst.size(); ++j)
      CHECK(!term_eq(inst[i], inst[j]));
  }
}

TEST_CASE("distinct_alien_instance premise violations") {
  Signature sig;
  sig.functions = {{"a", 0}, {"g", 1}};
  SymbolSet F{{"a", 0}};
  // repeated variable in the prefix
  CHECK_THROWS_AS(distinct_alien_instance(
                      {Term::var("X"), Term::var("X"), parse_term("g(a)")}, F,
                      sig),
                  PremiseError);
  // non-alien in the suffix
  CHECK_THROWS_AS(
      distinct_alien_instance({Term::var("X"), parse_term("a")}, F, sig),
      PremiseError);
  // equal aliens in the suffix
  CHECK_THROWS_AS(distinct_alien_instance(
                      {parse_term("g(a)"), parse_term("g(a)")}, F, sig),
                  PremiseError);
}
