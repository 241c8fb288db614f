#include <doctest.h>

#include "hlab/herbrand.hpp"
#include "hlab/syntax.hpp"

using namespace hlab;

namespace {

std::pair<Program, Signature> load(const std::string& text) {
  return parse_program(text);
}

}  // namespace

TEST_CASE("atom_depth is the max argument depth") {
  CHECK(atom_depth(parse_term("p(a, X)")) == 0);
  CHECK(atom_depth(parse_term("p(f(a), g(f(f(a))))")) == 3);
  CHECK(atom_depth(parse_term("p")) == 0);
}

TEST_CASE("finite program reaches its fixpoint") {
  auto [p, sig] = load(
      "#alphabet a/0, b/0.\n"
      "e(a, b).\n"
      "path(X, Y) :- e(X, Y).\n"
      "path(X, Z) :- e(X, Y), path(Y, Z).\n");
  auto m = least_model_upto(p, sig, 0);
  CHECK(m.fixpoint_reached);
  CHECK(m.contains(parse_term("e(a,b)")));
  CHECK(m.contains(parse_term("path(a,b)")));
  CHECK(!m.contains(parse_term("path(b,a)")));
  CHECK(m.atoms.size() == 2);
}

TEST_CASE("depth cap truncates and clears the fixpoint flag") {
  auto [p, sig] = load("nat(z).\nnat(s(N)) :- nat(N).\n");
  auto m = least_model_upto(p, sig, 2);
  CHECK(!m.fixpoint_reached);
  CHECK(m.contains(parse_term("nat(z)")));
  CHECK(m.contains(parse_term("nat(s(z))")));
  CHECK(m.contains(parse_term("nat(s(s(z)))")));
  CHECK(m.atoms.size() == 3);
}

TEST_CASE("approximation is monotone in the cap and a subset of the model") {
  auto [p, sig] = load("nat(z).\nnat(s(N)) :- nat(N).\n");
  auto m2 = least_model_upto(p, sig, 2);
  auto m3 = least_model_upto(p, sig, 3);
  for (const auto& a : m2.atoms) CHECK(m3.contains(a));
  Budget b;
  for (const auto& a : m3.atoms)
    CHECK(entails_direct(p, Query{{a}}, b).holds());
}

TEST_CASE("clause head variables range over the capped universe") {
  auto [p, sig] = load("#alphabet a/0, b/0.\nq(X, a).\n");
  auto m = least_model_upto(p, sig, 0);
  CHECK(m.fixpoint_reached);
  CHECK(m.atoms.size() == 2);
  CHECK(m.contains(parse_term("q(a,a)")));
  CHECK(m.contains(parse_term("q(b,a)")));
}

TEST_CASE("nonground heads over an infinite universe never report a fixpoint") {
  auto [p, sig] = load("#alphabet a/0, f/1.\nq(X).\n");
  auto m = least_model_upto(p, sig, 1);
  CHECK(!m.fixpoint_reached);
  CHECK(m.contains(parse_term("q(a)")));
  CHECK(m.contains(parse_term("q(f(a))")));
}

TEST_CASE("model_satisfies on ground queries is definite") {
  auto [p, sig] = load("#alphabet a/0, b/0.\nq(a).\n");
  Budget b;
  CHECK(model_satisfies(p, sig, parse_query("q(a)"), b, 2).holds());
  CHECK(model_satisfies(p, sig, parse_query("q(b)"), b, 2).fails());
}

TEST_CASE("model_satisfies over a finite universe decides universally") {
  auto [p, sig] = load("#alphabet a/0, b/0.\nq(X, a).\n");
  Budget b;
  CHECK(model_satisfies(p, sig, parse_query("q(Y, a)"), b, 2).holds());
  CHECK(model_satisfies(p, sig, parse_query("q(a, Y)"), b, 2).fails());
}

TEST_CASE("infinite universe: all-verified yields Unknown with holds_up_to") {
  auto [p, sig] = load("#alphabet z/0, s/1.\nnat(z).\nnat(s(N)) :- nat(N).\n");
  Budget b;
  auto v = model_satisfies(p, sig, parse_query("nat(X)"), b, 2);
  CHECK(v.unknown());
  REQUIRE(v.holds_up_to.has_value());
  CHECK(*v.holds_up_to == 2);

  // a refuted instance is definite even over an infinite universe
  auto [p2, sig2] = load("#alphabet z/0, s/1.\neven(z).\neven(s(s(N))) :- even(N).\n");
  CHECK(model_satisfies(p2, sig2, parse_query("even(X)"), b, 2).fails());
}
