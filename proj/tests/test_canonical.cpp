#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "mll/canonical.hpp"
#include "mll/compose.hpp"
#include "mll/errors.hpp"
#include "mll/formula.hpp"
#include "mll/net.hpp"

using namespace mll;

namespace {

Link link(Side s1, const char* a1, Side s2, const char* a2) {
  return Link::make({s1, a1}, {s2, a2});
}

const Formula P = parse("p");
const Formula Q = parse("q");
const Formula R = parse("r");
const Formula PP = parse("(p * p)");

}  // namespace

TEST_CASE("associator relabels the three leaves") {
  ProofNet a = associator(P, Q, R);
  CHECK(a.dom == parse("((p * q) * r)"));
  CHECK(a.cod == parse("(p * (q * r))"));
  Linking expected{link(Side::Dom, "LL", Side::Cod, "L"),
                   link(Side::Dom, "LR", Side::Cod, "RL"),
                   link(Side::Dom, "R", Side::Cod, "RR")};
  canonicalize(expected);
  CHECK(a.links == expected);

  CHECK(compose(a, associator_inv(P, Q, R)) == identity(a.dom));
  CHECK(compose(associator_inv(P, Q, R), a) == identity(a.cod));
}

TEST_CASE("symmetry swaps and is involutive") {
  ProofNet s = symmetry(P, Q);
  Linking expected{link(Side::Dom, "L", Side::Cod, "R"),
                   link(Side::Dom, "R", Side::Cod, "L")};
  canonicalize(expected);
  CHECK(s.links == expected);
  CHECK(compose(s, symmetry(Q, P)) == identity(parse("(p * q)")));
}

TEST_CASE("currying the identity") {
  ProofNet c = curry(identity(parse("(p * q)")));
  CHECK(c.dom == P);
  CHECK(c.cod == lolli(Q, parse("(p * q)")));
  Linking expected{link(Side::Dom, "", Side::Cod, "NRNL"),
                   link(Side::Cod, "NL", Side::Cod, "NRNR")};
  canonicalize(expected);
  CHECK(c.links == expected);
}

TEST_CASE("curry and uncurry invert each other") {
  for (const auto& f : enumerate_hom(PP, PP)) {
    CHECK(uncurry(curry(f)) == f);
  }
  for (const auto& g : enumerate_hom(P, lolli(P, PP))) {
    CHECK(curry(uncurry(g)) == g);
  }
}

TEST_CASE("evaluation net") {
  ProofNet ev = evaluation(P, P);
  CHECK(ev.dom == Formula::tensor(lolli(P, P), P));
  CHECK(ev.cod == P);
  Linking expected{link(Side::Dom, "LNL", Side::Dom, "R"),
                   link(Side::Dom, "LNRN", Side::Cod, "")};
  canonicalize(expected);
  CHECK(ev.links == expected);
}

TEST_CASE("internal currying matches its composite definition") {
  const Formula triples[][3] = {
      {P, Q, R},
      {parse("(p * q)"), R, P},
      {PP, P, Q},
  };
  for (const auto& t : triples) {
    ProofNet ic = internal_curry(t[0], t[1], t[2]);
    CHECK(ic.dom == lolli(Formula::tensor(t[0], t[1]), t[2]));
    CHECK(ic.cod == lolli(t[0], lolli(t[1], t[2])));
    CHECK(ic == internal_curry_direct(t[0], t[1], t[2]));
    ProofNet iu = internal_uncurry(t[0], t[1], t[2]);
    CHECK(iu == internal_uncurry_direct(t[0], t[1], t[2]));
    CHECK(compose(ic, iu) == identity(ic.dom));
    CHECK(compose(iu, ic) == identity(ic.cod));
  }
}

TEST_CASE("duality constructors") {
  CHECK(dual_of(identity(P)) == identity(parse("p^")));
  CHECK(dual_of(dual_of(identity(P))) == identity(parse("p^^")));

  ProofNet dd = double_dual(PP);
  CHECK(dd.dom == PP);
  CHECK(dd.cod == dual(dual(PP)));
  CHECK(compose(dd, double_dual_inv(PP)) == identity(PP));
  CHECK(compose(double_dual_inv(PP), dd) == identity(dual(dual(PP))));

  // dual_of reverses composition
  auto nets = enumerate_hom(PP, PP);
  for (const auto& f : nets)
    for (const auto& g : nets)
      CHECK(dual_of(compose(f, g)) == compose(dual_of(g), dual_of(f)));
}

TEST_CASE("transpose is involutive") {
  for (const auto& f : enumerate_hom(PP, PP)) {
    ProofNet fp = compose(f, double_dual(PP));  // lands in ((p*p)^)^
    ProofNet t = fp;
    t = transpose(t);
    CHECK(t.dom == Formula::tensor(P, dual(PP)));
    CHECK(t.cod == dual(P));
    t = transpose(t);
    CHECK(t == fp);
  }
}

TEST_CASE("lolli functor on identities") {
  CHECK(lolli_mor(identity(P), identity(Q)) == identity(lolli(P, Q)));
}

TEST_CASE("elements and nets convert both ways") {
  auto idp = enumerate_j(lolli(P, P));
  REQUIRE(idp.size() == 1);
  CHECK(net_of_element(idp[0]) == identity(P));
  CHECK(net_of_element_via_eval(idp[0]) == identity(P));

  Formula m = lolli(PP, PP);
  for (const auto& x : enumerate_j(m)) {
    CHECK(element_of_net(net_of_element(x)) == x);
    CHECK(net_of_element_via_eval(x) == net_of_element(x));
  }
  for (const auto& f : enumerate_hom(PP, PP)) {
    CHECK(net_of_element(element_of_net(f)) == f);
  }
}

TEST_CASE("tensor and linear structure on elements") {
  JElement x = enumerate_j(lolli(P, P))[0];
  JElement m = tensor_elements(x, x);
  CHECK(m.formula == Formula::tensor(lolli(P, P), lolli(P, P)));
  Linking expected{link(Side::Cod, "LNL", Side::Cod, "LNRN"),
                   link(Side::Cod, "RNL", Side::Cod, "RNRN")};
  canonicalize(expected);
  CHECK(m.links == expected);

  ProofNet lin = linear_component(x, P);
  CHECK(lin.dom == P);
  CHECK(lin.cod == Formula::tensor(lolli(P, P), P));
  Linking lin_expected{link(Side::Cod, "LNL", Side::Cod, "LNRN"),
                       link(Side::Dom, "", Side::Cod, "R")};
  canonicalize(lin_expected);
  CHECK(lin.links == lin_expected);

  // pairing through the tensor agrees with mapping through the component
  Formula n = lolli(PP, PP);
  for (const auto& a : enumerate_j(n))
    for (const auto& b : enumerate_j(lolli(P, P)))
      CHECK(map_element(linear_component(a, lolli(P, P)), b) ==
            tensor_elements(a, b));
}

TEST_CASE("shape requirements are enforced") {
  CHECK_THROWS_AS(curry(identity(P)), ShapeMismatch);
  CHECK_THROWS_AS(uncurry(identity(P)), ShapeMismatch);
  CHECK_THROWS_AS(uncurry(identity(PP)), ShapeMismatch);
  CHECK_THROWS_AS(transpose(identity(P)), ShapeMismatch);
  CHECK_THROWS_AS(transpose(identity(PP)), ShapeMismatch);

  auto odd = enumerate_j(parse("(p^ * p)^"));
  REQUIRE(odd.size() == 1);
  CHECK_THROWS_AS(net_of_element(odd[0]), ShapeMismatch);
}
