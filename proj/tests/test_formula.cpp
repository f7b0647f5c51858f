#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "mll/errors.hpp"
#include "mll/formula.hpp"

using namespace mll;

TEST_CASE("variable names") {
  CHECK(Formula::valid_var_name("p"));
  CHECK(Formula::valid_var_name("p1"));
  CHECK(Formula::valid_var_name("ab2c"));
  CHECK_FALSE(Formula::valid_var_name(""));
  CHECK_FALSE(Formula::valid_var_name("P"));
  CHECK_FALSE(Formula::valid_var_name("1p"));
  CHECK_FALSE(Formula::valid_var_name("p_q"));
  CHECK_THROWS_AS(Formula::var("Q"), SyntaxError);
}

TEST_CASE("print and parse round trip") {
  for (const char* text : {
           "p",
           "p^",
           "p^^",
           "(p * q)",
           "(p * q)^",
           "((p * q) * r)",
           "(p * (q * r))",
           "(p^ * (q * q^)^)",
           "((p * q^)^ * (r^^ * p))^^",
       }) {
    Formula f = parse(text);
    CHECK(print(f) == text);
    CHECK(parse(print(f)) == f);
  }
}

TEST_CASE("parse accepts extra grouping and arrow sugar") {
  CHECK(parse("(p)") == parse("p"));
  CHECK(parse("((p * q))") == parse("(p * q)"));
  CHECK(parse("  ( p * q ) ^ ") == parse("(p * q)^"));
  CHECK(print(parse("p -o q")) == "(p * q^)^");
  CHECK(parse("p -o q") == lolli(parse("p"), parse("q")));
  // the arrow associates to the right and binds loosest
  CHECK(parse("p -o q -o r") == lolli(parse("p"), lolli(parse("q"), parse("r"))));
  CHECK(print(parse("p -o q -o r")) == "(p * (q * r^)^^)^");
  CHECK(parse("(p * q) -o r") == lolli(parse("(p * q)"), parse("r")));
  // a bare tensor still needs its parentheses, even left of the arrow
  CHECK_THROWS_AS(parse("p * q -o r"), SyntaxError);
  CHECK(parse("(p -o q)^") == Formula::neg(lolli(parse("p"), parse("q"))));
}

TEST_CASE("parse failures carry an offset") {
  for (const char* bad : {"", "p *", "(p * q", "p q", "(p ** q)", "^p",
                          "p -o", "()", "(p * q))"}) {
    CHECK_THROWS_AS(parse(bad), SyntaxError);
  }
  try {
    parse("(p * q");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 6);
    CHECK(std::string(e.code()) == "syntax");
  }
}

TEST_CASE("no double negation collapse") {
  Formula p = parse("p");
  CHECK(Formula::neg(Formula::neg(p)) != p);
  CHECK(parse("p^^") != parse("p"));
  CHECK(parse("(p * q)") != parse("(q * p)"));
  CHECK(parse("((p * q) * r)") != parse("(p * (q * r))"));
}

TEST_CASE("leaf counts and negation depth") {
  CHECK(parse("p").leaf_count() == 1);
  CHECK(parse("(p * (q * q^)^)").leaf_count() == 3);
  CHECK(parse("p").neg_depth() == 0);
  CHECK(parse("p^^").neg_depth() == 2);
  CHECK(parse("(p^ * q)^").neg_depth() == 2);
  CHECK(parse("(p^ * q^^)").neg_depth() == 2);
  CHECK(lolli(parse("p"), parse("q")).neg_depth() == 2);
}

TEST_CASE("effective polarity of addresses") {
  CHECK(eff_polarity(Side::Cod, "") == Polarity::Pos);
  CHECK(eff_polarity(Side::Cod, "N") == Polarity::Neg);
  CHECK(eff_polarity(Side::Dom, "") == Polarity::Neg);
  CHECK(eff_polarity(Side::Dom, "N") == Polarity::Pos);
  CHECK(eff_polarity(Side::Cod, "LR") == Polarity::Pos);
  CHECK(eff_polarity(Side::Cod, "RNL") == Polarity::Neg);
  CHECK(eff_polarity(Side::Cod, "RNRN") == Polarity::Pos);
}

TEST_CASE("leaves are listed left to right with polarities") {
  Formula f = parse("(p * (q * q^)^)");
  auto cod = leaves(f, Side::Cod);
  REQUIRE(cod.size() == 3);
  CHECK(cod[0].addr == "L");
  CHECK(cod[0].var == "p");
  CHECK(cod[0].eff == Polarity::Pos);
  CHECK(cod[1].addr == "RNL");
  CHECK(cod[1].var == "q");
  CHECK(cod[1].eff == Polarity::Neg);
  CHECK(cod[2].addr == "RNRN");
  CHECK(cod[2].var == "q");
  CHECK(cod[2].eff == Polarity::Pos);

  auto dom = leaves(f, Side::Dom);
  REQUIRE(dom.size() == 3);
  CHECK(dom[0].side == Side::Dom);
  CHECK(dom[0].eff == Polarity::Neg);  // flipped relative to the cod side
  CHECK(dom[1].eff == Polarity::Pos);
  CHECK(dom[2].eff == Polarity::Neg);
}

TEST_CASE("resolve_leaf") {
  Formula f = parse("(p * (q * q^)^)");
  CHECK(resolve_leaf(f, "L") == std::optional<std::string>("p"));
  CHECK(resolve_leaf(f, "RNL") == std::optional<std::string>("q"));
  CHECK(resolve_leaf(f, "RNRN") == std::optional<std::string>("q"));
  CHECK_FALSE(resolve_leaf(f, "R").has_value());     // stops at the negation
  CHECK_FALSE(resolve_leaf(f, "RNRNL").has_value()); // walks past a leaf
  CHECK_FALSE(resolve_leaf(f, "X").has_value());
}

TEST_CASE("negation translation") {
  // positive codomain tensor stays a tensor node
  DMTree t1 = de_morganize(parse("(p * q)"), Polarity::Pos, Side::Cod);
  CHECK(t1.par_count() == 0);
  CHECK(t1.literal_count() == 2);

  // under a negation it becomes a switchable node
  DMTree t2 = de_morganize(parse("(p * q)^"), Polarity::Pos, Side::Cod);
  CHECK(t2.par_count() == 1);

  DMTree t3 = de_morganize(lolli(parse("p"), parse("q")), Polarity::Pos,
                           Side::Cod);
  CHECK(t3.par_count() == 1);
  CHECK(t3.literal_count() == 2);

  // the domain side starts negatively, so a bare tensor switches there
  DMTree t4 = de_morganize(parse("(p * q)"), Polarity::Neg, Side::Dom);
  CHECK(t4.par_count() == 1);
}

TEST_CASE("translated literals agree with address polarity") {
  for (const char* text :
       {"(p * (q * q^)^)", "((p * q^)^ * r)^", "(p^^ * (q * r)^)"}) {
    Formula f = parse(text);
    for (Side side : {Side::Dom, Side::Cod}) {
      Polarity start = (side == Side::Dom) ? Polarity::Neg : Polarity::Pos;
      DMTree t = de_morganize(f, start, side);
      std::size_t found = 0;
      for (const auto& node : t.nodes) {
        if (node.kind != DMTree::Kind::Literal) continue;
        ++found;
        CHECK(node.leaf.eff == eff_polarity(side, node.leaf.addr));
      }
      CHECK(found == f.leaf_count());
    }
  }
}
