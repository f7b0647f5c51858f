#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "mll/errors.hpp"
#include "mll/formula.hpp"
#include "mll/net.hpp"
#include "oracle.hpp"

using namespace mll;

namespace {

Link link(Side s1, const char* a1, Side s2, const char* a2) {
  return Link::make({s1, a1}, {s2, a2});
}

std::vector<Linking> linkings_of_hom(const std::vector<ProofNet>& nets) {
  std::vector<Linking> out;
  for (const auto& n : nets) out.push_back(n.links);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Linking> linkings_of_j(const std::vector<JElement>& els) {
  std::vector<Linking> out;
  for (const auto& x : els) out.push_back(x.links);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("link normalization") {
  Link l1 = link(Side::Cod, "RN", Side::Dom, "L");
  CHECK(l1.a.side == Side::Dom);  // the domain end always comes first
  CHECK(l1.a.addr == "L");
  Linking links{link(Side::Cod, "R", Side::Cod, "A"),
                link(Side::Dom, "", Side::Cod, "A")};
  canonicalize(links);
  CHECK(links[0].a.side == Side::Dom);
  CHECK(std::is_sorted(links.begin(), links.end()));
  Linking again = links;
  canonicalize(again);
  CHECK(again == links);
}

TEST_CASE("identity nets") {
  ProofNet id_p = make_net(parse("p"), parse("p"),
                           {link(Side::Dom, "", Side::Cod, "")});
  DrResult dr = dr_correct(id_p);
  CHECK(dr.correct);
  CHECK(dr.switchings_examined == 1);  // no switchable nodes anywhere
}

TEST_CASE("the one sided cycle witness") {
  Formula f = parse("(p * p^)");
  Linking links{link(Side::Cod, "L", Side::Cod, "RN")};
  DrResult dr = dr_correct(JElement{f, links});
  CHECK_FALSE(dr.correct);
  REQUIRE(dr.failure.has_value());
  CHECK(*dr.failure == DrFailure::Cycle);
  CHECK(dr.switchings_examined == 1);
  CHECK(dr.witness.has_value());

  try {
    make_element(f, links);
    FAIL("expected rejection");
  } catch (const NotCorrect& e) {
    CHECK(std::string(e.code()) == "not_correct");
    CHECK(e.result().failure == DrFailure::Cycle);
  }
}

TEST_CASE("matching validation failures") {
  Formula pp = parse("(p * p)");
  // same effective polarity on both ends
  CHECK_THROWS_AS(make_net(pp, pp,
                           {link(Side::Dom, "L", Side::Dom, "R"),
                            link(Side::Cod, "L", Side::Cod, "R")}),
                  PolarityMismatch);
  // wrong variable
  CHECK_THROWS_AS(make_net(parse("p"), parse("q"),
                           {link(Side::Dom, "", Side::Cod, "")}),
                  PolarityMismatch);
  // unknown address
  CHECK_THROWS_AS(make_net(parse("p"), parse("p"),
                           {link(Side::Dom, "", Side::Cod, "L")}),
                  BadAddress);
  // leaf used twice / leaf missing
  CHECK_THROWS_AS(
      make_net(pp, pp,
               {link(Side::Dom, "L", Side::Cod, "L"),
                link(Side::Dom, "L", Side::Cod, "R")}),
      NotPerfectMatching);
  CHECK_THROWS_AS(make_net(parse("p"), parse("p"), {}), NotPerfectMatching);
}

TEST_CASE("frozen enumeration cardinalities") {
  Formula p = parse("p");
  Formula pp = parse("(p * p)");
  Formula mixed = parse("(p * (q * q^)^)");

  CHECK(enumerate_hom(p, mixed).size() == 1);
  CHECK(enumerate_hom(pp, pp).size() == 2);
  CHECK(enumerate_j(p).empty());
  CHECK(enumerate_j(parse("(p * p^)")).empty());  // only pairing is cyclic

  auto el = enumerate_j(lolli(p, p));
  REQUIRE(el.size() == 1);
  CHECK(el[0].links == Linking{link(Side::Cod, "NL", Side::Cod, "NRN")});

  CHECK(enumerate_j(lolli(pp, pp)).size() == 2);
  CHECK(enumerate_hom(lolli(p, p), lolli(p, p)).size() == 1);
  CHECK(enumerate_hom(p, parse("q")).empty());
}

TEST_CASE("enumeration agrees with the reference oracle") {
  Formula p = parse("p"), q = parse("q");
  std::vector<std::pair<Formula, Formula>> homs = {
      {p, p},
      {p, parse("(p * (q * q^)^)")},
      {parse("(p * p)"), parse("(p * p)")},
      {parse("(p * q)"), parse("(q * p)")},
      {parse("((p * q) * p^)"), parse("(q * (p * p^))")},
      {lolli(p, p), lolli(p, p)},
      {parse("(p * (q * r))"), parse("((p * q) * r)")},
      {parse("(p^ * p)"), parse("(p^ * p)")},
  };
  for (const auto& [a, b] : homs) {
    INFO(print(a) << " -> " << print(b));
    CHECK(linkings_of_hom(enumerate_hom(a, b)) == oracle::hom_linkings(a, b));
  }

  for (const Formula& f : {lolli(p, p), lolli(parse("(p * p)"), parse("(p * p)")),
                           parse("(p * p^)"), parse("(p^ * p)^"),
                           parse("((p * q)^ * (p * q))^"),
                           parse("(p^ * (q^ * (q * p)))")}) {
    INFO(print(f));
    CHECK(linkings_of_j(enumerate_j(f)) == oracle::j_linkings(f));
  }
}

TEST_CASE("every switching is examined on correct nets") {
  for (const auto& [dom, cod] : std::vector<std::pair<Formula, Formula>>{
           {lolli(parse("p"), parse("q")), lolli(parse("p"), parse("q"))},
           {parse("(p * q)"), parse("(q * p)")},
           {parse("p"), parse("(p * (q * q^)^)")},
       }) {
    std::size_t pars = de_morganize(dom, Polarity::Neg, Side::Dom).par_count() +
                       de_morganize(cod, Polarity::Pos, Side::Cod).par_count();
    for (const auto& net : enumerate_hom(dom, cod)) {
      DrResult dr = dr_correct(net);
      CHECK(dr.correct);
      CHECK(dr.switchings_examined == (std::uint64_t{1} << pars));
    }
  }
}

TEST_CASE("switch count guard") {
  Formula g = lolli(parse("p"), parse("p"));
  for (int i = 0; i < 20; ++i) g = lolli(parse("p"), g);
  // 21 switchable nodes on the single tree: refused, not enumerated
  CHECK_THROWS_AS(dr_correct(JElement{g, {}}), SizeBoundExceeded);
}

TEST_CASE("enumeration size guard") {
  Formula big = parse("p");
  for (int i = 0; i < 12; ++i) big = Formula::tensor(big, parse("p"));
  CHECK_THROWS_AS(enumerate_j(big), SizeBoundExceeded);
  CHECK_THROWS_AS(enumerate_hom(parse("(p * (p * (p * (p * (p * (p * p))))))"),
                                parse("(p * (p * (p * (p * (p * (p * p))))))")),
                  SizeBoundExceeded);
  CHECK_NOTHROW(enumerate_hom(parse("p"), parse("p"), 2));
}

TEST_CASE("deterministic enumeration order") {
  Formula pp = parse("(p * p)");
  auto first = enumerate_hom(pp, pp);
  auto second = enumerate_hom(pp, pp);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i] == second[i]);
  CHECK(std::is_sorted(first.begin(), first.end(),
                       [](const ProofNet& a, const ProofNet& b) {
                         return a.links < b.links;
                       }));
}
