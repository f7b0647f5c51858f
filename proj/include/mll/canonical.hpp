// ============================================================================
// canonical.hpp
//
// The canonical nets of the unit-free symmetric monoidal closed structure
// with involutive duality, all realized as address relabelings: a constructor
// either links each domain leaf to a re-addressed codomain copy, or rewrites
// the endpoints of an existing net's links through a side/prefix map. Every
// constructor revalidates its result, so each call is also a correctness
// check of the construction.
//
// Role names are used throughout:
//   associator      (A*B)*C -> A*(B*C)          symmetry     A*B -> B*A
//   curry/uncurry   hom(A*B,C) <-> hom(A,B-oC)  evaluation   (A-oB)*A -> B
//   internal_curry  (A*B)-oC -> A-o(B-oC)       transpose    hom(A*B,C^) -> hom(A*C,B^)
//   dual_of         hom(A,B) -> hom(B^,A^)      double_dual  A -> A^^
//   net_of_element  J(A-oB) -> hom(A,B)         tensor_elements  J(A),J(B) -> J(A*B)
//   linear_component  a in J(A), X  |->  X -> A*X
//   net_of_element_via_eval  same as net_of_element, built from
//                            linear_component and evaluation
// ============================================================================

#ifndef MLL_CANONICAL_HPP
#define MLL_CANONICAL_HPP

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mll/compose.hpp"
#include "mll/errors.hpp"
#include "mll/formula.hpp"
#include "mll/net.hpp"

namespace mll {

namespace detail {

// Endpoint rewrite rule: an endpoint on `from_side` whose address starts with
// `prefix` moves to `to_side` with the prefix replaced. Rule lists are
// prefix-free per side, so at most one rule applies.
struct AddrRule {
  Side from_side;
  LeafAddr prefix;
  Side to_side;
  LeafAddr replacement;
};

inline LinkEnd rewrite_end(std::span<const AddrRule> rules, const LinkEnd& e) {
  for (const auto& r : rules) {
    if (e.side == r.from_side && e.addr.starts_with(r.prefix))
      return LinkEnd{r.to_side, r.replacement + e.addr.substr(r.prefix.size())};
  }
  throw BadAddress("no relabeling rule matches " +
                   std::string(to_string(e.side)) + " \"" + e.addr + "\"");
}

inline Linking rewrite_links(const Linking& in, std::span<const AddrRule> rules) {
  Linking out;
  out.reserve(in.size());
  for (const auto& l : in)
    out.push_back(Link::make(rewrite_end(rules, l.a), rewrite_end(rules, l.b)));
  return out;
}

// Net whose links realize a prefix bijection from dom leaf addresses to cod
// leaf addresses.
inline ProofNet relabel_bijection(
    Formula dom, Formula cod,
    std::initializer_list<std::pair<LeafAddr, LeafAddr>> prefix_map) {
  Linking links;
  for (const auto& leaf : leaves(dom, Side::Dom)) {
    bool matched = false;
    for (const auto& [from, to] : prefix_map) {
      if (leaf.addr.starts_with(from)) {
        links.push_back(Link::make(
            {Side::Dom, leaf.addr},
            {Side::Cod, to + leaf.addr.substr(from.size())}));
        matched = true;
        break;
      }
    }
    if (!matched)
      throw BadAddress("relabeling does not cover leaf \"" + leaf.addr + "\"");
  }
  return make_net(std::move(dom), std::move(cod), std::move(links));
}

}  // namespace detail

// ── Monoidal structure ──────────────────────────────────────────────────────

inline ProofNet associator(const Formula& a, const Formula& b,
                           const Formula& c) {
  return detail::relabel_bijection(
      Formula::tensor(Formula::tensor(a, b), c),
      Formula::tensor(a, Formula::tensor(b, c)),
      {{"LL", "L"}, {"LR", "RL"}, {"R", "RR"}});
}

inline ProofNet associator_inv(const Formula& a, const Formula& b,
                               const Formula& c) {
  return detail::relabel_bijection(
      Formula::tensor(a, Formula::tensor(b, c)),
      Formula::tensor(Formula::tensor(a, b), c),
      {{"RL", "LR"}, {"RR", "R"}, {"L", "LL"}});
}

inline ProofNet symmetry(const Formula& a, const Formula& b) {
  return detail::relabel_bijection(Formula::tensor(a, b),
                                   Formula::tensor(b, a),
                                   {{"L", "R"}, {"R", "L"}});
}

// ── Closure ─────────────────────────────────────────────────────────────────

// f : A*B -> C  becomes  A -> B -o C. Domain-right leaves move to the
// codomain under "NL", old codomain leaves move under "NRN"; both shifts
// preserve effective polarity (one or two extra N with a side change).
inline ProofNet curry(const ProofNet& f) {
  if (!f.dom.is_tensor())
    throw ShapeMismatch("curry expects a tensor domain, got " + print(f.dom));
  Formula a = f.dom.left(), b = f.dom.right();
  static const detail::AddrRule rules[] = {
      {Side::Dom, "L", Side::Dom, ""},
      {Side::Dom, "R", Side::Cod, "NL"},
      {Side::Cod, "", Side::Cod, "NRN"},
  };
  return make_net(a, lolli(b, f.cod), detail::rewrite_links(f.links, rules));
}

inline ProofNet uncurry(const ProofNet& f) {
  const Formula& m = f.cod;
  if (!(m.is_neg() && m.child().is_tensor() && m.child().right().is_neg()))
    throw ShapeMismatch("uncurry expects a codomain of shape (B * C^)^, got " +
                        print(m));
  Formula b = m.child().left(), c = m.child().right().child();
  static const detail::AddrRule rules[] = {
      {Side::Cod, "NL", Side::Dom, "R"},
      {Side::Cod, "NRN", Side::Cod, ""},
      {Side::Dom, "", Side::Dom, "L"},
  };
  return make_net(Formula::tensor(f.dom, b), c,
                  detail::rewrite_links(f.links, rules));
}

inline ProofNet evaluation(const Formula& a, const Formula& b) {
  return uncurry(identity(lolli(a, b)));
}

// ── Duality ─────────────────────────────────────────────────────────────────

inline ProofNet dual_of(const ProofNet& f) {
  static const detail::AddrRule rules[] = {
      {Side::Dom, "", Side::Cod, "N"},
      {Side::Cod, "", Side::Dom, "N"},
  };
  return make_net(dual(f.cod), dual(f.dom),
                  detail::rewrite_links(f.links, rules));
}

inline ProofNet double_dual(const Formula& a) {
  return detail::relabel_bijection(a, dual(dual(a)), {{"", "NN"}});
}

inline ProofNet double_dual_inv(const Formula& a) {
  Linking links;
  for (const auto& leaf : leaves(a, Side::Cod))
    links.push_back(
        Link::make({Side::Dom, "NN" + leaf.addr}, {Side::Cod, leaf.addr}));
  return make_net(dual(dual(a)), a, std::move(links));
}

// f : A*B -> C^  becomes  A*C -> B^. Involutive by construction.
inline ProofNet transpose(const ProofNet& f) {
  if (!f.dom.is_tensor())
    throw ShapeMismatch("transpose expects a tensor domain, got " +
                        print(f.dom));
  if (!f.cod.is_neg())
    throw ShapeMismatch("transpose expects a negated codomain, got " +
                        print(f.cod));
  Formula a = f.dom.left(), b = f.dom.right(), c = f.cod.child();
  static const detail::AddrRule rules[] = {
      {Side::Dom, "L", Side::Dom, "L"},
      {Side::Dom, "R", Side::Cod, "N"},
      {Side::Cod, "N", Side::Dom, "R"},
  };
  return make_net(Formula::tensor(a, c), dual(b),
                  detail::rewrite_links(f.links, rules));
}

// Internal-hom action on nets: for f : X -> Y and g : U -> V,
// lolli_mor(f, g) : (Y -o U) -> (X -o V), contravariant in f.
inline ProofNet lolli_mor(const ProofNet& f, const ProofNet& g) {
  return dual_of(tensor_mor(f, dual_of(g)));
}

// ── Internal currying ───────────────────────────────────────────────────────

// (A*B) -o C  ->  A -o (B -o C), computed from curry, evaluation and the
// associator.
inline ProofNet internal_curry(const Formula& a, const Formula& b,
                               const Formula& c) {
  Formula m = lolli(Formula::tensor(a, b), c);
  ProofNet body = compose(associator(m, a, b),
                          evaluation(Formula::tensor(a, b), c));
  return curry(curry(body));
}

// The same net as a direct leaf relabeling; kept as an independent
// construction so tests can compare the two routes.
inline ProofNet internal_curry_direct(const Formula& a, const Formula& b,
                                      const Formula& c) {
  return detail::relabel_bijection(
      lolli(Formula::tensor(a, b), c), lolli(a, lolli(b, c)),
      {{"NLL", "NL"}, {"NLR", "NRNNL"}, {"NRN", "NRNNRN"}});
}

// A -o (B -o C)  ->  (A*B) -o C, from curry, evaluation and the inverse
// associator.
inline ProofNet internal_uncurry(const Formula& a, const Formula& b,
                                 const Formula& c) {
  Formula m = lolli(a, lolli(b, c));
  ProofNet body = compose(
      compose(associator_inv(m, a, b),
              tensor_mor(evaluation(a, lolli(b, c)), identity(b))),
      evaluation(b, c));
  return curry(body);
}

inline ProofNet internal_uncurry_direct(const Formula& a, const Formula& b,
                                        const Formula& c) {
  return detail::relabel_bijection(
      lolli(a, lolli(b, c)), lolli(Formula::tensor(a, b), c),
      {{"NL", "NLL"}, {"NRNNL", "NLR"}, {"NRNNRN", "NRN"}});
}

// ── Elements ────────────────────────────────────────────────────────────────

namespace detail {
inline void require_lolli(const Formula& m, const char* who) {
  if (!(m.is_neg() && m.child().is_tensor() && m.child().right().is_neg()))
    throw ShapeMismatch(std::string(who) +
                        " expects a formula of shape (A * B^)^, got " +
                        print(m));
}
}  // namespace detail

// x in J(A -o B) seen as a net A -> B.
inline ProofNet net_of_element(const JElement& x) {
  detail::require_lolli(x.formula, "net_of_element");
  Formula a = x.formula.child().left();
  Formula b = x.formula.child().right().child();
  static const detail::AddrRule rules[] = {
      {Side::Cod, "NL", Side::Dom, ""},
      {Side::Cod, "NRN", Side::Cod, ""},
  };
  return make_net(a, b, detail::rewrite_links(x.links, rules));
}

// A net A -> B seen as an element of J(A -o B).
inline JElement element_of_net(const ProofNet& f) {
  static const detail::AddrRule rules[] = {
      {Side::Dom, "", Side::Cod, "NL"},
      {Side::Cod, "", Side::Cod, "NRN"},
  };
  return make_element(lolli(f.dom, f.cod),
                      detail::rewrite_links(f.links, rules));
}

// J(A), J(B) -> J(A*B).
inline JElement tensor_elements(const JElement& a, const JElement& b) {
  Linking links;
  links.reserve(a.links.size() + b.links.size());
  for (const auto& l : a.links)
    links.push_back(
        Link::make({l.a.side, 'L' + l.a.addr}, {l.b.side, 'L' + l.b.addr}));
  for (const auto& l : b.links)
    links.push_back(
        Link::make({l.a.side, 'R' + l.a.addr}, {l.b.side, 'R' + l.b.addr}));
  return make_element(Formula::tensor(a.formula, b.formula), std::move(links));
}

// The component at X of the natural family induced by a in J(A):  X -> A*X.
inline ProofNet linear_component(const JElement& a, const Formula& x) {
  Linking links;
  links.reserve(a.links.size() + x.leaf_count());
  for (const auto& l : a.links)
    links.push_back(Link::make({Side::Cod, 'L' + l.a.addr},
                               {Side::Cod, 'L' + l.b.addr}));
  for (const auto& leaf : leaves(x, Side::Dom))
    links.push_back(
        Link::make({Side::Dom, leaf.addr}, {Side::Cod, 'R' + leaf.addr}));
  return make_net(x, Formula::tensor(a.formula, x), std::move(links));
}

// x in J(A -o B) realized as a net by evaluating its linear family at A.
inline ProofNet net_of_element_via_eval(const JElement& x) {
  detail::require_lolli(x.formula, "net_of_element_via_eval");
  Formula a = x.formula.child().left();
  Formula b = x.formula.child().right().child();
  return compose(linear_component(x, a), evaluation(a, b));
}

}  // namespace mll

#endif  // MLL_CANONICAL_HPP
