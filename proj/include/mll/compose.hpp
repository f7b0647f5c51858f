// ============================================================================
// compose.hpp
//
// Structural operations on nets: identities, composition by cut elimination,
// tensor of morphisms, and the action of a net on one-sided elements.
//
// Composition glues the codomain leaves of f to the equally-addressed domain
// leaves of g and traces maximal paths through the shared interface. Every
// interface leaf has degree two (one f-link, one g-link) and every outer leaf
// degree one, so each component is a simple path between outer leaves or a
// closed loop confined to the interface. Loops cannot arise from two correct
// nets; they are reported as CutCycle (corrupted input).
// ============================================================================

#ifndef MLL_COMPOSE_HPP
#define MLL_COMPOSE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mll/errors.hpp"
#include "mll/formula.hpp"
#include "mll/net.hpp"

namespace mll {

inline ProofNet identity(const Formula& a) {
  Linking links;
  links.reserve(a.leaf_count());
  for (const auto& leaf : leaves(a, Side::Dom))
    links.push_back(
        Link::make({Side::Dom, leaf.addr}, {Side::Cod, leaf.addr}));
  return make_net(a, a, std::move(links));
}

namespace detail {

// Cut the `left_iface`-side of the left linking against the `right_iface`-side
// of the right linking (same address space). Returns links over the remaining
// leaves: left outer endpoints become Dom, right outer endpoints become Cod.
inline Linking trace_cut(const Linking& left, Side left_iface,
                         const Linking& right, Side right_iface) {
  auto link_map = [](const Linking& links) {
    std::map<LinkEnd, LinkEnd> m;
    for (const auto& l : links) {
      m[l.a] = l.b;
      m[l.b] = l.a;
    }
    return m;
  };
  const auto left_of = link_map(left);
  const auto right_of = link_map(right);

  enum class Net { Left, Right };
  auto is_iface = [&](Net n, const LinkEnd& e) {
    return n == Net::Left ? e.side == left_iface : e.side == right_iface;
  };
  auto as_result = [&](Net n, const LinkEnd& e) {
    return LinkEnd{n == Net::Left ? Side::Dom : Side::Cod, e.addr};
  };

  std::map<LeafAddr, bool> iface_used;
  for (const auto& [end, other] : left_of) {
    (void)other;
    if (end.side == left_iface) iface_used.emplace(end.addr, false);
  }

  Linking out;
  std::map<std::pair<int, LinkEnd>, bool> outer_done;
  auto key = [](Net n, const LinkEnd& e) {
    return std::make_pair(n == Net::Left ? 0 : 1, e);
  };

  auto trace_from = [&](Net start_net, const LinkEnd& start) {
    if (outer_done[key(start_net, start)]) return;
    Net net = start_net;
    LinkEnd cur = start;
    for (;;) {
      const auto& m = net == Net::Left ? left_of : right_of;
      auto it = m.find(cur);
      if (it == m.end())
        throw BadAddress("dangling endpoint during composition at " +
                         std::string(to_string(cur.side)) + " \"" + cur.addr +
                         "\"");
      LinkEnd next = it->second;
      if (!is_iface(net, next)) {
        outer_done[key(start_net, start)] = true;
        outer_done[key(net, next)] = true;
        out.push_back(
            Link::make(as_result(start_net, start), as_result(net, next)));
        return;
      }
      auto used = iface_used.find(next.addr);
      if (used == iface_used.end())
        throw InterfaceMismatch("interface leaf \"" + next.addr +
                                "\" missing from one side of the cut");
      if (used->second)
        throw CutCycle("composition revisits interface leaf \"" + next.addr +
                       "\"");
      used->second = true;
      // Hop across the cut to the other net's copy of this leaf.
      net = net == Net::Left ? Net::Right : Net::Left;
      cur = LinkEnd{net == Net::Left ? left_iface : right_iface, next.addr};
    }
  };

  for (const auto& l : left) {
    for (const auto* e : {&l.a, &l.b})
      if (e->side != left_iface) trace_from(Net::Left, *e);
  }
  for (const auto& l : right) {
    for (const auto* e : {&l.a, &l.b})
      if (e->side != right_iface) trace_from(Net::Right, *e);
  }

  for (const auto& [addr, used] : iface_used)
    if (!used)
      throw CutCycle("interface leaf \"" + addr +
                     "\" lies on a closed cut loop");

  return out;
}

}  // namespace detail

// Diagrammatic composition: f : A -> B, g : B -> C, result A -> C. The shared
// formula must match syntactically. The result is revalidated in full.
inline ProofNet compose(const ProofNet& f, const ProofNet& g) {
  if (f.cod != g.dom)
    throw InterfaceMismatch("compose: codomain " + print(f.cod) +
                            " differs from domain " + print(g.dom));
  Linking links =
      detail::trace_cut(f.links, Side::Cod, g.links, Side::Dom);
  return make_net(f.dom, g.cod, std::move(links));
}

// f : A -> A', g : B -> B' gives A (x) B -> A' (x) B' by prefixing addresses.
inline ProofNet tensor_mor(const ProofNet& f, const ProofNet& g) {
  Linking links;
  links.reserve(f.links.size() + g.links.size());
  auto prefixed = [&](const Linking& src, char tag) {
    for (const auto& l : src)
      links.push_back(Link::make({l.a.side, tag + l.a.addr},
                                 {l.b.side, tag + l.b.addr}));
  };
  prefixed(f.links, 'L');
  prefixed(g.links, 'R');
  return make_net(Formula::tensor(f.dom, g.dom),
                  Formula::tensor(f.cod, g.cod), std::move(links));
}

// Functorial action on elements: cut x against the domain of f, yielding an
// element of the codomain.
inline JElement map_element(const ProofNet& f, const JElement& x) {
  if (x.formula != f.dom)
    throw InterfaceMismatch("map_element: element lives on " +
                            print(x.formula) + ", net expects " +
                            print(f.dom));
  Linking links = detail::trace_cut(x.links, Side::Cod, f.links, Side::Dom);
  return make_element(f.cod, std::move(links));
}

}  // namespace mll

#endif  // MLL_COMPOSE_HPP
