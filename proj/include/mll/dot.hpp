// Graphviz rendering of a net: the two formula trees as clustered subgraphs
// (solid edges), axiom links as dashed edges that do not constrain layout.
// Output is deterministic for a given net.

#ifndef MLL_DOT_HPP
#define MLL_DOT_HPP

#include <sstream>
#include <string>

#include "mll/formula.hpp"
#include "mll/net.hpp"

namespace mll {

namespace detail {

inline std::string dot_node_id(Side side, const LeafAddr& addr) {
  std::string id = (side == Side::Dom) ? "d" : "c";
  return id + (addr.empty() ? std::string("_root") : "_" + addr);
}

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  return out;
}

// Writes one formula tree. Node ids reuse the leaf-address scheme, so axiom
// links can target leaves by address alone.
inline void dot_tree(std::ostream& os, const Formula& f, Side side,
                     const LeafAddr& addr) {
  std::string id = dot_node_id(side, addr);
  switch (f.kind()) {
    case Formula::Kind::Var:
      os << "    " << id << " [label=\"" << dot_escape(f.var_name())
         << "\", shape=plaintext];\n";
      break;
    case Formula::Kind::Tensor:
      os << "    " << id << " [label=\"*\", shape=circle];\n";
      dot_tree(os, f.left(), side, addr + "L");
      dot_tree(os, f.right(), side, addr + "R");
      os << "    " << id << " -> " << dot_node_id(side, addr + "L") << ";\n";
      os << "    " << id << " -> " << dot_node_id(side, addr + "R") << ";\n";
      break;
    case Formula::Kind::Neg:
      os << "    " << id << " [label=\"^\", shape=circle];\n";
      dot_tree(os, f.child(), side, addr + "N");
      os << "    " << id << " -> " << dot_node_id(side, addr + "N") << ";\n";
      break;
  }
}

}  // namespace detail

inline std::string to_dot(const ProofNet& n) {
  std::ostringstream os;
  os << "digraph net {\n";
  os << "  rankdir=TB;\n";
  os << "  node [fontname=\"monospace\"];\n";
  os << "  subgraph cluster_dom {\n";
  os << "    label=\"dom: " << detail::dot_escape(print(n.dom)) << "\";\n";
  detail::dot_tree(os, n.dom, Side::Dom, "");
  os << "  }\n";
  os << "  subgraph cluster_cod {\n";
  os << "    label=\"cod: " << detail::dot_escape(print(n.cod)) << "\";\n";
  detail::dot_tree(os, n.cod, Side::Cod, "");
  os << "  }\n";
  for (const auto& l : n.links)
    os << "  " << detail::dot_node_id(l.a.side, l.a.addr) << " -> "
       << detail::dot_node_id(l.b.side, l.b.addr)
       << " [dir=none, style=dashed, constraint=false];\n";
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const JElement& x) {
  std::ostringstream os;
  os << "digraph element {\n";
  os << "  rankdir=TB;\n";
  os << "  node [fontname=\"monospace\"];\n";
  os << "  subgraph cluster_cod {\n";
  os << "    label=\"cod: " << detail::dot_escape(print(x.formula)) << "\";\n";
  detail::dot_tree(os, x.formula, Side::Cod, "");
  os << "  }\n";
  for (const auto& l : x.links)
    os << "  " << detail::dot_node_id(l.a.side, l.a.addr) << " -> "
       << detail::dot_node_id(l.b.side, l.b.addr)
       << " [dir=none, style=dashed, constraint=false];\n";
  os << "}\n";
  return os.str();
}

}  // namespace mll

#endif  // MLL_DOT_HPP
