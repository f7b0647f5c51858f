// Independent reference implementation used to cross-check the library.
//
// Differences are deliberate: the correctness graph is built directly on the
// formula syntax tree (negations stay as pass-through vertices instead of
// being erased), switch nodes are recognized by counting negations along the
// path, and matchings are generated by recursive first-leaf pairing with
// pruning rather than per-variable bucket assignment. Agreement between the
// two routes is therefore meaningful.

#ifndef MLL_TESTS_ORACLE_HPP
#define MLL_TESTS_ORACLE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "mll/formula.hpp"
#include "mll/net.hpp"

namespace oracle {

struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> fixed;
  // switch vertex and its two child vertices; one edge is chosen per mask bit
  std::vector<std::array<int, 3>> switches;
  std::map<mll::LinkEnd, int> leaf_vertex;
};

inline int add_tree(Graph& g, const mll::Formula& f, mll::Side side,
                    const mll::LeafAddr& addr, int negs) {
  int v = g.vertices++;
  switch (f.kind()) {
    case mll::Formula::Kind::Var:
      g.leaf_vertex[{side, addr}] = v;
      break;
    case mll::Formula::Kind::Tensor: {
      int l = add_tree(g, f.left(), side, addr + "L", negs);
      int r = add_tree(g, f.right(), side, addr + "R", negs);
      // The tensor acts as a switch when its effective polarity is negative:
      // odd negations above it on the codomain side, even on the domain side.
      bool is_switch =
          (side == mll::Side::Cod) ? (negs % 2 == 1) : (negs % 2 == 0);
      if (is_switch)
        g.switches.push_back({v, l, r});
      else {
        g.fixed.emplace_back(v, l);
        g.fixed.emplace_back(v, r);
      }
      break;
    }
    case mll::Formula::Kind::Neg: {
      int c = add_tree(g, f.child(), side, addr + "N", negs + 1);
      g.fixed.emplace_back(v, c);
      break;
    }
  }
  return v;
}

inline bool correct_linking(const Graph& g, const mll::Linking& links) {
  const std::size_t k = g.switches.size();
  if (k > 16) throw std::runtime_error("oracle: too many switch nodes");
  std::vector<int> parent;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    parent.assign(static_cast<std::size_t>(g.vertices), -1);
    auto find = [&](int x) {
      while (parent[x] >= 0) x = parent[x];
      return x;
    };
    int components = g.vertices;
    bool acyclic = true;
    auto join = [&](int a, int b) {
      int ra = find(a), rb = find(b);
      if (ra == rb) {
        acyclic = false;
        return;
      }
      parent[ra] = rb;
      --components;
    };
    for (const auto& [a, b] : g.fixed) {
      join(a, b);
      if (!acyclic) break;
    }
    if (acyclic)
      for (std::size_t i = 0; i < k; ++i) {
        const auto& s = g.switches[i];
        join(s[0], (mask >> i) & 1 ? s[2] : s[1]);
        if (!acyclic) break;
      }
    if (acyclic)
      for (const auto& l : links) {
        join(g.leaf_vertex.at(l.a), g.leaf_vertex.at(l.b));
        if (!acyclic) break;
      }
    if (!acyclic || components != 1) return false;
  }
  return true;
}

// All perfect pairings of complementary leaves: repeatedly match the first
// open leaf against every compatible later leaf.
inline void pairings_rec(const std::vector<mll::LeafRef>& ls,
                         std::vector<bool>& used, mll::Linking& cur,
                         std::vector<mll::Linking>& out) {
  std::size_t first = used.size();
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) {
      first = i;
      break;
    }
  if (first == used.size()) {
    mll::Linking copy = cur;
    mll::canonicalize(copy);
    out.push_back(std::move(copy));
    return;
  }
  used[first] = true;
  for (std::size_t j = first + 1; j < used.size(); ++j) {
    if (used[j]) continue;
    if (ls[first].var != ls[j].var) continue;
    if (ls[first].eff == ls[j].eff) continue;
    used[j] = true;
    cur.push_back(mll::Link::make({ls[first].side, ls[first].addr},
                                  {ls[j].side, ls[j].addr}));
    pairings_rec(ls, used, cur, out);
    cur.pop_back();
    used[j] = false;
  }
  used[first] = false;
}

inline std::vector<mll::Linking> complementary_pairings(
    const std::vector<mll::LeafRef>& ls) {
  if (ls.size() > 12) throw std::runtime_error("oracle: too many leaves");
  if (ls.size() % 2 != 0) return {};
  std::vector<bool> used(ls.size(), false);
  mll::Linking cur;
  std::vector<mll::Linking> out;
  pairings_rec(ls, used, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<mll::Linking> hom_linkings(const mll::Formula& a,
                                              const mll::Formula& b) {
  Graph g;
  add_tree(g, a, mll::Side::Dom, "", 0);
  add_tree(g, b, mll::Side::Cod, "", 0);
  auto ls = mll::leaves(a, mll::Side::Dom);
  auto cod = mll::leaves(b, mll::Side::Cod);
  ls.insert(ls.end(), cod.begin(), cod.end());
  std::vector<mll::Linking> out;
  for (auto& links : complementary_pairings(ls))
    if (correct_linking(g, links)) out.push_back(std::move(links));
  return out;
}

inline std::vector<mll::Linking> j_linkings(const mll::Formula& f) {
  Graph g;
  add_tree(g, f, mll::Side::Cod, "", 0);
  std::vector<mll::Linking> out;
  for (auto& links : complementary_pairings(mll::leaves(f, mll::Side::Cod)))
    if (correct_linking(g, links)) out.push_back(std::move(links));
  return out;
}

inline std::size_t hom_count(const mll::Formula& a, const mll::Formula& b) {
  return hom_linkings(a, b).size();
}

inline std::size_t j_count(const mll::Formula& f) {
  return j_linkings(f).size();
}

}  // namespace oracle

#endif  // MLL_TESTS_ORACLE_HPP
