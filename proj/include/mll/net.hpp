// ============================================================================
// net.hpp
//
// Proof nets over explicit-negation formulas. A net from A to B is a perfect
// matching on the leaves of A (domain side) and B (codomain side) where each
// link joins two occurrences of the same variable with opposite effective
// polarity. Links may also pair two leaves on the same side. A JElement is
// the one-sided variant: a matching on the leaves of a single codomain-side
// formula.
//
// Correctness is the Danos-Regnier switching criterion, checked exhaustively:
// for a sequent graph with k par nodes all 2^k switchings are examined and
// each must be acyclic and connected across the whole graph (both conclusion
// trees plus axiom links). The first failing switching, in a fixed order, is
// returned as a witness.
// ============================================================================

#ifndef MLL_NET_HPP
#define MLL_NET_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mll/errors.hpp"
#include "mll/formula.hpp"

namespace mll {

// ── Links ───────────────────────────────────────────────────────────────────

struct LinkEnd {
  Side side{};
  LeafAddr addr;

  auto operator<=>(const LinkEnd&) const = default;
};

// Unordered pair of endpoints, stored with a <= b.
struct Link {
  LinkEnd a, b;

  static Link make(LinkEnd x, LinkEnd y) {
    if (y < x) std::swap(x, y);
    return Link{std::move(x), std::move(y)};
  }

  auto operator<=>(const Link&) const = default;
};

using Linking = std::vector<Link>;

// Normalize endpoint order within each link and sort the link list; the
// canonical form makes linking equality plain vector equality.
inline void canonicalize(Linking& links) {
  for (auto& l : links)
    if (l.b < l.a) std::swap(l.a, l.b);
  std::sort(links.begin(), links.end());
}

// ── Net values ──────────────────────────────────────────────────────────────

// Plain value types. Nets produced by make_net / the constructors in
// compose.hpp and canonical.hpp are validated; aggregate-initialized values
// are unchecked and exist so tests can feed the checker bad linkings.
struct ProofNet {
  Formula dom, cod;
  Linking links;
};

struct JElement {
  Formula formula;  // codomain side
  Linking links;
};

inline bool operator==(const ProofNet& x, const ProofNet& y) {
  return x.dom == y.dom && x.cod == y.cod && x.links == y.links;
}
inline bool operator!=(const ProofNet& x, const ProofNet& y) { return !(x == y); }

inline bool operator==(const JElement& x, const JElement& y) {
  return x.formula == y.formula && x.links == y.links;
}
inline bool operator!=(const JElement& x, const JElement& y) { return !(x == y); }

// ── Switching correctness ───────────────────────────────────────────────────

struct SwitchChoice {
  Side side{};          // which conclusion tree the par node lives in
  LeafAddr tensor_addr; // formula address of the Tensor that became the par
  bool keep_left{};     // which premise edge the switching kept
};

struct Switching {
  std::vector<SwitchChoice> choices;
};

enum class DrFailure : std::uint8_t { Cycle, Disconnected };

struct DrResult {
  bool correct = false;
  std::optional<DrFailure> failure;
  std::optional<Switching> witness;
  std::uint64_t switchings_examined = 0;
};

inline const char* to_string(DrFailure f) {
  return f == DrFailure::Cycle ? "cycle" : "disconnected";
}

namespace detail {

// Guard against runaway exponential checks; desk-scale nets stay far below.
inline constexpr std::size_t kMaxParNodes = 20;

struct UnionFind {
  std::vector<int> parent;

  void reset(std::size_t n) {
    parent.resize(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // False if x and y were already connected (adding the edge closes a cycle).
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }
};

// Exhaustive switching check over one or two conclusion trees.
inline DrResult dr_check(std::span<const DMTree> trees, const Linking& links) {
  // Merge tree nodes into one vertex numbering.
  struct ParEntry {
    int node, left, right;
    Side side;
    LeafAddr addr;
  };
  std::vector<std::pair<int, int>> fixed_edges;
  std::vector<ParEntry> pars;
  std::map<LinkEnd, int> literal_at;
  int vertices = 0;

  for (const auto& tree : trees) {
    int base = vertices;
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
      const auto& n = tree.nodes[i];
      int self = base + static_cast<int>(i);
      switch (n.kind) {
        case DMTree::Kind::Literal:
          literal_at[{n.leaf.side, n.leaf.addr}] = self;
          break;
        case DMTree::Kind::Tensor:
          fixed_edges.emplace_back(self, base + n.left);
          fixed_edges.emplace_back(self, base + n.right);
          break;
        case DMTree::Kind::Par:
          pars.push_back(
              {self, base + n.left, base + n.right, tree.side, n.source_addr});
          break;
      }
    }
    vertices += static_cast<int>(tree.nodes.size());
  }

  for (const auto& l : links) {
    auto ia = literal_at.find(l.a);
    auto ib = literal_at.find(l.b);
    if (ia == literal_at.end() || ib == literal_at.end())
      throw BadAddress("link endpoint does not address a leaf");
    fixed_edges.emplace_back(ia->second, ib->second);
  }

  const std::size_t k = pars.size();
  if (k > kMaxParNodes)
    throw SizeBoundExceeded("too many par nodes for exhaustive switching (" +
                            std::to_string(k) + ")");

  DrResult result;
  UnionFind uf;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    ++result.switchings_examined;
    uf.reset(static_cast<std::size_t>(vertices));
    int components = vertices;
    bool cycle = false;

    auto add_edge = [&](int u, int v) {
      if (!uf.unite(u, v)) {
        cycle = true;
        return;
      }
      --components;
    };

    for (const auto& [u, v] : fixed_edges) {
      add_edge(u, v);
      if (cycle) break;
    }
    if (!cycle) {
      for (std::size_t i = 0; i < k; ++i) {
        bool keep_left = ((mask >> i) & 1) == 0;
        add_edge(pars[i].node, keep_left ? pars[i].left : pars[i].right);
        if (cycle) break;
      }
    }

    if (cycle || components != 1) {
      result.correct = false;
      result.failure = cycle ? DrFailure::Cycle : DrFailure::Disconnected;
      Switching w;
      w.choices.reserve(k);
      for (std::size_t i = 0; i < k; ++i)
        w.choices.push_back(
            {pars[i].side, pars[i].addr, ((mask >> i) & 1) == 0});
      result.witness = std::move(w);
      return result;
    }
  }

  result.correct = true;
  return result;
}

}  // namespace detail

inline DrResult dr_correct(const ProofNet& net) {
  const DMTree trees[2] = {de_morganize(net.dom, Polarity::Neg, Side::Dom),
                           de_morganize(net.cod, Polarity::Pos, Side::Cod)};
  return detail::dr_check(trees, net.links);
}

inline DrResult dr_correct(const JElement& el) {
  const DMTree trees[1] = {de_morganize(el.formula, Polarity::Pos, Side::Cod)};
  return detail::dr_check(trees, el.links);
}

class NotCorrect : public Error {
public:
  NotCorrect(const std::string& what, DrResult result)
      : Error("not_correct", what), result_(std::move(result)) {}

  const DrResult& result() const noexcept { return result_; }

private:
  DrResult result_;
};

// ── Validation ──────────────────────────────────────────────────────────────

namespace detail {

inline void validate_matching(const std::vector<LeafRef>& expected,
                              const Linking& links) {
  std::map<LinkEnd, const LeafRef*> leaf_at;
  std::map<LinkEnd, int> used;
  for (const auto& leaf : expected) leaf_at[{leaf.side, leaf.addr}] = &leaf;

  for (const auto& l : links) {
    const LeafRef* ends[2] = {nullptr, nullptr};
    const LinkEnd* keys[2] = {&l.a, &l.b};
    for (int i = 0; i < 2; ++i) {
      auto it = leaf_at.find(*keys[i]);
      if (it == leaf_at.end())
        throw BadAddress("link endpoint " + std::string(to_string(keys[i]->side)) +
                         " \"" + keys[i]->addr + "\" is not a leaf");
      ends[i] = it->second;
      if (++used[*keys[i]] > 1)
        throw NotPerfectMatching("leaf " + std::string(to_string(keys[i]->side)) +
                                 " \"" + keys[i]->addr +
                                 "\" occurs in more than one link");
    }
    if (ends[0]->var != ends[1]->var)
      throw PolarityMismatch("link joins distinct variables '" + ends[0]->var +
                             "' and '" + ends[1]->var + "'");
    if (ends[0]->eff == ends[1]->eff)
      throw PolarityMismatch("link joins two " +
                             std::string(to_string(ends[0]->eff)) +
                             " occurrences of '" + ends[0]->var + "'");
  }

  for (const auto& leaf : expected) {
    if (!used.count({leaf.side, leaf.addr}))
      throw NotPerfectMatching("leaf " + std::string(to_string(leaf.side)) +
                               " \"" + leaf.addr + "\" (" + leaf.var +
                               ") is unlinked");
  }
}

}  // namespace detail

// Validates matching, complementarity and switching correctness; returns the
// net with its linking in canonical order.
inline ProofNet make_net(Formula dom, Formula cod, Linking links) {
  canonicalize(links);
  auto expected = leaves(dom, Side::Dom);
  auto cod_leaves = leaves(cod, Side::Cod);
  expected.insert(expected.end(), cod_leaves.begin(), cod_leaves.end());
  detail::validate_matching(expected, links);

  ProofNet net{std::move(dom), std::move(cod), std::move(links)};
  DrResult dr = dr_correct(net);
  if (!dr.correct)
    throw NotCorrect(std::string("net fails the switching criterion (") +
                         to_string(*dr.failure) + ")",
                     std::move(dr));
  return net;
}

inline JElement make_element(Formula formula, Linking links) {
  canonicalize(links);
  detail::validate_matching(leaves(formula, Side::Cod), links);

  JElement el{std::move(formula), std::move(links)};
  DrResult dr = dr_correct(el);
  if (!dr.correct)
    throw NotCorrect(std::string("element fails the switching criterion (") +
                         to_string(*dr.failure) + ")",
                     std::move(dr));
  return el;
}

// ── Enumeration ─────────────────────────────────────────────────────────────

inline constexpr std::size_t kDefaultLeafBound = 12;

namespace detail {

// All perfect complementary matchings on `ends`, in lexicographic order of
// their canonical link lists. Within each variable the positive occurrences
// are matched to permutations of the negative ones.
inline std::vector<Linking> complementary_matchings(
    const std::vector<LeafRef>& ends) {
  std::map<std::string, std::pair<std::vector<LinkEnd>, std::vector<LinkEnd>>>
      by_var;
  for (const auto& leaf : ends) {
    auto& bucket = by_var[leaf.var];
    (leaf.eff == Polarity::Pos ? bucket.first : bucket.second)
        .push_back({leaf.side, leaf.addr});
  }
  for (const auto& [var, bucket] : by_var)
    if (bucket.first.size() != bucket.second.size()) return {};

  Linking current;
  current.reserve(ends.size() / 2);
  std::vector<Linking> result;

  auto per_var = [&](auto&& self, decltype(by_var.begin()) vit) -> void {
    if (vit == by_var.end()) {
      Linking copy = current;
      canonicalize(copy);
      result.push_back(std::move(copy));
      return;
    }
    const auto& [positives, negatives] = vit->second;
    std::vector<bool> taken(negatives.size(), false);
    auto assign = [&](auto&& assign_self, std::size_t pos_idx) -> void {
      if (pos_idx == positives.size()) {
        self(self, std::next(vit));
        return;
      }
      for (std::size_t j = 0; j < negatives.size(); ++j) {
        if (taken[j]) continue;
        taken[j] = true;
        current.push_back(Link::make(positives[pos_idx], negatives[j]));
        assign_self(assign_self, pos_idx + 1);
        current.pop_back();
        taken[j] = false;
      }
    };
    assign(assign, 0);
  };
  per_var(per_var, by_var.begin());

  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace detail

// All correct nets from `a` to `b`, in lexicographic order of their canonical
// link lists. Throws SizeBoundExceeded when the sequent has more than
// `leaf_bound` leaves.
inline std::vector<ProofNet> enumerate_hom(
    const Formula& a, const Formula& b,
    std::size_t leaf_bound = kDefaultLeafBound) {
  if (a.leaf_count() + b.leaf_count() > leaf_bound)
    throw SizeBoundExceeded("hom enumeration over " +
                            std::to_string(a.leaf_count() + b.leaf_count()) +
                            " leaves exceeds bound " +
                            std::to_string(leaf_bound));
  auto ends = leaves(a, Side::Dom);
  auto cod_ends = leaves(b, Side::Cod);
  ends.insert(ends.end(), cod_ends.begin(), cod_ends.end());

  const DMTree trees[2] = {de_morganize(a, Polarity::Neg, Side::Dom),
                           de_morganize(b, Polarity::Pos, Side::Cod)};
  std::vector<ProofNet> out;
  for (auto& links : detail::complementary_matchings(ends)) {
    if (detail::dr_check(trees, links).correct)
      out.push_back(ProofNet{a, b, std::move(links)});
  }
  return out;
}

// All correct one-sided elements on `a`, in the same deterministic order.
inline std::vector<JElement> enumerate_j(
    const Formula& a, std::size_t leaf_bound = kDefaultLeafBound) {
  if (a.leaf_count() > leaf_bound)
    throw SizeBoundExceeded("element enumeration over " +
                            std::to_string(a.leaf_count()) +
                            " leaves exceeds bound " +
                            std::to_string(leaf_bound));
  const DMTree trees[1] = {de_morganize(a, Polarity::Pos, Side::Cod)};
  std::vector<JElement> out;
  for (auto& links : detail::complementary_matchings(leaves(a, Side::Cod))) {
    if (detail::dr_check(trees, links).correct)
      out.push_back(JElement{a, std::move(links)});
  }
  return out;
}

}  // namespace mll

#endif  // MLL_NET_HPP
