// ============================================================================
// formula.hpp
//
// Formulas of unit-free multiplicative linear logic with explicit negation:
//
//   F ::= Var | Tensor(F, F) | Neg(F)
//
// Negation is a real constructor, not an involution: Neg(Neg(A)) and A are
// different formulas, and equality is syntactic tree equality. De Morgan
// normalization exists only as a translation (`de_morganize`) used by the
// correctness checker; stored formulas are never quotiented.
//
// Concrete syntax:  a variable is [a-z][a-z0-9]*, tensor is "(A * B)" with
// mandatory parentheses, negation is a postfix "^" binding tighter than "*".
// "A -o B" is accepted as sugar for ((A * B^))^ and is right-associative;
// redundant grouping parens "(A)" are accepted. `print` emits the canonical
// core syntax (no sugar), and print-then-parse is the identity.
//
// Leaves are addressed by root-to-leaf paths over {L, R, N}. A leaf occurrence
// in a two-sided sequent has an effective polarity determined by a parity
// rule: positive iff (number of N on its path is even) xor (it sits on the
// domain side).
// ============================================================================

#ifndef MLL_FORMULA_HPP
#define MLL_FORMULA_HPP

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mll/errors.hpp"

namespace mll {

enum class Side : std::uint8_t { Dom, Cod };
enum class Polarity : std::uint8_t { Pos, Neg };

inline Polarity flip(Polarity p) {
  return p == Polarity::Pos ? Polarity::Neg : Polarity::Pos;
}

inline const char* to_string(Side s) { return s == Side::Dom ? "dom" : "cod"; }
inline const char* to_string(Polarity p) {
  return p == Polarity::Pos ? "pos" : "neg";
}

// Root-to-leaf path: 'L'/'R' descend a tensor, 'N' descends a negation.
using LeafAddr = std::string;

// ── Formula ─────────────────────────────────────────────────────────────────

class Formula {
public:
  enum class Kind : std::uint8_t { Var, Tensor, Neg };

  static Formula var(std::string name) {
    if (!valid_var_name(name))
      throw SyntaxError("invalid variable name '" + name + "'", 0);
    auto n = std::make_shared<Node>();
    n->kind = Kind::Var;
    n->name = std::move(name);
    n->leaves = 1;
    n->neg_depth = 0;
    return Formula(std::move(n));
  }

  static Formula tensor(const Formula& left, const Formula& right) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Tensor;
    n->a = left.node_;
    n->b = right.node_;
    n->leaves = left.leaf_count() + right.leaf_count();
    n->neg_depth = std::max(left.neg_depth(), right.neg_depth());
    return Formula(std::move(n));
  }

  static Formula neg(const Formula& child) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Neg;
    n->a = child.node_;
    n->leaves = child.leaf_count();
    n->neg_depth = child.neg_depth() + 1;
    return Formula(std::move(n));
  }

  Kind kind() const { return node_->kind; }
  bool is_var() const { return node_->kind == Kind::Var; }
  bool is_tensor() const { return node_->kind == Kind::Tensor; }
  bool is_neg() const { return node_->kind == Kind::Neg; }

  const std::string& var_name() const {
    assert(is_var());
    return node_->name;
  }
  Formula left() const {
    assert(is_tensor());
    return Formula(node_->a);
  }
  Formula right() const {
    assert(is_tensor());
    return Formula(node_->b);
  }
  Formula child() const {
    assert(is_neg());
    return Formula(node_->a);
  }

  std::size_t leaf_count() const { return node_->leaves; }
  // Maximum number of Neg constructors along any root-to-leaf path.
  std::size_t neg_depth() const { return node_->neg_depth; }

  bool operator==(const Formula& o) const { return equal(node_.get(), o.node_.get()); }
  bool operator!=(const Formula& o) const { return !(*this == o); }

  static bool valid_var_name(std::string_view s) {
    if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
      return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
    });
  }

private:
  struct Node {
    Kind kind{};
    std::string name;                  // Var only
    std::shared_ptr<const Node> a, b;  // Tensor: both; Neg: a only
    std::size_t leaves = 0;
    std::size_t neg_depth = 0;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static bool equal(const Node* x, const Node* y) {
    if (x == y) return true;
    if (x->kind != y->kind) return false;
    switch (x->kind) {
      case Kind::Var: return x->name == y->name;
      case Kind::Neg: return equal(x->a.get(), y->a.get());
      case Kind::Tensor:
        return equal(x->a.get(), y->a.get()) && equal(x->b.get(), y->b.get());
    }
    return false;
  }

  std::shared_ptr<const Node> node_;
};

inline Formula dual(const Formula& a) { return Formula::neg(a); }

// A -o B, read as (A * B^)^.
inline Formula lolli(const Formula& a, const Formula& b) {
  return Formula::neg(Formula::tensor(a, Formula::neg(b)));
}

// ── Printing ────────────────────────────────────────────────────────────────

namespace detail {
inline void print_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Var:
      out += f.var_name();
      break;
    case Formula::Kind::Tensor:
      out += '(';
      print_into(f.left(), out);
      out += " * ";
      print_into(f.right(), out);
      out += ')';
      break;
    case Formula::Kind::Neg:
      print_into(f.child(), out);
      out += '^';
      break;
  }
}
}  // namespace detail

inline std::string print(const Formula& f) {
  std::string out;
  detail::print_into(f, out);
  return out;
}

// ── Parsing ─────────────────────────────────────────────────────────────────

namespace detail {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula run() {
    Formula f = formula();
    skip_ws();
    if (pos_ != text_.size())
      throw SyntaxError("unexpected trailing input", pos_);
    return f;
  }

private:
  // formula  := suffixed ("-o" formula)?        right-associative sugar
  // suffixed := primary "^"*
  // primary  := var | "(" formula ("*" formula)? ")"
  Formula formula() {
    Formula lhs = suffixed();
    skip_ws();
    if (text_.substr(pos_).starts_with("-o")) {
      pos_ += 2;
      return lolli(lhs, formula());
    }
    return lhs;
  }

  Formula suffixed() {
    Formula f = primary();
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        f = Formula::neg(f);
      } else {
        return f;
      }
    }
  }

  Formula primary() {
    skip_ws();
    if (pos_ >= text_.size())
      throw SyntaxError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Formula first = formula();
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        Formula second = formula();
        expect(')');
        return Formula::tensor(first, second);
      }
      expect(')');
      return first;
    }
    if (c >= 'a' && c <= 'z') return variable();
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
  }

  Formula variable() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
            (text_[pos_] >= '0' && text_[pos_] <= '9')))
      ++pos_;
    return Formula::var(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw SyntaxError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r'))
      ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Formula parse(std::string_view text) { return detail::Parser(text).run(); }

// ── Leaves and effective polarity ───────────────────────────────────────────

// Positive iff (count of N on the path is even) xor (side is Dom).
inline Polarity eff_polarity(Side side, const LeafAddr& addr) {
  bool even = std::count(addr.begin(), addr.end(), 'N') % 2 == 0;
  bool pos = even != (side == Side::Dom);
  return pos ? Polarity::Pos : Polarity::Neg;
}

struct LeafRef {
  Side side{};
  LeafAddr addr;
  std::string var;
  Polarity eff{};

  bool operator==(const LeafRef&) const = default;
};

namespace detail {
inline void collect_leaves(const Formula& f, Side side, LeafAddr& prefix,
                           std::vector<LeafRef>& out) {
  switch (f.kind()) {
    case Formula::Kind::Var:
      out.push_back({side, prefix, f.var_name(), eff_polarity(side, prefix)});
      break;
    case Formula::Kind::Tensor:
      prefix.push_back('L');
      collect_leaves(f.left(), side, prefix, out);
      prefix.back() = 'R';
      collect_leaves(f.right(), side, prefix, out);
      prefix.pop_back();
      break;
    case Formula::Kind::Neg:
      prefix.push_back('N');
      collect_leaves(f.child(), side, prefix, out);
      prefix.pop_back();
      break;
  }
}
}  // namespace detail

// Leaves in left-to-right order with their addresses and effective polarity.
inline std::vector<LeafRef> leaves(const Formula& f, Side side) {
  std::vector<LeafRef> out;
  out.reserve(f.leaf_count());
  LeafAddr prefix;
  detail::collect_leaves(f, side, prefix, out);
  return out;
}

// Variable name at `addr`, or nullopt if the address does not lead to a Var.
inline std::optional<std::string> resolve_leaf(const Formula& f,
                                               const LeafAddr& addr) {
  Formula cur = f;
  for (char c : addr) {
    switch (c) {
      case 'L':
        if (!cur.is_tensor()) return std::nullopt;
        cur = cur.left();
        break;
      case 'R':
        if (!cur.is_tensor()) return std::nullopt;
        cur = cur.right();
        break;
      case 'N':
        if (!cur.is_neg()) return std::nullopt;
        cur = cur.child();
        break;
      default:
        return std::nullopt;
    }
  }
  if (!cur.is_var()) return std::nullopt;
  return cur.var_name();
}

// ── De Morgan translation ───────────────────────────────────────────────────

// Negation-free two-connective tree used by the correctness checker. Each
// Tensor of the source formula becomes a TensorNode or ParNode depending on
// the polarity reached at that point (Neg flips polarity and vanishes), and
// each Var becomes a Literal. Nodes are stored flat, children by index.
struct DMTree {
  enum class Kind : std::uint8_t { Tensor, Par, Literal };

  struct Node {
    Kind kind{};
    int left = -1, right = -1;  // internal nodes
    LeafRef leaf;               // literals
    LeafAddr source_addr;       // address of the originating Tensor/Var
  };

  Side side{};
  std::vector<Node> nodes;
  int root = -1;

  std::size_t par_count() const {
    std::size_t k = 0;
    for (const auto& n : nodes)
      if (n.kind == Kind::Par) ++k;
    return k;
  }
  std::size_t literal_count() const {
    std::size_t k = 0;
    for (const auto& n : nodes)
      if (n.kind == Kind::Literal) ++k;
    return k;
  }
};

namespace detail {
inline int de_morganize_into(const Formula& f, Polarity pol, Side side,
                             LeafAddr& addr, DMTree& out) {
  switch (f.kind()) {
    case Formula::Kind::Var: {
      DMTree::Node n;
      n.kind = DMTree::Kind::Literal;
      n.leaf = {side, addr, f.var_name(), pol};
      n.source_addr = addr;
      out.nodes.push_back(std::move(n));
      return static_cast<int>(out.nodes.size()) - 1;
    }
    case Formula::Kind::Neg: {
      addr.push_back('N');
      int idx = de_morganize_into(f.child(), flip(pol), side, addr, out);
      addr.pop_back();
      return idx;
    }
    case Formula::Kind::Tensor: {
      addr.push_back('L');
      int l = de_morganize_into(f.left(), pol, side, addr, out);
      addr.back() = 'R';
      int r = de_morganize_into(f.right(), pol, side, addr, out);
      addr.pop_back();
      DMTree::Node n;
      n.kind = pol == Polarity::Pos ? DMTree::Kind::Tensor : DMTree::Kind::Par;
      n.left = l;
      n.right = r;
      n.source_addr = addr;
      out.nodes.push_back(std::move(n));
      return static_cast<int>(out.nodes.size()) - 1;
    }
  }
  return -1;
}
}  // namespace detail

// The Literal leaves carry the polarity reached by the translation; when
// `start` follows the side convention (Neg for Dom, Pos for Cod) this equals
// the leaf's effective polarity.
inline DMTree de_morganize(const Formula& f, Polarity start,
                           Side side = Side::Cod) {
  DMTree out;
  out.side = side;
  out.nodes.reserve(2 * f.leaf_count());
  LeafAddr addr;
  out.root = detail::de_morganize_into(f, start, side, addr, out);
  return out;
}

}  // namespace mll

#endif  // MLL_FORMULA_HPP
