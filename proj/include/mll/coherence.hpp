// ============================================================================
// coherence.hpp
//
// Machine checking of the coherence diagrams over a stratified grid of
// formulas. Each diagram is an equation between nets (or elements) built from
// the canonical constructors; an instance fixes the formula slots, the check
// quantifies over every net or element the instance admits and compares both
// sides link for link.
//
// Instances are drawn deterministically: formulas are grouped into strata by
// leaf count (sorted by printed form), tuples are enumerated by ascending
// total leaf count, then by slot-size composition (smallest maximum part
// first), then by per-slot index. A per-variable polarity balance test skips
// tuples whose quantified hom- and element-sets are provably empty, so the
// budgeted scan spends its effort on instances that actually say something.
//
// Two deliberately wrong constructors can be injected (a symmetry that does
// not swap, an internal currying that swaps its arguments) to confirm the
// harness catches broken canonical data.
// ============================================================================

#ifndef MLL_COHERENCE_HPP
#define MLL_COHERENCE_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mll/canonical.hpp"
#include "mll/compose.hpp"
#include "mll/formula.hpp"
#include "mll/net.hpp"

namespace mll {

// ── Formula grid ────────────────────────────────────────────────────────────

// Formulas over a fixed variable list, stratified by leaf count, with a cap
// on negation depth. Strata are built lazily and sorted by printed form, so
// stratum(k)[i] is stable across runs.
class FormulaGrid {
 public:
  FormulaGrid(std::vector<std::string> vars, std::size_t neg_depth_cap)
      : vars_(std::move(vars)), cap_(neg_depth_cap) {}

  const std::vector<Formula>& stratum(std::size_t leaf_count) {
    if (leaf_count == 0)
      throw std::invalid_argument("formula stratum index starts at 1");
    while (strata_.size() < leaf_count) build_next();
    return strata_[leaf_count - 1];
  }

 private:
  void build_next() {
    const std::size_t n = strata_.size() + 1;
    std::vector<std::pair<std::string, Formula>> keyed;
    auto add_wrapped = [&](Formula f) {
      for (std::size_t depth = f.neg_depth();; ++depth) {
        keyed.emplace_back(print(f), f);
        if (depth >= cap_) break;
        f = Formula::neg(f);
      }
    };
    if (n == 1) {
      for (const auto& v : vars_) add_wrapped(Formula::var(v));
    } else {
      for (std::size_t i = 1; i < n; ++i)
        for (const auto& l : strata_[i - 1])
          for (const auto& r : strata_[n - i - 1])
            add_wrapped(Formula::tensor(l, r));
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Formula> out;
    out.reserve(keyed.size());
    for (auto& [_, f] : keyed) out.push_back(std::move(f));
    strata_.push_back(std::move(out));
  }

  std::vector<std::string> vars_;
  std::size_t cap_;
  // A deque keeps references returned by stratum() valid while later strata
  // are appended; callers hold them across lazy builds.
  std::deque<std::vector<Formula>> strata_;
};

// ── Configuration and results ───────────────────────────────────────────────

struct SuiteConfig {
  std::vector<std::string> vars{"p", "q"};
  std::size_t max_leaves = 6;      // leaves per formula slot
  std::size_t neg_depth = 2;       // negation depth cap for grid formulas
  std::size_t total_leaf_cap = kDefaultLeafBound;  // leaves per whole tuple
  std::size_t leaf_bound = kDefaultLeafBound;      // enumeration size guard
  std::uint64_t seed = 0;          // seeds the naturality sampling
  std::size_t target_nonvacuous = 128;  // stop a diagram after this many
  std::size_t max_processed = 1024;     // instances actually checked
  std::size_t max_scanned = 600000;     // tuples generated, skipped or not
  std::size_t lin_samples = 8;     // sampled morphisms per naturality check
  std::vector<std::string> diagrams;  // empty means all
  bool wrong_symmetry = false;        // negative-control injections
  bool wrong_internal_curry = false;
};

struct CheckOptions {
  std::size_t leaf_bound = kDefaultLeafBound;
  std::size_t lin_samples = 8;
  std::uint64_t seed = 0;
  bool wrong_symmetry = false;
  bool wrong_internal_curry = false;
};

enum class DiagramStatus : std::uint8_t { Holds, Fails, Error };

inline const char* to_string(DiagramStatus s) {
  switch (s) {
    case DiagramStatus::Holds: return "holds";
    case DiagramStatus::Fails: return "fails";
    case DiagramStatus::Error: return "error";
  }
  return "error";
}

using WitnessSide = std::variant<ProofNet, JElement>;
using Witness = std::pair<WitnessSide, WitnessSide>;

// Outcome of checking one instance. An instance is vacuous when every
// quantified set it ranges over turned out empty, so no comparison happened.
struct CheckOutcome {
  bool vacuous = true;
  bool holds = true;
  std::optional<Witness> witness;
};

struct DiagramReport {
  std::string diagram;
  std::vector<Formula> instance;
  DiagramStatus status = DiagramStatus::Holds;
  bool vacuous = false;
  std::optional<Witness> witness;
  std::string error;
};

struct DiagramTally {
  std::uint64_t scanned = 0;
  std::uint64_t vacuous_skipped = 0;  // rejected by the emptiness prefilter
  std::uint64_t processed = 0;
  std::uint64_t vacuous = 0;          // processed but nothing to compare
  std::uint64_t nonvacuous = 0;
  std::uint64_t holds = 0;
  std::uint64_t fails = 0;
  std::uint64_t errors = 0;
};

struct SuiteResult {
  std::map<std::string, DiagramTally> tallies;
  std::vector<DiagramReport> reports;
  bool all_hold = true;
  bool any_error = false;
  // The element/net correspondence ran on at least one nonvacuous instance
  // and every comparison held.
  bool element_net_bijection_empirical = false;
};

// ── Prefilters ──────────────────────────────────────────────────────────────

namespace detail {

// Perfect complementary matchings need, per variable, as many effectively
// positive leaves as negative ones. Cheap and sound: false means the
// quantified set is certainly empty.
inline void tally_polarity(const Formula& f, Side side,
                           std::map<std::string, int>& delta) {
  for (const auto& leaf : leaves(f, side))
    delta[leaf.var] += (leaf.eff == Polarity::Pos) ? 1 : -1;
}

inline bool balanced_hom(const Formula& dom, const Formula& cod) {
  std::map<std::string, int> delta;
  tally_polarity(dom, Side::Dom, delta);
  tally_polarity(cod, Side::Cod, delta);
  for (const auto& [_, d] : delta)
    if (d != 0) return false;
  return true;
}

inline bool balanced_j(const Formula& f) {
  std::map<std::string, int> delta;
  tally_polarity(f, Side::Cod, delta);
  for (const auto& [_, d] : delta)
    if (d != 0) return false;
  return true;
}

// Tensor nodes surviving negation elimination when the formula is read at
// the given polarity. Negation flips, tensor keeps polarity for both
// children and counts itself only when read positively.
inline std::size_t tensor_nodes(const Formula& f, Polarity pol) {
  switch (f.kind()) {
    case Formula::Kind::Var: return 0;
    case Formula::Kind::Neg: return tensor_nodes(f.child(), flip(pol));
    case Formula::Kind::Tensor:
      return (pol == Polarity::Pos ? 1 : 0) + tensor_nodes(f.left(), pol) +
             tensor_nodes(f.right(), pol);
  }
  return 0;
}

// Sound structural prefilter on top of the polarity balance. A switching of
// a correct net is a tree, so with L leaves the sequent graph must carry
// exactly L - 2 tree edges beside the L/2 axiom links; counting edges per
// node kind forces the tensor-node total to equal L/2 - 1. False means the
// quantified set is certainly empty; true promises nothing.
inline bool matchable_hom(const Formula& dom, const Formula& cod) {
  std::size_t leaves = dom.leaf_count() + cod.leaf_count();
  if (leaves % 2 != 0) return false;
  if (tensor_nodes(dom, Polarity::Neg) + tensor_nodes(cod, Polarity::Pos) !=
      leaves / 2 - 1)
    return false;
  return balanced_hom(dom, cod);
}

inline bool matchable_j(const Formula& f) {
  std::size_t leaves = f.leaf_count();
  if (leaves % 2 != 0) return false;
  if (tensor_nodes(f, Polarity::Pos) != leaves / 2 - 1) return false;
  return balanced_j(f);
}

// ── Comparison helpers ──────────────────────────────────────────────────────

inline bool note(CheckOutcome& out, const ProofNet& lhs, const ProofNet& rhs) {
  out.vacuous = false;
  if (lhs == rhs) return true;
  out.holds = false;
  if (!out.witness) out.witness = Witness{lhs, rhs};
  return false;
}

inline bool note(CheckOutcome& out, const JElement& lhs, const JElement& rhs) {
  out.vacuous = false;
  if (lhs == rhs) return true;
  out.holds = false;
  if (!out.witness) out.witness = Witness{lhs, rhs};
  return false;
}

// Comparison that does not involve a quantified object, so it never clears
// vacuity on its own.
inline bool note_aux(CheckOutcome& out, const ProofNet& lhs,
                     const ProofNet& rhs) {
  if (lhs == rhs) return true;
  out.holds = false;
  if (!out.witness) out.witness = Witness{lhs, rhs};
  return false;
}

inline void sort_by_links(std::vector<ProofNet>& nets) {
  std::sort(nets.begin(), nets.end(),
            [](const ProofNet& a, const ProofNet& b) { return a.links < b.links; });
}

// Equality of two net sets (same dom/cod assumed); on mismatch records the
// first discrepancy it can exhibit.
inline bool note_same_set(CheckOutcome& out, std::vector<ProofNet> lhs,
                          std::vector<ProofNet> rhs) {
  out.vacuous = false;
  sort_by_links(lhs);
  sort_by_links(rhs);
  if (lhs == rhs) return true;
  out.holds = false;
  if (!out.witness) {
    for (std::size_t i = 0; i < lhs.size() && i < rhs.size(); ++i)
      if (!(lhs[i] == rhs[i])) {
        out.witness = Witness{lhs[i], rhs[i]};
        return false;
      }
  }
  return false;
}

// ── Injectable constructors ─────────────────────────────────────────────────

inline ProofNet suite_symmetry(const CheckOptions& o, const Formula& a,
                               const Formula& b) {
  if (o.wrong_symmetry && a == b)
    return relabel_bijection(Formula::tensor(a, b), Formula::tensor(b, a),
                             {{"L", "L"}, {"R", "R"}});
  return symmetry(a, b);
}

inline ProofNet suite_internal_curry(const CheckOptions& o, const Formula& a,
                                     const Formula& b, const Formula& c) {
  if (o.wrong_internal_curry && a == b)
    return relabel_bijection(
        lolli(Formula::tensor(a, b), c), lolli(a, lolli(b, c)),
        {{"NLL", "NRNNL"}, {"NLR", "NL"}, {"NRN", "NRNNRN"}});
  return internal_curry(a, b, c);
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Deterministic sample of up to k nets, keyed by the instance.
inline std::vector<ProofNet> sample_nets(std::vector<ProofNet> nets,
                                         std::size_t k, std::uint64_t seed,
                                         const std::string& key) {
  if (nets.size() <= k) return nets;
  std::mt19937_64 rng(seed ^ fnv1a(key));
  std::vector<std::size_t> idx(nets.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  for (std::size_t i = 0; i < k; ++i)
    std::swap(idx[i], idx[i + rng() % (idx.size() - i)]);
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  std::vector<ProofNet> out;
  out.reserve(k);
  for (std::size_t i : idx) out.push_back(std::move(nets[i]));
  return out;
}

}  // namespace detail

// ── Diagram checks ──────────────────────────────────────────────────────────

inline CheckOutcome check_pentagon(std::span<const Formula> s,
                                   const CheckOptions&) {
  const Formula &a = s[0], &b = s[1], &c = s[2], &d = s[3];
  CheckOutcome out;
  ProofNet lhs = compose(associator(Formula::tensor(a, b), c, d),
                         associator(a, b, Formula::tensor(c, d)));
  ProofNet rhs =
      compose(compose(tensor_mor(associator(a, b, c), identity(d)),
                      associator(a, Formula::tensor(b, c), d)),
              tensor_mor(identity(a), associator(b, c, d)));
  detail::note(out, lhs, rhs);
  return out;
}

inline CheckOutcome check_hexagon(std::span<const Formula> s,
                                  const CheckOptions& o) {
  const Formula &a = s[0], &b = s[1], &c = s[2];
  CheckOutcome out;
  ProofNet lhs = compose(
      compose(associator(a, b, c),
              detail::suite_symmetry(o, a, Formula::tensor(b, c))),
      associator(b, c, a));
  ProofNet rhs = compose(
      compose(tensor_mor(detail::suite_symmetry(o, a, b), identity(c)),
              associator(b, a, c)),
      tensor_mor(identity(b), detail::suite_symmetry(o, a, c)));
  detail::note(out, lhs, rhs);
  return out;
}

inline CheckOutcome check_symmetry_involution(std::span<const Formula> s,
                                              const CheckOptions& o) {
  const Formula &a = s[0], &b = s[1];
  CheckOutcome out;
  detail::note(out,
               compose(detail::suite_symmetry(o, a, b),
                       detail::suite_symmetry(o, b, a)),
               identity(Formula::tensor(a, b)));
  return out;
}

inline CheckOutcome check_hom_pentagon(std::span<const Formula> s,
                                       const CheckOptions& o) {
  const Formula &a = s[0], &b = s[1], &c = s[2], &d = s[3];
  CheckOutcome out;
  ProofNet lhs = compose(
      compose(lolli_mor(associator(a, b, c), identity(d)),
              detail::suite_internal_curry(o, Formula::tensor(a, b), c, d)),
      detail::suite_internal_curry(o, a, b, lolli(c, d)));
  ProofNet rhs =
      compose(detail::suite_internal_curry(o, a, Formula::tensor(b, c), d),
              lolli_mor(identity(a), detail::suite_internal_curry(o, b, c, d)));
  detail::note(out, lhs, rhs);
  return out;
}

inline CheckOutcome check_curry_square(std::span<const Formula> s,
                                       const CheckOptions& o) {
  const Formula &a = s[0], &x = s[1], &y = s[2], &z = s[3];
  CheckOutcome out;
  Formula target = lolli(Formula::tensor(x, y), z);
  for (const ProofNet& f : enumerate_hom(a, target, o.leaf_bound)) {
    ProofNet lhs = compose(f, detail::suite_internal_curry(o, x, y, z));
    ProofNet rhs = curry(curry(compose(associator(a, x, y), uncurry(f))));
    if (!detail::note(out, lhs, rhs)) return out;
  }
  return out;
}

inline CheckOutcome check_element_curry_square(std::span<const Formula> s,
                                               const CheckOptions& o) {
  const Formula &a = s[0], &b = s[1], &c = s[2];
  CheckOutcome out;
  Formula source = lolli(Formula::tensor(a, b), c);
  ProofNet psi = detail::suite_internal_curry(o, a, b, c);
  for (const JElement& x : enumerate_j(source, o.leaf_bound)) {
    ProofNet lhs = curry(net_of_element(x));
    ProofNet rhs = net_of_element(map_element(psi, x));
    if (!detail::note(out, lhs, rhs)) return out;
  }
  return out;
}

inline CheckOutcome check_element_assoc(std::span<const Formula> s,
                                        const CheckOptions& o) {
  const Formula &fa = s[0], &fb = s[1], &fc = s[2];
  CheckOutcome out;
  auto as = enumerate_j(fa, o.leaf_bound);
  if (as.empty()) return out;
  auto bs = enumerate_j(fb, o.leaf_bound);
  if (bs.empty()) return out;
  auto cs = enumerate_j(fc, o.leaf_bound);
  if (cs.empty()) return out;
  ProofNet alpha = associator(fa, fb, fc);
  for (const auto& a : as)
    for (const auto& b : bs)
      for (const auto& c : cs) {
        JElement lhs =
            map_element(alpha, tensor_elements(tensor_elements(a, b), c));
        JElement rhs = tensor_elements(a, tensor_elements(b, c));
        if (!detail::note(out, lhs, rhs)) return out;
      }
  return out;
}

// For a in J(A): the family X -> A*X is natural (sampled endomorphisms of X)
// and applying it to an element of X tensors the two elements.
inline CheckOutcome check_linear_element(std::span<const Formula> s,
                                         const CheckOptions& o) {
  const Formula &fa = s[0], &x = s[1];
  CheckOutcome out;
  auto as = enumerate_j(fa, o.leaf_bound);
  if (as.empty()) return out;
  auto hs = detail::sample_nets(enumerate_hom(x, x, o.leaf_bound),
                                o.lin_samples, o.seed,
                                print(fa) + "|" + print(x));
  auto bs = enumerate_j(x, o.leaf_bound);
  ProofNet id_a = identity(fa);
  for (const auto& a : as) {
    ProofNet lin = linear_component(a, x);
    for (const auto& h : hs) {
      ProofNet lhs = compose(h, lin);
      ProofNet rhs = compose(lin, tensor_mor(id_a, h));
      if (!detail::note(out, lhs, rhs)) return out;
    }
    for (const auto& b : bs) {
      JElement lhs = map_element(lin, b);
      JElement rhs = tensor_elements(a, b);
      if (!detail::note(out, lhs, rhs)) return out;
    }
  }
  return out;
}

// Elements of A -o B and nets A -> B are the same data: the two realizations
// agree pointwise, convert back and forth losslessly, and cover the whole
// hom-set.
inline CheckOutcome check_element_net_bijection(std::span<const Formula> s,
                                                const CheckOptions& o) {
  const Formula &a = s[0], &b = s[1];
  CheckOutcome out;
  auto xs = enumerate_j(lolli(a, b), o.leaf_bound);
  auto fs = enumerate_hom(a, b, o.leaf_bound);
  if (xs.empty() && fs.empty()) return out;
  std::vector<ProofNet> image;
  image.reserve(xs.size());
  for (const auto& x : xs) {
    ProofNet direct = net_of_element(x);
    if (!detail::note(out, net_of_element_via_eval(x), direct)) return out;
    if (!detail::note(out, element_of_net(direct), x)) return out;
    image.push_back(std::move(direct));
  }
  for (const auto& f : fs)
    if (!detail::note(out, net_of_element(element_of_net(f)), f)) return out;
  detail::note_same_set(out, std::move(image), fs);
  return out;
}

// The dual package: transposition is involutive and natural, dualizing nets
// is an empirical bijection of hom-sets, double dualization is a natural
// isomorphism, and the currying of f factors through transposition.
inline CheckOutcome check_duality(std::span<const Formula> s,
                                  const CheckOptions& o) {
  const Formula &a = s[0], &b = s[1], &c = s[2];
  CheckOutcome out;
  Formula ab = Formula::tensor(a, b);

  if (!detail::note_aux(out, compose(double_dual(a), double_dual_inv(a)),
                        identity(a)))
    return out;
  if (!detail::note_aux(out, compose(double_dual_inv(a), double_dual(a)),
                        identity(dual(dual(a)))))
    return out;

  for (const ProofNet& f : enumerate_hom(ab, dual(c), o.leaf_bound))
    if (!detail::note(out, transpose(transpose(f)), f)) return out;

  auto gs = enumerate_hom(ab, c, o.leaf_bound);
  auto hs = enumerate_hom(b, a, o.leaf_bound);
  for (const ProofNet& g : gs) {
    ProofNet chain = compose(
        double_dual(a),
        dual_of(transpose(
            compose(symmetry(b, a), compose(g, double_dual(c))))));
    if (!detail::note(out, chain, curry(g))) return out;
    ProofNet tg = transpose(compose(g, double_dual(c)));
    for (const ProofNet& h : hs) {
      ProofNet lhs = transpose(
          compose(tensor_mor(h, identity(b)), compose(g, double_dual(c))));
      ProofNet rhs = compose(tensor_mor(h, identity(dual(c))), tg);
      if (!detail::note(out, lhs, rhs)) return out;
    }
  }

  auto fs = enumerate_hom(a, b, o.leaf_bound);
  std::vector<ProofNet> duals;
  duals.reserve(fs.size());
  for (const ProofNet& f : fs) {
    if (!detail::note(out, compose(f, double_dual(b)),
                      compose(double_dual(a), dual_of(dual_of(f)))))
      return out;
    duals.push_back(dual_of(f));
  }
  auto target = enumerate_hom(dual(b), dual(a), o.leaf_bound);
  if (!duals.empty() || !target.empty())
    detail::note_same_set(out, std::move(duals), std::move(target));
  return out;
}

inline CheckOutcome check_nat_assoc(std::span<const Formula> s,
                                    const CheckOptions& o) {
  const Formula &a = s[0], &b = s[1], &c = s[2], &d = s[3];
  CheckOutcome out;
  ProofNet id_c = identity(c), id_d = identity(d);
  ProofNet alpha_a = associator(a, c, d), alpha_b = associator(b, c, d);
  ProofNet id_cd = identity(Formula::tensor(c, d));
  for (const ProofNet& f : enumerate_hom(a, b, o.leaf_bound)) {
    ProofNet lhs = compose(tensor_mor(tensor_mor(f, id_c), id_d), alpha_b);
    ProofNet rhs = compose(alpha_a, tensor_mor(f, id_cd));
    if (!detail::note(out, lhs, rhs)) return out;
  }
  return out;
}

inline CheckOutcome check_nat_symmetry(std::span<const Formula> s,
                                       const CheckOptions& o) {
  const Formula &a = s[0], &b = s[1], &c = s[2];
  CheckOutcome out;
  ProofNet id_c = identity(c);
  ProofNet sig_a = detail::suite_symmetry(o, a, c);
  ProofNet sig_b = detail::suite_symmetry(o, b, c);
  for (const ProofNet& f : enumerate_hom(a, b, o.leaf_bound)) {
    ProofNet lhs = compose(tensor_mor(f, id_c), sig_b);
    ProofNet rhs = compose(sig_a, tensor_mor(id_c, f));
    if (!detail::note(out, lhs, rhs)) return out;
  }
  return out;
}

inline CheckOutcome check_nat_hom_curry(std::span<const Formula> s,
                                        const CheckOptions& o) {
  const Formula &a = s[0], &b = s[1], &c = s[2], &d = s[3];
  CheckOutcome out;
  Formula ab = Formula::tensor(a, b);
  ProofNet id_ab = identity(ab), id_a = identity(a), id_b = identity(b);
  ProofNet psi_c = detail::suite_internal_curry(o, a, b, c);
  ProofNet psi_d = detail::suite_internal_curry(o, a, b, d);
  for (const ProofNet& f : enumerate_hom(c, d, o.leaf_bound)) {
    ProofNet lhs = compose(lolli_mor(id_ab, f), psi_d);
    ProofNet rhs = compose(psi_c, lolli_mor(id_a, lolli_mor(id_b, f)));
    if (!detail::note(out, lhs, rhs)) return out;
  }
  return out;
}

inline CheckOutcome check_nat_element_net(std::span<const Formula> s,
                                          const CheckOptions& o) {
  const Formula &a = s[0], &b = s[1], &c = s[2];
  CheckOutcome out;
  auto xs = enumerate_j(lolli(a, b), o.leaf_bound);
  if (xs.empty()) return out;
  auto gs = enumerate_hom(b, c, o.leaf_bound);
  if (gs.empty()) return out;
  ProofNet id_a = identity(a);
  for (const ProofNet& g : gs) {
    ProofNet push = lolli_mor(id_a, g);
    for (const JElement& x : xs) {
      ProofNet lhs = net_of_element(map_element(push, x));
      ProofNet rhs = compose(net_of_element(x), g);
      if (!detail::note(out, lhs, rhs)) return out;
    }
  }
  return out;
}

// ── Registry ────────────────────────────────────────────────────────────────

struct DiagramDef {
  const char* id;
  std::size_t slots;
  std::vector<std::size_t> min_slot_leaves;  // empty: one leaf per slot
  bool (*possibly_nonvacuous)(std::span<const Formula>);
  CheckOutcome (*check)(std::span<const Formula>, const CheckOptions&);
};

inline const std::vector<DiagramDef>& diagram_registry() {
  static const std::vector<DiagramDef> defs = {
      {"pentagon", 4, {},
       [](std::span<const Formula>) { return true; }, &check_pentagon},
      {"hexagon", 3, {},
       [](std::span<const Formula>) { return true; }, &check_hexagon},
      {"symmetry_involution", 2, {},
       [](std::span<const Formula>) { return true; },
       &check_symmetry_involution},
      {"hom_pentagon", 4, {},
       [](std::span<const Formula>) { return true; }, &check_hom_pentagon},
      {"curry_square", 4, {},
       [](std::span<const Formula> s) {
         return detail::matchable_hom(
             s[0], lolli(Formula::tensor(s[1], s[2]), s[3]));
       },
       &check_curry_square},
      {"element_curry_square", 3, {},
       [](std::span<const Formula> s) {
         return detail::matchable_j(lolli(Formula::tensor(s[0], s[1]), s[2]));
       },
       &check_element_curry_square},
      {"element_assoc", 3, {2, 2, 2},
       [](std::span<const Formula> s) {
         return detail::matchable_j(s[0]) && detail::matchable_j(s[1]) &&
                detail::matchable_j(s[2]);
       },
       &check_element_assoc},
      {"linear_element", 2, {2, 1},
       [](std::span<const Formula> s) { return detail::matchable_j(s[0]); },
       &check_linear_element},
      {"element_net_bijection", 2, {},
       [](std::span<const Formula> s) {
         return detail::matchable_hom(s[0], s[1]);
       },
       &check_element_net_bijection},
      {"duality", 3, {},
       [](std::span<const Formula> s) {
         Formula ab = Formula::tensor(s[0], s[1]);
         return detail::matchable_hom(ab, dual(s[2])) ||
                detail::matchable_hom(ab, s[2]) ||
                detail::matchable_hom(s[0], s[1]) ||
                detail::matchable_hom(s[1], s[0]);
       },
       &check_duality},
      {"nat_assoc", 4, {},
       [](std::span<const Formula> s) {
         return detail::matchable_hom(s[0], s[1]);
       },
       &check_nat_assoc},
      {"nat_symmetry", 3, {},
       [](std::span<const Formula> s) {
         return detail::matchable_hom(s[0], s[1]);
       },
       &check_nat_symmetry},
      {"nat_hom_curry", 4, {},
       [](std::span<const Formula> s) {
         return detail::matchable_hom(s[2], s[3]);
       },
       &check_nat_hom_curry},
      {"nat_element_net", 3, {},
       [](std::span<const Formula> s) {
         return detail::matchable_j(lolli(s[0], s[1])) &&
                detail::matchable_hom(s[1], s[2]);
       },
       &check_nat_element_net},
  };
  return defs;
}

inline std::vector<std::string> diagram_ids() {
  std::vector<std::string> ids;
  for (const auto& d : diagram_registry()) ids.emplace_back(d.id);
  return ids;
}

// ── Tuple enumeration and the suite driver ──────────────────────────────────

namespace detail {

// Slot-size compositions of `total`, each part within its [min, max] range,
// ordered by smallest maximum part first, then lexicographically. Balanced
// splits come first, which keeps early strata small.
inline std::vector<std::vector<std::size_t>> slot_compositions(
    std::size_t total, const std::vector<std::size_t>& mins,
    std::size_t max_part) {
  const std::size_t n = mins.size();
  std::vector<std::size_t> suffix_min(n + 1, 0);
  for (std::size_t i = n; i-- > 0;)
    suffix_min[i] = suffix_min[i + 1] + mins[i];
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t slot, std::size_t rest) -> void {
    if (slot + 1 == n) {
      if (rest >= mins[slot] && rest <= max_part) {
        cur.push_back(rest);
        out.push_back(cur);
        cur.pop_back();
      }
      return;
    }
    std::size_t hi = std::min(max_part, rest - suffix_min[slot + 1]);
    for (std::size_t k = mins[slot]; k <= hi; ++k) {
      cur.push_back(k);
      self(self, slot + 1, rest - k);
      cur.pop_back();
    }
  };
  if (total >= suffix_min[0]) rec(rec, 0, total);
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& x, const auto& y) {
                     return *std::max_element(x.begin(), x.end()) <
                            *std::max_element(y.begin(), y.end());
                   });
  return out;
}

}  // namespace detail

inline SuiteResult run_suite(const SuiteConfig& cfg) {
  for (const auto& want : cfg.diagrams) {
    bool known = false;
    for (const auto& def : diagram_registry())
      if (want == def.id) known = true;
    if (!known) throw std::invalid_argument("unknown diagram: " + want);
  }

  SuiteResult res;
  FormulaGrid grid(cfg.vars, cfg.neg_depth);
  CheckOptions opt{cfg.leaf_bound, cfg.lin_samples, cfg.seed,
                   cfg.wrong_symmetry, cfg.wrong_internal_curry};

  for (const auto& def : diagram_registry()) {
    if (!cfg.diagrams.empty() &&
        std::find(cfg.diagrams.begin(), cfg.diagrams.end(), def.id) ==
            cfg.diagrams.end())
      continue;

    DiagramTally tally;
    std::vector<std::size_t> mins = def.min_slot_leaves;
    mins.resize(def.slots, 1);
    std::size_t t0 = 0;
    for (std::size_t m : mins) t0 += m;
    std::size_t cap = std::min(cfg.total_leaf_cap, def.slots * cfg.max_leaves);

    bool done = false;
    std::vector<Formula> tuple;
    for (std::size_t total = t0; total <= cap && !done; ++total) {
      for (const auto& comp :
           detail::slot_compositions(total, mins, cfg.max_leaves)) {
        if (done) break;
        std::vector<const std::vector<Formula>*> strata;
        strata.reserve(def.slots);
        bool empty_stratum = false;
        for (std::size_t k : comp) {
          const auto& st = grid.stratum(k);
          if (st.empty()) empty_stratum = true;
          strata.push_back(&st);
        }
        if (empty_stratum) continue;

        std::vector<std::size_t> idx(def.slots, 0);
        while (!done) {
          if (tally.scanned >= cfg.max_scanned) {
            done = true;
            break;
          }
          ++tally.scanned;
          tuple.clear();
          for (std::size_t i = 0; i < def.slots; ++i)
            tuple.push_back((*strata[i])[idx[i]]);

          if (!def.possibly_nonvacuous(tuple)) {
            ++tally.vacuous_skipped;
          } else {
            ++tally.processed;
            DiagramReport rep;
            rep.diagram = def.id;
            rep.instance = tuple;
            try {
              CheckOutcome out = def.check(tuple, opt);
              rep.vacuous = out.vacuous;
              if (out.vacuous)
                ++tally.vacuous;
              else
                ++tally.nonvacuous;
              if (out.holds) {
                rep.status = DiagramStatus::Holds;
                ++tally.holds;
              } else {
                rep.status = DiagramStatus::Fails;
                rep.witness = std::move(out.witness);
                ++tally.fails;
                res.all_hold = false;
              }
            } catch (const Error& e) {
              rep.status = DiagramStatus::Error;
              rep.error = e.what();
              ++tally.errors;
              res.any_error = true;
            }
            res.reports.push_back(std::move(rep));
            if (tally.processed >= cfg.max_processed ||
                tally.nonvacuous >= cfg.target_nonvacuous)
              done = true;
          }

          bool wrapped = true;
          for (std::size_t slot = def.slots; slot-- > 0;) {
            if (++idx[slot] < strata[slot]->size()) {
              wrapped = false;
              break;
            }
            idx[slot] = 0;
          }
          if (wrapped) break;
        }
      }
    }
    res.tallies[def.id] = tally;
  }

  if (auto it = res.tallies.find("element_net_bijection");
      it != res.tallies.end())
    res.element_net_bijection_empirical = it->second.nonvacuous > 0 &&
                                          it->second.fails == 0 &&
                                          it->second.errors == 0;
  return res;
}

}  // namespace mll

#endif  // MLL_COHERENCE_HPP
