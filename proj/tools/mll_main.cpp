// ============================================================================
// mll: command line front end.
//
//   parse      check a formula and echo its canonical form
//   check      verify a net or element (JSON) by exhaustive switching
//   compose    cut two nets together
//   hom        enumerate all nets between two formulas
//   j          enumerate all elements of a formula
//   canon      build a canonical net or element by name
//   coherence  run the coherence diagram suite over the formula grid
//   dot        render a net or element as Graphviz
//
// Exit codes: 0 success, 1 a requested check failed (incorrect net, failing
// diagram), 2 usage or input errors.
// ============================================================================

#include <cstdlib>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mll/canonical.hpp"
#include "mll/coherence.hpp"
#include "mll/compose.hpp"
#include "mll/dot.hpp"
#include "mll/formula.hpp"
#include "mll/net.hpp"
#include "mll/serialize.hpp"

namespace {

using mll::json;

std::string slurp(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw mll::SyntaxError(std::string("invalid JSON: ") + e.what(), 0);
  }
}

json switching_json(const mll::Switching& sw) {
  json arr = json::array();
  for (const auto& c : sw.choices)
    arr.push_back(json{{"keep_left", c.keep_left},
                       {"side", mll::to_string(c.side)},
                       {"tensor_addr", c.tensor_addr}});
  return json{{"choices", arr}};
}

json witness_json(const mll::Witness& w) {
  auto one = [](const mll::WitnessSide& s) {
    return std::visit([](const auto& v) { return mll::to_json(v); }, s);
  };
  return json{{"lhs", one(w.first)}, {"rhs", one(w.second)}};
}

std::size_t env_or(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (!raw) return fallback;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(raw, raw + std::string_view(raw).size(), value);
  if (ec != std::errc() || *ptr != '\0') return fallback;
  return value;
}

// ── Subcommand runners ──────────────────────────────────────────────────────

int run_parse(const std::string& text, bool as_json) {
  mll::Formula f = mll::read_formula(text);
  if (as_json)
    std::cout << mll::to_json(f).dump() << "\n";
  else
    std::cout << mll::print(f) << "\n";
  return 0;
}

int run_check(const std::string& input, bool as_json) {
  json j = parse_json_text(slurp(input));
  bool is_net = j.is_object() && j.contains("dom");
  try {
    mll::DrResult dr = is_net ? mll::dr_correct(mll::net_from_json(j))
                              : mll::dr_correct(mll::element_from_json(j));
    if (as_json)
      std::cout << json{{"correct", true},
                        {"switchings_examined", dr.switchings_examined}}
                       .dump()
                << "\n";
    else
      std::cout << "correct: examined " << dr.switchings_examined
                << " switchings\n";
    return 0;
  } catch (const mll::NotCorrect& e) {
    const mll::DrResult& r = e.result();
    if (as_json) {
      json out{{"correct", false},
               {"failure", mll::to_string(*r.failure)},
               {"switchings_examined", r.switchings_examined}};
      if (r.witness) out["witness"] = switching_json(*r.witness);
      std::cout << out.dump() << "\n";
    } else {
      std::cout << "incorrect (" << mll::to_string(*r.failure) << ") after "
                << r.switchings_examined << " switchings\n";
      if (r.witness)
        for (const auto& c : r.witness->choices)
          std::cout << "  switch " << mll::to_string(c.side) << ":"
                    << (c.tensor_addr.empty() ? "(root)" : c.tensor_addr)
                    << " kept " << (c.keep_left ? "left" : "right") << "\n";
    }
    return 1;
  } catch (const mll::Error& e) {
    if (as_json)
      std::cout << json{{"correct", false},
                        {"detail", e.what()},
                        {"error", e.code()}}
                       .dump()
                << "\n";
    else
      std::cout << "invalid: " << e.what() << "\n";
    return 1;
  }
}

int run_compose(const std::string& first, const std::string& second) {
  mll::ProofNet f = mll::net_from_json_text(slurp(first));
  mll::ProofNet g = mll::net_from_json_text(slurp(second));
  std::cout << mll::to_json(mll::compose(f, g)).dump() << "\n";
  return 0;
}

int run_hom(const std::string& dom_text, const std::string& cod_text,
            std::size_t bound, bool count_only, bool as_json) {
  mll::Formula dom = mll::read_formula(dom_text);
  mll::Formula cod = mll::read_formula(cod_text);
  auto nets = mll::enumerate_hom(dom, cod, bound);
  if (count_only) {
    std::cout << nets.size() << "\n";
  } else if (as_json) {
    json arr = json::array();
    for (const auto& n : nets) arr.push_back(mll::to_json(n));
    std::cout << json{{"count", nets.size()}, {"nets", arr}}.dump() << "\n";
  } else {
    for (const auto& n : nets) std::cout << mll::to_json(n).dump() << "\n";
  }
  return 0;
}

int run_j(const std::string& text, std::size_t bound, bool count_only,
          bool as_json) {
  mll::Formula f = mll::read_formula(text);
  auto els = mll::enumerate_j(f, bound);
  if (count_only) {
    std::cout << els.size() << "\n";
  } else if (as_json) {
    json arr = json::array();
    for (const auto& x : els) arr.push_back(mll::to_json(x));
    std::cout << json{{"count", els.size()}, {"elements", arr}}.dump() << "\n";
  } else {
    for (const auto& x : els) std::cout << mll::to_json(x).dump() << "\n";
  }
  return 0;
}

int run_canon(const std::string& name, const std::vector<std::string>& args,
              const std::string& in, const std::string& in2) {
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw std::runtime_error("canon " + name + " expects " +
                               std::to_string(n) + " formula argument(s)");
  };
  auto formula = [&](std::size_t i) { return mll::read_formula(args[i]); };
  auto net_in = [&](const std::string& path, const char* flag) {
    if (path.empty())
      throw std::runtime_error("canon " + name + " needs a net via " + flag);
    return mll::net_from_json_text(slurp(path));
  };
  auto elem_in = [&](const std::string& path, const char* flag) {
    if (path.empty())
      throw std::runtime_error("canon " + name + " needs an element via " +
                               flag);
    return mll::element_from_json_text(slurp(path));
  };

  json out;
  if (name == "identity") {
    need(1);
    out = mll::to_json(mll::identity(formula(0)));
  } else if (name == "alpha") {
    need(3);
    out = mll::to_json(mll::associator(formula(0), formula(1), formula(2)));
  } else if (name == "alpha_inv") {
    need(3);
    out = mll::to_json(mll::associator_inv(formula(0), formula(1), formula(2)));
  } else if (name == "sigma") {
    need(2);
    out = mll::to_json(mll::symmetry(formula(0), formula(1)));
  } else if (name == "eval") {
    need(2);
    out = mll::to_json(mll::evaluation(formula(0), formula(1)));
  } else if (name == "psi") {
    need(3);
    out = mll::to_json(mll::internal_curry(formula(0), formula(1), formula(2)));
  } else if (name == "psi_inv") {
    need(3);
    out =
        mll::to_json(mll::internal_uncurry(formula(0), formula(1), formula(2)));
  } else if (name == "iota") {
    need(1);
    out = mll::to_json(mll::double_dual(formula(0)));
  } else if (name == "iota_inv") {
    need(1);
    out = mll::to_json(mll::double_dual_inv(formula(0)));
  } else if (name == "curry") {
    need(0);
    out = mll::to_json(mll::curry(net_in(in, "--in")));
  } else if (name == "uncurry") {
    need(0);
    out = mll::to_json(mll::uncurry(net_in(in, "--in")));
  } else if (name == "dual_of") {
    need(0);
    out = mll::to_json(mll::dual_of(net_in(in, "--in")));
  } else if (name == "transpose") {
    need(0);
    out = mll::to_json(mll::transpose(net_in(in, "--in")));
  } else if (name == "e") {
    need(0);
    out = mll::to_json(mll::net_of_element(elem_in(in, "--in")));
  } else if (name == "e_inv") {
    need(0);
    out = mll::to_json(mll::element_of_net(net_in(in, "--in")));
  } else if (name == "l") {
    need(0);
    out = mll::to_json(mll::net_of_element_via_eval(elem_in(in, "--in")));
  } else if (name == "m") {
    need(0);
    out = mll::to_json(
        mll::tensor_elements(elem_in(in, "--in"), elem_in(in2, "--in2")));
  } else if (name == "lin_of") {
    need(1);
    out = mll::to_json(mll::linear_component(elem_in(in, "--in"), formula(0)));
  } else {
    throw std::runtime_error(
        "unknown constructor: " + name +
        " (try identity, alpha, alpha_inv, sigma, eval, psi, psi_inv, iota, "
        "iota_inv, curry, uncurry, dual_of, transpose, e, e_inv, l, m, "
        "lin_of)");
  }
  std::cout << out.dump() << "\n";
  return 0;
}

int run_coherence(const mll::SuiteConfig& cfg, bool as_json) {
  mll::SuiteResult res = mll::run_suite(cfg);
  if (as_json) {
    for (const auto& rep : res.reports) {
      json inst = json::array();
      for (const auto& f : rep.instance) inst.push_back(mll::print(f));
      json line{{"diagram", rep.diagram},
                {"instance", inst},
                {"status", mll::to_string(rep.status)},
                {"vacuous", rep.vacuous}};
      if (rep.witness) line["witness"] = witness_json(*rep.witness);
      if (!rep.error.empty()) line["error"] = rep.error;
      std::cout << line.dump() << "\n";
    }
    json tallies;
    for (const auto& [id, t] : res.tallies)
      tallies[id] = json{{"scanned", t.scanned},
                         {"vacuous_skipped", t.vacuous_skipped},
                         {"processed", t.processed},
                         {"vacuous", t.vacuous},
                         {"nonvacuous", t.nonvacuous},
                         {"holds", t.holds},
                         {"fails", t.fails},
                         {"errors", t.errors}};
    std::cout << json{{"summary",
                       json{{"all_hold", res.all_hold},
                            {"any_error", res.any_error},
                            {"element_net_bijection_empirical",
                             res.element_net_bijection_empirical},
                            {"tallies", tallies}}}}
                     .dump()
              << "\n";
  } else {
    for (const auto& def : mll::diagram_registry()) {
      auto it = res.tallies.find(def.id);
      if (it == res.tallies.end()) continue;
      const auto& t = it->second;
      std::cout << def.id << ": " << t.holds << " hold, " << t.fails
                << " fail, " << t.errors << " error ("
                << t.nonvacuous << " nonvacuous, " << t.vacuous
                << " vacuous, " << t.vacuous_skipped << " skipped, "
                << t.scanned << " scanned)\n";
    }
    for (const auto& rep : res.reports) {
      if (rep.status == mll::DiagramStatus::Holds) continue;
      std::cout << (rep.status == mll::DiagramStatus::Fails ? "FAIL " : "ERROR ")
                << rep.diagram << " [";
      for (std::size_t i = 0; i < rep.instance.size(); ++i)
        std::cout << (i ? ", " : "") << mll::print(rep.instance[i]);
      std::cout << "]";
      if (!rep.error.empty()) std::cout << " " << rep.error;
      std::cout << "\n";
    }
    std::cout << (res.all_hold && !res.any_error
                      ? "all checked diagrams hold"
                      : "coherence check FAILED")
              << "\n";
  }
  return res.all_hold && !res.any_error ? 0 : 1;
}

int run_dot(const std::string& input) {
  json j = parse_json_text(slurp(input));
  if (j.is_object() && j.contains("dom"))
    std::cout << mll::to_dot(mll::net_from_json(j));
  else
    std::cout << mll::to_dot(mll::element_from_json(j));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unit-free proof net toolbox"};
  app.require_subcommand(1);
  bool as_json = false;

  auto* sub_parse = app.add_subcommand("parse", "parse a formula");
  std::string parse_text;
  sub_parse->add_option("formula", parse_text,
                        "formula text or JSON (\"-\" reads stdin)")
      ->required();
  sub_parse->add_flag("--json", as_json, "emit JSON");

  auto* sub_check = app.add_subcommand("check", "verify a net or element");
  std::string check_input = "-";
  sub_check->add_option("input", check_input, "JSON file, or - for stdin");
  sub_check->add_flag("--json", as_json, "emit JSON");

  auto* sub_compose = app.add_subcommand("compose", "cut two nets together");
  std::string compose_first, compose_second;
  sub_compose->add_option("first", compose_first, "net JSON file or -")
      ->required();
  sub_compose->add_option("second", compose_second, "net JSON file or -")
      ->required();

  std::size_t interactive_bound = env_or("MLL_MAX_LEAVES", 8);

  auto* sub_hom = app.add_subcommand("hom", "enumerate nets dom -> cod");
  std::string hom_dom, hom_cod;
  bool hom_count = false;
  sub_hom->add_option("dom", hom_dom, "domain formula")->required();
  sub_hom->add_option("cod", hom_cod, "codomain formula")->required();
  sub_hom->add_option("--max-leaves", interactive_bound,
                      "refuse larger sequents");
  sub_hom->add_flag("--count", hom_count, "print only the count");
  sub_hom->add_flag("--json", as_json, "one JSON object instead of lines");

  auto* sub_j = app.add_subcommand("j", "enumerate elements of a formula");
  std::string j_formula;
  bool j_count = false;
  sub_j->add_option("formula", j_formula, "formula")->required();
  sub_j->add_option("--max-leaves", interactive_bound,
                    "refuse larger formulas");
  sub_j->add_flag("--count", j_count, "print only the count");
  sub_j->add_flag("--json", as_json, "one JSON object instead of lines");

  auto* sub_canon = app.add_subcommand("canon", "build a canonical net");
  std::string canon_name, canon_in, canon_in2;
  std::vector<std::string> canon_args;
  sub_canon->add_option("name", canon_name, "constructor name")->required();
  sub_canon->add_option("formulas", canon_args, "formula arguments");
  sub_canon->add_option("--in", canon_in, "net or element JSON file, or -");
  sub_canon->add_option("--in2", canon_in2, "second element JSON file, or -");

  auto* sub_coh = app.add_subcommand("coherence", "run the diagram suite");
  mll::SuiteConfig cfg;
  cfg.max_leaves = env_or("MLL_MAX_LEAVES", cfg.max_leaves);
  bool coh_list = false;
  sub_coh->add_option("--vars", cfg.vars, "grid variables")->delimiter(',');
  sub_coh->add_option("--max-leaves", cfg.max_leaves, "leaves per slot");
  sub_coh->add_option("--neg-depth", cfg.neg_depth, "negation depth cap");
  sub_coh->add_option("--seed", cfg.seed, "sampling seed");
  sub_coh->add_option("--diagrams", cfg.diagrams, "subset of diagram ids")
      ->delimiter(',');
  sub_coh->add_option("--target", cfg.target_nonvacuous,
                      "nonvacuous instances per diagram");
  sub_coh->add_option("--max-processed", cfg.max_processed,
                      "checked instances per diagram");
  sub_coh->add_option("--max-scanned", cfg.max_scanned,
                      "generated tuples per diagram");
  sub_coh->add_option("--lin-samples", cfg.lin_samples,
                      "sampled morphisms per naturality check");
  sub_coh->add_flag("--wrong-sigma", cfg.wrong_symmetry,
                    "inject a broken symmetry (self test)");
  sub_coh->add_flag("--wrong-psi", cfg.wrong_internal_curry,
                    "inject a broken internal currying (self test)");
  sub_coh->add_flag("--json", as_json, "JSONL reports plus summary");
  sub_coh->add_flag("--list", coh_list, "list diagram ids and exit");

  auto* sub_dot = app.add_subcommand("dot", "render as Graphviz");
  std::string dot_input = "-";
  sub_dot->add_option("input", dot_input, "net or element JSON file, or -");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sub_parse->parsed()) {
      if (parse_text == "-") parse_text = slurp("-");
      return run_parse(parse_text, as_json);
    }
    if (sub_check->parsed()) return run_check(check_input, as_json);
    if (sub_compose->parsed()) return run_compose(compose_first, compose_second);
    if (sub_hom->parsed())
      return run_hom(hom_dom, hom_cod, interactive_bound, hom_count, as_json);
    if (sub_j->parsed())
      return run_j(j_formula, interactive_bound, j_count, as_json);
    if (sub_canon->parsed())
      return run_canon(canon_name, canon_args, canon_in, canon_in2);
    if (sub_coh->parsed()) {
      if (coh_list) {
        for (const auto& id : mll::diagram_ids()) std::cout << id << "\n";
        return 0;
      }
      return run_coherence(cfg, as_json);
    }
    if (sub_dot->parsed()) return run_dot(dot_input);
  } catch (const mll::SyntaxError& e) {
    if (as_json)
      std::cerr << json{{"detail", e.what()},
                        {"error", e.code()},
                        {"offset", e.offset()}}
                       .dump()
                << "\n";
    else
      std::cerr << "error: " << e.what() << " (offset " << e.offset() << ")\n";
    return 2;
  } catch (const mll::Error& e) {
    if (as_json)
      std::cerr << json{{"detail", e.what()}, {"error", e.code()}}.dump()
                << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    if (as_json)
      std::cerr << json{{"detail", e.what()}, {"error", "internal"}}.dump()
                << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
