// JSON wire formats for formulas, nets and elements, plus text/JSON input
// helpers shared by the command line tool. Uses nlohmann::json; objects keep
// the library's default alphabetical key order, so output is byte-stable.

#ifndef MLL_SERIALIZE_HPP
#define MLL_SERIALIZE_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "mll/errors.hpp"
#include "mll/formula.hpp"
#include "mll/net.hpp"

namespace mll {

using nlohmann::json;

// ── Formulas ────────────────────────────────────────────────────────────────
//   {"var": "p"} | {"tensor": [F, F]} | {"neg": F}

inline json to_json(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Var:
      return json{{"var", f.var_name()}};
    case Formula::Kind::Tensor:
      return json{{"tensor", json::array({to_json(f.left()), to_json(f.right())})}};
    case Formula::Kind::Neg:
      return json{{"neg", to_json(f.child())}};
  }
  throw SyntaxError("unreachable formula kind", 0);
}

inline Formula formula_from_json(const json& j) {
  if (!j.is_object() || j.size() != 1)
    throw SyntaxError("formula object must have exactly one key", 0);
  if (auto it = j.find("var"); it != j.end()) {
    if (!it->is_string()) throw SyntaxError("\"var\" must hold a string", 0);
    return Formula::var(it->get<std::string>());
  }
  if (auto it = j.find("tensor"); it != j.end()) {
    if (!it->is_array() || it->size() != 2)
      throw SyntaxError("\"tensor\" must hold an array of two formulas", 0);
    return Formula::tensor(formula_from_json((*it)[0]),
                           formula_from_json((*it)[1]));
  }
  if (auto it = j.find("neg"); it != j.end())
    return Formula::neg(formula_from_json(*it));
  throw SyntaxError("formula key must be var, tensor or neg", 0);
}

// ── Links ───────────────────────────────────────────────────────────────────
//   endpoint {"addr": "LR", "side": "dom"}; a linking is an array of
//   two-endpoint arrays.

inline json to_json(const LinkEnd& e) {
  return json{{"addr", e.addr}, {"side", to_string(e.side)}};
}

inline json to_json(const Linking& links) {
  json arr = json::array();
  for (const auto& l : links)
    arr.push_back(json::array({to_json(l.a), to_json(l.b)}));
  return arr;
}

inline LinkEnd end_from_json(const json& j) {
  if (!j.is_object() || !j.contains("addr") || !j.contains("side"))
    throw SyntaxError("link endpoint must have addr and side", 0);
  const auto& side = j.at("side");
  const auto& addr = j.at("addr");
  if (!side.is_string() || !addr.is_string())
    throw SyntaxError("link endpoint fields must be strings", 0);
  std::string s = side.get<std::string>();
  if (s != "dom" && s != "cod")
    throw SyntaxError("link side must be \"dom\" or \"cod\"", 0);
  return LinkEnd{s == "dom" ? Side::Dom : Side::Cod, addr.get<std::string>()};
}

inline Linking links_from_json(const json& j) {
  if (!j.is_array()) throw SyntaxError("\"links\" must be an array", 0);
  Linking links;
  links.reserve(j.size());
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2)
      throw SyntaxError("each link must be an array of two endpoints", 0);
    links.push_back(Link::make(end_from_json(pair[0]), end_from_json(pair[1])));
  }
  return links;
}

// ── Nets and elements ───────────────────────────────────────────────────────
//   net     {"cod": F, "dom": F, "links": [...]}
//   element {"cod": F, "links": [...]}            (one-sided, no "dom")

inline json to_json(const ProofNet& n) {
  return json{{"cod", to_json(n.cod)},
              {"dom", to_json(n.dom)},
              {"links", to_json(n.links)}};
}

inline json to_json(const JElement& x) {
  return json{{"cod", to_json(x.formula)}, {"links", to_json(x.links)}};
}

inline ProofNet net_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dom") || !j.contains("cod") ||
      !j.contains("links"))
    throw SyntaxError("net object must have dom, cod and links", 0);
  return make_net(formula_from_json(j.at("dom")),
                  formula_from_json(j.at("cod")),
                  links_from_json(j.at("links")));
}

inline JElement element_from_json(const json& j) {
  if (!j.is_object() || !j.contains("cod") || !j.contains("links"))
    throw SyntaxError("element object must have cod and links", 0);
  if (j.contains("dom"))
    throw SyntaxError("element object must not have a dom", 0);
  return make_element(formula_from_json(j.at("cod")),
                      links_from_json(j.at("links")));
}

// ── Input helpers ───────────────────────────────────────────────────────────

// Accepts either the core text syntax or a JSON formula object.
inline Formula read_formula(std::string_view text) {
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string_view::npos && text[i] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw SyntaxError(std::string("invalid JSON: ") + e.what(), 0);
    }
    return formula_from_json(j);
  }
  return parse(text);
}

inline ProofNet net_from_json_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(std::string("invalid JSON: ") + e.what(), 0);
  }
  return net_from_json(j);
}

inline JElement element_from_json_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(std::string("invalid JSON: ") + e.what(), 0);
  }
  return element_from_json(j);
}

}  // namespace mll

#endif  // MLL_SERIALIZE_HPP
