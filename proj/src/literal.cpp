#include "enl/literal.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <string>

#include "enl/errors.hpp"

namespace enl {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::int64_t to_int(std::string_view s, std::string_view context) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError("bad integer '" + std::string(s) + "' in '" + std::string(context) + "'");
  return v;
}

// Splits at `sep` outside parentheses.
std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced parentheses in '" + std::string(s) + "'");
    if (s[i] == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in '" + std::string(s) + "'");
  out.push_back(trim(s.substr(start)));
  return out;
}

// "name(inner)" -> inner when the call spans the whole string.
std::optional<std::string> call_args(std::string_view s, std::string_view name) {
  if (s.size() < name.size() + 2 || s.substr(0, name.size()) != name || s[name.size()] != '(' || s.back() != ')')
    return std::nullopt;
  return std::string(s.substr(name.size() + 1, s.size() - name.size() - 2));
}

// Kind from a literal prefix, found by parsing a probe literal.
NodeKind kind_of_prefix(const std::string& prefix) {
  for (const char* probe : {":0", ":0,0"}) {
    try {
      return NodeId::parse(prefix + probe).kind;
    } catch (const ParseError&) {
    }
  }
  throw ParseError("unknown node prefix '" + prefix + "'");
}

Hypernode term_hypernode(const GraphRef& g, const std::string& prefix, const std::vector<IndexSequence>& params,
                         std::string_view literal, std::uint64_t horizon) {
  if (prefix == "x0") {
    if (params.size() != 1) throw ParseError("x0 takes one parameter in '" + std::string(literal) + "'");
    return Hypernode::simple(g, NodeKind::DiamondJ, params[0], IndexSequence::constant(0), horizon);
  }
  NodeKind kind = kind_of_prefix(prefix);
  if (static_cast<int>(params.size()) != arity(kind))
    throw ParseError("wrong number of parameters in '" + std::string(literal) + "'");
  return Hypernode::simple(g, kind, params.empty() ? IndexSequence::constant(0) : params[0],
                           params.size() < 2 ? IndexSequence::constant(0) : params[1], horizon);
}

}  // namespace

GraphRef parse_graph(const json& d) {
  if (!d.is_object() || !d.contains("family") || !d["family"].is_string())
    throw ParseError("graph descriptor needs a \"family\" string");
  std::string fam = d["family"];
  if (is_one_family_name(fam)) {
    if (d.contains("edits")) throw ValidationError("edits apply only to perturbed_grid");
    return OneGraph::make(parse_one_family(fam));
  }
  std::vector<GridEdit> edits;
  if (d.contains("edits")) {
    for (const auto& e : d["edits"]) {
      std::string op = e.at("op");
      if (op != "add" && op != "remove") throw ParseError("edit op must be add or remove");
      auto a = e.at("a").get<std::vector<std::int64_t>>(), b = e.at("b").get<std::vector<std::int64_t>>();
      if (a.size() != 2 || b.size() != 2) throw ParseError("edit endpoints are [k, l] pairs");
      edits.push_back({op == "add" ? GridEdit::Op::Add : GridEdit::Op::Remove, a[0], a[1], b[0], b[1]});
    }
  }
  return GraphInstance::make(parse_family(fam), edits);
}

json graph_json(const GraphRef& g) {
  if (const auto* one = std::get_if<OneGraph>(&g)) return {{"family", std::string(name(one->family()))}};
  const auto& gi = std::get<GraphInstance>(g);
  json out{{"family", std::string(name(gi.family()))}};
  if (gi.family() == Family::PerturbedGrid) {
    out["edits"] = json::array();
    for (const auto& e : gi.edits())
      out["edits"].push_back(
          {{"op", e.op == GridEdit::Op::Add ? "add" : "remove"}, {"a", {e.ak, e.al}}, {"b", {e.bk, e.bl}}});
  }
  return out;
}

IndexSequence parse_sequence(std::string_view expr) {
  std::string s;
  for (char ch : expr)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty sequence expression");
  std::int64_t slope = 0, offset = 0;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw ParseError("bad sequence expression '" + s + "'");
    }
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    bool has_n = j < s.size() && s[j] == 'n';
    if (j == i && !has_n) throw ParseError("bad sequence expression '" + s + "'");
    std::int64_t c = j == i ? 1 : to_int(std::string_view(s).substr(i, j - i), s);
    if (has_n) {
      slope += sign * c;
      ++j;
    } else {
      offset += sign * c;
    }
    i = j;
  }
  return slope == 0 ? IndexSequence::constant(offset) : IndexSequence::affine(slope, offset);
}

IndexSequence sequence_from_json(const json& j) {
  if (j.is_string()) return parse_sequence(std::string_view(j.get_ref<const std::string&>()));
  if (j.is_number_integer()) return IndexSequence::constant(j.get<std::int64_t>());
  if (!j.is_object() || j.size() != 1) throw ParseError("sequence must be a one-key object: " + j.dump());
  const auto& [key, v] = *j.items().begin();
  if (key == "const") return IndexSequence::constant(v.get<std::int64_t>());
  if (key == "affine") {
    auto ab = v.get<std::vector<std::int64_t>>();
    if (ab.size() != 2) throw ParseError("affine takes [slope, offset]");
    return IndexSequence::affine(ab[0], ab[1]);
  }
  if (key == "parity") {
    if (!v.is_array() || v.size() != 2) throw ParseError("parity takes [even, odd]");
    return IndexSequence::parity(sequence_from_json(v[0]), sequence_from_json(v[1]));
  }
  if (key == "explicit") {
    if (!v.contains("prefix") || !v.contains("tail")) throw ParseError("explicit takes prefix and tail");
    return IndexSequence::explicit_prefix(v["prefix"].get<std::vector<std::int64_t>>(), sequence_from_json(v["tail"]));
  }
  throw ParseError("unknown sequence class '" + key + "'");
}

namespace {

// horizon 0 defers membership checks to an enclosing patch.
Hypernode parse_literal(const GraphRef& g, std::string_view literal, std::uint64_t horizon) {
  std::string s = trim(literal);
  if (auto inner = call_args(s, "parity")) {
    // Grid literals contain commas; a new operand starts at an item holding a kind prefix.
    std::vector<std::string> parts;
    for (const auto& item : split_top(*inner, ',')) {
      if (parts.empty() || item.find(':') != std::string::npos || item.find('(') != std::string::npos)
        parts.push_back(item);
      else
        parts.back() += "," + item;
    }
    if (parts.size() != 2) throw ParseError("parity takes two hypernodes in '" + s + "'");
    return Hypernode::parity(parse_literal(g, parts[0], horizon), parse_literal(g, parts[1], horizon));
  }
  if (auto inner = call_args(s, "patch")) {
    auto parts = split_top(*inner, ';');
    if (parts.size() != 2) throw ParseError("patch takes 'base; i=node, ...' in '" + s + "'");
    std::map<std::uint64_t, NodeId> at;
    for (const auto& item : split_top(parts[1], ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw ParseError("patch entries are i=node in '" + s + "'");
      auto idx = to_int(trim(std::string_view(item).substr(0, eq)), s);
      if (idx < 0) throw ParseError("patch index must be nonnegative in '" + s + "'");
      at[static_cast<std::uint64_t>(idx)] = NodeId::parse(trim(std::string_view(item).substr(eq + 1)));
    }
    return Hypernode::patched(at, parse_literal(g, parts[0], 0), horizon);
  }
  if (s == "lad:g" || s == "x1:g") return Hypernode::standard(g, NodeId::parse(s));
  auto colon = s.find(':');
  if (colon == std::string::npos) throw ParseError("bad hypernode literal '" + s + "'");
  std::vector<IndexSequence> params;
  for (const auto& p : split_top(std::string_view(s).substr(colon + 1), ',')) params.push_back(parse_sequence(std::string_view(p)));
  return term_hypernode(g, s.substr(0, colon), params, s, horizon);
}

}  // namespace

Hypernode parse_hypernode(const GraphRef& g, std::string_view literal) {
  return parse_literal(g, literal, kDefaultHorizon);
}

Hypernode hypernode_from_json(const GraphRef& g, const json& j) {
  if (j.is_string()) return parse_hypernode(g, std::string_view(j.get_ref<const std::string&>()));
  if (!j.is_object()) throw ParseError("hypernode must be a string or an object: " + j.dump());
  if (j.contains("parity")) {
    const auto& v = j["parity"];
    if (!v.is_array() || v.size() != 2) throw ParseError("parity takes [even, odd]");
    return Hypernode::parity(hypernode_from_json(g, v[0]), hypernode_from_json(g, v[1]));
  }
  if (j.contains("patch")) {
    const auto& v = j["patch"];
    std::map<std::uint64_t, NodeId> at;
    for (const auto& [k, node] : v.at("at").items()) {
      auto idx = to_int(k, v.dump());
      if (idx < 0) throw ParseError("patch index must be nonnegative");
      at[static_cast<std::uint64_t>(idx)] = NodeId::parse(node.get<std::string>());
    }
    const auto& base = v.at("base");
    Hypernode raw = base.is_string() ? parse_literal(g, base.get<std::string>(), 0) : hypernode_from_json(g, base);
    return Hypernode::patched(at, raw);
  }
  if (!j.contains("term")) throw ParseError("hypernode object needs term, parity or patch: " + j.dump());
  std::string term = j["term"];
  auto colon = term.find(':');
  if (colon == std::string::npos) return parse_hypernode(g, std::string_view(term));
  std::vector<IndexSequence> params;
  for (auto p : split_top(std::string_view(term).substr(colon + 1), ',')) {
    if (p.size() > 3 && p.substr(0, 2) == "x[" && p.back() == ']') p = p.substr(2, p.size() - 3);
    if (j.contains(p)) {
      params.push_back(sequence_from_json(j[p]));
    } else if (p == "g") {
      return parse_hypernode(g, std::string_view(term));
    } else {
      params.push_back(parse_sequence(std::string_view(p)));
    }
  }
  return term_hypernode(g, term.substr(0, colon), params, term, kDefaultHorizon);
}

}  // namespace enl
