#include "enl/node.hpp"

#include <array>
#include <charconv>
#include <ostream>
#include <utility>

#include "enl/errors.hpp"

namespace enl {

namespace {

struct KindInfo {
  NodeKind kind;
  std::string_view prefix;
  int arity;
};

constexpr std::array<KindInfo, 14> kKinds{{
    {NodeKind::Path, "p", 1},
    {NodeKind::Ladder, "lad", 1},
    {NodeKind::Ground, "lad:g", 0},
    {NodeKind::Ray, "ray", 1},
    {NodeKind::Grid, "grid", 2},
    {NodeKind::DiamondJ, "j", 2},
    {NodeKind::DiamondL, "l", 2},
    {NodeKind::DiamondR, "r", 2},
    {NodeKind::OneNode, "x1", 1},
    {NodeKind::OneNodeGround, "x1:g", 0},
    {NodeKind::PathSection, "q", 2},
    {NodeKind::Rung, "v", 2},
    {NodeKind::Rail, "h", 2},
    {NodeKind::Embedded, "a", 1},
}};

const KindInfo& info(NodeKind kind) {
  for (const auto& k : kKinds)
    if (k.kind == kind) return k;
  throw DomainError("unknown node kind");
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("bad node literal '" + std::string(whole) + "'");
  return v;
}

// 0, 1, -1, 2, -2, ... -> 0, 1, 2, 3, 4, ...
std::uint64_t enumeration_key(std::int64_t v) {
  return v > 0 ? 2 * static_cast<std::uint64_t>(v) - 1 : 2 * (0 - static_cast<std::uint64_t>(v));
}

}  // namespace

int arity(NodeKind kind) { return info(kind).arity; }

std::string_view kind_prefix(NodeKind kind) { return info(kind).prefix; }

std::string NodeId::to_string() const {
  const auto& k = info(kind);
  std::string out(k.prefix);
  if (k.arity >= 1) out += ":" + std::to_string(a);
  if (k.arity == 2) out += "," + std::to_string(b);
  return out;
}

NodeId NodeId::parse(std::string_view literal) {
  if (literal == "lad:g") return ground_node();
  if (literal == "x1:g") return one_node_ground();
  auto colon = literal.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("bad node literal '" + std::string(literal) + "'");
  std::string_view prefix = literal.substr(0, colon);
  std::string_view params = literal.substr(colon + 1);
  if (prefix == "x0") return junction(parse_int(params, literal), 0);
  for (const auto& k : kKinds) {
    if (k.arity == 0 || k.prefix != prefix) continue;
    if (k.arity == 1) return {k.kind, parse_int(params, literal), 0};
    auto comma = params.find(',');
    if (comma == std::string_view::npos)
      throw ParseError("node literal '" + std::string(literal) + "' needs two parameters");
    return {k.kind, parse_int(params.substr(0, comma), literal),
            parse_int(params.substr(comma + 1), literal)};
  }
  throw ParseError("unknown node prefix in '" + std::string(literal) + "'");
}

std::strong_ordering canonical_order(const NodeId& x, const NodeId& y) {
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  if (auto c = enumeration_key(x.a) <=> enumeration_key(y.a); c != 0) return c;
  return enumeration_key(x.b) <=> enumeration_key(y.b);
}

std::ostream& operator<<(std::ostream& os, const NodeId& x) { return os << x.to_string(); }

}  // namespace enl
