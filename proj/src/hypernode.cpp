#include "enl/hypernode.hpp"

#include <mutex>
#include <unordered_map>

#include "enl/errors.hpp"

namespace enl {

namespace {

struct Simple {
  NodeKind kind;
  IndexSequence a, b;
};
struct ParityTerm {
  Hypernode even, odd;
};
struct PatchedTerm {
  std::map<std::uint64_t, NodeId> overrides;
  Hypernode base;
};
struct Memo {
  std::mutex mu;
  std::unordered_map<std::uint64_t, NodeId> values;
};
struct Derived {
  std::function<NodeId(std::uint64_t)> fn;
  std::string label;
  std::shared_ptr<Memo> memo;
};

}  // namespace

struct Hypernode::Rep {
  GraphRef graph;
  std::variant<Simple, ParityTerm, PatchedTerm, Derived> term;
  std::optional<ByParity<OrdinalShape>> profile;
  int rank = 0;
};

std::string describe(const GraphRef& g) {
  if (const auto* one = std::get_if<OneGraph>(&g)) return std::string(name(one->family()));
  const auto& inst = std::get<GraphInstance>(g);
  std::string out(name(inst.family()));
  for (const auto& e : inst.edits())
    out += std::string(e.op == GridEdit::Op::Add ? " +" : " -") + "(" + std::to_string(e.ak) + "," +
           std::to_string(e.al) + ")(" + std::to_string(e.bk) + "," + std::to_string(e.bl) + ")";
  return out;
}

bool same_graph(const GraphRef& g, const GraphRef& h) { return describe(g) == describe(h); }

bool graph_contains(const GraphRef& g, const NodeId& x) {
  return std::visit([&](const auto& gr) { return gr.contains(x); }, g);
}

NodeId graph_anchor(const GraphRef& g) {
  return std::visit([](const auto& gr) { return gr.anchor(); }, g);
}

namespace {

void check_members(const Hypernode& h, std::uint64_t from, std::uint64_t horizon) {
  for (std::uint64_t n = from; n < horizon; ++n) {
    NodeId x = h.at(n);
    if (!graph_contains(h.graph(), x))
      throw ValidationError("hypernode " + h.to_string() + " leaves " + describe(h.graph()) + " at n=" +
                            std::to_string(n) + " (" + x.to_string() + ")");
  }
}

}  // namespace

Hypernode Hypernode::simple(const GraphRef& g, NodeKind kind, const IndexSequence& a, const IndexSequence& b,
                            std::uint64_t horizon) {
  auto rep = std::make_shared<Rep>(Rep{g, Simple{kind, a, b}, std::nullopt, NodeId{kind, 0, 0}.is_one_node()});
  Hypernode h(rep);
  check_members(h, 0, horizon);
  return h;
}

Hypernode Hypernode::standard(const GraphRef& g, const NodeId& x) {
  if (!graph_contains(g, x)) throw DomainError(x.to_string() + " is not a node of " + describe(g));
  return simple(g, x.kind, IndexSequence::constant(x.a), IndexSequence::constant(x.b), 1);
}

Hypernode Hypernode::parity(const Hypernode& even, const Hypernode& odd) {
  if (!same_graph(even.graph(), odd.graph())) throw DomainError("parity branches live in different graphs");
  if (even.rank() != odd.rank()) throw ValidationError("parity branches have different ranks");
  std::optional<ByParity<OrdinalShape>> profile;
  if (even.profile() && odd.profile()) profile = ByParity<OrdinalShape>{even.profile()->even, odd.profile()->odd};
  return Hypernode(std::make_shared<Rep>(Rep{even.graph(), ParityTerm{even, odd}, profile, even.rank()}));
}

Hypernode Hypernode::patched(std::map<std::uint64_t, NodeId> overrides, const Hypernode& base,
                             std::uint64_t horizon) {
  for (const auto& [n, x] : overrides) {
    if (!graph_contains(base.graph(), x)) throw ValidationError("patched node " + x.to_string() + " is not a member");
    if (x.is_one_node() != (base.rank() == 1)) throw ValidationError("patched node has the wrong rank");
  }
  Hypernode h(std::make_shared<Rep>(Rep{base.graph(), PatchedTerm{std::move(overrides), base}, base.profile(), base.rank()}));
  check_members(h, 0, horizon);
  return h;
}

Hypernode Hypernode::derived(const GraphRef& g, std::function<NodeId(std::uint64_t)> fn, std::string label,
                             std::optional<ByParity<OrdinalShape>> profile) {
  if (!fn) throw ValidationError("derived hypernode without a generator");
  NodeId first = fn(0);
  auto rep = std::make_shared<Rep>(
      Rep{g, Derived{std::move(fn), std::move(label), std::make_shared<Memo>()}, std::move(profile), first.is_one_node()});
  return Hypernode(rep);
}

const GraphRef& Hypernode::graph() const { return rep_->graph; }
int Hypernode::rank() const { return rep_->rank; }
const std::optional<ByParity<OrdinalShape>>& Hypernode::profile() const { return rep_->profile; }

NodeId Hypernode::at(std::uint64_t n) const {
  return std::visit(
      [n](const auto& t) -> NodeId {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, Simple>) {
          return {t.kind, arity(t.kind) >= 1 ? t.a.at(n) : 0, arity(t.kind) == 2 ? t.b.at(n) : 0};
        } else if constexpr (std::is_same_v<T, ParityTerm>) {
          return n % 2 == 0 ? t.even.at(n) : t.odd.at(n);
        } else if constexpr (std::is_same_v<T, PatchedTerm>) {
          auto it = t.overrides.find(n);
          return it != t.overrides.end() ? it->second : t.base.at(n);
        } else {
          {
            std::lock_guard lock(t.memo->mu);
            if (auto it = t.memo->values.find(n); it != t.memo->values.end()) return it->second;
          }
          NodeId v = t.fn(n);
          std::lock_guard lock(t.memo->mu);
          t.memo->values.emplace(n, v);
          return v;
        }
      },
      rep_->term);
}

std::optional<ByParity<SymbolicNode>> Hypernode::symbolic() const {
  return std::visit(
      [](const auto& t) -> std::optional<ByParity<SymbolicNode>> {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, Simple>) {
          auto a = t.a.shape();
          auto b = arity(t.kind) == 2 ? t.b.shape() : ByParity<Shape>::both(Shape::constant(0));
          if (arity(t.kind) == 0) a = ByParity<Shape>::both(Shape::constant(0));
          return ByParity<SymbolicNode>{{t.kind, a.even, b.even}, {t.kind, a.odd, b.odd}};
        } else if constexpr (std::is_same_v<T, ParityTerm>) {
          auto e = t.even.symbolic();
          auto o = t.odd.symbolic();
          if (!e || !o) return std::nullopt;
          return ByParity<SymbolicNode>{e->even, o->odd};
        } else if constexpr (std::is_same_v<T, PatchedTerm>) {
          return t.base.symbolic();
        } else {
          return std::nullopt;
        }
      },
      rep_->term);
}

std::string Hypernode::to_string() const {
  return std::visit(
      [](const auto& t) -> std::string {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, Simple>) {
          std::string out = "[" + std::string(kind_prefix(t.kind));
          if (arity(t.kind) >= 1) out += ":" + t.a.to_string();
          if (arity(t.kind) == 2) out += "," + t.b.to_string();
          return out + "]";
        } else if constexpr (std::is_same_v<T, ParityTerm>) {
          return "parity(" + t.even.to_string() + "," + t.odd.to_string() + ")";
        } else if constexpr (std::is_same_v<T, PatchedTerm>) {
          std::string out = "patch(" + t.base.to_string() + ";";
          bool first = true;
          for (const auto& [n, x] : t.overrides) {
            out += (first ? " " : ",") + std::to_string(n) + "=" + x.to_string();
            first = false;
          }
          return out + ")";
        } else {
          return "[" + t.label + "]";
        }
      },
      rep_->term);
}

}  // namespace enl
