#include "enl/ultrapower.hpp"

#include "closed_form.hpp"
#include "enl/errors.hpp"
#include "ultrapower_internal.hpp"

namespace enl {

TruthSet TruthSet::at_least(std::uint64_t k) {
  return {[k](std::uint64_t n) { return n >= k; }, {Eventually::True, Eventually::True}, k};
}

TruthSet TruthSet::below(std::uint64_t k) {
  return {[k](std::uint64_t n) { return n < k; }, {Eventually::False, Eventually::False}, k};
}

TruthSet TruthSet::evens() {
  return {[](std::uint64_t n) { return n % 2 == 0; }, {Eventually::True, Eventually::False}, 0};
}

TruthSet TruthSet::odds() {
  return {[](std::uint64_t n) { return n % 2 == 1; }, {Eventually::False, Eventually::True}, 0};
}

namespace {

Eventually flip(Eventually e) {
  return e == Eventually::True ? Eventually::False : e == Eventually::False ? Eventually::True : e;
}

Eventually both_true(Eventually a, Eventually b) {
  if (a == Eventually::False || b == Eventually::False) return Eventually::False;
  if (a == Eventually::True && b == Eventually::True) return Eventually::True;
  return Eventually::Unknown;
}

}  // namespace

TruthSet TruthSet::complement() const {
  TruthSet out;
  if (predicate) out.predicate = [p = predicate](std::uint64_t n) { return !p(n); };
  out.evidence = {flip(evidence.even), flip(evidence.odd)};
  out.from = from;
  return out;
}

Trivalent decide(const ByParity<Eventually>& e, const std::string& what) {
  if (e.even == Eventually::Unknown || e.odd == Eventually::Unknown)
    throw IndeterminateError(what + ": the declared sequence classes do not decide the truth set");
  if (e.even == e.odd) return e.even == Eventually::True ? Trivalent::True : Trivalent::False;
  return Trivalent::FilterDependent;
}

Trivalent in_filter(const TruthSet& set, std::uint64_t horizon) {
  if (set.predicate) {
    for (std::uint64_t n = set.from; n < horizon; ++n) {
      Eventually claim = set.evidence[n];
      if (claim == Eventually::Unknown) continue;
      if (set.predicate(n) != (claim == Eventually::True))
        throw ValidationError("truth-set evidence contradicts the predicate at n=" + std::to_string(n));
    }
  }
  return decide(set.evidence, "in_filter");
}

Eventually eventually_zero(const Shape& s) {
  if (s.is_constant()) return s.offset() == 0 ? Eventually::True : Eventually::False;
  if (auto sign = s.eventual_sign(); sign && *sign != 0) return Eventually::False;
  return Eventually::Unknown;
}

Eventually eventually_bounded(const Shape& s) {
  if (s.lower() && s.upper()) return Eventually::True;
  if (abs_of(s).diverges_up() || (s.kind() == Shape::Kind::Affine && s.slope() != 0)) return Eventually::False;
  return Eventually::Unknown;
}

namespace detail {

Term<Shape> to_term(const SymbolicNode& s) { return {s.kind, s.a, s.b}; }

ByParity<Eventually> standard_evidence(const Hypernode& x) {
  auto sym = x.symbolic();
  if (!sym) {
    const auto& prof = x.profile();
    auto branch = [&](const OrdinalShape* p) {
      if (!p) return Eventually::Unknown;
      if (p->omega.diverges_up() || p->finite.diverges_up()) return Eventually::False;
      return Eventually::Unknown;
    };
    return {branch(prof ? &prof->even : nullptr), branch(prof ? &prof->odd : nullptr)};
  }
  auto branch = [](const SymbolicNode& s) {
    int ar = arity(s.kind);
    Eventually out = Eventually::True;
    if (ar >= 1) out = both_true(out, eventually_bounded(s.a));
    if (ar == 2) out = both_true(out, eventually_bounded(s.b));
    return out;
  };
  return {branch(sym->even), branch(sym->odd)};
}

namespace {

bool is_constant_node(const SymbolicNode& s) {
  int ar = arity(s.kind);
  return (ar < 1 || s.a.is_constant()) && (ar < 2 || s.b.is_constant());
}

NodeId constant_node(const SymbolicNode& s) {
  int ar = arity(s.kind);
  return {s.kind, ar >= 1 ? s.a.offset() : 0, ar == 2 ? s.b.offset() : 0};
}

bool diverges(const SymbolicNode& s) {
  int ar = arity(s.kind);
  return (ar >= 1 && abs_of(s.a).diverges_up()) || (ar == 2 && abs_of(s.b).diverges_up());
}

OrdinalShape clamp(const OrdinalShape& s) { return {clamp_nonnegative(s.omega), clamp_nonnegative(s.finite)}; }

std::int64_t detour_bound(const GraphInstance& inst) {
  GridBox c = inst.collar_box();
  std::int64_t w = c.k1 - c.k0 + 1, h = c.l1 - c.l0 + 1;
  return w * h + 2 * (w + h);
}

OrdinalShape symbolic_distance(const GraphRef& g, const SymbolicNode& x, const SymbolicNode& y) {
  if (const auto* one = std::get_if<OneGraph>(&g)) return clamp(wdistance1(one->family(), to_term(x), to_term(y)));
  const auto& inst = std::get<GraphInstance>(g);
  Shape zero = Shape::constant(0);
  if (inst.family() != Family::PerturbedGrid)
    return {zero, clamp_nonnegative(distance0(inst.family(), to_term(x), to_term(y)))};
  if (is_constant_node(x) && is_constant_node(y)) {
    auto d = inst.perturbed_distance(constant_node(x), constant_node(y), 50'000'000);
    if (!d) throw UnsupportedOracleError("perturbed grid search exhausted");
    return {zero, Shape::constant(static_cast<std::int64_t>(*d))};
  }
  Shape manhattan = distance0(Family::Grid2D, to_term(x), to_term(y));
  if (manhattan.is_constant() && (diverges(x) || diverges(y))) return {zero, manhattan};
  return {zero, clamp_nonnegative(manhattan + Shape::bounded(-inst.added_saving(), detour_bound(inst)))};
}

// Distance from a derived hypernode with a declared anchor profile to a
// standard node s, using the triangle inequality through the anchor.
OrdinalShape through_anchor(const OrdinalShape& profile, const Ordinal& d) {
  auto w = static_cast<std::int64_t>(d.omega_coeff());
  auto f = static_cast<std::int64_t>(d.finite_part());
  if (w == 0)
    return clamp({profile.omega, f == 0 ? profile.finite : profile.finite + Shape::bounded(-f, f)});
  return clamp({profile.omega + Shape::bounded(-w, w), Shape::indeterminate()});
}

Ordinal concrete_distance(const GraphRef& g, const NodeId& x, const NodeId& y) {
  if (const auto* one = std::get_if<OneGraph>(&g)) return wdistance(*one, x, y);
  auto d = distance(std::get<GraphInstance>(g), x, y, 50'000'000);
  if (!d) throw UnsupportedOracleError("distance search exhausted between " + x.to_string() + " and " + y.to_string());
  return Ordinal::finite(*d);
}

OrdinalShape mixed_shape(const Hypernode& derived_side, const std::optional<SymbolicNode>& other, int parity) {
  const auto& prof = derived_side.profile();
  if (!prof || !other || !is_constant_node(*other)) return {Shape::indeterminate(), Shape::indeterminate()};
  const GraphRef& g = derived_side.graph();
  Ordinal d = concrete_distance(g, graph_anchor(g), constant_node(*other));
  return through_anchor(parity == 0 ? prof->even : prof->odd, d);
}

}  // namespace

ByParity<OrdinalShape> distance_shape(const Hypernode& x, const Hypernode& y) {
  auto sx = x.symbolic(), sy = y.symbolic();
  if (sx && sy) return {symbolic_distance(x.graph(), sx->even, sy->even), symbolic_distance(x.graph(), sx->odd, sy->odd)};
  if (!sx && !sy) {
    OrdinalShape ind{Shape::indeterminate(), Shape::indeterminate()};
    return {ind, ind};
  }
  const Hypernode& der = sx ? y : x;
  const auto& sym = sx ? sx : sy;
  return {mixed_shape(der, sym ? std::optional(sym->even) : std::nullopt, 0),
          mixed_shape(der, sym ? std::optional(sym->odd) : std::nullopt, 1)};
}

Ordinal point_distance(const GraphRef& g, const NodeId& x, const NodeId& y) { return concrete_distance(g, x, y); }

std::optional<ManhattanView> manhattan_view(const Hypernode& x, const Hypernode& y) {
  const auto* inst = std::get_if<GraphInstance>(&x.graph());
  if (!inst || inst->family() != Family::PerturbedGrid) return std::nullopt;
  auto sx = x.symbolic(), sy = y.symbolic();
  if (!sx || !sy) return std::nullopt;
  return ManhattanView{{distance0(Family::Grid2D, to_term(sx->even), to_term(sy->even)),
                        distance0(Family::Grid2D, to_term(sx->odd), to_term(sy->odd))},
                       std::max(inst->added_saving(), detour_bound(*inst))};
}

}  // namespace detail

Trivalent hypernode_eq(const Hypernode& x, const Hypernode& y) {
  if (!same_graph(x.graph(), y.graph())) throw DomainError("hypernodes of different graphs");
  if (x.rank() != y.rank()) return Trivalent::False;
  auto sx = x.symbolic(), sy = y.symbolic();
  if (!sx || !sy) throw IndeterminateError("search-derived hypernodes carry no symbolic term to compare");
  auto branch = [](const SymbolicNode& a, const SymbolicNode& b) {
    if (a.kind != b.kind) return Eventually::False;
    int ar = arity(a.kind);
    Eventually out = Eventually::True;
    if (ar >= 1) out = both_true(out, eventually_zero(a.a - b.a));
    if (ar == 2) out = both_true(out, eventually_zero(a.b - b.b));
    return out;
  };
  return decide({branch(sx->even, sy->even), branch(sx->odd, sy->odd)}, "hypernode_eq");
}

Trivalent is_standard(const Hypernode& x) { return decide(detail::standard_evidence(x), "is_standard"); }

Hyperordinal Hyperordinal::from_sequences(const IndexSequence& omega, const IndexSequence& finite) {
  Hyperordinal h;
  h.generator = [omega, finite](std::uint64_t n) {
    std::int64_t w = omega.at(n), f = finite.at(n);
    if (w < 0 || f < 0) throw DomainError("negative ordinal coefficient at n=" + std::to_string(n));
    return Ordinal(static_cast<std::uint64_t>(w), static_cast<std::uint64_t>(f));
  };
  auto ws = omega.shape(), fs = finite.shape();
  h.shape = {{ws.even, fs.even}, {ws.odd, fs.odd}};
  return h;
}

namespace {

std::string describe_branch(const OrdinalShape& s) {
  const Shape& w = s.omega;
  const Shape& f = s.finite;
  if (w.is_indeterminate() || (f.is_indeterminate() && !w.diverges_up())) return "Indeterminate";
  if (w.diverges_up() || (w.is_constant() && f.diverges_up()))
    return (w.kind() == Shape::Kind::Affine && (w.slope() > 0 || (w.slope() == 0 && f.kind() == Shape::Kind::Affine)))
               ? "MonotoneUnbounded"
               : "Unbounded";
  auto wu = w.upper(), fu = f.upper();
  if (!wu) return "Indeterminate";
  if (w.is_constant() && f.is_constant()) return "Constant(" + Ordinal(*wu, f.offset()).to_string() + ")";
  Ordinal bound = w.is_constant() && fu ? Ordinal(*wu, *fu)
                  : f.is_constant() && f.offset() == 0 ? Ordinal(*wu, 0)
                                                       : Ordinal(*wu + 1, 0);
  return "Bounded(" + bound.to_string() + ")";
}

}  // namespace

std::string Hyperordinal::class_string() const {
  std::string e = describe_branch(shape.even), o = describe_branch(shape.odd);
  if (e == o) return e;
  return "Parity(even: " + e + ", odd: " + o + ")";
}

Hyperordinal hyperdistance(const Hypernode& x, const Hypernode& y) {
  if (!same_graph(x.graph(), y.graph())) throw DomainError("hypernodes of different graphs");
  Hyperordinal h;
  h.generator = [x, y](std::uint64_t n) { return detail::point_distance(x.graph(), x.at(n), y.at(n)); };
  h.shape = detail::distance_shape(x, y);
  return h;
}

std::string HyperComparison::to_string() const {
  if (!result) return "FilterDependent";
  switch (*result) {
    case Comparison::Less: return "Less";
    case Comparison::Equal: return "Equal";
    case Comparison::Greater: return "Greater";
  }
  return "?";
}

HyperComparison compare_hyperordinals(const Hyperordinal& a, const Hyperordinal& b) {
  ByParity<Eventually> less{}, equal{}, greater{};
  for (int p = 0; p < 2; ++p) {
    const OrdinalShape& x = p == 0 ? a.shape.even : a.shape.odd;
    const OrdinalShape& y = p == 0 ? b.shape.even : b.shape.odd;
    auto sign = (x.omega - y.omega).eventual_sign();
    if (sign && *sign == 0) sign = (x.finite - y.finite).eventual_sign();
    Eventually l = Eventually::Unknown, e = Eventually::Unknown, g = Eventually::Unknown;
    if (sign) {
      l = *sign < 0 ? Eventually::True : Eventually::False;
      e = *sign == 0 ? Eventually::True : Eventually::False;
      g = *sign > 0 ? Eventually::True : Eventually::False;
    }
    (p == 0 ? less.even : less.odd) = l;
    (p == 0 ? equal.even : equal.odd) = e;
    (p == 0 ? greater.even : greater.odd) = g;
  }
  HyperComparison out;
  out.less = decide(less, "compare");
  out.equal = decide(equal, "compare");
  out.greater = decide(greater, "compare");
  if (out.less == Trivalent::True) out.result = Comparison::Less;
  if (out.equal == Trivalent::True) out.result = Comparison::Equal;
  if (out.greater == Trivalent::True) out.result = Comparison::Greater;
  return out;
}

Hyperbranch make_hyperbranch(const Hypernode& x, const Hypernode& y) {
  auto d = hyperdistance(x, y);
  auto branch = [](const OrdinalShape& s) {
    return both_true(eventually_zero(s.omega), eventually_zero(s.finite - Shape::constant(1)));
  };
  Trivalent v = decide({branch(d.shape.even), branch(d.shape.odd)}, "make_hyperbranch");
  if (v == Trivalent::False)
    throw NotAHyperbranchError(x.to_string() + " and " + y.to_string() + " are not adjacent for almost all n", false);
  if (v == Trivalent::FilterDependent)
    throw NotAHyperbranchError(x.to_string() + " and " + y.to_string() + " are adjacent on one parity class only", true);
  auto sx = detail::standard_evidence(x), sy = detail::standard_evidence(y);
  Trivalent standard = decide({both_true(sx.even, sy.even), both_true(sx.odd, sy.odd)}, "hyperbranch standardness");
  return {x, y, standard};
}

}  // namespace enl
