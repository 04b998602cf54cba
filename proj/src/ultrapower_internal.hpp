#pragma once

#include "closed_form.hpp"
#include "enl/hypernode.hpp"
#include "enl/ultrapower.hpp"

namespace enl::detail {

Term<Shape> to_term(const SymbolicNode& s);
ByParity<Eventually> standard_evidence(const Hypernode& x);
ByParity<OrdinalShape> distance_shape(const Hypernode& x, const Hypernode& y);
/// Perturbed grid with symbolic operands: the pristine grid distance shapes and
/// a uniform bound on how far the perturbed distance strays from them.
struct ManhattanView {
  ByParity<Shape> shape;
  std::int64_t slack = 0;
};
std::optional<ManhattanView> manhattan_view(const Hypernode& x, const Hypernode& y);
Ordinal point_distance(const GraphRef& g, const NodeId& x, const NodeId& y);

}  // namespace enl::detail
