#include "enl/galaxy.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "enl/errors.hpp"
#include "ultrapower_internal.hpp"

namespace enl {

namespace {

constexpr std::uint64_t kScanCap = 10'000'000;

Hypernode anchor_of(const Hypernode& x) { return Hypernode::standard(x.graph(), graph_anchor(x.graph())); }

void require_maximal(const Hypernode& x) {
  if (auto s = x.symbolic(); s && (s->even.kind == NodeKind::Embedded || s->odd.kind == NodeKind::Embedded))
    throw DomainError(x.to_string() + " is not maximal");
}

struct BranchVerdict {
  Eventually same = Eventually::Unknown;
  std::int64_t bound = 0;
};

BranchVerdict branch_verdict(const OrdinalShape& s, int rank) {
  if (rank == 0) {
    Eventually wz = eventually_zero(s.omega);
    if (wz != Eventually::True) return {wz == Eventually::False ? Eventually::False : Eventually::Unknown, 0};
    if (auto hi = s.finite.upper()) return {Eventually::True, *hi};
    if (s.finite.diverges_up()) return {Eventually::False, 0};
    return {};
  }
  if (auto hi = s.omega.upper()) return {Eventually::True, *hi + (eventually_zero(s.finite) == Eventually::True ? 0 : 1)};
  if (s.omega.diverges_up()) return {Eventually::False, 0};
  return {};
}

void check_rank(int rank) {
  if (rank != 0 && rank != 1) throw ValidationError("rank must be 0 or 1");
}

// d(z, base) - d(y, base) exceeds every m on one parity branch.
Eventually farther(const OrdinalShape& y, const OrdinalShape& z, int rank) {
  auto grows = [](const Shape& d) {
    auto sign = d.eventual_sign();
    if (d.diverges_up()) return Eventually::True;
    if (d.upper() || (sign && *sign < 0)) return Eventually::False;
    return Eventually::Unknown;
  };
  Shape dw = z.omega - y.omega;
  if (rank == 1) return grows(dw);
  auto sign = dw.eventual_sign();
  if (dw.diverges_up() || (sign && *sign > 0)) return Eventually::True;
  if (sign && *sign < 0) return Eventually::False;
  if (eventually_zero(dw) != Eventually::True) return Eventually::Unknown;
  return grows(z.finite - y.finite);
}

std::int64_t coefficient(const Ordinal& d, int rank) {
  return static_cast<std::int64_t>(rank == 1 ? d.omega_coeff() : d.finite_part());
}

// The difference d(z) - d(y) as seen by the certificate: infinite gaps count as large.
std::int64_t coefficient_gap(const Ordinal& dy, const Ordinal& dz, int rank) {
  if (rank == 0 && dz.omega_coeff() != dy.omega_coeff())
    return dz.omega_coeff() > dy.omega_coeff() ? INT64_MAX : INT64_MIN;
  return coefficient(dz, rank) - coefficient(dy, rank);
}

void validate(const GrowthCertificate& c, const Hypernode& base, const Hypernode& y, const Hypernode& z, int rank,
              std::uint64_t horizon) {
  if (!c.lower) throw ValidationError("empty growth certificate");
  const GraphRef& g = base.graph();
  std::int64_t prev = INT64_MIN;
  for (std::uint64_t n = c.from; n < horizon; ++n) {
    std::int64_t lo = c.lower(n);
    if (lo < prev) throw ValidationError("certificate lower bound decreases at n=" + std::to_string(n));
    prev = lo;
    auto dy = detail::point_distance(g, y.at(n), base.at(n));
    auto dz = detail::point_distance(g, z.at(n), base.at(n));
    if (coefficient_gap(dy, dz, rank) < lo)
      throw ValidationError("certificate fails at n=" + std::to_string(n) + " (" + c.reason + ")");
  }
}

// Distance coefficients of a hypernode from the base, memoized.
class Coefficients {
 public:
  Coefficients(Hypernode src, Hypernode base, int rank) : src_(std::move(src)), base_(std::move(base)), rank_(rank) {}

  std::int64_t operator()(std::uint64_t n) const {
    std::lock_guard lock(mu_);
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    auto d = detail::point_distance(base_.graph(), src_.at(n), base_.at(n));
    if (rank_ == 0 && !d.is_finite()) throw ConstructionError("infinite distance in a rank 0 chain");
    return memo_[n] = coefficient(d, rank_);
  }
  const Hypernode& source() const { return src_; }

 private:
  Hypernode src_;
  Hypernode base_;
  int rank_;
  mutable std::mutex mu_;
  mutable std::map<std::uint64_t, std::int64_t> memo_;
};

ByParity<OrdinalShape> far_profile(int rank) {
  if (rank == 0) return ByParity<OrdinalShape>::both({Shape::constant(0), Shape::unbounded(1)});
  return ByParity<OrdinalShape>::both({Shape::unbounded(1), Shape::indeterminate()});
}

// Sequential index maps shared by a derived hypernode and its certificate.
class IndexMap {
 public:
  using Step = std::function<std::uint64_t(const std::vector<std::uint64_t>&)>;
  explicit IndexMap(Step step) : step_(std::move(step)) {}

  std::uint64_t at(std::size_t k) const {
    std::lock_guard lock(mu_);
    while (values_.size() <= k) values_.push_back(step_(values_));
    return values_[k];
  }

 private:
  Step step_;
  mutable std::mutex mu_;
  mutable std::vector<std::uint64_t> values_;
};

std::uint64_t scan(std::uint64_t from, const std::function<bool(std::uint64_t)>& ok, const char* what) {
  for (std::uint64_t j = from; j < from + kScanCap; ++j)
    if (ok(j)) return j;
  throw ConstructionError(std::string(what) + ": no index found within the scan cap");
}

// The thresholds n_k of the compression step: n_0 = 0 and n_k the least n with
// f(n) > f(n_{k-1}) + k.
struct Compression {
  std::shared_ptr<Coefficients> f;
  std::shared_ptr<IndexMap> thresholds;

  explicit Compression(std::shared_ptr<Coefficients> coeff) : f(std::move(coeff)) {
    thresholds = std::make_shared<IndexMap>([f = f](const std::vector<std::uint64_t>& prev) -> std::uint64_t {
      if (prev.empty()) return 0;
      auto k = static_cast<std::int64_t>(prev.size());
      std::int64_t target = (*f)(prev.back()) + k;
      return scan(prev.back() + 1, [&](std::uint64_t j) { return (*f)(j) > target; }, "compression");
    });
  }

  // k with n_{k-1} <= n < n_k.
  std::size_t block(std::uint64_t n) const {
    std::size_t k = 1;
    while (thresholds->at(k) <= n) ++k;
    return k;
  }
};

struct Step {
  Hypernode entry;
  GrowthCertificate certificate;
};

Step compress(const Hypernode& base, const Hypernode& y, int rank, const std::string& label) {
  Compression c(std::make_shared<Coefficients>(y, base, rank));
  auto fn = [c, y](std::uint64_t n) {
    std::size_t k = c.block(n);
    return y.at(k >= 2 ? c.thresholds->at(k - 2) : 0);
  };
  Hypernode w = Hypernode::derived(base.graph(), fn, label, far_profile(rank));
  GrowthCertificate cert{[c](std::uint64_t n) { return static_cast<std::int64_t>(c.block(n)) - 1; }, 0,
                         "staircase blocks of " + label};
  return {w, cert};
}

// e(n) = least j >= max(e(n-1), n) with f(j) >= f(n) + n.
Step expand(const Hypernode& base, const Hypernode& y, int rank, const std::string& label) {
  auto f = std::make_shared<Coefficients>(y, base, rank);
  auto e = std::make_shared<IndexMap>([f](const std::vector<std::uint64_t>& prev) -> std::uint64_t {
    std::uint64_t n = prev.size();
    std::uint64_t from = std::max<std::uint64_t>(prev.empty() ? 0 : prev.back(), n);
    std::int64_t target = (*f)(n) + static_cast<std::int64_t>(n);
    return scan(from, [&](std::uint64_t j) { return (*f)(j) >= target; }, "expansion");
  });
  Hypernode z = Hypernode::derived(base.graph(), [e, y](std::uint64_t n) { return y.at(e->at(n)); }, label,
                                   far_profile(rank));
  GrowthCertificate cert{[](std::uint64_t n) { return static_cast<std::int64_t>(n); }, 0, "expansion of " + label};
  return {z, cert};
}

// A subsequence with nondecreasing distance coefficients; the seed itself when
// its class is exactly affine and its prefix already nondecreasing.
Hypernode monotone_subsequence(const Hypernode& base, const Hypernode& seed, int rank, const OrdinalShape& even,
                               const OrdinalShape& odd) {
  const Shape& ce = rank == 1 ? even.omega : even.finite;
  const Shape& co = rank == 1 ? odd.omega : odd.finite;
  auto f = std::make_shared<Coefficients>(seed, base, rank);
  if (ce == co && ce.kind() == Shape::Kind::Affine && ce.slope() > 0) {
    bool monotone = true;
    for (std::uint64_t n = 1; n < kDefaultHorizon && monotone; ++n) monotone = (*f)(n) >= (*f)(n - 1);
    if (monotone) return seed;
  }
  auto s = std::make_shared<IndexMap>([f](const std::vector<std::uint64_t>& prev) -> std::uint64_t {
    if (prev.empty()) return 0;
    std::int64_t floor = (*f)(prev.back());
    return scan(prev.back() + 1, [&](std::uint64_t j) { return (*f)(j) >= floor; }, "extraction");
  });
  return Hypernode::derived(base.graph(), [s, seed](std::uint64_t n) { return seed.at(s->at(n)); },
                            "monotone(" + seed.to_string() + ")", far_profile(rank));
}

void require_principal(const Hypernode& base, int rank) {
  if (in_principal_galaxy(base, rank).relation != GalaxyRelation::SameGalaxy)
    throw DomainError("base " + base.to_string() + " is not in the principal galaxy");
}

void require_outside(const Hypernode& y, int rank) {
  if (in_principal_galaxy(y, rank).relation != GalaxyRelation::DifferentGalaxy)
    throw DomainError(y.to_string() + " is not outside the principal galaxy");
}

}  // namespace

std::string to_string(GalaxyRelation r) {
  switch (r) {
    case GalaxyRelation::SameGalaxy: return "SameGalaxy";
    case GalaxyRelation::DifferentGalaxy: return "DifferentGalaxy";
    case GalaxyRelation::FilterDependent: return "FilterDependent";
  }
  return "?";
}

std::string GalaxyVerdict::bound_string() const {
  if (!bound) return "";
  if (rank == 1) return "w*" + std::to_string(bound->omega_coeff());
  return std::to_string(bound->finite_part());
}

GalaxyVerdict limitedly_distant(const Hypernode& x, const Hypernode& y, int rank) {
  check_rank(rank);
  require_maximal(x);
  require_maximal(y);
  auto d = hyperdistance(x, y);
  BranchVerdict e = branch_verdict(d.shape.even, rank), o = branch_verdict(d.shape.odd, rank);
  GalaxyVerdict out;
  out.rank = rank;
  switch (decide({e.same, o.same}, "limitedly_distant")) {
    case Trivalent::True: {
      out.relation = GalaxyRelation::SameGalaxy;
      auto k = static_cast<std::uint64_t>(std::max<std::int64_t>({e.bound, o.bound, 0}));
      out.bound = rank == 1 ? Ordinal::omega_multiple(k) : Ordinal::finite(k);
      break;
    }
    case Trivalent::False: out.relation = GalaxyRelation::DifferentGalaxy; break;
    case Trivalent::FilterDependent: out.relation = GalaxyRelation::FilterDependent; break;
  }
  return out;
}

GalaxyVerdict in_principal_galaxy(const Hypernode& x, int rank) { return limitedly_distant(x, anchor_of(x), rank); }

Trivalent closer_than(const Hypernode& base, const Hypernode& y, const Hypernode& z, int rank,
                      const std::optional<GrowthCertificate>& certificate, std::uint64_t horizon) {
  check_rank(rank);
  require_principal(base, rank);
  require_outside(y, rank);
  require_outside(z, rank);
  auto dy = hyperdistance(y, base), dz = hyperdistance(z, base);
  ByParity<Eventually> ev{farther(dy.shape.even, dz.shape.even, rank), farther(dy.shape.odd, dz.shape.odd, rank)};
  auto my = detail::manhattan_view(y, base), mz = detail::manhattan_view(z, base);
  if (my && mz) {
    Shape spread = Shape::bounded(-2 * my->slack, 2 * my->slack), zero = Shape::constant(0);
    auto branch = [&](const Shape& a, const Shape& b) { return farther({zero, zero}, {zero, (b - a) + spread}, rank); };
    ev = {branch(my->shape.even, mz->shape.even), branch(my->shape.odd, mz->shape.odd)};
  }
  if ((ev.even == Eventually::Unknown || ev.odd == Eventually::Unknown) && certificate) {
    validate(*certificate, base, y, z, rank, horizon);
    return Trivalent::True;
  }
  return decide(ev, "closer_than");
}

const GrowthCertificate& GalaxyChain::certificate(int i, int j) const {
  if (i >= j) throw DomainError("certificates run in index order");
  return steps.at(static_cast<std::size_t>(j - 1 + depth));
}

GalaxyChain build_galaxy_chain(const Hypernode& base, const Hypernode& seed, int depth, int rank) {
  check_rank(rank);
  if (depth < 0) throw ValidationError("chain depth must be nonnegative");
  if (rank == 0 && std::holds_alternative<OneGraph>(base.graph()))
    throw DomainError("rank 0 chains need a 0-graph");
  if (rank == 1 && std::holds_alternative<GraphInstance>(base.graph()))
    throw DomainError("rank 1 chains need a 1-graph");
  require_principal(base, rank);
  if (in_principal_galaxy(seed, rank).relation != GalaxyRelation::DifferentGalaxy)
    throw ConstructionError("seed " + seed.to_string() + " is not outside the principal galaxy");
  auto d = hyperdistance(seed, base);
  for (const auto* s : {&d.shape.even, &d.shape.odd})
    if (!(rank == 1 ? s->omega : s->finite).diverges_up() && !(rank == 0 && s->omega.diverges_up()))
      throw ConstructionError("seed distance class " + d.class_string() + " does not diverge");

  GalaxyChain chain{base, rank, depth, {}, {}};
  std::vector<Hypernode> below, above;
  std::vector<GrowthCertificate> below_steps, above_steps;
  Hypernode y = monotone_subsequence(base, seed, rank, d.shape.even, d.shape.odd);
  Hypernode cur = y;
  for (int i = 1; i <= depth; ++i) {
    auto step = compress(base, cur, rank, "compress^" + std::to_string(i) + "(" + seed.to_string() + ")");
    below.push_back(step.entry);
    below_steps.push_back(step.certificate);
    cur = step.entry;
  }
  cur = y;
  for (int i = 1; i <= depth; ++i) {
    auto step = expand(base, cur, rank, "expand^" + std::to_string(i) + "(" + seed.to_string() + ")");
    above.push_back(step.entry);
    above_steps.push_back(step.certificate);
    cur = step.entry;
  }
  for (auto it = below.rbegin(); it != below.rend(); ++it) chain.entries.push_back(*it);
  chain.entries.push_back(y);
  for (const auto& h : above) chain.entries.push_back(h);
  for (auto it = below_steps.rbegin(); it != below_steps.rend(); ++it) chain.steps.push_back(*it);
  for (const auto& c : above_steps) chain.steps.push_back(c);
  return chain;
}

ChainCheck verify_chain(const GalaxyChain& chain, std::uint64_t horizon) {
  ChainCheck out;
  for (int i = -chain.depth; i <= chain.depth; ++i)
    for (int j = i + 1; j <= chain.depth; ++j) {
      std::string pair = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      try {
        auto r = closer_than(chain.base, chain.at(i), chain.at(j), chain.rank, chain.certificate(i, j), horizon);
        if (r != Trivalent::True) out.failures.push_back(pair + ": " + to_string(r));
      } catch (const Error& e) {
        out.failures.push_back(pair + ": " + e.what());
      }
    }
  out.ok = out.failures.empty();
  return out;
}

namespace {

bool translation_invariant(Family f) {
  return f == Family::EndlessPath || f == Family::OneEndedPath || f == Family::Grid2D;
}

// Affine parameters (slope, offset) when the first terms step uniformly.
std::optional<std::pair<std::int64_t, std::int64_t>> uniform_step(const std::vector<std::int64_t>& v) {
  if (v.size() < 2) return std::nullopt;
  std::int64_t s = v[1] - v[0];
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] - v[i - 1] != s) return std::nullopt;
  return std::pair{s, v[0]};
}

constexpr std::size_t kStraightPrefix = 64;

}  // namespace

Hypernode konig_ray_witness(const GraphInstance& g, const NodeId& x0) {
  if (!g.locally_finite()) throw InapplicableError(std::string(name(g.family())) + " is not locally finite");
  if (!g.contains(x0)) throw DomainError(x0.to_string() + " is not a node of " + std::string(name(g.family())));
  auto dist = [g, x0](const NodeId& v) {
    auto d = distance(g, v, x0, 50'000'000);
    if (!d) throw UnsupportedOracleError("distance search exhausted");
    return *d;
  };
  GridBox box = g.family() == Family::PerturbedGrid ? g.collar_box() : GridBox{};
  // Inside the collar a node may be a dead end; accept a node only when an
  // outward path leads out of the box.
  auto escapes = [g, box, dist](const NodeId& v, std::uint64_t m) {
    std::set<NodeId, CanonicalLess> dead;
    std::function<bool(const NodeId&, std::uint64_t)> dfs = [&](const NodeId& u, std::uint64_t du) {
      if (box.empty() || !box.contains(u.a, u.b)) return true;
      if (dead.count(u)) return false;
      for (const auto& w : g.neighbors(u))
        if (dist(w) == du + 1 && dfs(w, du + 1)) return true;
      dead.insert(u);
      return false;
    };
    return dfs(v, m);
  };
  struct Walk {
    std::mutex mu;
    std::vector<NodeId> nodes;
  };
  auto walk = std::make_shared<Walk>();
  walk->nodes.push_back(x0);
  auto fn = [g, walk, dist, escapes](std::uint64_t n) {
    std::lock_guard lock(walk->mu);
    while (walk->nodes.size() <= n) {
      std::uint64_t m = walk->nodes.size() - 1;
      std::optional<NodeId> next;
      for (const auto& v : g.neighbors(walk->nodes.back()))
        if (dist(v) == m + 1 && escapes(v, m + 1)) {
          next = v;
          break;
        }
      if (!next) throw ConstructionError("shell-following ray is stuck at " + walk->nodes.back().to_string());
      walk->nodes.push_back(*next);
    }
    return walk->nodes[n];
  };
  std::string label = "konig(" + x0.to_string() + ")";
  if (translation_invariant(g.family())) {
    // The greedy choice repeats under translation, so a straight prefix is the whole ray.
    std::vector<std::int64_t> as, bs;
    for (std::size_t n = 0; n < kStraightPrefix; ++n) {
      NodeId v = fn(n);
      as.push_back(v.a);
      bs.push_back(v.b);
    }
    auto sa = uniform_step(as), sb = uniform_step(bs);
    if (sa && sb)
      return Hypernode::simple(g, x0.kind, IndexSequence::affine(sa->first, sa->second),
                               IndexSequence::affine(sb->first, sb->second));
  }
  auto c = static_cast<std::int64_t>(dist(g.anchor()));
  Shape finite = c == 0 ? Shape::affine(1, 0) : Shape::affine(1, 0) + Shape::bounded(-c, c);
  return Hypernode::derived(g, fn, label, ByParity<OrdinalShape>::both({Shape::constant(0), finite}));
}

namespace {

std::vector<NodeId> one_neighbors(const OneGraph& g, const NodeId& v) {
  std::set<NodeId, CanonicalLess> out;
  for (const auto& s : g.incident_sections(v)) {
    bool infinite = false;
    for (const auto& u : g.incident_one_nodes(s, 64, &infinite))
      if (u != v) out.insert(u);
    if (infinite) throw InapplicableError("section " + s.to_string() + " meets infinitely many 1-nodes");
  }
  return {out.begin(), out.end()};
}

// The layers X_0, X_1, ... of boundary 1-nodes and the picks of a one-ended 1-walk through them.
class BoundaryLayers {
 public:
  BoundaryLayers(OneGraph g, NodeId x0) : g_(std::move(g)), x0_(std::move(x0)) { picks_.push_back(x0_); }

  NodeId pick(std::size_t n) {
    std::lock_guard lock(mu_);
    while (picks_.size() <= n) {
      std::size_t k = picks_.size() - 1;
      const NodeId& prev = picks_.back();
      std::optional<NodeId> chosen;
      for (const auto& c : layer(k))
        if (adjacent(prev, c) && continues(c, k, kLookahead)) {
          chosen = c;
          break;
        }
      if (!chosen) throw ConstructionError("no boundary 1-node continues the walk at layer " + std::to_string(k));
      picks_.push_back(*chosen);
    }
    return picks_[n];
  }

 private:
  static constexpr int kLookahead = 4;

  bool adjacent(const NodeId& u, const NodeId& v) {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v, CanonicalLess{});
  }

  const std::vector<NodeId>& neighbors(const NodeId& v) {
    auto it = adj_.find(v);
    if (it == adj_.end()) it = adj_.emplace(v, one_neighbors(g_, v)).first;
    return it->second;
  }

  const std::vector<NodeId>& layer(std::size_t k) {
    while (layers_.size() <= k) {
      std::size_t i = layers_.size();
      std::set<NodeId, CanonicalLess> excluded{x0_};
      for (std::size_t l = 0; l + 1 < i; ++l) excluded.insert(layers_[l].begin(), layers_[l].end());
      std::set<NodeId, CanonicalLess> blocked(excluded);
      for (const auto& e : excluded)
        for (const auto& u : neighbors(e)) blocked.insert(u);
      std::set<NodeId, CanonicalLess> next;
      std::vector<NodeId> from = i == 0 ? std::vector<NodeId>{x0_} : layers_[i - 1];
      for (const auto& p : from)
        for (const auto& u : neighbors(p))
          if (g_.is_boundary(u) && (i == 0 || !blocked.count(u))) next.insert(u);
      if (i == 0) next.erase(x0_);
      if (next.empty()) throw ConstructionError("boundary layer " + std::to_string(i) + " is empty");
      layers_.emplace_back(next.begin(), next.end());
    }
    return layers_[k];
  }

  bool continues(const NodeId& c, std::size_t k, int depth) {
    if (depth == 0) return true;
    for (const auto& u : layer(k + 1))
      if (adjacent(c, u) && continues(u, k + 1, depth - 1)) return true;
    return false;
  }

  OneGraph g_;
  NodeId x0_;
  std::mutex mu_;
  std::vector<NodeId> picks_;
  std::vector<std::vector<NodeId>> layers_;
  std::map<NodeId, std::vector<NodeId>, CanonicalLess> adj_;
};

}  // namespace

Hypernode boundary_ray_witness(const OneGraph& g, const NodeId& x0) {
  if (!g.contains(x0) || !x0.is_one_node()) throw DomainError(x0.to_string() + " is not a 1-node");
  if (!g.is_locally_1_finite()) throw InapplicableError(std::string(name(g.family())) + " is not locally 1-finite");
  auto boundary = g.boundary_one_nodes(64);
  if (boundary.size() < 64) throw InapplicableError("too few boundary 1-nodes");
  boundary.push_back(x0);
  for (const auto& b : boundary)
    if (!g.tip_count(b)) throw InapplicableError(b.to_string() + " has infinitely many tips");
  auto layers = std::make_shared<BoundaryLayers>(g, x0);
  auto fn = [layers](std::uint64_t n) { return layers->pick(n); };
  if (g.family() == OneFamily::DiamondChain || g.family() == OneFamily::OnePathOfEndlessPaths) {
    // Both families are uniform strings of sections: a straight prefix repeats.
    std::vector<std::int64_t> as;
    bool ones = true;
    for (std::size_t n = 0; n < kStraightPrefix; ++n) {
      NodeId v = fn(n);
      ones = ones && v.kind == NodeKind::OneNode;
      as.push_back(v.a);
    }
    if (auto s = uniform_step(as); ones && s)
      return Hypernode::simple(g, NodeKind::OneNode, IndexSequence::affine(s->first, s->second));
  }
  return Hypernode::derived(g, fn, "boundary_ray(" + x0.to_string() + ")", far_profile(1));
}

PartialOrderReport verify_partial_order(const std::vector<Hypernode>& sample, const Hypernode& base, int rank) {
  PartialOrderReport out;
  std::size_t n = sample.size();
  out.closer.assign(n, std::vector<std::optional<Trivalent>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      try {
        out.closer[i][j] = closer_than(base, sample[i], sample[j], rank);
      } catch (const IndeterminateError&) {
      }
    }
  auto is = [&](std::size_t i, std::size_t j, Trivalent t) { return out.closer[i][j] == t; };
  for (std::size_t i = 0; i < n; ++i) {
    if (!is(i, i, Trivalent::False)) out.reflexive = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && is(i, j, Trivalent::True) && is(j, i, Trivalent::True)) out.antisymmetric = false;
      if (i < j && !is(i, j, Trivalent::True) && !is(j, i, Trivalent::True) &&
          !(is(i, j, Trivalent::False) && is(j, i, Trivalent::False)))
        out.incomparable.emplace_back(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (is(i, j, Trivalent::True) && is(j, k, Trivalent::True) && !is(i, k, Trivalent::True))
          out.transitive = false;
    }
  }
  return out;
}

}  // namespace enl
