#include "enl/jobs.hpp"

#include <atomic>
#include <chrono>
#include <map>
#include <sstream>
#include <thread>

#include "enl/errors.hpp"
#include "enl/galaxy.hpp"
#include "enl/literal.hpp"
#include "enl/oracle.hpp"
#include "enl/sampling.hpp"
#include "ultrapower_internal.hpp"

namespace enl {

using nlohmann::json;

namespace {

struct Signature {
  std::vector<std::string> required;
  std::vector<std::string> optional;
};

const std::map<std::string, Signature>& signatures() {
  static const std::map<std::string, Signature> table = {
      {"distance", {{"x", "y"}, {}}},
      {"wdistance", {{"x", "y"}, {}}},
      {"classify", {{"x"}, {"y", "rank"}}},
      {"closer", {{"y", "z"}, {"base", "rank"}}},
      {"chain", {{"seed"}, {"base", "m", "rank"}}},
      {"witness", {{}, {"x0"}}},
      {"check", {{"suite"}, {}}},
      {"describe", {{}, {"x"}}},
  };
  return table;
}

const std::vector<std::string> kCommon = {"graph", "command", "id", "seed", "budget", "horizon"};

bool is_operand(const std::string& key) {
  return key == "x" || key == "y" || key == "z" || key == "base" || key == "seed" || key == "x0";
}

void type_check(const json& job) {
  if (!job.is_object()) throw ParseError("job must be an object");
  if (!job.contains("command") || !job["command"].is_string()) throw ParseError("job needs a \"command\" string");
  if (!job.contains("graph")) throw ParseError("job needs a \"graph\" descriptor");
  std::string cmd = job["command"];
  auto it = signatures().find(cmd);
  if (it == signatures().end()) throw ParseError("unknown command '" + cmd + "'");
  const Signature& sig = it->second;
  for (const auto& key : sig.required)
    if (!job.contains(key)) throw ParseError(cmd + " needs \"" + key + "\"");
  for (const auto& [key, value] : job.items()) {
    bool known = std::count(kCommon.begin(), kCommon.end(), key) ||
                 std::count(sig.required.begin(), sig.required.end(), key) ||
                 std::count(sig.optional.begin(), sig.optional.end(), key);
    if (!known) throw ParseError(cmd + " does not take \"" + key + "\"");
    if (key == "seed" && cmd != "chain") {
      if (!value.is_number_unsigned()) throw ParseError("seed must be a nonnegative integer");
    } else if (is_operand(key)) {
      if (!value.is_string() && !value.is_object()) throw ParseError("\"" + key + "\" must be a literal or an object");
    } else if (key == "rank") {
      if (!value.is_number_integer() || (value != 0 && value != 1)) throw ParseError("rank must be 0 or 1");
    } else if (key == "m" || key == "budget" || key == "horizon") {
      if (!value.is_number_unsigned()) throw ParseError("\"" + key + "\" must be a nonnegative integer");
    } else if (key == "suite" || key == "command") {
      if (!value.is_string()) throw ParseError("\"" + key + "\" must be a string");
    }
  }
}

std::optional<NodeId> as_node(const json& j) {
  if (!j.is_string()) return std::nullopt;
  try {
    return NodeId::parse(j.get<std::string>());
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

int default_rank(const GraphRef& g) { return std::holds_alternative<OneGraph>(g) ? 1 : 0; }

Hypernode anchor_hypernode(const GraphRef& g) { return Hypernode::standard(g, graph_anchor(g)); }

json ordinals(const Hyperordinal& h, std::uint64_t count) {
  json out = json::array();
  for (std::uint64_t n = 0; n < count; ++n) out.push_back(h.at(n).to_string());
  return out;
}

json verdict_json(const GalaxyVerdict& v) {
  json out{{"relation", to_string(v.relation)}, {"rank", v.rank}};
  if (v.bound) out["bound"] = v.bound_string();
  return out;
}

int caveat(Trivalent t) { return t == Trivalent::FilterDependent ? 2 : 0; }

constexpr std::uint64_t kPrefix = 8;

json cmd_distance(const GraphRef& g, const json& job, const RunOptions& o, int& exit) {
  auto x = as_node(job["x"]), y = as_node(job["y"]);
  if (x && y) {
    if (const auto* one = std::get_if<OneGraph>(&g)) return {{"distance", wdistance(*one, *x, *y).to_string()}};
    auto d = distance(std::get<GraphInstance>(g), *x, *y, o.budget);
    if (!d) {
      exit = 2;
      return {{"distance", nullptr}, {"exhausted", true}};
    }
    return {{"distance", std::to_string(*d)}};
  }
  auto h = hyperdistance(hypernode_from_json(g, job["x"]), hypernode_from_json(g, job["y"]));
  return {{"class", h.class_string()}, {"prefix", ordinals(h, kPrefix)}};
}

json cmd_wdistance(const GraphRef& g, const json& job, const RunOptions& o, int& exit) {
  const auto* one = std::get_if<OneGraph>(&g);
  if (!one) throw DomainError("wdistance needs a 1-graph");
  auto x = as_node(job["x"]), y = as_node(job["y"]);
  if (!x || !y) return cmd_distance(g, job, o, exit);
  auto walk = wdistance_search(*one, *x, *y);
  json steps = json::array();
  for (const auto& s : walk.witness)
    steps.push_back({{"from", s.from.to_string()},
                     {"to", s.to.to_string()},
                     {"section", s.section.to_string()},
                     {"length", s.length.to_string()}});
  return {{"wdistance", walk.length.to_string()}, {"witness", steps}};
}

json cmd_classify(const GraphRef& g, const json& job, int& exit) {
  int rank = job.value("rank", default_rank(g));
  Hypernode x = hypernode_from_json(g, job["x"]);
  Hypernode y = job.contains("y") ? hypernode_from_json(g, job["y"]) : anchor_hypernode(g);
  auto v = limitedly_distant(x, y, rank);
  if (v.relation == GalaxyRelation::FilterDependent) exit = 2;
  json out = verdict_json(v);
  out["against"] = job.contains("y") ? y.to_string() : "anchor " + graph_anchor(g).to_string();
  out["class"] = hyperdistance(x, y).class_string();
  return out;
}

json cmd_closer(const GraphRef& g, const json& job, const RunOptions& o, int& exit) {
  int rank = job.value("rank", default_rank(g));
  Hypernode base = job.contains("base") ? hypernode_from_json(g, job["base"]) : anchor_hypernode(g);
  auto r = closer_than(base, hypernode_from_json(g, job["y"]), hypernode_from_json(g, job["z"]), rank, std::nullopt,
                       o.horizon);
  exit = caveat(r);
  return {{"closer", to_string(r)}, {"base", base.to_string()}, {"rank", rank}};
}

json cmd_chain(const GraphRef& g, const json& job, const RunOptions& o, int& exit) {
  int rank = job.value("rank", default_rank(g));
  int m = job.value("m", 1);
  Hypernode base = job.contains("base") ? hypernode_from_json(g, job["base"]) : anchor_hypernode(g);
  auto chain = build_galaxy_chain(base, hypernode_from_json(g, job["seed"]), m, rank);
  auto check = verify_chain(chain, o.horizon);
  json entries = json::array();
  for (int i = -m; i <= m; ++i) {
    json coeffs = json::array();
    for (std::uint64_t n = 0; n < kPrefix; ++n)
      coeffs.push_back(detail::point_distance(g, chain.at(i).at(n), base.at(n)).to_string());
    entries.push_back({{"index", i}, {"hypernode", chain.at(i).to_string()}, {"distances", coeffs}});
  }
  if (!check.ok) exit = 1;
  return {{"entries", entries},
          {"pairs", m * (2 * m + 1)},
          {"ordered", check.ok},
          {"failures", check.failures},
          {"base", base.to_string()},
          {"rank", rank}};
}

json cmd_witness(const GraphRef& g, const json& job) {
  NodeId x0 = job.contains("x0") ? NodeId::parse(job["x0"].get<std::string>()) : graph_anchor(g);
  bool rank1 = std::holds_alternative<OneGraph>(g);
  Hypernode h = rank1 ? boundary_ray_witness(std::get<OneGraph>(g), x0)
                      : konig_ray_witness(std::get<GraphInstance>(g), x0);
  json nodes = json::array(), dists = json::array();
  for (std::uint64_t n = 0; n < 2 * kPrefix; ++n) {
    nodes.push_back(h.at(n).to_string());
    dists.push_back(detail::point_distance(g, h.at(n), x0).to_string());
  }
  auto v = limitedly_distant(h, Hypernode::standard(g, x0), rank1 ? 1 : 0);
  return {{"kind", rank1 ? "boundary" : "konig"},
          {"x0", x0.to_string()},
          {"hypernode", h.to_string()},
          {"prefix", nodes},
          {"distances", dists},
          {"principal", verdict_json(v)}};
}

json cmd_check(const GraphRef& g, const json& job, const RunOptions& o, int& exit) {
  std::string suite = job["suite"];
  auto outcomes = run_check_suite(g, suite, o);
  json checks = json::array();
  bool pass = true;
  for (const auto& c : outcomes) {
    json item{{"name", c.name}, {"pass", c.pass}, {"cases", c.cases}};
    if (!c.pass) item["counterexample"] = c.counterexample;
    checks.push_back(item);
    pass = pass && c.pass;
  }
  if (!pass) exit = 1;
  return {{"suite", suite}, {"pass", pass}, {"checks", checks}};
}

json cmd_describe(const GraphRef& g, const json& job) {
  json out{{"graph", describe(g)}, {"anchor", graph_anchor(g).to_string()}, {"rank", default_rank(g)}};
  std::optional<NodeId> x;
  if (job.contains("x")) {
    x = as_node(job["x"]);
    if (!x) throw ParseError("describe takes a node literal");
    if (!graph_contains(g, *x)) throw DomainError(x->to_string() + " is not a node of " + describe(g));
  }
  if (const auto* gi = std::get_if<GraphInstance>(&g)) {
    out["locally_finite"] = gi->locally_finite();
    out["closed_form"] = gi->has_closed_form();
    if (x) {
      json nb = json::array();
      auto stream = gi->neighbor_stream(*x);
      for (int i = 0; i < 16; ++i) {
        auto v = stream.next();
        if (!v) break;
        nb.push_back(v->to_string());
      }
      out["node"] = x->to_string();
      out["neighbors"] = nb;
      out["finite_degree"] = gi->has_finite_degree(*x);
    }
    return out;
  }
  const auto& one = std::get<OneGraph>(g);
  out["locally_1_finite"] = one.is_locally_1_finite();
  json boundary = json::array();
  for (const auto& b : one.boundary_one_nodes(6)) boundary.push_back(b.to_string());
  out["boundary_sample"] = boundary;
  if (x) {
    out["node"] = x->to_string();
    if (x->is_one_node()) {
      json tips = json::array();
      for (const auto& t : one.tips(*x, 8)) tips.push_back(t.to_string());
      out["tips"] = tips;
      auto count = one.tip_count(*x);
      out["tip_count"] = count ? json(*count) : json("infinite");
      out["boundary"] = one.is_boundary(*x);
    } else {
      out["maximal"] = one.is_maximal(*x);
      if (one.is_maximal(*x)) out["section"] = one.section_of(*x).to_string();
    }
  }
  return out;
}

std::string error_type(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const ValidationError*>(&e)) return "ValidationError";
  if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
  if (dynamic_cast<const ConstructionError*>(&e)) return "ConstructionError";
  if (dynamic_cast<const OverflowError*>(&e)) return "OverflowError";
  if (dynamic_cast<const UnsupportedOracleError*>(&e)) return "UnsupportedOracleError";
  if (dynamic_cast<const InapplicableError*>(&e)) return "InapplicableError";
  if (dynamic_cast<const UnreachableError*>(&e)) return "UnreachableError";
  if (dynamic_cast<const NotAHyperbranchError*>(&e)) return "NotAHyperbranchError";
  if (dynamic_cast<const json::exception*>(&e)) return "ParseError";
  return "Error";
}

std::string status_of(int exit, const json& result) {
  if (exit == 0) return "ok";
  if (exit == 1) return "fail";
  if (result.value("exhausted", false)) return "exhausted";
  return "filter_dependent";
}

}  // namespace

Report run_job(const json& job, const RunOptions& options) {
  auto start = std::chrono::steady_clock::now();
  Report r;
  r.body = {{"job", job}};
  try {
    type_check(job);
    RunOptions o = options;
    if (job["command"] != "chain") o.seed = job.value("seed", options.seed);
    o.budget = job.value("budget", options.budget);
    o.horizon = job.value("horizon", options.horizon);
    GraphRef g = parse_graph(job["graph"]);
    std::string cmd = job["command"];
    int exit = 0;
    json result;
    if (cmd == "distance") result = cmd_distance(g, job, o, exit);
    else if (cmd == "wdistance") result = cmd_wdistance(g, job, o, exit);
    else if (cmd == "classify") result = cmd_classify(g, job, exit);
    else if (cmd == "closer") result = cmd_closer(g, job, o, exit);
    else if (cmd == "chain") result = cmd_chain(g, job, o, exit);
    else if (cmd == "witness") result = cmd_witness(g, job);
    else if (cmd == "check") result = cmd_check(g, job, o, exit);
    else result = cmd_describe(g, job);
    r.exit_code = exit;
    r.body["status"] = status_of(exit, result);
    r.body["result"] = result;
  } catch (const IndeterminateError& e) {
    r.exit_code = 2;
    r.body["status"] = "indeterminate";
    r.body["error"] = {{"type", "IndeterminateError"}, {"message", e.what()}};
  } catch (const std::exception& e) {
    r.exit_code = 1;
    r.body["status"] = "error";
    r.body["error"] = {{"type", error_type(e)}, {"message", e.what()}};
  }
  r.body["exit"] = r.exit_code;
  r.body["wall_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<Report> run_batch(const json& jobs, const RunOptions& options, unsigned threads) {
  if (!jobs.is_array()) throw ParseError("job file must hold a JSON array");
  std::vector<Report> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      out[i] = run_job(jobs[i], options);
      out[i].body["index"] = i;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, threads); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

int batch_exit_code(const std::vector<Report>& reports) {
  int code = 0;
  for (const auto& r : reports) {
    if (r.exit_code == 1) return 1;
    code = std::max(code, r.exit_code);
  }
  return code;
}

// ---------------------------------------------------------------- suites

namespace {

CheckOutcome outcome(std::string name) { return {std::move(name), true, 0, ""}; }

void fail(CheckOutcome& c, const std::string& what) {
  if (c.pass) c.counterexample = what;
  c.pass = false;
}

std::vector<CheckOutcome> metric_suite(const GraphRef& g, const RunOptions& o) {
  Rng rng(o.seed);
  auto identity = outcome("identity"), symmetry = outcome("symmetry"), triangle = outcome("triangle");
  if (const auto* one = std::get_if<OneGraph>(&g)) {
    for (int i = 0; i < 200; ++i) {
      NodeId x = random_node(g, rng, 6), y = random_node(g, rng, 6), z = random_node(g, rng, 6);
      Ordinal xy = wdistance(*one, x, y), yx = wdistance(*one, y, x), yz = wdistance(*one, y, z),
              xz = wdistance(*one, x, z);
      std::string triple = x.to_string() + " " + y.to_string() + " " + z.to_string();
      ++identity.cases, ++symmetry.cases, ++triangle.cases;
      if (!wdistance(*one, x, x).is_zero() || (x != y && xy.is_zero())) fail(identity, triple);
      if (xy != yx) fail(symmetry, triple);
      if (xz > natural_sum(xy, yz)) fail(triangle, triple + ": " + xz.to_string() + " > " + xy.to_string() + " # " + yz.to_string());
    }
    return {identity, symmetry, triangle};
  }
  const auto& gi = std::get<GraphInstance>(g);
  auto exhausted = outcome("exhausted-free");
  for (int i = 0; i < 1000; ++i) {
    NodeId x = random_node(g, rng, 12), y = random_node(g, rng, 12), z = random_node(g, rng, 12);
    auto xy = distance(gi, x, y, o.budget), yx = distance(gi, y, x, o.budget), yz = distance(gi, y, z, o.budget),
         xz = distance(gi, x, z, o.budget), xx = distance(gi, x, x, o.budget);
    std::string triple = x.to_string() + " " + y.to_string() + " " + z.to_string();
    ++exhausted.cases;
    if (!xy || !yx || !yz || !xz || !xx) {
      fail(exhausted, triple);
      continue;
    }
    ++identity.cases, ++symmetry.cases, ++triangle.cases;
    if (*xx != 0 || (x != y && *xy == 0)) fail(identity, triple);
    if (*xy != *yx) fail(symmetry, triple);
    if (*xz > *xy + *yz) fail(triangle, triple);
  }
  return {identity, symmetry, triangle, exhausted};
}

std::optional<GalaxyRelation> relation(const Hypernode& x, const Hypernode& y, int rank) {
  try {
    return limitedly_distant(x, y, rank).relation;
  } catch (const IndeterminateError&) {
    return std::nullopt;
  }
}

std::vector<CheckOutcome> partition_suite(const GraphRef& g, const RunOptions& o) {
  Rng rng(o.seed);
  int rank = default_rank(g);
  std::vector<Hypernode> hs;
  for (int i = 0; i < 30; ++i) hs.push_back(random_hypernode(g, rng));
  std::size_t n = hs.size();
  std::vector<std::vector<std::optional<GalaxyRelation>>> rel(n, std::vector<std::optional<GalaxyRelation>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = relation(hs[i], hs[j], rank);
  auto refl = outcome("reflexive"), sym = outcome("symmetric"), trans = outcome("transitive"),
       anchor = outcome("anchor-independent");
  const auto same = GalaxyRelation::SameGalaxy, diff = GalaxyRelation::DifferentGalaxy;
  for (std::size_t i = 0; i < n; ++i) {
    ++refl.cases;
    if (rel[i][i] != same) fail(refl, hs[i].to_string());
    for (std::size_t j = 0; j < n; ++j) {
      ++sym.cases;
      if (rel[i][j] != rel[j][i]) fail(sym, hs[i].to_string() + " ~ " + hs[j].to_string());
      if (rel[i][j] != same) continue;
      for (std::size_t k = 0; k < n; ++k) {
        ++trans.cases;
        if ((rel[j][k] == same && rel[i][k] != same) || (rel[j][k] == diff && rel[i][k] != diff))
          fail(trans, hs[i].to_string() + " ~ " + hs[j].to_string() + " vs " + hs[k].to_string());
      }
    }
    Hypernode other = Hypernode::standard(g, random_node(g, rng, 20));
    auto a = relation(hs[i], anchor_hypernode(g), rank), b = relation(hs[i], other, rank);
    ++anchor.cases;
    if (a != b) fail(anchor, hs[i].to_string() + " against " + other.to_string());
  }
  return {refl, sym, trans, anchor};
}

std::optional<Hypernode> witness_seed(const GraphRef& g) {
  try {
    if (const auto* one = std::get_if<OneGraph>(&g)) return boundary_ray_witness(*one, one->anchor());
    return konig_ray_witness(std::get<GraphInstance>(g), graph_anchor(g));
  } catch (const InapplicableError&) {
    return std::nullopt;
  }
}

std::vector<CheckOutcome> order_suite(const GraphRef& g, const RunOptions& o) {
  Rng rng(o.seed);
  int rank = default_rank(g);
  Hypernode base = anchor_hypernode(g);
  std::vector<Hypernode> outside;
  for (int i = 0; i < 200 && outside.size() < 8; ++i) {
    Hypernode h = random_hypernode(g, rng);
    auto r = relation(h, base, rank);
    if (r == GalaxyRelation::DifferentGalaxy) outside.push_back(h);
  }
  auto laws = outcome("partial-order"), chain = outcome("chain");
  laws.cases = outside.size();
  if (!outside.empty()) {
    auto report = verify_partial_order(outside, base, rank);
    if (!report.reflexive) fail(laws, "reflexivity");
    if (!report.antisymmetric) fail(laws, "antisymmetry");
    if (!report.transitive) fail(laws, "transitivity");
  }
  auto seed = witness_seed(g);
  if (!seed && !outside.empty()) seed = outside.front();
  if (seed) {
    try {
      auto c = build_galaxy_chain(base, *seed, 2, rank);
      auto check = verify_chain(c, std::min<std::uint64_t>(o.horizon, 128));
      chain.cases = 10;
      if (!check.ok) fail(chain, check.failures.front());
    } catch (const ConstructionError& e) {
      fail(chain, e.what());
    }
  }
  return {laws, chain};
}

std::vector<CheckOutcome> walk_oracle_suite(const GraphRef& g, const RunOptions& o) {
  Rng rng(o.seed);
  if (const auto* gi = std::get_if<GraphInstance>(&g)) {
    auto agree = outcome("distance-vs-bfs");
    for (int i = 0; i < 300; ++i) {
      NodeId x = random_node(g, rng, 10), y = random_node(g, rng, 10);
      auto d = distance(*gi, x, y, o.budget);
      auto b = bfs_distance(*gi, x, y,
                            {o.budget, gi->locally_finite() ? std::nullopt : std::optional<std::int64_t>(16)});
      ++agree.cases;
      if (d != b) fail(agree, x.to_string() + " " + y.to_string());
    }
    return {agree};
  }
  const auto& one = std::get<OneGraph>(g);
  Truncation t;
  if (one.family() == OneFamily::OnePathOfEndlessPaths) t.lo = -6;
  auto nodes = truncated_nodes(one, t);
  std::vector<NodeId> named;
  for (const auto& v : nodes)
    if (v.is_one_node() || (v.kind == NodeKind::DiamondJ && v.b == 0)) named.push_back(v);
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (const auto& x : named)
    for (const auto& y : named) pairs.emplace_back(x, y);
  for (int i = 0; i < 200; ++i) pairs.emplace_back(nodes[rng() % nodes.size()], nodes[rng() % nodes.size()]);
  auto enumeration = outcome("search-vs-enumeration"), closed = outcome("search-vs-closed-form");
  for (const auto& [x, y] : pairs) {
    auto walk = wdistance_search(one, x, y).length;
    ++closed.cases;
    if (walk != wdistance(one, x, y)) fail(closed, x.to_string() + " " + y.to_string());
    auto e = enumerate_walk_distance(one, x, y, t);
    if (!e) continue;
    ++enumeration.cases;
    bool within = walk.omega_coeff() <= t.max_tau1 && walk.finite_part() <= t.max_tau0;
    if (within ? *e != walk : *e < walk) fail(enumeration, x.to_string() + " " + y.to_string() + ": " + e->to_string() + " vs " + walk.to_string());
  }
  return {enumeration, closed};
}

std::vector<CheckOutcome> kernel_suite(const RunOptions& o) {
  Rng rng(o.seed);
  auto classes = outcome("predicate-classes"), complements = outcome("complements"),
       trichotomy = outcome("trichotomy");
  std::vector<std::pair<TruthSet, Trivalent>> sets;
  for (std::uint64_t k : {0u, 1u, 5u, 17u, 100u}) {
    sets.emplace_back(TruthSet::at_least(k), Trivalent::True);
    sets.emplace_back(TruthSet::below(k), Trivalent::False);
  }
  sets.emplace_back(TruthSet::evens(), Trivalent::FilterDependent);
  sets.emplace_back(TruthSet::odds(), Trivalent::FilterDependent);
  for (const auto& [set, expected] : sets) {
    ++classes.cases, ++complements.cases;
    auto a = in_filter(set), b = in_filter(set.complement());
    if (a != expected) fail(classes, to_string(a) + " expected " + to_string(expected));
    if (a == Trivalent::True && b == Trivalent::True) fail(complements, "both true");
    if (a == Trivalent::False && b == Trivalent::False) fail(complements, "both false");
  }
  for (int i = 0; i < 300; ++i) {
    auto x = Hyperordinal::from_sequences(random_sequence(rng, 0), random_sequence(rng, 0));
    auto y = Hyperordinal::from_sequences(random_sequence(rng, 0), random_sequence(rng, 0));
    HyperComparison c;
    try {
      c = compare_hyperordinals(x, y);
    } catch (const IndeterminateError&) {
      continue;
    }
    ++trichotomy.cases;
    int trues = (c.less == Trivalent::True) + (c.equal == Trivalent::True) + (c.greater == Trivalent::True);
    if (trues != (c.result ? 1 : 0)) fail(trichotomy, "verdict count " + std::to_string(trues));
  }
  return {classes, complements, trichotomy};
}

}  // namespace

std::vector<CheckOutcome> run_check_suite(const GraphRef& g, const std::string& suite, const RunOptions& options) {
  if (suite == "metric") return metric_suite(g, options);
  if (suite == "galaxy-partition") return partition_suite(g, options);
  if (suite == "order") return order_suite(g, options);
  if (suite == "walk-oracle") return walk_oracle_suite(g, options);
  if (suite == "kernel") return kernel_suite(options);
  throw ParseError("unknown suite '" + suite + "'");
}

std::string table_header() {
  std::ostringstream os;
  os << std::left;
  os.width(6);
  os << "job";
  os.width(11);
  os << "command";
  os.width(18);
  os << "status";
  os << "summary";
  return os.str();
}

std::string table_row(const Report& r) {
  const json& b = r.body;
  std::string cmd = b["job"].is_object() ? b["job"].value("command", "?") : "?";
  std::string summary;
  if (b.contains("error")) {
    summary = b["error"]["type"].get<std::string>() + ": " + b["error"]["message"].get<std::string>();
  } else {
    const json& res = b["result"];
    for (const char* key : {"distance", "wdistance", "relation", "bound", "class", "closer", "ordered", "pass",
                            "hypernode", "graph"}) {
      if (!res.contains(key)) continue;
      if (!summary.empty()) summary += "  ";
      summary += std::string(key) + "=" + (res[key].is_string() ? res[key].get<std::string>() : res[key].dump());
    }
  }
  std::ostringstream os;
  os << std::left;
  os.width(6);
  os << b.value("index", 0);
  os.width(11);
  os << cmd;
  os.width(18);
  os << b.value("status", "?");
  os << summary;
  return os.str();
}

}  // namespace enl
