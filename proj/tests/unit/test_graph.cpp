#include <gtest/gtest.h>

#include <random>
#include <set>

#include "enl/errors.hpp"
#include "enl/graph.hpp"
#include "support/grid_oracle.hpp"

using namespace enl;

namespace {

const std::vector<Family> kClosedFamilies = {Family::EndlessPath, Family::OneEndedPath, Family::Ladder,
                                             Family::LadderWithRay, Family::Grid2D};

std::vector<NodeId> nodes_in_range(Family f, std::int64_t lo, std::int64_t hi) {
  std::vector<NodeId> out;
  for (std::int64_t k = lo; k <= hi; ++k) {
    switch (f) {
      case Family::EndlessPath:
      case Family::OneEndedPath: out.push_back(path_node(k)); break;
      case Family::Ladder: out.push_back(ladder_node(k)); break;
      case Family::LadderWithRay:
        out.push_back(ladder_node(k));
        if (k >= 1) out.push_back(ray_node(k));
        break;
      default: break;
    }
  }
  if (f == Family::Ladder || f == Family::LadderWithRay) out.push_back(ground_node());
  return out;
}

GridEdit add(std::int64_t ak, std::int64_t al, std::int64_t bk, std::int64_t bl) {
  return {GridEdit::Op::Add, ak, al, bk, bl};
}
GridEdit rem(std::int64_t ak, std::int64_t al, std::int64_t bk, std::int64_t bl) {
  return {GridEdit::Op::Remove, ak, al, bk, bl};
}

}  // namespace

TEST(Graph, CatalogNeighbors) {
  auto ladder = GraphInstance::make(Family::Ladder);
  EXPECT_EQ(ladder.neighbors(ladder_node(3)),
            (std::vector<NodeId>{ladder_node(2), ladder_node(4), ground_node()}));
  auto grid = GraphInstance::make(Family::Grid2D);
  auto n = grid.neighbors(grid_node(0, 0));
  std::set<NodeId, CanonicalLess> got(n.begin(), n.end());
  std::set<NodeId, CanonicalLess> want{grid_node(1, 0), grid_node(-1, 0), grid_node(0, 1), grid_node(0, -1)};
  EXPECT_EQ(got, want);
  auto path = GraphInstance::make(Family::EndlessPath);
  auto pn = path.neighbors(path_node(0));
  std::set<NodeId, CanonicalLess> pset(pn.begin(), pn.end());
  std::set<NodeId, CanonicalLess> pwant{path_node(-1), path_node(1)};
  EXPECT_EQ(pset, pwant);
  EXPECT_EQ(GraphInstance::make(Family::OneEndedPath).neighbors(path_node(0)), std::vector<NodeId>{path_node(1)});
}

TEST(Graph, GroundHasLazyInfiniteStream) {
  auto g = GraphInstance::make(Family::LadderWithRay);
  EXPECT_FALSE(g.locally_finite());
  EXPECT_THROW(g.neighbors(ground_node()), UnsupportedOracleError);
  auto s = g.neighbor_stream(ground_node());
  EXPECT_TRUE(s.infinite());
  EXPECT_EQ(*s.next(), ray_node(1));
  for (int k = 0; k < 100; ++k) EXPECT_EQ(*s.next(), ladder_node(k));
  EXPECT_TRUE(g.adjacent(ground_node(), ladder_node(1000000)));
  EXPECT_TRUE(g.adjacent(ladder_node(1000000), ground_node()));
}

TEST(Graph, DistanceExamples) {
  auto ladder = GraphInstance::make(Family::Ladder);
  EXPECT_EQ(distance(ladder, ladder_node(3), ladder_node(9), 1000), 2u);
  EXPECT_EQ(ladder.closed_form_distance(ladder_node(123456), ground_node()), 1u);
  auto path = GraphInstance::make(Family::EndlessPath);
  EXPECT_EQ(distance(path, path_node(-2), path_node(5), 1000), 7u);
  auto grid = GraphInstance::make(Family::Grid2D);
  EXPECT_EQ(distance(grid, grid_node(0, 0), grid_node(3, 4), 1000), 7u);
  auto ray = GraphInstance::make(Family::LadderWithRay);
  EXPECT_EQ(ray.closed_form_distance(ray_node(4), ladder_node(7)), 5u);
  EXPECT_EQ(GraphInstance::make(Family::OneEndedPath).closed_form_distance(path_node(2), path_node(2)), 0u);
}

TEST(Graph, GridClosedFormMatchesBruteForceBfs) {
  auto truncated = ref::truncation(Family::Grid2D, 10);
  EXPECT_EQ(truncated.bfs(grid_node(0, 0), grid_node(3, 4)), 7u);
}

TEST(Graph, NonMembersRejected) {
  auto g = GraphInstance::make(Family::OneEndedPath);
  EXPECT_THROW(g.closed_form_distance(path_node(-1), path_node(0)), DomainError);
  EXPECT_THROW(distance(g, grid_node(0, 0), path_node(0), 10), DomainError);
  EXPECT_THROW(g.neighbors(ray_node(1)), DomainError);
}

TEST(Graph, ClosedFormAgreesWithReferenceBfs) {
  for (Family f : kClosedFamilies) {
    auto g = GraphInstance::make(f);
    std::int64_t r = f == Family::Grid2D ? 8 : 30;
    auto model = ref::truncation(f, r + 2);
    std::vector<NodeId> sample;
    if (f == Family::Grid2D) {
      for (std::int64_t k = -r; k <= r; k += 2)
        for (std::int64_t l = -r; l <= r; l += 3) sample.push_back(grid_node(k, l));
    } else if (f == Family::EndlessPath) {
      sample = nodes_in_range(f, -15, 15);
    } else {
      sample = nodes_in_range(f, 0, 30);
    }
    for (const auto& x : sample)
      for (const auto& y : sample) {
        auto want = model.bfs(x, y);
        ASSERT_TRUE(want.has_value());
        ASSERT_EQ(g.closed_form_distance(x, y), *want) << name(f) << " " << x << " " << y;
      }
  }
}

TEST(Graph, LibraryBfsOnTruncationAgrees) {
  for (Family f : kClosedFamilies) {
    auto g = GraphInstance::make(f);
    auto sample = f == Family::Grid2D ? std::vector<NodeId>{grid_node(0, 0), grid_node(-5, 7), grid_node(6, 6)}
                                      : nodes_in_range(f, 0, 12);
    for (const auto& x : sample)
      for (const auto& y : sample) {
        auto d = bfs_distance(g, x, y, {1'000'000, 20});
        ASSERT_TRUE(d.has_value());
        EXPECT_EQ(*d, g.closed_form_distance(x, y)) << name(f) << " " << x << " " << y;
      }
  }
}

TEST(Graph, BfsThroughInfiniteDegreeReportsExhausted) {
  auto g = GraphInstance::make(Family::Ladder);
  EXPECT_FALSE(bfs_distance(g, ground_node(), ladder_node(40), {5000, std::nullopt}).has_value());
  auto path = GraphInstance::make(Family::EndlessPath);
  EXPECT_FALSE(bfs_distance(path, path_node(0), path_node(100000), {50, std::nullopt}).has_value());
  EXPECT_EQ(bfs_distance(path, path_node(0), path_node(10), {1000, std::nullopt}), 10u);
}

TEST(Graph, AdjacencyIsSymmetricOnSamples) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> d(0, 200), s(-200, 200);
  auto pert = GraphInstance::make(Family::PerturbedGrid, {add(0, 0, 3, 3), rem(1, 1, 1, 2), add(-2, 0, 2, 0)});
  for (Family f : kClosedFamilies) {
    auto g = GraphInstance::make(f);
    for (int i = 0; i < 1000; ++i) {
      NodeId x;
      switch (f) {
        case Family::EndlessPath: x = path_node(s(rng)); break;
        case Family::OneEndedPath: x = path_node(d(rng)); break;
        case Family::Ladder: x = ladder_node(d(rng)); break;
        case Family::LadderWithRay: x = i % 2 ? ladder_node(d(rng)) : ray_node(1 + d(rng)); break;
        default: x = grid_node(s(rng), s(rng)); break;
      }
      for (const auto& y : g.neighbors(x)) EXPECT_TRUE(g.adjacent(y, x)) << name(f) << " " << x << " " << y;
    }
  }
  std::uniform_int_distribution<std::int64_t> near(-4, 4);
  for (int i = 0; i < 1000; ++i) {
    NodeId x = grid_node(near(rng), near(rng));
    for (const auto& y : pert.neighbors(x)) EXPECT_TRUE(pert.adjacent(y, x)) << x << " " << y;
  }
}

TEST(Graph, FinitelyDispersedSamples) {
  auto ladder = GraphInstance::make(Family::Ladder);
  auto sample = nodes_in_range(Family::Ladder, 0, 50);
  EXPECT_EQ(is_finitely_dispersed(ladder, sample, 2), true);
  auto path = GraphInstance::make(Family::OneEndedPath);
  EXPECT_EQ(is_finitely_dispersed(path, nodes_in_range(Family::OneEndedPath, 0, 10), 5), false);
  EXPECT_EQ(is_finitely_dispersed(path, {path_node(4)}, 0), true);
}

TEST(Graph, MetricAxiomsOnRandomTriples) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> d(0, 1000), s(-1000, 1000);
  for (Family f : kClosedFamilies) {
    auto g = GraphInstance::make(f);
    auto draw = [&]() {
      switch (f) {
        case Family::EndlessPath: return path_node(s(rng));
        case Family::OneEndedPath: return path_node(d(rng));
        case Family::Ladder: return rng() % 5 ? ladder_node(d(rng)) : ground_node();
        case Family::LadderWithRay:
          return rng() % 3 == 0 ? ray_node(1 + d(rng)) : rng() % 4 ? ladder_node(d(rng)) : ground_node();
        default: return grid_node(s(rng), s(rng));
      }
    };
    for (int i = 0; i < 2000; ++i) {
      NodeId x = draw(), y = draw(), z = draw();
      auto dxy = g.closed_form_distance(x, y);
      EXPECT_EQ(g.closed_form_distance(x, x), 0u);
      EXPECT_EQ(dxy, g.closed_form_distance(y, x));
      EXPECT_LE(g.closed_form_distance(x, z), dxy + g.closed_form_distance(y, z));
      if (x != y) EXPECT_GT(dxy, 0u);
    }
  }
}

TEST(PerturbedGrid, EditValidation) {
  EXPECT_THROW(GraphInstance::make(Family::PerturbedGrid, {add(0, 0, 1, 0)}), ValidationError);
  EXPECT_THROW(GraphInstance::make(Family::PerturbedGrid, {add(0, 0, 0, 0)}), ValidationError);
  EXPECT_THROW(GraphInstance::make(Family::PerturbedGrid, {rem(0, 0, 2, 0)}), ValidationError);
  EXPECT_THROW(GraphInstance::make(Family::PerturbedGrid, {add(0, 0, 2, 2), add(2, 2, 0, 0)}), ValidationError);
  EXPECT_THROW(GraphInstance::make(Family::Grid2D, {add(0, 0, 2, 2)}), ValidationError);
  EXPECT_NO_THROW(GraphInstance::make(Family::PerturbedGrid, {rem(0, 0, 1, 0), add(0, 0, 1, 0)}));
}

TEST(PerturbedGrid, DisconnectingEditsRejected) {
  std::vector<GridEdit> isolate = {rem(0, 0, 1, 0), rem(0, 0, -1, 0), rem(0, 0, 0, 1), rem(0, 0, 0, -1)};
  EXPECT_THROW(GraphInstance::make(Family::PerturbedGrid, isolate), ConstructionError);
  isolate.push_back(add(0, 0, 5, 5));
  EXPECT_NO_THROW(GraphInstance::make(Family::PerturbedGrid, isolate));
}

TEST(PerturbedGrid, ExactDistanceMatchesReferenceBfs) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::int64_t> c(-3, 3);
  int built = 0;
  for (int trial = 0; trial < 60; ++trial) {
    ref::Adjacency model = ref::truncation(Family::Grid2D, 14);
    std::vector<GridEdit> edits;
    for (int e = 0; e < 6; ++e) {
      std::int64_t k = c(rng), l = c(rng);
      if (rng() % 2) {
        bool horiz = rng() % 2;
        edits.push_back(rem(k, l, k + horiz, l + !horiz));
      } else {
        edits.push_back(add(k, l, c(rng), c(rng)));
      }
    }
    GraphInstance g;
    try {
      g = GraphInstance::make(Family::PerturbedGrid, edits);
    } catch (const Error&) {
      continue;
    }
    ++built;
    for (const auto& e : edits) {
      NodeId a = grid_node(e.ak, e.al), b = grid_node(e.bk, e.bl);
      if (e.op == GridEdit::Op::Add) model.add(a, b);
      else model.remove(a, b);
    }
    EXPECT_FALSE(g.has_closed_form());
    EXPECT_THROW(g.closed_form_distance(grid_node(0, 0), grid_node(1, 1)), UnsupportedOracleError);
    std::uniform_int_distribution<std::int64_t> p(-7, 7);
    for (int q = 0; q < 40; ++q) {
      NodeId x = grid_node(p(rng), p(rng)), y = grid_node(p(rng), p(rng));
      auto got = distance(g, x, y, 1'000'000);
      ASSERT_TRUE(got.has_value());
      EXPECT_EQ(*got, *model.bfs(x, y)) << x << " " << y;
      auto bfs = bfs_distance(g, x, y, {1'000'000, std::nullopt});
      ASSERT_TRUE(bfs.has_value());
      EXPECT_EQ(*bfs, *got);
    }
  }
  EXPECT_GT(built, 20);
}

TEST(PerturbedGrid, FarPairsUseCompressedSearch) {
  auto g = GraphInstance::make(Family::PerturbedGrid, {rem(0, 0, 1, 0), rem(0, 1, 1, 1), rem(0, -1, 1, -1)});
  EXPECT_EQ(distance(g, grid_node(-1000000, 0), grid_node(1000000, 0), 100000), 2000004u);
  EXPECT_EQ(distance(g, grid_node(0, 0), grid_node(1, 0), 100000), 5u);
  EXPECT_EQ(distance(g, grid_node(0, 0), grid_node(1, 0), 0), std::nullopt);
}

TEST(PerturbedGrid, PristineAwayFromTheEdits) {
  auto g = GraphInstance::make(Family::PerturbedGrid,
                               {rem(0, 0, 1, 0), rem(0, 0, 0, 1), add(-1, -1, 2, 2), rem(2, 2, 2, 3)});
  auto grid = GraphInstance::make(Family::Grid2D);
  GridBox c = g.collar_box();
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::int64_t> p(-40, 40);
  int checked = 0;
  for (int i = 0; i < 3000; ++i) {
    NodeId x = grid_node(p(rng), p(rng)), y = grid_node(p(rng), p(rng));
    GridBox span{std::min(x.a, y.a), std::max(x.a, y.a), std::min(x.b, y.b), std::max(x.b, y.b)};
    bool disjoint = span.k1 < c.k0 || span.k0 > c.k1 || span.l1 < c.l0 || span.l0 > c.l1;
    if (!disjoint) continue;
    ++checked;
    EXPECT_EQ(distance(g, x, y, 1'000'000), grid.closed_form_distance(x, y)) << x << " " << y;
    for (const auto& n : g.neighbors(x))
      if (!c.contains(n.a, n.b) && !c.contains(x.a, x.b)) EXPECT_TRUE(grid.adjacent(x, n));
  }
  EXPECT_GT(checked, 1000);
}
