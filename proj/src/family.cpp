#include "enl/family.hpp"

#include <array>
#include <string>
#include <utility>

#include "enl/errors.hpp"

namespace enl {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 6> kFamilies{{
    {Family::EndlessPath, "endless_path"},
    {Family::OneEndedPath, "one_ended_path"},
    {Family::Ladder, "ladder"},
    {Family::LadderWithRay, "ladder_with_ray"},
    {Family::Grid2D, "grid2d"},
    {Family::PerturbedGrid, "perturbed_grid"},
}};

constexpr std::array<std::pair<OneFamily, std::string_view>, 4> kOneFamilies{{
    {OneFamily::OnePathOfEndlessPaths, "one_path_of_endless_paths"},
    {OneFamily::LadderOfEndlessPaths, "ladder_of_endless_paths"},
    {OneFamily::PartialLadderOfEndlessPaths, "partial_ladder_of_endless_paths"},
    {OneFamily::DiamondChain, "diamond_chain"},
}};

}  // namespace

std::string_view name(Family f) {
  for (auto [k, v] : kFamilies)
    if (k == f) return v;
  return "?";
}

std::string_view name(OneFamily f) {
  for (auto [k, v] : kOneFamilies)
    if (k == f) return v;
  return "?";
}

bool is_family_name(std::string_view s) {
  for (auto [k, v] : kFamilies)
    if (v == s) return true;
  return false;
}

bool is_one_family_name(std::string_view s) {
  for (auto [k, v] : kOneFamilies)
    if (v == s) return true;
  return false;
}

Family parse_family(std::string_view s) {
  for (auto [k, v] : kFamilies)
    if (v == s) return k;
  throw ParseError("unknown graph family '" + std::string(s) + "'");
}

OneFamily parse_one_family(std::string_view s) {
  for (auto [k, v] : kOneFamilies)
    if (v == s) return k;
  throw ParseError("unknown 1-graph family '" + std::string(s) + "'");
}

bool is_member(Family f, const NodeId& x) {
  switch (f) {
    case Family::EndlessPath: return x.kind == NodeKind::Path;
    case Family::OneEndedPath: return x.kind == NodeKind::Path && x.a >= 0;
    case Family::Ladder:
      return (x.kind == NodeKind::Ladder && x.a >= 0) || x.kind == NodeKind::Ground;
    case Family::LadderWithRay:
      return (x.kind == NodeKind::Ladder && x.a >= 0) || x.kind == NodeKind::Ground ||
             (x.kind == NodeKind::Ray && x.a >= 1);
    case Family::Grid2D:
    case Family::PerturbedGrid: return x.kind == NodeKind::Grid;
  }
  return false;
}

bool is_member(OneFamily f, const NodeId& x) {
  switch (f) {
    case OneFamily::DiamondChain:
      switch (x.kind) {
        case NodeKind::DiamondJ:
        case NodeKind::DiamondL:
        case NodeKind::DiamondR: return x.a >= 0 && x.b >= 0;
        case NodeKind::OneNode: return x.a >= 0;
        default: return false;
      }
    case OneFamily::OnePathOfEndlessPaths:
      return x.kind == NodeKind::PathSection || x.kind == NodeKind::OneNode;
    case OneFamily::LadderOfEndlessPaths:
      switch (x.kind) {
        case NodeKind::Rung:
        case NodeKind::Rail:
        case NodeKind::OneNode: return x.a >= 0;
        case NodeKind::OneNodeGround: return true;
        default: return false;
      }
    case OneFamily::PartialLadderOfEndlessPaths:
      switch (x.kind) {
        case NodeKind::Rail:
        case NodeKind::OneNode:
        case NodeKind::Embedded: return x.a >= 0;
        case NodeKind::Ground: return true;
        default: return false;
      }
  }
  return false;
}

NodeId anchor(Family f) {
  switch (f) {
    case Family::EndlessPath:
    case Family::OneEndedPath: return path_node(0);
    case Family::Ladder:
    case Family::LadderWithRay: return ground_node();
    case Family::Grid2D:
    case Family::PerturbedGrid: return grid_node(0, 0);
  }
  return path_node(0);
}

NodeId anchor(OneFamily f) {
  (void)f;
  return one_node(0);
}

}  // namespace enl
