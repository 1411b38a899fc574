#pragma once

#include <cstddef>
#include <variant>
#include <vector>

namespace curb::model {

/// Ordered neighbor indices of one entity. Rules address neighbors by position.
struct Milieu {
  std::vector<std::size_t> neighbors;

  std::size_t size() const noexcept { return neighbors.size(); }
  friend bool operator==(const Milieu&, const Milieu&) = default;
};

struct RingTopology {
  std::size_t radius = 1;
  friend bool operator==(const RingTopology&, const RingTopology&) = default;
};

enum class Neighborhood { Moore, VonNeumann };

struct GridTopology {
  std::size_t width = 0;
  std::size_t height = 0;
  Neighborhood neighborhood = Neighborhood::Moore;
  bool wrap = true;
  friend bool operator==(const GridTopology&, const GridTopology&) = default;
};

struct ExplicitTopology {
  std::vector<std::vector<std::size_t>> adjacency;
  friend bool operator==(const ExplicitTopology&, const ExplicitTopology&) = default;
};

struct TopologySpec {
  std::variant<RingTopology, GridTopology, ExplicitTopology> shape;
  bool include_self = false;

  friend bool operator==(const TopologySpec&, const TopologySpec&) = default;
};

/// Materializes one milieu per entity.
///
/// Ring(r): [i-r, ..., i-1, i+1, ..., i+r] modulo n (self inserted in the
/// middle when include_self). Indices repeat when 2r >= n.
/// Grid2D: neighbors in row-major order of their offsets; without wrap,
/// off-grid neighbors are dropped, so edge milieus are shorter.
/// Explicit: the adjacency list as given.
///
/// Throws CountMismatch when the shape does not cover n entities and
/// ExplicitIndexOutOfRange for bad explicit indices (including a self
/// reference without include_self).
std::vector<Milieu> build_topology(const TopologySpec& spec, std::size_t n);

}  // namespace curb::model
