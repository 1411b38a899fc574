#include "curb/model/topology.hpp"

#include <string>
#include <type_traits>

#include "curb/error.hpp"

namespace curb::model {

namespace {

std::vector<Milieu> ring(const RingTopology& r, bool include_self, std::size_t n) {
  std::vector<Milieu> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& nb = out[i].neighbors;
    for (std::size_t d = r.radius; d >= 1; --d) nb.push_back((i + n - d % n) % n);
    if (include_self) nb.push_back(i);
    for (std::size_t d = 1; d <= r.radius; ++d) nb.push_back((i + d) % n);
  }
  return out;
}

std::vector<Milieu> grid(const GridTopology& g, bool include_self, std::size_t n) {
  if (g.width == 0 || g.height == 0 || g.width * g.height != n) {
    throw Error(ErrorCode::CountMismatch, "grid " + std::to_string(g.width) + "x" + std::to_string(g.height) +
                                              " does not hold " + std::to_string(n) + " entities");
  }
  const auto w = static_cast<long long>(g.width);
  const auto h = static_cast<long long>(g.height);
  std::vector<Milieu> out(n);
  for (long long y = 0; y < h; ++y) {
    for (long long x = 0; x < w; ++x) {
      auto& nb = out[static_cast<std::size_t>(y * w + x)].neighbors;
      for (long long dy = -1; dy <= 1; ++dy) {
        for (long long dx = -1; dx <= 1; ++dx) {
          const bool self = dx == 0 && dy == 0;
          if (self && !include_self) continue;
          if (g.neighborhood == Neighborhood::VonNeumann && dx != 0 && dy != 0) continue;
          long long nx = x + dx;
          long long ny = y + dy;
          if (g.wrap) {
            nx = (nx + w) % w;
            ny = (ny + h) % h;
          } else if (nx < 0 || nx >= w || ny < 0 || ny >= h) {
            continue;
          }
          nb.push_back(static_cast<std::size_t>(ny * w + nx));
        }
      }
    }
  }
  return out;
}

std::vector<Milieu> explicit_adjacency(const ExplicitTopology& e, bool include_self, std::size_t n) {
  if (e.adjacency.size() != n) {
    throw Error(ErrorCode::CountMismatch, "explicit adjacency has " + std::to_string(e.adjacency.size()) +
                                              " rows for " + std::to_string(n) + " entities");
  }
  std::vector<Milieu> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : e.adjacency[i]) {
      if (j >= n) {
        throw Error(ErrorCode::ExplicitIndexOutOfRange,
                    "entity " + std::to_string(i) + " lists neighbor " + std::to_string(j) + " of " +
                        std::to_string(n));
      }
      if (j == i && !include_self) {
        throw Error(ErrorCode::ExplicitIndexOutOfRange,
                    "entity " + std::to_string(i) + " lists itself but include_self is false");
      }
    }
    out[i].neighbors = e.adjacency[i];
  }
  return out;
}

}  // namespace

std::vector<Milieu> build_topology(const TopologySpec& spec, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::CountMismatch, "topology needs at least one entity");
  return std::visit(
      [&](const auto& shape) -> std::vector<Milieu> {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, RingTopology>) return ring(shape, spec.include_self, n);
        else if constexpr (std::is_same_v<T, GridTopology>) return grid(shape, spec.include_self, n);
        else return explicit_adjacency(shape, spec.include_self, n);
      },
      spec.shape);
}

}  // namespace curb::model
