#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace curb::testing {

/// Elementary CA from its Wolfram rule number: table[p] is the next state for
/// neighborhood p = left*4 + center*2 + right.
class ElementaryCa {
 public:
  explicit ElementaryCa(unsigned rule);

  const std::array<int, 8>& table() const noexcept { return table_; }
  std::vector<int> step(const std::vector<int>& cells) const;
  /// Rows 0..steps.
  std::vector<std::vector<int>> run(std::vector<int> cells, std::size_t steps) const;

 private:
  std::array<int, 8> table_{};
};

/// Conway's Life on a wrapped width x height board, row-major.
std::vector<int> life_step(const std::vector<int>& board, std::size_t width, std::size_t height);
std::vector<std::vector<int>> life_run(std::vector<int> board, std::size_t width, std::size_t height,
                                       std::size_t steps);

/// Board shifted by (dx, dy) with wraparound.
std::vector<int> shifted(const std::vector<int>& board, std::size_t width, std::size_t height, std::size_t dx,
                         std::size_t dy);

}  // namespace curb::testing
