#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "curb/model/system.hpp"

namespace curb::harness {

/// `t=<n> states=<v0>,<v1>,...` per iteration, newline-terminated. Booleans
/// are written as 0/1.
std::string format_trace(const model::Trajectory& trajectory);

/// Writes the trace; throws Usage for an empty trajectory (nothing is
/// written) and IoError when the file cannot be written.
void write_trace(const model::Trajectory& trajectory, const std::filesystem::path& path);

struct TraceLine {
  std::uint64_t iteration = 0;
  std::vector<std::int64_t> states;

  friend bool operator==(const TraceLine&, const TraceLine&) = default;
};

/// Inverse of format_trace; throws IoError on malformed lines.
std::vector<TraceLine> parse_trace(std::string_view text);

/// Whole-file read; throws IoError.
std::string read_text(const std::filesystem::path& path);

/// Writes text verbatim; throws IoError.
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace curb::harness
