#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "curb/error.hpp"
#include "curb/lang/lexer.hpp"

#ifndef CURB_TEST_DATA_DIR
#error "CURB_TEST_DATA_DIR must be defined"
#endif

namespace curb::testing {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(CURB_TEST_DATA_DIR) / name;
}

lang::RuleSource rule110_source();
lang::RuleSource life_source();

/// Fresh empty directory under the system temp dir.
std::filesystem::path scratch_dir(const std::string& name);

/// Runs `fn` and returns the code of the curb::Error it throws; fails the
/// caller's expectation via a sentinel when nothing is thrown.
template <typename Fn>
std::optional<ErrorCode> error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace curb::testing
