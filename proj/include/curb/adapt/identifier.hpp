#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "curb/lang/ast.hpp"

namespace curb::adapt {

/// Source of fresh names `identifier<n>`; n only ever grows.
class IdentifierCounter {
 public:
  IdentifierCounter() = default;
  explicit IdentifierCounter(std::uint64_t next) : next_(next) {}

  /// The counter just past every `identifier<n>` already bound in `program`.
  static IdentifierCounter after(const lang::Program& program);

  std::uint64_t next() const noexcept { return next_; }

  friend bool operator==(const IdentifierCounter&, const IdentifierCounter&) = default;

 private:
  friend std::string generate_identifier(IdentifierCounter& counter, std::string_view stem);

  std::uint64_t next_ = 0;
};

/// Returns `<stem><next>` and advances the counter. The stem is only ever
/// changed from "identifier" by tests probing the validator.
std::string generate_identifier(IdentifierCounter& counter, std::string_view stem = "identifier");

}  // namespace curb::adapt
