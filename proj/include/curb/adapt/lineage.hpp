#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curb/adapt/mutation.hpp"
#include "curb/lang/ast.hpp"

namespace curb::adapt {

/// 64-bit FNV-1a of the canonical rendering of a program.
std::uint64_t source_hash(const lang::Program& program);

std::string hex_digest(std::uint64_t hash);

/// One adaptation event.
struct LineageRecord {
  std::uint64_t generation = 0;
  std::uint64_t parent_hash = 0;
  std::uint64_t child_hash = 0;
  MutationOperator op = MutationOperator::SubstituteLiteral;
  std::optional<std::size_t> entity;  // nullopt: shared rule source
  std::uint64_t seed = 0;
  std::uint64_t iteration = 0;  // first iteration computed with the child rules
  MutationDescriptor descriptor;

  /// `gen=<n> parent=<hash> child=<hash> op=<operator> entity=<index|shared> seed=<s>`
  std::string line() const;

  friend bool operator==(const LineageRecord&, const LineageRecord&) = default;
};

/// Append-only history of rule versions.
class RuleLineage {
 public:
  void append(LineageRecord record) { records_.push_back(std::move(record)); }

  const std::vector<LineageRecord>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }

  /// One line per record, newline-terminated.
  std::string log() const;

  friend bool operator==(const RuleLineage&, const RuleLineage&) = default;

 private:
  std::vector<LineageRecord> records_;
};

}  // namespace curb::adapt
