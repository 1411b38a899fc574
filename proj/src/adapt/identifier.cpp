#include "curb/adapt/identifier.hpp"

#include <algorithm>
#include <charconv>

#include "curb/lang/lexer.hpp"

namespace curb::adapt {

namespace {

void scan(const lang::Block& block, std::uint64_t& next) {
  constexpr std::string_view stem = lang::Vocabulary::kIdentifierStem;
  for (const lang::Stmt& s : block) {
    if (s.kind == lang::StmtKind::Let && lang::Vocabulary::is_generated_identifier(s.name)) {
      std::uint64_t n = 0;
      const char* first = s.name.data() + stem.size();
      const char* last = s.name.data() + s.name.size();
      auto [ptr, ec] = std::from_chars(first, last, n);
      if (ec == std::errc() && ptr == last && n != UINT64_MAX) next = std::max(next, n + 1);
    }
    if (s.kind == lang::StmtKind::If) {
      scan(s.then_block, next);
      scan(s.else_block, next);
    }
  }
}

}  // namespace

IdentifierCounter IdentifierCounter::after(const lang::Program& program) {
  std::uint64_t next = 0;
  scan(program.statements, next);
  return IdentifierCounter(next);
}

std::string generate_identifier(IdentifierCounter& counter, std::string_view stem) {
  return std::string(stem) + std::to_string(counter.next_++);
}

}  // namespace curb::adapt
