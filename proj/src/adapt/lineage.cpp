#include "curb/adapt/lineage.hpp"

#include <cstdio>

#include "curb/lang/render.hpp"

namespace curb::adapt {

std::uint64_t source_hash(const lang::Program& program) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : lang::render(program)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex_digest(std::uint64_t hash) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

std::string LineageRecord::line() const {
  return "gen=" + std::to_string(generation) + " parent=" + hex_digest(parent_hash) +
         " child=" + hex_digest(child_hash) + " op=" + std::string(to_string(op)) +
         " entity=" + (entity ? std::to_string(*entity) : std::string("shared")) + " seed=" + std::to_string(seed);
}

std::string RuleLineage::log() const {
  std::string out;
  for (const LineageRecord& r : records_) {
    out += r.line();
    out += '\n';
  }
  return out;
}

}  // namespace curb::adapt
