#include "fixtures.hpp"

#include <fstream>
#include <sstream>

namespace curb::testing {

namespace {

lang::RuleSource read_source(const std::string& name) {
  std::ifstream in(data_path(name), std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return lang::RuleSource{buf.str()};
}

}  // namespace

lang::RuleSource rule110_source() { return read_source("rule110.curb"); }
lang::RuleSource life_source() { return read_source("life.curb"); }

std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("curb_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace curb::testing
