#include "curb/harness/trace.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "curb/error.hpp"

namespace curb::harness {

std::string format_trace(const model::Trajectory& trajectory) {
  std::string out;
  std::uint64_t t = trajectory.first_iteration;
  for (const StateVector& states : trajectory.iterations) {
    out += "t=";
    out += std::to_string(t++);
    out += " states=";
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (i > 0) out += ',';
      out += states[i].trace_text();
    }
    out += '\n';
  }
  return out;
}

void write_trace(const model::Trajectory& trajectory, const std::filesystem::path& path) {
  if (trajectory.iterations.empty()) throw Error(ErrorCode::Usage, "refusing to write an empty trajectory");
  write_text(path, format_trace(trajectory));
}

namespace {

template <typename Int>
Int parse_number(std::string_view s, std::size_t line) {
  Int v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorCode::IoError, "trace line " + std::to_string(line) + ": bad number \"" + std::string(s) + "\"");
  }
  return v;
}

}  // namespace

std::vector<TraceLine> parse_trace(std::string_view text) {
  std::vector<TraceLine> lines;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    constexpr std::string_view kStates = " states=";
    const auto sep = line.find(kStates);
    if (line.substr(0, 2) != "t=" || sep == std::string_view::npos) {
      throw Error(ErrorCode::IoError, "trace line " + std::to_string(line_no) + " is malformed");
    }
    TraceLine parsed;
    parsed.iteration = parse_number<std::uint64_t>(line.substr(2, sep - 2), line_no);
    std::string_view rest = line.substr(sep + kStates.size());
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      parsed.states.push_back(parse_number<std::int64_t>(rest.substr(0, comma), line_no));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    lines.push_back(std::move(parsed));
  }
  return lines;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "failed writing " + path.string());
}

}  // namespace curb::harness
