#include "upk/sequence_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "upk/errors.hpp"

namespace upk {
namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

RequestSequence parse_sequence(std::string_view text) {
  std::vector<double> sizes;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    double v = 0.0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
    if (ec != std::errc{} || ptr != line.data() + line.size()) {
      throw ParseError("line " + std::to_string(line_no) + ": not a number: '" +
                       std::string(line) + "'");
    }
    if (!(std::isfinite(v) && v > 0.0 && v <= 1.0)) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": size must lie in (0, 1], got " + std::string(line));
    }
    sizes.push_back(v);
  }
  return RequestSequence(std::move(sizes));
}

RequestSequence read_sequence_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open sequence file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sequence(buf.str());
}

void write_sequence(std::ostream& out, const RequestSequence& seq) {
  for (double x : seq) out << format_double(x) << '\n';
}

void write_sequence_file(const std::filesystem::path& path,
                         const RequestSequence& seq) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write sequence file " + path.string());
  write_sequence(out, seq);
}

}  // namespace upk
