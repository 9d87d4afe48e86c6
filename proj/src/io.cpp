#include "hitset/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "hitset/error.hpp"

namespace hitset {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

// Non-empty lines after comment stripping, tokenized on blanks.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t t = 0;
    while (t < raw.size()) {
      while (t < raw.size() && (raw[t] == ' ' || raw[t] == '\t' || raw[t] == '\r')) ++t;
      std::size_t u = t;
      while (u < raw.size() && raw[u] != ' ' && raw[u] != '\t' && raw[u] != '\r') ++u;
      if (u > t) line.tokens.push_back(raw.substr(t, u - t));
      t = u;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return lines;
}

[[noreturn]] void fail(std::size_t line, const std::string& reason) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + reason, line);
}

double to_double(std::string_view token, std::size_t line) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value)) {
    fail(line, "expected a finite decimal number, got '" + std::string(token) + "'");
  }
  return value;
}

std::size_t to_count(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

void append_double(std::string& out, double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, ptr);
}

}  // namespace

RawInstance parse_instance(std::string_view text) {
  const auto lines = tokenize(text);
  const std::size_t last_line = lines.empty() ? 1 : lines.back().number;
  if (lines.empty()) fail(1, "missing header");

  const Line& header = lines[0];
  if (header.tokens.size() != 3 || header.tokens[0] != "hitset" || header.tokens[1] != "v1") {
    fail(header.number, "expected 'hitset v1 <mode>'");
  }
  RawInstance out;
  if (auto mode = parse_mode(header.tokens[2])) {
    out.mode = *mode;
  } else {
    fail(header.number, "unknown mode '" + std::string(header.tokens[2]) + "'");
  }

  if (lines.size() < 2) fail(last_line + 1, "missing '<n> <m>' line");
  const Line& counts = lines[1];
  if (counts.tokens.size() != 2) fail(counts.number, "expected '<n> <m>'");
  const std::size_t n = to_count(counts.tokens[0], counts.number);
  const std::size_t m = to_count(counts.tokens[1], counts.number);
  if (lines.size() - 2 < n + m) {
    fail(last_line + 1, "expected " + std::to_string(n) + " point lines and " + std::to_string(m) + " disk lines");
  }

  out.points.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Line& line = lines[2 + k];
    if (line.tokens.size() != 2) fail(line.number, "expected '<px> <py>'");
    out.points.push_back({to_double(line.tokens[0], line.number), to_double(line.tokens[1], line.number)});
  }
  out.disks.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Line& line = lines[2 + n + i];
    if (line.tokens.size() != 3) fail(line.number, "expected '<cx> <cy> <r>'");
    out.disks.push_back({to_double(line.tokens[0], line.number), to_double(line.tokens[1], line.number),
                         to_double(line.tokens[2], line.number)});
  }
  if (lines.size() > 2 + n + m) fail(lines[2 + n + m].number, "unexpected trailing content");
  return out;
}

std::string format_instance(const RawInstance& instance) {
  std::string out = "hitset v1 ";
  out += to_string(instance.mode);
  out += '\n';
  out += std::to_string(instance.points.size()) + ' ' + std::to_string(instance.disks.size()) + '\n';
  for (const Point& p : instance.points) {
    append_double(out, p.x);
    out += ' ';
    append_double(out, p.y);
    out += '\n';
  }
  for (const Disk& d : instance.disks) {
    append_double(out, d.cx);
    out += ' ';
    append_double(out, d.cy);
    out += ' ';
    append_double(out, d.r);
    out += '\n';
  }
  return out;
}

HittingSet parse_solution(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) fail(1, "missing solution size");
  if (lines[0].tokens.size() != 1) fail(lines[0].number, "expected '<k>'");
  const std::size_t k = to_count(lines[0].tokens[0], lines[0].number);
  HittingSet out;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    for (std::string_view tok : lines[l].tokens) {
      const std::size_t idx = to_count(tok, lines[l].number);
      if (idx == 0) fail(lines[l].number, "point indices are 1-based");
      if (!out.indices.empty() && idx <= out.indices.back()) fail(lines[l].number, "indices must be ascending");
      out.indices.push_back(idx);
    }
  }
  if (out.indices.size() != k) {
    fail(lines.back().number, "expected " + std::to_string(k) + " indices, got " + std::to_string(out.indices.size()));
  }
  return out;
}

std::string format_solution(const HittingSet& solution) {
  std::string out = std::to_string(solution.indices.size()) + '\n';
  for (std::size_t t = 0; t < solution.indices.size(); ++t) {
    if (t) out += ' ';
    out += std::to_string(solution.indices[t]);
  }
  out += '\n';
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::InvalidArgument, "failed writing '" + path + "'");
}

}  // namespace hitset
