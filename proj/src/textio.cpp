#include "graphevo/textio.hpp"

#include <charconv>

namespace graphevo {

std::string fmt_double(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string fmt_float(float v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string fmt_i64(int64_t v) { return std::to_string(v); }

namespace {

template <typename T>
T parse_number(std::string_view s, int line, const char* what) {
  T value{};
  auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ParseError(std::string("expected ") + what + ", got '" +
                         std::string(s) + "'",
                     line);
  }
  return value;
}

}  // namespace

double parse_double_exact(std::string_view s, int line) {
  return parse_number<double>(s, line, "a real number");
}

float parse_float_exact(std::string_view s, int line) {
  return parse_number<float>(s, line, "a real number");
}

int64_t parse_i64(std::string_view s, int line) {
  return parse_number<int64_t>(s, line, "an integer");
}

uint64_t parse_hex_u64(std::string_view s, int line) {
  uint64_t value = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), value, 16);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ParseError("expected a hex word, got '" + std::string(s) + "'",
                     line);
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

LineCursor::LineCursor(std::string_view text) {
  int number = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t nl = text.find('\n', start);
    std::string_view raw = text.substr(
        start, nl == std::string_view::npos ? text.size() - start : nl - start);
    ++number;
    std::string_view line = trim(raw);
    if (!line.empty() && line[0] != '#') lines_.emplace_back(line, number);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
}

std::string_view LineCursor::peek() const {
  if (done()) fail("unexpected end of input");
  return lines_[pos_].first;
}

std::string_view LineCursor::take() {
  std::string_view line = peek();
  ++pos_;
  return line;
}

int LineCursor::line_number() const {
  if (pos_ > 0) return lines_[pos_ - 1].second;
  return lines_.empty() ? 0 : lines_[0].second;
}

void LineCursor::fail(const std::string& msg) const {
  throw ParseError(msg, line_number());
}

}  // namespace graphevo
