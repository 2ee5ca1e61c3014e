#ifndef GRAPHEVO_TEXTIO_HPP
#define GRAPHEVO_TEXTIO_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace graphevo {

/// Parse failure in any of the line-oriented text formats. Carries the
/// 1-based line number when known (0 otherwise).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg
                                    : msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Shortest round-trip decimal representations (std::to_chars).
std::string fmt_double(double v);
std::string fmt_float(float v);
std::string fmt_i64(int64_t v);

double parse_double_exact(std::string_view s, int line);
float parse_float_exact(std::string_view s, int line);
int64_t parse_i64(std::string_view s, int line);
uint64_t parse_hex_u64(std::string_view s, int line);

std::vector<std::string_view> split_ws(std::string_view line);

/// Cursor over the non-empty, non-comment lines of a text blob. Lines are
/// whitespace-trimmed; `#` starts a comment line.
class LineCursor {
 public:
  explicit LineCursor(std::string_view text);
  bool done() const { return pos_ >= lines_.size(); }
  std::string_view peek() const;
  std::string_view take();
  int line_number() const;  // of the line just taken / about to be taken
  [[noreturn]] void fail(const std::string& msg) const;

 private:
  std::vector<std::pair<std::string_view, int>> lines_;
  size_t pos_ = 0;
};

}  // namespace graphevo

#endif
