#ifndef DSG_FORMAT_HPP
#define DSG_FORMAT_HPP

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>
#include <system_error>

namespace dsg {

/// Shortest decimal text that parses back to exactly `x`.
inline std::string format_double(double x) {
  if (x == 0.0) return "0";  // folds -0
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

/// Parses the whole of `text` as a double; false on any trailing garbage.
inline bool parse_double(std::string_view text, double& out) {
  if (text.empty()) return false;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && end == text.data() + text.size() && std::isfinite(out);
}

}  // namespace dsg

#endif
