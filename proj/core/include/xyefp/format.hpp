#ifndef XYEFP_FORMAT_HPP
#define XYEFP_FORMAT_HPP

#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

namespace xyefp {

// 17 significant digits, '.' decimal separator, locale-independent.
// Every numeric value emitted by the command-line tools goes through here so
// that output is byte-identical across runs and round-trips bit-exactly.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v,
                           std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

inline double parse_double(const std::string& s) {
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc())
    throw std::invalid_argument("not a number: " + s);
  return v;
}

}  // namespace xyefp

#endif
