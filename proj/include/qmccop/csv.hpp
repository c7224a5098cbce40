#pragma once

#include <charconv>
#include <ostream>
#include <string>

namespace qmccop {

// Shortest decimal string that round-trips the double exactly (up to 17
// significant digits), locale independent, '.' decimal separator.
inline std::string format_double(double x) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, p);
}

inline void write_csv_row(std::ostream& os, const double* row, int k) {
  for (int j = 0; j < k; ++j) {
    if (j) os << ',';
    os << format_double(row[j]);
  }
  os << '\n';
}

}  // namespace qmccop
