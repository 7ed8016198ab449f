// Copyright 2026 The pfkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pfkit/literal.hpp"

#include <charconv>
#include <cmath>
#include <vector>

#include "pfkit/error.hpp"

namespace pfkit {
namespace {

[[noreturn]] void fail(std::size_t column, const std::string& what) {
  throw Error(ErrorCode::kParseError, "column " + std::to_string(column) + ": " + what);
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// A real number with an optional leading sign; "" or a bare sign means a
// unit coefficient when `unit_ok`.
bool parse_real(std::string_view s, bool unit_ok, double& out) {
  double sign = 1.0;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    sign = s.front() == '-' ? -1.0 : 1.0;
    s.remove_prefix(1);
  }
  if (s.empty()) {
    out = sign;
    return unit_ok;
  }
  if (s.front() == '+' || s.front() == '-') return false;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || end != s.data() + s.size()) return false;
  out *= sign;
  return std::isfinite(out);
}

}  // namespace

Complex parse_complex(std::string_view text) {
  const std::string_view s = trim(text);
  const auto bad = [&] { fail(1, "malformed complex number \"" + std::string(text) + "\""); };
  if (s.empty()) bad();
  if (s.back() != 'i') {
    double re = 0.0;
    if (!parse_real(s, false, re)) bad();
    return {re, 0.0};
  }
  const std::string_view body = s.substr(0, s.size() - 1);
  // The imaginary part starts at the last sign that is not an exponent sign.
  std::size_t split = 0;
  for (std::size_t k = body.size(); k-- > 1;) {
    const char c = body[k];
    const char prev = body[k - 1];
    if ((c == '+' || c == '-') && prev != 'e' && prev != 'E') {
      split = k;
      break;
    }
  }
  double re = 0.0;
  double im = 0.0;
  if (split > 0 && !parse_real(body.substr(0, split), false, re)) bad();
  if (!parse_real(body.substr(split), true, im)) bad();
  return {re, im};
}

Mat2 parse_matrix_literal(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> rows;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= text.size(); ++k) {
    if (k == text.size() || text[k] == ';') {
      rows.emplace_back(start, text.substr(start, k - start));
      start = k + 1;
    }
  }
  if (rows.size() != 2) fail(1, "expected 2 rows separated by ';', got " + std::to_string(rows.size()));
  Complex v[2][2];
  for (std::size_t r = 0; r < 2; ++r) {
    const auto [offset, row] = rows[r];
    std::size_t begin = 0;
    std::size_t c = 0;
    for (std::size_t k = 0; k <= row.size(); ++k) {
      if (k != row.size() && row[k] != ',') continue;
      const std::size_t column = offset + begin + 1;
      if (c >= 2) fail(column, "row " + std::to_string(r + 1) + " has more than 2 entries");
      try {
        v[r][c] = parse_complex(row.substr(begin, k - begin));
      } catch (const Error&) {
        fail(column, "malformed entry \"" + std::string(trim(row.substr(begin, k - begin))) + "\"");
      }
      ++c;
      begin = k + 1;
    }
    if (c != 2) fail(offset + 1, "row " + std::to_string(r + 1) + " needs 2 entries");
  }
  return {v[0][0], v[0][1], v[1][0], v[1][1]};
}

std::string format_double(double v, int precision) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, precision);
  return {buf, res.ptr};
}

}  // namespace pfkit
