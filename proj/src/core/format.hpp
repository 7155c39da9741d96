// Copyright 2026 the fusegraph authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FUSEGRAPH_CORE_FORMAT_HPP
#define FUSEGRAPH_CORE_FORMAT_HPP

#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

namespace fusegraph {

// Locale-independent, shortest round-trip decimal form. All numeric output
// (CSV cells, JSON fields) goes through this so reports are byte-stable.
inline std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

// Strict double parse over the whole token; returns false on trailing junk.
inline bool parse_double(const std::string& token, double& out) {
  const char* first = token.data();
  const char* last = first + token.size();
  auto res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last;
}

inline bool parse_int(const std::string& token, int& out) {
  const char* first = token.data();
  const char* last = first + token.size();
  auto res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last;
}

}  // namespace fusegraph

#endif  // FUSEGRAPH_CORE_FORMAT_HPP
