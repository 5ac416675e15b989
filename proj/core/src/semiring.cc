// core/src/semiring.cc
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

#include "cfst/semiring.h"

#include <charconv>
#include <system_error>

namespace cfst {

std::string TropicalWeight::to_string() const {
  if (is_zero()) return "Infinity";
  // std::to_chars with no precision argument emits the shortest decimal
  // that round-trips, so integers up to 2^53 come back bit-exact.
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value_);
  return std::string(buf, ptr);
}

TropicalWeight TropicalWeight::from_string(std::string_view text) {
  if (text == "Infinity") return zero();
  if (text.empty()) throw ParseError("empty weight");
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("malformed weight: \"" + std::string(text) + "\"");
  }
  return TropicalWeight(v);  // rejects negatives
}

}  // namespace cfst
