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

// Text forms of complex numbers and 2x2 matrices used on the command line:
// entries like `0.5+0.866i`, rows separated by ';', entries by ','.

#ifndef PFKIT_LITERAL_HPP_
#define PFKIT_LITERAL_HPP_

#include <string>
#include <string_view>

#include "pfkit/mat2.hpp"

namespace pfkit {

// Throws kParseError.
Complex parse_complex(std::string_view text);

// "a,b;c,d". Throws kParseError naming the column of the offending entry.
Mat2 parse_matrix_literal(std::string_view text);

// Shortest round-trip decimal form, locale independent. Infinities print
// as "inf" / "-inf".
std::string format_double(double v, int precision = 17);

}  // namespace pfkit

#endif  // PFKIT_LITERAL_HPP_
