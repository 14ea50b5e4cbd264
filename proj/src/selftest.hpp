/*
   Copyright 2026 The qfs authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QFS_SELFTEST_HPP
#define QFS_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qfs {

/// Randomized property suite for the Witt-vector kernel. Deterministic
/// for a fixed seed.
struct SelftestResult {
  bool passed = false;
  std::uint64_t trials = 0;
  std::vector<std::string> lines;  // one line per property
  std::string summary() const;
};

/// Documented operating range: p = 2 allows length <= 4; p in {3, 5}
/// allow length <= 3. Throws InputError outside the range.
void check_selftest_range(std::uint32_t p, std::uint32_t length);

SelftestResult witt_selftest(std::uint32_t p, std::uint32_t length,
                             std::uint32_t trials, std::uint64_t seed);

}  // namespace qfs

#endif  // QFS_SELFTEST_HPP
