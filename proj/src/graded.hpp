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

#ifndef QFS_GRADED_HPP
#define QFS_GRADED_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "poly.hpp"
#include "thresholds.hpp"

namespace qfs {

/// User assertions about the input ring. The tool records them and
/// conditions its conclusions on them; it does not verify them.
struct Assertions {
  bool complete_intersection = false;
  bool normal = false;
  bool quasi_gorenstein = false;
  bool sfr_punctured = false;  // strongly F-regular punctured spectrum

  std::vector<std::string> listed() const {
    std::vector<std::string> out;
    if (complete_intersection) out.push_back("complete_intersection");
    if (normal) out.push_back("normal");
    if (quasi_gorenstein) out.push_back("quasi_gorenstein");
    if (sfr_punctured) out.push_back("sfr_punctured");
    return out;
  }
};

/// Positive weights per variable plus the weighted degrees of the
/// defining equations (validated against the lifts).
struct Grading {
  std::vector<std::uint64_t> weights;
  std::vector<std::uint64_t> degrees;
};

struct HomogeneityCheck {
  bool ok = false;
  std::uint64_t degree = 0;
  std::string error;
};

/// Common weighted degree of all monomials of f, or a failure naming two
/// monomials of different degree. f must be nonzero.
HomogeneityCheck check_homogeneous(const Poly& f,
                                   const std::vector<std::uint64_t>& weights);

/// a-invariant of the special fiber via the complete-intersection formula
/// sum(degrees) - sum(weights).
long a_invariant(const Grading& grading);

enum class Regime { Positive, CalabiYau, Fano };

struct Conclusion {
  std::string text;
  std::vector<std::string> depends_on;  // empty = unconditional
  bool conditional = false;  // true when stated hypotheses were not asserted
};

struct GradedReport {
  long a = 0;
  Regime regime = Regime::Fano;
  std::vector<Conclusion> conclusions;
  bool consistency_failure = false;
  std::string failure_text;
};

/// Regime dispatch for graded input. `height_class`/`height_value` come
/// from the ideal-chain computation; conclusions degrade to conditionals
/// when their hypotheses were not asserted.
GradedReport graded_dispatch(long a, HeightClass height_class,
                             std::uint32_t height_value, std::uint32_t p,
                             const Assertions& asserts);

}  // namespace qfs

#endif  // QFS_GRADED_HPP
