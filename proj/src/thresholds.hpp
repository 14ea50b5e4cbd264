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

#ifndef QFS_THRESHOLDS_HPP
#define QFS_THRESHOLDS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qfs {

// Exact rational evaluation of perfectoid pure thresholds for div(p) from
// quasi-F-splitting data. No floating point anywhere in results; decimal
// rendering is display-only.

using Rational = mpq_class;  // GMP keeps these canonical (gcd 1, den > 0)

std::string rational_str(const Rational& q);
/// Decimal rendering with the given number of significant digits
/// (display-only; results stay exact rationals).
std::string rational_decimal(const Rational& q, unsigned sig_digits = 12);

/// i_n = 1/p + ... + 1/p^n = (p^n - 1) / (p^n (p-1)); i_0 = 0.
Rational geometric_tail(std::uint32_t p, std::uint32_t n);

struct Interval {
  Rational lo, hi;
};

/// Height-n window: [1 - (p+...+p^(n-1))/(p^n-1), 1 - i_(n-1)].
Interval ppt_bounds(std::uint32_t p, std::uint32_t n);

/// Exact value 1 - i_(n-1) attained by quasi-(F,F^inf)-split rings of
/// height n.
Rational ppt_exact_ffinfty(std::uint32_t p, std::uint32_t n);

/// Exact value 1 - (p+...+p^(n-1))/(p^n-1) for graded complete
/// intersections with a-invariant zero and height n.
Rational ppt_exact_cy(std::uint32_t p, std::uint32_t n);

/// Eventually periodic splitting-depth sequence {n_i}: a finite preperiod
/// followed by a repeating period. Entries are >= 1.
struct DigitSequence {
  std::vector<std::uint32_t> preperiod;
  std::vector<std::uint32_t> period;  // nonempty
};

/// sum_{m>=1} a_m / p^m where a_m = p-1 when m is a cumulative sum of the
/// sequence and p-2 otherwise, evaluated in closed form.
Rational ppt_from_digits(std::uint32_t p, const DigitSequence& seq);

enum class PptKind { Exact, Interval, UpperBoundOnly, Unknown };

struct PptResult {
  PptKind kind = PptKind::Unknown;
  Rational lo, hi;  // Exact: lo == hi; UpperBoundOnly: hi only
  std::string justification;
  std::vector<std::string> depends_on;  // user assertions the value relies on
  std::string note;
};

enum class HeightClass { Finite, Infinite, Inconclusive };

/// Dispatch to the sharpest statement the computed data supports.
/// `ffinfty` is empty when the decision was not computed (e.g. infinite
/// height). `a_invariant` is present only for validated graded input.
PptResult ppt_report(std::uint32_t p, HeightClass height_class,
                     std::uint32_t height_value,
                     std::optional<bool> ffinfty,
                     std::optional<long> a_invariant,
                     bool complete_intersection_asserted);

}  // namespace qfs

#endif  // QFS_THRESHOLDS_HPP
