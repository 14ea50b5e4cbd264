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

#include "thresholds.hpp"

#include <numeric>

#include "context.hpp"

namespace qfs {

namespace {

mpz_class pow_z(std::uint32_t p, std::uint64_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

}  // namespace

std::string rational_str(const Rational& q) {
  return q.get_str();
}

std::string rational_decimal(const Rational& q, unsigned sig_digits) {
  if (sgn(q) == 0) return "0";
  mpz_class num = abs(q.get_num());
  mpz_class den = q.get_den();
  std::string sign = sgn(q) < 0 ? "-" : "";

  mpz_class ip = num / den;
  mpz_class rem = num % den;
  std::string int_part = ip.get_str();
  unsigned used = (ip == 0) ? 0 : static_cast<unsigned>(int_part.size());

  std::string frac;
  unsigned leading_zeros_pending = 0;
  while (rem != 0 && used < sig_digits) {
    rem *= 10;
    mpz_class digit = rem / den;
    rem %= den;
    char d = static_cast<char>('0' + digit.get_ui());
    if (used == 0 && d == '0') {
      ++leading_zeros_pending;
      frac += d;
      continue;
    }
    frac += d;
    ++used;
  }
  (void)leading_zeros_pending;
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  if (frac.empty()) return sign + int_part;
  return sign + int_part + "." + frac;
}

Rational geometric_tail(std::uint32_t p, std::uint32_t n) {
  if (n == 0) return Rational(0);
  mpz_class pn = pow_z(p, n);
  Rational r(pn - 1, pn * (p - 1));
  r.canonicalize();
  return r;
}

Interval ppt_bounds(std::uint32_t p, std::uint32_t n) {
  if (n < 1) throw InputError("height must be >= 1");
  return Interval{ppt_exact_cy(p, n), ppt_exact_ffinfty(p, n)};
}

Rational ppt_exact_ffinfty(std::uint32_t p, std::uint32_t n) {
  if (n < 1) throw InputError("height must be >= 1");
  return Rational(1) - geometric_tail(p, n - 1);
}

Rational ppt_exact_cy(std::uint32_t p, std::uint32_t n) {
  if (n < 1) throw InputError("height must be >= 1");
  if (n == 1) return Rational(1);
  // p + ... + p^(n-1) = p (p^(n-1) - 1) / (p - 1)
  mpz_class numerator = p * (pow_z(p, n - 1) - 1);
  Rational s(numerator, (pow_z(p, n) - 1) * (p - 1));
  s.canonicalize();
  return Rational(1) - s;
}

Rational ppt_from_digits(std::uint32_t p, const DigitSequence& seq) {
  if (seq.period.empty())
    throw InputError("digit sequence needs a nonempty period");
  for (auto v : seq.preperiod)
    if (v < 1) throw InputError("digit sequence entries must be >= 1");
  for (auto v : seq.period)
    if (v < 1) throw InputError("digit sequence entries must be >= 1");

  // Digits a_m over one block: p-1 at cumulative sums, p-2 elsewhere.
  auto block_value = [&](const std::vector<std::uint32_t>& ns) {
    // sum over m = 1..S of a_m / p^m where S = sum(ns) and the p-1 digits
    // sit at partial sums of ns.
    Rational acc(0);
    std::uint64_t pos = 0;
    std::uint64_t s = std::accumulate(ns.begin(), ns.end(), std::uint64_t{0});
    std::vector<bool> hit(s + 1, false);
    for (auto v : ns) {
      pos += v;
      hit[pos] = true;
    }
    for (std::uint64_t m = 1; m <= s; ++m) {
      Rational digit(hit[m] ? p - 1 : p - 2);
      Rational term = digit / Rational(pow_z(p, m));
      term.canonicalize();
      acc += term;
    }
    return acc;
  };

  std::uint64_t pre_len = std::accumulate(seq.preperiod.begin(),
                                          seq.preperiod.end(),
                                          std::uint64_t{0});
  std::uint64_t per_len = std::accumulate(seq.period.begin(),
                                          seq.period.end(), std::uint64_t{0});
  Rational pre = block_value(seq.preperiod);
  Rational per = block_value(seq.period);

  // value = pre + p^(-pre_len) * per / (1 - p^(-per_len))
  Rational scale(1, pow_z(p, pre_len));
  scale.canonicalize();
  Rational tail_factor(pow_z(p, per_len), pow_z(p, per_len) - 1);
  tail_factor.canonicalize();
  Rational r = pre + scale * per * tail_factor;
  r.canonicalize();
  return r;
}

PptResult ppt_report(std::uint32_t p, HeightClass height_class,
                     std::uint32_t height_value,
                     std::optional<bool> ffinfty,
                     std::optional<long> a_invariant,
                     bool complete_intersection_asserted) {
  PptResult r;
  if (height_class == HeightClass::Inconclusive) {
    r.kind = PptKind::Unknown;
    r.justification = "height computation inconclusive";
    return r;
  }
  if (!complete_intersection_asserted) {
    r.kind = PptKind::Unknown;
    r.justification = "no complete-intersection assertion";
    r.note =
        "every exact statement used here assumes a complete intersection; "
        "assert complete_intersection to enable threshold output";
    return r;
  }
  r.depends_on.push_back("complete_intersection");

  if (height_class == HeightClass::Infinite) {
    r.kind = PptKind::UpperBoundOnly;
    r.hi = Rational(p - 2, p - 1);
    r.hi.canonicalize();
    r.justification = "not quasi-F-split";
    r.note = "if the ring is perfectoid pure at all, the threshold cannot "
             "exceed (p-2)/(p-1)";
    return r;
  }

  const std::uint32_t n = height_value;
  const bool cy = a_invariant.has_value() && *a_invariant == 0;
  if (ffinfty.has_value() && *ffinfty) {
    r.kind = PptKind::Exact;
    r.lo = r.hi = ppt_exact_ffinfty(p, n);
    r.justification = "quasi-(F,F^inf)-split of height " + std::to_string(n);
    if (cy && n >= 2)
      r.note = "warning: a zero a-invariant would force the opposite "
               "digit extreme; check the input assertions";
    return r;
  }
  if (cy) {
    r.kind = PptKind::Exact;
    r.lo = r.hi = ppt_exact_cy(p, n);
    r.justification = "graded complete intersection with a-invariant 0, "
                      "height " + std::to_string(n);
    r.depends_on.push_back("graded input with a = 0");
    return r;
  }
  Interval b = ppt_bounds(p, n);
  r.kind = PptKind::Interval;
  r.lo = b.lo;
  r.hi = b.hi;
  r.justification = "height " + std::to_string(n) + " window";
  return r;
}

}  // namespace qfs
