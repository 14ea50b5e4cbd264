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

#ifndef QFS_CONTEXT_HPP
#define QFS_CONTEXT_HPP

#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qfs {

/// Malformed user input: bad expression text, invalid configuration,
/// violated preconditions that the caller controls.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Violated internal invariant. Seeing this means a bug in the engine,
/// never a property of the input.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured work budget ran out before the computation finished.
/// Callers translate this into an explicit "inconclusive" outcome.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shared step counter for Groebner-basis work. One budget covers a whole
/// pipeline run so that runaway instances stop instead of spinning.
struct Budget {
  std::uint64_t limit = 1'000'000;
  std::uint64_t used = 0;

  void charge(std::uint64_t n = 1) {
    used += n;
    if (used > limit)
      throw ResourceLimitError("step budget exceeded (" +
                               std::to_string(limit) + " steps)");
  }
};

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  auto tail = [&](char c) {
    return head(c) || (c >= '0' && c <= '9') || c == '\'';
  };
  if (!head(s[0])) return false;
  for (char c : s.substr(1))
    if (!tail(c)) return false;
  return true;
}

/// Fixed prime and variable set shared by every polynomial of one
/// computation. Immutable after construction.
struct PrimeContext {
  std::uint32_t p;
  std::vector<std::string> names;

  PrimeContext(std::uint32_t p_, std::vector<std::string> names_)
      : p(p_), names(std::move(names_)) {
    if (p < 2 || p > 97 || !is_prime_u32(p))
      throw InputError("p must be a prime with 2 <= p <= 97, got " +
                       std::to_string(p));
    if (names.empty()) throw InputError("at least one variable is required");
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!is_identifier(names[i]))
        throw InputError("invalid variable name '" + names[i] + "'");
      for (std::size_t j = i + 1; j < names.size(); ++j)
        if (names[i] == names[j])
          throw InputError("duplicate variable name '" + names[i] + "'");
    }
  }

  std::uint32_t nvars() const {
    return static_cast<std::uint32_t>(names.size());
  }

  int var_index(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    return -1;
  }

  friend bool operator==(const PrimeContext& a, const PrimeContext& b) {
    return a.p == b.p && a.names == b.names;
  }
};

using Ctx = std::shared_ptr<const PrimeContext>;

inline Ctx make_context(std::uint32_t p, std::vector<std::string> names) {
  return std::make_shared<const PrimeContext>(p, std::move(names));
}

inline bool same_context(const Ctx& a, const Ctx& b) {
  return a == b || (a && b && *a == *b);
}

/// Exponent vector of one monomial. Length always equals nvars of the
/// owning context; exponents are kept below 2^31 with explicit checks.
struct Monomial {
  std::vector<std::uint32_t> e;

  Monomial() = default;
  explicit Monomial(std::size_t n) : e(n, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : e(std::move(exps)) {}

  std::uint64_t degree() const {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
  }
  bool is_one() const {
    for (auto v : e)
      if (v) return false;
    return true;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.e == b.e;
  }
};

constexpr std::uint32_t kMaxExponent = 0x7fffffffu;

inline void check_exponent(std::uint64_t v) {
  if (v > kMaxExponent)
    throw InputError("monomial exponent exceeds the 32-bit limit");
}

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.e.size());
  for (std::size_t i = 0; i < a.e.size(); ++i) {
    std::uint64_t s = std::uint64_t{a.e[i]} + b.e[i];
    check_exponent(s);
    r.e[i] = static_cast<std::uint32_t>(s);
  }
  return r;
}

inline bool monomial_divides(const Monomial& a, const Monomial& b) {
  // a | b
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Monomial monomial_div(const Monomial& a, const Monomial& b) {
  // a / b, requires b | a
  Monomial r(a.e.size());
  for (std::size_t i = 0; i < a.e.size(); ++i) {
    if (b.e[i] > a.e[i]) throw InternalError("monomial division not exact");
    r.e[i] = a.e[i] - b.e[i];
  }
  return r;
}

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.e.size());
  for (std::size_t i = 0; i < a.e.size(); ++i)
    r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
  return r;
}

/// Degree-reverse-lexicographic order with the declared variable order.
/// Used as the canonical term order everywhere (maps, leading terms, GB).
struct DegRevLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    std::uint64_t da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t i = a.e.size(); i-- > 0;)
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
  }
};

}  // namespace qfs

#endif  // QFS_CONTEXT_HPP
