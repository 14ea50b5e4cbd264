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

#ifndef QFS_POLY_HPP
#define QFS_POLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "context.hpp"

namespace qfs {

/// Coefficients in Z/p^k with canonical representatives 0..p^k-1.
/// k <= 8 and p <= 97 keep p^k (and its squares via 128-bit
/// intermediates) inside machine words.
struct ModRing {
  using Value = std::uint64_t;
  static constexpr std::uint32_t kMaxPrecision = 8;

  std::uint64_t p = 2;
  std::uint32_t k = 1;
  std::uint64_t modulus = 2;

  ModRing() = default;
  ModRing(std::uint64_t p_, std::uint32_t k_) : p(p_), k(k_) {
    if (k_ < 1 || k_ > kMaxPrecision)
      throw InputError("coefficient precision k must satisfy 1 <= k <= " +
                       std::to_string(kMaxPrecision));
    modulus = 1;
    for (std::uint32_t i = 0; i < k_; ++i) modulus *= p;
  }

  friend bool operator==(const ModRing&, const ModRing&) = default;

  Value zero() const { return 0; }
  Value one() const { return modulus == 1 ? 0 : 1; }
  bool is_zero(Value v) const { return v == 0; }
  Value add(Value a, Value b) const {
    Value s = a + b;
    return s >= modulus ? s - modulus : s;
  }
  Value neg(Value a) const { return a ? modulus - a : 0; }
  Value sub(Value a, Value b) const { return add(a, neg(b)); }
  Value mul(Value a, Value b) const {
    return static_cast<Value>((static_cast<unsigned __int128>(a) * b) %
                              modulus);
  }
  Value from_long(long v) const {
    long r = v % static_cast<long>(modulus);
    if (r < 0) r += static_cast<long>(modulus);
    return static_cast<Value>(r);
  }
  Value from_mpz(const mpz_class& v) const {
    return mpz_fdiv_ui(v.get_mpz_t(), modulus);
  }
  std::string str(Value v) const { return std::to_string(v); }
  bool is_negative(Value) const { return false; }
  std::string abs_str(Value v) const { return str(v); }
};

/// Exact arbitrary-precision integer coefficients ("precision infinity").
/// This is the carrier of the Witt-vector kernel, where all divisions by
/// powers of p must be exact.
struct IntRing {
  using Value = mpz_class;

  friend bool operator==(const IntRing&, const IntRing&) { return true; }
  friend bool operator!=(const IntRing&, const IntRing&) { return false; }

  Value zero() const { return 0; }
  Value one() const { return 1; }
  bool is_zero(const Value& v) const { return sgn(v) == 0; }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value neg(const Value& a) const { return -a; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value from_long(long v) const { return Value(v); }
  Value from_mpz(const mpz_class& v) const { return v; }
  std::string str(const Value& v) const { return v.get_str(); }
  bool is_negative(const Value& v) const { return sgn(v) < 0; }
  std::string abs_str(const Value& v) const {
    return mpz_class(abs(v)).get_str();
  }
};

/// Sparse multivariate polynomial over a coefficient ring, stored as a
/// canonical ordered term map (no zero coefficients, degrevlex order).
/// Values are immutable after construction in the sense that every
/// operation returns a fresh polynomial.
template <class Ring>
class BasicPoly {
 public:
  using Value = typename Ring::Value;
  using TermMap = std::map<Monomial, Value, DegRevLexLess>;

  BasicPoly() = default;
  BasicPoly(Ctx ctx, Ring ring) : ctx_(std::move(ctx)), ring_(ring) {}

  static BasicPoly zero(Ctx ctx, Ring ring) {
    return BasicPoly(std::move(ctx), ring);
  }
  static BasicPoly constant(Ctx ctx, Ring ring, Value v) {
    BasicPoly r(std::move(ctx), ring);
    r.add_term(Monomial(r.ctx_->nvars()), v);
    return r;
  }
  static BasicPoly monomial(Ctx ctx, Ring ring, Monomial m, Value v) {
    BasicPoly r(std::move(ctx), ring);
    if (m.e.size() != r.ctx_->nvars())
      throw InternalError("monomial arity does not match context");
    r.add_term(std::move(m), v);
    return r;
  }
  static BasicPoly variable(Ctx ctx, Ring ring, std::uint32_t i) {
    Monomial m(ctx->nvars());
    m.e[i] = 1;
    return monomial(std::move(ctx), ring, std::move(m), ring.one());
  }

  const Ctx& ctx() const { return ctx_; }
  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }

  Value coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ring_.zero() : it->second;
  }

  /// Accumulate v onto the coefficient of m, keeping the map canonical.
  void add_term(Monomial m, Value v) {
    if (ring_.is_zero(v)) return;
    auto [it, inserted] = terms_.emplace(std::move(m), v);
    if (!inserted) {
      it->second = ring_.add(it->second, v);
      if (ring_.is_zero(it->second)) terms_.erase(it);
    }
  }

  friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
    return a.ring_ == b.ring_ && same_context(a.ctx_, b.ctx_) &&
           a.terms_ == b.terms_;
  }
  friend bool operator!=(const BasicPoly& a, const BasicPoly& b) {
    return !(a == b);
  }

  friend BasicPoly operator+(const BasicPoly& a, const BasicPoly& b) {
    a.check_compatible(b);
    BasicPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }

  friend BasicPoly operator-(const BasicPoly& a) {
    BasicPoly r(a.ctx_, a.ring_);
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, a.ring_.neg(c));
    return r;
  }

  friend BasicPoly operator-(const BasicPoly& a, const BasicPoly& b) {
    a.check_compatible(b);
    BasicPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, b.ring_.neg(c));
    return r;
  }

  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
    a.check_compatible(b);
    BasicPoly r(a.ctx_, a.ring_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        r.add_term(monomial_mul(ma, mb), a.ring_.mul(ca, cb));
    return r;
  }

  BasicPoly scaled(const Value& c) const {
    BasicPoly r(ctx_, ring_);
    for (const auto& [m, v] : terms_) r.add_term(m, ring_.mul(v, c));
    return r;
  }

  BasicPoly shifted(const Monomial& m) const {
    BasicPoly r(ctx_, ring_);
    for (const auto& [mm, v] : terms_) r.terms_.emplace(monomial_mul(mm, m), v);
    return r;
  }

  void check_compatible(const BasicPoly& other) const {
    if (!same_context(ctx_, other.ctx_))
      throw InputError("polynomial context mismatch");
    if (!(ring_ == other.ring_))
      throw InputError("polynomial precision mismatch");
  }

  /// Canonical rendering: descending degrevlex. For modular coefficients
  /// this round-trips through the expression parser.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const bool negative = ring_.is_negative(it->second);
      if (first) {
        if (negative) out += "-";
        first = false;
      } else {
        out += negative ? " - " : " + ";
      }
      out += term_str(it->first, it->second);
    }
    return out;
  }

 private:
  std::string term_str(const Monomial& m, const Value& c) const {
    std::string cs = ring_.abs_str(c);
    std::string ms;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
      if (!m.e[i]) continue;
      if (!ms.empty()) ms += "*";
      ms += ctx_->names[i];
      if (m.e[i] > 1) ms += "^" + std::to_string(m.e[i]);
    }
    if (ms.empty()) return cs;
    if (cs == "1") return ms;
    return cs + "*" + ms;
  }

  Ctx ctx_;
  Ring ring_;
  TermMap terms_;
};

using Poly = BasicPoly<ModRing>;    // coefficients in Z/p^k
using ZPoly = BasicPoly<IntRing>;   // exact integer coefficients

template <class Ring>
BasicPoly<Ring> poly_pow(const BasicPoly<Ring>& f, std::uint64_t e) {
  BasicPoly<Ring> acc = BasicPoly<Ring>::constant(f.ctx(), f.ring(),
                                                  f.ring().one());
  BasicPoly<Ring> base = f;
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

/// phi(x_i) = x_i^(p^e), identity on coefficients. The standard Frobenius
/// lift on a polynomial ring; preserves the number of terms.
template <class Ring>
BasicPoly<Ring> frobenius_substitute(const BasicPoly<Ring>& f,
                                     std::uint32_t e = 1) {
  if (e < 1) throw InputError("frobenius exponent must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= f.ctx()->p;
    if (q > kMaxExponent)
      throw InputError("frobenius power exceeds exponent range");
  }
  BasicPoly<Ring> r(f.ctx(), f.ring());
  for (const auto& [m, c] : f.terms()) {
    Monomial mm(m.e.size());
    for (std::size_t i = 0; i < m.e.size(); ++i) {
      std::uint64_t v = m.e[i] * q;
      check_exponent(v);
      mm.e[i] = static_cast<std::uint32_t>(v);
    }
    r.add_term(std::move(mm), c);
  }
  return r;
}

// ---- precision conversions ----------------------------------------------

Poly reduce_mod(const ZPoly& f, std::uint32_t k);
Poly reduce_precision(const Poly& f, std::uint32_t k);
ZPoly lift_exact(const Poly& f);

// ---- Frobenius discrepancy operators -------------------------------------

/// (f^p - phi(f)) / p at precision k >= 2; result lives at precision k-1.
Poly delta1(const Poly& f);

/// Exact integer version of delta1.
ZPoly delta1_exact(const ZPoly& f);

/// Delta_n(f) = Delta_1(f^(p^(n-1))) / p^(n-1) reduced mod p.
/// Requires precision >= n+1.
Poly delta_n(const Poly& f, std::uint32_t n);

/// Exact division by p^s; throws InternalError if not exact.
ZPoly divide_exact_p_power(const ZPoly& f, std::uint64_t p, std::uint32_t s);

// ---- Cartier / trace operator --------------------------------------------

/// Dual-basis trace u for the monomial basis of F_* over F_p: keeps the
/// monomials x^a with a == p-1 (mod p) in every variable and maps them to
/// x^((a-(p-1))/p), coefficients unchanged. Precision must be 1.
Poly cartier_u(const Poly& f);

/// e-fold composition of cartier_u.
Poly cartier_ue(const Poly& f, std::uint32_t e);

/// Single-shot q = p^e trace: the same filter mod q. Agrees with
/// cartier_ue; used as an independent route in tests.
Poly cartier_u_direct(const Poly& f, std::uint32_t e);

// ---- monomial ideal membership -------------------------------------------

/// True iff every monomial of f is divisible by some generator. The zero
/// polynomial is a member.
bool monomial_ideal_member(const Poly& f, const std::vector<Monomial>& gens);

/// Generators (x_1^q, ..., x_N^q) of m^[q].
std::vector<Monomial> frobenius_power_of_maximal_ideal(const Ctx& ctx,
                                                       std::uint64_t q);

/// Drop every monomial of f lying in the monomial ideal spanned by gens
/// (the normal form modulo a monomial ideal).
Poly drop_monomial_multiples(const Poly& f, const std::vector<Monomial>& gens);

// ---- expression parsing ----------------------------------------------------

// Grammar (documented in the README):
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := int | var | '(' expr ')'
// Implicit multiplication by juxtaposition is not accepted.
Poly parse_poly(std::string_view text, const Ctx& ctx, std::uint32_t k);
ZPoly parse_zpoly(std::string_view text, const Ctx& ctx);

}  // namespace qfs

#endif  // QFS_POLY_HPP
