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

#include "selftest.hpp"

#include <functional>
#include <random>

#include "witt.hpp"

namespace qfs {

namespace {

struct Gen {
  Ctx ctx;
  std::mt19937_64 rng;

  explicit Gen(std::uint32_t p, std::uint64_t seed)
      : ctx(make_context(p, {"x", "y"})), rng(seed) {}

  /// Small random integer polynomial: <= 3 terms, total degree <= 2,
  /// coefficients in [-3, 3] \ {0}.
  ZPoly poly() {
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> exp(0, 2);
    ZPoly f(ctx, IntRing{});
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
      int c = coeff(rng);
      if (!c) c = 1;
      Monomial m(2);
      m.e[0] = static_cast<std::uint32_t>(exp(rng));
      m.e[1] = static_cast<std::uint32_t>(exp(rng));
      if (m.e[0] + m.e[1] > 2) m.e[1] = 0;
      f.add_term(std::move(m), mpz_class(c));
    }
    return f;
  }

  WittVector vec(std::uint32_t n) {
    WittVector w = witt_zero(ctx, n);
    for (auto& c : w.comps) c = poly();
    return w;
  }
};

bool witt_eq(const WittVector& a, const WittVector& b) {
  if (a.length() != b.length()) return false;
  for (std::uint32_t i = 0; i < a.length(); ++i)
    if (a.comps[i] != b.comps[i]) return false;
  return true;
}

bool ghost_eq(const GhostVector& a, const GhostVector& b) {
  if (a.comps.size() != b.comps.size()) return false;
  for (std::size_t i = 0; i < a.comps.size(); ++i)
    if (a.comps[i] != b.comps[i]) return false;
  return true;
}

using Property = std::function<bool(Gen&, std::uint32_t)>;

bool prop_ghost_hom(Gen& g, std::uint32_t n) {
  WittVector u = g.vec(n), v = g.vec(n);
  GhostVector su = ghost(u), sv = ghost(v);
  GhostVector sum{g.ctx, {}}, prod{g.ctx, {}};
  for (std::uint32_t i = 0; i < n; ++i) {
    sum.comps.push_back(su.comps[i] + sv.comps[i]);
    prod.comps.push_back(su.comps[i] * sv.comps[i]);
  }
  return ghost_eq(ghost(witt_add(u, v)), sum) &&
         ghost_eq(ghost(witt_mul(u, v)), prod);
}

bool prop_ring_axioms(Gen& g, std::uint32_t n) {
  WittVector a = g.vec(n), b = g.vec(n), c = g.vec(n);
  if (!witt_eq(witt_add(a, b), witt_add(b, a))) return false;
  if (!witt_eq(witt_mul(a, b), witt_mul(b, a))) return false;
  if (!witt_eq(witt_add(witt_add(a, b), c), witt_add(a, witt_add(b, c))))
    return false;
  if (!witt_eq(witt_mul(witt_mul(a, b), c), witt_mul(a, witt_mul(b, c))))
    return false;
  return witt_eq(witt_mul(a, witt_add(b, c)),
                 witt_add(witt_mul(a, b), witt_mul(a, c)));
}

bool prop_teichmuller_shift(Gen& g, std::uint32_t n) {
  // [a] V^m([b]) = V^m([a^(p^m) b])
  std::uniform_int_distribution<std::uint32_t> pick(1, n - 1);
  std::uint32_t m = pick(g.rng);
  ZPoly a = g.poly(), b = g.poly();
  WittVector vb = teichmuller(b, n - m);
  for (std::uint32_t i = 0; i < m; ++i) vb = verschiebung(vb);
  WittVector lhs = witt_mul(teichmuller(a, n), vb);
  std::uint64_t pm = 1;
  for (std::uint32_t i = 0; i < m; ++i) pm *= g.ctx->p;
  WittVector rhs = teichmuller(poly_pow(a, pm) * b, n - m);
  for (std::uint32_t i = 0; i < m; ++i) rhs = verschiebung(rhs);
  return witt_eq(lhs, rhs);
}

bool prop_verschiebung_product(Gen& g, std::uint32_t n) {
  // V(a) V(b) = p V(ab)
  WittVector a = g.vec(n - 1), b = g.vec(n - 1);
  WittVector lhs = witt_mul(verschiebung(a), verschiebung(b));
  WittVector rhs = witt_scale(verschiebung(witt_mul(a, b)),
                              static_cast<long>(g.ctx->p));
  return witt_eq(lhs, rhs);
}

bool prop_delta_w_kills_sphi(Gen& g, std::uint32_t n) {
  WittVector d = delta_W(s_phi(g.poly(), n));
  for (const auto& c : d.comps)
    if (!c.is_zero()) return false;
  return true;
}

bool prop_delta_w_section_of_v(Gen& g, std::uint32_t n) {
  WittVector a = g.vec(n - 1);
  return witt_eq(delta_W(verschiebung(a)), a);
}

bool prop_delta_w_leibniz(Gen& g, std::uint32_t n) {
  WittVector alpha = g.vec(n), beta = g.vec(n);
  const ZPoly& a0 = alpha.comps[0];
  const ZPoly& b0 = beta.comps[0];
  WittVector da = delta_W(alpha), db = delta_W(beta);
  WittVector lhs = delta_W(witt_mul(alpha, beta));
  WittVector two_term = witt_add(
      witt_mul(s_phi(frobenius_substitute(b0, 1), n - 1), da),
      witt_mul(s_phi(frobenius_substitute(a0, 1), n - 1), db));
  // Exact form carries the extra p * da * db term.
  WittVector exact = witt_add(
      two_term,
      witt_scale(witt_mul(da, db), static_cast<long>(g.ctx->p)));
  if (!witt_eq(lhs, exact)) return false;
  // And the stated congruence holds mod p W_(n-1).
  return divide_by_p(witt_sub(lhs, two_term)).has_value();
}

bool prop_delta_formula_sum(Gen& g, std::uint32_t n) {
  // a^(p^n) = sum_{s<=n} p^s phi^(n-s)(Delta_s(a)), exact.
  ZPoly a = g.poly();
  const std::uint64_t p = g.ctx->p;
  std::uint64_t pn = 1;
  for (std::uint32_t i = 0; i < n; ++i) pn *= p;
  ZPoly rhs = frobenius_substitute(a, n);  // s = 0 term
  mpz_class ps = 1;
  for (std::uint32_t s = 1; s <= n; ++s) {
    ps *= p;
    ZPoly ds = delta_s_witt(a, s);
    if (s < n) ds = frobenius_substitute(ds, n - s);
    rhs = rhs + ds.scaled(ps);
  }
  return poly_pow(a, pn) == rhs;
}

bool prop_delta_division_route(Gen& g, std::uint32_t n) {
  // Delta_s(a) = Delta_1(a^(p^(s-1))) / p^(s-1), exact, for s = n.
  ZPoly a = g.poly();
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i + 1 < n; ++i) q *= g.ctx->p;
  ZPoly via_division =
      divide_exact_p_power(delta1_exact(poly_pow(a, q)), g.ctx->p, n - 1);
  return delta_s_witt(a, n) == via_division;
}

bool prop_delta_mod_p_congruence(Gen& g, std::uint32_t n) {
  if (n < 2) return true;
  ZPoly a = g.poly();
  const std::uint32_t p = g.ctx->p;
  std::uint64_t pn = 1;
  for (std::uint32_t i = 0; i < n; ++i) pn *= p;
  Poly dn = reduce_mod(delta_s_witt(a, n), 1);
  Poly abar = reduce_mod(a, 1);
  Poly d1 = reduce_mod(delta_s_witt(a, 1), 1);
  Poly rhs = poly_pow(abar, pn - p) * d1;
  if (p == 2)
    rhs = rhs + poly_pow(abar, pn - 2 * p) * d1 * d1;
  return dn == rhs;
}

bool prop_teichmuller_decomposition(Gen& g, std::uint32_t n) {
  // [a] = s_phi(a) + V s_phi(D_1 a) + ... + V^(n-1) s_phi(D_(n-1) a)
  //       + V^n (D_n a)   in W_(n+1)
  ZPoly a = g.poly();
  WittVector acc = s_phi(a, n + 1);
  for (std::uint32_t j = 1; j < n; ++j) {
    WittVector t = s_phi(delta_s_witt(a, j), n + 1 - j);
    for (std::uint32_t i = 0; i < j; ++i) t = verschiebung(t);
    acc = witt_add(acc, t);
  }
  WittVector last = teichmuller(delta_s_witt(a, n), 1);
  for (std::uint32_t i = 0; i < n; ++i) last = verschiebung(last);
  acc = witt_add(acc, last);
  return witt_eq(acc, teichmuller(a, n + 1));
}

bool prop_psi_additive(Gen& g, std::uint32_t n) {
  WittVector u = g.vec(n), v = g.vec(n);
  auto pu = psi_decompose(u), pv = psi_decompose(v),
       ps = psi_decompose(witt_add(u, v));
  for (std::uint32_t i = 0; i < n; ++i)
    if (ps[i] != pu[i] + pv[i]) return false;
  return true;
}

bool prop_psi_of_sphi(Gen& g, std::uint32_t n) {
  ZPoly a = g.poly();
  auto coords = psi_decompose(s_phi(a, n));
  if (coords[0] != a) return false;
  for (std::uint32_t i = 1; i < n; ++i)
    if (!coords[i].is_zero()) return false;
  return true;
}

bool prop_sphi_phi(Gen& g, std::uint32_t n) {
  ZPoly a = g.poly();
  auto coords = sphi_phi_mod_p(a, n);  // asserts the pW_n congruence
  Poly expect = poly_pow(reduce_mod(a, 1), g.ctx->p);
  if (coords[0] != expect) return false;
  for (std::uint32_t i = 1; i < n; ++i)
    if (!coords[i].is_zero()) return false;
  return true;
}

bool prop_sphi_ring_hom(Gen& g, std::uint32_t n) {
  ZPoly a = g.poly(), b = g.poly();
  return witt_eq(witt_add(s_phi(a, n), s_phi(b, n)), s_phi(a + b, n)) &&
         witt_eq(witt_mul(s_phi(a, n), s_phi(b, n)), s_phi(a * b, n));
}

}  // namespace

std::string SelftestResult::summary() const {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  out += passed ? "all properties passed" : "FAILURES detected";
  return out;
}

void check_selftest_range(std::uint32_t p, std::uint32_t length) {
  std::uint32_t cap;
  switch (p) {
    case 2: cap = 4; break;
    case 3: cap = 3; break;
    case 5: cap = 3; break;
    default:
      throw InputError("witt selftest supports p in {2, 3, 5}");
  }
  if (length < 2 || length > cap)
    throw InputError("witt selftest at p = " + std::to_string(p) +
                     " supports lengths 2.." + std::to_string(cap));
}

SelftestResult witt_selftest(std::uint32_t p, std::uint32_t length,
                             std::uint32_t trials, std::uint64_t seed) {
  check_selftest_range(p, length);
  const std::pair<const char*, Property> props[] = {
      {"ghost is a ring homomorphism", prop_ghost_hom},
      {"ring axioms (assoc/comm/distrib)", prop_ring_axioms},
      {"[a] V^m([b]) = V^m([a^(p^m) b])", prop_teichmuller_shift},
      {"V(a) V(b) = p V(ab)", prop_verschiebung_product},
      {"delta_W(s_phi(a)) = 0", prop_delta_w_kills_sphi},
      {"delta_W(V a) = a", prop_delta_w_section_of_v},
      {"delta_W Leibniz rule (exact and mod p)", prop_delta_w_leibniz},
      {"a^(p^n) = sum p^s phi^(n-s) Delta_s(a)", prop_delta_formula_sum},
      {"Delta_n(a) = Delta_1(a^(p^(n-1)))/p^(n-1)",
       prop_delta_division_route},
      {"Delta_n mod-p closed form", prop_delta_mod_p_congruence},
      {"Teichmueller decomposition through s_phi",
       prop_teichmuller_decomposition},
      {"psi decomposition is additive", prop_psi_additive},
      {"psi(s_phi(a)) = (a, 0, ..., 0)", prop_psi_of_sphi},
      {"s_phi(phi(a)) = [a^p] mod p W_n", prop_sphi_phi},
      {"s_phi is a ring homomorphism", prop_sphi_ring_hom},
  };

  SelftestResult result;
  result.passed = true;
  for (const auto& [name, prop] : props) {
    Gen gen(p, seed);
    std::uint32_t failures = 0;
    for (std::uint32_t t = 0; t < trials; ++t)
      if (!prop(gen, length)) ++failures;
    result.trials += trials;
    std::string line = std::string(failures ? "FAIL " : "ok   ") + name +
                       " (" + std::to_string(trials - failures) + "/" +
                       std::to_string(trials) + ")";
    result.lines.push_back(line);
    if (failures) result.passed = false;
  }
  return result;
}

}  // namespace qfs
