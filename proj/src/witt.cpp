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

#include "witt.hpp"

namespace qfs {

namespace {

void check_same_shape(const WittVector& u, const WittVector& v) {
  if (!same_context(u.ctx, v.ctx))
    throw InputError("Witt vectors come from different contexts");
  if (u.length() != v.length())
    throw InputError("Witt vectors have different lengths");
}

ZPoly zp_zero(const Ctx& ctx) { return ZPoly::zero(ctx, IntRing{}); }

std::uint64_t pow_u64(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= b;
  return r;
}

/// Solve sum_{i<=r} p^i c_i^(p^(r-i)) = g_r for c_r; nullopt when the
/// required division is not exact.
std::optional<ZPoly> solve_ghost_coordinate(const GhostVector& g,
                                            const std::vector<ZPoly>& c,
                                            std::uint32_t r) {
  const std::uint64_t p = g.ctx->p;
  ZPoly acc = g.comps[r];
  mpz_class pi = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    ZPoly power = poly_pow(c[i], pow_u64(p, r - i));
    acc = acc - power.scaled(pi);
    pi *= p;
  }
  // acc must be divisible by p^r
  mpz_class pr;
  mpz_pow_ui(pr.get_mpz_t(), mpz_class(static_cast<unsigned long>(p)).get_mpz_t(), r);
  ZPoly out(g.ctx, IntRing{});
  for (const auto& [m, v] : acc.terms()) {
    if (!mpz_divisible_p(v.get_mpz_t(), pr.get_mpz_t())) return std::nullopt;
    out.add_term(m, v / pr);
  }
  return out;
}

WittVector from_ghost_checked(const GhostVector& g, const char* who) {
  WittVector w{g.ctx, {}};
  w.comps.reserve(g.comps.size());
  std::vector<ZPoly> c;
  for (std::uint32_t r = 0; r < g.comps.size(); ++r) {
    auto cr = solve_ghost_coordinate(g, c, r);
    if (!cr)
      throw InternalError(std::string(who) +
                          ": ghost equation has no integral solution; the "
                          "ring is p-torsion free, so this is a bug");
    c.push_back(*cr);
    w.comps.push_back(*cr);
  }
  return w;
}

}  // namespace

WittVector witt_zero(const Ctx& ctx, std::uint32_t n) {
  if (n < 1) throw InputError("Witt length must be >= 1");
  WittVector w{ctx, {}};
  w.comps.assign(n, zp_zero(ctx));
  return w;
}

WittVector teichmuller(const ZPoly& a, std::uint32_t n) {
  WittVector w = witt_zero(a.ctx(), n);
  w.comps[0] = a;
  return w;
}

GhostVector ghost(const WittVector& w) {
  const std::uint64_t p = w.ctx->p;
  GhostVector g{w.ctx, {}};
  g.comps.reserve(w.length());
  for (std::uint32_t r = 0; r < w.length(); ++r) {
    ZPoly acc = zp_zero(w.ctx);
    mpz_class pi = 1;
    for (std::uint32_t i = 0; i <= r; ++i) {
      acc = acc + poly_pow(w.comps[i], pow_u64(p, r - i)).scaled(pi);
      pi *= p;
    }
    g.comps.push_back(acc);
  }
  return g;
}

WittVector from_ghost(const GhostVector& g) {
  return from_ghost_checked(g, "from_ghost");
}

WittVector witt_add(const WittVector& u, const WittVector& v) {
  check_same_shape(u, v);
  GhostVector gu = ghost(u), gv = ghost(v);
  GhostVector g{u.ctx, {}};
  for (std::uint32_t r = 0; r < u.length(); ++r)
    g.comps.push_back(gu.comps[r] + gv.comps[r]);
  return from_ghost_checked(g, "witt_add");
}

WittVector witt_sub(const WittVector& u, const WittVector& v) {
  check_same_shape(u, v);
  GhostVector gu = ghost(u), gv = ghost(v);
  GhostVector g{u.ctx, {}};
  for (std::uint32_t r = 0; r < u.length(); ++r)
    g.comps.push_back(gu.comps[r] - gv.comps[r]);
  return from_ghost_checked(g, "witt_sub");
}

WittVector witt_mul(const WittVector& u, const WittVector& v) {
  check_same_shape(u, v);
  GhostVector gu = ghost(u), gv = ghost(v);
  GhostVector g{u.ctx, {}};
  for (std::uint32_t r = 0; r < u.length(); ++r)
    g.comps.push_back(gu.comps[r] * gv.comps[r]);
  return from_ghost_checked(g, "witt_mul");
}

WittVector witt_neg(const WittVector& u) {
  GhostVector gu = ghost(u);
  for (auto& c : gu.comps) c = -c;
  return from_ghost_checked(gu, "witt_neg");
}

WittVector witt_scale(const WittVector& u, long s) {
  GhostVector gu = ghost(u);
  for (auto& c : gu.comps) c = c.scaled(mpz_class(s));
  return from_ghost_checked(gu, "witt_scale");
}

WittVector verschiebung(const WittVector& w) {
  WittVector r{w.ctx, {}};
  r.comps.reserve(w.length() + 1);
  r.comps.push_back(zp_zero(w.ctx));
  for (const auto& c : w.comps) r.comps.push_back(c);
  return r;
}

WittVector restriction(const WittVector& w) {
  if (w.length() < 2)
    throw InputError("restriction of a length-1 Witt vector");
  WittVector r{w.ctx, {}};
  r.comps.assign(w.comps.begin(), w.comps.end() - 1);
  return r;
}

std::optional<WittVector> divide_by_p(const WittVector& w) {
  const std::uint64_t p = w.ctx->p;
  GhostVector g = ghost(w);
  GhostVector h{w.ctx, {}};
  mpz_class pz(static_cast<unsigned long>(p));
  for (const auto& c : g.comps) {
    ZPoly q(w.ctx, IntRing{});
    for (const auto& [m, v] : c.terms()) {
      if (!mpz_divisible_p(v.get_mpz_t(), pz.get_mpz_t())) return std::nullopt;
      q.add_term(m, v / pz);
    }
    h.comps.push_back(q);
  }
  // Ghost divisibility alone is not enough: the quotient coordinates must
  // also come out integral.
  WittVector r{w.ctx, {}};
  std::vector<ZPoly> c;
  for (std::uint32_t i = 0; i < h.comps.size(); ++i) {
    auto ci = solve_ghost_coordinate(h, c, i);
    if (!ci) return std::nullopt;
    c.push_back(*ci);
    r.comps.push_back(*ci);
  }
  return r;
}

WittVector s_phi(const ZPoly& a, std::uint32_t n) {
  if (n < 1) throw InputError("Witt length must be >= 1");
  GhostVector g{a.ctx(), {}};
  g.comps.reserve(n);
  ZPoly cur = a;
  for (std::uint32_t r = 0; r < n; ++r) {
    g.comps.push_back(cur);
    if (r + 1 < n) cur = frobenius_substitute(cur, 1);
  }
  return from_ghost_checked(g, "s_phi");
}

WittVector delta_W(const WittVector& w) {
  if (w.length() < 2) throw InputError("delta_W requires length >= 2");
  WittVector diff = witt_sub(w, s_phi(w.comps[0], w.length()));
  if (!diff.comps[0].is_zero())
    throw InternalError("delta_W: first coordinate of w - s_phi(a_0) must "
                        "vanish: bug");
  WittVector r{w.ctx, {}};
  r.comps.assign(diff.comps.begin() + 1, diff.comps.end());
  return r;
}

ZPoly delta_s_witt(const ZPoly& a, std::uint32_t s) {
  if (s < 1) throw InputError("delta_s_witt requires s >= 1");
  WittVector w = teichmuller(a, s + 1);
  while (w.length() > 1) w = delta_W(w);
  return w.comps[0];
}

std::vector<ZPoly> psi_decompose(const WittVector& w) {
  std::vector<ZPoly> out;
  out.reserve(w.length());
  for (std::uint32_t r = 0; r < w.length(); ++r) {
    ZPoly acc = w.comps[r];
    for (std::uint32_t j = 0; j < r; ++j)
      acc = acc + delta_s_witt(w.comps[j], r - j);
    out.push_back(acc);
  }
  return out;
}

std::vector<Poly> sphi_phi_mod_p(const ZPoly& a, std::uint32_t n) {
  WittVector lhs = s_phi(frobenius_substitute(a, 1), n);
  WittVector rhs = teichmuller(poly_pow(a, a.ctx()->p), n);
  if (!divide_by_p(witt_sub(lhs, rhs)))
    throw InternalError(
        "s_phi(phi(a)) and [a^p] differ by more than p*W_n: bug");
  std::vector<Poly> out;
  out.reserve(n);
  for (const auto& c : rhs.comps) out.push_back(reduce_mod(c, 1));
  return out;
}

}  // namespace qfs
