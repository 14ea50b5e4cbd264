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

#ifndef QFS_WITT_HPP
#define QFS_WITT_HPP

#include <optional>
#include <vector>

#include "poly.hpp"

namespace qfs {

// Truncated Witt vectors over the integer polynomial ring Z[x_1..x_N]
// with the Frobenius lift phi(x_i) = x_i^p. Everything runs over exact
// integers: the ring is p-torsion free, so the ghost map is injective and
// every division below is exact. Mod-p reductions happen only at the
// boundary.
//
// Practical limits (coefficient and degree growth is exponential in the
// length): n <= 4 for p = 2, n <= 3 for p in {3, 5}, inputs of total
// degree <= 6. This module is a verification kernel; the production
// ideal-chain path uses delta1/delta_n directly.

/// Coordinate tuple (a_0, ..., a_(n-1)) in W_n(Z[x]).
struct WittVector {
  Ctx ctx;
  std::vector<ZPoly> comps;

  std::uint32_t length() const {
    return static_cast<std::uint32_t>(comps.size());
  }
};

/// Ghost coordinates; produced only by ghost().
struct GhostVector {
  Ctx ctx;
  std::vector<ZPoly> comps;
};

WittVector witt_zero(const Ctx& ctx, std::uint32_t n);

/// Teichmueller lift [a] = (a, 0, ..., 0).
WittVector teichmuller(const ZPoly& a, std::uint32_t n);

/// Component r of the ghost is sum_{i<=r} p^i * a_i^(p^(r-i)).
GhostVector ghost(const WittVector& w);

/// The unique Witt vector with the given ghost, solved coordinate by
/// coordinate with exact division by p^r. Throws InternalError when a
/// division fails (callers only pass ghosts of genuine Witt vectors).
WittVector from_ghost(const GhostVector& g);

WittVector witt_add(const WittVector& u, const WittVector& v);
WittVector witt_sub(const WittVector& u, const WittVector& v);
WittVector witt_mul(const WittVector& u, const WittVector& v);
WittVector witt_neg(const WittVector& u);
/// Multiplication by an ordinary integer scalar (via the ghost).
WittVector witt_scale(const WittVector& u, long s);

/// V(a_0,...,a_(n-1)) = (0, a_0, ..., a_(n-1)): length grows by one.
WittVector verschiebung(const WittVector& w);
/// Drop the last coordinate; length must be >= 2.
WittVector restriction(const WittVector& w);

/// Decide membership in p*W_n: returns the quotient w/p when it exists.
std::optional<WittVector> divide_by_p(const WittVector& w);

/// The ring-homomorphism section s_phi : A -> W_n(A) determined by
/// ghost_r(s_phi(a)) = phi^r(a).
WittVector s_phi(const ZPoly& a, std::uint32_t n);

/// Delta_{W_n} : W_n -> W_(n-1) defined by
/// V(Delta(w)) = w - s_phi(a_0); requires length >= 2.
WittVector delta_W(const WittVector& w);

/// Delta_s(a) as the composite Delta_{W_2} o ... o Delta_{W_(s+1)}([a]).
ZPoly delta_s_witt(const ZPoly& a, std::uint32_t s);

/// Module decomposition coordinates: component r is
/// a_r + sum_{j<r} Delta_(r-j)(a_j).
std::vector<ZPoly> psi_decompose(const WittVector& w);

/// Reduction of s_phi(phi(a)) mod p*W_n. Asserts that the class equals
/// the Teichmueller lift of a^p and returns that canonical representative
/// with precision-1 coordinates.
std::vector<Poly> sphi_phi_mod_p(const ZPoly& a, std::uint32_t n);

}  // namespace qfs

#endif  // QFS_WITT_HPP
