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

#ifndef QFS_FEDDER_HPP
#define QFS_FEDDER_HPP

#include <optional>
#include <vector>

#include "groebner.hpp"
#include "thresholds.hpp"

namespace qfs {

// Ideal-chain computation of the quasi-F-splitting height, the stable
// trace ideal, and the quasi-(F,F^inf)-splitting decision for complete
// intersections given by integer lifts f_1, ..., f_r.
//
// The regular-sequence and p-torsion-free hypotheses are user-asserted:
// the engine validates only that the lifts are nonzero mod p and r <= N.
// Wrong assertions invalidate the interpretation of the answer, not the
// chain arithmetic, and reports echo the assertion.
//
// Chain ideals are handled as polynomial ideals. Stabilization in the
// local/complete ring strictly before polynomial stabilization can only
// delay an "infinite" certificate, never produce a wrong finite answer:
// non-membership in the monomial ideal m^[p] transfers verbatim.

struct ChainOptions {
  std::uint32_t max_height = 12;
  std::uint32_t sigma_budget = 64;       // iterations of the trace descent
  std::uint64_t gb_budget = 1'000'000;   // reduction steps per run
};

struct CIInput {
  Ctx ctx;
  std::vector<Poly> lifts;  // precision >= 2
  ChainOptions options;

  CIInput(Ctx c, std::vector<Poly> l, ChainOptions o = {});
};

/// One computed chain level: pruned generators, their reduced Groebner
/// basis, and whether the level sits inside m^[p].
struct ChainLevel {
  std::vector<Poly> gens;
  GroebnerBasis gb;
  bool inside_mp = false;
};

enum class ChainKind { IChain, JDescent, IPrimeChain };

struct IdealChain {
  ChainKind kind = ChainKind::IChain;
  std::vector<ChainLevel> levels;             // levels[0] is I_1 (or J_1)
  std::optional<std::uint32_t> stabilized_at; // 1-based level index
  bool budget_exhausted = false;
};

struct HeightResult {
  HeightClass kind = HeightClass::Inconclusive;
  std::uint32_t value = 0;          // Finite: the height
  std::optional<Poly> witness;      // Finite: generator outside m^[p]
  Poly witness_reduced;             // witness with m^[p] multiples dropped
  std::uint32_t certificate = 0;    // Infinite: stabilization level
  std::uint32_t levels_computed = 0;
  IdealChain chain;
};

/// Delta_1((f_1 ... f_r)^(p-1)) over Z/p^2 from the given lifts, reduced
/// mod p. This is the multiplier of every chain step; it depends on the
/// lifts, not only on their reductions.
Poly delta_term(const CIInput& input);

/// Image ideal of multiplier * J under the trace: generated by
/// { u(multiplier * g * x^b) : g generator, b in {0..p-1}^N }. The
/// expansion is exact because any h decomposes as sum_b h_b^p x^b and the
/// trace is semilinear.
std::vector<Poly> trace_ideal(const std::vector<Poly>& gens,
                              const Poly& multiplier);

/// Greedy generator pruning: drop generators lying in the ideal of the
/// previously kept ones. Returns the kept list and its reduced basis.
ChainLevel prune_level(std::vector<Poly> gens, Budget& budget);

/// The increasing chain I_1 = (f^(p-1)) + I^[p],
/// I_n = trace(I_(n-1)) + I_1, stopping at the first level outside
/// m^[p], at certified stabilization, or at max_height.
IdealChain chain_I(const CIInput& input, Budget& budget);

HeightResult height(const CIInput& input);
HeightResult height(const CIInput& input, Budget& budget);

struct StableIdealResult {
  std::vector<Poly> gens;    // generators of the stable ideal
  GroebnerBasis gb;
  std::uint32_t iterations = 0;  // e with J_e = J_(e+1)
  bool conclusive = false;
  IdealChain descent;
};

/// Stable trace ideal: iterate J_0 = (1), J_(e+1) = u(F_*(f^(p-1) J_e))
/// until the reduced bases agree. The sequence is decreasing; each step
/// is checked.
StableIdealResult stable_ideal(const CIInput& input, Budget& budget);

/// Direct evaluation of u^e(F^e_*(f^(p^e-1) A)) by expanding over the
/// p^e-basis. Used as an independent route for the descent in tests.
std::vector<Poly> iterated_trace_direct(const CIInput& input, std::uint32_t e);

struct FFInftyResult {
  bool value = false;
  IdealChain chain;  // the primed chain up to the height
};

/// Quasi-(F,F^inf)-splitting at the computed finite height: builds
/// I'_1 = f^(p-1) I' + I^[p] and the primed recurrence, then tests
/// I'_height against m^[p]. Also checks I'_n inside I_n at every level.
FFInftyResult is_qf_finfty(const CIInput& input, const HeightResult& ht,
                           const StableIdealResult& stable, Budget& budget);

}  // namespace qfs

#endif  // QFS_FEDDER_HPP
