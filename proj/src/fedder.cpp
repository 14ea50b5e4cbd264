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

#include "fedder.hpp"

#include <algorithm>

namespace qfs {

namespace {

/// Deterministic processing order for generator pruning: small leading
/// monomials first so the kept set stays small.
void sort_generators(std::vector<Poly>& gens) {
  DegRevLexLess less;
  std::sort(gens.begin(), gens.end(), [&](const Poly& a, const Poly& b) {
    const Monomial& la = a.terms().rbegin()->first;
    const Monomial& lb = b.terms().rbegin()->first;
    if (less(la, lb)) return true;
    if (less(lb, la)) return false;
    if (a.num_terms() != b.num_terms()) return a.num_terms() < b.num_terms();
    auto ia = a.terms().begin(), ib = b.terms().begin();
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
      if (!(ia->first == ib->first)) return less(ia->first, ib->first);
      if (ia->second != ib->second) return ia->second < ib->second;
    }
    return false;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
}

/// Enumerate b in {0..q-1}^N in lexicographic order.
bool next_tuple(std::vector<std::uint32_t>& b, std::uint32_t q) {
  for (std::size_t i = b.size(); i-- > 0;) {
    if (++b[i] < q) return true;
    b[i] = 0;
  }
  return false;
}

Poly product_of_lifts(const CIInput& input, std::uint32_t precision) {
  Poly f = Poly::constant(input.ctx, ModRing(input.ctx->p, precision),
                          ModRing(input.ctx->p, precision).one());
  for (const auto& lift : input.lifts) f = f * reduce_precision(lift, precision);
  return f;
}

std::vector<Poly> frobenius_powers_of_lifts(const CIInput& input) {
  std::vector<Poly> out;
  for (const auto& lift : input.lifts)
    out.push_back(poly_pow(reduce_precision(lift, 1), input.ctx->p));
  return out;
}

bool level_inside_mp(const std::vector<Poly>& gens, const Ctx& ctx) {
  auto mp = frobenius_power_of_maximal_ideal(ctx, ctx->p);
  for (const auto& g : gens)
    if (!monomial_ideal_member(g, mp)) return false;
  return true;
}

/// Canonical witness pick: among generators outside m^[p], the one whose
/// reduction (multiples of m^[p] dropped) is smallest.
std::pair<Poly, Poly> pick_witness(const std::vector<Poly>& gens,
                                   const Ctx& ctx) {
  auto mp = frobenius_power_of_maximal_ideal(ctx, ctx->p);
  DegRevLexLess less;
  std::optional<std::pair<Poly, Poly>> best;
  for (const auto& g : gens) {
    Poly red = drop_monomial_multiples(g, mp);
    if (red.is_zero()) continue;
    if (!best) {
      best = {g, red};
      continue;
    }
    const Monomial& cand = red.terms().rbegin()->first;
    const Monomial& cur = best->second.terms().rbegin()->first;
    bool better = less(cand, cur) ||
                  (cand == cur && red.num_terms() < best->second.num_terms());
    if (better) best = {g, red};
  }
  if (!best) throw InternalError("pick_witness called on a level inside m^[p]");
  return *best;
}

}  // namespace

CIInput::CIInput(Ctx c, std::vector<Poly> l, ChainOptions o)
    : ctx(std::move(c)), lifts(std::move(l)), options(o) {
  if (lifts.empty()) throw InputError("at least one lift is required");
  if (lifts.size() > ctx->nvars())
    throw InputError("more lifts than variables: not a regular sequence");
  for (std::size_t i = 0; i < lifts.size(); ++i) {
    if (!same_context(lifts[i].ctx(), ctx))
      throw InputError("lift context mismatch");
    if (lifts[i].ring().k < 2)
      throw InputError("lifts must carry precision >= 2");
    if (reduce_precision(lifts[i], 1).is_zero())
      throw InputError("lift " + std::to_string(i + 1) +
                       " vanishes mod p; the fiber would not be a complete "
                       "intersection");
  }
}

Poly delta_term(const CIInput& input) {
  Poly f = product_of_lifts(input, 2);
  Poly g = poly_pow(f, input.ctx->p - 1);
  return delta1(g);  // precision 1
}

std::vector<Poly> trace_ideal(const std::vector<Poly>& gens,
                              const Poly& multiplier) {
  const Ctx& ctx = multiplier.ctx();
  const std::uint32_t p = ctx->p;
  std::vector<Poly> out;
  // Pure, independent work items per (generator, basis exponent); merged
  // in deterministic order.
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    Poly mg = multiplier * g;
    std::vector<std::uint32_t> b(ctx->nvars(), 0);
    do {
      Poly shifted = mg.shifted(Monomial(std::vector<std::uint32_t>(b)));
      Poly traced = cartier_u(shifted);
      if (!traced.is_zero()) out.push_back(std::move(traced));
    } while (next_tuple(b, p));
  }
  return out;
}

ChainLevel prune_level(std::vector<Poly> gens, Budget& budget) {
  std::vector<Poly> nonzero;
  for (auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(std::move(g));
  sort_generators(nonzero);

  ChainLevel level;
  for (auto& g : nonzero) {
    if (level.gens.empty()) {
      level.gens.push_back(g);
      level.gb = buchberger(level.gens, budget);
      continue;
    }
    if (normal_form(g, level.gb, budget).is_zero()) continue;
    level.gens.push_back(g);
    // Seed the next basis with the current one: same ideal, less work.
    std::vector<Poly> seed = level.gb.basis;
    seed.push_back(g);
    level.gb = buchberger(seed, budget);
  }
  return level;
}

IdealChain chain_I(const CIInput& input, Budget& budget) {
  const Ctx& ctx = input.ctx;
  IdealChain chain;
  chain.kind = ChainKind::IChain;

  Poly fbar = product_of_lifts(input, 1);
  Poly multiplier = delta_term(input);

  std::vector<Poly> base = frobenius_powers_of_lifts(input);  // I^[p]
  base.push_back(poly_pow(fbar, ctx->p - 1));                 // f^(p-1)

  try {
    ChainLevel level = prune_level(base, budget);
    level.inside_mp = level_inside_mp(level.gens, ctx);
    chain.levels.push_back(std::move(level));

    while (chain.levels.back().inside_mp &&
           chain.levels.size() < input.options.max_height) {
      const ChainLevel& prev = chain.levels.back();
      std::vector<Poly> gens = trace_ideal(prev.gens, multiplier);
      for (const auto& g : base) gens.push_back(g);
      ChainLevel level = prune_level(std::move(gens), budget);
      level.inside_mp = level_inside_mp(level.gens, ctx);

      // The chain is increasing; a violation is a bug, not an input
      // property.
      if (!ideal_contains(level.gb, prev.gens, budget))
        throw InternalError("chain monotonicity violated: I_n is not "
                            "contained in I_(n+1): bug");

      bool stabilized = gb_equal(level.gb, prev.gb);
      chain.levels.push_back(std::move(level));
      if (stabilized && chain.levels.back().inside_mp) {
        chain.stabilized_at =
            static_cast<std::uint32_t>(chain.levels.size() - 1);
        break;
      }
    }
  } catch (const ResourceLimitError&) {
    chain.budget_exhausted = true;
  }
  return chain;
}

HeightResult height(const CIInput& input) {
  Budget budget{input.options.gb_budget};
  return height(input, budget);
}

HeightResult height(const CIInput& input, Budget& budget) {
  HeightResult r;
  r.chain = chain_I(input, budget);
  r.levels_computed = static_cast<std::uint32_t>(r.chain.levels.size());
  if (r.chain.budget_exhausted) {
    r.kind = HeightClass::Inconclusive;
    r.value = r.levels_computed;
    return r;
  }
  if (!r.chain.levels.empty() && !r.chain.levels.back().inside_mp) {
    r.kind = HeightClass::Finite;
    r.value = r.levels_computed;
    auto [witness, reduced] =
        pick_witness(r.chain.levels.back().gens, input.ctx);
    r.witness = witness;
    r.witness_reduced = reduced;
    return r;
  }
  if (r.chain.stabilized_at) {
    r.kind = HeightClass::Infinite;
    r.certificate = *r.chain.stabilized_at;
    return r;
  }
  r.kind = HeightClass::Inconclusive;
  r.value = input.options.max_height;
  return r;
}

StableIdealResult stable_ideal(const CIInput& input, Budget& budget) {
  const Ctx& ctx = input.ctx;
  StableIdealResult r;
  r.descent.kind = ChainKind::JDescent;

  Poly fp1 = poly_pow(product_of_lifts(input, 1), ctx->p - 1);
  std::vector<Poly> ones = {
      Poly::constant(ctx, ModRing(ctx->p, 1), 1)};  // J_0 = (1)

  try {
    ChainLevel prev = prune_level(ones, budget);
    for (std::uint32_t e = 0; e < input.options.sigma_budget; ++e) {
      ChainLevel next = prune_level(trace_ideal(prev.gens, fp1), budget);
      // The descent J_(e+1) inside J_e is structural; a violation is a bug.
      if (!ideal_contains(prev.gb, next.gens, budget))
        throw InternalError("trace descent violated: J_(e+1) is not "
                            "contained in J_e: bug");
      bool stable = gb_equal(next.gb, prev.gb);
      r.descent.levels.push_back(next);
      if (stable) {
        r.conclusive = true;
        r.iterations = e + 1;
        r.descent.stabilized_at = e + 1;
        r.gens = next.gens;
        r.gb = next.gb;
        return r;
      }
      prev = std::move(next);
    }
  } catch (const ResourceLimitError&) {
    r.descent.budget_exhausted = true;
    return r;
  }
  return r;  // sigma budget exhausted: inconclusive
}

std::vector<Poly> iterated_trace_direct(const CIInput& input,
                                        std::uint32_t e) {
  const Ctx& ctx = input.ctx;
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) q *= ctx->p;
  Poly fq = poly_pow(product_of_lifts(input, 1), q - 1);
  std::vector<Poly> out;
  std::vector<std::uint32_t> b(ctx->nvars(), 0);
  do {
    Poly shifted = fq.shifted(Monomial(std::vector<std::uint32_t>(b)));
    Poly traced = cartier_u_direct(shifted, e);
    if (!traced.is_zero()) out.push_back(std::move(traced));
  } while (next_tuple(b, static_cast<std::uint32_t>(q)));
  return out;
}

FFInftyResult is_qf_finfty(const CIInput& input, const HeightResult& ht,
                           const StableIdealResult& stable, Budget& budget) {
  if (ht.kind != HeightClass::Finite)
    throw InputError("quasi-(F,F^inf) decision requires a finite height");
  if (!stable.conclusive)
    throw InputError("quasi-(F,F^inf) decision requires the stable ideal");

  const Ctx& ctx = input.ctx;
  FFInftyResult r;
  r.chain.kind = ChainKind::IPrimeChain;

  Poly fbar = product_of_lifts(input, 1);
  Poly fp1 = poly_pow(fbar, ctx->p - 1);
  Poly multiplier = delta_term(input);
  std::vector<Poly> frobenius_powers = frobenius_powers_of_lifts(input);

  // I'_1 = f^(p-1) I' + I^[p]
  std::vector<Poly> gens;
  for (const auto& g : stable.gens) gens.push_back(fp1 * g);
  for (const auto& g : frobenius_powers) gens.push_back(g);
  ChainLevel level = prune_level(std::move(gens), budget);
  level.inside_mp = level_inside_mp(level.gens, ctx);
  r.chain.levels.push_back(level);

  for (std::uint32_t n = 2; n <= ht.value; ++n) {
    std::vector<Poly> next = trace_ideal(r.chain.levels.back().gens,
                                         multiplier);
    next.push_back(fp1);
    for (const auto& g : frobenius_powers) next.push_back(g);
    ChainLevel lv = prune_level(std::move(next), budget);
    lv.inside_mp = level_inside_mp(lv.gens, ctx);
    if (!ideal_contains(lv.gb, r.chain.levels.back().gens, budget))
      throw InternalError("primed chain monotonicity violated: bug");
    r.chain.levels.push_back(std::move(lv));
  }

  // I'_n sits inside I_n at every computed level.
  for (std::size_t i = 0; i < r.chain.levels.size() &&
                          i < ht.chain.levels.size();
       ++i) {
    if (!ideal_contains(ht.chain.levels[i].gb, r.chain.levels[i].gens,
                        budget))
      throw InternalError("primed chain escaped the plain chain: bug");
  }

  r.value = !r.chain.levels.back().inside_mp;
  return r;
}

}  // namespace qfs
