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

#include "groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace qfs {

namespace {

const Monomial& leading_monomial(const Poly& f) {
  return f.terms().rbegin()->first;
}

std::uint64_t leading_coeff(const Poly& f) { return f.terms().rbegin()->second; }

std::uint64_t inverse_mod_p(std::uint64_t c, std::uint64_t p) {
  // Fermat: c^(p-2) mod p
  std::uint64_t r = 1, base = c % p, e = p - 2;
  while (e) {
    if (e & 1) r = (static_cast<unsigned __int128>(r) * base) % p;
    base = (static_cast<unsigned __int128>(base) * base) % p;
    e >>= 1;
  }
  return r;
}

Poly make_monic(const Poly& f) {
  std::uint64_t lc = leading_coeff(f);
  if (lc == 1) return f;
  return f.scaled(inverse_mod_p(lc, f.ring().p));
}

void check_field(const Poly& f) {
  if (f.ring().k != 1)
    throw InputError("Groebner computations require precision-1 generators");
}

/// Full reduction of f against an arbitrary list of reducers (not
/// necessarily a Groebner basis). Deterministic: always reduces the
/// largest reducible term with the first dividing reducer.
Poly reduce_full(const Poly& f, const std::vector<Poly>& reducers,
                 Budget& budget) {
  Poly rem(f.ctx(), f.ring());
  Poly h = f;
  while (!h.is_zero()) {
    auto lead = *h.terms().rbegin();
    const Poly* reducer = nullptr;
    for (const auto& g : reducers)
      if (!g.is_zero() && monomial_divides(leading_monomial(g), lead.first)) {
        reducer = &g;
        break;
      }
    if (reducer) {
      budget.charge();
      Monomial shift = monomial_div(lead.first, leading_monomial(*reducer));
      std::uint64_t factor = h.ring().mul(
          lead.second,
          inverse_mod_p(leading_coeff(*reducer), h.ring().p));
      h = h - reducer->shifted(shift).scaled(factor);
    } else {
      rem.add_term(lead.first, lead.second);
      h = h - Poly::monomial(h.ctx(), h.ring(), lead.first, lead.second);
    }
  }
  return rem;
}

Poly s_polynomial(const Poly& f, const Poly& g) {
  Monomial lcm = monomial_lcm(leading_monomial(f), leading_monomial(g));
  Poly a = f.shifted(monomial_div(lcm, leading_monomial(f)))
               .scaled(inverse_mod_p(leading_coeff(f), f.ring().p));
  Poly b = g.shifted(monomial_div(lcm, leading_monomial(g)))
               .scaled(inverse_mod_p(leading_coeff(g), g.ring().p));
  return a - b;
}

bool coprime_leading_terms(const Poly& f, const Poly& g) {
  const Monomial& a = leading_monomial(f);
  const Monomial& b = leading_monomial(g);
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

struct PairKey {
  Monomial lcm;
  std::uint64_t seq;
  std::uint32_t i, j;
};

struct PairKeyLess {
  bool operator()(const PairKey& a, const PairKey& b) const {
    DegRevLexLess less;
    if (less(a.lcm, b.lcm)) return true;
    if (less(b.lcm, a.lcm)) return false;
    return a.seq < b.seq;
  }
};

/// Canonical ordering of basis elements for the reduced-GB normal form:
/// ascending leading monomial (leading terms are pairwise distinct there).
void sort_by_leading_monomial(std::vector<Poly>& polys) {
  DegRevLexLess less;
  std::sort(polys.begin(), polys.end(), [&](const Poly& a, const Poly& b) {
    return less(leading_monomial(a), leading_monomial(b));
  });
}

}  // namespace

bool GroebnerBasis::contains_unit() const {
  return basis.size() == 1 && basis[0].num_terms() == 1 &&
         basis[0].terms().begin()->first.is_one();
}

bool gb_equal(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (!same_context(a.ctx, b.ctx)) return false;
  return a.basis == b.basis;
}

GroebnerBasis buchberger(const std::vector<Poly>& gens, Budget& budget) {
  Ctx ctx;
  std::vector<Poly> basis;
  for (const auto& g : gens) {
    if (!ctx) ctx = g.ctx();
    check_field(g);
    if (!same_context(ctx, g.ctx()))
      throw InputError("generators come from different contexts");
    if (!g.is_zero()) basis.push_back(make_monic(g));
  }
  if (!ctx && !gens.empty()) ctx = gens.front().ctx();
  if (basis.empty()) return GroebnerBasis{ctx, {}};

  std::set<PairKey, PairKeyLess> queue;
  std::uint64_t seq = 0;
  auto push_pairs_for = [&](std::uint32_t m) {
    for (std::uint32_t i = 0; i < m; ++i)
      queue.insert(PairKey{
          monomial_lcm(leading_monomial(basis[i]), leading_monomial(basis[m])),
          seq++, i, m});
  };
  for (std::uint32_t m = 1; m < basis.size(); ++m) push_pairs_for(m);

  // Pairs whose S-polynomial is known to have a standard representation:
  // processed pairs and coprime-lcm skips. Only those back the chain
  // criterion.
  std::set<std::pair<std::uint32_t, std::uint32_t>> settled;
  auto is_settled = [&](std::uint32_t a, std::uint32_t b) {
    if (a > b) std::swap(a, b);
    return settled.count({a, b}) != 0;
  };

  while (!queue.empty()) {
    PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    budget.charge();

    if (coprime_leading_terms(basis[pk.i], basis[pk.j])) {
      settled.insert({pk.i, pk.j});
      continue;
    }
    bool chain_skip = false;
    for (std::uint32_t k = 0; k < basis.size(); ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (monomial_divides(leading_monomial(basis[k]), pk.lcm) &&
          is_settled(pk.i, k) && is_settled(pk.j, k)) {
        chain_skip = true;
        break;
      }
    }
    if (chain_skip) continue;

    Poly r = reduce_full(s_polynomial(basis[pk.i], basis[pk.j]), basis, budget);
    settled.insert({pk.i, pk.j});
    if (!r.is_zero()) {
      basis.push_back(make_monic(r));
      push_pairs_for(static_cast<std::uint32_t>(basis.size() - 1));
    }
  }

  // Minimalize: drop elements whose leading term another element divides.
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Monomial& mi = leading_monomial(basis[i]);
      const Monomial& mj = leading_monomial(basis[j]);
      if (mj == mi) {
        redundant = j < i;
      } else if (monomial_divides(mj, mi)) {
        redundant = true;
      }
      if (redundant) break;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Tail-reduce each element against the others.
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly r = reduce_full(minimal[i], others, budget);
    if (!r.is_zero()) reduced.push_back(make_monic(r));
  }
  sort_by_leading_monomial(reduced);
  return GroebnerBasis{ctx, std::move(reduced)};
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb, Budget& budget) {
  check_field(f);
  if (gb.ctx && !same_context(f.ctx(), gb.ctx))
    throw InputError("normal_form: context mismatch");
  return reduce_full(f, gb.basis, budget);
}

bool ideal_contains(const GroebnerBasis& big, const std::vector<Poly>& small,
                    Budget& budget) {
  for (const auto& g : small)
    if (!normal_form(g, big, budget).is_zero()) return false;
  return true;
}

bool ideal_equal(const std::vector<Poly>& a, const std::vector<Poly>& b,
                 Budget& budget) {
  return gb_equal(buchberger(a, budget), buchberger(b, budget));
}

}  // namespace qfs
