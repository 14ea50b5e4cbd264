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

#ifndef QFS_GROEBNER_HPP
#define QFS_GROEBNER_HPP

#include <vector>

#include "poly.hpp"

namespace qfs {

/// Generating set of an ideal over F_p (precision-1 polynomials).
struct IdealGens {
  Ctx ctx;
  std::vector<Poly> gens;
};

/// Reduced Groebner basis in degrevlex: monic elements, pairwise
/// non-divisible leading terms, every element fully tail-reduced against
/// the others, sorted by leading term. Unique for the ideal.
struct GroebnerBasis {
  Ctx ctx;
  std::vector<Poly> basis;

  bool is_zero_ideal() const { return basis.empty(); }
  bool contains_unit() const;
};

bool gb_equal(const GroebnerBasis& a, const GroebnerBasis& b);

/// Buchberger's algorithm with the normal selection strategy (minimal lcm
/// in degrevlex, ties by pair creation order) and the coprime-lcm and
/// chain pruning criteria. Deterministic for a fixed generator order.
/// Charges one budget step per single reduction; throws
/// ResourceLimitError when the budget runs out.
GroebnerBasis buchberger(const std::vector<Poly>& gens, Budget& budget);

inline GroebnerBasis buchberger(const IdealGens& gens, Budget& budget) {
  return buchberger(gens.gens, budget);
}

/// Remainder of multivariate division by the basis; zero iff f lies in
/// the ideal.
Poly normal_form(const Poly& f, const GroebnerBasis& gb, Budget& budget);

/// Every generator of `small` reduces to zero modulo `big`.
bool ideal_contains(const GroebnerBasis& big, const std::vector<Poly>& small,
                    Budget& budget);

/// Equality via uniqueness of the reduced Groebner basis.
bool ideal_equal(const std::vector<Poly>& a, const std::vector<Poly>& b,
                 Budget& budget);

}  // namespace qfs

#endif  // QFS_GROEBNER_HPP
