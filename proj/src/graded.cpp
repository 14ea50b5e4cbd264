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

#include "graded.hpp"

namespace qfs {

namespace {

std::string monomial_str(const Ctx& ctx, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.e.size(); ++i) {
    if (!m.e[i]) continue;
    if (!out.empty()) out += "*";
    out += ctx->names[i];
    if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
  }
  return out.empty() ? "1" : out;
}

std::uint64_t weighted_degree(const Monomial& m,
                              const std::vector<std::uint64_t>& weights) {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < m.e.size(); ++i) d += weights[i] * m.e[i];
  return d;
}

}  // namespace

HomogeneityCheck check_homogeneous(const Poly& f,
                                   const std::vector<std::uint64_t>& weights) {
  HomogeneityCheck out;
  if (f.is_zero()) {
    out.error = "the zero polynomial has no weighted degree";
    return out;
  }
  if (weights.size() != f.ctx()->nvars()) {
    out.error = "weight count does not match the variable count";
    return out;
  }
  for (auto w : weights)
    if (w == 0) {
      out.error = "weights must be positive";
      return out;
    }
  const Monomial* first = nullptr;
  std::uint64_t d0 = 0;
  for (const auto& [m, c] : f.terms()) {
    std::uint64_t d = weighted_degree(m, weights);
    if (!first) {
      first = &m;
      d0 = d;
    } else if (d != d0) {
      out.error = "not weighted-homogeneous: " +
                  monomial_str(f.ctx(), *first) + " has degree " +
                  std::to_string(d0) + " but " + monomial_str(f.ctx(), m) +
                  " has degree " + std::to_string(d);
      return out;
    }
  }
  out.ok = true;
  out.degree = d0;
  return out;
}

long a_invariant(const Grading& grading) {
  long a = 0;
  for (auto d : grading.degrees) a += static_cast<long>(d);
  for (auto w : grading.weights) a -= static_cast<long>(w);
  return a;
}

GradedReport graded_dispatch(long a, HeightClass height_class,
                             std::uint32_t height_value, std::uint32_t p,
                             const Assertions& asserts) {
  GradedReport r;
  r.a = a;

  if (a > 0) {
    r.regime = Regime::Positive;
    if (height_class == HeightClass::Finite) {
      r.consistency_failure = true;
      r.failure_text =
          "CONSISTENCY FAILURE: a positive a-invariant rules out "
          "quasi-F-splitting, but the ideal chain reported finite height " +
          std::to_string(height_value) +
          "; the grading or the input assertions are wrong, or this is a "
          "bug";
    } else {
      r.conclusions.push_back(
          {"positive a-invariant: the ring cannot be quasi-F-split", {},
           false});
    }
    return r;
  }

  if (a == 0) {
    r.regime = Regime::CalabiYau;
    if (height_class == HeightClass::Finite) {
      if (asserts.complete_intersection) {
        r.conclusions.push_back(
            {"heights of the ring and of its special fiber agree here "
             "(graded complete intersection with a = 0)",
             {"complete_intersection"},
             false});
        r.conclusions.push_back(
            {"exact threshold for div(p) follows from the a = 0 digit "
             "pattern at height " + std::to_string(height_value),
             {"complete_intersection"},
             false});
      } else {
        r.conclusions.push_back(
            {"if the ring is a complete intersection, the a = 0 digit "
             "pattern would pin the threshold exactly",
             {"complete_intersection"},
             true});
      }
    }
    return r;
  }

  r.regime = Regime::Fano;
  const bool fano_hyp = asserts.normal && asserts.quasi_gorenstein &&
                        asserts.sfr_punctured;
  if (height_class == HeightClass::Finite) {
    if (fano_hyp) {
      r.conclusions.push_back(
          {"perfectoid BCM-regular (quasi-F-split cone with negative "
           "a-invariant, normal quasi-Gorenstein fiber and strongly "
           "F-regular punctured spectrum)",
           {"normal", "quasi_gorenstein", "sfr_punctured"},
           false});
    } else {
      r.conclusions.push_back(
          {"if the fiber is normal quasi-Gorenstein with strongly "
           "F-regular punctured spectrum, the ring is perfectoid "
           "BCM-regular",
           {"normal", "quasi_gorenstein", "sfr_punctured"},
           true});
    }
  } else if (height_class == HeightClass::Infinite && p == 2) {
    // Gorenstein-ness comes from the complete-intersection assertion.
    if (asserts.complete_intersection) {
      r.conclusions.push_back(
          {"NOT perfectoid BCM-regular (p = 2 and not quasi-F-split; "
           "Gorenstein via the complete-intersection assertion)",
           {"complete_intersection"},
           false});
    } else {
      r.conclusions.push_back(
          {"if the ring is Gorenstein, it is not perfectoid BCM-regular "
           "(p = 2 and not quasi-F-split)",
           {"complete_intersection"},
           true});
    }
  }
  return r;
}

}  // namespace qfs
