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

#include "job.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include <json.hpp>

namespace qfs {

using OJson = nlohmann::ordered_json;

namespace {

std::vector<std::string> poly_strings(const std::vector<Poly>& polys) {
  std::vector<std::string> out;
  out.reserve(polys.size());
  for (const auto& g : polys) out.push_back(g.str());
  return out;
}

OJson chain_to_json(const IdealChain& chain, std::uint32_t dump_levels) {
  OJson levels = OJson::array();
  std::uint32_t count = 0;
  for (const auto& lv : chain.levels) {
    if (count >= dump_levels) break;
    OJson j;
    j["generators"] = poly_strings(lv.gens);
    j["reduced_groebner_basis"] = poly_strings(lv.gb.basis);
    j["inside_mp"] = lv.inside_mp;
    levels.push_back(std::move(j));
    ++count;
  }
  OJson out;
  out["levels"] = std::move(levels);
  if (chain.stabilized_at) out["stabilized_at"] = *chain.stabilized_at;
  if (chain.budget_exhausted) out["budget_exhausted"] = true;
  return out;
}

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::Positive: return "positive";
    case Regime::CalabiYau: return "calabi-yau";
    case Regime::Fano: return "fano";
  }
  return "?";
}

std::string ppt_kind_name(PptKind k) {
  switch (k) {
    case PptKind::Exact: return "exact";
    case PptKind::Interval: return "interval";
    case PptKind::UpperBoundOnly: return "upper_bound_only";
    case PptKind::Unknown: return "unknown";
  }
  return "?";
}

struct PresetDef {
  const char* name;
  const char* description;
  JobConfig (*make)();
};

JobConfig base_config(std::uint32_t p, std::vector<std::string> vars,
                      std::vector<std::string> lifts,
                      std::vector<std::uint64_t> weights, Assertions a) {
  JobConfig c;
  c.p = p;
  c.variables = std::move(vars);
  c.lifts = std::move(lifts);
  c.weights = std::move(weights);
  c.assertions = a;
  return c;
}

Assertions all_asserts() { return Assertions{true, true, true, true}; }

JobConfig dn_family(std::uint32_t n) {
  // z^2 + x^2 y + x y^n, weighted (2n-2, 2, 2n-1), degree 4n-2.
  Assertions a = all_asserts();
  JobConfig c = base_config(
      2, {"x", "y", "z"},
      {"z^2 + x^2*y + x*y^" + std::to_string(n)},
      {2 * (std::uint64_t)n - 2, 2, 2 * (std::uint64_t)n - 1}, a);
  return c;
}

const std::vector<PresetDef>& preset_table() {
  static const std::vector<PresetDef> table = {
      {"ex-cubic-p2", "Fermat cubic cone, p = 2",
       [] {
         return base_config(2, {"x", "y", "z"}, {"x^3 + y^3 + z^3"},
                            {1, 1, 1}, all_asserts());
       }},
      {"ex-e8-p2", "z^2 + x^3 + y^5, p = 2",
       [] {
         return base_config(2, {"x", "y", "z"}, {"z^2 + x^3 + y^5"},
                            {10, 6, 15}, all_asserts());
       }},
      {"ex-e8-p3", "z^2 + x^3 + y^5, p = 3",
       [] {
         return base_config(3, {"x", "y", "z"}, {"z^2 + x^3 + y^5"},
                            {10, 6, 15}, all_asserts());
       }},
      {"ex-e8-p5", "z^2 + x^3 + y^5, p = 5",
       [] {
         return base_config(5, {"x", "y", "z"}, {"z^2 + x^3 + y^5"},
                            {10, 6, 15}, all_asserts());
       }},
      {"ex-e8-p7", "z^2 + x^3 + y^5, p = 7 (F-pure fiber)",
       [] {
         return base_config(7, {"x", "y", "z"}, {"z^2 + x^3 + y^5"},
                            {10, 6, 15}, all_asserts());
       }},
      {"ex-quartic-p2", "w^2 + xyz(x+y+z), p = 2",
       [] {
         Assertions a;
         a.complete_intersection = true;
         a.normal = true;
         a.quasi_gorenstein = true;
         return base_config(2, {"x", "y", "z", "w"},
                            {"w^2 + x*y*z*(x + y + z)"}, {1, 1, 1, 2}, a);
       }},
      {"ex-quartic-lift-p2", "w^2 + xyz(x+y+z) + 2(xy+xz+yz)w, p = 2",
       [] {
         Assertions a;
         a.complete_intersection = true;
         a.normal = true;
         a.quasi_gorenstein = true;
         return base_config(
             2, {"x", "y", "z", "w"},
             {"w^2 + x*y*z*(x + y + z) + 2*(x*y + x*z + y*z)*w"},
             {1, 1, 1, 2}, a);
       }},
      {"ex-dn-n2-p2", "z^2 + x^2 y + x y^2, p = 2", [] { return dn_family(2); }},
      {"ex-dn-n3-p2", "z^2 + x^2 y + x y^3, p = 2", [] { return dn_family(3); }},
      {"ex-dn-n4-p2", "z^2 + x^2 y + x y^4, p = 2", [] { return dn_family(4); }},
      {"ex-dn-n5-p2", "z^2 + x^2 y + x y^5, p = 2", [] { return dn_family(5); }},
      {"ex-dn-n8-p2", "z^2 + x^2 y + x y^8, p = 2", [] { return dn_family(8); }},
      {"ex-dn-n9-p2", "z^2 + x^2 y + x y^9, p = 2", [] { return dn_family(9); }},
      {"ex-double-cubic-p2", "two disjoint Fermat cubics in 6 variables, p = 2",
       [] {
         Assertions a;
         a.complete_intersection = true;
         return base_config(2, {"x", "y", "z", "x'", "y'", "z'"},
                            {"x^3 + y^3 + z^3", "x'^3 + y'^3 + z'^3"},
                            {1, 1, 1, 1, 1, 1}, a);
       }},
  };
  return table;
}

}  // namespace

JobConfig JobConfig::from_json_text(const std::string& text) {
  OJson j;
  try {
    j = OJson::parse(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("config must be a JSON object");

  static const std::vector<std::string> known = {
      "p", "variables", "lifts", "weights", "assertions", "limits",
      "dump_levels", "preset"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find(known.begin(), known.end(), it.key()) == known.end())
      throw InputError("unknown config field '" + it.key() + "'");
  }

  JobConfig c;
  try {
    if (!j.contains("p")) throw InputError("config needs a prime 'p'");
    c.p = j.at("p").get<std::uint32_t>();
    if (!j.contains("variables") || !j.contains("lifts"))
      throw InputError("config needs 'variables' and 'lifts'");
    c.variables = j.at("variables").get<std::vector<std::string>>();
    c.lifts = j.at("lifts").get<std::vector<std::string>>();
    if (j.contains("weights"))
      c.weights = j.at("weights").get<std::vector<std::uint64_t>>();
    if (j.contains("assertions")) {
      const auto& a = j.at("assertions");
      c.assertions.complete_intersection =
          a.value("complete_intersection", false);
      c.assertions.normal = a.value("normal", false);
      c.assertions.quasi_gorenstein = a.value("quasi_gorenstein", false);
      c.assertions.sfr_punctured = a.value("sfr_punctured", false);
    }
    if (j.contains("limits")) {
      const auto& l = j.at("limits");
      c.limits.max_height = l.value("max_height", c.limits.max_height);
      c.limits.sigma_budget = l.value("sigma_budget", c.limits.sigma_budget);
      c.limits.gb_budget = l.value("gb_budget", c.limits.gb_budget);
    }
    c.dump_levels = j.value("dump_levels", c.dump_levels);
    c.preset = j.value("preset", std::string());
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(std::string("malformed config: ") + e.what());
  }
  return c;
}

std::string JobConfig::to_json_text() const {
  OJson j;
  j["p"] = p;
  j["variables"] = variables;
  j["lifts"] = lifts;
  if (weights) j["weights"] = *weights;
  OJson a;
  a["complete_intersection"] = assertions.complete_intersection;
  a["normal"] = assertions.normal;
  a["quasi_gorenstein"] = assertions.quasi_gorenstein;
  a["sfr_punctured"] = assertions.sfr_punctured;
  j["assertions"] = std::move(a);
  OJson l;
  l["max_height"] = limits.max_height;
  l["sigma_budget"] = limits.sigma_budget;
  l["gb_budget"] = limits.gb_budget;
  j["limits"] = std::move(l);
  j["dump_levels"] = dump_levels;
  if (!preset.empty()) j["preset"] = preset;
  return j.dump(2);
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& d : preset_table()) out.push_back(d.name);
  return out;
}

JobConfig preset_config(const std::string& name) {
  for (const auto& d : preset_table())
    if (name == d.name) {
      JobConfig c = d.make();
      c.preset = name;
      return c;
    }
  throw InputError("unknown preset '" + name + "'; available: " + [] {
    std::string all;
    for (const auto& d : preset_table()) {
      if (!all.empty()) all += ", ";
      all += d.name;
    }
    return all;
  }());
}

Command parse_command(const std::string& name) {
  if (name == "height") return Command::Height;
  if (name == "ppt") return Command::Ppt;
  if (name == "chain") return Command::Chain;
  throw InputError("unknown command '" + name +
                   "' (expected height, ppt, or chain)");
}

namespace {

struct Pipeline {
  Ctx ctx;
  CIInput input;
  std::optional<Grading> grading;
  std::optional<long> a;
};

Pipeline build_pipeline(const JobConfig& config) {
  Ctx ctx = make_context(config.p, config.variables);
  std::vector<Poly> lifts;
  for (std::size_t i = 0; i < config.lifts.size(); ++i) {
    try {
      lifts.push_back(parse_poly(config.lifts[i], ctx, 2));
    } catch (const InputError& e) {
      throw InputError("lift " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  if (lifts.empty()) throw InputError("config needs at least one lift");
  CIInput input(ctx, std::move(lifts), config.limits);

  std::optional<Grading> grading;
  std::optional<long> a;
  if (config.weights) {
    Grading g;
    g.weights = *config.weights;
    for (std::size_t i = 0; i < input.lifts.size(); ++i) {
      HomogeneityCheck hc = check_homogeneous(
          reduce_precision(input.lifts[i], 1), g.weights);
      if (!hc.ok)
        throw InputError("lift " + std::to_string(i + 1) + ": " + hc.error);
      // The grading must also hold for the lift itself (p has degree 0).
      HomogeneityCheck hc2 = check_homogeneous(input.lifts[i], g.weights);
      if (!hc2.ok)
        throw InputError("lift " + std::to_string(i + 1) +
                         " (as an integer lift): " + hc2.error);
      g.degrees.push_back(hc.degree);
    }
    a = a_invariant(g);
    grading = std::move(g);
  }
  return Pipeline{ctx, std::move(input), std::move(grading), a};
}

}  // namespace

Report run_job(const JobConfig& config, Command command) {
  Report report;
  report.command = command;
  report.config = config;
  auto started = std::chrono::steady_clock::now();
  auto finish = [&](RunStatus st) {
    report.status = st;
    report.timing_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - started)
                           .count();
    return report;
  };

  try {
    Pipeline pipe = build_pipeline(config);
    report.a_inv = pipe.a;
    if (pipe.grading) report.degrees = pipe.grading->degrees;

    Budget budget{config.limits.gb_budget};
    report.height = height(pipe.input, budget);
    const HeightResult& ht = *report.height;

    bool want_full = command != Command::Height;
    if (want_full) {
      StableIdealResult stable = stable_ideal(pipe.input, budget);
      if (ht.kind == HeightClass::Finite && stable.conclusive) {
        FFInftyResult ff = is_qf_finfty(pipe.input, ht, stable, budget);
        report.ffinfty = ff.value;
        report.ffinfty_detail = std::move(ff);
      }
      report.stable = std::move(stable);
      report.ppt = ppt_report(config.p, ht.kind, ht.value, report.ffinfty,
                              pipe.a, config.assertions.complete_intersection);
    }
    if (pipe.a) {
      report.graded = graded_dispatch(*pipe.a, ht.kind, ht.value, config.p,
                                      config.assertions);
      if (report.graded->consistency_failure) {
        report.error = report.graded->failure_text;
        return finish(RunStatus::InternalBug);
      }
    }
    if (ht.kind == HeightClass::Inconclusive)
      return finish(RunStatus::Inconclusive);
    if (want_full && report.stable && !report.stable->conclusive &&
        ht.kind == HeightClass::Finite)
      return finish(RunStatus::Inconclusive);
    return finish(RunStatus::Ok);
  } catch (const InputError& e) {
    report.error = e.what();
    return finish(RunStatus::InputError);
  } catch (const InternalError& e) {
    report.error = e.what();
    return finish(RunStatus::InternalBug);
  } catch (const std::exception& e) {
    report.error = std::string("unexpected error: ") + e.what();
    return finish(RunStatus::InternalBug);
  }
}

std::string Report::to_json_text() const {
  OJson j;
  OJson tool;
  tool["name"] = kToolName;
  tool["version"] = kToolVersion;
  j["tool"] = std::move(tool);
  j["command"] = command == Command::Height  ? "height"
                 : command == Command::Ppt   ? "ppt"
                                             : "chain";
  j["status"] = static_cast<int>(status);
  j["config"] = OJson::parse(config.to_json_text());
  if (!error.empty()) j["error"] = error;

  if (height) {
    OJson h;
    switch (height->kind) {
      case HeightClass::Finite:
        h["kind"] = "finite";
        h["value"] = height->value;
        h["witness"] = height->witness ? height->witness->str() : "";
        h["witness_reduced"] = height->witness_reduced.str();
        break;
      case HeightClass::Infinite:
        h["kind"] = "infinite";
        h["stabilized_at"] = height->certificate;
        break;
      case HeightClass::Inconclusive:
        h["kind"] = "inconclusive";
        h["levels_computed"] = height->levels_computed;
        break;
    }
    h["levels_computed"] = height->levels_computed;
    j["height"] = std::move(h);
  }
  if (stable) {
    OJson s;
    s["conclusive"] = stable->conclusive;
    if (stable->conclusive) {
      s["generators"] = poly_strings(stable->gb.basis);
      s["iterations"] = stable->iterations;
    }
    j["stable_ideal"] = std::move(s);
  }
  if (ffinfty) j["ffinfty"] = *ffinfty;
  if (ppt) {
    OJson p;
    p["kind"] = ppt_kind_name(ppt->kind);
    if (ppt->kind == PptKind::Exact) {
      p["value"] = rational_str(ppt->lo);
      p["decimal"] = rational_decimal(ppt->lo);
    } else if (ppt->kind == PptKind::Interval) {
      p["lower"] = rational_str(ppt->lo);
      p["upper"] = rational_str(ppt->hi);
      p["lower_decimal"] = rational_decimal(ppt->lo);
      p["upper_decimal"] = rational_decimal(ppt->hi);
    } else if (ppt->kind == PptKind::UpperBoundOnly) {
      p["upper"] = rational_str(ppt->hi);
      p["upper_decimal"] = rational_decimal(ppt->hi);
    }
    p["justification"] = ppt->justification;
    p["depends_on"] = ppt->depends_on;
    if (!ppt->note.empty()) p["note"] = ppt->note;
    j["ppt"] = std::move(p);
  }
  if (a_inv) j["a_invariant"] = *a_inv;
  if (degrees) j["weighted_degrees"] = *degrees;
  if (graded) {
    OJson g;
    g["a_invariant"] = graded->a;
    g["regime"] = regime_name(graded->regime);
    if (graded->consistency_failure) {
      g["consistency_failure"] = graded->failure_text;
    }
    OJson cs = OJson::array();
    for (const auto& c : graded->conclusions) {
      OJson cj;
      cj["text"] = c.text;
      cj["depends_on"] = c.depends_on;
      cj["conditional"] = c.conditional;
      cs.push_back(std::move(cj));
    }
    g["conclusions"] = std::move(cs);
    j["graded"] = std::move(g);
  }
  j["assertions_recorded"] = config.assertions.listed();
  j["hypotheses_note"] =
      "regular-sequence and p-torsion-freeness of the lifts are "
      "user-asserted and not verified";

  if (command == Command::Chain) {
    OJson chains;
    if (height) chains["I"] = chain_to_json(height->chain, config.dump_levels);
    if (stable)
      chains["J"] = chain_to_json(stable->descent, config.dump_levels);
    if (ffinfty_detail)
      chains["Iprime"] =
          chain_to_json(ffinfty_detail->chain, config.dump_levels);
    j["chains"] = std::move(chains);
  }
  j["timing_ms"] = timing_ms;
  return j.dump(2);
}

std::string Report::to_text() const {
  std::string out;
  out += std::string(kToolName) + " " + kToolVersion + "\n";
  out += "p = " + std::to_string(config.p) + ", variables:";
  for (const auto& v : config.variables) out += " " + v;
  out += "\n";
  for (std::size_t i = 0; i < config.lifts.size(); ++i)
    out += "lift[" + std::to_string(i) + "] = " + config.lifts[i] + "\n";
  if (!error.empty()) out += "error: " + error + "\n";
  if (height) {
    switch (height->kind) {
      case HeightClass::Finite:
        out += "height: " + std::to_string(height->value) + " (witness " +
               (height->witness ? height->witness->str() : "?") +
               ", reduced form " + height->witness_reduced.str() +
               " outside m^[p])\n";
        break;
      case HeightClass::Infinite:
        out += "height: infinite (chain stabilized inside m^[p] at level " +
               std::to_string(height->certificate) + ")\n";
        break;
      case HeightClass::Inconclusive:
        out += "height: inconclusive after " +
               std::to_string(height->levels_computed) + " levels\n";
        break;
    }
  }
  if (stable && stable->conclusive) {
    out += "stable trace ideal (reduced basis):";
    for (const auto& g : stable->gb.basis) out += " " + g.str() + ",";
    if (!stable->gb.basis.empty()) out.pop_back();
    out += " (stable after " + std::to_string(stable->iterations) +
           " iterations)\n";
  }
  if (ffinfty)
    out += std::string("quasi-(F,F^inf)-split: ") + (*ffinfty ? "yes" : "no") +
           "\n";
  if (ppt) {
    out += "ppt(div p): ";
    switch (ppt->kind) {
      case PptKind::Exact:
        out += rational_str(ppt->lo) + " = " + rational_decimal(ppt->lo);
        break;
      case PptKind::Interval:
        out += "[" + rational_str(ppt->lo) + ", " + rational_str(ppt->hi) +
               "]";
        break;
      case PptKind::UpperBoundOnly:
        out += "<= " + rational_str(ppt->hi);
        break;
      case PptKind::Unknown:
        out += "unknown";
        break;
    }
    out += "  [" + ppt->justification + "]\n";
    if (!ppt->note.empty()) out += "  note: " + ppt->note + "\n";
  }
  if (graded) {
    out += "graded: a-invariant " + std::to_string(graded->a) + " (" +
           regime_name(graded->regime) + " regime)\n";
    if (graded->consistency_failure)
      out += "  " + graded->failure_text + "\n";
    for (const auto& c : graded->conclusions) {
      out += "  - " + c.text;
      if (!c.depends_on.empty()) {
        out += " [depends on:";
        for (const auto& d : c.depends_on) out += " " + d;
        out += "]";
      }
      out += "\n";
    }
  }
  auto listed = config.assertions.listed();
  out += "assertions recorded:";
  if (listed.empty()) out += " none";
  for (const auto& s : listed) out += " " + s;
  out += "\n";
  if (command == Command::Chain && height) {
    out += "I-chain levels (generators after pruning):\n";
    std::uint32_t count = 0;
    for (const auto& lv : height->chain.levels) {
      if (count >= config.dump_levels) break;
      out += "  I_" + std::to_string(count + 1) +
             (lv.inside_mp ? " (inside m^[p]):" : " (outside m^[p]):");
      for (const auto& g : lv.gens) out += "  " + g.str() + ";";
      out += "\n";
      ++count;
    }
  }
  out += "time: " + std::to_string(timing_ms) + " ms\n";
  return out;
}

}  // namespace qfs
