// Copyright 2026 The qfs authors. Apache-2.0.
//
// Exercises the shared-library C interface exactly as an external client
// would: opaque handles, error codes, string ownership.

#include <doctest.h>

#include <json.hpp>
#include <string>

#include "qfs/qfs.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  qfs_string_free(s);
  return out;
}

std::string run_preset_json(const char* preset, const char* command) {
  qfs_job* job = nullptr;
  char* err = nullptr;
  REQUIRE(qfs_job_from_preset(preset, &job, &err) == QFS_OK);
  qfs_report* report = nullptr;
  REQUIRE(qfs_job_run(job, command, &report, &err) == QFS_OK);
  std::string json = take(qfs_report_json(report));
  qfs_report_free(report);
  qfs_job_free(job);
  return json;
}

}  // namespace

TEST_CASE("version and preset listing") {
  CHECK(std::string(qfs_version()) == "0.1.0");
  auto names = nlohmann::json::parse(take(qfs_preset_list_json()));
  CHECK(names.is_array());
  CHECK(names.size() >= 12);
  bool found = false;
  for (const auto& n : names)
    if (n.get<std::string>() == "ex-e8-p2") found = true;
  CHECK(found);
  CHECK(qfs_preset_config_json("no-such-preset") == nullptr);
  std::string cfg = take(qfs_preset_config_json("ex-e8-p2"));
  auto j = nlohmann::json::parse(cfg);
  CHECK(j["p"] == 2);
}

TEST_CASE("job from JSON and the height pipeline") {
  const char* config = R"({
    "p": 2,
    "variables": ["x", "y", "z"],
    "lifts": ["x^3 + y^3 + z^3"],
    "assertions": {"complete_intersection": true}
  })";
  qfs_job* job = nullptr;
  char* err = nullptr;
  REQUIRE(qfs_job_from_json(config, &job, &err) == QFS_OK);
  qfs_report* report = nullptr;
  REQUIRE(qfs_job_run(job, "height", &report, &err) == QFS_OK);
  CHECK(qfs_report_status(report) == QFS_OK);
  auto j = nlohmann::json::parse(take(qfs_report_json(report)));
  CHECK(j["height"]["kind"] == "finite");
  CHECK(j["height"]["value"] == 2);
  std::string text = take(qfs_report_text(report));
  CHECK(text.find("height: 2") != std::string::npos);
  qfs_report_free(report);
  qfs_job_free(job);
}

TEST_CASE("input errors come back as status 1 with a message") {
  qfs_job* job = nullptr;
  char* err = nullptr;
  SUBCASE("nonprime modulus") {
    const char* config =
        R"({"p": 4, "variables": ["x"], "lifts": ["x"]})";
    REQUIRE(qfs_job_from_json(config, &job, &err) == QFS_OK);
    qfs_report* report = nullptr;
    REQUIRE(qfs_job_run(job, "height", &report, &err) == QFS_OK);
    CHECK(qfs_report_status(report) == QFS_ERR_INPUT);
    auto j = nlohmann::json::parse(take(qfs_report_json(report)));
    CHECK(j.contains("error"));
    qfs_report_free(report);
    qfs_job_free(job);
  }
  SUBCASE("malformed JSON") {
    CHECK(qfs_job_from_json("{not json", &job, &err) == QFS_ERR_INPUT);
    CHECK(!take(err).empty());
  }
  SUBCASE("weights that make a lift inhomogeneous") {
    const char* config = R"({"p": 2, "variables": ["x", "y"],
                             "lifts": ["x^2 + y^3"], "weights": [1, 1]})";
    REQUIRE(qfs_job_from_json(config, &job, &err) == QFS_OK);
    qfs_report* report = nullptr;
    REQUIRE(qfs_job_run(job, "height", &report, &err) == QFS_OK);
    CHECK(qfs_report_status(report) == QFS_ERR_INPUT);
    auto j = nlohmann::json::parse(take(qfs_report_json(report)));
    CHECK(j["error"].get<std::string>().find("homogeneous") !=
          std::string::npos);
    qfs_report_free(report);
    qfs_job_free(job);
  }
  SUBCASE("unknown preset") {
    err = nullptr;
    CHECK(qfs_job_from_preset("nope", &job, &err) == QFS_ERR_INPUT);
    CHECK(take(err).find("unknown preset") != std::string::npos);
  }
  SUBCASE("unknown command") {
    err = nullptr;
    REQUIRE(qfs_job_from_preset("ex-cubic-p2", &job, &err) == QFS_OK);
    qfs_report* report = nullptr;
    CHECK(qfs_job_run(job, "frobnicate", &report, &err) == QFS_ERR_INPUT);
    CHECK(!take(err).empty());
    qfs_job_free(job);
  }
}

TEST_CASE("limit overrides flow through") {
  qfs_job* job = nullptr;
  char* err = nullptr;
  REQUIRE(qfs_job_from_preset("ex-e8-p2", &job, &err) == QFS_OK);
  REQUIRE(qfs_job_set_limit(job, "gb_budget", 5) == QFS_OK);
  CHECK(qfs_job_set_limit(job, "no_such_limit", 5) == QFS_ERR_INPUT);
  qfs_report* report = nullptr;
  REQUIRE(qfs_job_run(job, "height", &report, &err) == QFS_OK);
  CHECK(qfs_report_status(report) == QFS_INCONCLUSIVE);
  qfs_report_free(report);
  qfs_job_free(job);
}

TEST_CASE("reports are byte-deterministic apart from timing") {
  auto strip_timing = [](const std::string& text) {
    auto j = nlohmann::ordered_json::parse(text);
    j.erase("timing_ms");
    return j.dump(2);
  };
  std::string a = run_preset_json("ex-e8-p2", "ppt");
  std::string b = run_preset_json("ex-e8-p2", "ppt");
  CHECK(strip_timing(a) == strip_timing(b));
}

TEST_CASE("the ppt pipeline through the C API") {
  auto j = nlohmann::json::parse(run_preset_json("ex-e8-p2", "ppt"));
  CHECK(j["height"]["value"] == 4);
  CHECK(j["ffinfty"] == true);
  CHECK(j["ppt"]["kind"] == "exact");
  CHECK(j["ppt"]["value"] == "1/8");
  CHECK(j["ppt"]["decimal"] == "0.125");
  CHECK(j["graded"]["regime"] == "fano");
  CHECK(j["stable_ideal"]["conclusive"] == true);
}

TEST_CASE("chain dumps include per-level generators") {
  auto j = nlohmann::json::parse(
      run_preset_json("ex-quartic-lift-p2", "chain"));
  REQUIRE(j.contains("chains"));
  CHECK(j["chains"]["I"]["levels"].size() >= 2);
  CHECK(j["chains"]["I"]["levels"][0].contains("reduced_groebner_basis"));
  CHECK(j["chains"].contains("J"));
}

TEST_CASE("a dump-level cap of zero empties the dump") {
  qfs_job* job = nullptr;
  char* err = nullptr;
  REQUIRE(qfs_job_from_preset("ex-cubic-p2", &job, &err) == QFS_OK);
  REQUIRE(qfs_job_set_limit(job, "dump_levels", 0) == QFS_OK);
  qfs_report* report = nullptr;
  REQUIRE(qfs_job_run(job, "chain", &report, &err) == QFS_OK);
  auto j = nlohmann::json::parse(take(qfs_report_json(report)));
  CHECK(j["chains"]["I"]["levels"].empty());
  qfs_report_free(report);
  qfs_job_free(job);
}

TEST_CASE("witt selftest through the C API") {
  char* summary = nullptr;
  CHECK(qfs_witt_selftest(2, 2, 5, 7, &summary) == QFS_OK);
  CHECK(take(summary).find("all properties passed") != std::string::npos);
  summary = nullptr;
  CHECK(qfs_witt_selftest(2, 9, 5, 7, &summary) == QFS_ERR_INPUT);
  take(summary);
}
