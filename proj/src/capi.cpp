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

#include "qfs/qfs.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "job.hpp"
#include "selftest.hpp"

struct qfs_job {
  qfs::JobConfig config;
};

struct qfs_report {
  qfs::Report report;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** out_error, const std::string& message) {
  if (out_error) *out_error = dup_string(message);
}

qfs_status classify(const std::exception& e) {
  if (dynamic_cast<const qfs::InputError*>(&e)) return QFS_ERR_INPUT;
  if (dynamic_cast<const qfs::ResourceLimitError*>(&e))
    return QFS_INCONCLUSIVE;
  return QFS_ERR_INTERNAL;
}

}  // namespace

extern "C" {

const char* qfs_version(void) { return qfs::kToolVersion; }

char* qfs_preset_list_json(void) {
  nlohmann::ordered_json j = qfs::preset_names();
  return dup_string(j.dump());
}

char* qfs_preset_config_json(const char* name) {
  if (!name) return nullptr;
  try {
    return dup_string(qfs::preset_config(name).to_json_text());
  } catch (const std::exception&) {
    return nullptr;
  }
}

qfs_status qfs_job_from_json(const char* json_text, qfs_job** out_job,
                             char** out_error) {
  if (!json_text || !out_job) {
    set_error(out_error, "null argument");
    return QFS_ERR_INPUT;
  }
  *out_job = nullptr;
  try {
    auto config = qfs::JobConfig::from_json_text(json_text);
    *out_job = new qfs_job{std::move(config)};
    return QFS_OK;
  } catch (const std::exception& e) {
    set_error(out_error, e.what());
    return classify(e);
  }
}

qfs_status qfs_job_from_preset(const char* name, qfs_job** out_job,
                               char** out_error) {
  if (!name || !out_job) {
    set_error(out_error, "null argument");
    return QFS_ERR_INPUT;
  }
  *out_job = nullptr;
  try {
    *out_job = new qfs_job{qfs::preset_config(name)};
    return QFS_OK;
  } catch (const std::exception& e) {
    set_error(out_error, e.what());
    return classify(e);
  }
}

qfs_status qfs_job_set_limit(qfs_job* job, const char* key, int64_t value) {
  if (!job || !key || value < 0) return QFS_ERR_INPUT;
  std::string k(key);
  if (k == "max_height")
    job->config.limits.max_height = static_cast<std::uint32_t>(value);
  else if (k == "sigma_budget")
    job->config.limits.sigma_budget = static_cast<std::uint32_t>(value);
  else if (k == "gb_budget")
    job->config.limits.gb_budget = static_cast<std::uint64_t>(value);
  else if (k == "dump_levels")
    job->config.dump_levels = static_cast<std::uint32_t>(value);
  else
    return QFS_ERR_INPUT;
  return QFS_OK;
}

qfs_status qfs_job_run(qfs_job* job, const char* command,
                       qfs_report** out_report, char** out_error) {
  if (!job || !command || !out_report) {
    set_error(out_error, "null argument");
    return QFS_ERR_INPUT;
  }
  *out_report = nullptr;
  try {
    qfs::Command cmd = qfs::parse_command(command);
    qfs::Report report = qfs::run_job(job->config, cmd);
    *out_report = new qfs_report{std::move(report)};
    return QFS_OK;
  } catch (const std::exception& e) {
    set_error(out_error, e.what());
    return classify(e);
  }
}

int qfs_report_status(const qfs_report* report) {
  if (!report) return QFS_ERR_INPUT;
  return static_cast<int>(report->report.status);
}

char* qfs_report_json(const qfs_report* report) {
  if (!report) return nullptr;
  return dup_string(report->report.to_json_text());
}

char* qfs_report_text(const qfs_report* report) {
  if (!report) return nullptr;
  return dup_string(report->report.to_text());
}

qfs_status qfs_witt_selftest(uint32_t p, uint32_t length, uint32_t trials,
                             uint64_t seed, char** out_summary) {
  try {
    qfs::SelftestResult r = qfs::witt_selftest(p, length, trials, seed);
    if (out_summary) *out_summary = dup_string(r.summary());
    return r.passed ? QFS_OK : QFS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    if (out_summary) *out_summary = dup_string(e.what());
    return classify(e);
  }
}

void qfs_job_free(qfs_job* job) { delete job; }
void qfs_report_free(qfs_report* report) { delete report; }
void qfs_string_free(char* s) { std::free(s); }

}  // extern "C"
