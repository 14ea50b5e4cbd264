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

/*
 * C interface of the qfs engine: quasi-F-splitting heights, stable trace
 * ideals, quasi-(F,F^inf) decisions, and perfectoid-pure-threshold
 * output for complete-intersection lifts.
 *
 * Jobs and reports are opaque handles. Every char* returned through an
 * out-parameter or return value is heap-allocated and must be released
 * with qfs_string_free. Handles are released with their *_free function.
 * All functions are thread-compatible: distinct handles may be used from
 * distinct threads, one handle must not be shared without external
 * synchronization.
 */

#ifndef QFS_H
#define QFS_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qfs_status {
  QFS_OK = 0,           /* success */
  QFS_ERR_INPUT = 1,    /* malformed config, expression, or arguments */
  QFS_ERR_INTERNAL = 2, /* engine invariant violated (a bug) */
  QFS_INCONCLUSIVE = 3  /* a work budget ran out before an answer */
} qfs_status;

typedef struct qfs_job qfs_job;
typedef struct qfs_report qfs_report;

/* Version string of the library, e.g. "0.1.0". Do not free. */
const char* qfs_version(void);

/* JSON array of built-in preset names. Free with qfs_string_free. */
char* qfs_preset_list_json(void);

/* JSON text of a preset's configuration, or NULL for an unknown name. */
char* qfs_preset_config_json(const char* name);

/*
 * Create a job from a JSON configuration document:
 *   { "p": 2, "variables": ["x","y","z"], "lifts": ["z^2 + x^3 + y^5"],
 *     "weights": [10,6,15],
 *     "assertions": { "complete_intersection": true, ... },
 *     "limits": { "max_height": 12, "sigma_budget": 64,
 *                 "gb_budget": 1000000 } }
 * On failure returns a nonzero status and, when out_error is non-NULL,
 * stores a message there.
 */
qfs_status qfs_job_from_json(const char* json_text, qfs_job** out_job,
                             char** out_error);

/* Create a job from a built-in preset. */
qfs_status qfs_job_from_preset(const char* name, qfs_job** out_job,
                               char** out_error);

/*
 * Override a numeric limit on an existing job. Keys: "max_height",
 * "sigma_budget", "gb_budget", "dump_levels".
 */
qfs_status qfs_job_set_limit(qfs_job* job, const char* key, int64_t value);

/*
 * Run one command: "height", "ppt", or "chain". A report is produced
 * whenever the input was well-formed, even if the run was inconclusive;
 * consult qfs_report_status for the outcome. QFS_ERR_INPUT with no
 * report means the command name or config was unusable.
 */
qfs_status qfs_job_run(qfs_job* job, const char* command,
                       qfs_report** out_report, char** out_error);

/* Outcome carried by the report (maps onto process exit codes). */
int qfs_report_status(const qfs_report* report);

/* Deterministic JSON serialization (identical config => identical bytes,
 * timing field aside). */
char* qfs_report_json(const qfs_report* report);

/* Human-readable rendering. */
char* qfs_report_text(const qfs_report* report);

/*
 * Randomized property suite of the Witt-vector kernel; deterministic for
 * a fixed seed. Returns QFS_OK when every property holds,
 * QFS_ERR_INTERNAL when some property fails (the summary names it), and
 * QFS_ERR_INPUT for arguments outside the documented range
 * (p in {2,3,5}; length 2..4 for p=2, 2..3 otherwise).
 */
qfs_status qfs_witt_selftest(uint32_t p, uint32_t length, uint32_t trials,
                             uint64_t seed, char** out_summary);

void qfs_job_free(qfs_job* job);
void qfs_report_free(qfs_report* report);
void qfs_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* QFS_H */
