/* Copyright 2026 The NetCollab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the netcollab library.
 *
 * Every function returns an nc_status. On failure a description is available
 * from nc_last_error() on the calling thread until the next call. Strings
 * returned through char** out-parameters are owned by the caller and must be
 * released with nc_string_free. */

#ifndef NETCOLLAB_NETCOLLAB_H_
#define NETCOLLAB_NETCOLLAB_H_

#include <stddef.h>

#if defined(_WIN32)
#if defined(NC_BUILDING_LIBRARY)
#define NC_API __declspec(dllexport)
#else
#define NC_API __declspec(dllimport)
#endif
#else
#define NC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nc_status {
  NC_OK = 0,
  NC_ERR_DUPLICATE_ID = 10,
  NC_ERR_EMPTY_ACTIONS = 11,
  NC_ERR_UNKNOWN_PROTOCOL = 12,
  NC_ERR_MISSING_ATTRIBUTE = 13,
  NC_ERR_UNKNOWN_CARD = 14,
  NC_ERR_NO_AGENT_FOR_ACTION = 15,
  NC_ERR_EPISODE_CLOSED = 16,
  NC_ERR_MALFORMED_AGENT_RESPONSE = 17,
  NC_ERR_NOT_AN_ACTION = 18,
  NC_ERR_UNSUPPORTED_ACTION = 19,
  NC_ERR_BAD_CONFIG = 20,
  NC_ERR_INVALID_WEIGHTS = 21,
  NC_ERR_BAD_DATASET = 22,
  NC_ERR_BAD_CHECKPOINT = 23,
  NC_ERR_INVALID_ARGUMENT = 24,
  NC_ERR_IO = 25,
  NC_ERR_INTERNAL = 99
} nc_status;

typedef struct nc_session nc_session;
typedef struct nc_registry nc_registry;

/* Description of the last failure on this thread; "" after success. */
NC_API const char* nc_last_error(void);
NC_API const char* nc_status_name(nc_status status);
NC_API void nc_string_free(char* s);

/* Sessions: a validated run configuration plus the current policy.
 * config_path may be NULL for the case-study defaults. overrides holds
 * n_overrides "key=value" strings. */
NC_API nc_status nc_session_create(const char* config_path, const char* const* overrides,
                                   size_t n_overrides, nc_session** out);
NC_API nc_status nc_session_create_from_json(const char* config_json,
                                             const char* const* overrides, size_t n_overrides,
                                             nc_session** out);
NC_API void nc_session_destroy(nc_session* session);

/* The configured output directory. */
NC_API nc_status nc_session_out_dir(const nc_session* session, char** out_dir);

NC_API nc_status nc_session_load_checkpoint(nc_session* session, const char* path);
NC_API nc_status nc_session_save_checkpoint(const nc_session* session, const char* path);

/* One seeded episode. task_class and forced_action may be NULL. log_line
 * receives the JSONL record, transcript a readable rendering (either may be
 * NULL). *failed is set to 1 for a failure outcome. */
NC_API nc_status nc_session_run(const nc_session* session, const char* task_class,
                                const char* forced_action, char** log_line, char** transcript,
                                int* failed);

/* Writes `dialogues` scripted demonstrations as an SFT dataset (JSONL);
 * 0 selects the configured sft.demos. */
NC_API nc_status nc_session_write_demos(const nc_session* session, size_t dialogues,
                                        const char* path);

/* Supervised warm-up on a JSONL dataset; replaces the session policy. */
NC_API nc_status nc_session_sft(nc_session* session, const char* dataset_path,
                                double* final_loss, double* mean_demo_probability);

/* Trains from the current policy and writes the CSV report to csv_path.
 * When checkpoint_dir is non-NULL, periodic checkpoints are written there
 * as checkpoint_iter_<k>.json. collapse_warnings may be NULL. */
NC_API nc_status nc_session_train(nc_session* session, const char* csv_path,
                                  const char* checkpoint_dir, size_t* collapse_warnings);

/* Evaluates the current policy on n seeded episodes (0 selects the
 * configured eval.episodes). sampled = 0 selects greedy decisions.
 * summary_json receives the summary object. */
NC_API nc_status nc_session_eval(const nc_session* session, size_t n, int sampled,
                                 char** summary_json);

/* Standalone registry and router. */
NC_API nc_status nc_registry_create(double ewma_alpha, nc_registry** out);
NC_API void nc_registry_destroy(nc_registry* registry);
/* Registers every card of a JSON agent-card array. */
NC_API nc_status nc_registry_load_cards(nc_registry* registry, const char* cards_json);
/* Cards supporting action_type, as an agent-card JSON array. */
NC_API nc_status nc_registry_discover(const nc_registry* registry, const char* action_type,
                                      char** cards_json);
NC_API nc_status nc_registry_update_metrics(nc_registry* registry, const char* card_id,
                                            double latency_ms, int success, double load);
NC_API nc_status nc_registry_deregister(nc_registry* registry, const char* card_id);
/* Routes with the default weights (w_load = w_accuracy = w_latency = 1,
 * latency_ref_ms = 100). */
NC_API nc_status nc_registry_route(const nc_registry* registry, const char* action_type,
                                   char** card_id);

#ifdef __cplusplus
}
#endif

#endif /* NETCOLLAB_NETCOLLAB_H_ */
