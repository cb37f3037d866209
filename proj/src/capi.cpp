// Copyright 2026 The NetCollab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netcollab/netcollab.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "netcollab/commands.hpp"
#include "netcollab/error.hpp"
#include "netcollab/io.hpp"
#include "netcollab/router.hpp"

struct nc_session {
  std::unique_ptr<netcollab::Session> impl;
};

struct nc_registry {
  netcollab::Registry impl;
};

namespace {

thread_local std::string g_last_error;

char* Dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <typename F>
nc_status Guard(F&& body) {
  try {
    body();
    g_last_error.clear();
    return NC_OK;
  } catch (const netcollab::Error& e) {
    g_last_error = e.what();
    return static_cast<nc_status>(static_cast<int>(e.code()));
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return NC_ERR_INTERNAL;
  }
}

void RequireArg(const void* p, const char* name) {
  if (p == nullptr) {
    netcollab::Fail(netcollab::ErrorCode::kInvalidArgument, std::string(name) + " must not be NULL");
  }
}

std::vector<std::string> Overrides(const char* const* overrides, size_t n) {
  std::vector<std::string> out;
  if (n > 0) RequireArg(overrides, "overrides");
  for (size_t i = 0; i < n; ++i) {
    RequireArg(overrides[i], "override");
    out.emplace_back(overrides[i]);
  }
  return out;
}

}  // namespace

extern "C" {

const char* nc_last_error(void) { return g_last_error.c_str(); }

const char* nc_status_name(nc_status status) {
  if (status == NC_OK) return "Ok";
  if (status == NC_ERR_INTERNAL) return "Internal";
  const int code = static_cast<int>(status);
  if (code >= 10 && code <= 25) {
    return netcollab::ErrorCodeName(static_cast<netcollab::ErrorCode>(code)).data();
  }
  return "Unknown";
}

void nc_string_free(char* s) { std::free(s); }

nc_status nc_session_create(const char* config_path, const char* const* overrides,
                            size_t n_overrides, nc_session** out) {
  return Guard([&] {
    RequireArg(out, "out");
    *out = nullptr;
    const auto ov = Overrides(overrides, n_overrides);
    netcollab::RunConfig cfg = config_path == nullptr ? netcollab::DefaultRunConfig(ov)
                                                      : netcollab::LoadRunConfig(config_path, ov);
    auto s = std::make_unique<nc_session>();
    s->impl = std::make_unique<netcollab::Session>(std::move(cfg));
    *out = s.release();
  });
}

nc_status nc_session_create_from_json(const char* config_json, const char* const* overrides,
                                      size_t n_overrides, nc_session** out) {
  return Guard([&] {
    RequireArg(out, "out");
    RequireArg(config_json, "config_json");
    *out = nullptr;
    auto s = std::make_unique<nc_session>();
    s->impl = std::make_unique<netcollab::Session>(
        netcollab::ParseRunConfig(config_json, Overrides(overrides, n_overrides)));
    *out = s.release();
  });
}

void nc_session_destroy(nc_session* session) { delete session; }

nc_status nc_session_out_dir(const nc_session* session, char** out_dir) {
  return Guard([&] {
    RequireArg(session, "session");
    RequireArg(out_dir, "out_dir");
    *out_dir = Dup(session->impl->config().out_dir);
  });
}

nc_status nc_session_load_checkpoint(nc_session* session, const char* path) {
  return Guard([&] {
    RequireArg(session, "session");
    RequireArg(path, "path");
    session->impl->LoadCheckpoint(netcollab::ReadFile(path));
  });
}

nc_status nc_session_save_checkpoint(const nc_session* session, const char* path) {
  return Guard([&] {
    RequireArg(session, "session");
    RequireArg(path, "path");
    netcollab::WriteFile(path, session->impl->CheckpointJson());
  });
}

nc_status nc_session_run(const nc_session* session, const char* task_class,
                         const char* forced_action, char** log_line, char** transcript,
                         int* failed) {
  return Guard([&] {
    RequireArg(session, "session");
    std::optional<std::string> cls;
    std::optional<std::string> forced;
    if (task_class != nullptr) cls = task_class;
    if (forced_action != nullptr) forced = forced_action;
    const netcollab::RunResult r = session->impl->Run(cls, forced);
    char* line = Dup(r.log_line);
    char* text = nullptr;
    try {
      text = Dup(r.rendered);
    } catch (...) {
      std::free(line);
      throw;
    }
    if (log_line != nullptr) *log_line = line; else std::free(line);
    if (transcript != nullptr) *transcript = text; else std::free(text);
    if (failed != nullptr) *failed = r.failed ? 1 : 0;
  });
}

nc_status nc_session_write_demos(const nc_session* session, size_t dialogues, const char* path) {
  return Guard([&] {
    RequireArg(session, "session");
    RequireArg(path, "path");
    const auto& s = *session->impl;
    const size_t n = dialogues == 0 ? s.config().sft.demos : dialogues;
    netcollab::WriteFile(
        path, netcollab::SftDatasetToJsonl(s.GenerateDemonstrations(n), s.scenario().actions()));
  });
}

nc_status nc_session_sft(nc_session* session, const char* dataset_path, double* final_loss,
                         double* mean_demo_probability) {
  return Guard([&] {
    RequireArg(session, "session");
    RequireArg(dataset_path, "dataset_path");
    auto& s = *session->impl;
    const auto samples = netcollab::SftDatasetFromJsonl(
        netcollab::ReadFile(dataset_path), s.policy().encoder(), s.scenario().actions());
    const netcollab::SftResult r = s.Sft(samples);
    if (final_loss != nullptr) *final_loss = r.final_loss;
    if (mean_demo_probability != nullptr) *mean_demo_probability = r.mean_demo_probability;
  });
}

nc_status nc_session_train(nc_session* session, const char* csv_path, const char* checkpoint_dir,
                           size_t* collapse_warnings) {
  return Guard([&] {
    RequireArg(session, "session");
    RequireArg(csv_path, "csv_path");
    netcollab::CheckpointSink sink;
    if (checkpoint_dir != nullptr) {
      const std::filesystem::path dir(checkpoint_dir);
      sink = [dir](std::size_t iteration, const netcollab::Policy& policy) {
        const auto file = dir / ("checkpoint_iter_" + std::to_string(iteration) + ".json");
        netcollab::WriteFile(file.string(), netcollab::CheckpointToJson(policy.params()));
      };
    }
    const netcollab::TrainingReport report = session->impl->Train(sink);
    netcollab::WriteFile(csv_path, report.ToCsv());
    if (collapse_warnings != nullptr) *collapse_warnings = report.collapse_warnings;
  });
}

nc_status nc_session_eval(const nc_session* session, size_t n, int sampled, char** summary_json) {
  return Guard([&] {
    RequireArg(session, "session");
    RequireArg(summary_json, "summary_json");
    const auto mode = sampled != 0 ? netcollab::DecisionMode::kSample : netcollab::DecisionMode::kGreedy;
    const auto& s = *session->impl;
    *summary_json = Dup(s.Evaluate(n == 0 ? s.config().eval_episodes : n, mode).ToJson());
  });
}

nc_status nc_registry_create(double ewma_alpha, nc_registry** out) {
  return Guard([&] {
    RequireArg(out, "out");
    *out = nullptr;
    *out = new nc_registry{netcollab::Registry(ewma_alpha)};
  });
}

void nc_registry_destroy(nc_registry* registry) { delete registry; }

nc_status nc_registry_load_cards(nc_registry* registry, const char* cards_json) {
  return Guard([&] {
    RequireArg(registry, "registry");
    RequireArg(cards_json, "cards_json");
    for (auto& a : netcollab::AgentCardsFromJson(cards_json)) {
      registry->impl.RegisterCard(std::move(a.card), a.metrics);
    }
  });
}

nc_status nc_registry_discover(const nc_registry* registry, const char* action_type,
                               char** cards_json) {
  return Guard([&] {
    RequireArg(registry, "registry");
    RequireArg(action_type, "action_type");
    RequireArg(cards_json, "cards_json");
    *cards_json = Dup(netcollab::AgentCardsToJson(registry->impl.Discover(action_type)));
  });
}

nc_status nc_registry_update_metrics(nc_registry* registry, const char* card_id, double latency_ms,
                                     int success, double load) {
  return Guard([&] {
    RequireArg(registry, "registry");
    RequireArg(card_id, "card_id");
    registry->impl.UpdateMetrics(card_id, {latency_ms, success != 0, load});
  });
}

nc_status nc_registry_deregister(nc_registry* registry, const char* card_id) {
  return Guard([&] {
    RequireArg(registry, "registry");
    RequireArg(card_id, "card_id");
    registry->impl.Deregister(card_id);
  });
}

nc_status nc_registry_route(const nc_registry* registry, const char* action_type, char** card_id) {
  return Guard([&] {
    RequireArg(registry, "registry");
    RequireArg(action_type, "action_type");
    RequireArg(card_id, "card_id");
    *card_id = Dup(netcollab::Route(action_type, registry->impl, netcollab::RoutingWeights{}));
  });
}

}  // extern "C"
