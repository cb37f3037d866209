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

// netcollab: run, sft, train, eval and demos on top of the C API.
//
// Exit codes: 0 success, 1 config or usage error, 2 episode failure.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "netcollab/netcollab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitEpisodeFailure = 2;

struct CommonOptions {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string checkpoint;
  std::string out;
  std::vector<std::string> sets;
};

class CallError {
 public:
  explicit CallError(nc_status status) : status_(status), message_(nc_last_error()) {}
  nc_status status() const { return status_; }
  const std::string& message() const { return message_; }

 private:
  nc_status status_;
  std::string message_;
};

void Check(nc_status status) {
  if (status != NC_OK) throw CallError(status);
}

// Owns a string returned by the library.
class OwnedString {
 public:
  OwnedString() = default;
  OwnedString(const OwnedString&) = delete;
  OwnedString& operator=(const OwnedString&) = delete;
  ~OwnedString() { nc_string_free(p_); }
  char** out() { return &p_; }
  std::string str() const { return p_ == nullptr ? std::string() : std::string(p_); }

 private:
  char* p_ = nullptr;
};

class SessionHandle {
 public:
  explicit SessionHandle(const CommonOptions& opts) {
    std::vector<std::string> overrides = opts.sets;
    if (opts.seed) overrides.push_back("seed=" + std::to_string(*opts.seed));
    if (!opts.out.empty()) overrides.push_back("out=\"" + opts.out + "\"");
    std::vector<const char*> raw;
    for (const auto& o : overrides) raw.push_back(o.c_str());
    Check(nc_session_create(opts.config.empty() ? nullptr : opts.config.c_str(), raw.data(),
                            raw.size(), &s_));
    if (!opts.checkpoint.empty()) Check(nc_session_load_checkpoint(s_, opts.checkpoint.c_str()));
    OwnedString dir;
    Check(nc_session_out_dir(s_, dir.out()));
    out_dir_ = dir.str();
  }
  SessionHandle(const SessionHandle&) = delete;
  SessionHandle& operator=(const SessionHandle&) = delete;
  ~SessionHandle() { nc_session_destroy(s_); }

  nc_session* get() { return s_; }
  std::string OutPath(const std::string& name) const {
    std::filesystem::create_directories(out_dir_);
    return (std::filesystem::path(out_dir_) / name).string();
  }
  std::string OutDir() const {
    std::filesystem::create_directories(out_dir_);
    return out_dir_;
  }

 private:
  nc_session* s_ = nullptr;
  std::string out_dir_;
};

int CmdRun(const CommonOptions& opts, const std::string& task_class,
           const std::string& force_answer) {
  SessionHandle session(opts);
  OwnedString line;
  OwnedString transcript;
  int failed = 0;
  Check(nc_session_run(session.get(), task_class.empty() ? nullptr : task_class.c_str(),
                       force_answer.empty() ? nullptr : force_answer.c_str(), line.out(),
                       transcript.out(), &failed));
  std::cout << transcript.str();
  const std::string path = session.OutPath("trajectory.jsonl");
  std::ofstream(path, std::ios::trunc) << line.str() << '\n';
  std::cout << "log: " << path << '\n';
  return failed != 0 ? kExitEpisodeFailure : kExitOk;
}

int CmdDemos(const CommonOptions& opts, std::size_t n) {
  SessionHandle session(opts);
  const std::string path = session.OutPath("demos.jsonl");
  Check(nc_session_write_demos(session.get(), n, path.c_str()));
  std::cout << "dataset: " << path << '\n';
  return kExitOk;
}

int CmdSft(const CommonOptions& opts, const std::string& dataset) {
  SessionHandle session(opts);
  double loss = 0.0;
  double prob = 0.0;
  Check(nc_session_sft(session.get(), dataset.c_str(), &loss, &prob));
  const std::string path = session.OutPath("sft_checkpoint.json");
  Check(nc_session_save_checkpoint(session.get(), path.c_str()));
  std::cout << "final_loss=" << loss << " mean_demo_probability=" << prob << '\n'
            << "checkpoint: " << path << '\n';
  return kExitOk;
}

int CmdTrain(const CommonOptions& opts) {
  SessionHandle session(opts);
  const std::string csv = session.OutPath("report.csv");
  std::size_t collapse = 0;
  Check(nc_session_train(session.get(), csv.c_str(), session.OutDir().c_str(), &collapse));
  const std::string ckpt = session.OutPath("checkpoint.json");
  Check(nc_session_save_checkpoint(session.get(), ckpt.c_str()));
  std::cout << "report: " << csv << '\n'
            << "checkpoint: " << ckpt << '\n'
            << "collapse_warnings=" << collapse << '\n';
  return kExitOk;
}

int CmdEval(const CommonOptions& opts, std::size_t n, bool sampled) {
  SessionHandle session(opts);
  OwnedString summary;
  Check(nc_session_eval(session.get(), n, sampled ? 1 : 0, summary.out()));
  const std::string path = session.OutPath("eval.json");
  std::ofstream(path, std::ios::trunc) << summary.str() << '\n';
  std::cout << summary.str() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Collaborative core/agent reasoning on a simulated network"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::uint64_t seed = 0;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", opts.config, "JSON config file (default: case-study profile)");
    cmd->add_option("--seed", seed, "Overrides the config seed")
        ->each([&](const std::string&) { opts.seed = seed; });
    cmd->add_option("--checkpoint", opts.checkpoint, "Policy checkpoint to start from");
    cmd->add_option("--out", opts.out, "Output directory");
    cmd->add_option("--set", opts.sets, "Override a scalar setting, key=value")
        ->allow_extra_args(false);
  };

  std::string task_class;
  std::string force_answer;
  auto* run = app.add_subcommand("run", "Execute one seeded episode");
  add_common(run);
  run->add_option("--task-class", task_class, "Task class to run (default: sampled)");
  run->add_option("--force-answer", force_answer, "Always take this action");

  std::string dataset;
  auto* sft = app.add_subcommand("sft", "Supervised warm-up on a demonstration dataset");
  add_common(sft);
  sft->add_option("--dataset", dataset, "SFT dataset (JSONL)")->required();

  auto* train = app.add_subcommand("train", "Group-relative RL training");
  add_common(train);

  std::size_t n = 0;
  bool sampled = false;
  auto* eval = app.add_subcommand("eval", "Evaluate the policy on seeded episodes");
  add_common(eval);
  eval->add_option("--n", n, "Episodes (default: eval.episodes)");
  eval->add_flag("--sampled", sampled, "Sample decisions instead of taking the argmax");

  std::size_t demos = 0;
  auto* demo = app.add_subcommand("demos", "Write scripted demonstrations as an SFT dataset");
  add_common(demo);
  demo->add_option("--n", demos, "Dialogues (default: sft.demos)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run) return CmdRun(opts, task_class, force_answer);
    if (*sft) return CmdSft(opts, dataset);
    if (*train) return CmdTrain(opts);
    if (*eval) return CmdEval(opts, n, sampled);
    if (*demo) return CmdDemos(opts, demos);
  } catch (const CallError& e) {
    const std::string name = nc_status_name(e.status());
    if (e.message().rfind(name, 0) == 0) {
      std::cerr << "error: " << e.message() << '\n';
    } else {
      std::cerr << "error: " << name << ": " << e.message() << '\n';
    }
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}
