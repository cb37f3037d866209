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

#ifndef NETCOLLAB_TRAJECTORY_HPP_
#define NETCOLLAB_TRAJECTORY_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netcollab/vocabulary.hpp"

namespace netcollab {

enum class SegmentSource { kCore, kAgent, kSystem };

std::string_view SourceName(SegmentSource s);

// A run of tokens from one source. The loss flag is derived from the source:
// core tokens are trained on, agent and system tokens never are.
class Segment {
 public:
  static Segment Core(std::vector<Token> tokens);
  static Segment Agent(std::string card_id, std::vector<Token> tokens);
  static Segment System(std::vector<Token> tokens);

  SegmentSource source() const { return source_; }
  const std::string& card_id() const { return card_id_; }
  const std::vector<Token>& tokens() const { return tokens_; }
  bool loss_included() const { return source_ == SegmentSource::kCore; }

  // Replaces the token content of an agent segment, keeping its attribution.
  // Only used to probe that training ignores agent content.
  void ReplaceAgentTokens(std::vector<Token> tokens);

  friend bool operator==(const Segment&, const Segment&) = default;

 private:
  Segment(SegmentSource source, std::string card_id, std::vector<Token> tokens)
      : source_(source), card_id_(std::move(card_id)), tokens_(std::move(tokens)) {}

  SegmentSource source_;
  std::string card_id_;
  std::vector<Token> tokens_;
};

enum class FailureKind {
  kIndicatorDisorder,
  kNoAgentForAction,
  kMalformedAgentResponse,
  kTruncated,
};

std::string_view FailureKindName(FailureKind kind);

struct FailureReport {
  FailureKind kind = FailureKind::kIndicatorDisorder;
  // Token offset in segment order where the problem was found.
  std::size_t position = 0;
  std::string detail;

  friend bool operator==(const FailureReport&, const FailureReport&) = default;
};

struct Terminal {
  enum class Kind { kOpen, kAnswered, kTruncated, kFailed };

  Kind kind = Kind::kOpen;
  Token answer{};                       // set when kAnswered
  std::optional<FailureReport> reason;  // set when kFailed

  friend bool operator==(const Terminal&, const Terminal&) = default;
};

struct ActionInvocation {
  std::string action_type;
  std::vector<Token> goal_tokens;

  friend bool operator==(const ActionInvocation&, const ActionInvocation&) = default;
};

// Segmented episode token stream. Segments are append-only and nothing may be
// appended once the terminal state leaves kOpen. Mutators give the strong
// exception guarantee.
class Trajectory {
 public:
  const std::vector<Segment>& segments() const { return segments_; }
  const Terminal& terminal() const { return terminal_; }
  bool is_open() const { return terminal_.kind == Terminal::Kind::kOpen; }
  std::size_t token_count() const;

  // Empty token lists are a no-op. Error: EpisodeClosed.
  void AppendCore(std::vector<Token> tokens);

  // Keeps only the tokens strictly inside the single <ans>...</ans> span and
  // appends them as an agent segment. Errors: EpisodeClosed,
  // MalformedAgentResponse (no span, several spans, misordered delimiters or
  // an empty span).
  void InsertAgentResponse(const std::string& card_id, std::span<const Token> raw_tokens);

  // Error: EpisodeClosed.
  void AppendSystem(std::vector<Token> tokens);

  void FinishAnswered(Token answer);
  void FinishTruncated();
  void FinishFailed(FailureReport reason);

  // Test hook for masking checks; see Segment::ReplaceAgentTokens.
  Segment& mutable_segment(std::size_t i) { return segments_.at(i); }

 private:
  void RequireOpen() const;

  std::vector<Segment> segments_;
  Terminal terminal_;
};

// The informative span of a raw agent reply. Same errors as
// Trajectory::InsertAgentResponse except EpisodeClosed.
std::vector<Token> ExtractAnswerSpan(std::span<const Token> raw_tokens);

// Checks the tag structure of every core segment: each <action> must be
// closed by exactly one </action> in the same segment, with an action-type
// symbol first inside, no nesting, and no control tag anywhere else.
// nullopt means well formed.
std::optional<FailureReport> Validate(const Trajectory& traj, const Vocabulary& vocab);

// Parses a token run that is exactly one action span. Error: NotAnAction.
ActionInvocation ParseAction(std::span<const Token> tokens, const Vocabulary& vocab);
inline ActionInvocation ParseAction(const Segment& core_segment, const Vocabulary& vocab) {
  return ParseAction(core_segment.tokens(), vocab);
}

// Every <action>...</action> run found in core segments, in order. Only
// meaningful on trajectories that validate.
std::vector<std::vector<Token>> ActionSpans(const Trajectory& traj);

// One flag per token in segment order; true exactly for core tokens.
std::vector<bool> LossMask(const Trajectory& traj);

}  // namespace netcollab

#endif  // NETCOLLAB_TRAJECTORY_HPP_
