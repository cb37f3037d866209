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

#include "netcollab/trajectory.hpp"

#include "netcollab/error.hpp"

namespace netcollab {

std::string_view SourceName(SegmentSource s) {
  switch (s) {
    case SegmentSource::kCore: return "core";
    case SegmentSource::kAgent: return "agent";
    case SegmentSource::kSystem: return "system";
  }
  return "core";
}

std::string_view FailureKindName(FailureKind kind) {
  switch (kind) {
    case FailureKind::kIndicatorDisorder: return "IndicatorDisorder";
    case FailureKind::kNoAgentForAction: return "NoAgentForAction";
    case FailureKind::kMalformedAgentResponse: return "MalformedAgentResponse";
    case FailureKind::kTruncated: return "Truncated";
  }
  return "IndicatorDisorder";
}

Segment Segment::Core(std::vector<Token> tokens) {
  return Segment(SegmentSource::kCore, "", std::move(tokens));
}

Segment Segment::Agent(std::string card_id, std::vector<Token> tokens) {
  return Segment(SegmentSource::kAgent, std::move(card_id), std::move(tokens));
}

Segment Segment::System(std::vector<Token> tokens) {
  return Segment(SegmentSource::kSystem, "", std::move(tokens));
}

void Segment::ReplaceAgentTokens(std::vector<Token> tokens) {
  if (source_ != SegmentSource::kAgent) {
    Fail(ErrorCode::kInvalidArgument, "only agent segments can be rewritten");
  }
  tokens_ = std::move(tokens);
}

std::size_t Trajectory::token_count() const {
  std::size_t n = 0;
  for (const auto& s : segments_) n += s.tokens().size();
  return n;
}

void Trajectory::RequireOpen() const {
  if (!is_open()) Fail(ErrorCode::kEpisodeClosed, "EpisodeClosed");
}

void Trajectory::AppendCore(std::vector<Token> tokens) {
  RequireOpen();
  if (tokens.empty()) return;
  segments_.push_back(Segment::Core(std::move(tokens)));
}

std::vector<Token> ExtractAnswerSpan(std::span<const Token> raw) {
  std::optional<std::size_t> open;
  std::optional<std::size_t> close;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == Vocabulary::kAnsOpen) {
      if (open) Fail(ErrorCode::kMalformedAgentResponse, "MalformedAgentResponse: multiple <ans>");
      open = i;
    } else if (raw[i] == Vocabulary::kAnsClose) {
      if (!open) {
        Fail(ErrorCode::kMalformedAgentResponse, "MalformedAgentResponse: </ans> before <ans>");
      }
      if (close) Fail(ErrorCode::kMalformedAgentResponse, "MalformedAgentResponse: multiple </ans>");
      close = i;
    }
  }
  if (!open || !close) {
    Fail(ErrorCode::kMalformedAgentResponse, "MalformedAgentResponse: no <ans> span");
  }
  if (*close == *open + 1) {
    Fail(ErrorCode::kMalformedAgentResponse, "MalformedAgentResponse: empty answer");
  }
  return {raw.begin() + static_cast<std::ptrdiff_t>(*open + 1),
          raw.begin() + static_cast<std::ptrdiff_t>(*close)};
}

void Trajectory::InsertAgentResponse(const std::string& card_id,
                                     std::span<const Token> raw_tokens) {
  RequireOpen();
  std::vector<Token> informative = ExtractAnswerSpan(raw_tokens);
  segments_.push_back(Segment::Agent(card_id, std::move(informative)));
}

void Trajectory::AppendSystem(std::vector<Token> tokens) {
  RequireOpen();
  if (tokens.empty()) return;
  segments_.push_back(Segment::System(std::move(tokens)));
}

void Trajectory::FinishAnswered(Token answer) {
  RequireOpen();
  terminal_.kind = Terminal::Kind::kAnswered;
  terminal_.answer = answer;
}

void Trajectory::FinishTruncated() {
  RequireOpen();
  terminal_.kind = Terminal::Kind::kTruncated;
}

void Trajectory::FinishFailed(FailureReport reason) {
  RequireOpen();
  terminal_.kind = Terminal::Kind::kFailed;
  terminal_.reason = std::move(reason);
}

std::optional<FailureReport> Validate(const Trajectory& traj, const Vocabulary& vocab) {
  auto disorder = [](std::size_t pos, std::string detail) {
    return FailureReport{FailureKind::kIndicatorDisorder, pos, std::move(detail)};
  };
  std::size_t offset = 0;
  for (const Segment& seg : traj.segments()) {
    const auto& toks = seg.tokens();
    if (seg.source() != SegmentSource::kCore) {
      offset += toks.size();
      continue;
    }
    std::optional<std::size_t> open_at;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      const Token t = toks[i];
      const std::size_t pos = offset + i;
      if (!vocab.Contains(t)) return disorder(pos, "token outside vocabulary");
      if (t == Vocabulary::kActionOpen) {
        if (open_at) return disorder(pos, "nested <action>");
        open_at = i;
      } else if (t == Vocabulary::kActionClose) {
        if (!open_at) return disorder(pos, "</action> without <action>");
        if (i == *open_at + 1) return disorder(pos, "empty action span");
        open_at.reset();
      } else if (vocab.IsControl(t)) {
        return disorder(pos, "stray control tag " + vocab.Name(t));
      } else if (open_at && i == *open_at + 1 && vocab.Kind(t) != SymbolKind::kActionType) {
        return disorder(pos, "action span does not start with an action type");
      }
    }
    if (open_at) return disorder(offset + *open_at, "unclosed <action>");
    offset += toks.size();
  }
  return std::nullopt;
}

ActionInvocation ParseAction(std::span<const Token> tokens, const Vocabulary& vocab) {
  if (tokens.size() < 3 || tokens.front() != Vocabulary::kActionOpen ||
      tokens.back() != Vocabulary::kActionClose) {
    Fail(ErrorCode::kNotAnAction, "NotAnAction: not a single action span");
  }
  const auto interior = tokens.subspan(1, tokens.size() - 2);
  for (Token t : interior) {
    if (!vocab.Contains(t) || vocab.IsControl(t)) {
      Fail(ErrorCode::kNotAnAction, "NotAnAction: control tag inside span");
    }
  }
  if (vocab.Kind(interior.front()) != SymbolKind::kActionType) {
    Fail(ErrorCode::kNotAnAction, "NotAnAction: span does not start with an action type");
  }
  return ActionInvocation{vocab.Name(interior.front()),
                          std::vector<Token>(interior.begin() + 1, interior.end())};
}

std::vector<std::vector<Token>> ActionSpans(const Trajectory& traj) {
  std::vector<std::vector<Token>> spans;
  for (const Segment& seg : traj.segments()) {
    if (seg.source() != SegmentSource::kCore) continue;
    const auto& toks = seg.tokens();
    std::optional<std::size_t> open_at;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      if (toks[i] == Vocabulary::kActionOpen) {
        open_at = i;
      } else if (toks[i] == Vocabulary::kActionClose && open_at) {
        spans.emplace_back(toks.begin() + static_cast<std::ptrdiff_t>(*open_at),
                           toks.begin() + static_cast<std::ptrdiff_t>(i + 1));
        open_at.reset();
      }
    }
  }
  return spans;
}

std::vector<bool> LossMask(const Trajectory& traj) {
  std::vector<bool> mask;
  mask.reserve(traj.token_count());
  for (const Segment& seg : traj.segments()) {
    mask.insert(mask.end(), seg.tokens().size(), seg.loss_included());
  }
  return mask;
}

}  // namespace netcollab
