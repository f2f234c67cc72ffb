// Copyright 2026 The Candidate Soups Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cds/candidates.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace cds {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyCandidate: return "EmptyCandidate";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kPositiveScore: return "PositiveScore";
    case ErrorCode::kInvalidToken: return "InvalidToken";
    case ErrorCode::kScorerFailure: return "ScorerFailure";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kPathExplosion: return "PathExplosion";
    case ErrorCode::kEmptyReference: return "EmptyReference";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kIdMismatch: return "IdMismatch";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

bool IsValidToken(std::string_view token) {
  if (token.empty()) return false;
  return std::none_of(token.begin(), token.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
  });
}

CandidateSet Validate(CandidateSet set, const ValidationOptions& options,
                      std::vector<ClampWarning>* warnings) {
  if (set.candidates.empty()) {
    throw Error(ErrorCode::kEmptySet, "candidate set '" + set.id + "' is empty");
  }
  for (size_t j = 0; j < set.candidates.size(); ++j) {
    ScoredCandidate& cand = set.candidates[j];
    const std::string where = "candidate " + std::to_string(j);
    if (cand.tokens.size() != cand.scores.size()) {
      throw Error(ErrorCode::kLengthMismatch,
                  where + ": " + std::to_string(cand.tokens.size()) +
                      " tokens but " + std::to_string(cand.scores.size()) +
                      " scores");
    }
    if (cand.tokens.empty()) {
      throw Error(ErrorCode::kEmptyCandidate, where + " has no tokens");
    }
    for (size_t i = 0; i < cand.tokens.size(); ++i) {
      if (!IsValidToken(cand.tokens[i])) {
        throw Error(ErrorCode::kInvalidToken,
                    where + ": token " + std::to_string(i) +
                        " is empty or contains whitespace");
      }
      double& s = cand.scores[i];
      // NaN fails both comparisons below, so reject it explicitly.
      if (std::isnan(s) || s > 0.0) {
        throw Error(ErrorCode::kPositiveScore,
                    where + ": score " + std::to_string(i) +
                        " is not a log-probability");
      }
      if (s < options.score_floor) {
        if (warnings != nullptr) warnings->push_back({j, i, s});
        s = options.score_floor;
      }
    }
  }
  if (set.source) {
    for (const Token& t : *set.source) {
      if (!IsValidToken(t)) {
        throw Error(ErrorCode::kInvalidToken,
                    "source token is empty or contains whitespace");
      }
    }
  }
  return set;
}

ScoredCandidate RemoveAdjacentDuplicates(const ScoredCandidate& cand) {
  ScoredCandidate out;
  out.tokens.reserve(cand.tokens.size());
  out.scores.reserve(cand.scores.size());
  for (size_t i = 0; i < cand.tokens.size(); ++i) {
    if (!out.tokens.empty() && out.tokens.back() == cand.tokens[i]) {
      out.scores.back() = cand.scores[i];
      continue;
    }
    out.tokens.push_back(cand.tokens[i]);
    out.scores.push_back(cand.scores[i]);
  }
  return out;
}

std::string JoinTokens(const TokenSeq& tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ' ';
    out += tokens[i];
  }
  return out;
}

TokenSeq SplitTokens(std::string_view text) {
  TokenSeq out;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i])) != 0) {
      ++i;
    }
    size_t j = i;
    while (j < text.size() &&
           std::isspace(static_cast<unsigned char>(text[j])) == 0) {
      ++j;
    }
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace cds
