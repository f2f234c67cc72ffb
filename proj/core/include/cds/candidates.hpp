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

#ifndef CDS_CANDIDATES_HPP_
#define CDS_CANDIDATES_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cds {

// A token is an opaque, non-empty, whitespace-free string.
using Token = std::string;
using TokenSeq = std::vector<Token>;

// Log-probabilities below this value are clamped during validation.
inline constexpr double kDefaultScoreFloor = -30.0;

enum class ErrorCode {
  kEmptyCandidate,
  kEmptySet,
  kLengthMismatch,
  kPositiveScore,
  kInvalidToken,
  kScorerFailure,
  kEmptyCorpus,
  kInvalidArgument,
  kPathExplosion,
  kEmptyReference,
  kEmptyInput,
  kIdMismatch,
  kParseError,
};

std::string_view ErrorCodeName(ErrorCode code);

// All recoverable failures in the library are reported with this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct ScoredCandidate {
  TokenSeq tokens;
  std::vector<double> scores;  // natural-log probabilities, aligned to tokens

  size_t size() const { return tokens.size(); }
  bool operator==(const ScoredCandidate&) const = default;
};

struct CandidateSet {
  std::string id;
  std::optional<TokenSeq> source;
  std::vector<ScoredCandidate> candidates;

  size_t k() const { return candidates.size(); }
  bool operator==(const CandidateSet&) const = default;
};

struct ValidationOptions {
  double score_floor = kDefaultScoreFloor;
};

// Records a score that was raised to the floor during validation.
struct ClampWarning {
  size_t candidate = 0;
  size_t position = 0;
  double original = 0.0;
};

// True for a non-empty token without whitespace characters.
bool IsValidToken(std::string_view token);

// Checks every invariant of `set` and returns it with out-of-range low scores
// clamped to `options.score_floor`. Throws Error with kEmptySet,
// kEmptyCandidate, kLengthMismatch, kPositiveScore or kInvalidToken.
CandidateSet Validate(CandidateSet set, const ValidationOptions& options = {},
                      std::vector<ClampWarning>* warnings = nullptr);

// Collapses each maximal run of equal adjacent tokens to one occurrence. The
// surviving score is the score of the last token of the run.
ScoredCandidate RemoveAdjacentDuplicates(const ScoredCandidate& cand);

// Joins tokens with single spaces.
std::string JoinTokens(const TokenSeq& tokens);

// Splits on ASCII whitespace, dropping empty pieces.
TokenSeq SplitTokens(std::string_view text);

}  // namespace cds

#endif  // CDS_CANDIDATES_HPP_
