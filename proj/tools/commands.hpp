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

// Subcommands of the `cds` tool. Every command works on streams so it can be
// driven in-process by tests; Main() is the argv entry point.

#ifndef CDS_TOOLS_COMMANDS_HPP_
#define CDS_TOOLS_COMMANDS_HPP_

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cds/candidates.hpp"
#include "cds/eval.hpp"
#include "cds/lattice_oracle.hpp"
#include "cds/scoring.hpp"
#include "cds/synth.hpp"

namespace cds::tools {

inline constexpr int kExitOk = 0;
inline constexpr int kExitLineFailure = 1;
inline constexpr int kExitUsage = 2;

// "self" or "ngram:<model-path>". Throws Error(kInvalidArgument) for an
// unknown spec and Error(kParseError) for an unreadable model.
std::shared_ptr<const Scorer> MakeScorer(const std::string& spec,
                                         double score_floor);

enum class Method { kCds, kNpd };

struct DecodeOptions {
  std::string scorer = "self";
  size_t max_candidates = 0;  // 0 keeps all candidates
  bool trace = false;
  bool oracle_check = false;
  bool dedup = true;
  double score_floor = kDefaultScoreFloor;
  size_t threads = 1;
  size_t path_cap = kDefaultPathCap;
};

// One FusionRecord per CandidateRecord, in input order. Failures go to
// `diag` as {"line", "error"} JSON lines. Returns kExitLineFailure if any
// line failed.
int RunDecode(Method method, std::istream& in, std::ostream& out,
              std::ostream& diag, const DecodeOptions& options);

struct SynthOptions {
  size_t k = 5;
  NoiseConfig noise;
};

// Applies "key = value" lines ('#' starts a comment) to `config`. Keys are
// the NoiseConfig field names. Throws Error(kParseError).
void ApplyNoiseConfigFile(std::istream& is, NoiseConfig* config);

// Reads one whitespace-tokenized reference per line and writes one
// CandidateRecord per non-empty line.
int RunSynth(std::istream& refs, std::ostream& out, std::ostream& diag,
             const SynthOptions& options);

// Lines of whitespace-separated tokens. A line starting with '{' is read as
// a FusionRecord and contributes its output.
std::vector<TokenSeq> ReadSentences(std::istream& is);

BleuReport RunBleu(std::istream& hyp, std::istream& ref,
                   std::optional<double> smoothing = std::nullopt,
                   int max_n = 4);

// Reads and validates every CandidateRecord. Throws Error annotated with the
// failing line number.
std::vector<CandidateSet> ReadCandidateRecords(std::istream& is,
                                               double score_floor);

struct CompareOptions {
  std::optional<std::pair<size_t, size_t>> sweep;  // inclusive k range
  bool dedup = true;
};

struct CompareRow {
  size_t k = 0;  // 0 means every candidate
  double single = 0.0;
  double npd = 0.0;
  double cds = 0.0;
  double mean_fusion_us = 0.0;  // per sentence, candidate fusion only
};

struct CompareSummary {
  size_t sentences = 0;
  std::vector<CompareRow> rows;
};

// Corpus BLEU of the first (deduplicated) candidate, NPD and fusion against
// `refs`. Throws Error(kLengthMismatch) or Error(kIdMismatch) when records and
// references are misaligned; a record whose id is a decimal integer must
// equal its zero-based position.
CompareSummary RunCompare(const std::vector<CandidateSet>& sets,
                          const std::vector<TokenSeq>& refs,
                          const Scorer& scorer, const CompareOptions& options);

void PrintCompare(const CompareSummary& summary, std::ostream& os);
std::string CompareToJson(const CompareSummary& summary);

// Parses "A..B" with 1 <= A <= B.
std::optional<std::pair<size_t, size_t>> ParseRange(const std::string& text);

int Main(int argc, const char* const* argv, std::istream& in,
         std::ostream& out, std::ostream& err);

}  // namespace cds::tools

#endif  // CDS_TOOLS_COMMANDS_HPP_
