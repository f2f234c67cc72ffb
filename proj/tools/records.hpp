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

// Line-delimited JSON wire formats.
//
//   CandidateRecord: {"id": str, "source": str?, "candidates":
//                     [{"tokens": [str...], "scores": [num...]}...]}
//   FusionRecord:    {"id": str, "output": [str...], "method": str,
//                     "trace": [{"region": int, "chosen": int,
//                                "scores": [num...]}...]?}

#ifndef CDS_TOOLS_RECORDS_HPP_
#define CDS_TOOLS_RECORDS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cds/candidates.hpp"
#include "cds/eval.hpp"
#include "cds/fusion.hpp"

namespace cds::tools {

// Throws Error(kParseError) on malformed JSON or a wrong field shape. The
// result is not validated.
CandidateSet ParseCandidateRecord(std::string_view line);
std::string SerializeCandidateRecord(const CandidateSet& set);

struct FusionRecord {
  std::string id;
  TokenSeq output;
  std::string method;  // "cds", "npd" or "single"
  std::optional<std::vector<RegionChoice>> trace;
};

FusionRecord ParseFusionRecord(std::string_view line);
std::string SerializeFusionRecord(const FusionRecord& record);

// {"bleu", "precisions", "bp", "hyp_len", "ref_len"}
std::string SerializeBleuReport(const BleuReport& report);

// {"line": n, "error": message}
std::string DiagnosticLine(size_t line, std::string_view key,
                           std::string_view message);

}  // namespace cds::tools

#endif  // CDS_TOOLS_RECORDS_HPP_
