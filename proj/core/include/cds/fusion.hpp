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

// Candidate fusion: anchors shared by all candidates are kept verbatim and
// every divergence region is filled with the segment whose window mean
// log-probability is highest. A segment's window is the segment itself plus
// one bounding anchor token on each side, clamped at the sequence edges.

#ifndef CDS_FUSION_HPP_
#define CDS_FUSION_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "cds/alignment.hpp"
#include "cds/candidates.hpp"
#include "cds/scoring.hpp"

namespace cds {

struct RegionChoice {
  size_t region_index = 0;
  size_t chosen = 0;
  std::vector<double> segment_scores;  // window mean per candidate
  TokenSeq chosen_tokens;

  bool operator==(const RegionChoice&) const = default;
};

struct FusionResult {
  TokenSeq tokens;
  std::vector<RegionChoice> trace;
  size_t anchors_used = 0;
};

struct FusionOptions {
  bool dedup = true;
};

// Mean of scores[j] over [max(0, start[j] - 1), min(len, end[j] + 1)).
double RegionScore(size_t candidate, const DivergenceRegion& region,
                   std::span<const std::vector<double>> scores);

// Picks the region's best segment; ties go to the lowest candidate index.
RegionChoice SelectSegment(const DivergenceRegion& region,
                           std::span<const std::vector<double>> scores,
                           size_t region_index = 0);

// Fuses already prepared (deduplicated, scored) candidates.
FusionResult FuseCandidates(std::span<const ScoredCandidate> candidates);

// Full pipeline: dedup, re-score every candidate with `scorer`, align, and
// assemble. Throws Error(kScorerFailure) on a misbehaving scorer.
FusionResult CandidateSoups(const CandidateSet& set, const Scorer& scorer,
                            const FusionOptions& options = {});

}  // namespace cds

#endif  // CDS_FUSION_HPP_
