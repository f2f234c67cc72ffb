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

#include "cds/fusion.hpp"

#include <algorithm>

namespace cds {

double RegionScore(size_t candidate, const DivergenceRegion& region,
                   std::span<const std::vector<double>> scores) {
  const std::vector<double>& s = scores[candidate];
  const size_t lo = region.start[candidate] > 0 ? region.start[candidate] - 1 : 0;
  const size_t hi = std::min(s.size(), region.end[candidate] + 1);
  double sum = 0.0;
  for (size_t i = lo; i < hi; ++i) sum += s[i];
  return hi > lo ? sum / static_cast<double>(hi - lo) : 0.0;
}

RegionChoice SelectSegment(const DivergenceRegion& region,
                           std::span<const std::vector<double>> scores,
                           size_t region_index) {
  RegionChoice choice;
  choice.region_index = region_index;
  const size_t k = region.segments.size();
  choice.segment_scores.reserve(k);
  for (size_t j = 0; j < k; ++j) {
    choice.segment_scores.push_back(RegionScore(j, region, scores));
    if (choice.segment_scores[j] > choice.segment_scores[choice.chosen]) {
      choice.chosen = j;
    }
  }
  choice.chosen_tokens = region.segments[choice.chosen];
  return choice;
}

FusionResult FuseCandidates(std::span<const ScoredCandidate> candidates) {
  std::vector<TokenSeq> tokens;
  std::vector<std::vector<double>> scores;
  tokens.reserve(candidates.size());
  scores.reserve(candidates.size());
  for (const ScoredCandidate& c : candidates) {
    tokens.push_back(c.tokens);
    scores.push_back(c.scores);
  }

  FusionResult result;
  const AlignedPartition partition = Partition(tokens);
  for (const PartitionElement& element : partition.elements) {
    if (const auto* anchor = std::get_if<Anchor>(&element)) {
      result.tokens.push_back(anchor->token);
      ++result.anchors_used;
      continue;
    }
    const auto& region = std::get<DivergenceRegion>(element);
    RegionChoice choice = SelectSegment(region, scores, result.trace.size());
    result.tokens.insert(result.tokens.end(), choice.chosen_tokens.begin(),
                         choice.chosen_tokens.end());
    result.trace.push_back(std::move(choice));
  }
  return result;
}

FusionResult CandidateSoups(const CandidateSet& set, const Scorer& scorer,
                            const FusionOptions& options) {
  if (set.candidates.empty()) {
    throw Error(ErrorCode::kEmptySet, "candidate set '" + set.id + "' is empty");
  }
  const std::vector<ScoredCandidate> prepared =
      PrepareCandidates(set, scorer, options.dedup);
  return FuseCandidates(prepared);
}

}  // namespace cds
