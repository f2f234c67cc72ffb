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

// Synthetic candidate sets: each candidate is an independently corrupted copy
// of a reference sentence, with confident scores on intact tokens and low
// scores on corrupted ones.

#ifndef CDS_SYNTH_HPP_
#define CDS_SYNTH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cds/candidates.hpp"

namespace cds {

struct NoiseConfig {
  double substitution_rate = 0.15;
  double insertion_rate = 0.03;
  double deletion_rate = 0.03;
  double duplication_rate = 0.05;
  double correct_score_mean = -0.15;
  double correct_score_std = 0.05;
  double error_score_mean = -2.0;
  double error_score_std = 0.5;
  double score_floor = kDefaultScoreFloor;
  uint64_t rng_seed = 0;

  // Throws Error(kInvalidArgument) if a rate is outside [0, 1], a mean is
  // positive or a deviation is negative.
  void Check() const;
};

// Derives a 64-bit stream seed from (seed, sentence, candidate).
uint64_t SubstreamSeed(uint64_t seed, uint64_t sentence, uint64_t candidate);

// Generates k candidates for `reference`. Candidate i depends only on
// (config.rng_seed, sentence_index, i), so it does not change with k.
//
// Per reference token, in order: drop with deletion_rate; otherwise replace
// by a different vocabulary token with substitution_rate; emit it, emit it a
// second time with duplication_rate, then emit a random vocabulary token with
// insertion_rate. Intact tokens score near correct_score_mean, everything
// else near error_score_mean. A candidate left empty receives one random
// vocabulary token. Throws Error(kEmptyReference) for an empty reference.
CandidateSet GenerateCandidates(const TokenSeq& reference, size_t k,
                                const NoiseConfig& config,
                                std::span<const Token> vocab,
                                uint64_t sentence_index = 0);

// Sorted distinct tokens of `references`.
TokenSeq CollectVocabulary(std::span<const TokenSeq> references);

// One candidate set per reference, with id equal to the zero-based index and
// the vocabulary collected from all references.
std::vector<CandidateSet> GenerateCorpus(std::span<const TokenSeq> references,
                                         size_t k, const NoiseConfig& config);

struct ReferenceConfig {
  size_t count = 2000;
  uint64_t seed = 1;
  size_t vocab_size = 1000;
  size_t min_length = 8;
  size_t max_length = 30;
  double zipf_exponent = 1.0;
};

// Random reference sentences over tokens "w0".."w<V-1>" drawn from a Zipf
// distribution. No sentence contains adjacent repeated tokens.
std::vector<TokenSeq> GenerateReferences(const ReferenceConfig& config);

}  // namespace cds

#endif  // CDS_SYNTH_HPP_
