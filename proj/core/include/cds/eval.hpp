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

#ifndef CDS_EVAL_HPP_
#define CDS_EVAL_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "cds/candidates.hpp"

namespace cds {

struct BleuReport {
  double bleu = 0.0;                   // in [0, 100]
  std::vector<double> precisions;      // modified n-gram precision, n = 1..N
  std::vector<size_t> matches;         // clipped matches per order
  std::vector<size_t> totals;          // hypothesis n-grams per order
  double brevity_penalty = 1.0;
  size_t hyp_length = 0;
  size_t ref_length = 0;
};

// Corpus-level BLEU with a single reference per hypothesis. Clipped n-gram
// matches and hypothesis n-gram counts are summed over the corpus before
// division. Any zero precision yields a score of 0.
//
// Throws Error(kLengthMismatch) when the corpora differ in size and
// Error(kEmptyInput) for an empty corpus or an empty reference sentence.
BleuReport CorpusBleu(std::span<const TokenSeq> hypotheses,
                      std::span<const TokenSeq> references, int max_n = 4);

// As CorpusBleu, but an order with zero matches contributes
// epsilon / total instead of zero.
BleuReport BleuWithSmoothing(std::span<const TokenSeq> hypotheses,
                             std::span<const TokenSeq> references,
                             double epsilon = 0.1, int max_n = 4);

}  // namespace cds

#endif  // CDS_EVAL_HPP_
