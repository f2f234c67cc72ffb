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

#include "cds/eval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace cds {
namespace {

using NGramCounts = std::map<TokenSeq, size_t>;

NGramCounts CountNGrams(const TokenSeq& tokens, size_t n) {
  NGramCounts counts;
  if (tokens.size() < n) return counts;
  for (size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[TokenSeq(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                      tokens.begin() + static_cast<std::ptrdiff_t>(i + n))];
  }
  return counts;
}

BleuReport Compute(std::span<const TokenSeq> hypotheses,
                   std::span<const TokenSeq> references, int max_n,
                   bool smooth, double epsilon) {
  if (hypotheses.size() != references.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(hypotheses.size()) + " hypotheses but " +
                    std::to_string(references.size()) + " references");
  }
  if (hypotheses.empty()) throw Error(ErrorCode::kEmptyInput, "empty corpus");
  if (max_n < 1) throw Error(ErrorCode::kInvalidArgument, "max_n must be >= 1");

  const size_t orders = static_cast<size_t>(max_n);
  BleuReport report;
  report.matches.assign(orders, 0);
  report.totals.assign(orders, 0);
  report.precisions.assign(orders, 0.0);

  for (size_t s = 0; s < hypotheses.size(); ++s) {
    const TokenSeq& hyp = hypotheses[s];
    const TokenSeq& ref = references[s];
    if (ref.empty()) {
      throw Error(ErrorCode::kEmptyInput,
                  "reference " + std::to_string(s) + " is empty");
    }
    report.hyp_length += hyp.size();
    report.ref_length += ref.size();
    for (size_t n = 1; n <= orders; ++n) {
      const NGramCounts hyp_counts = CountNGrams(hyp, n);
      const NGramCounts ref_counts = CountNGrams(ref, n);
      for (const auto& [gram, c] : hyp_counts) {
        report.totals[n - 1] += c;
        if (const auto it = ref_counts.find(gram); it != ref_counts.end()) {
          report.matches[n - 1] += std::min(c, it->second);
        }
      }
    }
  }

  bool any_zero = false;
  double log_sum = 0.0;
  for (size_t i = 0; i < orders; ++i) {
    const double total = static_cast<double>(report.totals[i]);
    double matched = static_cast<double>(report.matches[i]);
    if (smooth && report.matches[i] == 0) matched = epsilon;
    const double p = total > 0.0 ? matched / total : 0.0;
    report.precisions[i] = p;
    if (p > 0.0) {
      log_sum += std::log(p);
    } else {
      any_zero = true;
    }
  }

  if (report.hyp_length == 0) {
    report.brevity_penalty = 0.0;
  } else if (report.hyp_length < report.ref_length) {
    report.brevity_penalty =
        std::exp(1.0 - static_cast<double>(report.ref_length) /
                           static_cast<double>(report.hyp_length));
  } else {
    report.brevity_penalty = 1.0;
  }

  report.bleu = any_zero ? 0.0
                         : 100.0 * report.brevity_penalty *
                               std::exp(log_sum / static_cast<double>(orders));
  return report;
}

}  // namespace

BleuReport CorpusBleu(std::span<const TokenSeq> hypotheses,
                      std::span<const TokenSeq> references, int max_n) {
  return Compute(hypotheses, references, max_n, /*smooth=*/false, 0.0);
}

BleuReport BleuWithSmoothing(std::span<const TokenSeq> hypotheses,
                             std::span<const TokenSeq> references,
                             double epsilon, int max_n) {
  if (!(epsilon > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must be > 0");
  }
  return Compute(hypotheses, references, max_n, /*smooth=*/true, epsilon);
}

}  // namespace cds
