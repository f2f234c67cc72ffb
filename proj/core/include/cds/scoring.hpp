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

#ifndef CDS_SCORING_HPP_
#define CDS_SCORING_HPP_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cds/candidates.hpp"

namespace cds {

// Produces one log-probability per candidate token. Implementations must be
// deterministic and safe for concurrent calls once constructed.
class Scorer {
 public:
  virtual ~Scorer() = default;

  // `candidate.scores` holds the decoder's own scores; a scorer may ignore
  // them. The result must have candidate.size() entries, each <= 0.
  virtual std::vector<double> Score(const std::optional<TokenSeq>& source,
                                    const ScoredCandidate& candidate) const = 0;

  virtual std::string name() const = 0;
};

// Returns the candidate's stored scores unchanged.
class SelfScorer final : public Scorer {
 public:
  std::vector<double> Score(const std::optional<TokenSeq>& source,
                            const ScoredCandidate& candidate) const override;
  std::string name() const override { return "self"; }
};

std::unique_ptr<Scorer> MakeSelfScorer();

// Add-alpha smoothed n-gram language model over a closed vocabulary plus one
// unknown class. Each sentence is padded with order-1 start symbols and
// terminated by one end symbol; the end symbol is part of the vocabulary.
class NGramModel {
 public:
  static constexpr const char* kStart = "<s>";
  static constexpr const char* kEnd = "</s>";
  static constexpr const char* kUnknown = "<unk>";

  int order() const { return order_; }
  double alpha() const { return alpha_; }
  // Number of predictable outcomes: training vocabulary, end symbol and the
  // unknown class.
  size_t outcome_count() const { return vocab_.size() + 1; }
  const std::set<Token>& vocabulary() const { return vocab_; }

  // Probability of `token` following `context` (the last order-1 tokens,
  // start-padded). Tokens outside the vocabulary map to the unknown class.
  double Probability(const TokenSeq& context, const Token& token) const;

  // Log-probability of each token given its preceding order-1 tokens,
  // clamped to [score_floor, 0].
  std::vector<double> ScoreTokens(const TokenSeq& tokens,
                                  double score_floor = kDefaultScoreFloor) const;

  // Text form: "ngram <n> <alpha>" then "<context>\t<token>\t<count>" lines
  // sorted by context and token.
  void Save(std::ostream& os) const;
  static NGramModel Load(std::istream& is);

  friend NGramModel TrainNGram(const std::vector<TokenSeq>& corpus, int order,
                               double alpha);

 private:
  using Context = TokenSeq;

  int order_ = 3;
  double alpha_ = 0.1;
  std::map<Context, std::map<Token, size_t>> counts_;
  std::map<Context, size_t> context_totals_;
  std::set<Token> vocab_;  // includes kEnd

  Token Normalize(const Token& t) const;
  void Finalize();
};

// Throws Error(kEmptyCorpus) for an empty corpus and kInvalidArgument for
// order < 1 or alpha <= 0.
NGramModel TrainNGram(const std::vector<TokenSeq>& corpus, int order = 3,
                      double alpha = 0.1);

class NGramScorer final : public Scorer {
 public:
  explicit NGramScorer(std::shared_ptr<const NGramModel> model,
                       double score_floor = kDefaultScoreFloor)
      : model_(std::move(model)), score_floor_(score_floor) {}

  // The source side is ignored; this is a target-side model.
  std::vector<double> Score(const std::optional<TokenSeq>& source,
                            const ScoredCandidate& candidate) const override;
  std::string name() const override { return "ngram"; }

 private:
  std::shared_ptr<const NGramModel> model_;
  double score_floor_;
};

// Deduplicates (optionally) and re-scores every candidate of `set`. Throws
// Error(kScorerFailure) if the scorer returns a misaligned or positive score.
std::vector<ScoredCandidate> PrepareCandidates(const CandidateSet& set,
                                               const Scorer& scorer,
                                               bool dedup = true);

double MeanScore(const std::vector<double>& scores);

struct NpdSelection {
  size_t index = 0;
  ScoredCandidate candidate;  // deduped and re-scored
};

// Noisy parallel decoding: keeps the candidate with the highest mean score.
// Ties go to the lowest index.
NpdSelection NpdSelect(const CandidateSet& set, const Scorer& scorer,
                       bool dedup = true);

}  // namespace cds

#endif  // CDS_SCORING_HPP_
