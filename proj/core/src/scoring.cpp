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

#include "cds/scoring.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <string_view>

namespace cds {

std::vector<double> SelfScorer::Score(const std::optional<TokenSeq>& /*source*/,
                                      const ScoredCandidate& candidate) const {
  return candidate.scores;
}

std::unique_ptr<Scorer> MakeSelfScorer() { return std::make_unique<SelfScorer>(); }

// ---------------------------------------------------------------------------
// NGramModel

Token NGramModel::Normalize(const Token& t) const {
  return vocab_.count(t) != 0 ? t : Token(kUnknown);
}

void NGramModel::Finalize() {
  vocab_.clear();
  context_totals_.clear();
  for (const auto& [ctx, row] : counts_) {
    size_t total = 0;
    for (const auto& [tok, c] : row) {
      vocab_.insert(tok);
      total += c;
    }
    context_totals_[ctx] = total;
  }
  vocab_.insert(kEnd);
}

double NGramModel::Probability(const TokenSeq& context,
                               const Token& token) const {
  const size_t width = static_cast<size_t>(order_ - 1);
  Context ctx(width, kStart);
  const size_t take = std::min(width, context.size());
  for (size_t i = 0; i < take; ++i) {
    const Token& t = context[context.size() - take + i];
    ctx[width - take + i] = (t == kStart) ? t : Normalize(t);
  }
  const Token tok = Normalize(token);

  size_t count = 0;
  size_t total = 0;
  if (const auto it = counts_.find(ctx); it != counts_.end()) {
    total = context_totals_.at(ctx);
    if (const auto jt = it->second.find(tok); jt != it->second.end()) {
      count = jt->second;
    }
  }
  const double denom =
      static_cast<double>(total) + alpha_ * static_cast<double>(outcome_count());
  return (static_cast<double>(count) + alpha_) / denom;
}

std::vector<double> NGramModel::ScoreTokens(const TokenSeq& tokens,
                                            double score_floor) const {
  std::vector<double> out;
  out.reserve(tokens.size());
  TokenSeq history;
  for (const Token& t : tokens) {
    const double lp = std::log(Probability(history, t));
    out.push_back(std::clamp(lp, score_floor, 0.0));
    history.push_back(t);
  }
  return out;
}

namespace {

std::string FormatDouble(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

[[noreturn]] void BadModel(const std::string& why) {
  throw Error(ErrorCode::kParseError, "n-gram model: " + why);
}

}  // namespace

void NGramModel::Save(std::ostream& os) const {
  os << "ngram " << order_ << ' ' << FormatDouble(alpha_) << '\n';
  for (const auto& [ctx, row] : counts_) {
    const std::string ctx_text = JoinTokens(ctx);
    for (const auto& [tok, c] : row) {
      os << ctx_text << '\t' << tok << '\t' << c << '\n';
    }
  }
}

NGramModel NGramModel::Load(std::istream& is) {
  NGramModel model;
  std::string line;
  if (!std::getline(is, line)) BadModel("missing header");
  {
    const TokenSeq head = SplitTokens(line);
    if (head.size() != 3 || head[0] != "ngram") BadModel("bad header");
    const auto r1 = std::from_chars(head[1].data(),
                                    head[1].data() + head[1].size(), model.order_);
    const auto r2 = std::from_chars(head[2].data(),
                                    head[2].data() + head[2].size(), model.alpha_);
    if (r1.ec != std::errc() || r2.ec != std::errc() || model.order_ < 1 ||
        !(model.alpha_ > 0.0)) {
      BadModel("bad header values");
    }
  }
  size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    const size_t t1 = line.find('\t');
    const size_t t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos) {
      BadModel("line " + std::to_string(lineno) + ": expected 3 fields");
    }
    Context ctx = SplitTokens(std::string_view(line).substr(0, t1));
    if (ctx.size() != static_cast<size_t>(model.order_ - 1)) {
      BadModel("line " + std::to_string(lineno) + ": wrong context width");
    }
    Token tok = line.substr(t1 + 1, t2 - t1 - 1);
    size_t count = 0;
    const std::string_view num = std::string_view(line).substr(t2 + 1);
    const auto r = std::from_chars(num.data(), num.data() + num.size(), count);
    if (r.ec != std::errc() || r.ptr != num.data() + num.size() ||
        !IsValidToken(tok)) {
      BadModel("line " + std::to_string(lineno) + ": bad token or count");
    }
    model.counts_[std::move(ctx)][std::move(tok)] += count;
  }
  model.Finalize();
  return model;
}

NGramModel TrainNGram(const std::vector<TokenSeq>& corpus, int order,
                      double alpha) {
  if (corpus.empty()) throw Error(ErrorCode::kEmptyCorpus, "empty training corpus");
  if (order < 1) throw Error(ErrorCode::kInvalidArgument, "n-gram order must be >= 1");
  if (!(alpha > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "smoothing alpha must be > 0");
  }
  NGramModel model;
  model.order_ = order;
  model.alpha_ = alpha;
  const size_t width = static_cast<size_t>(order - 1);
  for (const TokenSeq& sentence : corpus) {
    TokenSeq padded(width, NGramModel::kStart);
    padded.insert(padded.end(), sentence.begin(), sentence.end());
    padded.emplace_back(NGramModel::kEnd);
    for (size_t i = width; i < padded.size(); ++i) {
      TokenSeq ctx(padded.begin() + static_cast<std::ptrdiff_t>(i - width),
                   padded.begin() + static_cast<std::ptrdiff_t>(i));
      ++model.counts_[std::move(ctx)][padded[i]];
    }
  }
  model.Finalize();
  return model;
}

std::vector<double> NGramScorer::Score(const std::optional<TokenSeq>& /*source*/,
                                       const ScoredCandidate& candidate) const {
  return model_->ScoreTokens(candidate.tokens, score_floor_);
}

// ---------------------------------------------------------------------------

std::vector<ScoredCandidate> PrepareCandidates(const CandidateSet& set,
                                               const Scorer& scorer, bool dedup) {
  std::vector<ScoredCandidate> out;
  out.reserve(set.candidates.size());
  for (const ScoredCandidate& raw : set.candidates) {
    ScoredCandidate cand = dedup ? RemoveAdjacentDuplicates(raw) : raw;
    std::vector<double> scores = scorer.Score(set.source, cand);
    if (scores.size() != cand.tokens.size()) {
      throw Error(ErrorCode::kScorerFailure,
                  "scorer '" + scorer.name() + "' returned " +
                      std::to_string(scores.size()) + " scores for " +
                      std::to_string(cand.tokens.size()) + " tokens");
    }
    if (std::any_of(scores.begin(), scores.end(),
                    [](double s) { return std::isnan(s) || s > 0.0; })) {
      throw Error(ErrorCode::kScorerFailure,
                  "scorer '" + scorer.name() + "' returned a positive score");
    }
    cand.scores = std::move(scores);
    out.push_back(std::move(cand));
  }
  return out;
}

double MeanScore(const std::vector<double>& scores) {
  if (scores.empty()) return 0.0;
  return std::accumulate(scores.begin(), scores.end(), 0.0) /
         static_cast<double>(scores.size());
}

NpdSelection NpdSelect(const CandidateSet& set, const Scorer& scorer,
                       bool dedup) {
  if (set.candidates.empty()) {
    throw Error(ErrorCode::kEmptySet, "candidate set '" + set.id + "' is empty");
  }
  std::vector<ScoredCandidate> prepared = PrepareCandidates(set, scorer, dedup);
  size_t best = 0;
  double best_mean = MeanScore(prepared[0].scores);
  for (size_t j = 1; j < prepared.size(); ++j) {
    const double m = MeanScore(prepared[j].scores);
    if (m > best_mean) {
      best = j;
      best_mean = m;
    }
  }
  return {best, std::move(prepared[best])};
}

}  // namespace cds
