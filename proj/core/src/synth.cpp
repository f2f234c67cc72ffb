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

#include "cds/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <string>

namespace cds {
namespace {

uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// std::mt19937_64 output is fully specified by the standard; the
// distributions in <random> are not, so the few we need are written here.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in [0, n).
  size_t Index(size_t n) { return static_cast<size_t>(engine_() % n); }

  bool Bernoulli(double p) { return Uniform() < p; }

  double Normal(double mean, double stddev) {
    const double u1 = 1.0 - Uniform();  // (0, 1]
    const double u2 = Uniform();
    const double z = std::sqrt(-2.0 * std::log(u1)) *
                     std::cos(2.0 * std::numbers::pi * u2);
    return mean + stddev * z;
  }

 private:
  std::mt19937_64 engine_;
};

void CheckRate(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(name) + " must be in [0, 1]");
  }
}

}  // namespace

void NoiseConfig::Check() const {
  CheckRate(substitution_rate, "substitution_rate");
  CheckRate(insertion_rate, "insertion_rate");
  CheckRate(deletion_rate, "deletion_rate");
  CheckRate(duplication_rate, "duplication_rate");
  if (!(correct_score_mean <= 0.0) || !(error_score_mean <= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "score means must be <= 0");
  }
  if (!(correct_score_std >= 0.0) || !(error_score_std >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "score deviations must be >= 0");
  }
  if (!(score_floor <= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "score_floor must be <= 0");
  }
}

uint64_t SubstreamSeed(uint64_t seed, uint64_t sentence, uint64_t candidate) {
  uint64_t x = SplitMix64(seed);
  x = SplitMix64(x ^ SplitMix64(sentence + 0x51ed2701f3a5c7b9ULL));
  x = SplitMix64(x ^ SplitMix64(candidate + 0x2545f4914f6cdd1dULL));
  return x;
}

CandidateSet GenerateCandidates(const TokenSeq& reference, size_t k,
                                const NoiseConfig& config,
                                std::span<const Token> vocab,
                                uint64_t sentence_index) {
  if (reference.empty()) {
    throw Error(ErrorCode::kEmptyReference,
                "reference " + std::to_string(sentence_index) + " is empty");
  }
  config.Check();
  if (vocab.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "synthesis vocabulary is empty");
  }

  CandidateSet set;
  set.id = std::to_string(sentence_index);
  set.candidates.reserve(k);
  for (size_t i = 0; i < k; ++i) {
    Rng rng(SubstreamSeed(config.rng_seed, sentence_index, i));
    ScoredCandidate cand;
    auto emit = [&](const Token& tok, bool intact) {
      const double s =
          intact ? rng.Normal(config.correct_score_mean, config.correct_score_std)
                 : rng.Normal(config.error_score_mean, config.error_score_std);
      cand.tokens.push_back(tok);
      cand.scores.push_back(std::clamp(s, config.score_floor, 0.0));
    };
    auto random_token = [&] { return vocab[rng.Index(vocab.size())]; };

    for (const Token& ref_tok : reference) {
      if (rng.Bernoulli(config.deletion_rate)) continue;
      Token tok = ref_tok;
      bool intact = true;
      if (rng.Bernoulli(config.substitution_rate)) {
        // Redraw until the replacement differs; give up if the vocabulary
        // has nothing else to offer.
        for (int tries = 0; tries < 64; ++tries) {
          const Token& r = random_token();
          if (r != ref_tok) {
            tok = r;
            intact = false;
            break;
          }
        }
      }
      emit(tok, intact);
      if (rng.Bernoulli(config.duplication_rate)) emit(tok, intact);
      if (rng.Bernoulli(config.insertion_rate)) emit(random_token(), false);
    }
    if (cand.tokens.empty()) emit(random_token(), false);
    set.candidates.push_back(std::move(cand));
  }
  return set;
}

TokenSeq CollectVocabulary(std::span<const TokenSeq> references) {
  std::set<Token> distinct;
  for (const auto& ref : references) distinct.insert(ref.begin(), ref.end());
  return TokenSeq(distinct.begin(), distinct.end());
}

std::vector<CandidateSet> GenerateCorpus(std::span<const TokenSeq> references,
                                         size_t k, const NoiseConfig& config) {
  const TokenSeq vocab = CollectVocabulary(references);
  std::vector<CandidateSet> out;
  out.reserve(references.size());
  for (size_t s = 0; s < references.size(); ++s) {
    out.push_back(GenerateCandidates(references[s], k, config, vocab, s));
  }
  return out;
}

std::vector<TokenSeq> GenerateReferences(const ReferenceConfig& config) {
  if (config.vocab_size < 2 || config.min_length == 0 ||
      config.min_length > config.max_length) {
    throw Error(ErrorCode::kInvalidArgument, "bad reference generator config");
  }
  std::vector<double> cdf(config.vocab_size);
  double total = 0.0;
  for (size_t r = 0; r < config.vocab_size; ++r) {
    total += 1.0 / std::pow(static_cast<double>(r + 1), config.zipf_exponent);
    cdf[r] = total;
  }
  for (double& c : cdf) c /= total;

  Rng rng(SplitMix64(config.seed));
  std::vector<TokenSeq> out;
  out.reserve(config.count);
  for (size_t s = 0; s < config.count; ++s) {
    const size_t len =
        config.min_length + rng.Index(config.max_length - config.min_length + 1);
    TokenSeq sentence;
    sentence.reserve(len);
    while (sentence.size() < len) {
      const double u = rng.Uniform();
      const size_t rank = std::min<size_t>(
          static_cast<size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) -
                              cdf.begin()),
          config.vocab_size - 1);
      Token tok = "w" + std::to_string(rank);
      if (!sentence.empty() && sentence.back() == tok) continue;
      sentence.push_back(std::move(tok));
    }
    out.push_back(std::move(sentence));
  }
  return out;
}

}  // namespace cds
