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

#include "cds/candidates.hpp"

#include <set>

#include "gtest/gtest.h"
#include "test_util.hpp"

namespace cds {
namespace {

// Independent run-length scanner: finds run boundaries first, then keeps the
// final index of each run.
ScoredCandidate RunLengthOracle(const ScoredCandidate& c) {
  std::vector<size_t> run_ends;
  for (size_t i = 0; i < c.tokens.size(); ++i) {
    const bool last_of_run =
        i + 1 == c.tokens.size() || c.tokens[i + 1] != c.tokens[i];
    if (last_of_run) run_ends.push_back(i);
  }
  ScoredCandidate out;
  for (size_t i : run_ends) {
    out.tokens.push_back(c.tokens[i]);
    out.scores.push_back(c.scores[i]);
  }
  return out;
}

TEST(RemoveAdjacentDuplicatesTest, CollapsesRunKeepingLastScore) {
  const ScoredCandidate in{{"a", "a", "b"}, {-1.0, -0.5, -0.2}};
  const ScoredCandidate out = RemoveAdjacentDuplicates(in);
  EXPECT_EQ(out.tokens, (TokenSeq{"a", "b"}));
  EXPECT_EQ(out.scores, (std::vector<double>{-0.5, -0.2}));
}

TEST(RemoveAdjacentDuplicatesTest, IdentityWithoutRepeats) {
  const ScoredCandidate in{{"a", "b", "c"}, {-1.0, -0.5, -0.2}};
  EXPECT_EQ(RemoveAdjacentDuplicates(in), in);
}

TEST(RemoveAdjacentDuplicatesTest, MatchesRunLengthOracle) {
  const ScoredCandidate in{{"x", "x", "x", "y", "x"}, {-0.1, -0.2, -0.3, -0.4, -0.5}};
  const ScoredCandidate out = RemoveAdjacentDuplicates(in);
  EXPECT_EQ(out.tokens, (TokenSeq{"x", "y", "x"}));
  EXPECT_EQ(out.scores, (std::vector<double>{-0.3, -0.4, -0.5}));
  EXPECT_EQ(out, RunLengthOracle(in));
}

TEST(RemoveAdjacentDuplicatesTest, RandomizedProperties) {
  std::mt19937_64 rng(11);
  testing::RandomSetConfig cfg;
  cfg.vocab = 3;  // plenty of runs
  for (int iter = 0; iter < 1000; ++iter) {
    const ScoredCandidate c = testing::RandomCandidate(rng, cfg);
    const ScoredCandidate once = RemoveAdjacentDuplicates(c);
    EXPECT_EQ(once, RunLengthOracle(c));
    EXPECT_EQ(RemoveAdjacentDuplicates(once), once);
    EXPECT_LE(once.size(), c.size());
    EXPECT_EQ(once.tokens.size(), once.scores.size());
    for (size_t i = 1; i < once.tokens.size(); ++i) {
      EXPECT_NE(once.tokens[i - 1], once.tokens[i]);
    }
    EXPECT_EQ(std::set<Token>(c.tokens.begin(), c.tokens.end()),
              std::set<Token>(once.tokens.begin(), once.tokens.end()));
  }
}

TEST(ValidateTest, AcceptsWellFormedSet) {
  const CandidateSet set = testing::MakeSet(
      {{{"a", "b"}, {-0.1, -0.2}}, {{"a", "c"}, {-0.3, 0.0}}});
  std::vector<ClampWarning> warnings;
  EXPECT_EQ(Validate(set, {}, &warnings), set);
  EXPECT_TRUE(warnings.empty());
}

TEST(ValidateTest, LengthMismatch) {
  const CandidateSet set = testing::MakeSet({{{"a", "b", "c"}, {-0.1, -0.2}}});
  try {
    Validate(set);
    FAIL() << "expected LengthMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLengthMismatch);
  }
}

TEST(ValidateTest, EmptyCandidateAndEmptySet) {
  try {
    Validate(testing::MakeSet({{{}, {}}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyCandidate);
  }
  try {
    Validate(testing::MakeSet({}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptySet);
  }
}

TEST(ValidateTest, PositiveScoreRejected) {
  try {
    Validate(testing::MakeSet({{{"a"}, {0.5}}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPositiveScore);
  }
}

TEST(ValidateTest, WhitespaceTokenRejected) {
  try {
    Validate(testing::MakeSet({{{"a b"}, {-0.5}}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidToken);
  }
  EXPECT_FALSE(IsValidToken(""));
  EXPECT_FALSE(IsValidToken("a\nb"));
  EXPECT_TRUE(IsValidToken("Ünïcode"));
}

TEST(ValidateTest, ClampsBelowFloorWithWarning) {
  std::vector<ClampWarning> warnings;
  const CandidateSet out =
      Validate(testing::MakeSet({{{"a", "b"}, {-45.0, -1.0}}}), {-30.0}, &warnings);
  EXPECT_EQ(out.candidates[0].scores, (std::vector<double>{-30.0, -1.0}));
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_EQ(warnings[0].position, 0u);
  EXPECT_EQ(warnings[0].original, -45.0);
}

TEST(TokenTextTest, SplitAndJoin) {
  EXPECT_EQ(SplitTokens("  a  b\tc \n"), (TokenSeq{"a", "b", "c"}));
  EXPECT_TRUE(SplitTokens("   ").empty());
  EXPECT_EQ(JoinTokens({"a", "b"}), "a b");
}

}  // namespace
}  // namespace cds
