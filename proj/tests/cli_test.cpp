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

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "gtest/gtest.h"
#include "json.hpp"
#include "records.hpp"
#include "test_util.hpp"

namespace cds::tools {
namespace {

using nlohmann::json;

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult Cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "cds");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = Main(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

std::string TempPath(const std::string& name) {
  return ::testing::TempDir() + "cds_cli_" + name;
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
}

std::string JoinLines(const std::vector<TokenSeq>& sents) {
  std::string s;
  for (const auto& t : sents) s += JoinTokens(t) + "\n";
  return s;
}

TEST(RecordsTest, RoundTripPreservesTokensAndScores) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(-30.0, 0.0);
  for (int iter = 0; iter < 500; ++iter) {
    CandidateSet set = cds::testing::RandomSet(rng);
    set.id = "s" + std::to_string(iter);
    for (auto& c : set.candidates) {
      for (double& s : c.scores) s = u(rng) / 3.0;  // non-terminating decimals
    }
    if (iter % 2) set.source = TokenSeq{"src", "é", "x"};
    const std::string line = SerializeCandidateRecord(set);
    EXPECT_EQ(ParseCandidateRecord(line), set);
    EXPECT_EQ(SerializeCandidateRecord(ParseCandidateRecord(line)), line);
  }
}

TEST(RecordsTest, MalformedLinesAreParseErrors) {
  for (const char* bad : {"{", "[]", R"({"candidates": []})",
                          R"({"id": "1", "candidates": [{"tokens": "a b"}]})",
                          R"({"id": "1", "candidates": [{"tokens": ["a"], "scores": ["x"]}]})"}) {
    try {
      ParseCandidateRecord(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParseError) << bad;
    }
  }
}

TEST(RecordsTest, FusionRecordRoundTrip) {
  FusionRecord r{"7", {"a", "b"}, "cds", std::vector<RegionChoice>{}};
  RegionChoice rc;
  rc.region_index = 2;
  rc.chosen = 1;
  rc.segment_scores = {-0.25, -0.125};
  r.trace->push_back(rc);
  const FusionRecord back = ParseFusionRecord(SerializeFusionRecord(r));
  EXPECT_EQ(back.id, "7");
  EXPECT_EQ(back.output, r.output);
  EXPECT_EQ(back.method, "cds");
  ASSERT_TRUE(back.trace.has_value());
  EXPECT_EQ((*back.trace)[0].chosen, 1u);
  EXPECT_EQ((*back.trace)[0].segment_scores, rc.segment_scores);
}

TEST(FuseCommandTest, TwoCandidateThroughMain) {
  const std::string in = SerializeCandidateRecord(cds::testing::TwoCandidateSet()) + "\n";
  const RunResult fuse = Cli({"fuse", "--trace"}, in);
  ASSERT_EQ(fuse.code, kExitOk) << fuse.err;
  const FusionRecord f = ParseFusionRecord(Lines(fuse.out).at(0));
  EXPECT_EQ(f.output, SplitTokens(cds::testing::kTwoCandidateFused));
  EXPECT_EQ(f.method, "cds");
  ASSERT_TRUE(f.trace.has_value());
  EXPECT_EQ(f.trace->size(), 2u);

  const RunResult npd = Cli({"npd"}, in);
  ASSERT_EQ(npd.code, kExitOk) << npd.err;
  const FusionRecord n = ParseFusionRecord(Lines(npd.out).at(0));
  EXPECT_EQ(n.output, SplitTokens(cds::testing::kTwoCandidateNpd));
  EXPECT_EQ(n.method, "npd");
  EXPECT_FALSE(n.trace.has_value());
}

TEST(FuseCommandTest, MaxCandidatesOneGivesFirstCandidate) {
  CandidateSet set = cds::testing::ThreeCandidateSet();
  set.candidates[0].tokens[1] = "The";  // adjacent repeat, removed by dedup
  const std::string in = SerializeCandidateRecord(set) + "\n";
  for (const char* cmd : {"fuse", "npd"}) {
    const RunResult r = Cli({cmd, "--max-candidates", "1"}, in);
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_EQ(ParseFusionRecord(Lines(r.out).at(0)).output,
              RemoveAdjacentDuplicates(set.candidates[0]).tokens);
  }
}

TEST(FuseCommandTest, OracleCheckOnSyntheticLines) {
  ReferenceConfig rc;
  rc.count = 1000;
  rc.vocab_size = 8;
  rc.min_length = 3;
  rc.max_length = 12;
  const auto refs = GenerateReferences(rc);
  NoiseConfig noise;
  noise.rng_seed = 3;
  std::string in;
  for (const auto& set : GenerateCorpus(refs, 4, noise)) {
    in += SerializeCandidateRecord(set) + "\n";
  }
  const RunResult r = Cli({"fuse", "--oracle-check", "--threads", "4"}, in);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.err, "");
  const auto lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 1000u);
  for (size_t i = 0; i < lines.size(); ++i) {
    EXPECT_EQ(ParseFusionRecord(lines[i]).id, std::to_string(i));
  }
  // Threaded output is byte-identical to a single worker.
  EXPECT_EQ(Cli({"fuse", "--threads", "1"}, in).out, r.out);
}

TEST(FuseCommandTest, BadLineReportsAndContinues) {
  const std::string good = SerializeCandidateRecord(cds::testing::TwoCandidateSet());
  const std::string in = good + "\nnot json\n" +
                         R"({"id": "x", "candidates": [{"tokens": ["a"], "scores": [0.5]}]})" +
                         "\n" + good + "\n";
  const RunResult r = Cli({"fuse"}, in);
  EXPECT_EQ(r.code, kExitLineFailure);
  EXPECT_EQ(Lines(r.out).size(), 2u);
  const auto diag = Lines(r.err);
  ASSERT_EQ(diag.size(), 2u);
  EXPECT_EQ(json::parse(diag[0])["line"], 2);
  EXPECT_EQ(json::parse(diag[1])["line"], 3);
  EXPECT_TRUE(json::parse(diag[1])["error"].get<std::string>().find("PositiveScore") !=
              std::string::npos);
}

TEST(FuseCommandTest, ClampWarningDoesNotFail) {
  const CandidateSet set = cds::testing::MakeSet({{{"a", "b"}, {-50.0, -0.1}}});
  const RunResult r = Cli({"fuse"}, SerializeCandidateRecord(set) + "\n");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(json::parse(Lines(r.err).at(0)).contains("warning"));
}

TEST(MainTest, UsageErrors) {
  EXPECT_EQ(Cli({"nonsense"}).code, kExitUsage);
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"fuse", "--threads", "0"}).code, kExitUsage);
  EXPECT_EQ(Cli({"compare", "--refs", "x", "--sweep-k", "3..1"}, "").code, kExitUsage);
  EXPECT_EQ(Cli({"synth", "--sub", "2"}, "a b\n").code, kExitUsage);
}

TEST(MainTest, ScoreFloorFromEnvironment) {
  const CandidateSet set = cds::testing::MakeSet({{{"a", "b"}, {-20.0, -0.1}}});
  const std::string in = SerializeCandidateRecord(set) + "\n";
  ::setenv("CDS_SCORE_FLOOR", "-10", 1);
  const RunResult clamped = Cli({"fuse"}, in);
  ::setenv("CDS_SCORE_FLOOR", "positive", 1);
  const RunResult bad = Cli({"fuse"}, in);
  ::unsetenv("CDS_SCORE_FLOOR");
  EXPECT_EQ(clamped.code, kExitOk);
  EXPECT_EQ(json::parse(Lines(clamped.err).at(0))["line"], 1);
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_EQ(Cli({"fuse"}, in).err, "");
}

TEST(SynthCommandTest, ByteIdenticalAndPrefixStable) {
  const std::string refs = "a b c d e\nf g h\n";
  const RunResult a = Cli({"synth", "--k", "5", "--seed", "9"}, refs);
  const RunResult b = Cli({"synth", "--k", "5", "--seed", "9"}, refs);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto lines = Lines(a.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(ParseCandidateRecord(lines[1]).id, "1");
  EXPECT_EQ(ParseCandidateRecord(lines[0]).candidates.size(), 5u);
  EXPECT_NE(Cli({"synth", "--k", "5", "--seed", "10"}, refs).out, a.out);
}

TEST(SynthCommandTest, ConfigFileWithFlagOverride) {
  const std::string cfg = TempPath("noise.cfg");
  WriteFile(cfg, "# quiet channel\nsubstitution_rate = 0\ninsertion_rate = 0\n"
                 "deletion_rate = 0\nduplication_rate = 0\n");
  const RunResult quiet = Cli({"synth", "--config", cfg, "--k", "3"}, "a b c\n");
  ASSERT_EQ(quiet.code, kExitOk) << quiet.err;
  for (const auto& c : ParseCandidateRecord(Lines(quiet.out)[0]).candidates) {
    EXPECT_EQ(c.tokens, (TokenSeq{"a", "b", "c"}));
  }
  const RunResult noisy =
      Cli({"synth", "--config", cfg, "--k", "3", "--sub", "1"}, "a b c\nd e f\n");
  for (const auto& c : ParseCandidateRecord(Lines(noisy.out)[0]).candidates) {
    EXPECT_NE(c.tokens, (TokenSeq{"a", "b", "c"}));
  }
}

TEST(SynthCommandTest, EmptyReferenceLineFails) {
  const RunResult r = Cli({"synth", "--k", "2"}, "a b\n\nc d\n");
  EXPECT_EQ(r.code, kExitLineFailure);
  EXPECT_EQ(json::parse(Lines(r.err).at(0))["line"], 2);
  EXPECT_EQ(Lines(r.out).size(), 2u);
}

TEST(BleuCommandTest, JsonReport) {
  const std::string hyp = TempPath("hyp.txt"), ref = TempPath("ref.txt");
  WriteFile(hyp, "a b c d\n");
  WriteFile(ref, "a b c d e\n");
  const RunResult r = Cli({"bleu", "--hyp", hyp, "--ref", ref});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["bleu"].get<double>(), 100.0 * std::exp(-0.25), 1e-9);
  EXPECT_EQ(j["hyp_len"], 4);
  EXPECT_EQ(j["ref_len"], 5);
  EXPECT_EQ(j["precisions"].size(), 4u);
  EXPECT_TRUE(j.contains("bp"));
}

TEST(BleuCommandTest, ReadsFusionRecords) {
  const std::string fused = TempPath("fused.jsonl"), ref = TempPath("ref2.txt");
  WriteFile(fused, Cli({"fuse"}, SerializeCandidateRecord(cds::testing::TwoCandidateSet()) +
                                     "\n").out);
  WriteFile(ref, std::string(cds::testing::kTwoCandidateFused) + "\n");
  const json j = json::parse(Cli({"bleu", "--hyp", fused, "--ref", ref}).out);
  EXPECT_DOUBLE_EQ(j["bleu"].get<double>(), 100.0);
}

TEST(CompareTest, ZeroNoiseScoresHundred) {
  ReferenceConfig rc;
  rc.count = 50;
  const auto refs = GenerateReferences(rc);
  NoiseConfig quiet;
  quiet.substitution_rate = quiet.insertion_rate = 0.0;
  quiet.deletion_rate = quiet.duplication_rate = 0.0;
  const CompareSummary s =
      RunCompare(GenerateCorpus(refs, 4, quiet), refs, SelfScorer(), {});
  ASSERT_EQ(s.rows.size(), 1u);
  EXPECT_EQ(s.sentences, 50u);
  EXPECT_DOUBLE_EQ(s.rows[0].single, 100.0);
  EXPECT_DOUBLE_EQ(s.rows[0].npd, 100.0);
  EXPECT_DOUBLE_EQ(s.rows[0].cds, 100.0);
}

TEST(CompareTest, SweepFirstRowEqualsSingle) {
  ReferenceConfig rc;
  rc.count = 100;
  const auto refs = GenerateReferences(rc);
  CompareOptions opts;
  opts.sweep = std::make_pair(size_t{1}, size_t{4});
  const CompareSummary s =
      RunCompare(GenerateCorpus(refs, 4, NoiseConfig{}), refs, SelfScorer(), opts);
  ASSERT_EQ(s.rows.size(), 4u);
  for (size_t i = 0; i < 4; ++i) EXPECT_EQ(s.rows[i].k, i + 1);
  EXPECT_DOUBLE_EQ(s.rows[0].cds, s.rows[0].single);
  EXPECT_DOUBLE_EQ(s.rows[0].npd, s.rows[0].single);
  const json j = json::parse(CompareToJson(s));
  EXPECT_EQ(j["rows"].size(), 4u);
}

TEST(CompareTest, MismatchedInputs) {
  const auto refs = GenerateReferences({.count = 3});
  auto sets = GenerateCorpus(refs, 2, NoiseConfig{});
  try {
    RunCompare(sets, {refs[0]}, SelfScorer(), {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLengthMismatch);
  }
  sets[1].id = "2";
  try {
    RunCompare(sets, refs, SelfScorer(), {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIdMismatch);
  }
}

TEST(CompareTest, ParseRange) {
  EXPECT_EQ(ParseRange("1..7"), std::make_pair(size_t{1}, size_t{7}));
  EXPECT_FALSE(ParseRange("0..3"));
  EXPECT_FALSE(ParseRange("4..2"));
  EXPECT_FALSE(ParseRange("1-7"));
}

TEST(CompareCommandTest, EndToEndThroughMain) {
  const std::string refs = TempPath("cmp_refs.txt");
  const RunResult gen = Cli({"gen-refs", "--count", "30", "-o", refs});
  ASSERT_EQ(gen.code, kExitOk);
  std::ifstream rf(refs);
  std::stringstream rtext;
  rtext << rf.rdbuf();
  const RunResult synth = Cli({"synth", "--k", "3", "--seed", "2"}, rtext.str());
  const RunResult cmp =
      Cli({"compare", "--refs", refs, "--sweep-k", "1..3", "--json"}, synth.out);
  ASSERT_EQ(cmp.code, kExitOk) << cmp.err;
  EXPECT_EQ(json::parse(cmp.out)["rows"].size(), 3u);
  const RunResult table = Cli({"compare", "--refs", refs}, synth.out);
  EXPECT_NE(table.out.find("cds"), std::string::npos);
}

TEST(NGramCommandTest, TrainThenScore) {
  const std::string corpus = TempPath("corpus.txt"), model = TempPath("model.ngram");
  const auto refs = GenerateReferences({.count = 200, .vocab_size = 30});
  WriteFile(corpus, JoinLines(refs));
  const RunResult train =
      Cli({"ngram-train", "--corpus", corpus, "--order", "2", "-o", model});
  ASSERT_EQ(train.code, kExitOk) << train.err;
  std::ifstream mf(model);
  std::string header;
  std::getline(mf, header);
  EXPECT_EQ(header, "ngram 2 0.1");

  const auto sets = GenerateCorpus(refs, 3, NoiseConfig{});
  std::string in;
  for (size_t i = 0; i < 20; ++i) in += SerializeCandidateRecord(sets[i]) + "\n";
  const RunResult fused = Cli({"fuse", "--scorer", "ngram:" + model, "--oracle-check"}, in);
  EXPECT_EQ(fused.code, kExitOk) << fused.err;
  EXPECT_EQ(Lines(fused.out).size(), 20u);
  EXPECT_EQ(Cli({"fuse", "--scorer", "ngram:/nonexistent"}, in).code, kExitLineFailure);
  EXPECT_EQ(Cli({"fuse", "--scorer", "bogus"}, in).code, kExitLineFailure);
}

}  // namespace
}  // namespace cds::tools
