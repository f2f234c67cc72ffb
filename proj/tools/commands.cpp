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

#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "cds/fusion.hpp"
#include "json.hpp"
#include "records.hpp"

namespace cds::tools {
namespace {

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

bool IsDecimal(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

std::string ErrorText(const std::exception& ex) {
  if (const auto* e = dynamic_cast<const Error*>(&ex)) {
    return std::string(ErrorCodeName(e->code())) + ": " + e->what();
  }
  return ex.what();
}

struct LineResult {
  std::string output;
  std::vector<std::string> diagnostics;
  bool failed = false;
};

LineResult DecodeLine(Method method, const std::string& line, size_t lineno,
                      const Scorer& scorer, const DecodeOptions& options) {
  LineResult result;
  try {
    CandidateSet set = ParseCandidateRecord(line);
    if (options.max_candidates > 0 &&
        set.candidates.size() > options.max_candidates) {
      set.candidates.resize(options.max_candidates);
    }
    std::vector<ClampWarning> warnings;
    set = Validate(std::move(set), {options.score_floor}, &warnings);
    for (const ClampWarning& w : warnings) {
      result.diagnostics.push_back(DiagnosticLine(
          lineno, "warning",
          "candidate " + std::to_string(w.candidate) + " position " +
              std::to_string(w.position) + ": score clamped to floor"));
    }

    FusionRecord rec;
    rec.id = set.id;
    if (method == Method::kCds) {
      FusionResult fused = CandidateSoups(set, scorer, {options.dedup});
      if (options.oracle_check) {
        const std::vector<ScoredCandidate> prepared =
            PrepareCandidates(set, scorer, options.dedup);
        const SimplifiedLattice lattice = BuildLattice(prepared);
        if (lattice.PathCount() > options.path_cap) {
          result.diagnostics.push_back(DiagnosticLine(
              lineno, "warning", "oracle check skipped: too many paths"));
        } else if (OracleBest(lattice, options.path_cap) != fused.tokens) {
          throw Error(ErrorCode::kInvalidArgument,
                      "oracle mismatch: fused output differs from best path");
        }
      }
      rec.method = "cds";
      rec.output = std::move(fused.tokens);
      if (options.trace) rec.trace = std::move(fused.trace);
    } else {
      NpdSelection pick = NpdSelect(set, scorer, options.dedup);
      rec.method = "npd";
      rec.output = std::move(pick.candidate.tokens);
      if (options.trace) {
        RegionChoice whole;
        whole.chosen = pick.index;
        for (const auto& c : PrepareCandidates(set, scorer, options.dedup)) {
          whole.segment_scores.push_back(MeanScore(c.scores));
        }
        rec.trace = std::vector<RegionChoice>{std::move(whole)};
      }
    }
    result.output = SerializeFusionRecord(rec);
  } catch (const std::exception& ex) {
    result.failed = true;
    result.diagnostics.push_back(DiagnosticLine(lineno, "error", ErrorText(ex)));
  }
  return result;
}

std::vector<TokenSeq> ReadReferenceLines(std::istream& is) {
  std::vector<TokenSeq> out;
  std::string line;
  while (std::getline(is, line)) out.push_back(SplitTokens(line));
  return out;
}

double ParseDouble(const std::string& text, const std::string& key) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto r = std::from_chars(first, last, v);
  if (r.ec != std::errc() || r.ptr != last) {
    throw Error(ErrorCode::kParseError, "bad number for '" + key + "': " + text);
  }
  return v;
}

}  // namespace

std::shared_ptr<const Scorer> MakeScorer(const std::string& spec,
                                         double score_floor) {
  if (spec == "self") return std::make_shared<SelfScorer>();
  constexpr std::string_view kNgram = "ngram:";
  if (spec.rfind(kNgram, 0) == 0) {
    const std::string path = spec.substr(kNgram.size());
    std::ifstream is(path);
    if (!is) {
      throw Error(ErrorCode::kParseError, "cannot open n-gram model '" + path + "'");
    }
    auto model = std::make_shared<const NGramModel>(NGramModel::Load(is));
    return std::make_shared<NGramScorer>(std::move(model), score_floor);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown scorer '" + spec + "'");
}

int RunDecode(Method method, std::istream& in, std::ostream& out,
              std::ostream& diag, const DecodeOptions& options) {
  const std::shared_ptr<const Scorer> scorer =
      MakeScorer(options.scorer, options.score_floor);
  const size_t threads = std::max<size_t>(1, options.threads);
  const size_t batch_size = 256 * threads;

  bool any_failed = false;
  size_t next_lineno = 1;
  std::vector<std::pair<size_t, std::string>> batch;
  std::vector<LineResult> results;
  std::string line;
  bool eof = false;
  while (!eof) {
    batch.clear();
    while (batch.size() < batch_size) {
      if (!std::getline(in, line)) {
        eof = true;
        break;
      }
      const size_t lineno = next_lineno++;
      if (Trim(line).empty()) continue;
      batch.emplace_back(lineno, std::move(line));
    }
    results.assign(batch.size(), {});
    auto work = [&](size_t worker) {
      for (size_t i = worker; i < batch.size(); i += threads) {
        results[i] = DecodeLine(method, batch[i].second, batch[i].first,
                                *scorer, options);
      }
    };
    if (threads == 1 || batch.size() < 2) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (size_t w = 0; w < threads; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    for (const LineResult& r : results) {
      for (const auto& d : r.diagnostics) diag << d << '\n';
      if (r.failed) {
        any_failed = true;
      } else {
        out << r.output << '\n';
      }
    }
  }
  out.flush();
  return any_failed ? kExitLineFailure : kExitOk;
}

void ApplyNoiseConfigFile(std::istream& is, NoiseConfig* config) {
  std::string line;
  size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    if (Trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kParseError,
                  "config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = Trim(std::string_view(line).substr(0, eq));
    const std::string value = Trim(std::string_view(line).substr(eq + 1));
    if (key == "rng_seed") {
      uint64_t seed = 0;
      const auto r = std::from_chars(value.data(), value.data() + value.size(), seed);
      if (r.ec != std::errc() || r.ptr != value.data() + value.size()) {
        throw Error(ErrorCode::kParseError, "bad rng_seed: " + value);
      }
      config->rng_seed = seed;
      continue;
    }
    const double v = ParseDouble(value, key);
    if (key == "substitution_rate") config->substitution_rate = v;
    else if (key == "insertion_rate") config->insertion_rate = v;
    else if (key == "deletion_rate") config->deletion_rate = v;
    else if (key == "duplication_rate") config->duplication_rate = v;
    else if (key == "correct_score_mean") config->correct_score_mean = v;
    else if (key == "correct_score_std") config->correct_score_std = v;
    else if (key == "error_score_mean") config->error_score_mean = v;
    else if (key == "error_score_std") config->error_score_std = v;
    else if (key == "score_floor") config->score_floor = v;
    else throw Error(ErrorCode::kParseError, "unknown config key '" + key + "'");
  }
}

int RunSynth(std::istream& refs, std::ostream& out, std::ostream& diag,
             const SynthOptions& options) {
  options.noise.Check();
  const std::vector<TokenSeq> references = ReadReferenceLines(refs);
  const TokenSeq vocab = CollectVocabulary(references);
  bool any_failed = false;
  for (size_t i = 0; i < references.size(); ++i) {
    try {
      out << SerializeCandidateRecord(GenerateCandidates(
                 references[i], options.k, options.noise, vocab, i))
          << '\n';
    } catch (const std::exception& ex) {
      any_failed = true;
      diag << DiagnosticLine(i + 1, "error", ErrorText(ex)) << '\n';
    }
  }
  out.flush();
  return any_failed ? kExitLineFailure : kExitOk;
}

std::vector<TokenSeq> ReadSentences(std::istream& is) {
  std::vector<TokenSeq> out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::string trimmed = Trim(line);
    if (!trimmed.empty() && trimmed.front() == '{') {
      try {
        out.push_back(ParseFusionRecord(trimmed).output);
      } catch (const Error& e) {
        throw Error(e.code(), "line " + std::to_string(lineno) + ": " + e.what());
      }
    } else {
      out.push_back(SplitTokens(line));
    }
  }
  return out;
}

BleuReport RunBleu(std::istream& hyp, std::istream& ref,
                   std::optional<double> smoothing, int max_n) {
  const std::vector<TokenSeq> hyps = ReadSentences(hyp);
  const std::vector<TokenSeq> refs = ReadSentences(ref);
  return smoothing ? BleuWithSmoothing(hyps, refs, *smoothing, max_n)
                   : CorpusBleu(hyps, refs, max_n);
}

std::vector<CandidateSet> ReadCandidateRecords(std::istream& is,
                                               double score_floor) {
  std::vector<CandidateSet> out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (Trim(line).empty()) continue;
    try {
      out.push_back(Validate(ParseCandidateRecord(line), {score_floor}));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

CompareSummary RunCompare(const std::vector<CandidateSet>& sets,
                          const std::vector<TokenSeq>& refs,
                          const Scorer& scorer, const CompareOptions& options) {
  if (sets.size() != refs.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(sets.size()) + " candidate records but " +
                    std::to_string(refs.size()) + " references");
  }
  if (sets.empty()) throw Error(ErrorCode::kEmptyInput, "no candidate records");
  for (size_t i = 0; i < sets.size(); ++i) {
    if (IsDecimal(sets[i].id) && sets[i].id != std::to_string(i)) {
      throw Error(ErrorCode::kIdMismatch, "record " + std::to_string(i) +
                                              " has id '" + sets[i].id + "'");
    }
  }

  std::vector<TokenSeq> single;
  single.reserve(sets.size());
  for (const auto& set : sets) {
    single.push_back(options.dedup
                         ? RemoveAdjacentDuplicates(set.candidates.front()).tokens
                         : set.candidates.front().tokens);
  }
  const double single_bleu = CorpusBleu(single, refs).bleu;

  std::vector<size_t> ks;
  if (options.sweep) {
    for (size_t k = options.sweep->first; k <= options.sweep->second; ++k) {
      ks.push_back(k);
    }
  } else {
    ks.push_back(0);
  }

  CompareSummary summary;
  summary.sentences = sets.size();
  for (const size_t k : ks) {
    std::vector<TokenSeq> npd_out;
    std::vector<TokenSeq> cds_out;
    npd_out.reserve(sets.size());
    cds_out.reserve(sets.size());
    std::chrono::steady_clock::duration fusion_time{};
    for (const CandidateSet& full : sets) {
      const CandidateSet* set = &full;
      CandidateSet truncated;
      if (k > 0 && full.candidates.size() > k) {
        truncated = full;
        truncated.candidates.resize(k);
        set = &truncated;
      }
      npd_out.push_back(NpdSelect(*set, scorer, options.dedup).candidate.tokens);
      const auto t0 = std::chrono::steady_clock::now();
      FusionResult fused = CandidateSoups(*set, scorer, {options.dedup});
      fusion_time += std::chrono::steady_clock::now() - t0;
      cds_out.push_back(std::move(fused.tokens));
    }
    CompareRow row;
    row.k = k;
    row.single = single_bleu;
    row.npd = CorpusBleu(npd_out, refs).bleu;
    row.cds = CorpusBleu(cds_out, refs).bleu;
    row.mean_fusion_us =
        std::chrono::duration<double, std::micro>(fusion_time).count() /
        static_cast<double>(sets.size());
    summary.rows.push_back(row);
  }
  return summary;
}

void PrintCompare(const CompareSummary& summary, std::ostream& os) {
  os << "sentences: " << summary.sentences << '\n';
  os << std::setw(5) << "k" << std::setw(10) << "single" << std::setw(10)
     << "npd" << std::setw(10) << "cds" << std::setw(14) << "fusion_us"
     << '\n';
  os << std::fixed;
  for (const CompareRow& r : summary.rows) {
    os << std::setw(5) << (r.k == 0 ? std::string("all") : std::to_string(r.k))
       << std::setprecision(2) << std::setw(10) << r.single << std::setw(10)
       << r.npd << std::setw(10) << r.cds << std::setprecision(3)
       << std::setw(14) << r.mean_fusion_us << '\n';
  }
  os.unsetf(std::ios::floatfield);
}

std::string CompareToJson(const CompareSummary& summary) {
  nlohmann::json j;
  j["sentences"] = summary.sentences;
  nlohmann::json rows = nlohmann::json::array();
  for (const CompareRow& r : summary.rows) {
    rows.push_back({{"k", r.k},
                    {"single", r.single},
                    {"npd", r.npd},
                    {"cds", r.cds},
                    {"mean_fusion_us", r.mean_fusion_us}});
  }
  j["rows"] = std::move(rows);
  return j.dump();
}

std::optional<std::pair<size_t, size_t>> ParseRange(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) return std::nullopt;
  size_t a = 0;
  size_t b = 0;
  const char* p = text.data();
  const auto r1 = std::from_chars(p, p + dots, a);
  const auto r2 = std::from_chars(p + dots + 2, p + text.size(), b);
  if (r1.ec != std::errc() || r1.ptr != p + dots || r2.ec != std::errc() ||
      r2.ptr != p + text.size() || a < 1 || a > b) {
    return std::nullopt;
  }
  return std::make_pair(a, b);
}

// ---------------------------------------------------------------------------
// argv entry point

namespace {

// Resolves "-" to the provided default stream.
class InputFile {
 public:
  InputFile(const std::string& path, std::istream& fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
    } else {
      file_.open(path);
      if (!file_) throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
      stream_ = &file_;
    }
  }
  std::istream& get() { return *stream_; }

 private:
  std::ifstream file_;
  std::istream* stream_ = nullptr;
};

class OutputFile {
 public:
  OutputFile(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
    } else {
      file_.open(path);
      if (!file_) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double ScoreFloorFromEnv() {
  const char* env = std::getenv("CDS_SCORE_FLOOR");
  if (env == nullptr || *env == '\0') return kDefaultScoreFloor;
  double v = 0.0;
  const std::string text = env;
  const auto r = std::from_chars(text.data(), text.data() + text.size(), v);
  if (r.ec != std::errc() || r.ptr != text.data() + text.size() || !(v < 0.0)) {
    throw UsageError("CDS_SCORE_FLOOR must be a negative number");
  }
  return v;
}

void AddDecodeFlags(CLI::App* cmd, DecodeOptions* opts, std::string* input,
                    std::string* output) {
  cmd->add_option("-i,--input", *input, "CandidateRecord JSONL ('-' = stdin)");
  cmd->add_option("-o,--output", *output, "output file ('-' = stdout)");
  cmd->add_option("--scorer", opts->scorer, "self | ngram:<model-path>");
  cmd->add_option("--max-candidates", opts->max_candidates,
                  "keep only the first N candidates (0 = all)");
  cmd->add_flag("--trace", opts->trace, "include the per-region decision trace");
  cmd->add_option("--threads", opts->threads, "worker threads")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int Main(int argc, const char* const* argv, std::istream& in,
         std::ostream& out, std::ostream& err) {
  CLI::App app{"Candidate fusion for non-autoregressive translation outputs",
               "cds"};
  app.require_subcommand(1);

  DecodeOptions fuse_opts;
  std::string fuse_in = "-", fuse_out = "-";
  bool no_dedup = false;
  CLI::App* fuse = app.add_subcommand("fuse", "fuse candidates per sentence");
  AddDecodeFlags(fuse, &fuse_opts, &fuse_in, &fuse_out);
  fuse->add_flag("--oracle-check", fuse_opts.oracle_check,
                 "verify every output against the brute-force lattice search");
  fuse->add_flag("--no-dedup", no_dedup, "skip adjacent-duplicate removal");

  DecodeOptions npd_opts;
  std::string npd_in = "-", npd_out = "-";
  bool npd_no_dedup = false;
  CLI::App* npd = app.add_subcommand("npd", "select the best single candidate");
  AddDecodeFlags(npd, &npd_opts, &npd_in, &npd_out);
  npd->add_flag("--no-dedup", npd_no_dedup, "skip adjacent-duplicate removal");

  SynthOptions synth_opts;
  std::string synth_refs = "-", synth_out = "-", synth_config;
  CLI::App* synth = app.add_subcommand("synth", "generate noisy candidate sets");
  synth->add_option("refs", synth_refs, "reference file, one sentence per line");
  synth->add_option("-o,--output", synth_out, "output file");
  synth->add_option("--config", synth_config, "key = value noise config file");
  synth->add_option("--k", synth_opts.k, "candidates per sentence")
      ->check(CLI::PositiveNumber);
  CLI::Option* seed_opt = synth->add_option("--seed", synth_opts.noise.rng_seed);
  CLI::Option* sub_opt = synth->add_option("--sub", synth_opts.noise.substitution_rate);
  CLI::Option* ins_opt = synth->add_option("--ins", synth_opts.noise.insertion_rate);
  CLI::Option* del_opt = synth->add_option("--del", synth_opts.noise.deletion_rate);
  CLI::Option* dup_opt = synth->add_option("--dup", synth_opts.noise.duplication_rate);
  CLI::Option* cm_opt = synth->add_option("--correct-mean", synth_opts.noise.correct_score_mean);
  CLI::Option* cs_opt = synth->add_option("--correct-std", synth_opts.noise.correct_score_std);
  CLI::Option* em_opt = synth->add_option("--error-mean", synth_opts.noise.error_score_mean);
  CLI::Option* es_opt = synth->add_option("--error-std", synth_opts.noise.error_score_std);

  std::string bleu_hyp, bleu_ref;
  std::optional<double> bleu_smooth;
  int bleu_max_n = 4;
  CLI::App* bleu = app.add_subcommand("bleu", "corpus BLEU as a JSON object");
  bleu->add_option("--hyp", bleu_hyp, "hypotheses (text or FusionRecord JSONL)")
      ->required();
  bleu->add_option("--ref", bleu_ref, "references, one per line")->required();
  bleu->add_option("--smooth", bleu_smooth, "epsilon for zero-match orders");
  bleu->add_option("--max-n", bleu_max_n)->check(CLI::Range(1, 8));

  std::string cmp_in = "-", cmp_refs, cmp_sweep, cmp_scorer = "self";
  bool cmp_json = false, cmp_no_dedup = false;
  CLI::App* compare = app.add_subcommand("compare", "BLEU of single, npd and cds");
  compare->add_option("-i,--input", cmp_in, "CandidateRecord JSONL");
  compare->add_option("--refs", cmp_refs, "references, one per line")->required();
  compare->add_option("--scorer", cmp_scorer, "self | ngram:<model-path>");
  compare->add_option("--sweep-k", cmp_sweep, "candidate-count range A..B");
  compare->add_flag("--json", cmp_json, "emit JSON instead of a table");
  compare->add_flag("--no-dedup", cmp_no_dedup, "skip adjacent-duplicate removal");

  std::string train_corpus = "-", train_out = "-";
  int train_order = 3;
  double train_alpha = 0.1;
  CLI::App* train = app.add_subcommand("ngram-train", "train an add-alpha n-gram model");
  train->add_option("--corpus", train_corpus, "tokenized text, one sentence per line");
  train->add_option("-o,--output", train_out, "model file");
  train->add_option("--order", train_order)->check(CLI::PositiveNumber);
  train->add_option("--alpha", train_alpha);

  ReferenceConfig refs_cfg;
  std::string refs_out = "-";
  CLI::App* gen_refs = app.add_subcommand("gen-refs", "random Zipfian reference sentences");
  gen_refs->add_option("--count", refs_cfg.count);
  gen_refs->add_option("--seed", refs_cfg.seed);
  gen_refs->add_option("--vocab-size", refs_cfg.vocab_size);
  gen_refs->add_option("--min-len", refs_cfg.min_length);
  gen_refs->add_option("--max-len", refs_cfg.max_length);
  gen_refs->add_option("--zipf", refs_cfg.zipf_exponent);
  gen_refs->add_option("-o,--output", refs_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const double floor = ScoreFloorFromEnv();

    if (*fuse || *npd) {
      const bool is_fuse = static_cast<bool>(*fuse);
      DecodeOptions opts = is_fuse ? fuse_opts : npd_opts;
      opts.dedup = !(is_fuse ? no_dedup : npd_no_dedup);
      opts.score_floor = floor;
      InputFile input(is_fuse ? fuse_in : npd_in, in);
      OutputFile output(is_fuse ? fuse_out : npd_out, out);
      return RunDecode(is_fuse ? Method::kCds : Method::kNpd, input.get(),
                       output.get(), err, opts);
    }

    if (*synth) {
      SynthOptions opts = synth_opts;
      if (!synth_config.empty()) {
        std::ifstream cfg(synth_config);
        if (!cfg) throw UsageError("cannot open config '" + synth_config + "'");
        NoiseConfig from_file;
        ApplyNoiseConfigFile(cfg, &from_file);
        // Explicit flags win over the config file.
        const NoiseConfig& flags = synth_opts.noise;
        opts.noise = from_file;
        if (*seed_opt) opts.noise.rng_seed = flags.rng_seed;
        if (*sub_opt) opts.noise.substitution_rate = flags.substitution_rate;
        if (*ins_opt) opts.noise.insertion_rate = flags.insertion_rate;
        if (*del_opt) opts.noise.deletion_rate = flags.deletion_rate;
        if (*dup_opt) opts.noise.duplication_rate = flags.duplication_rate;
        if (*cm_opt) opts.noise.correct_score_mean = flags.correct_score_mean;
        if (*cs_opt) opts.noise.correct_score_std = flags.correct_score_std;
        if (*em_opt) opts.noise.error_score_mean = flags.error_score_mean;
        if (*es_opt) opts.noise.error_score_std = flags.error_score_std;
      }
      opts.noise.score_floor = std::max(opts.noise.score_floor, floor);
      try {
        opts.noise.Check();
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      InputFile input(synth_refs, in);
      OutputFile output(synth_out, out);
      return RunSynth(input.get(), output.get(), err, opts);
    }

    if (*bleu) {
      InputFile hyp(bleu_hyp, in);
      InputFile ref(bleu_ref, in);
      out << SerializeBleuReport(RunBleu(hyp.get(), ref.get(), bleu_smooth, bleu_max_n))
          << '\n';
      return kExitOk;
    }

    if (*compare) {
      CompareOptions opts;
      opts.dedup = !cmp_no_dedup;
      if (!cmp_sweep.empty()) {
        opts.sweep = ParseRange(cmp_sweep);
        if (!opts.sweep) throw UsageError("--sweep-k expects A..B with 1 <= A <= B");
      }
      const auto scorer = MakeScorer(cmp_scorer, floor);
      InputFile input(cmp_in, in);
      InputFile refs(cmp_refs, in);
      const std::vector<CandidateSet> sets = ReadCandidateRecords(input.get(), floor);
      const std::vector<TokenSeq> references = ReadSentences(refs.get());
      const CompareSummary summary = RunCompare(sets, references, *scorer, opts);
      if (cmp_json) {
        out << CompareToJson(summary) << '\n';
      } else {
        PrintCompare(summary, out);
      }
      return kExitOk;
    }

    if (*train) {
      InputFile corpus(train_corpus, in);
      const NGramModel model =
          TrainNGram(ReadReferenceLines(corpus.get()), train_order, train_alpha);
      OutputFile output(train_out, out);
      model.Save(output.get());
      return kExitOk;
    }

    if (*gen_refs) {
      OutputFile output(refs_out, out);
      for (const TokenSeq& s : GenerateReferences(refs_cfg)) {
        output.get() << JoinTokens(s) << '\n';
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << DiagnosticLine(0, "error", ErrorText(e)) << '\n';
    return kExitLineFailure;
  }
  return kExitUsage;
}

}  // namespace cds::tools
