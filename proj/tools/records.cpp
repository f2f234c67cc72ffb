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

#include "records.hpp"

#include "json.hpp"

namespace cds::tools {
namespace {

using nlohmann::json;

[[noreturn]] void Bad(const std::string& why) {
  throw Error(ErrorCode::kParseError, why);
}

std::string Dump(const json& j) {
  return j.dump(-1, ' ', false, json::error_handler_t::replace);
}

json ParseJson(std::string_view line) {
  json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) Bad("malformed JSON");
  if (!j.is_object()) Bad("record is not a JSON object");
  return j;
}

std::string ParseId(const json& j) {
  const auto it = j.find("id");
  if (it == j.end()) Bad("missing 'id'");
  if (it->is_string()) return it->get<std::string>();
  if (it->is_number_integer()) return it->dump();
  Bad("'id' must be a string");
}

TokenSeq ParseTokenArray(const json& j, const char* what) {
  if (!j.is_array()) Bad(std::string("'") + what + "' must be an array");
  TokenSeq out;
  out.reserve(j.size());
  for (const auto& t : j) {
    if (!t.is_string()) Bad(std::string("'") + what + "' entries must be strings");
    out.push_back(t.get<std::string>());
  }
  return out;
}

}  // namespace

CandidateSet ParseCandidateRecord(std::string_view line) {
  const json j = ParseJson(line);
  CandidateSet set;
  set.id = ParseId(j);
  if (const auto it = j.find("source"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) Bad("'source' must be a string");
    set.source = SplitTokens(it->get<std::string>());
  }
  const auto cands = j.find("candidates");
  if (cands == j.end() || !cands->is_array()) Bad("'candidates' must be an array");
  for (const auto& c : *cands) {
    if (!c.is_object()) Bad("candidate must be an object");
    const auto toks = c.find("tokens");
    const auto scores = c.find("scores");
    if (toks == c.end() || scores == c.end()) {
      Bad("candidate needs 'tokens' and 'scores'");
    }
    ScoredCandidate sc;
    sc.tokens = ParseTokenArray(*toks, "tokens");
    if (!scores->is_array()) Bad("'scores' must be an array");
    for (const auto& s : *scores) {
      if (!s.is_number()) Bad("'scores' entries must be numbers");
      sc.scores.push_back(s.get<double>());
    }
    set.candidates.push_back(std::move(sc));
  }
  return set;
}

std::string SerializeCandidateRecord(const CandidateSet& set) {
  json j;
  j["id"] = set.id;
  if (set.source) j["source"] = JoinTokens(*set.source);
  json cands = json::array();
  for (const auto& c : set.candidates) {
    cands.push_back({{"tokens", c.tokens}, {"scores", c.scores}});
  }
  j["candidates"] = std::move(cands);
  return Dump(j);
}

FusionRecord ParseFusionRecord(std::string_view line) {
  const json j = ParseJson(line);
  FusionRecord rec;
  rec.id = ParseId(j);
  const auto out = j.find("output");
  if (out == j.end()) Bad("missing 'output'");
  rec.output = ParseTokenArray(*out, "output");
  if (const auto m = j.find("method"); m != j.end() && m->is_string()) {
    rec.method = m->get<std::string>();
  }
  if (const auto t = j.find("trace"); t != j.end() && t->is_array()) {
    std::vector<RegionChoice> trace;
    try {
      for (const auto& e : *t) {
        if (!e.is_object()) Bad("trace entries must be objects");
        RegionChoice rc;
        rc.region_index = e.value("region", size_t{0});
        rc.chosen = e.value("chosen", size_t{0});
        rc.segment_scores = e.value("scores", std::vector<double>{});
        trace.push_back(std::move(rc));
      }
    } catch (const json::exception& ex) {
      Bad(std::string("bad trace: ") + ex.what());
    }
    rec.trace = std::move(trace);
  }
  return rec;
}

std::string SerializeFusionRecord(const FusionRecord& record) {
  json j;
  j["id"] = record.id;
  j["output"] = record.output;
  j["method"] = record.method;
  if (record.trace) {
    json trace = json::array();
    for (const auto& rc : *record.trace) {
      trace.push_back({{"region", rc.region_index},
                       {"chosen", rc.chosen},
                       {"scores", rc.segment_scores}});
    }
    j["trace"] = std::move(trace);
  }
  return Dump(j);
}

std::string SerializeBleuReport(const BleuReport& report) {
  json j;
  j["bleu"] = report.bleu;
  j["precisions"] = report.precisions;
  j["bp"] = report.brevity_penalty;
  j["hyp_len"] = report.hyp_length;
  j["ref_len"] = report.ref_length;
  return Dump(j);
}

std::string DiagnosticLine(size_t line, std::string_view key,
                           std::string_view message) {
  json j;
  j["line"] = line;
  j[std::string(key)] = std::string(message);
  return Dump(j);
}

}  // namespace cds::tools
