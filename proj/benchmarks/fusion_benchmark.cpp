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

#include <vector>

#include "benchmark/benchmark.h"
#include "cds/alignment.hpp"
#include "cds/eval.hpp"
#include "cds/fusion.hpp"
#include "cds/lattice_oracle.hpp"
#include "cds/scoring.hpp"
#include "cds/synth.hpp"

namespace {

struct Workload {
  std::vector<cds::TokenSeq> refs;
  std::vector<cds::CandidateSet> sets;
};

// Fixed-length synthetic sentences with k noisy candidates each.
Workload MakeWorkload(size_t length, size_t k, size_t count = 64) {
  cds::ReferenceConfig rc;
  rc.count = count;
  rc.seed = 99;
  rc.min_length = rc.max_length = length;
  Workload w;
  w.refs = cds::GenerateReferences(rc);
  cds::NoiseConfig noise;
  noise.rng_seed = 5;
  w.sets = cds::GenerateCorpus(w.refs, k, noise);
  return w;
}

void BM_CandidateSoups(benchmark::State& state) {
  const Workload w = MakeWorkload(state.range(0), state.range(1));
  const cds::SelfScorer scorer;
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cds::CandidateSoups(w.sets[i++ % w.sets.size()], scorer));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_CandidateSoups)
    ->ArgsProduct({{15, 30, 60, 120}, {1, 3, 5, 7}})
    ->Unit(benchmark::kMicrosecond);

void BM_Partition(benchmark::State& state) {
  const Workload w = MakeWorkload(state.range(0), 5);
  std::vector<std::vector<cds::TokenSeq>> inputs;
  for (const auto& set : w.sets) {
    std::vector<cds::TokenSeq> cands;
    for (const auto& c : set.candidates) {
      cands.push_back(cds::RemoveAdjacentDuplicates(c).tokens);
    }
    inputs.push_back(std::move(cands));
  }
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cds::Partition(inputs[i++ % inputs.size()]));
  }
}
BENCHMARK(BM_Partition)->Arg(30)->Arg(60)->Arg(240)->Unit(benchmark::kMicrosecond);

void BM_NpdSelect(benchmark::State& state) {
  const Workload w = MakeWorkload(60, 5);
  const cds::SelfScorer scorer;
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cds::NpdSelect(w.sets[i++ % w.sets.size()], scorer));
  }
}
BENCHMARK(BM_NpdSelect)->Unit(benchmark::kMicrosecond);

void BM_OracleBest(benchmark::State& state) {
  const Workload w = MakeWorkload(12, 3);
  const cds::SelfScorer scorer;
  std::vector<cds::SimplifiedLattice> lattices;
  for (const auto& set : w.sets) lattices.push_back(cds::BuildLattice(set, scorer));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cds::OracleBest(lattices[i++ % lattices.size()]));
  }
}
BENCHMARK(BM_OracleBest)->Unit(benchmark::kMicrosecond);

void BM_CorpusBleu(benchmark::State& state) {
  const Workload w = MakeWorkload(25, 1, state.range(0));
  std::vector<cds::TokenSeq> hyps;
  for (const auto& set : w.sets) hyps.push_back(set.candidates[0].tokens);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cds::CorpusBleu(hyps, w.refs));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CorpusBleu)->Arg(100)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
