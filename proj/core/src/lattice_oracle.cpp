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

#include "cds/lattice_oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "cds/alignment.hpp"

namespace cds {
namespace {

double WindowMean(const std::vector<double>& scores, size_t start, size_t end) {
  const auto first = scores.begin() +
                     static_cast<std::ptrdiff_t>(start == 0 ? 0 : start - 1);
  const auto last = scores.begin() +
                    static_cast<std::ptrdiff_t>(std::min(scores.size(), end + 1));
  return std::accumulate(first, last, 0.0) /
         static_cast<double>(std::distance(first, last));
}

std::vector<const RegionGroup*> Regions(const SimplifiedLattice& lattice) {
  std::vector<const RegionGroup*> out;
  for (const auto& e : lattice.elements) {
    if (const auto* g = std::get_if<RegionGroup>(&e)) out.push_back(g);
  }
  return out;
}

void CheckCap(const SimplifiedLattice& lattice, size_t cap) {
  const size_t count = lattice.PathCount();
  if (count > cap) {
    throw Error(ErrorCode::kPathExplosion,
                "lattice has " +
                    (count == std::numeric_limits<size_t>::max()
                         ? std::string("too many")
                         : std::to_string(count)) +
                    " paths, cap is " + std::to_string(cap));
  }
}

// Calls fn(choice) for every mixed-radix choice vector over the regions.
template <typename Fn>
void ForEachChoice(const std::vector<const RegionGroup*>& regions, Fn&& fn) {
  std::vector<size_t> choice(regions.size(), 0);
  while (true) {
    fn(choice);
    size_t r = 0;
    for (; r < regions.size(); ++r) {
      if (++choice[r] < regions[r]->branches.size()) break;
      choice[r] = 0;
    }
    if (r == regions.size()) return;
  }
}

TokenSeq Assemble(const SimplifiedLattice& lattice,
                  const std::vector<size_t>& choice) {
  TokenSeq out;
  size_t r = 0;
  for (const auto& e : lattice.elements) {
    if (const auto* a = std::get_if<AnchorNode>(&e)) {
      out.push_back(a->token);
    } else {
      const auto& branch = std::get<RegionGroup>(e).branches[choice[r++]];
      out.insert(out.end(), branch.tokens.begin(), branch.tokens.end());
    }
  }
  return out;
}

}  // namespace

size_t SimplifiedLattice::num_anchors() const {
  return static_cast<size_t>(
      std::count_if(elements.begin(), elements.end(), [](const LatticeElement& e) {
        return std::holds_alternative<AnchorNode>(e);
      }));
}

size_t SimplifiedLattice::num_regions() const {
  return elements.size() - num_anchors();
}

size_t SimplifiedLattice::PathCount() const {
  size_t count = 1;
  for (const auto& e : elements) {
    const auto* g = std::get_if<RegionGroup>(&e);
    if (g == nullptr) continue;
    const size_t n = g->branches.size();
    if (n != 0 && count > std::numeric_limits<size_t>::max() / n) {
      return std::numeric_limits<size_t>::max();
    }
    count *= n;
  }
  return count;
}

SimplifiedLattice BuildLattice(const std::vector<ScoredCandidate>& prepared) {
  std::vector<TokenSeq> tokens;
  tokens.reserve(prepared.size());
  for (const auto& c : prepared) tokens.push_back(c.tokens);

  SimplifiedLattice lattice;
  for (auto& element : Partition(tokens).elements) {
    if (auto* a = std::get_if<Anchor>(&element)) {
      lattice.elements.emplace_back(AnchorNode{std::move(a->token)});
      continue;
    }
    auto& region = std::get<DivergenceRegion>(element);
    RegionGroup group;
    group.segments = std::move(region.segments);
    for (size_t j = 0; j < prepared.size(); ++j) {
      const double score =
          WindowMean(prepared[j].scores, region.start[j], region.end[j]);
      group.scores.push_back(score);
      auto same = std::find_if(group.branches.begin(), group.branches.end(),
                               [&](const Branch& b) {
                                 return b.tokens == group.segments[j];
                               });
      if (same == group.branches.end()) {
        group.branches.push_back({group.segments[j], score, j});
      } else if (score > same->score) {
        same->score = score;
        same->candidate = j;
      }
    }
    lattice.elements.emplace_back(std::move(group));
  }
  return lattice;
}

SimplifiedLattice BuildLattice(const CandidateSet& set, const Scorer& scorer) {
  return BuildLattice(PrepareCandidates(set, scorer, /*dedup=*/true));
}

std::vector<TokenSeq> EnumeratePaths(const SimplifiedLattice& lattice,
                                     size_t cap) {
  CheckCap(lattice, cap);
  const auto regions = Regions(lattice);
  std::vector<TokenSeq> paths;
  std::set<TokenSeq> seen;
  ForEachChoice(regions, [&](const std::vector<size_t>& choice) {
    TokenSeq path = Assemble(lattice, choice);
    if (seen.insert(path).second) paths.push_back(std::move(path));
  });
  return paths;
}

TokenSeq OracleBest(const SimplifiedLattice& lattice, size_t cap) {
  CheckCap(lattice, cap);
  const auto regions = Regions(lattice);

  bool have_best = false;
  std::vector<size_t> best(regions.size(), 0);
  std::vector<size_t> best_owner;
  long double best_total = 0.0L;
  std::vector<size_t> owner(regions.size());
  ForEachChoice(regions, [&](const std::vector<size_t>& choice) {
    long double total = 0.0L;
    for (size_t r = 0; r < regions.size(); ++r) {
      const Branch& b = regions[r]->branches[choice[r]];
      total += b.score;
      owner[r] = b.candidate;
    }
    if (!have_best || total > best_total ||
        (total == best_total && owner < best_owner)) {
      have_best = true;
      best = choice;
      best_owner = owner;
      best_total = total;
    }
  });
  return Assemble(lattice, best);
}

}  // namespace cds
