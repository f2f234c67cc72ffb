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

// The simplified lattice: anchor nodes joined by groups of per-candidate
// segment branches. Exhaustive enumeration over it serves as a brute-force
// check of greedy fusion.

#ifndef CDS_LATTICE_ORACLE_HPP_
#define CDS_LATTICE_ORACLE_HPP_

#include <cstddef>
#include <variant>
#include <vector>

#include "cds/candidates.hpp"
#include "cds/scoring.hpp"

namespace cds {

inline constexpr size_t kDefaultPathCap = 1'000'000;

struct AnchorNode {
  Token token;
};

// One branch per distinct segment of a region. Candidates carrying identical
// segments share a branch, which keeps the best window score among them
// (lowest candidate index on ties).
struct Branch {
  TokenSeq tokens;
  double score = 0.0;
  size_t candidate = 0;  // candidate the score came from
};

struct RegionGroup {
  std::vector<TokenSeq> segments;  // per candidate, possibly empty
  std::vector<double> scores;      // per candidate window mean
  std::vector<Branch> branches;    // distinct segments, ordered by candidate
};

using LatticeElement = std::variant<AnchorNode, RegionGroup>;

struct SimplifiedLattice {
  std::vector<LatticeElement> elements;

  size_t num_anchors() const;
  size_t num_regions() const;
  // Product over regions of the number of distinct branches; saturates at
  // SIZE_MAX.
  size_t PathCount() const;
};

// Builds the lattice for `set` after deduplication and re-scoring.
SimplifiedLattice BuildLattice(const CandidateSet& set, const Scorer& scorer);
SimplifiedLattice BuildLattice(const std::vector<ScoredCandidate>& prepared);

// Every distinct token sequence obtainable by choosing one branch per region.
// Throws Error(kPathExplosion) when the branch product exceeds `cap`.
std::vector<TokenSeq> EnumeratePaths(const SimplifiedLattice& lattice,
                                     size_t cap = kDefaultPathCap);

// Brute-force search for the path maximizing the summed branch scores. Ties
// prefer lower candidate indices region by region.
TokenSeq OracleBest(const SimplifiedLattice& lattice,
                    size_t cap = kDefaultPathCap);

}  // namespace cds

#endif  // CDS_LATTICE_ORACLE_HPP_
