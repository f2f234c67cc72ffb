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

// Common-subsequence alignment of k candidate token sequences.
//
// The candidates are traversed with one pointer each. Where all pointers see
// the same token an Anchor is emitted. Where they disagree, every frontier is
// expanded one token per round until some token has been seen by all
// candidates; the spans skipped over form a DivergenceRegion.

#ifndef CDS_ALIGNMENT_HPP_
#define CDS_ALIGNMENT_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "cds/candidates.hpp"

namespace cds {

// One index per candidate; a value equal to the candidate length means the
// candidate is exhausted.
using PointerVector = std::vector<size_t>;

struct Anchor {
  Token token;
  PointerVector positions;

  bool operator==(const Anchor&) const = default;
};

struct DivergenceRegion {
  PointerVector start;  // first index past the previous anchor
  PointerVector end;    // index of the next anchor, or the candidate length
  std::vector<TokenSeq> segments;  // tokens[start[j], end[j]) per candidate

  bool operator==(const DivergenceRegion&) const = default;
};

using PartitionElement = std::variant<Anchor, DivergenceRegion>;

struct AlignedPartition {
  std::vector<PartitionElement> elements;

  TokenSeq AnchorTokens() const;
  size_t num_anchors() const;
  size_t num_regions() const;
};

// Lockstep frontier search for the next token shared by every candidate,
// starting at `start`. Each candidate's window grows by one token per round
// (exhausted candidates stop growing). The first round in which some token is
// present in all windows decides the anchor; among several such tokens the
// one with the smallest total advance wins, then the one earliest in
// candidate 0. Positions are the earliest occurrences inside each window.
// Returns nullopt when the candidates run out without a shared token.
std::optional<Anchor> FindNextAnchor(std::span<const TokenSeq> candidates,
                                     const PointerVector& start);

// Splits the candidates into alternating anchors and divergence regions.
// Candidates are expected to be free of adjacent duplicates.
AlignedPartition Partition(std::span<const TokenSeq> candidates);

}  // namespace cds

#endif  // CDS_ALIGNMENT_HPP_
