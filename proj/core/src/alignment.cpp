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

#include "cds/alignment.hpp"

#include <algorithm>
#include <string_view>
#include <unordered_map>

namespace cds {

TokenSeq AlignedPartition::AnchorTokens() const {
  TokenSeq out;
  for (const auto& e : elements) {
    if (const auto* a = std::get_if<Anchor>(&e)) out.push_back(a->token);
  }
  return out;
}

size_t AlignedPartition::num_anchors() const {
  return static_cast<size_t>(std::count_if(
      elements.begin(), elements.end(),
      [](const PartitionElement& e) { return std::holds_alternative<Anchor>(e); }));
}

size_t AlignedPartition::num_regions() const {
  return elements.size() - num_anchors();
}

std::optional<Anchor> FindNextAnchor(std::span<const TokenSeq> candidates,
                                     const PointerVector& start) {
  const size_t k = candidates.size();
  if (k == 0 || start.size() != k) return std::nullopt;
  for (size_t j = 0; j < k; ++j) {
    if (start[j] >= candidates[j].size()) return std::nullopt;
  }

  // Earliest position of every token seen so far, per candidate window.
  std::vector<std::unordered_map<std::string_view, size_t>> seen(k);
  PointerVector frontier = start;
  std::vector<std::string_view> fresh;
  fresh.reserve(k);

  while (true) {
    fresh.clear();
    bool advanced = false;
    for (size_t j = 0; j < k; ++j) {
      if (frontier[j] >= candidates[j].size()) continue;
      const std::string_view tok = candidates[j][frontier[j]];
      if (seen[j].try_emplace(tok, frontier[j]).second) fresh.push_back(tok);
      ++frontier[j];
      advanced = true;
    }
    if (!advanced) return std::nullopt;

    // Only a token that entered some window this round can have just become
    // common to all windows.
    std::optional<std::string_view> best;
    size_t best_total = 0;
    size_t best_first = 0;
    for (const std::string_view tok : fresh) {
      size_t total = 0;
      bool everywhere = true;
      for (size_t j = 0; j < k; ++j) {
        const auto it = seen[j].find(tok);
        if (it == seen[j].end()) {
          everywhere = false;
          break;
        }
        total += it->second - start[j];
      }
      if (!everywhere) continue;
      const size_t first = seen[0].at(tok);
      if (!best || total < best_total ||
          (total == best_total && first < best_first)) {
        best = tok;
        best_total = total;
        best_first = first;
      }
    }
    if (best) {
      Anchor anchor;
      anchor.token = Token(*best);
      anchor.positions.resize(k);
      for (size_t j = 0; j < k; ++j) anchor.positions[j] = seen[j].at(*best);
      return anchor;
    }
  }
}

AlignedPartition Partition(std::span<const TokenSeq> candidates) {
  AlignedPartition out;
  const size_t k = candidates.size();
  if (k == 0) return out;

  PointerVector lengths(k);
  for (size_t j = 0; j < k; ++j) lengths[j] = candidates[j].size();
  PointerVector ptr(k, 0);

  auto remaining = [&] {
    for (size_t j = 0; j < k; ++j) {
      if (ptr[j] < lengths[j]) return true;
    }
    return false;
  };
  auto all_equal = [&] {
    for (size_t j = 0; j < k; ++j) {
      if (ptr[j] >= lengths[j]) return false;
      if (candidates[j][ptr[j]] != candidates[0][ptr[0]]) return false;
    }
    return true;
  };

  while (remaining()) {
    if (all_equal()) {
      out.elements.emplace_back(Anchor{candidates[0][ptr[0]], ptr});
      for (size_t& p : ptr) ++p;
      continue;
    }
    const std::optional<Anchor> next = FindNextAnchor(candidates, ptr);
    DivergenceRegion region;
    region.start = ptr;
    region.end = next ? next->positions : lengths;
    region.segments.resize(k);
    for (size_t j = 0; j < k; ++j) {
      const auto first = candidates[j].begin();
      region.segments[j].assign(first + static_cast<std::ptrdiff_t>(region.start[j]),
                                first + static_cast<std::ptrdiff_t>(region.end[j]));
    }
    ptr = region.end;
    out.elements.emplace_back(std::move(region));
  }
  return out;
}

}  // namespace cds
