// Copyright 2026 The kscheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kscheck/oracles.h"

#include <algorithm>
#include <array>
#include <bit>

#include "kscheck/error.h"
#include "kscheck/inequality.h"

namespace kscheck::oracle {
namespace {

// Triad value by number of -1 entries, straight from the defining polynomial.
int triad_value(int minus_count) {
  int a[3];
  for (int i = 0; i < 3; ++i) a[i] = i < minus_count ? -1 : 1;
  return -(1 + a[0] * a[1] + a[1] * a[2] + a[2] * a[0] + a[0] * a[1] * a[2]);
}

}  // namespace

int exhaustive_max_beta(std::span<const Frame> triads) {
  std::vector<Direction> rays;
  for (const auto& f : triads) {
    if (f.dim() != 3) throw Error("exhaustive_max_beta: triads only");
    rays.insert(rays.end(), f.members().begin(), f.members().end());
  }
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  const std::size_t k = rays.size();
  if (k > 32) throw Error("exhaustive_max_beta: too many rays");

  // Triads containing each ray. Rays touching fewer triads take the low
  // Gray-code bits, which flip most often.
  std::vector<std::vector<std::uint32_t>> incident(k);
  for (std::size_t t = 0; t < triads.size(); ++t) {
    for (const auto& v : triads[t].members()) {
      const auto r = std::lower_bound(rays.begin(), rays.end(), v) - rays.begin();
      incident[r].push_back(static_cast<std::uint32_t>(t));
    }
  }
  std::stable_sort(incident.begin(), incident.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<std::uint32_t> offsets{0};
  std::vector<std::uint32_t> flat;
  for (const auto& l : incident) {
    flat.insert(flat.end(), l.begin(), l.end());
    offsets.push_back(static_cast<std::uint32_t>(flat.size()));
  }

  // value[c] is the triad value with c entries at -1.
  std::array<int, 4> value{};
  for (int c = 0; c < 4; ++c) value[c] = triad_value(c);

  std::vector<std::uint8_t> minus(triads.size(), 0);
  std::vector<std::uint8_t> negative(k, 0);
  int total = value[0] * static_cast<int>(triads.size());
  int best = total;
  const std::uint64_t steps = std::uint64_t{1} << k;
  for (std::uint64_t i = 1; i < steps; ++i) {
    const int r = std::countr_zero(i);
    const int delta = negative[r] ? -1 : 1;
    negative[r] ^= 1;
    for (std::uint32_t e = offsets[r]; e < offsets[r + 1]; ++e) {
      const std::uint32_t t = flat[e];
      const int before = minus[t];
      minus[t] = static_cast<std::uint8_t>(before + delta);
      total += value[before + delta] - value[before];
    }
    best = std::max(best, total);
  }
  return best;
}

bool exhaustive_colorable(const VectorSet& s, std::span<const Frame> frames,
                          ColoringRule rule) {
  const std::size_t n = s.size();
  if (n > 24) throw Error("exhaustive_colorable: set too large");
  const auto members = s.members();
  std::vector<std::vector<std::size_t>> frame_idx;
  for (const auto& f : frames) {
    std::vector<std::size_t> idx;
    for (const auto& v : f.members()) {
      auto it = std::find(members.begin(), members.end(), v);
      if (it == members.end()) throw Error("frame member not in set");
      idx.push_back(static_cast<std::size_t>(it - members.begin()));
    }
    frame_idx.push_back(std::move(idx));
  }
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    auto on = [&](std::size_t i) { return (bits >> i) & 1; };
    bool ok = true;
    for (const auto& f : frame_idx) {
      std::size_t ones = 0;
      for (std::size_t i : f) ones += on(i);
      if (ones != 1) {
        ok = false;
        break;
      }
    }
    if (ok && rule == ColoringRule::kFramesAndOrthogonality) {
      for (std::size_t i = 0; i < n && ok; ++i) {
        for (std::size_t j = i + 1; j < n && ok; ++j) {
          if (on(i) && on(j) && inner(members[i], members[j]) == 0) ok = false;
        }
      }
    }
    if (ok) return true;
  }
  return false;
}

SubcollectionAgreement compare_bound_on_subcollections(
    std::span<const Frame> triads, std::size_t max_rays) {
  if (triads.size() > 30) throw Error("too many triads to enumerate subsets");
  SubcollectionAgreement out;
  std::vector<Frame> pick;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << triads.size());
       ++mask) {
    pick.clear();
    std::vector<Direction> rays;
    for (std::size_t t = 0; t < triads.size(); ++t) {
      if ((mask >> t) & 1) {
        pick.push_back(triads[t]);
        rays.insert(rays.end(), triads[t].members().begin(),
                    triads[t].members().end());
      }
    }
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    if (rays.size() > max_rays) continue;

    ++out.subcollections_checked;
    out.assignments_enumerated += std::uint64_t{1} << rays.size();
    if (noncontextual_bound(pick).value != exhaustive_max_beta(pick)) {
      ++out.disagreements;
    }
  }
  return out;
}

}  // namespace kscheck::oracle
