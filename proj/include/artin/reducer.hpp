// Copyright 2026 The artin-geodesics Authors
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

// Incremental geodesic reduction. The reduced prefix is kept geodesic; each
// new letter either extends it or triggers one optimal RRS, which shortens
// prefix.letter by two.

#ifndef ARTIN_REDUCER_HPP_
#define ARTIN_REDUCER_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "artin/group_core.hpp"
#include "artin/rrs.hpp"

namespace artin {

struct PushStep {
  std::size_t index = 0;  // position of the pushed letter in the input
  Letter letter;
  std::optional<std::string> rrs;  // describe_rrs of the applied sequence
  std::vector<TraceEvent> events;
};

struct ReductionStats {
  std::uint64_t letters_visited = 0;  // summed over every find_optimal_rrs call
  std::uint64_t max_push_visited = 0;
  std::uint64_t max_push_prefix = 0;  // |w| at the push attaining max_push_visited
  double max_push_ratio = 0;          // max over pushes of visited / (|w| + 1)
  std::size_t rrs_applied = 0;
};

class Reducer {
 public:
  explicit Reducer(const GroupParams& params) : params_(params) {}

  /// Appends x to the current geodesic. Returns true if an RRS was applied.
  bool push(Letter x, PushStep* step = nullptr);

  const std::vector<Letter>& letters() const { return word_; }
  Word word() const { return Word(word_); }
  const ReductionStats& stats() const { return stats_; }
  void reset() {
    word_.clear();
    stats_ = {};
  }

 private:
  GroupParams params_;
  std::vector<Letter> word_;
  ReductionStats stats_;
};

struct PushResult {
  Word word;
  std::optional<Rrs> rrs;
  std::vector<TraceEvent> trace;
};

/// w must be geodesic.
PushResult push_letter(WordView w, Letter x, const GroupParams& params);

struct Reduction {
  Word word;
  std::vector<PushStep> steps;  // only pushes that applied an RRS; empty unless traced
  ReductionStats stats;
};

Reduction reduce_to_geodesic(WordView w, const GroupParams& params, bool trace = false);
bool equal_in_g(WordView w1, WordView w2, const GroupParams& params);
std::size_t geodesic_length(WordView w, const GroupParams& params);
bool is_geodesic(WordView w, const GroupParams& params);

}  // namespace artin

#endif  // ARTIN_REDUCER_HPP_
