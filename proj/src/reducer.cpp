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

#include "artin/reducer.hpp"

#include <algorithm>

namespace artin {

bool Reducer::push(Letter x, PushStep* step) {
  SearchStats search;
  const auto rrs = find_optimal_rrs(word_, x, params_, &search);
  stats_.letters_visited += search.letters_visited;
  if (search.letters_visited > stats_.max_push_visited) {
    stats_.max_push_visited = search.letters_visited;
    stats_.max_push_prefix = word_.size();
  }
  stats_.max_push_ratio =
      std::max(stats_.max_push_ratio, static_cast<double>(search.letters_visited) /
                                          static_cast<double>(word_.size() + 1));
  if (step) step->letter = x;
  word_.push_back(x);
  if (!rrs) return false;
  // rrs->host equals word_ here.
  apply_rrs_in_place(word_, *rrs, params_, step ? &step->events : nullptr);
  if (step) step->rrs = describe_rrs(*rrs);
  ++stats_.rrs_applied;
  return true;
}

PushResult push_letter(WordView w, Letter x, const GroupParams& params) {
  PushResult out;
  out.rrs = find_optimal_rrs(w, x, params);
  if (!out.rrs) {
    out.word = concat({w, WordView(&x, 1)});
    return out;
  }
  auto applied = apply_rrs(*out.rrs, params);
  out.word = std::move(applied.word);
  out.trace = std::move(applied.trace);
  return out;
}

Reduction reduce_to_geodesic(WordView w, const GroupParams& params, bool trace) {
  Reducer reducer(params);
  Reduction out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!trace) {
      reducer.push(w[i]);
      continue;
    }
    PushStep step;
    step.index = i;
    if (reducer.push(w[i], &step)) out.steps.push_back(std::move(step));
  }
  out.word = reducer.word();
  out.stats = reducer.stats();
  return out;
}

bool equal_in_g(WordView w1, WordView w2, const GroupParams& params) {
  const Word inv = invert(w2);
  return reduce_to_geodesic(concat({w1, inv.view()}), params).word.empty();
}

std::size_t geodesic_length(WordView w, const GroupParams& params) {
  return reduce_to_geodesic(w, params).word.size();
}

bool is_geodesic(WordView w, const GroupParams& params) {
  return geodesic_length(w, params) == w.size();
}

}  // namespace artin
