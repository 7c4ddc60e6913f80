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


#include <random>

#include "artin/oracle.hpp"
#include "artin/reducer.hpp"
#include "doctest.h"
#include "support/garside.hpp"
#include "support/words.hpp"

using namespace artin;
using artin::testing::GarsideOracle;
using artin::testing::W;

TEST_CASE("push_letter") {
  GroupParams p(5);
  CHECK(push_letter(Word{}, kA, p).word == W("a"));
  CHECK(push_letter(W("a"), kA.inverse(), p).word.empty());
  const auto r = push_letter(W("bcbcabacbc"), kB.inverse(), p);
  CHECK(r.word == W("cbcbabcbc"));
  REQUIRE(r.rrs);
  CHECK(r.rrs->m() == 2);
}

TEST_CASE("reduce_to_geodesic") {
  GroupParams p(5);
  CHECK(reduce_to_geodesic(W("aA"), p).word.empty());
  CHECK(reduce_to_geodesic(W("bcbcabacbcB"), p).word == W("cbcbabcbc"));
  CHECK(reduce_to_geodesic(W("abaB"), p).word == W("ba"));
  CHECK(geodesic_length(W("abaB"), p) == 2);
  CHECK(geodesic_length(W("bcbcabacbcB"), p) == 9);
  CHECK(geodesic_length(Word{}, p) == 0);
  CHECK(is_geodesic(W("bcbcaba"), p));
  CHECK(is_geodesic(W("abab"), p));
  CHECK_FALSE(is_geodesic(W("abaB"), p));
}

TEST_CASE("equal_in_g") {
  GroupParams p(5);
  CHECK(equal_in_g(W("aba"), W("bab"), p));
  CHECK(equal_in_g(W("ac"), W("ca"), p));
  CHECK(equal_in_g(W("bcbcb"), W("cbcbc"), p));
  CHECK_FALSE(equal_in_g(W("a"), W("b"), p));
  CHECK_FALSE(equal_in_g(W("bcbc"), W("cbcb"), p));
  GroupParams p6(6);
  CHECK(equal_in_g(W("bcbcbc"), W("cbcbcb"), p6));
}

TEST_CASE("reduction agrees with independent oracles") {
  std::mt19937_64 rng(53);
  const auto g = GarsideOracle::full(5);
  for (int n : {5, 6}) {
    GroupParams p(n);
    for (int it = 0; it < 300; ++it) {
      const Word w = it % 2 ? testing::random_word(rng, rng() % 13)
                            : testing::random_positive_heavy(rng, rng() % 13);
      const Word r = reduce_to_geodesic(w, p).word;
      CHECK_MESSAGE(r.size() == oracle_geodesic_length(w, {}, p).length, format_word(w));
      CHECK(oracle_equal(w, r, {}, p).equal);
      if (n == 5) CHECK(g.equal(w, r));
      CHECK(reduce_to_geodesic(r, p).word == r);
    }
  }
}

TEST_CASE("every reduced prefix admits no RRS") {
  GroupParams p(5);
  std::mt19937_64 rng(59);
  for (int it = 0; it < 150; ++it) {
    const Word w = testing::random_positive_heavy(rng, 14);
    Reducer red(p);
    for (Letter l : w) {
      red.push(l);
      if (red.letters().size() <= kEnumerateMaxLength) {
        CHECK(enumerate_all_rrs(red.letters(), p).empty());
      }
    }
  }
}

TEST_CASE("relator pushes give equal lengths and elements") {
  std::mt19937_64 rng(61);
  for (int n : {5, 6}) {
    GroupParams p(n);
    const Word bc = make_alternating(kB, kC, static_cast<std::size_t>(n), Anchor::start);
    const Word cb = make_alternating(kC, kB, static_cast<std::size_t>(n), Anchor::start);
    for (int it = 0; it < 200; ++it) {
      const Word w = reduce_to_geodesic(testing::random_word(rng, 8), p).word;
      for (const auto& [l, r] : {std::pair{W("ac"), W("ca")}, std::pair{W("aba"), W("bab")},
                                 std::pair{bc, cb}}) {
        const Word x = reduce_to_geodesic(w + l, p).word;
        const Word y = reduce_to_geodesic(w + r, p).word;
        CHECK(x.size() == y.size());
        CHECK(oracle_equal(x, y, {}, p).equal);
      }
    }
  }
}
