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

#include "artin/group_core.hpp"
#include "doctest.h"
#include "support/words.hpp"

using namespace artin;
using artin::testing::W;

TEST_CASE("group params derive the Coxeter labels") {
  GroupParams p(7);
  CHECK(p.m(Gen::a, Gen::b) == 3);
  CHECK(p.m(Gen::b, Gen::a) == 3);
  CHECK(p.m(Gen::a, Gen::c) == 2);
  CHECK(p.m(Gen::c, Gen::b) == 7);
  CHECK_THROWS_AS(GroupParams(4), std::invalid_argument);
  CHECK_NOTHROW(GroupParams(4, true));
  CHECK_THROWS_AS(GroupParams(2, true), std::invalid_argument);
}

TEST_CASE("letters") {
  const Letter x(Gen::b, true);
  CHECK(x.inverse().inverse() == x);
  CHECK(x.inverse().name() == x.name());
  CHECK(x.symbol() == 'B');
  for (std::uint8_t c = 0; c < 6; ++c) CHECK(Letter::from_code(c).code() == c);
  CHECK(commute(kA, kC.inverse()));
  CHECK_FALSE(commute(kA, kB));
  CHECK_FALSE(commute(kB, kC));
}

TEST_CASE("make_alternating") {
  CHECK(make_alternating(kB, kC, 5, Anchor::start) == W("bcbcb"));
  CHECK(make_alternating(kA, kB, 0, Anchor::start).empty());
  CHECK(make_alternating(kC, kB, 4, Anchor::end) == W("cbcb"));
  CHECK(make_alternating(kC, kB, 5, Anchor::end) == W("bcbcb"));
  CHECK_THROWS_AS(make_alternating(kA, kA.inverse(), 3, Anchor::start), std::invalid_argument);
  // Reversal swaps the anchor.
  for (std::size_t len = 0; len <= 12; ++len) {
    Word s = make_alternating(kB, kC, len, Anchor::start);
    std::vector<Letter> rev(s.begin(), s.end());
    std::reverse(rev.begin(), rev.end());
    CHECK(Word(rev) == make_alternating(kC, kB, len, Anchor::end));
  }
}

TEST_CASE("free reduction") {
  CHECK(free_reduce(W("abB")) == W("a"));
  CHECK(free_reduce(W("aA")).empty());
  CHECK(free_reduce(W("abBAc")) == W("c"));
  CHECK(is_freely_reduced(W("abAB")));
  CHECK_FALSE(is_freely_reduced(W("acCb")));
  std::mt19937_64 rng(11);
  for (int it = 0; it < 2000; ++it) {
    const Word w = testing::random_word(rng, rng() % 21);
    const Word r = free_reduce(w);
    CHECK(free_reduce(r) == r);
    CHECK(is_freely_reduced(r));
    CHECK((w.size() - r.size()) % 2 == 0);
  }
}

TEST_CASE("invert and exponent sums") {
  CHECK(invert(W("ab")) == W("BA"));
  CHECK(invert(Word{}).empty());
  CHECK(invert(W("aBc")) == W("CbA"));
  CHECK(exponent_sum(W("abAAc"), Gen::a) == -1);
  CHECK(exponent_sum(W("abAAc"), Gen::b) == 1);
}

TEST_CASE("parse and format") {
  CHECK(parse_word("a^3 B") == W("aaaB"));
  CHECK(parse_word("").empty());
  CHECK(parse_word("c^-2 a") == W("CCa"));
  CHECK(format_word(parse_word(" b c\tB ")) == "bcB");
  try {
    parse_word("abd");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(parse_word("a^"), ParseError);
  CHECK_THROWS_AS(parse_word("a^-"), ParseError);
  CHECK_THROWS_AS(parse_word("^2"), ParseError);
}
