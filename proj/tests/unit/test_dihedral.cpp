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

#include "artin/dihedral.hpp"
#include "artin/oracle.hpp"
#include "doctest.h"
#include "support/garside.hpp"
#include "support/words.hpp"

using namespace artin;
using artin::testing::GarsideOracle;
using artin::testing::W;

namespace {

// Longest alternating run of one sign, by brute force over substrings.
long brute_alternation(WordView w, bool positive) {
  long best = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i; j < w.size(); ++j) {
      if (w[j].positive() != positive) break;
      if (j > i && w[j].name() == w[j - 1].name()) break;
      best = std::max<long>(best, static_cast<long>(j - i + 1));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("profile") {
  GroupParams p(5);
  auto pr = profile(W("aba"), kPairAB, p);
  CHECK(pr.p == 3);
  CHECK(pr.n == 0);
  pr = profile(W("abbbA"), kPairAB, p);
  CHECK(pr.p == 2);
  CHECK(pr.n == 1);
  pr = profile(Word{}, kPairAB, p);
  CHECK(pr.p == 0);
  CHECK(pr.n == 0);
  pr = profile(W("bcbcbcb"), kPairBC, p);
  CHECK(pr.p == 5);
  CHECK(pr.raw_p == 7);
  CHECK_THROWS_AS(profile(W("ac"), kPairAB, p), std::invalid_argument);

  std::mt19937_64 rng(3);
  for (int it = 0; it < 3000; ++it) {
    std::vector<Letter> v;
    const std::size_t len = rng() % 13;
    for (std::size_t i = 0; i < len; ++i) v.push_back(Letter(rng() % 2 ? Gen::b : Gen::c, rng() % 2));
    const auto q = profile(v, kPairBC, p);
    CHECK(q.raw_p == brute_alternation(v, true));
    CHECK(q.raw_n == brute_alternation(v, false));
    CHECK(q.p == std::min<long>(5, q.raw_p));
  }
}

TEST_CASE("2-generator geodesics agree with the BFS oracle") {
  GroupParams p(5);
  CHECK(is_geodesic_2gen(W("aba"), kPairAB, p));
  // abab = aaba: the alternation is capped at m before comparing.
  CHECK(is_geodesic_2gen(W("abab"), kPairAB, p));
  CHECK_FALSE(is_geodesic_2gen(W("abaB"), kPairAB, p));
  CHECK(is_geodesic_2gen(Word{}, kPairAB, p));
  for (std::size_t len = 0; len <= 7; ++len) {
    testing::for_each_reduced_word({Gen::a, Gen::b}, len, [&](WordView w) {
      const bool geo = oracle_geodesic_length(w, {}, p).length == w.size();
      CHECK_MESSAGE(is_geodesic_2gen(w, kPairAB, p) == geo, format_word(w));
    });
  }
}

TEST_CASE("critical 2-generator words and their tau") {
  GroupParams p5(5);
  auto wit = is_critical_2gen(W("abbbA"), kPairAB, p5);
  REQUIRE(wit);
  CHECK(wit->shape == TwoGenShape::unsigned_pos_neg);
  CHECK(tau_2gen(*wit, p5) == W("Baaab"));
  CHECK_FALSE(is_critical_2gen(W("ab"), kPairAB, p5));

  wit = is_critical_2gen(W("aba"), kPairAB, p5);
  REQUIRE(wit);
  CHECK(tau_2gen(*wit, p5) == W("bab"));
  wit = is_critical_2gen(W("bcbcb"), kPairBC, p5);
  REQUIRE(wit);
  CHECK(tau_2gen(*wit, p5) == W("cbcbc"));
  wit = is_critical_2gen(W("baB"), kPairAB, p5);
  REQUIRE(wit);
  CHECK(tau_2gen(*wit, p5) == W("Aba"));
  wit = is_critical_2gen(W("abaab"), kPairAB, p5);
  REQUIRE(wit);
  CHECK(tau_2gen(*wit, p5) == W("baaba"));

  // The leading run of bc^2bcBC is 2 while its positive alternation is 3, so
  // no shape applies when m(b,c) = 5.
  CHECK_FALSE(is_critical_2gen(W("bccbcBC"), kPairBC, p5));
}

TEST_CASE("tau is an involution that preserves the element") {
  for (int n : {5, 6}) {
    GroupParams p(n);
    for (GenPair pair : {kPairAB, kPairBC}) {
      const auto g = GarsideOracle::pair(pair.lo(), pair.hi(), pair.m(p));
      std::size_t count = 0;
      for (std::size_t len = 1; len <= 9; ++len) {
        testing::for_each_reduced_word({pair.lo(), pair.hi()}, len, [&](WordView u) {
          const auto wit = is_critical_2gen(u, pair, p);
          if (!wit) return;
          ++count;
          const Word t = tau_2gen(*wit, p);
          REQUIRE(t.size() == u.size());
          CHECK(t.front().name() != u.front().name());
          CHECK(t.back().name() != u.back().name());
          CHECK(g.equal(u, t));
          const auto back = is_critical_2gen(t, pair, p);
          REQUIRE(back);
          CHECK(tau_2gen(*back, p) == Word(u));
        });
      }
      CHECK(count > 0);
    }
  }
}

TEST_CASE("delta") {
  GroupParams p5(5);
  GroupParams p6(6);
  CHECK(delta(kA, kPairAB, p5) == kB);
  CHECK(delta(kA, kPairAC, p5) == kA);
  CHECK(delta(kB.inverse(), kPairBC, p6) == kB.inverse());
  CHECK(delta(kB.inverse(), kPairBC, p5) == kC.inverse());
  CHECK(delta_word(W("aB"), kPairAB, p5) == W("bA"));
}

TEST_CASE("shortest critical suffix matches a brute-force scan") {
  GroupParams p(5);
  CHECK(shortest_critical_suffix_2gen(W("caba"), kPairAB, p, nullptr) == 1u);
  CHECK_FALSE(shortest_critical_suffix_2gen(W("ab"), kPairAB, p, nullptr));
  CHECK(shortest_critical_suffix_2gen(W("aabbbA"), kPairAB, p, nullptr) == 1u);

  std::mt19937_64 rng(5);
  for (int it = 0; it < 4000; ++it) {
    const GenPair pair = it % 2 ? kPairAB : kPairBC;
    std::vector<Letter> v;
    const std::size_t len = rng() % 14;
    for (std::size_t i = 0; i < len; ++i) {
      v.push_back(Letter(rng() % 2 ? pair.lo() : pair.hi(), rng() % 4 == 0));
    }
    const WordView w(v);
    std::optional<std::size_t> expect;
    for (std::size_t s = w.size(); s-- > 0;) {
      if (!is_freely_reduced(w.subspan(s))) break;
      if (is_critical_2gen(w.subspan(s), pair, p)) {
        expect = s;
        break;
      }
    }
    CHECK_MESSAGE(shortest_critical_suffix_2gen(w, pair, p, nullptr) == expect, format_word(w));
  }
}

TEST_CASE("to_bab_form") {
  auto f = to_bab_form(W("aba"));
  REQUIRE(f);
  CHECK(f->word() == W("bab"));
  f = to_bab_form(W("aaba"));
  REQUIRE(f);
  CHECK((f->i == 1 && f->j == 1 && f->k == 2));
  CHECK_FALSE(to_bab_form(W("aabba")));
  f = to_bab_form(W("abA"));
  REQUIRE(f);
  CHECK(f->word() == W("Bab"));
  CHECK_THROWS_AS(to_bab_form(W("ab")), std::invalid_argument);

  // Against brute force: some b^i a^j b^k of the same length is equal in <a,b>.
  GroupParams p(5);
  const auto g = GarsideOracle::pair(Gen::a, Gen::b, 3);
  for (std::size_t len = 3; len <= 9; ++len) {
    testing::for_each_reduced_word({Gen::a, Gen::b}, len, [&](WordView v) {
      if (v.front().name() != Gen::a || v.back().name() != Gen::a) return;
      if (!is_geodesic_2gen(v, kPairAB, p)) return;
      bool brute = false;
      const long L = static_cast<long>(len);
      for (long i = -L; i <= L && !brute; ++i) {
        for (long k = -L; k <= L && !brute; ++k) {
          const long rest = L - std::labs(i) - std::labs(k);
          if (i == 0 || k == 0 || rest <= 0) continue;
          for (long j : {rest, -rest}) {
            BabForm cand{i, j, k, {}};
            if (g.equal(v, cand.word())) brute = true;
          }
        }
      }
      const auto got = to_bab_form(v);
      CHECK_MESSAGE(got.has_value() == brute, format_word(v));
      if (got) {
        CHECK(g.equal(v, got->word()));
        CHECK(got->word().size() == len);
      }
    });
  }
}
