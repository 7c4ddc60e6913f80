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

#include "artin/abc_critical.hpp"
#include "artin/p2g.hpp"
#include "doctest.h"
#include "support/garside.hpp"
#include "support/words.hpp"

using namespace artin;
using artin::testing::GarsideOracle;
using artin::testing::W;

namespace {

template <typename Pred>
std::optional<std::size_t> brute_shortest_suffix(WordView w, Pred critical) {
  for (std::size_t s = w.size(); s-- > 0;) {
    if (critical(w.subspan(s))) return s;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("P2G decomposition") {
  GroupParams p(5);
  auto d = decompose_p2g(W("acbbbCA"), P2GType::ab, p);
  REQUIRE(d);
  CHECK(Word(d->u_p()) == W("ac"));
  CHECK(Word(d->u_q()) == W("bbb"));
  CHECK(Word(d->u_s()) == W("CA"));
  CHECK(d->alpha == 1);
  CHECK(d->beta == -1);
  CHECK(d->hat == W("abbbA"));

  d = decompose_p2g(W("bccbcBaaC"), P2GType::bc, p);
  REQUIRE(d);
  CHECK(d->alpha == 0);
  CHECK(d->beta == 2);
  CHECK(d->hat == W("bccbcBC"));
  CHECK(concat({d->u_p(), d->u_q(), d->u_s()}) == d->word);

  CHECK_FALSE(decompose_p2g(W("ca"), P2GType::ab, p));
  CHECK_FALSE(decompose_p2g(W("aA"), P2GType::ab, p));
}

TEST_CASE("P2G criticality and tau") {
  GroupParams p5(5);
  auto c = is_p2g_critical(W("acbbbCA"), P2GType::ab, p5);
  REQUIRE(c);
  CHECK(tau_p2g(*c, p5) == W("cBaaabC"));
  c = is_p2g_critical(W("abbbA"), P2GType::ab, p5);
  REQUIRE(c);
  CHECK(tau_p2g(*c, p5) == W("Baaab"));
  c = is_p2g_critical(W("aba"), P2GType::ab, p5);
  REQUIRE(c);
  CHECK(tau_p2g(*c, p5) == W("bab"));
  c = is_p2g_critical(W("acbCA"), P2GType::ab, p5);
  REQUIRE(c);
  CHECK(tau_p2g(*c, p5) == W("cBabC"));
  CHECK_FALSE(is_p2g_critical(W("acbabCA"), P2GType::ab, p5));
  // Mixed z signs in u_p.
  CHECK_FALSE(is_p2g_critical(W("acaCba"), P2GType::ab, p5));

  CHECK_FALSE(is_p2g_critical(W("bccbcBaaC"), P2GType::bc, p5));
}

TEST_CASE("P2G specialises to the 2-generator notions") {
  GroupParams p(6);
  for (P2GType t : {P2GType::ab, P2GType::bc}) {
    const GenPair pair = p2g_pair(t);
    for (std::size_t len = 1; len <= 8; ++len) {
      testing::for_each_reduced_word({pair.lo(), pair.hi()}, len, [&](WordView u) {
        const auto a = is_p2g_critical(u, t, p);
        const auto b = is_critical_2gen(u, pair, p);
        REQUIRE(a.has_value() == b.has_value());
        if (a) CHECK(tau_p2g(*a, p) == tau_2gen(*b, p));
      });
    }
  }
}

TEST_CASE("P2G shortest suffix matches brute force") {
  GroupParams p(5);
  CHECK(shortest_p2g_critical_suffix(W("bacbbbCA"), P2GType::ab, p) == 1u);
  CHECK_FALSE(shortest_p2g_critical_suffix(W("ab"), P2GType::ab, p));
  CHECK(shortest_p2g_critical_suffix(W("caba"), P2GType::ab, p) == 1u);

  std::mt19937_64 rng(17);
  for (int it = 0; it < 6000; ++it) {
    const P2GType t = it % 2 ? P2GType::ab : P2GType::bc;
    const Word w = free_reduce(testing::random_positive_heavy(rng, rng() % 15));
    const auto expect = brute_shortest_suffix(
        w, [&](WordView s) { return is_p2g_critical(s, t, p).has_value(); });
    CHECK_MESSAGE(shortest_p2g_critical_suffix(w, t, p) == expect, format_word(w));
  }
}

TEST_CASE("P2G tau facts on fuzzed witnesses") {
  GroupParams p(5);
  const auto g = GarsideOracle::full(5);
  std::mt19937_64 rng(23);
  std::size_t seen = 0;
  for (int it = 0; it < 20000; ++it) {
    const Word w = free_reduce(testing::random_positive_heavy(rng, 3 + rng() % 10));
    for (P2GType t : {P2GType::ab, P2GType::bc}) {
      const auto c = is_p2g_critical(w, t, p);
      if (!c) continue;
      ++seen;
      const Word tau = tau_p2g(*c, p);
      CHECK(tau.size() == w.size());
      CHECK(g.equal(w, tau));
      CHECK(tau.front().name() != w.front().name());
      CHECK(tau.back().name() != w.back().name());
      CHECK((tau.front().name() != p2g_z(t)) == (c->alpha == 0));
      CHECK((tau.back().name() != p2g_z(t)) == (c->beta == 0));
    }
  }
  CHECK(seen > 100);
}

TEST_CASE("abc-critical words") {
  GroupParams p(5);
  auto c = is_abc_critical(W("bcbcaba"), p);
  REQUIRE(c);
  CHECK(c->bab.i == 1);
  CHECK(c->bab.j == 1);
  CHECK(c->bab.k == 1);
  CHECK(c->alpha == 0);
  CHECK(c->beta == 0);
  CHECK(c->u_sharp == W("bcbcb"));
  const Word t = tau_abc(*c, p);
  CHECK(t == W("cbcbacb"));
  CHECK(t.size() == 7);
  CHECK(GarsideOracle::full(5).equal(W("bcbcaba"), t));

  CHECK_FALSE(is_abc_critical(W("aba"), p));
  CHECK_FALSE(is_abc_critical(W("bcbcab"), p));

  CHECK(shortest_abc_critical_suffix(W("abcbcaba"), p) == 1u);
  CHECK(shortest_abc_critical_suffix(W("bcbcaba"), p) == 0u);
  CHECK_FALSE(shortest_abc_critical_suffix(W("bca"), p));
}

TEST_CASE("abc shortest suffix matches brute force") {
  for (int n : {5, 6}) {
    GroupParams p(n);
    std::mt19937_64 rng(29 + n);
    std::size_t hits = 0;
    for (int it = 0; it < 6000; ++it) {
      Word w = free_reduce(testing::random_positive_heavy(rng, rng() % 16));
      // Bias toward the shape (b,c)-run then an {a,b} tail ending in a.
      if (it % 2) w = free_reduce(w + make_alternating(kB, kC, n - 1, Anchor::start) + W("aba"));
      const auto expect = brute_shortest_suffix(
          w, [&](WordView s) { return is_abc_critical(s, p).has_value(); });
      hits += expect.has_value();
      CHECK_MESSAGE(shortest_abc_critical_suffix(w, p) == expect, format_word(w));
    }
    CHECK(hits > 100);
  }
}

TEST_CASE("abc tau on fuzzed witnesses") {
  GroupParams p(5);
  const auto g = GarsideOracle::full(5);
  std::mt19937_64 rng(31);
  std::size_t seen = 0;
  for (int it = 0; it < 40000; ++it) {
    const Word w = free_reduce(testing::random_positive_heavy(rng, 5 + rng() % 10) +
                               (it % 2 ? W("a") : W("ba")));
    for (std::size_t s = 0; s + 1 < w.size(); ++s) {
      const WordView u = w.view().subspan(s);
      const auto c = is_abc_critical(u, p);
      if (!c) continue;
      ++seen;
      const Word t = tau_abc(*c, p);
      CHECK(t.size() == u.size());
      CHECK(g.equal(u, t));
      CHECK(t.front().name() != u.front().name());
      CHECK(t.back().name() != u.back().name());
      const Word tau_hat = tau_2gen(*c->sharp_witness.hat_witness, p);
      CHECK(tau_hat.back() == Letter(Gen::c, c->epsilon < 0));
      // u = u# a^jj b^kk beta(u_r) in G.
      Word chain = c->u_sharp;
      for (long i = 0; i < std::labs(c->bab.j); ++i) chain = chain + Word{Letter(Gen::a, c->bab.j < 0)};
      for (long i = 0; i < std::labs(c->bab.k); ++i) chain = chain + Word{Letter(Gen::b, c->bab.k < 0)};
      for (long i = 0; i < std::labs(c->beta); ++i) chain = chain + Word{Letter(Gen::c, c->beta < 0)};
      CHECK(g.equal(u, chain));
    }
  }
  CHECK(seen > 50);
}
