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

#include "artin/abc_critical.hpp"

#include <cstdlib>

namespace artin {

namespace {

Word power(Gen g, long e) {
  return Word(std::vector<Letter>(static_cast<std::size_t>(std::labs(e)), Letter(g, e < 0)));
}

bool named(Letter l, Gen g) { return l.name() == g; }

// u_r data shared by every candidate start left of r_begin.
struct RightPart {
  P2GWitness ur;
  BabForm bab;
};

std::optional<RightPart> right_part(WordView ur_word, const GroupParams& params) {
  if (ur_word.empty() || !named(ur_word.front(), Gen::a) || !named(ur_word.back(), Gen::a)) {
    return std::nullopt;
  }
  auto ur = decompose_p2g(ur_word, P2GType::ab, params);
  if (!ur || !ur->z_consistent) return std::nullopt;
  auto bab = to_bab_form(ur->hat);
  if (!bab) return std::nullopt;
  return RightPart{std::move(*ur), std::move(*bab)};
}

}  // namespace

std::optional<AbcWitness> is_abc_critical(WordView w, const GroupParams& params) {
  if (w.empty() || !is_freely_reduced(w)) return std::nullopt;
  const std::size_t len = w.size();
  std::size_t p_end = 0;
  if (named(w[0], Gen::b)) {
    while (p_end < len && named(w[p_end], Gen::b)) ++p_end;
    if (p_end == len || !named(w[p_end], Gen::c)) return std::nullopt;
  } else if (named(w[0], Gen::c)) {
    while (p_end < len && !named(w[p_end], Gen::b)) ++p_end;
    if (p_end == len) return std::nullopt;
  } else {
    return std::nullopt;
  }
  std::size_t r_begin = p_end;
  while (r_begin < len && !named(w[r_begin], Gen::a)) ++r_begin;
  if (r_begin == len) return std::nullopt;

  auto right = right_part(w.subspan(r_begin), params);
  if (!right) return std::nullopt;

  AbcWitness out;
  out.word = Word(w);
  out.p_end = p_end;
  out.r_begin = r_begin;
  out.u_sharp = concat({w.subspan(0, r_begin), power(Gen::c, right->ur.alpha).view(),
                        power(Gen::b, right->bab.i).view()});
  auto sharp = is_p2g_critical(out.u_sharp, P2GType::bc, params);
  if (!sharp) return std::nullopt;
  const Word tau_hat = tau_2gen(*sharp->hat_witness, params);
  if (!named(tau_hat.back(), Gen::c)) return std::nullopt;
  out.epsilon = tau_hat.back().sign();
  out.alpha = sharp->alpha;
  out.beta = right->ur.beta;
  out.ur_witness = std::move(right->ur);
  out.bab = std::move(right->bab);
  out.sharp_witness = std::move(*sharp);
  return out;
}

Word tau_abc(const AbcWitness& witness, const GroupParams& params) {
  const Word tau_hat = tau_2gen(*witness.sharp_witness.hat_witness, params);
  const WordView head = tau_hat.view().first(tau_hat.size() - 1);
  return concat({power(Gen::a, witness.alpha).view(), head, power(Gen::a, witness.bab.j).view(),
                 power(Gen::c, witness.epsilon).view(), power(Gen::b, witness.bab.k).view(),
                 power(Gen::c, witness.beta).view()});
}

std::optional<std::size_t> shortest_abc_critical_suffix(WordView w, const GroupParams& params,
                                                        std::uint64_t* visited) {
  const std::size_t len = w.size();
  std::uint64_t seen = 0;
  auto done = [&](std::optional<std::size_t> r) {
    if (visited) *visited += seen;
    return r;
  };
  if (len == 0 || !named(w.back(), Gen::a)) return done(std::nullopt);

  // u_r is P2G of type {a,b}: it lies inside the trailing {a,c}-run, the
  // {a,b}-region before it and the {a,c}-run before that.
  std::size_t lo = len;
  while (lo > 0 && !named(w[lo - 1], Gen::b)) --lo;
  seen += len - lo;
  if (lo == 0) return done(std::nullopt);
  const std::size_t s_begin = lo;
  while (lo > 0 && !named(w[lo - 1], Gen::c)) --lo;
  while (lo > 0 && !named(w[lo - 1], Gen::b)) --lo;
  seen += s_begin - lo;

  // Largest valid start for a fixed r_begin.
  auto best_for = [&](std::size_t r) -> std::optional<std::size_t> {
    const auto right = right_part(w.subspan(r), params);
    seen += len - r;
    if (!right) return std::nullopt;

    // hat(u#) read from the right: b^ii, c^alpha(u_r), then u_q and u_p.
    CriticalSuffixScanner scanner(kPairBC, params);
    const long ii = right->bab.i;
    for (long t = 0; t < std::labs(ii); ++t) scanner.push_front(Letter(Gen::b, ii < 0));
    const long ar = right->ur.alpha;
    for (long t = 0; t < std::labs(ar); ++t) scanner.push_front(Letter(Gen::c, ar < 0));
    seen += static_cast<std::uint64_t>(std::labs(ii) + std::labs(ar));
    auto accept = [&](std::size_t s) {
      seen += len - s;
      return is_abc_critical(w.subspan(s), params).has_value();
    };

    // Starts inside the {b,c}-run ending at r - 1. u_p is a b-run followed
    // by a c, or a c-run followed by a b.
    bool c_right = false;
    bool b_right = false;
    std::size_t s = r;
    while (s > 0 && !named(w[s - 1], Gen::a)) {
      --s;
      ++seen;
      if (w[s + 1] == w[s].inverse()) return std::nullopt;
      scanner.push_front(w[s]);
      const bool start_ok = named(w[s], Gen::b) ? c_right : b_right;
      if (start_ok && scanner.critical() && accept(s)) return s;
      if (scanner.exhausted()) return std::nullopt;
      (named(w[s], Gen::b) ? b_right : c_right) = true;
    }
    if (s == r || !named(w[s], Gen::b)) return std::nullopt;

    // Starts c^+-1 in the {a,c}-run left of the {b,c}-run.
    while (s > 0 && !named(w[s - 1], Gen::b)) {
      --s;
      ++seen;
      if (named(w[s], Gen::a)) continue;
      scanner.push_front(w[s]);
      if (scanner.critical() && accept(s)) return s;
      if (scanner.exhausted()) return std::nullopt;
    }
    return std::nullopt;
  };

  std::optional<std::size_t> best;
  for (std::size_t r = s_begin; r-- > lo;) {
    ++seen;
    if (r == 0 || (best && r <= *best)) break;
    if (!named(w[r], Gen::a) || named(w[r - 1], Gen::a)) continue;
    if (auto s = best_for(r); s && (!best || *s > *best)) best = s;
  }
  return done(best);
}

}  // namespace artin
