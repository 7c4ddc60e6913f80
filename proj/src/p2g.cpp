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

#include "artin/p2g.hpp"

#include <cstdlib>

namespace artin {

const char* p2g_type_name(P2GType type) { return type == P2GType::ab ? "ab" : "bc"; }
Gen p2g_x(P2GType type) { return type == P2GType::ab ? Gen::a : Gen::c; }
Gen p2g_z(P2GType type) { return type == P2GType::ab ? Gen::c : Gen::a; }
GenPair p2g_pair(P2GType type) { return type == P2GType::ab ? kPairAB : kPairBC; }

namespace {

Word power(Gen g, long e) {
  return Word(std::vector<Letter>(static_cast<std::size_t>(std::labs(e)), Letter(g, e < 0)));
}

// Sign shared by the z-letters of v: 0 if none, 2 if mixed.
int z_sign(WordView v, Gen z) {
  int sign = 0;
  for (Letter l : v) {
    if (l.name() != z) continue;
    if (sign == 0) {
      sign = l.sign();
    } else if (sign != l.sign()) {
      return 2;
    }
  }
  return sign;
}

// Tracks the sign of z-letters met so far; false once two signs have been seen.
struct ZSignTracker {
  int sign = 0;
  bool add(Letter l) {
    if (sign == 0) sign = l.sign();
    return sign == l.sign();
  }
};

}  // namespace

Word P2GWitness::alpha_word() const { return power(p2g_z(type), alpha); }
Word P2GWitness::beta_word() const { return power(p2g_z(type), beta); }

std::optional<P2GWitness> decompose_p2g(WordView w, P2GType type, const GroupParams& params) {
  (void)params;
  if (w.empty() || !is_freely_reduced(w)) return std::nullopt;
  const Gen x = p2g_x(type);
  const Gen z = p2g_z(type);
  const std::size_t len = w.size();
  const Gen f = w.front().name();
  const Gen l = w.back().name();
  if (f == z || l == z) return std::nullopt;

  std::size_t p_end = 0;
  if (f == x) {
    while (p_end < len && w[p_end].name() != Gen::b) ++p_end;
  } else {
    while (p_end < len && w[p_end].name() == Gen::b) ++p_end;
    if (p_end < len && w[p_end].name() != x) return std::nullopt;
  }
  std::size_t s_begin = len;
  if (l == x) {
    while (s_begin > 0 && w[s_begin - 1].name() != Gen::b) --s_begin;
  } else {
    while (s_begin > 0 && w[s_begin - 1].name() == Gen::b) --s_begin;
    if (s_begin > 0 && w[s_begin - 1].name() != x) return std::nullopt;
  }
  if (p_end >= len || s_begin == 0 || p_end >= s_begin) return std::nullopt;
  for (std::size_t i = p_end; i < s_begin; ++i) {
    if (w[i].name() == z) return std::nullopt;
  }

  P2GWitness out;
  out.type = type;
  out.word = Word(w);
  out.p_end = p_end;
  out.s_begin = s_begin;
  out.alpha = exponent_sum(w.subspan(0, p_end), z);
  out.beta = exponent_sum(w.subspan(s_begin), z);
  out.z_consistent = z_sign(w.subspan(0, p_end), z) != 2 && z_sign(w.subspan(s_begin), z) != 2;
  std::vector<Letter> hat;
  hat.reserve(len);
  for (Letter c : w) {
    if (c.name() != z) hat.push_back(c);
  }
  out.hat = Word(std::move(hat));
  return out;
}

std::optional<P2GWitness> is_p2g_critical(WordView w, P2GType type, const GroupParams& params) {
  auto out = decompose_p2g(w, type, params);
  if (!out || !out->z_consistent) return std::nullopt;
  out->hat_witness = is_critical_2gen(out->hat, p2g_pair(type), params);
  if (!out->hat_witness) return std::nullopt;
  return out;
}

Word tau_p2g(const P2GWitness& witness, const GroupParams& params) {
  if (!witness.hat_witness) throw std::invalid_argument("tau_p2g needs a critical witness");
  return concat({witness.alpha_word().view(), tau_2gen(*witness.hat_witness, params).view(),
                 witness.beta_word().view()});
}

std::optional<std::size_t> shortest_p2g_critical_suffix(WordView w, P2GType type,
                                                        const GroupParams& params,
                                                        std::uint64_t* visited) {
  const Gen x = p2g_x(type);
  const Gen z = p2g_z(type);
  const std::size_t len = w.size();
  std::uint64_t seen = 0;
  auto done = [&](std::optional<std::size_t> r) {
    if (visited) *visited += seen;
    return r;
  };
  if (len == 0 || w.back().name() == z) return done(std::nullopt);

  CriticalSuffixScanner scanner(p2g_pair(type), params);
  ZSignTracker s_sign;
  auto reduced_at = [&](std::size_t j) { return j + 1 >= len || w[j + 1] != w[j].inverse(); };

  // u_s, which every candidate shares.
  std::size_t j = len;
  if (w.back().name() == x) {
    while (j > 0 && w[j - 1].name() != Gen::b) {
      --j;
      ++seen;
      if (!reduced_at(j)) return done(std::nullopt);
      if (w[j].name() == z) {
        if (!s_sign.add(w[j])) return done(std::nullopt);
      } else {
        scanner.push_front(w[j]);
      }
    }
  } else {
    while (j > 0 && w[j - 1].name() == Gen::b) {
      --j;
      ++seen;
      if (!reduced_at(j)) return done(std::nullopt);
      scanner.push_front(w[j]);
    }
    if (j > 0 && w[j - 1].name() != x) return done(std::nullopt);
  }
  if (j == 0 || scanner.exhausted()) return done(std::nullopt);

  // The {x,b}-region left of u_s: starts of u_p inside it.
  bool b_right = false;
  bool x_right = false;
  while (j > 0 && w[j - 1].name() != z) {
    --j;
    ++seen;
    if (!reduced_at(j)) return done(std::nullopt);
    const Letter c = w[j];
    scanner.push_front(c);
    const bool start_ok = c.name() == x ? b_right : x_right;
    if (start_ok && scanner.critical()) return done(j);
    if (scanner.exhausted()) return done(std::nullopt);
    (c.name() == x ? x_right : b_right) = true;
  }
  if (!b_right) return done(std::nullopt);

  // The {a,c}-run left of the region: u_p is an {a,c}-word starting with x.
  ZSignTracker p_sign;
  while (j > 0 && w[j - 1].name() != Gen::b) {
    --j;
    ++seen;
    if (!reduced_at(j)) return done(std::nullopt);
    const Letter c = w[j];
    if (c.name() == z) {
      if (!p_sign.add(c)) return done(std::nullopt);
      continue;
    }
    scanner.push_front(c);
    if (scanner.critical()) return done(j);
    if (scanner.exhausted()) return done(std::nullopt);
  }
  return done(std::nullopt);
}

}  // namespace artin
