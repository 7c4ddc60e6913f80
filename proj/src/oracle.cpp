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

#include "artin/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <unordered_set>
#include <utility>

#include "artin/dihedral.hpp"

namespace artin {

namespace {

// ---------------------------------------------------------------------------
// Relators

// The cyclic relators of the presentation, each written as a word equal to 1.
std::vector<Word> relators(const GroupParams& params, bool include_ac) {
  const Letter a(Gen::a), b(Gen::b), c(Gen::c);
  std::vector<Word> out;
  out.push_back(concat({make_alternating(a, b, 3, Anchor::start),
                        invert(make_alternating(b, a, 3, Anchor::start))}));
  const std::size_t n = static_cast<std::size_t>(params.n());
  out.push_back(concat({make_alternating(b, c, n, Anchor::start),
                        invert(make_alternating(c, b, n, Anchor::start))}));
  if (include_ac) out.push_back(Word{a, c, a.inverse(), c.inverse()});
  return out;
}

struct Piece {
  Word s;  // replaced subword
  Word t;  // replacement; s and t are equal in G
  friend bool operator<(const Piece& x, const Piece& y) {
    return std::tie(x.s, x.t) < std::tie(y.s, y.t);
  }
  friend bool operator==(const Piece& x, const Piece& y) = default;
};

// All (s, t) with s t^-1 a cyclic conjugate of a relator or of its inverse.
// min_s = 0 includes full relator insertions (s empty).
std::vector<Piece> relator_pieces(const GroupParams& params, bool include_ac,
                                  std::size_t min_s) {
  std::vector<Piece> out;
  for (const Word& rel : relators(params, include_ac)) {
    for (const Word& r : {rel, invert(rel)}) {
      const std::size_t len = r.size();
      for (std::size_t rot = 0; rot < len; ++rot) {
        std::vector<Letter> rotated(len);
        for (std::size_t i = 0; i < len; ++i) rotated[i] = r[(rot + i) % len];
        const Word rw(std::move(rotated));
        for (std::size_t k = min_s; k <= len; ++k) {
          out.push_back({rw.subword(0, k), invert(rw.view().subspan(k))});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_ac(Letter l) { return l.name() != Gen::b; }

// ---------------------------------------------------------------------------
// Normal form modulo free reduction and the commutation ac = ca: freely
// reduced, and every maximal {a,c}-run written as a^i c^j.

void flush_run(std::vector<Letter>& out, long ea, long ec) {
  out.insert(out.end(), static_cast<std::size_t>(std::labs(ea)), Letter(Gen::a, ea < 0));
  out.insert(out.end(), static_cast<std::size_t>(std::labs(ec)), Letter(Gen::c, ec < 0));
}

std::vector<Letter> normalize(WordView w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  long ea = 0;
  long ec = 0;
  for (Letter l : w) {
    if (is_ac(l)) {
      (l.name() == Gen::a ? ea : ec) += l.sign();
      continue;
    }
    if (ea == 0 && ec == 0 && !out.empty() && out.back() == l.inverse()) {
      out.pop_back();
      // The run before the cancelled b becomes pending again.
      while (!out.empty() && is_ac(out.back())) {
        (out.back().name() == Gen::a ? ea : ec) += out.back().sign();
        out.pop_back();
      }
      continue;
    }
    flush_run(out, ea, ec);
    ea = ec = 0;
    out.push_back(l);
  }
  flush_run(out, ea, ec);
  return out;
}

// ---------------------------------------------------------------------------
// Packed words: three bits per letter, code + 1, so at most 42 letters.

constexpr std::size_t kMaxPacked = 42;

struct Key {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  friend bool operator==(const Key&, const Key&) = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::uint64_t h = k.lo * 0x9E3779B97F4A7C15ULL;
    h ^= (k.hi + 0x632BE59BD9B4E019ULL) * 0xC2B2AE3D27D4EB4FULL;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }
};

Key pack(const std::vector<Letter>& w) {
  if (w.size() > kMaxPacked) throw ResourceError("oracle word longer than 42 letters");
  Key k;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::uint64_t v = static_cast<std::uint64_t>(w[i].code()) + 1;
    const std::size_t bit = 3 * i;
    if (bit + 3 <= 64) {
      k.lo |= v << bit;
    } else if (bit >= 64) {
      k.hi |= v << (bit - 64);
    } else {
      k.lo |= v << bit;
      k.hi |= v >> (64 - bit);
    }
  }
  return k;
}

std::vector<Letter> unpack(const Key& k) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < kMaxPacked; ++i) {
    const std::size_t bit = 3 * i;
    std::uint64_t v;
    if (bit + 3 <= 64) {
      v = (k.lo >> bit) & 7;
    } else if (bit >= 64) {
      v = (k.hi >> (bit - 64)) & 7;
    } else {
      v = ((k.lo >> bit) | (k.hi << (64 - bit))) & 7;
    }
    if (v == 0) break;
    out.push_back(Letter::from_code(static_cast<std::uint8_t>(v - 1)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Neighbours of a normalized word.
//
// Pieces of the {a,b} and {b,c} relators alternate b-named and non-b letters.
// In a normalized word a run a^i c^j may be rearranged freely, so a piece
// matches when its b-letters hit b-letters of the word, each interior non-b
// letter is a whole run, and a non-b letter at either end of the piece is
// drawn from the neighbouring run. Single-letter pieces inside a run and
// relator insertions may split a run arbitrarily.

struct Token {
  std::size_t begin;
  std::size_t end;
  bool run;
  long ea;
  long ec;
};

class NeighbourGen {
 public:
  explicit NeighbourGen(const GroupParams& params)
      : pieces_(relator_pieces(params, /*include_ac=*/false, /*min_s=*/0)) {}

  // Calls emit(normalized word) for every neighbour no longer than cap.
  template <typename Emit>
  void expand(const std::vector<Letter>& w, std::size_t cap, Emit&& emit) const {
    tokenize(w);
    for (const Piece& pc : pieces_) {
      if (pc.s.size() > w.size()) continue;
      if (w.size() - pc.s.size() + pc.t.size() > cap) continue;
      if (pc.s.empty()) {
        insert_everywhere(w, pc.t, emit);
      } else if (pc.s.size() == 1 && is_ac(pc.s[0])) {
        single_in_run(w, pc.s[0], pc.t, emit);
      } else {
        match_piece(w, pc, emit);
      }
    }
  }

 private:
  void tokenize(const std::vector<Letter>& w) const {
    tokens_.clear();
    std::size_t i = 0;
    while (i < w.size()) {
      if (!is_ac(w[i])) {
        tokens_.push_back({i, i + 1, false, 0, 0});
        ++i;
        continue;
      }
      Token t{i, i, true, 0, 0};
      while (i < w.size() && is_ac(w[i])) {
        (w[i].name() == Gen::a ? t.ea : t.ec) += w[i].sign();
        ++i;
      }
      t.end = i;
      tokens_.push_back(t);
    }
  }

  static bool run_has(const Token& t, Letter l) {
    const long e = l.name() == Gen::a ? t.ea : t.ec;
    return e != 0 && (e > 0) == l.positive();
  }
  static bool run_is(const Token& t, Letter l) {
    return l.name() == Gen::a ? (t.ec == 0 && t.ea == l.sign())
                              : (t.ea == 0 && t.ec == l.sign());
  }

  template <typename Emit>
  void finish(std::vector<Letter>& scratch, Emit& emit) const {
    emit(normalize(scratch));
  }

  template <typename Emit>
  void insert_everywhere(const std::vector<Letter>& w, const Word& t, Emit& emit) const {
    // Between tokens, and at every split of every run.
    for (std::size_t ti = 0; ti <= tokens_.size(); ++ti) {
      const std::size_t pos = ti < tokens_.size() ? tokens_[ti].begin : w.size();
      scratch_.assign(w.begin(), w.begin() + static_cast<long>(pos));
      scratch_.insert(scratch_.end(), t.begin(), t.end());
      scratch_.insert(scratch_.end(), w.begin() + static_cast<long>(pos), w.end());
      finish(scratch_, emit);
    }
    for (const Token& tok : tokens_) {
      if (tok.run) split_run(w, tok, tok.ea, tok.ec, t, emit);
    }
  }

  // Replaces the run token by left(i,j) + t + right for all splits of the
  // exponents (ea, ec) into a left and a right part.
  template <typename Emit>
  void split_run(const std::vector<Letter>& w, const Token& tok, long ea, long ec,
                 const Word& t, Emit& emit) const {
    const long sa = ea < 0 ? -1 : 1;
    const long sc = ec < 0 ? -1 : 1;
    for (long i = 0; i <= std::labs(ea); ++i) {
      for (long j = 0; j <= std::labs(ec); ++j) {
        scratch_.assign(w.begin(), w.begin() + static_cast<long>(tok.begin));
        flush_run(scratch_, sa * i, sc * j);
        scratch_.insert(scratch_.end(), t.begin(), t.end());
        flush_run(scratch_, ea - sa * i, ec - sc * j);
        scratch_.insert(scratch_.end(), w.begin() + static_cast<long>(tok.end), w.end());
        finish(scratch_, emit);
      }
    }
  }

  template <typename Emit>
  void single_in_run(const std::vector<Letter>& w, Letter s, const Word& t, Emit& emit) const {
    for (const Token& tok : tokens_) {
      if (!tok.run || !run_has(tok, s)) continue;
      const long ea = tok.ea - (s.name() == Gen::a ? s.sign() : 0);
      const long ec = tok.ec - (s.name() == Gen::c ? s.sign() : 0);
      split_run(w, tok, ea, ec, t, emit);
    }
  }

  template <typename Emit>
  void match_piece(const std::vector<Letter>& w, const Piece& pc, Emit& emit) const {
    const WordView s = pc.s.view();
    const std::size_t k = s.size();
    const bool lead = is_ac(s[0]);
    const bool trail = is_ac(s[k - 1]);
    const std::size_t first_b = lead ? 1 : 0;
    for (std::size_t tb = 0; tb < tokens_.size(); ++tb) {
      if (tokens_[tb].run || w[tokens_[tb].begin] != s[first_b]) continue;
      if (lead && (tb == 0 || !tokens_[tb - 1].run || !run_has(tokens_[tb - 1], s[0]))) continue;
      std::size_t ti = tb;
      bool ok = true;
      for (std::size_t j = first_b; j < k && ok; ++j, ++ti) {
        if (ti >= tokens_.size()) {
          ok = false;
          break;
        }
        const Token& tok = tokens_[ti];
        if (!is_ac(s[j])) {
          ok = !tok.run && w[tok.begin] == s[j];
        } else if (j + 1 < k) {
          ok = tok.run && run_is(tok, s[j]);
        } else {
          ok = tok.run && run_has(tok, s[j]);
        }
      }
      if (!ok) continue;
      const std::size_t last_tok = ti - 1;  // token holding s[k-1]

      scratch_.clear();
      if (lead) {
        const Token& r = tokens_[tb - 1];
        scratch_.assign(w.begin(), w.begin() + static_cast<long>(r.begin));
        flush_run(scratch_, r.ea - (s[0].name() == Gen::a ? s[0].sign() : 0),
                  r.ec - (s[0].name() == Gen::c ? s[0].sign() : 0));
      } else {
        scratch_.assign(w.begin(), w.begin() + static_cast<long>(tokens_[tb].begin));
      }
      scratch_.insert(scratch_.end(), pc.t.begin(), pc.t.end());
      if (trail) {
        const Token& r = tokens_[last_tok];
        flush_run(scratch_, r.ea - (s[k - 1].name() == Gen::a ? s[k - 1].sign() : 0),
                  r.ec - (s[k - 1].name() == Gen::c ? s[k - 1].sign() : 0));
      }
      scratch_.insert(scratch_.end(), w.begin() + static_cast<long>(tokens_[last_tok].end),
                      w.end());
      finish(scratch_, emit);
    }
  }

  std::vector<Piece> pieces_;
  mutable std::vector<Token> tokens_;
  mutable std::vector<Letter> scratch_;
};

std::size_t cap_for(std::size_t len, const OracleConfig& config) {
  if (config.slack < 0) throw std::invalid_argument("oracle slack must be nonnegative");
  if (config.node_cap == 0) throw std::invalid_argument("oracle node_cap must be positive");
  const std::size_t cap = len + static_cast<std::size_t>(config.slack);
  if (cap > kMaxPacked) throw ResourceError("oracle length cap exceeds 42 letters");
  return cap;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<Word> relator_moves(WordView w, const GroupParams& params) {
  std::vector<Word> out;
  const std::vector<Piece> pieces = relator_pieces(params, /*include_ac=*/true, /*min_s=*/1);
  for (const Piece& pc : pieces) {
    const std::size_t k = pc.s.size();
    if (k > w.size()) continue;
    for (std::size_t i = 0; i + k <= w.size(); ++i) {
      if (!std::equal(pc.s.begin(), pc.s.end(), w.begin() + static_cast<long>(i))) continue;
      out.push_back(concat({w.subspan(0, i), pc.t.view(), w.subspan(i + k)}));
    }
  }
  for (std::size_t i = 0; i <= w.size(); ++i) {
    for (std::uint8_t code = 0; code < 6; ++code) {
      const Letter l = Letter::from_code(code);
      const Word pair{l, l.inverse()};
      out.push_back(concat({w.subspan(0, i), pair.view(), w.subspan(i)}));
    }
  }
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i + 1] == w[i].inverse()) out.push_back(concat({w.subspan(0, i), w.subspan(i + 2)}));
  }
  const Word self(w);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  out.erase(std::remove(out.begin(), out.end(), self), out.end());
  return out;
}

std::size_t abelian_length_bound(WordView w, const GroupParams& params) {
  const long ea = exponent_sum(w, Gen::a);
  const long eb = exponent_sum(w, Gen::b);
  const long ec = exponent_sum(w, Gen::c);
  // a ~ b always; b ~ c exactly when n is odd.
  if (params.n() % 2 == 1) return static_cast<std::size_t>(std::labs(ea + eb + ec));
  return static_cast<std::size_t>(std::labs(ea + eb) + std::labs(ec));
}

namespace {

bool abelian_equal(WordView w1, WordView w2, const GroupParams& params) {
  const long da = exponent_sum(w1, Gen::a) - exponent_sum(w2, Gen::a);
  const long db = exponent_sum(w1, Gen::b) - exponent_sum(w2, Gen::b);
  const long dc = exponent_sum(w1, Gen::c) - exponent_sum(w2, Gen::c);
  if (params.n() % 2 == 1) return da + db + dc == 0;
  return da + db == 0 && dc == 0;
}

}  // namespace

OracleLength oracle_geodesic_length(WordView w, const OracleConfig& config,
                                    const GroupParams& params) {
  const std::vector<Letter> start = normalize(w);
  OracleLength out;
  out.slack = config.slack;
  out.length_cap = cap_for(start.size(), config);
  out.length = start.size();
  const std::size_t bound = abelian_length_bound(w, params);
  if (out.length == bound) {
    out.nodes = 1;
    out.hit_lower_bound = true;
    return out;
  }

  const NeighbourGen gen(params);
  std::unordered_set<Key, KeyHash> seen;
  seen.reserve(1024);
  std::vector<Key> queue;
  queue.push_back(pack(start));
  seen.insert(queue.back());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::vector<Letter> cur = unpack(queue[head]);
    bool done = false;
    gen.expand(cur, out.length_cap, [&](std::vector<Letter>&& nb) {
      if (done || nb.size() > out.length_cap) return;
      const Key key = pack(nb);
      if (!seen.insert(key).second) return;
      if (seen.size() > config.node_cap) {
        throw ResourceError("oracle search exceeded node cap of " +
                            std::to_string(config.node_cap));
      }
      out.length = std::min(out.length, nb.size());
      if (out.length == bound) done = true;
      queue.push_back(key);
    });
    if (done) {
      out.hit_lower_bound = true;
      break;
    }
  }
  out.nodes = seen.size();
  return out;
}

namespace {

// Image of w1 w2^-1 under the reflection representation of the Coxeter
// quotient, on the basis of simple roots: s(e_t) = e_t + 2 cos(pi / m_st) e_s.
// Entries of products of these matrices are integer polynomials in
// 2 cos(pi / n), so distinct images differ far above the tolerance at the
// word lengths the oracle can search.
bool coxeter_equal(WordView w1, WordView w2, const GroupParams& params) {
  using Mat = std::array<std::array<long double, 3>, 3>;
  const long double pi = std::acos(-1.0L);
  Mat refl[3];
  for (int s = 0; s < 3; ++s) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) refl[s][i][j] = i == j ? 1.0L : 0.0L;
    for (int t = 0; t < 3; ++t) {
      refl[s][s][t] = t == s ? -1.0L
                             : 2.0L * std::cos(pi / params.m(static_cast<Gen>(s), static_cast<Gen>(t)));
    }
  }
  Mat acc{};
  for (int i = 0; i < 3; ++i) acc[i][i] = 1.0L;
  auto apply = [&](Letter l) {
    const Mat& r = refl[static_cast<int>(l.name())];
    Mat next{};
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j) next[i][j] += acc[i][k] * r[k][j];
    acc = next;
  };
  for (Letter l : w1) apply(l);
  for (std::size_t i = w2.size(); i-- > 0;) apply(w2[i]);
  long double scale = 1.0L;
  for (const auto& row : acc)
    for (long double x : row) scale = std::max(scale, std::fabs(x));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (std::fabs(acc[i][j] - (i == j ? 1.0L : 0.0L)) > 1e-9L * scale) return false;
    }
  return true;
}

}  // namespace

const char* evidence_name(EqualityEvidence e) {
  switch (e) {
    case EqualityEvidence::identical_normal_form: return "identical-normal-form";
    case EqualityEvidence::search_meet: return "search-meet";
    case EqualityEvidence::abelian_reject: return "abelian-reject";
    case EqualityEvidence::coxeter_reject: return "coxeter-reject";
    case EqualityEvidence::search_exhausted: return "search-exhausted";
  }
  return "?";
}

OracleEquality oracle_equal(WordView w1, WordView w2, const OracleConfig& config,
                            const GroupParams& params) {
  OracleEquality out;
  const std::vector<Letter> s1 = normalize(w1);
  const std::vector<Letter> s2 = normalize(w2);
  out.length_cap = cap_for(std::max(s1.size(), s2.size()), config);
  if (!abelian_equal(w1, w2, params)) {
    out.evidence = EqualityEvidence::abelian_reject;
    return out;
  }
  if (!coxeter_equal(w1, w2, params)) {
    out.evidence = EqualityEvidence::coxeter_reject;
    return out;
  }
  if (s1 == s2) {
    out.equal = true;
    out.evidence = EqualityEvidence::identical_normal_form;
    out.nodes = 1;
    return out;
  }

  const NeighbourGen gen(params);
  std::unordered_set<Key, KeyHash> seen[2];
  std::vector<Key> frontier[2];
  frontier[0].push_back(pack(s1));
  frontier[1].push_back(pack(s2));
  seen[0].insert(frontier[0].back());
  seen[1].insert(frontier[1].back());

  while (!frontier[0].empty() && !frontier[1].empty()) {
    const int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    std::vector<Key> next;
    bool met = false;
    for (const Key& k : frontier[side]) {
      gen.expand(unpack(k), out.length_cap, [&](std::vector<Letter>&& nb) {
        if (met || nb.size() > out.length_cap) return;
        const Key key = pack(nb);
        if (seen[1 - side].count(key) != 0) {
          met = true;
          return;
        }
        if (!seen[side].insert(key).second) return;
        if (seen[0].size() + seen[1].size() > config.node_cap) {
          throw ResourceError("oracle search exceeded node cap of " +
                              std::to_string(config.node_cap));
        }
        next.push_back(key);
      });
      if (met) break;
    }
    if (met) {
      out.equal = true;
      out.evidence = EqualityEvidence::search_meet;
      out.nodes = seen[0].size() + seen[1].size();
      return out;
    }
    frontier[side] = std::move(next);
  }
  out.evidence = EqualityEvidence::search_exhausted;
  out.nodes = seen[0].size() + seen[1].size();
  return out;
}

std::set<Word> equivalence_closure(WordView w, const GroupParams& params, std::size_t cap) {
  std::set<Word> seen{Word(w)};
  std::vector<Word> queue{Word(w)};
  auto add = [&](Word v) {
    if (seen.count(v) != 0) return;
    if (seen.size() >= cap) throw ResourceError("equivalence closure exceeded its cap");
    seen.insert(v);
    queue.push_back(std::move(v));
  };
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Word cur = queue[head];
    const WordView v = cur.view();
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (is_ac(v[i]) && is_ac(v[i + 1]) && v[i].name() != v[i + 1].name()) {
        std::vector<Letter> swapped(v.begin(), v.end());
        std::swap(swapped[i], swapped[i + 1]);
        add(Word(std::move(swapped)));
      }
    }
    for (GenPair pair : {kPairAB, kPairBC}) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j <= v.size() && pair.contains(v[j - 1].name()); ++j) {
          const auto wit = is_critical_2gen(v.subspan(i, j - i), pair, params);
          if (!wit) continue;
          add(concat({v.subspan(0, i), tau_2gen(*wit, params).view(), v.subspan(j)}));
        }
      }
    }
  }
  return seen;
}

}  // namespace artin
