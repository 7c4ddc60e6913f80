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

#include "artin/rrs.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace artin {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

Word power(Gen g, long e) {
  return Word(std::vector<Letter>(static_cast<std::size_t>(std::labs(e)), Letter(g, e < 0)));
}

bool named(Letter l, Gen g) { return l.name() == g; }

bool is_p2g(CriticalType t) { return t != CriticalType::abc; }

// u_{m+1} = x v with x = f(gamma)^-1 and x commuting with every letter of v.
bool valid_tail(WordView u, Letter gamma_front) {
  if (u.empty() || u[0] != gamma_front.inverse()) return false;
  return std::all_of(u.begin() + 1, u.end(), [&](Letter l) { return commute(u[0], l); });
}

}  // namespace

const char* critical_type_name(CriticalType type) {
  switch (type) {
    case CriticalType::p2g_ab: return "ab";
    case CriticalType::p2g_bc: return "bc";
    case CriticalType::abc: return "abc";
  }
  return "?";
}

const char* event_kind_name(EventKind kind) {
  switch (kind) {
    case EventKind::tau_2gen: return "tau_2gen";
    case EventKind::tau_p2g: return "tau_p2g";
    case EventKind::tau_abc: return "tau_abc";
    case EventKind::commute_shift: return "commute-shift";
    case EventKind::free_cancel: return "free-cancel";
  }
  return "?";
}

std::optional<CriticalWitness> critical_witness(WordView w, CriticalType type,
                                                const GroupParams& params) {
  switch (type) {
    case CriticalType::p2g_ab:
      if (auto wit = is_p2g_critical(w, P2GType::ab, params)) return CriticalWitness(*wit);
      return std::nullopt;
    case CriticalType::p2g_bc:
      if (auto wit = is_p2g_critical(w, P2GType::bc, params)) return CriticalWitness(*wit);
      return std::nullopt;
    case CriticalType::abc:
      if (auto wit = is_abc_critical(w, params)) return CriticalWitness(*wit);
      return std::nullopt;
  }
  return std::nullopt;
}

Word tau_of(const CriticalWitness& witness, const GroupParams& params) {
  if (const auto* p = std::get_if<P2GWitness>(&witness)) return tau_p2g(*p, params);
  return tau_abc(std::get<AbcWitness>(witness), params);
}

Word chain_prefix(const CriticalWitness& witness, const GroupParams& params) {
  if (const auto* p = std::get_if<P2GWitness>(&witness)) {
    const Word t = tau_2gen(*p->hat_witness, params);
    return Word{t.back()} + p->beta_word();
  }
  const auto& a = std::get<AbcWitness>(witness);
  return concat({power(Gen::c, a.epsilon).view(), power(Gen::b, a.bab.k).view(),
                 power(Gen::c, a.beta).view()});
}

long alpha_of(const CriticalWitness& witness) {
  if (const auto* p = std::get_if<P2GWitness>(&witness)) return p->alpha;
  return std::get<AbcWitness>(witness).alpha;
}

std::optional<Rrs> check_rrs(WordView host, const std::vector<std::size_t>& bounds,
                             const std::vector<CriticalType>& types, const GroupParams& params) {
  const std::size_t m = types.size();
  if (bounds.size() != m + 2) return std::nullopt;
  for (std::size_t i = 1; i <= m + 1; ++i) {
    if (bounds[i] < bounds[i - 1]) return std::nullopt;
    if (i <= m && bounds[i] == bounds[i - 1]) return std::nullopt;
  }
  if (bounds[m + 1] >= host.size()) return std::nullopt;

  Rrs out;
  out.host = Word(host);
  out.bounds = bounds;
  out.types = types;
  Word prefix;
  for (std::size_t i = 1; i <= m; ++i) {
    Word u = concat({prefix.view(), out.w(i)});
    auto wit = critical_witness(u, types[i - 1], params);
    if (!wit) return std::nullopt;
    prefix = chain_prefix(*wit, params);
    out.u.push_back(std::move(u));
    out.witnesses.push_back(std::move(*wit));
  }
  Word tail = concat({prefix.view(), out.w(m + 1)});
  if (!valid_tail(tail, host[bounds[m + 1]])) return std::nullopt;
  out.u.push_back(std::move(tail));
  return out;
}

void apply_rrs_in_place(std::vector<Letter>& word, const Rrs& rrs, const GroupParams& params,
                        std::vector<TraceEvent>* trace) {
  const std::size_t m = rrs.m();
  for (std::size_t i = 1; i <= m; ++i) {
    const Word& u = rrs.u[i - 1];
    const std::size_t end = rrs.bounds[i];
    const std::size_t begin = end - u.size();
    const Word t = tau_of(rrs.witnesses[i - 1], params);
    if (trace) {
      EventKind kind = EventKind::tau_abc;
      if (const auto* p = std::get_if<P2GWitness>(&rrs.witnesses[i - 1])) {
        kind = p->hat.size() == p->word.size() ? EventKind::tau_2gen : EventKind::tau_p2g;
      }
      trace->push_back({kind, begin, end, u, t});
    }
    std::copy(t.begin(), t.end(), word.begin() + static_cast<long>(begin));
  }

  const Word& tail = rrs.u[m];
  const std::size_t end = rrs.bounds[m + 1];
  const std::size_t begin = end - tail.size();
  if (tail.size() > 1) {
    std::rotate(word.begin() + static_cast<long>(begin), word.begin() + static_cast<long>(begin) + 1,
                word.begin() + static_cast<long>(end));
    if (trace) {
      trace->push_back({EventKind::commute_shift, begin, end, tail,
                        Word(WordView(word).subspan(begin, tail.size()))});
    }
  }
  if (trace) {
    trace->push_back(
        {EventKind::free_cancel, end - 1, end + 1, Word{word[end - 1], word[end]}, Word{}});
  }
  word.erase(word.begin() + static_cast<long>(end) - 1, word.begin() + static_cast<long>(end) + 1);
}

AppliedRrs apply_rrs(const Rrs& rrs, const GroupParams& params) {
  std::vector<Letter> buf(rrs.host.begin(), rrs.host.end());
  AppliedRrs out;
  apply_rrs_in_place(buf, rrs, params, &out.trace);
  out.word = Word(std::move(buf));
  return out;
}

bool is_trimmed_and_chained(const Rrs& rrs) {
  const std::size_t m = rrs.m();
  const Letter g = rrs.gamma().front();
  for (Letter l : rrs.w(m + 1)) {
    if (l == g) return false;
  }
  for (std::size_t i = 2; i <= m; ++i) {
    const CriticalType prev = rrs.types[i - 2];
    const CriticalType cur = rrs.types[i - 1];
    if (!is_p2g(prev) || alpha_of(rrs.witnesses[i - 1]) != 0) continue;
    const bool ok = (prev == CriticalType::p2g_ab && cur == CriticalType::p2g_bc) ||
                    (prev == CriticalType::p2g_bc && cur == CriticalType::p2g_ab) ||
                    (prev == CriticalType::p2g_ab && cur == CriticalType::abc);
    if (!ok) return false;
  }
  return true;
}

bool is_optimal_among(const Rrs& rrs, const std::vector<Rrs>& all) {
  for (const Rrs& other : all) {
    if (other.start() > rrs.start()) return false;
  }
  return is_trimmed_and_chained(rrs);
}

bool is_optimal(const Rrs& rrs, const GroupParams& params) {
  if (!is_trimmed_and_chained(rrs)) return false;
  const std::size_t len = rrs.host.size();
  if (len <= kEnumerateMaxLength) {
    return is_optimal_among(rrs, enumerate_all_rrs(rrs.host, params));
  }
  if (rrs.gamma().size() == 1) {
    const auto best = find_optimal_rrs(rrs.host.view().first(len - 1), rrs.host.back(), params);
    return best && best->start() <= rrs.start();
  }
  throw ResourceError("optimality test needs a host of at most 16 letters or a one-letter gamma");
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration

namespace {

class Enumerator {
 public:
  Enumerator(WordView host, const GroupParams& params, std::size_t max_m)
      : host_(host), params_(params), max_m_(max_m) {}

  std::vector<Rrs> run() {
    const std::size_t len = host_.size();
    for (std::size_t b0 = 0; b0 < len; ++b0) {
      bounds_ = {b0};
      types_.clear();
      finish(Word{}, b0);
      if (max_m_ == 0) continue;
      for (std::size_t b1 = b0 + 1; b1 < len; ++b1) {
        extend(Word{}, b0, b1);
      }
    }
    return std::move(out_);
  }

 private:
  static constexpr CriticalType kTypes[] = {CriticalType::p2g_ab, CriticalType::p2g_bc,
                                            CriticalType::abc};

  // Records every RRS closing with w_{m+1} = host[e, g).
  void finish(const Word& prefix, std::size_t e) {
    for (std::size_t g = e; g < host_.size(); ++g) {
      if (types_.empty() && g == e) continue;
      const Word tail = concat({prefix.view(), host_.subspan(e, g - e)});
      if (!valid_tail(tail, host_[g])) continue;
      bounds_.push_back(g);
      if (auto r = check_rrs(host_, bounds_, types_, params_)) out_.push_back(std::move(*r));
      bounds_.pop_back();
    }
  }

  // Tries u_i = prefix host[e, e2) as each critical type.
  void extend(const Word& prefix, std::size_t e, std::size_t e2) {
    const Word u = concat({prefix.view(), host_.subspan(e, e2 - e)});
    for (CriticalType t : kTypes) {
      auto wit = critical_witness(u, t, params_);
      if (!wit) continue;
      const Word next = chain_prefix(*wit, params_);
      bounds_.push_back(e2);
      types_.push_back(t);
      finish(next, e2);
      if (types_.size() < max_m_) {
        for (std::size_t e3 = e2 + 1; e3 < host_.size(); ++e3) extend(next, e2, e3);
      }
      types_.pop_back();
      bounds_.pop_back();
    }
  }

  WordView host_;
  const GroupParams& params_;
  std::size_t max_m_;
  std::vector<std::size_t> bounds_;
  std::vector<CriticalType> types_;
  std::vector<Rrs> out_;
};

}  // namespace

std::vector<Rrs> enumerate_all_rrs(WordView host, const GroupParams& params, std::size_t max_m) {
  if (host.size() > kEnumerateMaxLength) {
    throw ResourceError("enumerate_all_rrs accepts at most 16 letters");
  }
  return Enumerator(host, params, max_m).run();
}

// ---------------------------------------------------------------------------
// The linear search

namespace {

class OptimalSearch {
 public:
  OptimalSearch(WordView w, Letter x, const GroupParams& params, SearchStats* stats)
      : w_(w), x_(x), params_(params), stats_(stats) {}

  std::optional<Rrs> run() {
    const std::size_t len = w_.size();
    // Step 1: w_{m+1} is the longest suffix commuting with x and free of x^-1.
    std::size_t j = len;
    while (j > 0 && commute(w_[j - 1], x_) && w_[j - 1] != x_.inverse()) {
      --j;
      visit();
    }
    if (j == 0) return std::nullopt;
    visit();
    if (w_[j - 1] == x_.inverse()) return check({j - 1, len}, {});

    const Gen s = x_.name();
    const Gen t = w_[j - 1].name();
    if (s == t) return std::nullopt;
    CriticalType type = (s == Gen::c || t == Gen::c) ? CriticalType::p2g_bc : CriticalType::p2g_ab;

    std::vector<std::size_t> ends{j};  // right ends of w_m, w_{m-1}, ...
    std::vector<CriticalType> types{type};
    std::size_t w1_start = kNone;
    while (true) {
      const std::size_t end = ends.back();
      // Is this u_1? Take the shortest critical suffix of v_i of the type.
      if (auto s1 = shortest_suffix(end, type)) {
        w1_start = *s1;
        break;
      }
      std::size_t next_end = kNone;
      CriticalType next_type = CriticalType::p2g_ab;
      if (type == CriticalType::p2g_ab) {
        const std::size_t dot = distinguished_c(end);
        if (dot == kNone) return std::nullopt;
        const std::size_t left = left_neighbour(dot);
        const std::size_t right = right_neighbour(dot, end);
        if (left == kNone || right == kNone) return std::nullopt;
        if (named(w_[left], Gen::b) && named(w_[right], Gen::b)) {
          next_end = left + 1;
          next_type = CriticalType::p2g_ab;
        } else {
          next_end = dot + 1;
          next_type = CriticalType::p2g_bc;
        }
      } else {
        const std::size_t dot = type == CriticalType::p2g_bc ? distinguished_a(end)
                                                             : distinguished_a_abc(end);
        if (dot == kNone) return std::nullopt;
        const std::size_t left = left_neighbour(dot);
        const std::size_t right = right_neighbour(dot, end);
        if (left == kNone || right == kNone) return std::nullopt;
        if (named(w_[left], Gen::b) && named(w_[right], Gen::b)) {
          next_end = left + 1;
          next_type = CriticalType::p2g_bc;
        } else {
          next_end = dot + 1;
          const auto probe = shortest_p2g_critical_suffix(w_.first(next_end), P2GType::ab,
                                                          params_, counter());
          if (!probe) {
            next_type = CriticalType::p2g_ab;
          } else {
            const WordView u1 = w_.subspan(*probe, next_end - *probe);
            const auto wit = critical_witness(u1, CriticalType::p2g_ab, params_);
            visit(u1.size() + (end - next_end));
            bool stop = false;
            if (wit) {
              const Word u2 = concat({chain_prefix(*wit, params_).view(),
                                      w_.subspan(next_end, end - next_end)});
              stop = critical_witness(u2, type, params_).has_value();
            }
            if (stop) {
              ends.push_back(next_end);
              types.push_back(CriticalType::p2g_ab);
              w1_start = *probe;
              break;
            }
            next_type = CriticalType::abc;
          }
        }
      }
      if (next_end >= end) return std::nullopt;
      ends.push_back(next_end);
      types.push_back(next_type);
      type = next_type;
    }

    // Checking: rebuild every u_i by the chain rule.
    std::vector<std::size_t> bounds{w1_start};
    bounds.insert(bounds.end(), ends.rbegin(), ends.rend());
    bounds.push_back(len);
    std::reverse(types.begin(), types.end());
    return check(std::move(bounds), std::move(types));
  }

 private:
  void visit(std::uint64_t k = 1) {
    if (stats_) stats_->letters_visited += k;
  }
  std::uint64_t* counter() { return stats_ ? &stats_->letters_visited : nullptr; }

  std::optional<Rrs> check(std::vector<std::size_t> bounds, std::vector<CriticalType> types) {
    std::vector<Letter> host(w_.begin(), w_.end());
    host.push_back(x_);
    visit(host.size() - bounds.front());
    return check_rrs(host, bounds, types, params_);
  }

  std::optional<std::size_t> shortest_suffix(std::size_t end, CriticalType type) {
    const WordView v = w_.first(end);
    switch (type) {
      case CriticalType::p2g_ab: return shortest_p2g_critical_suffix(v, P2GType::ab, params_, counter());
      case CriticalType::p2g_bc: return shortest_p2g_critical_suffix(v, P2GType::bc, params_, counter());
      case CriticalType::abc: return shortest_abc_critical_suffix(v, params_, counter());
    }
    return std::nullopt;
  }

  // First c met after at least one b, reading leftward from end - 1.
  std::size_t distinguished_c(std::size_t end) {
    bool seen_b = false;
    for (std::size_t p = end; p-- > 0;) {
      visit();
      if (named(w_[p], Gen::b)) seen_b = true;
      if (seen_b && named(w_[p], Gen::c)) return p;
    }
    return kNone;
  }

  // First a met after at least one b.
  std::size_t distinguished_a(std::size_t end) {
    bool seen_b = false;
    for (std::size_t p = end; p-- > 0;) {
      visit();
      if (named(w_[p], Gen::b)) seen_b = true;
      if (seen_b && named(w_[p], Gen::a)) return p;
    }
    return kNone;
  }

  // First a met after a b, then a c, then another b.
  std::size_t distinguished_a_abc(std::size_t end) {
    int state = 0;
    for (std::size_t p = end; p-- > 0;) {
      visit();
      const Gen g = w_[p].name();
      if ((state == 0 || state == 2) && g == Gen::b) {
        ++state;
      } else if (state == 1 && g == Gen::c) {
        state = 2;
      } else if (state == 3 && g == Gen::a) {
        return p;
      }
    }
    return kNone;
  }

  std::size_t left_neighbour(std::size_t p) {
    const Gen g = w_[p].name();
    for (std::size_t q = p; q-- > 0;) {
      visit();
      if (w_[q].name() != g) return q;
    }
    return kNone;
  }

  std::size_t right_neighbour(std::size_t p, std::size_t end) {
    const Gen g = w_[p].name();
    for (std::size_t q = p + 1; q < end; ++q) {
      visit();
      if (w_[q].name() != g) return q;
    }
    return kNone;
  }

  WordView w_;
  Letter x_;
  const GroupParams& params_;
  SearchStats* stats_;
};

}  // namespace

std::optional<Rrs> find_optimal_rrs(WordView w, Letter x, const GroupParams& params,
                                    SearchStats* stats) {
  return OptimalSearch(w, x, params, stats).run();
}

std::string describe_rrs(const Rrs& rrs) {
  std::string out = "mu=" + std::to_string(rrs.start()) + " w=";
  for (std::size_t i = 1; i <= rrs.m() + 1; ++i) {
    out += "[" + format_word(rrs.w(i));
    if (i <= rrs.m()) out += std::string(":") + critical_type_name(rrs.types[i - 1]);
    out += "]";
  }
  out += " gamma=" + format_word(rrs.gamma());
  return out;
}

}  // namespace artin
