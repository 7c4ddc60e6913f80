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

#include "artin/dihedral.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace artin {

GenPair::GenPair(Gen x, Gen y) {
  if (x == y) throw std::invalid_argument("generator pair needs distinct generators");
  lo_ = static_cast<int>(x) < static_cast<int>(y) ? x : y;
  hi_ = static_cast<int>(x) < static_cast<int>(y) ? y : x;
}

namespace {

void require_in_pair(WordView w, GenPair pair) {
  for (Letter l : w) {
    if (!pair.contains(l.name())) {
      throw std::invalid_argument(std::string("letter '") + l.symbol() +
                                  "' lies outside the generator pair");
    }
  }
}

bool in_pair(WordView w, GenPair pair) {
  return std::all_of(w.begin(), w.end(), [&](Letter l) { return pair.contains(l.name()); });
}

}  // namespace

AlternationProfile profile(WordView w, GenPair pair, const GroupParams& params) {
  require_in_pair(w, pair);
  AlternationProfile out;
  out.m = pair.m(params);
  long run_pos = 0;
  long run_neg = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Letter l = w[i];
    const bool continues = i > 0 && w[i - 1].name() != l.name() &&
                           w[i - 1].positive() == l.positive();
    if (l.positive()) {
      run_pos = continues ? run_pos + 1 : 1;
      run_neg = 0;
    } else {
      run_neg = continues ? run_neg + 1 : 1;
      run_pos = 0;
    }
    out.raw_p = std::max(out.raw_p, run_pos);
    out.raw_n = std::max(out.raw_n, run_neg);
  }
  out.p = static_cast<int>(std::min<long>(out.m, out.raw_p));
  out.n = static_cast<int>(std::min<long>(out.m, out.raw_n));
  return out;
}

bool is_geodesic_2gen(WordView w, GenPair pair, const GroupParams& params) {
  if (!is_freely_reduced(w)) return false;
  const AlternationProfile prof = profile(w, pair, params);
  return prof.p + prof.n <= prof.m;
}

const char* shape_name(TwoGenShape shape) {
  switch (shape) {
    case TwoGenShape::positive_left: return "positive-left";
    case TwoGenShape::positive_right: return "positive-right";
    case TwoGenShape::negative_left: return "negative-left";
    case TwoGenShape::negative_right: return "negative-right";
    case TwoGenShape::unsigned_pos_neg: return "unsigned-pos-neg";
    case TwoGenShape::unsigned_neg_pos: return "unsigned-neg-pos";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// CriticalSuffixScanner

void CriticalSuffixScanner::RunTracker::push(Letter l) {
  const bool continues = count > 0 && front.name() != l.name() &&
                         front.positive() == l.positive();
  if (l.positive()) {
    run_pos = continues ? run_pos + 1 : 1;
    run_neg = 0;
  } else {
    run_neg = continues ? run_neg + 1 : 1;
    run_pos = 0;
  }
  max_pos = std::max(max_pos, run_pos);
  max_neg = std::max(max_neg, run_neg);
  front = l;
  ++count;
}

CriticalSuffixScanner::CriticalSuffixScanner(GenPair pair, const GroupParams& params)
    : pair_(pair), m_(pair.m(params)) {}

void CriticalSuffixScanner::push_front(Letter l) {
  if (size_ == 0) {
    back_ = l;
  } else if (l == whole_.front.inverse()) {
    reduced_ = false;
  }

  const bool extends_alternation =
      size_ == 0 || (whole_.front.name() != l.name() && whole_.front.positive() == l.positive());
  if (trail_pos_open_) {
    if (l.positive() && extends_alternation) {
      trail_pos_ = static_cast<long>(size_) + 1;
    } else {
      trail_pos_open_ = false;
    }
  }
  if (trail_neg_open_) {
    if (l.negative() && extends_alternation) {
      trail_neg_ = static_cast<long>(size_) + 1;
    } else {
      trail_neg_open_ = false;
    }
  }

  whole_.push(l);
  if (size_ >= static_cast<std::size_t>(m_)) head_.push(l);
  max_pos_hist_.push_back(whole_.max_pos);
  max_neg_hist_.push_back(whole_.max_neg);
  all_pos_ = all_pos_ && l.positive();
  all_neg_ = all_neg_ && l.negative();
  ++size_;
}

bool CriticalSuffixScanner::exhausted() const {
  if (!reduced_) return true;
  return std::min<long>(m_, whole_.max_pos) + std::min<long>(m_, whole_.max_neg) > m_;
}

AlternationProfile CriticalSuffixScanner::current_profile() const {
  AlternationProfile out;
  out.m = m_;
  out.raw_p = whole_.max_pos;
  out.raw_n = whole_.max_neg;
  out.p = static_cast<int>(std::min<long>(m_, out.raw_p));
  out.n = static_cast<int>(std::min<long>(m_, out.raw_n));
  return out;
}

std::optional<TwoGenShape> CriticalSuffixScanner::critical_shape() const {
  if (size_ == 0 || !reduced_) return std::nullopt;
  const long m = m_;
  const long p = std::min(m, whole_.max_pos);
  const long n = std::min(m, whole_.max_neg);
  if (p + n != m) return std::nullopt;
  const std::size_t ms = static_cast<std::size_t>(m);

  if (all_pos_) {
    // The leading block is exactly m long and xi has no full block.
    if (whole_.run_pos == m &&
        (size_ == ms || std::min(m, max_pos_hist_[size_ - ms - 1]) < m)) {
      return TwoGenShape::positive_left;
    }
    if (size_ > ms && trail_pos_ == m && std::min(m, head_.max_pos) < m) {
      return TwoGenShape::positive_right;
    }
    return std::nullopt;
  }
  if (all_neg_) {
    if (whole_.run_neg == m &&
        (size_ == ms || std::min(m, max_neg_hist_[size_ - ms - 1]) < m)) {
      return TwoGenShape::negative_left;
    }
    if (size_ > ms && trail_neg_ == m && std::min(m, head_.max_neg) < m) {
      return TwoGenShape::negative_right;
    }
    return std::nullopt;
  }
  if (whole_.front.positive() && back_.negative()) {
    if (whole_.run_pos >= p && trail_neg_ >= n) return TwoGenShape::unsigned_pos_neg;
  } else if (whole_.front.negative() && back_.positive()) {
    if (whole_.run_neg >= n && trail_pos_ >= p) return TwoGenShape::unsigned_neg_pos;
  }
  return std::nullopt;
}

std::optional<TwoGenCriticalWitness> is_critical_2gen(WordView w, GenPair pair,
                                                      const GroupParams& params) {
  if (w.empty() || !in_pair(w, pair)) return std::nullopt;
  CriticalSuffixScanner scanner(pair, params);
  for (std::size_t i = w.size(); i-- > 0;) scanner.push_front(w[i]);
  const auto shape = scanner.critical_shape();
  if (!shape) return std::nullopt;

  TwoGenCriticalWitness out;
  out.pair = pair;
  out.shape = *shape;
  out.profile = scanner.current_profile();
  out.word = Word(w);
  const std::size_t m = static_cast<std::size_t>(out.profile.m);
  switch (*shape) {
    case TwoGenShape::positive_left:
    case TwoGenShape::negative_left:
      out.lead = m;
      break;
    case TwoGenShape::positive_right:
    case TwoGenShape::negative_right:
      out.trail = m;
      break;
    case TwoGenShape::unsigned_pos_neg:
      out.lead = static_cast<std::size_t>(out.profile.p);
      out.trail = static_cast<std::size_t>(out.profile.n);
      break;
    case TwoGenShape::unsigned_neg_pos:
      out.lead = static_cast<std::size_t>(out.profile.n);
      out.trail = static_cast<std::size_t>(out.profile.p);
      break;
  }
  return out;
}

Letter delta(Letter l, GenPair pair, const GroupParams& params) {
  if (!pair.contains(l.name())) {
    throw std::invalid_argument(std::string("letter '") + l.symbol() +
                                "' lies outside the generator pair");
  }
  if (pair.m(params) % 2 == 0) return l;
  return Letter(pair.other(l.name()), l.negative());
}

Word delta_word(WordView w, GenPair pair, const GroupParams& params) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back(delta(l, pair, params));
  return Word(std::move(out));
}

Word tau_2gen(const TwoGenCriticalWitness& witness, const GroupParams& params) {
  const GenPair pair = witness.pair;
  const WordView u = witness.word.view();
  const std::size_t m = static_cast<std::size_t>(witness.profile.m);
  const WordView xi = witness.xi();
  const Word dxi = delta_word(xi, pair, params);
  const Gen x = u.front().name();
  const Gen y = pair.other(x);
  auto pos = [](Gen g) { return Letter(g); };
  auto neg = [](Gen g) { return Letter(g, true); };

  switch (witness.shape) {
    case TwoGenShape::positive_left: {
      if (xi.empty()) return make_alternating(pos(y), pos(x), m, Anchor::start);
      const Gen z = xi.back().name();
      return concat({dxi, make_alternating(pos(z), pos(pair.other(z)), m, Anchor::end)});
    }
    case TwoGenShape::positive_right: {
      const Gen z = xi.front().name();
      return concat({make_alternating(pos(pair.other(z)), pos(z), m, Anchor::start), dxi});
    }
    case TwoGenShape::negative_left: {
      if (xi.empty()) return make_alternating(neg(y), neg(x), m, Anchor::start);
      const Gen z = xi.back().name();
      return concat({dxi, make_alternating(neg(z), neg(pair.other(z)), m, Anchor::end)});
    }
    case TwoGenShape::negative_right: {
      const Gen z = xi.front().name();
      return concat({make_alternating(neg(pair.other(z)), neg(z), m, Anchor::start), dxi});
    }
    case TwoGenShape::unsigned_pos_neg: {
      const std::size_t p = witness.lead;
      const std::size_t n = witness.trail;
      const Gen t = u.back().name();
      const Gen z = pair.other(t);
      return concat({make_alternating(neg(y), neg(x), n, Anchor::start), dxi,
                     make_alternating(pos(t), pos(z), p, Anchor::end)});
    }
    case TwoGenShape::unsigned_neg_pos: {
      const std::size_t n = witness.lead;
      const std::size_t p = witness.trail;
      const Gen t = u.back().name();
      const Gen z = pair.other(t);
      return concat({make_alternating(pos(y), pos(x), p, Anchor::start), dxi,
                     make_alternating(neg(t), neg(z), n, Anchor::end)});
    }
  }
  throw std::logic_error("unreachable tau shape");
}

std::optional<std::size_t> shortest_critical_suffix_2gen(WordView w, GenPair pair,
                                                         const GroupParams& params,
                                                         std::uint64_t* visited) {
  CriticalSuffixScanner scanner(pair, params);
  for (std::size_t j = w.size(); j-- > 0;) {
    if (visited) ++*visited;
    if (!pair.contains(w[j].name())) break;
    scanner.push_front(w[j]);
    if (scanner.critical()) return j;
    if (scanner.exhausted()) break;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// to_bab_form

Word BabForm::word() const {
  std::vector<Letter> out;
  auto power = [&](Gen g, long e) {
    const Letter l(g, e < 0);
    for (long t = 0; t < (e < 0 ? -e : e); ++t) out.push_back(l);
  };
  power(Gen::b, i);
  power(Gen::a, j);
  power(Gen::b, k);
  return Word(std::move(out));
}

namespace {

Letter swap_ab(Letter l) {
  return Letter(l.name() == Gen::a ? Gen::b : Gen::a, l.negative());
}

// The unread middle of the word: explicit letters at both ends around a window
// of the input read through the current flip.
class Middle {
 public:
  explicit Middle(WordView v) : v_(v), lo_(0), hi_(v.size()) {}

  std::size_t size() const { return front_.size() + (hi_ - lo_) + back_.size(); }

  Letter at(std::size_t k) const {
    if (k < front_.size()) return front_[k];
    k -= front_.size();
    if (k < hi_ - lo_) return read(v_[lo_ + k]);
    return back_[k - (hi_ - lo_)];
  }
  Letter from_back(std::size_t k) const { return at(size() - 1 - k); }

  Letter pop_front() {
    if (!front_.empty()) {
      const Letter l = front_.front();
      front_.pop_front();
      return l;
    }
    if (lo_ < hi_) return read(v_[lo_++]);
    const Letter l = back_.front();
    back_.pop_front();
    return l;
  }
  Letter pop_back() {
    if (!back_.empty()) {
      const Letter l = back_.back();
      back_.pop_back();
      return l;
    }
    if (lo_ < hi_) return read(v_[--hi_]);
    const Letter l = front_.back();
    front_.pop_back();
    return l;
  }
  void push_front(Letter l) { front_.push_front(l); }
  void push_back(Letter l) { back_.push_back(l); }

  // Applies delta (a <-> b) to every letter currently in the middle.
  void apply_delta() {
    for (Letter& l : front_) l = swap_ab(l);
    for (Letter& l : back_) l = swap_ab(l);
    flip_ = !flip_;
  }

  void append_to(std::vector<Letter>& out) const {
    for (std::size_t k = 0; k < size(); ++k) out.push_back(at(k));
  }

 private:
  Letter read(Letter l) const { return flip_ ? swap_ab(l) : l; }

  WordView v_;
  std::size_t lo_;
  std::size_t hi_;
  bool flip_ = false;
  std::deque<Letter> front_;
  std::deque<Letter> back_;
};

bool all_equal(WordView v, std::size_t from, std::size_t to, Letter l) {
  for (std::size_t i = from; i < to; ++i) {
    if (v[i] != l) return false;
  }
  return true;
}

std::optional<BabForm> signed_bab_form(WordView v, bool positive) {
  const Letter a(Gen::a, !positive);
  const Letter b(Gen::b, !positive);
  const long s = positive ? 1 : -1;
  const std::size_t len = v.size();
  if (len < 3) return std::nullopt;
  // a^k b a  ==  b a b^k
  if (v[len - 1] == a && v[len - 2] == b && all_equal(v, 0, len - 2, a)) {
    BabForm out;
    out.i = s;
    out.j = s;
    out.k = s * static_cast<long>(len - 2);
    return out;
  }
  // a b a^i  ==  b^i a b
  if (v[0] == a && v[1] == b && all_equal(v, 2, len, a)) {
    BabForm out;
    out.i = s * static_cast<long>(len - 2);
    out.j = s;
    out.k = s;
    return out;
  }
  return std::nullopt;
}

}  // namespace

std::optional<BabForm> to_bab_form(WordView v, bool record_steps) {
  for (Letter l : v) {
    if (l.name() == Gen::c) throw std::invalid_argument("to_bab_form needs an {a,b}-word");
  }
  if (v.empty() || v.front().name() != Gen::a || v.back().name() != Gen::a) {
    throw std::invalid_argument("to_bab_form needs first and last letters named a");
  }
  if (!is_freely_reduced(v)) return std::nullopt;

  const GroupParams ab_params(5);
  const AlternationProfile prof = profile(v, kPairAB, ab_params);
  if (prof.p + prof.n != 3) return std::nullopt;
  if (prof.n == 0) return signed_bab_form(v, true);
  if (prof.p == 0) return signed_bab_form(v, false);

  const Letter a(Gen::a), b(Gen::b), A(Gen::a, true), B(Gen::b, true);
  Middle mid(v);
  std::vector<Letter> left;
  std::vector<Letter> right_rev;
  long i = 0;
  long k = 0;
  long j = 0;
  BabForm out;

  auto snapshot = [&] {
    std::vector<Letter> word(left);
    mid.append_to(word);
    word.insert(word.end(), right_rev.rbegin(), right_rev.rend());
    out.steps.emplace_back(std::move(word));
  };

  while (true) {
    while (mid.size() > 0 && mid.at(0).name() == Gen::b) {
      const Letter l = mid.pop_front();
      left.push_back(l);
      i += l.sign();
    }
    while (mid.size() > 0 && mid.from_back(0).name() == Gen::b) {
      const Letter l = mid.pop_back();
      right_rev.push_back(l);
      k += l.sign();
    }
    if (mid.size() == 0) return std::nullopt;

    const Letter first = mid.at(0);
    const Letter last = mid.from_back(0);
    if (first == last) {
      for (std::size_t t = 0; t < mid.size(); ++t) {
        if (mid.at(t) != first) return std::nullopt;
      }
      j = first.sign() * static_cast<long>(mid.size());
      break;
    }
    if (mid.size() < 3) return std::nullopt;
    const Letter first2 = mid.at(1);
    const Letter last2 = mid.from_back(1);

    if (first.positive()) {
      // a ... A
      const bool lead_pair = first2 == b;   // a b xi A   ->  B d(xi) a b
      const bool trail_pair = last2 == B;   // a xi B A   ->  B A d(xi) b
      if (lead_pair == trail_pair) return std::nullopt;
      if (lead_pair) {
        mid.pop_front();
        mid.pop_front();
        mid.pop_back();
        mid.apply_delta();
        mid.push_front(B);
        mid.push_back(a);
        mid.push_back(b);
      } else {
        mid.pop_front();
        mid.pop_back();
        mid.pop_back();
        mid.apply_delta();
        mid.push_front(A);
        mid.push_front(B);
        mid.push_back(b);
      }
    } else {
      // A ... a
      const bool trail_pair = last2 == b;   // A xi b a   ->  b a d(xi) B
      const bool lead_pair = first2 == B;   // A B xi a   ->  b d(xi) A B
      if (lead_pair == trail_pair) return std::nullopt;
      if (trail_pair) {
        mid.pop_front();
        mid.pop_back();
        mid.pop_back();
        mid.apply_delta();
        mid.push_front(a);
        mid.push_front(b);
        mid.push_back(B);
      } else {
        mid.pop_front();
        mid.pop_front();
        mid.pop_back();
        mid.apply_delta();
        mid.push_front(b);
        mid.push_back(A);
        mid.push_back(B);
      }
    }
    if (record_steps) snapshot();
  }

  if (i == 0 || j == 0 || k == 0) return std::nullopt;
  out.i = i;
  out.j = j;
  out.k = k;
  return out;
}

}  // namespace artin
