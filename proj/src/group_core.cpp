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

#include "artin/group_core.hpp"

#include <cctype>
#include <limits>

namespace artin {

Word Word::operator+(const Word& other) const {
  std::vector<Letter> out;
  out.reserve(size() + other.size());
  out.insert(out.end(), begin(), end());
  out.insert(out.end(), other.begin(), other.end());
  return Word(std::move(out));
}

Word Word::operator+(Letter l) const {
  std::vector<Letter> out;
  out.reserve(size() + 1);
  out.insert(out.end(), begin(), end());
  out.push_back(l);
  return Word(std::move(out));
}

Word concat(std::initializer_list<WordView> parts) {
  std::size_t total = 0;
  for (auto p : parts) total += p.size();
  std::vector<Letter> out;
  out.reserve(total);
  for (auto p : parts) out.insert(out.end(), p.begin(), p.end());
  return Word(std::move(out));
}

GroupParams::GroupParams(int n, bool allow_small_n) : n_(n), allow_small_n_(allow_small_n) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  if (n < 5 && !allow_small_n) {
    throw std::invalid_argument("n must be at least 5 (pass allow_small_n for n = 3, 4)");
  }
}

int GroupParams::m(Gen x, Gen y) const {
  if (x == y) throw std::invalid_argument("m(x, y) needs distinct generators");
  const bool has_a = x == Gen::a || y == Gen::a;
  const bool has_c = x == Gen::c || y == Gen::c;
  if (has_a && has_c) return 2;
  if (has_a) return 3;
  return n_;
}

Word make_alternating(Letter x, Letter y, std::size_t len, Anchor anchor) {
  if (x.name() == y.name()) {
    throw std::invalid_argument("alternating word needs letters with distinct names");
  }
  std::vector<Letter> out(len);
  for (std::size_t i = 0; i < len; ++i) {
    // Distance from the anchored end decides the parity.
    const std::size_t d = anchor == Anchor::start ? i : len - 1 - i;
    if (anchor == Anchor::start) {
      out[i] = d % 2 == 0 ? x : y;
    } else {
      out[i] = d % 2 == 0 ? y : x;
    }
  }
  return Word(std::move(out));
}

Word free_reduce(WordView w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

bool is_freely_reduced(WordView w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1].inverse()) return false;
  }
  return true;
}

Word invert(WordView w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

long exponent_sum(WordView w, Gen g) {
  long s = 0;
  for (Letter l : w) {
    if (l.name() == g) s += l.sign();
  }
  return s;
}

namespace {

bool letter_of(char ch, Letter& out) {
  switch (ch) {
    case 'a': out = Letter(Gen::a); return true;
    case 'b': out = Letter(Gen::b); return true;
    case 'c': out = Letter(Gen::c); return true;
    case 'A': out = Letter(Gen::a, true); return true;
    case 'B': out = Letter(Gen::b, true); return true;
    case 'C': out = Letter(Gen::c, true); return true;
    default: return false;
  }
}

bool is_space(char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; }

}  // namespace

Word parse_word(std::string_view text) {
  std::vector<Letter> out;
  std::size_t i = 0;
  const std::size_t len = text.size();
  auto skip_space = [&] {
    while (i < len && is_space(text[i])) ++i;
  };
  while (true) {
    skip_space();
    if (i >= len) break;
    Letter l;
    if (!letter_of(text[i], l)) {
      throw ParseError("unknown symbol '" + std::string(1, text[i]) + "'", i);
    }
    ++i;
    skip_space();
    if (i < len && text[i] == '^') {
      const std::size_t caret = i;
      ++i;
      skip_space();
      bool neg = false;
      if (i < len && text[i] == '-') {
        neg = true;
        ++i;
        skip_space();
      }
      if (i >= len || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("malformed exponent", i < len ? i : caret);
      }
      std::size_t k = 0;
      const std::size_t digits_start = i;
      while (i < len && std::isdigit(static_cast<unsigned char>(text[i]))) {
        if (k > 1'000'000) throw ParseError("exponent too large", digits_start);
        k = k * 10 + static_cast<std::size_t>(text[i] - '0');
        ++i;
      }
      if (neg) l = l.inverse();
      out.insert(out.end(), k, l);
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

std::string format_word(WordView w) {
  std::string out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back(l.symbol());
  return out;
}

}  // namespace artin
