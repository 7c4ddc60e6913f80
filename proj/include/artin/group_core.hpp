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

// Alphabet, words and presentation parameters for the rank-3 Artin group
//
//   G(n) = < a, b, c | aba = bab, ac = ca, (b,c)_n = (c,b)_n >.
//
// Words are immutable value sequences of signed letters. Text form uses
// lowercase a,b,c for generators and uppercase A,B,C for their inverses, with
// optional `x^k` / `x^-k` power sugar.

#ifndef ARTIN_GROUP_CORE_HPP_
#define ARTIN_GROUP_CORE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace artin {

enum class Gen : std::uint8_t { a = 0, b = 1, c = 2 };

constexpr char gen_char(Gen g) { return static_cast<char>('a' + static_cast<int>(g)); }

/// A generator or the inverse of a generator.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(Gen name, bool inverse = false) : name_(name), inverse_(inverse) {}

  constexpr Gen name() const { return name_; }
  constexpr bool positive() const { return !inverse_; }
  constexpr bool negative() const { return inverse_; }
  constexpr int sign() const { return inverse_ ? -1 : 1; }
  constexpr Letter inverse() const { return Letter(name_, !inverse_); }

  /// Dense code in [0, 6): 2 * name + (inverse ? 1 : 0).
  constexpr std::uint8_t code() const {
    return static_cast<std::uint8_t>(2 * static_cast<int>(name_) + (inverse_ ? 1 : 0));
  }
  static constexpr Letter from_code(std::uint8_t code) {
    return Letter(static_cast<Gen>(code / 2), (code & 1) != 0);
  }

  constexpr char symbol() const {
    return inverse_ ? static_cast<char>(gen_char(name_) - 'a' + 'A') : gen_char(name_);
  }

  friend constexpr bool operator==(Letter, Letter) = default;

 private:
  Gen name_ = Gen::a;
  bool inverse_ = false;
};

inline constexpr Letter kA{Gen::a};
inline constexpr Letter kB{Gen::b};
inline constexpr Letter kC{Gen::c};

/// True iff the two letters commute in G: same name, or names {a, c}.
constexpr bool commute(Letter x, Letter y) {
  if (x.name() == y.name()) return true;
  return (x.name() == Gen::a && y.name() == Gen::c) ||
         (x.name() == Gen::c && y.name() == Gen::a);
}

using WordView = std::span<const Letter>;

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(WordView view) : letters_(view.begin(), view.end()) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  WordView view() const { return WordView(letters_); }
  operator WordView() const { return view(); }

  /// Letters [pos, pos + len).
  Word subword(std::size_t pos, std::size_t len) const {
    return Word(view().subspan(pos, len));
  }
  Word suffix(std::size_t pos) const { return Word(view().subspan(pos)); }

  const std::vector<Letter>& letters() const { return letters_; }

  Word operator+(const Word& other) const;
  Word operator+(Letter l) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& x, const Word& y) {
    return std::lexicographical_compare_three_way(
        x.begin(), x.end(), y.begin(), y.end(),
        [](Letter l, Letter r) { return l.code() <=> r.code(); });
  }

 private:
  std::vector<Letter> letters_;
};

Word concat(std::initializer_list<WordView> parts);

/// Presentation parameters. m(a,b) = 3, m(a,c) = 2, m(b,c) = n.
class GroupParams {
 public:
  /// Throws std::invalid_argument unless n >= 5, or n >= 3 with allow_small_n.
  explicit GroupParams(int n = 5, bool allow_small_n = false);

  int n() const { return n_; }
  bool allow_small_n() const { return allow_small_n_; }

  /// Relation length for an unordered pair of distinct generators.
  int m(Gen x, Gen y) const;

  friend bool operator==(const GroupParams&, const GroupParams&) = default;

 private:
  int n_;
  bool allow_small_n_;
};

enum class Anchor { start, end };

/// Alternating word of length len built from x and y.
///
/// Anchor::start gives x y x y ... (begins with x). Anchor::end gives the
/// word ... x y x y, i.e. the alternating word of length len whose final
/// letter is y. Throws std::invalid_argument if x and y share a name.
Word make_alternating(Letter x, Letter y, std::size_t len, Anchor anchor);

/// Single stack pass deleting adjacent l l^-1 pairs.
Word free_reduce(WordView w);
bool is_freely_reduced(WordView w);

Word invert(WordView w);

/// Exponent of g summed over the letters of w.
long exponent_sum(WordView w, Gen g);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Raised when a bounded search (oracle BFS, exhaustive RRS enumeration)
/// would exceed its configured size limit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses the text word format. Whitespace is ignored; `x^k` repeats the
/// letter x k times and `x^-k` repeats its inverse. Throws ParseError with the
/// 0-based offset of the offending character.
Word parse_word(std::string_view text);
std::string format_word(WordView w);

}  // namespace artin

#endif  // ARTIN_GROUP_CORE_HPP_
