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

// Two-generator machinery: alternation profiles, critical words, the delta
// permutation and tau-moves inside a dihedral Artin subgroup <x, y>.

#ifndef ARTIN_DIHEDRAL_HPP_
#define ARTIN_DIHEDRAL_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "artin/group_core.hpp"

namespace artin {

/// Unordered pair of distinct generators, stored with lo < hi.
class GenPair {
 public:
  GenPair(Gen x, Gen y);

  Gen lo() const { return lo_; }
  Gen hi() const { return hi_; }
  bool contains(Gen g) const { return g == lo_ || g == hi_; }
  /// The member of the pair that is not g. g must be in the pair.
  Gen other(Gen g) const { return g == lo_ ? hi_ : lo_; }
  int m(const GroupParams& params) const { return params.m(lo_, hi_); }

  friend bool operator==(GenPair, GenPair) = default;

 private:
  Gen lo_;
  Gen hi_;
};

inline const GenPair kPairAB{Gen::a, Gen::b};
inline const GenPair kPairBC{Gen::b, Gen::c};
inline const GenPair kPairAC{Gen::a, Gen::c};

struct AlternationProfile {
  int p = 0;      // min(m, longest positive alternating subword)
  int n = 0;      // min(m, longest negative alternating subword)
  int m = 0;
  long raw_p = 0;  // uncapped lengths
  long raw_n = 0;
};

/// Throws std::invalid_argument if a letter of w is outside the pair.
AlternationProfile profile(WordView w, GenPair pair, const GroupParams& params);

/// True iff the freely reduced pair word w is geodesic in <x, y>, i.e. the
/// capped profile satisfies p + n <= m.
bool is_geodesic_2gen(WordView w, GenPair pair, const GroupParams& params);

enum class TwoGenShape {
  positive_left,     // (x,y)_m block then xi
  positive_right,    // xi then m-block
  negative_left,
  negative_right,
  unsigned_pos_neg,  // p-block, xi, negative n-block
  unsigned_neg_pos,  // negative n-block, xi, p-block
};

const char* shape_name(TwoGenShape shape);

struct TwoGenCriticalWitness {
  GenPair pair{Gen::a, Gen::b};
  TwoGenShape shape = TwoGenShape::positive_left;
  AlternationProfile profile;
  Word word;
  // word = word[0, lead) + xi + word[size - trail, size)
  std::size_t lead = 0;
  std::size_t trail = 0;

  WordView xi() const { return word.view().subspan(lead, word.size() - lead - trail); }
};

std::optional<TwoGenCriticalWitness> is_critical_2gen(WordView w, GenPair pair,
                                                      const GroupParams& params);

/// Image of a letter under conjugation by the Garside element of <x, y>.
Letter delta(Letter l, GenPair pair, const GroupParams& params);
Word delta_word(WordView w, GenPair pair, const GroupParams& params);

Word tau_2gen(const TwoGenCriticalWitness& witness, const GroupParams& params);

/// Incremental criticality test for a pair word grown at its left end.
///
/// After each push_front the scanner knows whether the current word is
/// 2-generator critical. Each push costs O(1) amortised.
class CriticalSuffixScanner {
 public:
  CriticalSuffixScanner(GenPair pair, const GroupParams& params);

  /// Letter must lie in the pair.
  void push_front(Letter l);

  std::size_t size() const { return size_; }
  /// No extension of the current word to the left can be critical.
  bool exhausted() const;
  std::optional<TwoGenShape> critical_shape() const;
  bool critical() const { return critical_shape().has_value(); }
  AlternationProfile current_profile() const;

 private:
  struct RunTracker {
    Letter front;
    long run_pos = 0;  // positive alternating run starting at the front
    long run_neg = 0;
    long max_pos = 0;
    long max_neg = 0;
    std::size_t count = 0;
    void push(Letter l);
  };

  GenPair pair_;
  int m_;
  std::size_t size_ = 0;
  Letter back_;
  RunTracker whole_;
  RunTracker head_;  // the word without its last m letters
  // max_*_hist_[k]: longest run among the last k + 1 letters of the word
  std::vector<long> max_pos_hist_;
  std::vector<long> max_neg_hist_;
  long trail_pos_ = 0;
  long trail_neg_ = 0;
  bool trail_pos_open_ = true;
  bool trail_neg_open_ = true;
  bool all_pos_ = true;
  bool all_neg_ = true;
  bool reduced_ = true;
};

/// Start index of the shortest 2-generator critical suffix of w, scanning
/// only the maximal suffix of w over the pair.
std::optional<std::size_t> shortest_critical_suffix_2gen(WordView w, GenPair pair,
                                                         const GroupParams& params,
                                                         std::uint64_t* visited = nullptr);

struct BabForm {
  long i = 0;
  long j = 0;
  long k = 0;
  std::vector<Word> steps;  // filled only when requested

  Word word() const;
};

/// Decides whether the {a,b}-word v (first and last letters named a) can be
/// carried by 2-generator tau-moves to b^i a^j b^k with i, j, k nonzero.
/// Throws std::invalid_argument if v has a letter named c or if its first or
/// last letter is not named a.
std::optional<BabForm> to_bab_form(WordView v, bool record_steps = false);

}  // namespace artin

#endif  // ARTIN_DIHEDRAL_HPP_
