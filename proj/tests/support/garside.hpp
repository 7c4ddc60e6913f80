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

// Test-only decision procedure for spherical Artin groups: left-greedy
// Garside normal forms over the simple elements, which are the elements of
// the finite Coxeter group. Shares no code with the library beyond Letter.
//
// Used for G(5) (type H3) and for the dihedral parabolics <a,b>, <b,c>.

#ifndef ARTIN_TESTS_SUPPORT_GARSIDE_HPP_
#define ARTIN_TESTS_SUPPORT_GARSIDE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "artin/group_core.hpp"

namespace artin::testing {

class CoxeterGroup {
 public:
  /// coxeter[i][j] = m_ij for i != j. Throws if the group is not finite
  /// within max_order elements.
  explicit CoxeterGroup(const std::vector<std::vector<int>>& coxeter, std::size_t max_order = 100000);

  std::size_t rank() const { return rank_; }
  std::size_t order() const { return length_.size(); }
  int identity() const { return 0; }
  int longest() const { return longest_; }
  int length(int e) const { return length_[e]; }
  int rmul(int e, int s) const { return rmul_[e * rank_ + s]; }  // e s
  int lmul(int s, int e) const { return lmul_[e * rank_ + s]; }  // s e
  bool right_descent(int e, int s) const { return length(rmul(e, s)) < length(e); }
  bool left_descent(int e, int s) const { return length(lmul(s, e)) < length(e); }
  /// Delta x Delta^-1.
  int conj_longest(int e) const { return conj_[e]; }

 private:
  std::size_t rank_;
  std::vector<int> length_;
  std::vector<int> rmul_;
  std::vector<int> lmul_;
  std::vector<int> conj_;
  int longest_ = 0;
};

/// Delta^power x_1 ... x_r, each x_i a proper nontrivial simple, left-weighted.
struct GarsideForm {
  long power = 0;
  std::vector<int> simples;
  friend bool operator==(const GarsideForm&, const GarsideForm&) = default;
  friend auto operator<=>(const GarsideForm&, const GarsideForm&) = default;
};

class GarsideOracle {
 public:
  /// generators[i] is the name of Coxeter generator i.
  GarsideOracle(const std::vector<std::vector<int>>& coxeter, std::vector<Gen> generators);

  /// For G(n) with n <= 5 (spherical), or a dihedral parabolic of it.
  static GarsideOracle full(int n);
  static GarsideOracle pair(Gen x, Gen y, int m);

  /// Absent if a letter's name is not a generator here.
  std::optional<GarsideForm> normal_form(WordView w) const;
  void multiply(GarsideForm& f, Letter l) const;
  bool equal(WordView u, WordView v) const;

  const CoxeterGroup& group() const { return group_; }

 private:
  void append_simple(GarsideForm& f, int t) const;
  std::optional<int> index_of(Gen g) const;

  CoxeterGroup group_;
  std::vector<Gen> generators_;
};

}  // namespace artin::testing

#endif  // ARTIN_TESTS_SUPPORT_GARSIDE_HPP_
