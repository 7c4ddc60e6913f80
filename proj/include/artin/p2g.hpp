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

// Pseudo 2-generated words of type {x,b}, x in {a,c}, with z the member of
// {a,c} other than x:
//
//   u = u_p u_q u_s
//
// u_p is a power of b or an {a,c}-word starting with x^+-1, u_q is a nonempty
// {x,b}-word, u_s mirrors u_p. hat(u) deletes every z-letter.

#ifndef ARTIN_P2G_HPP_
#define ARTIN_P2G_HPP_

#include <cstdint>
#include <optional>

#include "artin/dihedral.hpp"
#include "artin/group_core.hpp"

namespace artin {

enum class P2GType { ab, bc };

const char* p2g_type_name(P2GType type);
/// x: the pseudo-generator other than b.
Gen p2g_x(P2GType type);
/// z: the generator deleted by hat.
Gen p2g_z(P2GType type);
GenPair p2g_pair(P2GType type);

struct P2GWitness {
  P2GType type = P2GType::ab;
  Word word;
  std::size_t p_end = 0;    // u_p = word[0, p_end)
  std::size_t s_begin = 0;  // u_s = word[s_begin, size); u_q in between
  long alpha = 0;           // z-exponent of u_p
  long beta = 0;            // z-exponent of u_s
  // All z-letters of u_p share one sign, and likewise for u_s.
  bool z_consistent = false;
  Word hat;
  std::optional<TwoGenCriticalWitness> hat_witness;

  WordView u_p() const { return word.view().subspan(0, p_end); }
  WordView u_q() const { return word.view().subspan(p_end, s_begin - p_end); }
  WordView u_s() const { return word.view().subspan(s_begin); }
  Word alpha_word() const;
  Word beta_word() const;
};

/// The decomposition u_p u_q u_s is forced by the word: u_p ends just before
/// the first letter whose name differs from f(u) within {x,b} (a b-letter
/// when f(u) is named x, an x-letter when f(u) is named b), and u_s mirrors
/// it. Returns absent for empty or non freely reduced w.
std::optional<P2GWitness> decompose_p2g(WordView w, P2GType type, const GroupParams& params);

/// A decomposition with z_consistent set whose hat is 2-generator critical.
std::optional<P2GWitness> is_p2g_critical(WordView w, P2GType type, const GroupParams& params);

/// alpha(u) tau(hat(u)) beta(u). The witness must carry hat_witness.
Word tau_p2g(const P2GWitness& witness, const GroupParams& params);

/// Start of the shortest suffix of w that is P2G-critical of the given type.
std::optional<std::size_t> shortest_p2g_critical_suffix(WordView w, P2GType type,
                                                        const GroupParams& params,
                                                        std::uint64_t* visited = nullptr);

}  // namespace artin

#endif  // ARTIN_P2G_HPP_
