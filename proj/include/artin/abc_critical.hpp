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

// Critical words of type {a,b,c}: u = u_p u_q u_r with
//
//   u_p   a power of b, or an {a,c}-word starting with c^+-1
//   u_q   a {b,c}-word whose first name differs from that of f(u)
//   u_r   P2G of type {a,b}, both ends named a, hat(u_r) ~ b^ii a^jj b^kk
//   u#  = u_p u_q alpha(u_r) b^ii, P2G-critical of type {b,c}
//
//   tau(u) = alpha(u#) p(tau(hat(u#))) a^jj c^eps b^kk beta(u_r)

#ifndef ARTIN_ABC_CRITICAL_HPP_
#define ARTIN_ABC_CRITICAL_HPP_

#include <cstdint>
#include <optional>

#include "artin/dihedral.hpp"
#include "artin/group_core.hpp"
#include "artin/p2g.hpp"

namespace artin {

struct AbcWitness {
  Word word;
  std::size_t p_end = 0;    // u_p = word[0, p_end)
  std::size_t r_begin = 0;  // u_q = word[p_end, r_begin), u_r = word[r_begin, size)
  P2GWitness ur_witness;    // type {a,b}
  BabForm bab;              // ii = bab.i, jj = bab.j, kk = bab.k
  Word u_sharp;
  P2GWitness sharp_witness;  // type {b,c}, critical
  int epsilon = 1;
  long alpha = 0;  // power of a: alpha(u#)
  long beta = 0;   // power of c: beta(u_r)

  WordView u_p() const { return word.view().subspan(0, p_end); }
  WordView u_q() const { return word.view().subspan(p_end, r_begin - p_end); }
  WordView u_r() const { return word.view().subspan(r_begin); }
};

/// The decomposition is forced: u_p is the leading b-run or the leading
/// {a,c}-run, and u_r starts at the first letter named a after u_p.
std::optional<AbcWitness> is_abc_critical(WordView w, const GroupParams& params);

Word tau_abc(const AbcWitness& witness, const GroupParams& params);

/// Start of the shortest suffix of w that is critical of type {a,b,c}.
std::optional<std::size_t> shortest_abc_critical_suffix(WordView w, const GroupParams& params,
                                                        std::uint64_t* visited = nullptr);

}  // namespace artin

#endif  // ARTIN_ABC_CRITICAL_HPP_
