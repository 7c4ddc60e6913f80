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

// Brute-force verification by bounded search over words.
//
// Nothing here calls into the reducer or the RRS engine. The search walks the
// graph whose vertices are words and whose edges are relator substitutions,
// never letting a word grow past a fixed length cap.

#ifndef ARTIN_ORACLE_HPP_
#define ARTIN_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "artin/group_core.hpp"

namespace artin {

struct OracleConfig {
  int slack = 4;
  std::size_t node_cap = 5'000'000;
};

/// Every word reachable from w by one move: replacing a nonempty piece s of a
/// cyclic relator (or its inverse) by the complementary piece t, inserting a
/// cancelling pair anywhere, or deleting an adjacent cancelling pair. The
/// result is sorted and free of duplicates; w itself is excluded.
std::vector<Word> relator_moves(WordView w, const GroupParams& params);

struct OracleLength {
  std::size_t length = 0;
  int slack = 0;                // slack actually used
  std::size_t length_cap = 0;   // no explored word was longer than this
  std::size_t nodes = 0;        // distinct normalized words visited
  bool hit_lower_bound = false; // stopped at the abelianization bound
};

/// Minimum length over the words reachable from w through relator moves while
/// staying within the length cap. Throws ResourceError past config.node_cap.
OracleLength oracle_geodesic_length(WordView w, const OracleConfig& config,
                                    const GroupParams& params);

enum class EqualityEvidence {
  identical_normal_form,  // equal after free reduction and a/c sorting
  search_meet,            // the two bounded searches met
  abelian_reject,         // exponent sums differ: certainly unequal
  coxeter_reject,         // images in the Coxeter group differ: unequal
  search_exhausted,       // bounded search found no path: unequal up to the cap
};

const char* evidence_name(EqualityEvidence e);

struct OracleEquality {
  bool equal = false;
  EqualityEvidence evidence = EqualityEvidence::search_exhausted;
  std::size_t length_cap = 0;
  std::size_t nodes = 0;
};

OracleEquality oracle_equal(WordView w1, WordView w2, const OracleConfig& config,
                            const GroupParams& params);

/// Lower bound for the length of any word equal to w in G, read off the
/// abelianization. It has the parity of |w|.
std::size_t abelian_length_bound(WordView w, const GroupParams& params);

/// Closure of {w} under swapping adjacent letters named a and c and under
/// tau-moves on 2-generator critical subwords. Throws ResourceError once the
/// set would exceed cap.
std::set<Word> equivalence_closure(WordView w, const GroupParams& params,
                                   std::size_t cap = 100'000);

}  // namespace artin

#endif  // ARTIN_ORACLE_HPP_
