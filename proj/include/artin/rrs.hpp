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

// Rightward reducing sequences.
//
// A host word is cut as  mu | w_1 | ... | w_m | w_{m+1} | gamma  and
//
//   u_1 = w_1,   u_i = chain(u_{i-1}) w_i   (2 <= i <= m + 1)
//
// where chain(u) = l(tau(hat u)) beta(u) for P2G words and
// chain(u) = c^eps b^kk beta(u) for {a,b,c} words. u_1 .. u_m are critical
// of their declared types, u_{m+1} = x v with x = f(gamma)^-1 commuting with
// every letter of v. When m = 0, u_1 = w_1 = x v.

#ifndef ARTIN_RRS_HPP_
#define ARTIN_RRS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "artin/abc_critical.hpp"
#include "artin/group_core.hpp"
#include "artin/p2g.hpp"

namespace artin {

enum class CriticalType { p2g_ab, p2g_bc, abc };

const char* critical_type_name(CriticalType type);

using CriticalWitness = std::variant<P2GWitness, AbcWitness>;

/// Witness for w as a critical word of the given type, if it is one.
std::optional<CriticalWitness> critical_witness(WordView w, CriticalType type,
                                                const GroupParams& params);
Word tau_of(const CriticalWitness& witness, const GroupParams& params);
/// The prefix that u_{i+1} inherits from tau(u_i).
Word chain_prefix(const CriticalWitness& witness, const GroupParams& params);
/// alpha(u): exponent of the generator commuting with f(u).
long alpha_of(const CriticalWitness& witness);

struct Rrs {
  Word host;
  // bounds[0] = start of w_1; bounds[i] = end of w_i for 1 <= i <= m + 1.
  // gamma = host[bounds[m + 1], size) is nonempty.
  std::vector<std::size_t> bounds;
  std::vector<CriticalType> types;          // size m
  std::vector<CriticalWitness> witnesses;   // size m
  std::vector<Word> u;                      // size m + 1

  std::size_t m() const { return types.size(); }
  std::size_t start() const { return bounds.front(); }
  WordView w(std::size_t i) const {
    return host.view().subspan(bounds[i - 1], bounds[i] - bounds[i - 1]);
  }
  WordView gamma() const { return host.view().subspan(bounds.back()); }
};

/// Validates a factorization against the RRS conditions above. Linear time.
std::optional<Rrs> check_rrs(WordView host, const std::vector<std::size_t>& bounds,
                             const std::vector<CriticalType>& types, const GroupParams& params);

enum class EventKind { tau_2gen, tau_p2g, tau_abc, commute_shift, free_cancel };

const char* event_kind_name(EventKind kind);

struct TraceEvent {
  EventKind kind = EventKind::tau_2gen;
  std::size_t span_begin = 0;  // [span_begin, span_end) in the word before the event
  std::size_t span_end = 0;
  Word before;                 // the subword at the span before the event
  Word after;                  // what replaced it
};

/// Applies the sequence of replacements in place: each u_i is rewritten to
/// tau(u_i), u_{m+1} = x v becomes v x, then the pair x f(gamma) is deleted.
/// The buffer must hold rrs.host. Appends events to trace when non-null.
void apply_rrs_in_place(std::vector<Letter>& word, const Rrs& rrs, const GroupParams& params,
                        std::vector<TraceEvent>* trace = nullptr);

struct AppliedRrs {
  Word word;
  std::vector<TraceEvent> trace;
};
AppliedRrs apply_rrs(const Rrs& rrs, const GroupParams& params);

/// Conditions (ii) and (iii) of optimality.
bool is_trimmed_and_chained(const Rrs& rrs);

/// Optimality with condition (i) decided by exhaustive enumeration when the
/// host has at most 16 letters, and otherwise by the linear search when gamma
/// is a single letter (the prefix before it must then be geodesic). Throws
/// ResourceError when neither applies.
bool is_optimal(const Rrs& rrs, const GroupParams& params);

/// Optimality with condition (i) judged against a given list of RRSs for the
/// same host.
bool is_optimal_among(const Rrs& rrs, const std::vector<Rrs>& all);

inline constexpr std::size_t kEnumerateMaxLength = 16;

/// Every RRS of host with m <= max_m. Throws ResourceError if the host has
/// more than 16 letters.
std::vector<Rrs> enumerate_all_rrs(WordView host, const GroupParams& params,
                                   std::size_t max_m = kEnumerateMaxLength);

struct SearchStats {
  std::uint64_t letters_visited = 0;
};

/// The optimal RRS of w x for w geodesic, or absent when w x is geodesic.
std::optional<Rrs> find_optimal_rrs(WordView w, Letter x, const GroupParams& params,
                                    SearchStats* stats = nullptr);

/// Compact description, e.g. "mu=2 w=[bcbcaba:abc][cbc:bc][] gamma=B".
std::string describe_rrs(const Rrs& rrs);

}  // namespace artin

#endif  // ARTIN_RRS_HPP_
