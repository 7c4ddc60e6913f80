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


// Command-line front end. Exit codes: 0 success, 1 usage error, 2 fuzz
// violation, 3 resource limit reached.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "artin/oracle.hpp"
#include "artin/reducer.hpp"
#include "json.hpp"

using namespace artin;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;
constexpr int kExitResource = 3;

struct Globals {
  int n = 5;
  bool allow_small_n = false;
  bool json = false;
};

void emit(const Globals& g, const json& doc, const std::string& text) {
  if (g.json) {
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << text << "\n";
  }
}

json trace_json(const Reduction& red) {
  json events = json::array();
  for (const PushStep& step : red.steps) {
    for (const TraceEvent& e : step.events) {
      events.push_back({{"step", step.index},
                        {"kind", event_kind_name(e.kind)},
                        {"span", {e.span_begin, e.span_end}},
                        {"before", format_word(e.before)},
                        {"after", format_word(e.after)},
                        {"rrs", *step.rrs}});
    }
  }
  return events;
}

Word random_word(std::mt19937_64& rng, std::size_t len) {
  std::vector<Letter> v(len);
  for (Letter& l : v) l = Letter::from_code(static_cast<std::uint8_t>(rng() % 6));
  return Word(std::move(v));
}

// First invariant violated by w, if any.
std::optional<std::string> violation(WordView w, const OracleConfig& cfg, const GroupParams& p) {
  const Word r = reduce_to_geodesic(w, p).word;
  if (oracle_geodesic_length(w, cfg, p).length != r.size()) return "length-vs-oracle";
  if (!oracle_equal(w, r, cfg, p).equal) return "element-preserved";
  if (reduce_to_geodesic(r, p).word != r) return "idempotent";
  return std::nullopt;
}

int run_fuzz(const Globals& g, const GroupParams& p, std::size_t count, std::size_t max_len,
             std::uint64_t seed, int slack) {
  std::mt19937_64 rng(seed);
  const OracleConfig cfg{slack, 5'000'000};
  for (std::size_t i = 0; i < count; ++i) {
    Word w = random_word(rng, rng() % (max_len + 1));
    auto bad = violation(w, cfg, p);
    if (!bad) continue;
    // Greedy deletion while the same check keeps failing.
    for (bool shrunk = true; shrunk;) {
      shrunk = false;
      for (std::size_t k = 0; k < w.size(); ++k) {
        Word shorter = concat({w.view().first(k), w.view().subspan(k + 1)});
        if (violation(shorter, cfg, p) == bad) {
          w = std::move(shorter);
          shrunk = true;
          break;
        }
      }
    }
    const Word r = reduce_to_geodesic(w, p).word;
    const std::size_t ol = oracle_geodesic_length(w, cfg, p).length;
    emit(g,
         {{"count", i + 1}, {"n", p.n()}, {"seed", seed}, {"slack", slack}, {"violations", 1},
          {"counterexample",
           {{"word", format_word(w)}, {"check", *bad}, {"reduced", format_word(r)},
            {"oracle_length", ol}}}},
         "violation of " + *bad + " after " + std::to_string(i + 1) + " words: " +
             format_word(w) + " reduces to " + format_word(r) + " (oracle length " +
             std::to_string(ol) + ")");
    return kExitViolation;
  }
  emit(g,
       {{"count", count}, {"n", p.n()}, {"max_len", max_len}, {"seed", seed}, {"slack", slack},
        {"violations", 0}, {"counterexample", nullptr}},
       "fuzz: " + std::to_string(count) + " words, n=" + std::to_string(p.n()) +
           ", max-len " + std::to_string(max_len) + ", seed " + std::to_string(seed) +
           ", slack " + std::to_string(slack) + ": 0 violations");
  return 0;
}

int run_bench(const Globals& g, const GroupParams& p, std::size_t len, int repeat,
              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> ms;
  double visited = 0;
  double c_push = 0;
  for (int r = 0; r < repeat; ++r) {
    const Word w = random_word(rng, len);
    const auto t0 = std::chrono::steady_clock::now();
    const auto red = reduce_to_geodesic(w, p);
    ms.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                     .count());
    visited += static_cast<double>(red.stats.letters_visited);
    c_push = std::max(c_push, red.stats.max_push_ratio);
  }
  std::vector<double> sorted = ms;
  std::sort(sorted.begin(), sorted.end());
  double mean = 0;
  for (double x : ms) mean += x;
  mean /= static_cast<double>(repeat);
  const double median = repeat % 2 ? sorted[repeat / 2]
                                   : (sorted[repeat / 2 - 1] + sorted[repeat / 2]) / 2;
  visited /= static_cast<double>(repeat);
  const double L = static_cast<double>(len);
  const double c = L > 0 ? visited / (L * L) : 0;
  char text[256];
  std::snprintf(text, sizeof text,
                "len %zu repeat %d: mean %.3f ms, median %.3f ms, letters visited %.0f, "
                "c %.5f, c' %.4f",
                len, repeat, mean, median, visited, c, c_push);
  emit(g,
       {{"len", len}, {"repeat", repeat}, {"seed", seed}, {"mean_ms", mean}, {"median_ms", median},
        {"letters_visited", visited}, {"c", c}, {"c_prime", c_push}},
       text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geodesics and the word problem in the Artin groups G(n)"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--n", g.n, "m(b,c), at least 5")->capture_default_str();
  app.add_flag("--allow-small-n", g.allow_small_n, "permit n = 3, 4 (no geodesic guarantee)");
  app.add_flag("--json", g.json, "print one JSON document");

  std::string word, word2;
  auto* reduce = app.add_subcommand("reduce", "print a geodesic representative");
  reduce->add_option("word", word)->required();
  auto* length = app.add_subcommand("length", "print the geodesic length");
  length->add_option("word", word)->required();
  auto* equal = app.add_subcommand("equal", "decide whether two words are equal in G");
  equal->add_option("w1", word)->required();
  equal->add_option("w2", word2)->required();
  auto* trace = app.add_subcommand("trace", "print the rewriting events as a JSON array");
  trace->add_option("word", word)->required();

  std::size_t count = 1000, max_len = 12, bench_len = 1000;
  std::uint64_t seed = 1;
  int slack = 4, repeat = 5;
  auto* fuzz = app.add_subcommand("fuzz", "check the reducer against the BFS oracle");
  fuzz->add_option("--count", count)->capture_default_str();
  fuzz->add_option("--max-len", max_len)->capture_default_str();
  fuzz->add_option("--seed", seed)->capture_default_str();
  fuzz->add_option("--slack", slack)->capture_default_str()->check(CLI::NonNegativeNumber);
  auto* bench = app.add_subcommand("bench", "time reductions of random words");
  bench->add_option("--len", bench_len)->capture_default_str();
  bench->add_option("--repeat", repeat)->capture_default_str()->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed)->capture_default_str();
  auto* oracle = app.add_subcommand("oracle-length", "geodesic length by breadth-first search");
  oracle->add_option("word", word)->required();
  oracle->add_option("--slack", slack)->capture_default_str()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    const GroupParams p(g.n, g.allow_small_n);
    if (reduce->parsed()) {
      const Word w = parse_word(word);
      const Word r = reduce_to_geodesic(w, p).word;
      emit(g, {{"input", format_word(w)}, {"n", p.n()}, {"geodesic", format_word(r)},
               {"length", r.size()}},
           format_word(r));
    } else if (length->parsed()) {
      const Word w = parse_word(word);
      const std::size_t len = geodesic_length(w, p);
      emit(g, {{"input", format_word(w)}, {"n", p.n()}, {"length", len}}, std::to_string(len));
    } else if (equal->parsed()) {
      const bool eq = equal_in_g(parse_word(word), parse_word(word2), p);
      emit(g, {{"w1", word}, {"w2", word2}, {"n", p.n()}, {"equal", eq}}, eq ? "true" : "false");
    } else if (trace->parsed()) {
      std::cout << trace_json(reduce_to_geodesic(parse_word(word), p, true)).dump() << "\n";
    } else if (fuzz->parsed()) {
      return run_fuzz(g, p, count, max_len, seed, slack);
    } else if (bench->parsed()) {
      return run_bench(g, p, bench_len, repeat, seed);
    } else if (oracle->parsed()) {
      const Word w = parse_word(word);
      const auto o = oracle_geodesic_length(w, {slack, 5'000'000}, p);
      emit(g, {{"input", format_word(w)}, {"n", p.n()}, {"length", o.length}, {"slack", o.slack},
               {"nodes", o.nodes}},
           std::to_string(o.length));
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " at index " << e.position() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
