// Copyright 2026 The Authors.
//
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


// Statistics over trial records: mean and standard deviation of the burst
// quantities, observed-versus-predicted ratio tables for Sylow subgroups and
// for the groups next to the largest one, and total variation distances.

#ifndef TORSION_SUMMARY_HPP_
#define TORSION_SUMMARY_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "torsion/records.hpp"

namespace torsion {

struct MeanSd {
  double mean = 0;
  double sd = 0;  // sample standard deviation; 0 for fewer than two values
  std::size_t count = 0;
};
MeanSd mean_sd(const std::vector<double>& xs);

// One group of a ratio table. observed = count(trivial) / count(group),
// unset when the trivial group was never seen; predicted is the same ratio
// under the reference distribution.
struct RatioRow {
  std::string group;
  std::size_t count = 0;
  std::optional<double> observed;
  double predicted = 0;
};

struct RatioTable {
  std::size_t samples = 0;
  std::vector<RatioRow> rows;  // trivial group first, then by order
  double tv = 0;               // against the reference distribution
};

struct Summary {
  std::size_t records = 0;
  std::size_t nontrivial = 0;
  std::size_t trivial = 0;
  std::size_t errors = 0;
  double trivial_rate = 0;  // trivial / (trivial + nontrivial)

  MeanSd log_order;   // natural log of |LT|
  MeanSd face_count;  // m0
  MeanSd c_value;
  MeanSd duration;
  MeanSd phases;

  // Sylow q-parts of LT (process records) or of H_1 (tree records) against
  // Cohen-Lenstra, for q in {2, 3, 5}.
  std::map<std::uint64_t, RatioTable> sylow;
  // TV distance to Cohen-Lenstra for every prime q in [2, 23].
  std::map<std::uint64_t, double> sylow_tv;
  // k-th subcritical and supercritical groups, where defined, against
  // lambda_k, for k in {1, 2, 3}.
  std::map<int, RatioTable> subcritical;
  std::map<int, RatioTable> supercritical;

  // Tree records.
  std::size_t trees = 0;
  std::size_t trees_acyclic = 0;      // betti1 == betti2 == 0
  std::size_t trees_h1_nontrivial = 0;
  MeanSd tree_log_h1;

  // Hitting records.
  std::size_t hitting = 0;
  std::size_t coincide = 0;
  std::size_t burst_shadow_coincide = 0;
  std::size_t giant_found = 0;
};

// The k-th subcritical (or supercritical) group of a burst whose nontrivial
// groups on that side are `side`: side[k-1] if present, the trivial group
// for k == side.size() + 1, undefined beyond.
std::optional<AbelianGroup> kth_group(const std::vector<AbelianGroup>& side,
                                      int k);

// Throws std::invalid_argument for an empty input.
Summary summarize(const std::vector<TrialRecord>& records);

nlohmann::json to_json(const Summary& s);

// Writes the tables as CSV files into `dir` (created if missing) and
// returns their paths.
std::vector<std::filesystem::path> write_tables(
    const Summary& s, const std::filesystem::path& dir);

}  // namespace torsion

#endif  // TORSION_SUMMARY_HPP_
