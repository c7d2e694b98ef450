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


// Experiment configuration and per-trial records, with their line-delimited
// JSON form. Big integers are written as decimal strings.

#ifndef TORSION_RECORDS_HPP_
#define TORSION_RECORDS_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "torsion/groups.hpp"
#include "torsion/shadow.hpp"

namespace torsion {

enum class ExperimentKind { kLtBurst, kQtree, kHitting, kEnumerate, kConstants };

std::string to_string(ExperimentKind k);
// Accepts "lt-burst", "qtree", "hitting", "enumerate", "constants".
ExperimentKind parse_kind(const std::string& s);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kLtBurst;
  int n = 50;
  int d = 2;
  std::size_t trials = 1;
  std::uint64_t window_radius = 100;
  std::uint32_t q0 = 10007;
  std::uint64_t seed = 1;
  std::size_t workers = 0;  // 0: see resolve_workers
  std::optional<std::filesystem::path> out;
  std::optional<double> shadow_threshold;
  std::uint64_t hitting_radius = 25;
  std::uint64_t chain_cap = 10'000'000;
  // Resampling stops after this many attempts per requested trial.
  std::size_t max_attempts_factor = 4;

  // Throws std::invalid_argument on a non-positive field.
  void validate() const;
};

enum class TrialStatus { kOk, kTrivial, kError };
std::string to_string(TrialStatus s);

struct LtOutcome {
  AbelianGroup group;
  std::uint64_t m0 = 0;
  std::uint64_t m_peak = 0;
  std::uint64_t jump_points = 0;
};

struct BurstOutcome {
  std::vector<AbelianGroup> subcritical;
  std::vector<AbelianGroup> supercritical;
  std::uint64_t duration = 0;
  int phases = 1;
  bool unimodal = true;
  std::uint64_t block_start = 0;
  std::uint64_t block_end = 0;
};

struct TreeOutcome {
  AbelianGroup h1;
  std::uint64_t betti1 = 0;
  std::uint64_t betti2 = 0;
  std::uint64_t faces = 0;
  std::uint64_t t0 = 0;
  std::uint64_t steps = 0;
  std::uint64_t accepted = 0;
};

struct TrialRecord {
  ExperimentKind kind = ExperimentKind::kLtBurst;
  int n = 0;
  int d = 0;
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  TrialStatus status = TrialStatus::kOk;
  std::string error;
  double wall_seconds = 0;
  std::optional<LtOutcome> lt;
  std::optional<BurstOutcome> burst;
  std::optional<TreeOutcome> tree;
  std::optional<HittingReport> hitting;
};

nlohmann::json group_to_json(const AbelianGroup& g);
AbelianGroup group_from_json(const nlohmann::json& j);

// The record as a JSON object. With include_timing false, wall_seconds is
// left out so that replays compare equal.
nlohmann::json to_json(const TrialRecord& r, bool include_timing = true);
TrialRecord record_from_json(const nlohmann::json& j);

void write_record(std::ostream& out, const TrialRecord& r);
// Blank lines are skipped. Throws std::runtime_error naming the line number
// on malformed input.
std::vector<TrialRecord> read_records(std::istream& in);
std::vector<TrialRecord> read_records(const std::filesystem::path& path);

}  // namespace torsion

#endif  // TORSION_RECORDS_HPP_
