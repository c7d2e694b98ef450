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


// Seeded trial execution over a pool of worker threads.

#ifndef TORSION_HARNESS_HPP_
#define TORSION_HARNESS_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "torsion/records.hpp"

namespace torsion {

// TORSIONLAB_WORKERS, when set to a positive integer, wins over `requested`;
// requested == 0 means the hardware concurrency.
std::size_t resolve_workers(std::size_t requested);

// One trial of a sampling experiment (lt-burst, qtree or hitting). The seed
// is derive_seed(config.seed, index). Failures from the lower layers are
// caught and returned as an error record.
TrialRecord run_trial(const ExperimentConfig& config, std::uint64_t index);

struct ExperimentResult {
  std::vector<TrialRecord> records;  // trial-index order
  std::size_t requested = 0;
  std::size_t nontrivial = 0;  // status ok
  std::size_t trivial = 0;
  std::size_t errors = 0;
  // False if resampling hit the attempt limit before `requested` ok
  // records were collected.
  bool complete = true;
};

// For lt-burst and hitting, indices are issued in rounds until
// config.trials records have status ok; trivial and failed trials are kept
// and counted. For qtree exactly config.trials indices are run. The set of
// records depends only on the config, not on the worker count. With
// config.out set, records are written there as JSON lines, in index order.
// Throws std::invalid_argument for an invalid config or a kind that is not
// a sampling experiment.
ExperimentResult run_experiment(
    const ExperimentConfig& config,
    const std::function<void(const TrialRecord&)>& on_record = {});

}  // namespace torsion

#endif  // TORSION_HARNESS_HPP_
