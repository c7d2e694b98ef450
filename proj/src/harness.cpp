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


#include "torsion/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "torsion/homology.hpp"
#include "torsion/lmprocess.hpp"
#include "torsion/qtrees.hpp"
#include "torsion/seeding.hpp"
#include "torsion/thresholds.hpp"

namespace torsion {

namespace {

bool resampled(ExperimentKind k) {
  return k == ExperimentKind::kLtBurst || k == ExperimentKind::kHitting;
}

void run_process_trial(const ExperimentConfig& c, TrialRecord& rec) {
  SearchOptions opt;
  opt.window_radius = c.window_radius;
  opt.q0 = c.q0;
  const std::uint64_t total = binomial(c.n, c.d + 1);
  const std::uint64_t len =
      std::min(total, m_star(c.n, c.d, opt.constants) + 2 * c.window_radius);
  const ProcessTrace trace = sample_trace(c.n, c.d, len, rec.seed);
  const LTResult lt = lt_search(trace, opt);
  if (lt.trivial) {
    rec.status = TrialStatus::kTrivial;
    return;
  }
  rec.lt = LtOutcome{lt.group, lt.m0, lt.m_peak, lt.jump_points.size()};
  if (c.kind == ExperimentKind::kLtBurst) {
    const BurstRecord b = analyze_burst(trace, lt);
    rec.burst = BurstOutcome{b.subcritical, b.supercritical, b.duration,
                             b.phases,      b.unimodal,      b.block_start,
                             b.block_end};
  } else {
    HittingOptions h;
    h.radius = c.hitting_radius;
    h.q0 = c.q0;
    h.threshold = c.shadow_threshold;
    rec.hitting = hitting_time_experiment(trace, lt, h);
  }
}

void run_tree_trial(const ExperimentConfig& c, TrialRecord& rec) {
  const TreeSample s = sample_tree(c.n, rec.seed, c.chain_cap);
  const TopHomology h = top_homology(s.tree.state());
  rec.tree = TreeOutcome{h.lower.torsion,        h.lower.betti, h.top.betti,
                         s.tree.faces.size(),    s.t0,          s.steps,
                         s.accepted};
}

}  // namespace

std::size_t resolve_workers(std::size_t requested) {
  if (const char* env = std::getenv("TORSIONLAB_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

TrialRecord run_trial(const ExperimentConfig& config, std::uint64_t index) {
  TrialRecord rec;
  rec.kind = config.kind;
  rec.n = config.n;
  rec.d = config.d;
  rec.trial = index;
  rec.seed = derive_seed(config.seed, index);
  if (!resampled(config.kind) && config.kind != ExperimentKind::kQtree) {
    throw std::invalid_argument("not a sampling experiment: " +
                                to_string(config.kind));
  }
  const auto start = std::chrono::steady_clock::now();
  try {
    if (config.kind == ExperimentKind::kQtree) {
      run_tree_trial(config, rec);
    } else {
      run_process_trial(config, rec);
    }
  } catch (const std::exception& e) {
    rec.lt.reset();
    rec.burst.reset();
    rec.tree.reset();
    rec.hitting.reset();
    rec.status = TrialStatus::kError;
    rec.error = e.what();
  }
  rec.wall_seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return rec;
}

ExperimentResult run_experiment(
    const ExperimentConfig& config,
    const std::function<void(const TrialRecord&)>& on_record) {
  config.validate();
  if (!resampled(config.kind) && config.kind != ExperimentKind::kQtree) {
    throw std::invalid_argument("not a sampling experiment: " +
                                to_string(config.kind));
  }
  // Fail on parameters the samplers reject before spawning anything.
  if (config.kind == ExperimentKind::kQtree) {
    if (config.n < 5 || config.d != 2) {
      throw std::invalid_argument("qtree: needs d = 2 and n >= 5");
    }
  } else {
    m_star(config.n, config.d);
  }

  std::ofstream out;
  if (config.out) {
    out.open(*config.out, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + config.out->string());
  }

  const std::size_t workers = resolve_workers(config.workers);
  const std::size_t max_attempts =
      resampled(config.kind) ? config.trials * config.max_attempts_factor
                             : config.trials;
  ExperimentResult res;
  res.requested = config.trials;
  std::uint64_t next = 0;
  while (res.nontrivial < config.trials && next < max_attempts) {
    const std::size_t round =
        std::min<std::size_t>(resampled(config.kind)
                                  ? config.trials - res.nontrivial
                                  : config.trials,
                              max_attempts - next);
    std::vector<TrialRecord> batch(round);
    std::atomic<std::size_t> cursor{0};
    auto work = [&] {
      for (std::size_t i = cursor++; i < round; i = cursor++) {
        batch[i] = run_trial(config, next + i);
      }
    };
    const std::size_t nthreads = std::min(workers, round);
    if (nthreads <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }
    for (auto& r : batch) {
      switch (r.status) {
        case TrialStatus::kOk: ++res.nontrivial; break;
        case TrialStatus::kTrivial: ++res.trivial; break;
        case TrialStatus::kError: ++res.errors; break;
      }
      if (out) write_record(out, r);
      if (on_record) on_record(r);
      res.records.push_back(std::move(r));
    }
    if (out) out.flush();
    next += round;
    if (!resampled(config.kind)) break;
  }
  res.complete = res.nontrivial >= config.trials;
  return res;
}

}  // namespace torsion
