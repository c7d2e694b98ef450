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


// torsionlab: command-line front end for the experiments.
//
// Every subcommand prints one JSON document on stdout. Failures print a
// single JSON line {"error": ..., "kind": ...} on stderr and exit nonzero
// (2 for usage errors, 1 otherwise).

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "torsion/distributions.hpp"
#include "torsion/errors.hpp"
#include "torsion/harness.hpp"
#include "torsion/qtrees.hpp"
#include "torsion/records.hpp"
#include "torsion/summary.hpp"
#include "torsion/thresholds.hpp"

namespace {

using nlohmann::json;
using torsion::ExperimentConfig;
using torsion::ExperimentKind;

void print_error(const std::string& kind, const std::string& message) {
  std::cerr << json{{"error", message}, {"kind", kind}}.dump() << std::endl;
}

struct CommonFlags {
  int n = 50;
  int d = 2;
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  std::uint64_t window = 100;
  std::uint32_t q0 = 10007;
  std::size_t workers = 0;
  std::string out;
  std::string tables;
};

void add_common(CLI::App* app, CommonFlags& f) {
  app->add_option("--n", f.n, "number of vertices");
  app->add_option("--d", f.d, "dimension");
  app->add_option("--trials", f.trials, "trials with a nontrivial result");
  app->add_option("--seed", f.seed, "master seed");
  app->add_option("--window", f.window, "search window radius");
  app->add_option("--q0", f.q0, "prime for Betti numbers and shadows");
  app->add_option("--workers", f.workers,
                  "worker threads (TORSIONLAB_WORKERS overrides)");
  app->add_option("--out", f.out, "JSON-lines record file");
  app->add_option("--tables", f.tables, "directory for CSV tables");
}

ExperimentConfig make_config(ExperimentKind kind, const CommonFlags& f) {
  ExperimentConfig c;
  c.kind = kind;
  c.n = f.n;
  c.d = f.d;
  c.trials = f.trials;
  c.seed = f.seed;
  c.window_radius = f.window;
  c.q0 = f.q0;
  c.workers = f.workers;
  if (!f.out.empty()) c.out = f.out;
  return c;
}

json report(const torsion::ExperimentResult& res, const CommonFlags& f) {
  json j;
  j["requested"] = res.requested;
  j["attempted"] = res.records.size();
  j["complete"] = res.complete;
  const auto s = torsion::summarize(res.records);
  j["summary"] = torsion::to_json(s);
  if (!f.tables.empty()) {
    json paths = json::array();
    for (const auto& p : torsion::write_tables(s, f.tables)) {
      paths.push_back(p.string());
    }
    j["tables"] = paths;
  }
  return j;
}

json constants_json(std::optional<int> n) {
  json j;
  const torsion::ProcessConstants configured;
  for (int d = 2; d <= 5; ++d) {
    const double c = torsion::c_d_solve(d);
    j["c_d"][std::to_string(d)] = c;
    j["c_d_configured"][std::to_string(d)] = configured.c_d(d);
    j["t_c"][std::to_string(d)] = torsion::t_c_solve(c, d);
    if (n) j["m_star"][std::to_string(d)] = torsion::m_star(*n, d);
  }
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
    j["cl_normalizer"][std::to_string(q)] = torsion::cl_normalizer(q);
  }
  for (int k = 1; k <= 3; ++k) {
    j["lambda_k_normalizer"][std::to_string(k)] =
        torsion::lambda_k_normalizer(k);
  }
  const auto ph = torsion::expected_phases_series();
  j["expected_phases"] = {
      {"value", ph.value}, {"p1", ph.p1}, {"inner_sum", ph.inner_sum}};
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torsion experiments on random simplicial complexes"};
  app.require_subcommand(1);

  CommonFlags lt_flags, tree_flags, hit_flags;
  auto* lt = app.add_subcommand("lt-burst", "largest torsion and its burst");
  add_common(lt, lt_flags);

  auto* qs = app.add_subcommand("qtree-sample",
                                "sample Q-acyclic 2-complexes by the chain");
  add_common(qs, tree_flags);
  std::uint64_t chain_cap = 10'000'000;
  qs->add_option("--cap", chain_cap, "step cap before the stopping rule");

  auto* ht = app.add_subcommand("hitting-time",
                                "burst, giant core and giant shadow times");
  add_common(ht, hit_flags);
  std::optional<double> threshold;
  std::uint64_t radius = 25;
  ht->add_option("--threshold", threshold, "giant shadow size threshold");
  ht->add_option("--radius", radius, "steps scanned on each side of m0");

  int enum_n = 6;
  std::string enum_out, enum_cache;
  auto* qe = app.add_subcommand("qtree-enumerate",
                                "list every Q-acyclic complex, n <= 6");
  qe->add_option("--n", enum_n, "number of vertices");
  qe->add_option("--out", enum_out, "write the face lists here");
  qe->add_option("--cache", enum_cache, "cache directory");

  int kalai_n = 6;
  std::string kalai_cache;
  auto* kc = app.add_subcommand("kalai-check",
                                "sum of |H_1|^2 over Q-acyclic complexes");
  kc->add_option("--n", kalai_n, "number of vertices");
  kc->add_option("--cache", kalai_cache, "cache directory");

  std::optional<int> const_n;
  auto* cs = app.add_subcommand("constants", "threshold constants");
  cs->add_option("--n", const_n, "also print m* for this n");

  std::string records_path, summary_tables;
  auto* sm = app.add_subcommand("summarize", "statistics from a record file");
  sm->add_option("records", records_path, "JSON-lines records")->required();
  sm->add_option("--tables", summary_tables, "directory for CSV tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("usage", e.what());
    return 2;
  }

  try {
    json out;
    if (*lt) {
      const auto res =
          torsion::run_experiment(make_config(ExperimentKind::kLtBurst, lt_flags));
      out = report(res, lt_flags);
    } else if (*qs) {
      auto c = make_config(ExperimentKind::kQtree, tree_flags);
      c.chain_cap = chain_cap;
      out = report(torsion::run_experiment(c), tree_flags);
    } else if (*ht) {
      auto c = make_config(ExperimentKind::kHitting, hit_flags);
      c.shadow_threshold = threshold;
      c.hitting_radius = radius;
      out = report(torsion::run_experiment(c), hit_flags);
    } else if (*qe) {
      std::optional<std::filesystem::path> cache;
      if (!enum_cache.empty()) cache = enum_cache;
      const auto trees = torsion::enumerate_qacyclic(enum_n, cache);
      if (!enum_out.empty()) {
        std::ofstream f(enum_out);
        if (!f) throw std::runtime_error("cannot open " + enum_out);
        for (const auto& t : trees) {
          torsion::write_faces(f, t.state().simplices());
          f << '\n';
        }
      }
      out = {{"n", enum_n}, {"complexes", trees.size()}};
    } else if (*kc) {
      std::optional<std::filesystem::path> cache;
      if (!kalai_cache.empty()) cache = kalai_cache;
      const auto k = torsion::kalai_sum(kalai_n, cache);
      json counts = json::object();
      for (const auto& [g, c] : k.h1_counts) counts[g.literal()] = c;
      out = {{"n", kalai_n},
             {"sum", k.sum.get_str()},
             {"expected", k.expected.get_str()},
             {"holds", k.sum == k.expected},
             {"complexes", k.complexes},
             {"h1_counts", counts}};
    } else if (*cs) {
      out = constants_json(const_n);
    } else if (*sm) {
      const auto s = torsion::summarize(torsion::read_records(records_path));
      out = torsion::to_json(s);
      if (!summary_tables.empty()) {
        json paths = json::array();
        for (const auto& p : torsion::write_tables(s, summary_tables)) {
          paths.push_back(p.string());
        }
        out["tables"] = paths;
      }
    }
    std::cout << out.dump(2) << std::endl;
  } catch (const std::invalid_argument& e) {
    print_error("invalid_argument", e.what());
    return 1;
  } catch (const torsion::MixingTimeout& e) {
    print_error("mixing_timeout", e.what());
    return 1;
  } catch (const std::exception& e) {
    print_error("runtime", e.what());
    return 1;
  }
  return 0;
}
