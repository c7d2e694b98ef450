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


#include "torsion/summary.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <stdexcept>

#include "torsion/distributions.hpp"
#include "torsion/thresholds.hpp"

namespace torsion {

using nlohmann::json;

namespace {

constexpr std::uint64_t kLambdaMaxOrder = 10'000;

template <typename G>
RatioTable ratio_table_for(
    const std::map<G, std::size_t>& counts, const G& trivial,
    GroupDistribution<G> reference,
    const std::function<double(const G&)>& predicted_ratio,
    const std::function<double(const G&)>& probability) {
  RatioTable t;
  std::set<G> seen;
  for (const auto& [g, c] : counts) {
    t.samples += c;
    seen.insert(g);
  }
  if (t.samples == 0) return t;
  auto it = counts.find(trivial);
  const std::size_t trivial_count = it == counts.end() ? 0 : it->second;
  seen.insert(trivial);
  for (const auto& g : seen) {
    RatioRow row;
    row.group = g.literal();
    auto c = counts.find(g);
    row.count = c == counts.end() ? 0 : c->second;
    if (trivial_count > 0 && row.count > 0) {
      row.observed = static_cast<double>(trivial_count) / row.count;
    }
    row.predicted = predicted_ratio(g);
    t.rows.push_back(std::move(row));
  }
  extend_support<G>(reference, seen, probability);
  t.tv = tv_distance(empirical(counts), reference);
  return t;
}

RatioTable sylow_table(const std::map<PGroup, std::size_t>& counts,
                       std::uint64_t q) {
  return ratio_table_for<PGroup>(
      counts, PGroup(q, {}), cl_distribution(q),
      [](const PGroup& g) { return aut_order(g).get_d(); },
      [](const PGroup& g) { return cl_probability(g); });
}

RatioTable lambda_table(const std::map<AbelianGroup, std::size_t>& counts,
                        int k,
                        const GroupDistribution<AbelianGroup>& reference) {
  return ratio_table_for<AbelianGroup>(
      counts, AbelianGroup(), reference,
      [k](const AbelianGroup& g) {
        return std::exp(k * g.log_order() + log_aut_order(g));
      },
      [k](const AbelianGroup& g) { return lambda_k(g, k); });
}

json mean_sd_json(const MeanSd& m) {
  return {{"mean", m.mean}, {"sd", m.sd}, {"count", m.count}};
}

json table_json(const RatioTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"group", r.group},
                    {"count", r.count},
                    {"observed_ratio",
                     r.observed ? json(*r.observed) : json(nullptr)},
                    {"predicted_ratio", r.predicted}});
  }
  return {{"samples", t.samples}, {"tv", t.tv}, {"rows", rows}};
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

}  // namespace

MeanSd mean_sd(const std::vector<double>& xs) {
  MeanSd m;
  m.count = xs.size();
  if (xs.empty()) return m;
  double s = 0;
  for (double x : xs) s += x;
  m.mean = s / xs.size();
  if (xs.size() > 1) {
    double v = 0;
    for (double x : xs) v += (x - m.mean) * (x - m.mean);
    m.sd = std::sqrt(v / (xs.size() - 1));
  }
  return m;
}

std::optional<AbelianGroup> kth_group(const std::vector<AbelianGroup>& side,
                                      int k) {
  if (k < 1) throw std::invalid_argument("kth_group: k must be positive");
  const auto idx = static_cast<std::size_t>(k - 1);
  if (idx < side.size()) return side[idx];
  if (idx == side.size()) return AbelianGroup();
  return std::nullopt;
}

Summary summarize(const std::vector<TrialRecord>& records) {
  if (records.empty()) throw std::invalid_argument("summarize: no records");
  Summary s;
  s.records = records.size();

  std::vector<double> log_order, faces, cvals, duration, phases, tree_log;
  std::map<std::uint64_t, std::map<PGroup, std::size_t>> sylow_counts;
  std::map<int, std::map<AbelianGroup, std::size_t>> sub_counts, super_counts;
  const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 17, 19, 23};

  auto add_sylow = [&](const AbelianGroup& g) {
    for (auto q : primes) ++sylow_counts[q][sylow(g, q)];
  };

  for (const auto& r : records) {
    switch (r.status) {
      case TrialStatus::kOk: ++s.nontrivial; break;
      case TrialStatus::kTrivial: ++s.trivial; break;
      case TrialStatus::kError: ++s.errors; break;
    }
    if (r.status != TrialStatus::kOk) continue;
    if (r.lt) {
      log_order.push_back(r.lt->group.log_order());
      faces.push_back(static_cast<double>(r.lt->m0));
      cvals.push_back(c_value(r.n, static_cast<double>(r.lt->m0), r.d));
      add_sylow(r.lt->group);
    }
    if (r.burst) {
      duration.push_back(static_cast<double>(r.burst->duration));
      phases.push_back(r.burst->phases);
      for (int k = 1; k <= 3; ++k) {
        if (auto g = kth_group(r.burst->subcritical, k)) ++sub_counts[k][*g];
        if (auto g = kth_group(r.burst->supercritical, k)) {
          ++super_counts[k][*g];
        }
      }
    }
    if (r.tree) {
      ++s.trees;
      if (r.tree->betti1 == 0 && r.tree->betti2 == 0) ++s.trees_acyclic;
      if (!r.tree->h1.trivial()) ++s.trees_h1_nontrivial;
      tree_log.push_back(r.tree->h1.log_order());
      add_sylow(r.tree->h1);
    }
    if (r.hitting) {
      ++s.hitting;
      if (r.hitting->coincide) ++s.coincide;
      if (r.hitting->burst_shadow_coincide) ++s.burst_shadow_coincide;
      if (r.hitting->m_giant) ++s.giant_found;
    }
  }
  if (s.trivial + s.nontrivial > 0) {
    s.trivial_rate =
        static_cast<double>(s.trivial) / (s.trivial + s.nontrivial);
  }
  s.log_order = mean_sd(log_order);
  s.face_count = mean_sd(faces);
  s.c_value = mean_sd(cvals);
  s.duration = mean_sd(duration);
  s.phases = mean_sd(phases);
  s.tree_log_h1 = mean_sd(tree_log);

  for (const auto& [q, counts] : sylow_counts) {
    RatioTable t = sylow_table(counts, q);
    s.sylow_tv[q] = t.tv;
    if (q <= 5) s.sylow[q] = std::move(t);
  }
  for (int k = 1; k <= 3; ++k) {
    if (!sub_counts.count(k) && !super_counts.count(k)) continue;
    const auto ref = lambda_k_distribution(k, kLambdaMaxOrder);
    if (sub_counts.count(k)) s.subcritical[k] = lambda_table(sub_counts[k], k, ref);
    if (super_counts.count(k)) {
      s.supercritical[k] = lambda_table(super_counts[k], k, ref);
    }
  }
  return s;
}

json to_json(const Summary& s) {
  json j;
  j["records"] = s.records;
  j["nontrivial"] = s.nontrivial;
  j["trivial"] = s.trivial;
  j["errors"] = s.errors;
  j["trivial_rate"] = s.trivial_rate;
  j["log_order"] = mean_sd_json(s.log_order);
  j["face_count"] = mean_sd_json(s.face_count);
  j["c_value"] = mean_sd_json(s.c_value);
  j["duration"] = mean_sd_json(s.duration);
  j["phases"] = mean_sd_json(s.phases);
  for (const auto& [q, t] : s.sylow) j["sylow"][std::to_string(q)] = table_json(t);
  for (const auto& [q, tv] : s.sylow_tv) j["sylow_tv"][std::to_string(q)] = tv;
  for (const auto& [k, t] : s.subcritical) {
    j["subcritical"][std::to_string(k)] = table_json(t);
  }
  for (const auto& [k, t] : s.supercritical) {
    j["supercritical"][std::to_string(k)] = table_json(t);
  }
  if (s.trees > 0) {
    j["trees"] = {{"count", s.trees},
                  {"acyclic", s.trees_acyclic},
                  {"h1_nontrivial", s.trees_h1_nontrivial},
                  {"log_h1", mean_sd_json(s.tree_log_h1)}};
  }
  if (s.hitting > 0) {
    j["hitting"] = {{"count", s.hitting},
                    {"coincide", s.coincide},
                    {"burst_shadow_coincide", s.burst_shadow_coincide},
                    {"giant_found", s.giant_found}};
  }
  return j;
}

std::vector<std::filesystem::path> write_tables(
    const Summary& s, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  auto open = [&](const std::string& name) {
    written.push_back(dir / name);
    std::ofstream f(written.back());
    if (!f) throw std::runtime_error("cannot write " + written.back().string());
    return f;
  };

  {
    auto f = open("burst_statistics.csv");
    f << "statistic,mean,sd,count\n";
    auto row = [&](const char* name, const MeanSd& m) {
      f << name << ',' << fmt(m.mean) << ',' << fmt(m.sd) << ',' << m.count
        << '\n';
    };
    row("log_order", s.log_order);
    row("face_count", s.face_count);
    row("c_value", s.c_value);
    row("duration", s.duration);
    row("phases", s.phases);
    f << "trivial_rate," << fmt(s.trivial_rate) << ",0,"
      << s.trivial + s.nontrivial << '\n';
  }
  auto ratio_rows = [](std::ofstream& f, const RatioTable& t) {
    for (const auto& r : t.rows) {
      f << csv_quote(r.group) << ',' << r.count << ','
        << (r.observed ? fmt(*r.observed) : std::string()) << ','
        << fmt(r.predicted) << '\n';
    }
  };
  for (const auto& [q, t] : s.sylow) {
    auto f = open("sylow_ratios_q" + std::to_string(q) + ".csv");
    f << "group,count,observed_trivial_ratio,cohen_lenstra_ratio\n";
    ratio_rows(f, t);
  }
  {
    auto f = open("sylow_tv.csv");
    f << "q,samples,tv_to_cohen_lenstra\n";
    for (const auto& [q, tv] : s.sylow_tv) {
      std::size_t n = 0;
      if (auto it = s.sylow.find(q); it != s.sylow.end()) n = it->second.samples;
      f << q << ',' << (n ? std::to_string(n) : std::string()) << ','
        << fmt(tv) << '\n';
    }
  }
  auto lambda_files = [&](const std::map<int, RatioTable>& tables,
                          const std::string& side) {
    for (const auto& [k, t] : tables) {
      auto f = open(side + "_ratios_k" + std::to_string(k) + ".csv");
      f << "group,count,observed_trivial_ratio,lambda_k_ratio\n";
      ratio_rows(f, t);
    }
  };
  lambda_files(s.subcritical, "subcritical");
  lambda_files(s.supercritical, "supercritical");
  if (!s.subcritical.empty() || !s.supercritical.empty()) {
    auto f = open("lambda_tv.csv");
    f << "k,side,defined,tv_to_lambda_k\n";
    for (const auto& [k, t] : s.subcritical) {
      f << k << ",subcritical," << t.samples << ',' << fmt(t.tv) << '\n';
    }
    for (const auto& [k, t] : s.supercritical) {
      f << k << ",supercritical," << t.samples << ',' << fmt(t.tv) << '\n';
    }
  }
  if (s.hitting > 0) {
    auto f = open("hitting.csv");
    f << "trials,all_three_coincide,burst_shadow_coincide,giant_found\n";
    f << s.hitting << ',' << s.coincide << ',' << s.burst_shadow_coincide
      << ',' << s.giant_found << '\n';
  }
  return written;
}

}  // namespace torsion
