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


#include "torsion/records.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace torsion {

using nlohmann::json;

namespace {

json opt_u64(const std::optional<std::uint64_t>& v) {
  return v ? json(*v) : json(nullptr);
}

std::optional<std::uint64_t> get_opt_u64(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<std::uint64_t>();
}

json groups_to_json(const std::vector<AbelianGroup>& gs) {
  json a = json::array();
  for (const auto& g : gs) a.push_back(group_to_json(g));
  return a;
}

std::vector<AbelianGroup> groups_from_json(const json& j) {
  std::vector<AbelianGroup> out;
  for (const auto& e : j) out.push_back(group_from_json(e));
  return out;
}

}  // namespace

std::string to_string(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::kLtBurst: return "lt-burst";
    case ExperimentKind::kQtree: return "qtree";
    case ExperimentKind::kHitting: return "hitting";
    case ExperimentKind::kEnumerate: return "enumerate";
    case ExperimentKind::kConstants: return "constants";
  }
  return "unknown";
}

ExperimentKind parse_kind(const std::string& s) {
  for (auto k : {ExperimentKind::kLtBurst, ExperimentKind::kQtree,
                 ExperimentKind::kHitting, ExperimentKind::kEnumerate,
                 ExperimentKind::kConstants}) {
    if (to_string(k) == s) return k;
  }
  throw std::invalid_argument("unknown experiment kind: " + s);
}

void ExperimentConfig::validate() const {
  if (n <= 0 || d <= 0 || trials == 0 || window_radius == 0 || q0 < 2 ||
      seed == 0 || hitting_radius == 0 || chain_cap == 0 ||
      max_attempts_factor == 0) {
    throw std::invalid_argument("config: numeric fields must be positive");
  }
  if (shadow_threshold && !(*shadow_threshold > 0)) {
    throw std::invalid_argument("config: shadow threshold must be positive");
  }
}

std::string to_string(TrialStatus s) {
  switch (s) {
    case TrialStatus::kOk: return "ok";
    case TrialStatus::kTrivial: return "trivial";
    case TrialStatus::kError: return "error";
  }
  return "unknown";
}

json group_to_json(const AbelianGroup& g) {
  json a = json::array();
  for (const auto& f : g.invariant_factors()) a.push_back(f.get_str());
  return a;
}

AbelianGroup group_from_json(const json& j) {
  std::vector<BigInt> f;
  for (const auto& e : j) f.emplace_back(e.get<std::string>());
  return AbelianGroup(std::move(f));
}

json to_json(const TrialRecord& r, bool include_timing) {
  json j;
  j["kind"] = to_string(r.kind);
  j["n"] = r.n;
  j["d"] = r.d;
  j["trial"] = r.trial;
  j["seed"] = std::to_string(r.seed);
  j["status"] = to_string(r.status);
  if (!r.error.empty()) j["error"] = r.error;
  if (include_timing) j["wall_seconds"] = r.wall_seconds;
  if (r.lt) {
    j["lt"] = {{"invariant_factors", group_to_json(r.lt->group)},
               {"m0", r.lt->m0},
               {"m_peak", r.lt->m_peak},
               {"jump_points", r.lt->jump_points}};
  }
  if (r.burst) {
    const auto& b = *r.burst;
    j["burst"] = {{"subcritical", groups_to_json(b.subcritical)},
                  {"supercritical", groups_to_json(b.supercritical)},
                  {"duration", b.duration},
                  {"phases", b.phases},
                  {"unimodal", b.unimodal},
                  {"block_start", b.block_start},
                  {"block_end", b.block_end}};
  }
  if (r.tree) {
    const auto& t = *r.tree;
    j["tree"] = {{"h1", group_to_json(t.h1)}, {"betti1", t.betti1},
                 {"betti2", t.betti2},        {"faces", t.faces},
                 {"t0", t.t0},                {"steps", t.steps},
                 {"accepted", t.accepted}};
  }
  if (r.hitting) {
    const auto& h = *r.hitting;
    j["hitting"] = {{"m_burst", opt_u64(h.m_burst)},
                    {"m_giant", opt_u64(h.m_giant)},
                    {"m_shadow", opt_u64(h.m_shadow)},
                    {"coincide", h.coincide},
                    {"burst_shadow_coincide", h.burst_shadow_coincide},
                    {"threshold", h.threshold},
                    {"scan_lo", h.scan_lo},
                    {"scan_hi", h.scan_hi},
                    {"shadow_before", opt_u64(h.shadow_before)},
                    {"shadow_at", opt_u64(h.shadow_at)}};
  }
  return j;
}

TrialRecord record_from_json(const json& j) {
  TrialRecord r;
  r.kind = parse_kind(j.at("kind").get<std::string>());
  r.n = j.at("n").get<int>();
  r.d = j.at("d").get<int>();
  r.trial = j.at("trial").get<std::uint64_t>();
  r.seed = std::stoull(j.at("seed").get<std::string>());
  const auto status = j.at("status").get<std::string>();
  if (status == "ok") {
    r.status = TrialStatus::kOk;
  } else if (status == "trivial") {
    r.status = TrialStatus::kTrivial;
  } else if (status == "error") {
    r.status = TrialStatus::kError;
  } else {
    throw std::invalid_argument("unknown trial status: " + status);
  }
  r.error = j.value("error", std::string());
  r.wall_seconds = j.value("wall_seconds", 0.0);
  if (j.contains("lt")) {
    const auto& e = j.at("lt");
    r.lt = LtOutcome{group_from_json(e.at("invariant_factors")),
                     e.at("m0").get<std::uint64_t>(),
                     e.at("m_peak").get<std::uint64_t>(),
                     e.at("jump_points").get<std::uint64_t>()};
  }
  if (j.contains("burst")) {
    const auto& e = j.at("burst");
    BurstOutcome b;
    b.subcritical = groups_from_json(e.at("subcritical"));
    b.supercritical = groups_from_json(e.at("supercritical"));
    b.duration = e.at("duration").get<std::uint64_t>();
    b.phases = e.at("phases").get<int>();
    b.unimodal = e.at("unimodal").get<bool>();
    b.block_start = e.at("block_start").get<std::uint64_t>();
    b.block_end = e.at("block_end").get<std::uint64_t>();
    r.burst = std::move(b);
  }
  if (j.contains("tree")) {
    const auto& e = j.at("tree");
    TreeOutcome t;
    t.h1 = group_from_json(e.at("h1"));
    t.betti1 = e.at("betti1").get<std::uint64_t>();
    t.betti2 = e.at("betti2").get<std::uint64_t>();
    t.faces = e.at("faces").get<std::uint64_t>();
    t.t0 = e.at("t0").get<std::uint64_t>();
    t.steps = e.at("steps").get<std::uint64_t>();
    t.accepted = e.at("accepted").get<std::uint64_t>();
    r.tree = std::move(t);
  }
  if (j.contains("hitting")) {
    const auto& e = j.at("hitting");
    HittingReport h;
    h.m_burst = get_opt_u64(e, "m_burst");
    h.m_giant = get_opt_u64(e, "m_giant");
    h.m_shadow = get_opt_u64(e, "m_shadow");
    h.coincide = e.at("coincide").get<bool>();
    h.burst_shadow_coincide = e.at("burst_shadow_coincide").get<bool>();
    h.threshold = e.at("threshold").get<double>();
    h.scan_lo = e.at("scan_lo").get<std::uint64_t>();
    h.scan_hi = e.at("scan_hi").get<std::uint64_t>();
    h.shadow_before = get_opt_u64(e, "shadow_before");
    h.shadow_at = get_opt_u64(e, "shadow_at");
    r.hitting = std::move(h);
  }
  return r;
}

void write_record(std::ostream& out, const TrialRecord& r) {
  out << to_json(r).dump() << '\n';
}

std::vector<TrialRecord> read_records(std::istream& in) {
  std::vector<TrialRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(record_from_json(json::parse(line)));
    } catch (const std::exception& e) {
      throw std::runtime_error("records line " + std::to_string(lineno) +
                               ": " + e.what());
    }
  }
  return out;
}

std::vector<TrialRecord> read_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_records(in);
}

}  // namespace torsion
