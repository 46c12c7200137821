#include "bbap/io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "bbap/profit.h"

namespace bbap {
namespace {

using nlohmann::json;

void RequireKeys(const json& obj, std::string_view where,
                 std::initializer_list<std::string_view> required,
                 std::initializer_list<std::string_view> optional = {}) {
  if (!obj.is_object()) throw FormatError(std::string(where) + ": expected an object");
  for (auto key : required) {
    if (!obj.contains(key)) {
      throw FormatError(std::string(where) + ": missing key '" + std::string(key) + "'");
    }
  }
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto k : required) known |= (k == key);
    for (auto k : optional) known |= (k == key);
    if (!known) throw FormatError(std::string(where) + ": unknown key '" + key + "'");
  }
}

template <typename T>
T Get(const json& obj, std::string_view key, std::string_view where) {
  try {
    const json& v = obj.at(key);
    if constexpr (std::is_integral_v<T> && !std::is_same_v<T, bool>) {
      if (!v.is_number_integer()) throw FormatError("");
    } else if constexpr (std::is_floating_point_v<T>) {
      if (!v.is_number()) throw FormatError("");
    } else if constexpr (std::is_same_v<T, bool>) {
      if (!v.is_boolean()) throw FormatError("");
    }
    return v.get<T>();
  } catch (const std::exception&) {
    throw FormatError(std::string(where) + ": bad value for '" + std::string(key) + "'");
  }
}

std::vector<int> GetIntArray(const json& v, std::string_view where) {
  if (!v.is_array()) throw FormatError(std::string(where) + ": expected an array");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) {
      throw FormatError(std::string(where) + ": expected integers");
    }
    out.push_back(x.get<int>());
  }
  return out;
}

json Parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("not valid JSON: ") + e.what());
  }
}

DurationMap RuleDurations(const InstanceData& data) {
  DurationMap out;
  for (std::size_t i = 0; i < data.belts.size(); ++i) {
    const Belt& b = data.belts[i];
    for (int j : b.compatible_flights) {
      if (j < 0 || j >= static_cast<int>(data.flights.size())) continue;
      out[{static_cast<int>(i), j}] =
          BuildDurationSet(NominalDuration(b, data.flights[j]));
    }
  }
  return out;
}

bool SameDurations(const DurationMap& a, const DurationMap& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [key, set] : a) {
    auto it = b.find(key);
    if (it == b.end() || it->second.nominal != set.nominal ||
        it->second.values != set.values) {
      return false;
    }
  }
  return true;
}

}  // namespace

InstanceData ParseInstanceData(std::string_view text) {
  const json doc = Parse(text);
  RequireKeys(doc, "instance",
              {"format_version", "t_max", "belts", "flights", "profit", "durations"});
  if (Get<int>(doc, "format_version", "instance") != kInstanceFormatVersion) {
    throw FormatError("instance: unsupported format_version");
  }
  InstanceData data;
  data.t_max = Get<int>(doc, "t_max", "instance");

  const json& flights = doc.at("flights");
  if (!flights.is_array()) throw FormatError("instance: flights must be an array");
  std::map<int, int> position;  // file id -> position
  for (const auto& f : flights) {
    RequireKeys(f, "flight", {"id", "bags", "t_req"});
    Flight flight;
    flight.id = Get<int>(f, "id", "flight");
    flight.bags = Get<int>(f, "bags", "flight");
    flight.t_req = Get<int>(f, "t_req", "flight");
    if (!position.emplace(flight.id, static_cast<int>(data.flights.size())).second) {
      throw FormatError("flight: duplicate id " + std::to_string(flight.id));
    }
    flight.id = static_cast<int>(data.flights.size());
    data.flights.push_back(flight);
  }
  auto flight_pos = [&](int id, std::string_view where) {
    auto it = position.find(id);
    if (it == position.end()) {
      throw FormatError(std::string(where) + ": unknown flight id " + std::to_string(id));
    }
    return it->second;
  };

  const json& belts = doc.at("belts");
  if (!belts.is_array()) throw FormatError("instance: belts must be an array");
  for (const auto& b : belts) {
    RequireKeys(b, "belt", {"id", "productivity", "compatible_flights"},
                {"dual_station_threshold"});
    Belt belt;
    belt.id = Get<int>(b, "id", "belt");
    if (belt.id != static_cast<int>(data.belts.size())) {
      throw FormatError("belt: ids must be 0, 1, 2, ... in order");
    }
    belt.productivity = Get<double>(b, "productivity", "belt");
    if (b.contains("dual_station_threshold")) {
      belt.dual_station_threshold = Get<int>(b, "dual_station_threshold", "belt");
    }
    for (int id : GetIntArray(b.at("compatible_flights"), "belt")) {
      belt.compatible_flights.push_back(flight_pos(id, "belt"));
    }
    data.belts.push_back(std::move(belt));
  }
  auto belt_index = [&](int id, std::string_view where) {
    if (id < 0 || id >= static_cast<int>(data.belts.size())) {
      throw FormatError(std::string(where) + ": unknown belt id " + std::to_string(id));
    }
    return id;
  };

  const json& profit = doc.at("profit");
  if (!profit.is_object() || profit.size() != 1) {
    throw FormatError("profit: expected exactly one of 'formula' or 'table'");
  }
  if (profit.contains("formula")) {
    const json& f = profit.at("formula");
    RequireKeys(f, "profit.formula", {"alpha", "beta1", "beta2"});
    data.profit = ProfitParams{Get<double>(f, "alpha", "profit.formula"),
                               Get<double>(f, "beta1", "profit.formula"),
                               Get<double>(f, "beta2", "profit.formula")};
  } else if (profit.contains("table")) {
    ProfitTable table;
    const json& rows = profit.at("table");
    if (!rows.is_array()) throw FormatError("profit.table: expected an array");
    for (const auto& row : rows) {
      auto v = GetIntArray(row, "profit.table");
      if (v.size() != 5) throw FormatError("profit.table: rows are [belt, flight, t, w, p]");
      const int i = belt_index(v[0], "profit.table");
      const int j = flight_pos(v[1], "profit.table");
      if (!table.emplace(ProfitKey{i, j, v[2], v[3]}, v[4]).second) {
        throw FormatError("profit.table: duplicate entry");
      }
    }
    data.profit = std::move(table);
  } else {
    throw FormatError("profit: expected 'formula' or 'table'");
  }

  const json& durations = doc.at("durations");
  if (durations.is_object()) {
    RequireKeys(durations, "durations", {"rule"});
    if (durations.at("rule") != kDurationRuleName) {
      throw FormatError("durations: unknown rule");
    }
    for (const Belt& b : data.belts) {
      if (!(b.productivity > 0.0)) {
        throw FormatError("durations: rule needs positive productivities");
      }
    }
    data.durations = RuleDurations(data);
  } else if (durations.is_array()) {
    for (const auto& d : durations) {
      RequireKeys(d, "durations entry", {"belt", "flight", "nominal", "values"});
      const int i = belt_index(Get<int>(d, "belt", "durations entry"), "durations entry");
      const int j = flight_pos(Get<int>(d, "flight", "durations entry"), "durations entry");
      DurationSet set;
      set.nominal = Get<int>(d, "nominal", "durations entry");
      set.values = GetIntArray(d.at("values"), "durations entry");
      if (!data.durations.emplace(std::make_pair(i, j), std::move(set)).second) {
        throw FormatError("durations: duplicate entry");
      }
    }
  } else {
    throw FormatError("durations: expected a rule object or an array");
  }
  return data;
}

Instance ParseInstance(std::string_view text) {
  return Instance::Create(ParseInstanceData(text));
}

std::string SerializeInstance(const Instance& inst) {
  const InstanceData data = inst.ToData();
  json doc = json::object();
  doc["format_version"] = kInstanceFormatVersion;
  doc["t_max"] = data.t_max;

  json belts = json::array();
  for (const Belt& b : data.belts) {
    json jb = json::object();
    jb["id"] = b.id;
    jb["productivity"] = b.productivity;
    if (b.dual_station_threshold) jb["dual_station_threshold"] = *b.dual_station_threshold;
    jb["compatible_flights"] = b.compatible_flights;
    belts.push_back(std::move(jb));
  }
  doc["belts"] = std::move(belts);

  json flights = json::array();
  for (const Flight& f : data.flights) {
    flights.push_back({{"id", f.id}, {"bags", f.bags}, {"t_req", f.t_req}});
  }
  doc["flights"] = std::move(flights);

  if (const auto* params = std::get_if<ProfitParams>(&data.profit)) {
    doc["profit"] = {{"formula",
                      {{"alpha", params->alpha},
                       {"beta1", params->beta1},
                       {"beta2", params->beta2}}}};
  } else {
    json rows = json::array();
    for (const auto& [key, p] : std::get<ProfitTable>(data.profit)) {
      const auto& [i, j, t, w] = key;
      rows.push_back({i, j, t, w, p});
    }
    doc["profit"] = {{"table", std::move(rows)}};
  }

  if (SameDurations(data.durations, RuleDurations(data))) {
    doc["durations"] = {{"rule", kDurationRuleName}};
  } else {
    json rows = json::array();
    for (const auto& [key, set] : data.durations) {
      rows.push_back({{"belt", key.first},
                      {"flight", key.second},
                      {"nominal", set.nominal},
                      {"values", set.values}});
    }
    doc["durations"] = std::move(rows);
  }
  return doc.dump(2) + "\n";
}

std::string InstanceDigest(const Instance& inst) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : SerializeInstance(inst)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

SolutionFile ParseSolutionFile(std::string_view text) {
  const json doc = Parse(text);
  RequireKeys(doc, "solution",
              {"format_version", "instance_digest", "assignments", "objective"},
              {"solver"});
  if (Get<int>(doc, "format_version", "solution") != kSolutionFormatVersion) {
    throw FormatError("solution: unsupported format_version");
  }
  SolutionFile file;
  file.instance_digest = Get<std::string>(doc, "instance_digest", "solution");
  file.solution.objective = Get<std::int64_t>(doc, "objective", "solution");
  const json& rows = doc.at("assignments");
  if (!rows.is_array()) throw FormatError("solution: assignments must be an array");
  for (const auto& a : rows) {
    RequireKeys(a, "assignment", {"flight", "belt", "start", "duration"});
    file.solution.assignments.push_back({Get<int>(a, "flight", "assignment"),
                                         Get<int>(a, "belt", "assignment"),
                                         Get<int>(a, "start", "assignment"),
                                         Get<int>(a, "duration", "assignment")});
  }
  if (doc.contains("solver")) {
    const json& s = doc.at("solver");
    RequireKeys(s, "solver",
                {"ub", "gap_percent", "nodes", "elapsed_seconds", "proven_optimal"});
    SolverMetadata meta;
    // Infinite bounds are written as null.
    meta.ub = s.at("ub").is_null() ? INFINITY : Get<double>(s, "ub", "solver");
    meta.gap_percent = s.at("gap_percent").is_null()
                           ? INFINITY
                           : Get<double>(s, "gap_percent", "solver");
    meta.nodes = Get<std::int64_t>(s, "nodes", "solver");
    meta.elapsed_seconds = Get<double>(s, "elapsed_seconds", "solver");
    meta.proven_optimal = Get<bool>(s, "proven_optimal", "solver");
    file.solver = meta;
  }
  return file;
}

std::string SerializeSolutionFile(const SolutionFile& file) {
  json doc = json::object();
  doc["format_version"] = kSolutionFormatVersion;
  doc["instance_digest"] = file.instance_digest;
  json rows = json::array();
  for (const auto& a : file.solution.assignments) {
    rows.push_back({{"flight", a.flight},
                    {"belt", a.belt},
                    {"start", a.start},
                    {"duration", a.duration}});
  }
  doc["assignments"] = std::move(rows);
  doc["objective"] = file.solution.objective;
  if (file.solver) {
    const auto& s = *file.solver;
    auto finite_or_null = [](double v) -> json {
      return std::isfinite(v) ? json(v) : json(nullptr);
    };
    doc["solver"] = {{"ub", finite_or_null(s.ub)},
                     {"gap_percent", finite_or_null(s.gap_percent)},
                     {"nodes", s.nodes},
                     {"elapsed_seconds", std::round(s.elapsed_seconds * 100.0) / 100.0},
                     {"proven_optimal", s.proven_optimal}};
  }
  return doc.dump(2) + "\n";
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace bbap
