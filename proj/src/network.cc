// Copyright 2026 The evflow Authors.
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

#include "evflow/network.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "json.hpp"

namespace evflow {
namespace {

using Json = nlohmann::json;

absl::Status At(const std::string& location, const std::string& message) {
  return absl::InvalidArgumentError(absl::StrCat(location, ": ", message));
}

absl::Status CheckGrid(std::span<const Rational> grid, const Rational& capacity,
                       const std::string& location) {
  if (grid.size() < 2) {
    return At(location, "need at least two thresholds");
  }
  for (size_t k = 1; k < grid.size(); ++k) {
    if (grid[k] <= grid[k - 1]) {
      return At(location,
                absl::StrCat("non-monotone thresholds (",
                             FormatRational(grid[k - 1]), " then ",
                             FormatRational(grid[k]), " at index ", k, ")"));
    }
  }
  if (grid.front() != 0 || grid.back() != capacity) {
    return At(location, absl::StrCat("thresholds must span [0, L] = [0, ",
                                     FormatRational(capacity), "]"));
  }
  return absl::OkStatus();
}

// ---- JSON field readers ---------------------------------------------------

absl::StatusOr<const Json*> Field(const Json& object, const std::string& key,
                                  const std::string& location, bool required) {
  auto it = object.find(key);
  if (it == object.end()) {
    if (required) return At(location, absl::StrCat("missing field \"", key, "\""));
    return nullptr;
  }
  return &*it;
}

absl::StatusOr<Rational> ReadDecimal(const Json& value,
                                     const std::string& location) {
  if (value.is_string()) {
    auto parsed = ParseRational(value.get<std::string>());
    if (!parsed.ok()) return At(location, std::string(parsed.status().message()));
    return *parsed;
  }
  if (value.is_number_integer()) {
    return Rational(std::to_string(value.get<int64_t>()));
  }
  return At(location, "expected a decimal string");
}

absl::StatusOr<std::string> ReadLabel(const Json& value,
                                      const std::string& location) {
  if (!value.is_string()) return At(location, "expected a string label");
  return value.get<std::string>();
}

absl::StatusOr<std::vector<Rational>> ReadDecimalArray(
    const Json& value, const std::string& location) {
  if (!value.is_array()) return At(location, "expected an array");
  std::vector<Rational> out;
  for (size_t k = 0; k < value.size(); ++k) {
    auto r = ReadDecimal(value[k], absl::StrCat(location, "[", k, "]"));
    if (!r.ok()) return r.status();
    out.push_back(*std::move(r));
  }
  return out;
}

absl::StatusOr<int64_t> ReadCount(const Json& value,
                                  const std::string& location) {
  if (value.is_number_integer()) return value.get<int64_t>();
  if (value.is_string()) {
    auto r = ParseRational(value.get<std::string>());
    if (r.ok() && r->get_den() == 1 && r->get_num().fits_slong_p()) {
      return r->get_num().get_si();
    }
  }
  return At(location, "expected an integer");
}

#define EVFLOW_ASSIGN_OR_RETURN(lhs, expr) \
  auto lhs##_or = (expr);                  \
  if (!lhs##_or.ok()) return lhs##_or.status(); \
  auto lhs = *std::move(lhs##_or)

Json DecimalArray(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const Rational& v : values) out.push_back(FormatRational(v));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

absl::StatusOr<ChargingCurve> ChargingCurve::Create(
    std::vector<Rational> thresholds) {
  if (thresholds.size() < 2) {
    return At("thresholds", "need at least two thresholds");
  }
  if (absl::Status s = CheckGrid(thresholds, thresholds.back(), "thresholds");
      !s.ok()) {
    return s;
  }
  if (thresholds.back() <= 0) {
    return At("L", "battery capacity must be positive");
  }
  return ChargingCurve(std::move(thresholds));
}

int ChargingCurve::IntervalOf(const Rational& battery) const {
  auto it = std::upper_bound(thresholds_.begin(), thresholds_.end(), battery);
  int j = static_cast<int>(it - thresholds_.begin()) - 1;
  return std::clamp(j, 0, num_intervals() - 1);
}

ExtendedCost Station::UnitCost(int interval) const {
  const Rational& r = speeds[interval];
  if (sgn(r) == 0) return std::nullopt;
  return Rational(prices[interval] + (1 + occupancy_price) / r);
}

// ---------------------------------------------------------------------------

ChargingNetwork::ChargingNetwork(std::vector<std::string> labels,
                                 std::vector<Edge> edges, ChargingCurve curve,
                                 std::vector<Station> stations,
                                 std::vector<OdPair> od_pairs)
    : labels_(std::move(labels)),
      edges_(std::move(edges)),
      curve_(std::move(curve)),
      stations_(std::move(stations)),
      od_pairs_(std::move(od_pairs)) {
  for (int v = 0; v < num_nodes(); ++v) index_[labels_[v]] = v;
  out_.resize(labels_.size());
  in_.resize(labels_.size());
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    out_[edges_[e].tail].push_back(e);
    in_[edges_[e].head].push_back(e);
  }
  station_at_.assign(labels_.size(), -1);
  for (int i = 0; i < static_cast<int>(stations_.size()); ++i) {
    station_at_[stations_[i].node] = i;
  }
}

absl::StatusOr<ChargingNetwork> ChargingNetwork::Create(
    std::vector<std::string> labels, std::vector<Edge> edges,
    ChargingCurve curve, std::vector<Station> stations,
    std::vector<OdPair> od_pairs) {
  const int n = static_cast<int>(labels.size());
  std::set<std::string> seen;
  for (int v = 0; v < n; ++v) {
    if (labels[v].empty()) return At(absl::StrCat("nodes[", v, "]"), "empty label");
    if (!seen.insert(labels[v]).second) {
      return At(absl::StrCat("nodes[", v, "]"),
                absl::StrCat("duplicate label \"", labels[v], "\""));
    }
  }
  for (size_t e = 0; e < edges.size(); ++e) {
    const Edge& edge = edges[e];
    std::string loc = absl::StrCat("edges[", e, "]");
    if (edge.tail < 0 || edge.tail >= n || edge.head < 0 || edge.head >= n) {
      return At(loc, "dangling edge endpoint");
    }
    if (edge.battery < 0) return At(loc + ".d", "must be >= 0");
    if (edge.time < 0) return At(loc + ".ell", "must be >= 0");
    if (edge.capacity && *edge.capacity < 0) return At(loc + ".u", "must be >= 0");
  }
  const int intervals = curve.num_intervals();
  std::vector<int> owner(n, -1);
  for (size_t i = 0; i < stations.size(); ++i) {
    const Station& st = stations[i];
    std::string loc = absl::StrCat("stations[", i, "]");
    if (st.node < 0 || st.node >= n) return At(loc, "unknown node");
    if (owner[st.node] >= 0) {
      return At(loc, absl::StrCat("second station at node \"", labels[st.node],
                                  "\" (split charger types first)"));
    }
    owner[st.node] = static_cast<int>(i);
    if (st.chargers < 0) return At(loc + ".chargers", "must be >= 0");
    if (static_cast<int>(st.speeds.size()) != intervals) {
      return At(loc + ".speeds", absl::StrCat("expected ", intervals, " values"));
    }
    if (static_cast<int>(st.prices.size()) != intervals) {
      return At(loc + ".prices", absl::StrCat("expected ", intervals, " values"));
    }
    for (int j = 0; j < intervals; ++j) {
      if (st.speeds[j] < 0) return At(absl::StrCat(loc, ".speeds[", j, "]"), "must be >= 0");
      if (st.prices[j] < 0) return At(absl::StrCat(loc, ".prices[", j, "]"), "must be >= 0");
    }
    if (st.occupancy_price < 0) return At(loc + ".occupancy_price", "must be >= 0");
  }
  for (size_t k = 0; k < od_pairs.size(); ++k) {
    const OdPair& od = od_pairs[k];
    std::string loc = absl::StrCat("od_pairs[", k, "]");
    if (od.origin < 0 || od.origin >= n || od.destination < 0 ||
        od.destination >= n) {
      return At(loc, "unknown node");
    }
    if (od.origin == od.destination) return At(loc, "origin equals destination");
    for (int v : {od.origin, od.destination}) {
      if (owner[v] >= 0) {
        return At(loc, absl::StrCat("station at OD node \"", labels[v], "\""));
      }
    }
    if (od.demand < 0) return At(loc + ".demand", "must be >= 0");
  }
  return ChargingNetwork(std::move(labels), std::move(edges), std::move(curve),
                         std::move(stations), std::move(od_pairs));
}

std::optional<int> ChargingNetwork::FindNode(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool ChargingNetwork::HasEdgeCapacities() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.capacity.has_value(); });
}

// ---------------------------------------------------------------------------

absl::StatusOr<NetworkSpec> ParseNetworkSpec(std::string_view json_text) {
  Json root;
  try {
    root = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    return absl::InvalidArgumentError(absl::StrCat("invalid JSON: ", e.what()));
  }
  if (!root.is_object()) return At("$", "expected a JSON object");

  NetworkSpec spec;
  EVFLOW_ASSIGN_OR_RETURN(capacity_field, Field(root, "L", "$", true));
  EVFLOW_ASSIGN_OR_RETURN(capacity, ReadDecimal(*capacity_field, "L"));
  spec.battery_capacity = capacity;

  EVFLOW_ASSIGN_OR_RETURN(thresholds_field, Field(root, "thresholds", "$", false));
  if (thresholds_field != nullptr) {
    EVFLOW_ASSIGN_OR_RETURN(grid, ReadDecimalArray(*thresholds_field, "thresholds"));
    spec.thresholds = std::move(grid);
  }

  EVFLOW_ASSIGN_OR_RETURN(nodes_field, Field(root, "nodes", "$", true));
  if (!nodes_field->is_array()) return At("nodes", "expected an array");
  for (size_t v = 0; v < nodes_field->size(); ++v) {
    EVFLOW_ASSIGN_OR_RETURN(label, ReadLabel((*nodes_field)[v], absl::StrCat("nodes[", v, "]")));
    spec.nodes.push_back(std::move(label));
  }

  EVFLOW_ASSIGN_OR_RETURN(edges_field, Field(root, "edges", "$", true));
  if (!edges_field->is_array()) return At("edges", "expected an array");
  for (size_t e = 0; e < edges_field->size(); ++e) {
    const Json& item = (*edges_field)[e];
    std::string loc = absl::StrCat("edges[", e, "]");
    if (!item.is_object()) return At(loc, "expected an object");
    EdgeSpec edge;
    EVFLOW_ASSIGN_OR_RETURN(tail_f, Field(item, "tail", loc, true));
    EVFLOW_ASSIGN_OR_RETURN(tail, ReadLabel(*tail_f, loc + ".tail"));
    EVFLOW_ASSIGN_OR_RETURN(head_f, Field(item, "head", loc, true));
    EVFLOW_ASSIGN_OR_RETURN(head, ReadLabel(*head_f, loc + ".head"));
    EVFLOW_ASSIGN_OR_RETURN(d_f, Field(item, "d", loc, true));
    EVFLOW_ASSIGN_OR_RETURN(d, ReadDecimal(*d_f, loc + ".d"));
    EVFLOW_ASSIGN_OR_RETURN(ell_f, Field(item, "ell", loc, true));
    EVFLOW_ASSIGN_OR_RETURN(ell, ReadDecimal(*ell_f, loc + ".ell"));
    EVFLOW_ASSIGN_OR_RETURN(u_f, Field(item, "u", loc, false));
    edge.tail = tail;
    edge.head = head;
    edge.battery = d;
    edge.time = ell;
    if (u_f != nullptr && !u_f->is_null()) {
      EVFLOW_ASSIGN_OR_RETURN(u, ReadDecimal(*u_f, loc + ".u"));
      edge.capacity = u;
    }
    spec.edges.push_back(std::move(edge));
  }

  EVFLOW_ASSIGN_OR_RETURN(stations_field, Field(root, "stations", "$", false));
  if (stations_field != nullptr) {
    if (!stations_field->is_array()) return At("stations", "expected an array");
    for (size_t i = 0; i < stations_field->size(); ++i) {
      const Json& item = (*stations_field)[i];
      std::string loc = absl::StrCat("stations[", i, "]");
      if (!item.is_object()) return At(loc, "expected an object");
      StationSpec st;
      EVFLOW_ASSIGN_OR_RETURN(node_f, Field(item, "node", loc, true));
      EVFLOW_ASSIGN_OR_RETURN(node, ReadLabel(*node_f, loc + ".node"));
      EVFLOW_ASSIGN_OR_RETURN(chargers_f, Field(item, "chargers", loc, true));
      EVFLOW_ASSIGN_OR_RETURN(chargers, ReadCount(*chargers_f, loc + ".chargers"));
      EVFLOW_ASSIGN_OR_RETURN(speeds_f, Field(item, "speeds", loc, true));
      EVFLOW_ASSIGN_OR_RETURN(speeds, ReadDecimalArray(*speeds_f, loc + ".speeds"));
      EVFLOW_ASSIGN_OR_RETURN(prices_f, Field(item, "prices", loc, true));
      EVFLOW_ASSIGN_OR_RETURN(prices, ReadDecimalArray(*prices_f, loc + ".prices"));
      EVFLOW_ASSIGN_OR_RETURN(rho_f, Field(item, "occupancy_price", loc, true));
      EVFLOW_ASSIGN_OR_RETURN(rho, ReadDecimal(*rho_f, loc + ".occupancy_price"));
      EVFLOW_ASSIGN_OR_RETURN(grid_f, Field(item, "thresholds", loc, false));
      if (grid_f != nullptr) {
        EVFLOW_ASSIGN_OR_RETURN(grid, ReadDecimalArray(*grid_f, loc + ".thresholds"));
        st.thresholds = std::move(grid);
      }
      st.node = node;
      st.chargers = chargers;
      st.speeds = std::move(speeds);
      st.prices = std::move(prices);
      st.occupancy_price = rho;
      spec.stations.push_back(std::move(st));
    }
  }

  EVFLOW_ASSIGN_OR_RETURN(od_field, Field(root, "od_pairs", "$", false));
  if (od_field != nullptr) {
    if (!od_field->is_array()) return At("od_pairs", "expected an array");
    for (size_t k = 0; k < od_field->size(); ++k) {
      const Json& item = (*od_field)[k];
      std::string loc = absl::StrCat("od_pairs[", k, "]");
      if (!item.is_object()) return At(loc, "expected an object");
      OdSpec od;
      EVFLOW_ASSIGN_OR_RETURN(s_f, Field(item, "s", loc, true));
      EVFLOW_ASSIGN_OR_RETURN(s, ReadLabel(*s_f, loc + ".s"));
      EVFLOW_ASSIGN_OR_RETURN(t_f, Field(item, "t", loc, true));
      EVFLOW_ASSIGN_OR_RETURN(t, ReadLabel(*t_f, loc + ".t"));
      EVFLOW_ASSIGN_OR_RETURN(demand_f, Field(item, "demand", loc, false));
      od.origin = s;
      od.destination = t;
      if (demand_f != nullptr) {
        EVFLOW_ASSIGN_OR_RETURN(demand, ReadDecimal(*demand_f, loc + ".demand"));
        od.demand = demand;
      }
      spec.od_pairs.push_back(std::move(od));
    }
  }
  return spec;
}

std::string NetworkSpecToJson(const NetworkSpec& spec) {
  Json root;
  root["L"] = FormatRational(spec.battery_capacity);
  if (!spec.thresholds.empty()) root["thresholds"] = DecimalArray(spec.thresholds);
  root["nodes"] = spec.nodes;
  root["edges"] = Json::array();
  for (const EdgeSpec& e : spec.edges) {
    Json item = {{"tail", e.tail},
                 {"head", e.head},
                 {"d", FormatRational(e.battery)},
                 {"ell", FormatRational(e.time)}};
    if (e.capacity) item["u"] = FormatRational(*e.capacity);
    root["edges"].push_back(std::move(item));
  }
  root["stations"] = Json::array();
  for (const StationSpec& s : spec.stations) {
    Json item = {{"node", s.node},
                 {"chargers", s.chargers},
                 {"speeds", DecimalArray(s.speeds)},
                 {"prices", DecimalArray(s.prices)},
                 {"occupancy_price", FormatRational(s.occupancy_price)}};
    if (!s.thresholds.empty()) item["thresholds"] = DecimalArray(s.thresholds);
    root["stations"].push_back(std::move(item));
  }
  root["od_pairs"] = Json::array();
  for (const OdSpec& od : spec.od_pairs) {
    root["od_pairs"].push_back({{"s", od.origin},
                                {"t", od.destination},
                                {"demand", FormatRational(od.demand)}});
  }
  return root.dump(2) + "\n";
}

NetworkSpec SplitChargerTypes(NetworkSpec spec) {
  std::set<std::string> used(spec.nodes.begin(), spec.nodes.end());
  std::map<std::string, int> seen_at;
  for (StationSpec& station : spec.stations) {
    int count = ++seen_at[station.node];
    if (count == 1) continue;
    std::string base = station.node;
    std::string fresh = absl::StrCat(base, "#", count);
    while (used.count(fresh) > 0) fresh += "#";
    used.insert(fresh);
    spec.nodes.push_back(fresh);
    spec.edges.push_back({base, fresh, Rational(0), Rational(0), std::nullopt});
    spec.edges.push_back({fresh, base, Rational(0), Rational(0), std::nullopt});
    station.node = fresh;
  }
  return spec;
}

absl::StatusOr<MergedGrid> MergeThresholdGrids(
    std::span<const StationSpec> stations,
    std::span<const Rational> network_thresholds,
    const Rational& battery_capacity) {
  std::vector<Rational> default_grid(network_thresholds.begin(),
                                     network_thresholds.end());
  if (default_grid.empty()) default_grid = {Rational(0), battery_capacity};
  if (absl::Status s = CheckGrid(default_grid, battery_capacity, "thresholds");
      !s.ok()) {
    return s;
  }

  std::set<Rational> merged(default_grid.begin(), default_grid.end());
  for (size_t i = 0; i < stations.size(); ++i) {
    const std::vector<Rational>& own =
        stations[i].thresholds.empty() ? default_grid : stations[i].thresholds;
    if (absl::Status s = CheckGrid(own, battery_capacity,
                                   absl::StrCat("stations[", i, "].thresholds"));
        !s.ok()) {
      return s;
    }
    merged.insert(own.begin(), own.end());
  }

  MergedGrid out;
  out.thresholds.assign(merged.begin(), merged.end());
  for (size_t i = 0; i < stations.size(); ++i) {
    const StationSpec& st = stations[i];
    const std::vector<Rational>& own =
        st.thresholds.empty() ? default_grid : st.thresholds;
    const size_t own_intervals = own.size() - 1;
    std::string loc = absl::StrCat("stations[", i, "]");
    if (st.speeds.size() != own_intervals) {
      return At(loc + ".speeds", absl::StrCat("expected ", own_intervals, " values"));
    }
    if (st.prices.size() != own_intervals) {
      return At(loc + ".prices", absl::StrCat("expected ", own_intervals, " values"));
    }
    std::vector<Rational> speeds, prices;
    for (size_t m = 0; m + 1 < out.thresholds.size(); ++m) {
      // Locate the station's own interval containing the merged interval's
      // left end (half-open intervals).
      auto it = std::upper_bound(own.begin(), own.end(), out.thresholds[m]);
      size_t j = static_cast<size_t>(it - own.begin()) - 1;
      speeds.push_back(st.speeds[j]);
      prices.push_back(st.prices[j]);
    }
    out.speeds.push_back(std::move(speeds));
    out.prices.push_back(std::move(prices));
  }
  return out;
}

absl::StatusOr<ChargingNetwork> BuildNetwork(const NetworkSpec& input) {
  if (input.battery_capacity <= 0) {
    return At("L", "battery capacity must be positive");
  }
  if (!input.thresholds.empty()) {
    if (absl::Status s =
            CheckGrid(input.thresholds, input.battery_capacity, "thresholds");
        !s.ok()) {
      return s;
    }
  }
  std::set<std::string> station_nodes;
  for (const StationSpec& st : input.stations) station_nodes.insert(st.node);
  for (size_t k = 0; k < input.od_pairs.size(); ++k) {
    const OdSpec& od = input.od_pairs[k];
    for (const std::string& v : {od.origin, od.destination}) {
      if (station_nodes.count(v) > 0) {
        return At(absl::StrCat("od_pairs[", k, "]"),
                  absl::StrCat("station at OD node \"", v, "\""));
      }
    }
  }

  NetworkSpec spec = SplitChargerTypes(input);
  EVFLOW_ASSIGN_OR_RETURN(grid, MergeThresholdGrids(spec.stations, spec.thresholds,
                                                    spec.battery_capacity));
  EVFLOW_ASSIGN_OR_RETURN(curve, ChargingCurve::Create(grid.thresholds));

  std::map<std::string, int> index;
  for (size_t v = 0; v < spec.nodes.size(); ++v) {
    if (!index.emplace(spec.nodes[v], static_cast<int>(v)).second) {
      return At(absl::StrCat("nodes[", v, "]"),
                absl::StrCat("duplicate label \"", spec.nodes[v], "\""));
    }
  }
  auto lookup = [&](const std::string& label,
                    const std::string& loc) -> absl::StatusOr<int> {
    auto it = index.find(label);
    if (it == index.end()) {
      return At(loc, absl::StrCat("unknown node \"", label, "\""));
    }
    return it->second;
  };

  std::vector<Edge> edges;
  for (size_t e = 0; e < spec.edges.size(); ++e) {
    const EdgeSpec& es = spec.edges[e];
    std::string loc = absl::StrCat("edges[", e, "]");
    EVFLOW_ASSIGN_OR_RETURN(tail, lookup(es.tail, loc + ".tail"));
    EVFLOW_ASSIGN_OR_RETURN(head, lookup(es.head, loc + ".head"));
    edges.push_back({tail, head, es.battery, es.time, es.capacity});
  }
  std::vector<Station> stations;
  for (size_t i = 0; i < spec.stations.size(); ++i) {
    const StationSpec& ss = spec.stations[i];
    EVFLOW_ASSIGN_OR_RETURN(node, lookup(ss.node, absl::StrCat("stations[", i, "].node")));
    stations.push_back({node, ss.chargers, grid.speeds[i], grid.prices[i],
                        ss.occupancy_price});
  }
  std::vector<OdPair> od_pairs;
  for (size_t k = 0; k < spec.od_pairs.size(); ++k) {
    const OdSpec& os = spec.od_pairs[k];
    std::string loc = absl::StrCat("od_pairs[", k, "]");
    EVFLOW_ASSIGN_OR_RETURN(s, lookup(os.origin, loc + ".s"));
    EVFLOW_ASSIGN_OR_RETURN(t, lookup(os.destination, loc + ".t"));
    od_pairs.push_back({s, t, os.demand});
  }
  return ChargingNetwork::Create(spec.nodes, std::move(edges), std::move(curve),
                                 std::move(stations), std::move(od_pairs));
}

absl::StatusOr<ChargingNetwork> LoadNetwork(std::string_view json_text) {
  EVFLOW_ASSIGN_OR_RETURN(spec, ParseNetworkSpec(json_text));
  return BuildNetwork(spec);
}

absl::StatusOr<ChargingNetwork> LoadNetworkFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return LoadNetwork(buffer.str());
}

NetworkSpec ToSpec(const ChargingNetwork& network) {
  NetworkSpec spec;
  spec.battery_capacity = network.battery_capacity();
  spec.thresholds = network.curve().thresholds();
  for (int v = 0; v < network.num_nodes(); ++v) spec.nodes.push_back(network.label(v));
  for (const Edge& e : network.edges()) {
    spec.edges.push_back({network.label(e.tail), network.label(e.head),
                          e.battery, e.time, e.capacity});
  }
  for (const Station& st : network.stations()) {
    spec.stations.push_back({network.label(st.node), st.chargers, st.speeds,
                             st.prices, st.occupancy_price, {}});
  }
  for (const OdPair& od : network.od_pairs()) {
    spec.od_pairs.push_back({network.label(od.origin),
                             network.label(od.destination), od.demand});
  }
  return spec;
}

}  // namespace evflow
