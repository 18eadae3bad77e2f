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

// Charging network model: a directed road graph whose edges consume battery
// and time, a subset of nodes equipped with chargers whose speed is piecewise
// constant in the vehicle's battery level, and origin-destination pairs.
//
// Networks are read from JSON (see ParseNetworkSpec for the schema) into a
// NetworkSpec, normalized (one charger type per node, one global threshold
// grid) and validated into an immutable ChargingNetwork.

#ifndef EVFLOW_NETWORK_H_
#define EVFLOW_NETWORK_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "absl/status/statusor.h"
#include "evflow/rational.h"

namespace evflow {

struct Edge {
  int tail = 0;
  int head = 0;
  Rational battery;  // consumption d_e >= 0
  Rational time;     // travel time l_e >= 0
  std::optional<Rational> capacity;  // flow capacity u_e; nullopt = unbounded
};

// Battery thresholds 0 = a_1 < a_2 < ... < a_{J+1} = L. Interval j (0-based)
// is the half-open range [a_{j+1}, a_{j+2}); the top interval also owns L.
class ChargingCurve {
 public:
  static absl::StatusOr<ChargingCurve> Create(std::vector<Rational> thresholds);

  int num_intervals() const { return static_cast<int>(thresholds_.size()) - 1; }
  const Rational& lower(int interval) const { return thresholds_[interval]; }
  const Rational& upper(int interval) const {
    return thresholds_[interval + 1];
  }
  const Rational& capacity() const { return thresholds_.back(); }
  const std::vector<Rational>& thresholds() const { return thresholds_; }

  // Interval whose half-open range contains `battery`. Requires
  // 0 <= battery <= L.
  int IntervalOf(const Rational& battery) const;

 private:
  explicit ChargingCurve(std::vector<Rational> thresholds)
      : thresholds_(std::move(thresholds)) {}
  std::vector<Rational> thresholds_;
};

struct Station {
  int node = -1;
  int64_t chargers = 0;              // a_i
  std::vector<Rational> speeds;      // r_ij, one per interval
  std::vector<Rational> prices;      // tau_ij, per unit of battery
  Rational occupancy_price;          // rho_i, per unit of charging time

  // tau_ij + (1 + rho_i) / r_ij; +infinity at zero speed.
  ExtendedCost UnitCost(int interval) const;
};

struct OdPair {
  int origin = -1;
  int destination = -1;
  Rational demand;
};

class ChargingNetwork {
 public:
  // Validates every invariant; errors name the offending element.
  static absl::StatusOr<ChargingNetwork> Create(
      std::vector<std::string> labels, std::vector<Edge> edges,
      ChargingCurve curve, std::vector<Station> stations,
      std::vector<OdPair> od_pairs);

  int num_nodes() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int node) const { return labels_[node]; }
  std::optional<int> FindNode(std::string_view label) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& out_edges(int node) const { return out_[node]; }
  const std::vector<int>& in_edges(int node) const { return in_[node]; }

  const ChargingCurve& curve() const { return curve_; }
  const Rational& battery_capacity() const { return curve_.capacity(); }
  int num_intervals() const { return curve_.num_intervals(); }

  const std::vector<Station>& stations() const { return stations_; }
  // Index into stations(), or -1 when the node has no chargers.
  int StationIndexAt(int node) const { return station_at_[node]; }

  const std::vector<OdPair>& od_pairs() const { return od_pairs_; }

  bool HasEdgeCapacities() const;

 private:
  ChargingNetwork(std::vector<std::string> labels, std::vector<Edge> edges,
                  ChargingCurve curve, std::vector<Station> stations,
                  std::vector<OdPair> od_pairs);

  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  ChargingCurve curve_;
  std::vector<Station> stations_;
  std::vector<int> station_at_;
  std::vector<OdPair> od_pairs_;
};

// ---------------------------------------------------------------------------
// File-level description, before normalization.

struct EdgeSpec {
  std::string tail;
  std::string head;
  Rational battery;
  Rational time;
  std::optional<Rational> capacity;
};

struct StationSpec {
  std::string node;
  int64_t chargers = 0;
  std::vector<Rational> speeds;
  std::vector<Rational> prices;
  Rational occupancy_price;
  // Station-specific threshold grid; empty means the network grid.
  std::vector<Rational> thresholds;
};

struct OdSpec {
  std::string origin;
  std::string destination;
  Rational demand;
};

struct NetworkSpec {
  Rational battery_capacity;
  std::vector<Rational> thresholds;  // empty means (0, L)
  std::vector<std::string> nodes;
  std::vector<EdgeSpec> edges;
  std::vector<StationSpec> stations;  // several entries per node allowed
  std::vector<OdSpec> od_pairs;
};

// Schema (all decimals are strings such as "9", "2.5" or "7/3"):
//   {"L": "9", "thresholds": ["0", "5", "9"], "nodes": ["s", ...],
//    "edges": [{"tail": "s", "head": "i1", "d": "5", "ell": "5", "u": "1"}],
//    "stations": [{"node": "i1", "chargers": 1, "speeds": ["2", "1"],
//                  "prices": ["0", "0"], "occupancy_price": "0",
//                  "thresholds": [...]}],
//    "od_pairs": [{"s": "s", "t": "t", "demand": "1"}]}
// "u", "demand", "thresholds" (both levels) are optional. Errors carry the
// JSON location of the offending field.
absl::StatusOr<NetworkSpec> ParseNetworkSpec(std::string_view json_text);

std::string NetworkSpecToJson(const NetworkSpec& spec);

// Every charger type beyond the first at a node moves to a fresh node joined
// to the original by a zero-battery, zero-time edge in each direction.
NetworkSpec SplitChargerTypes(NetworkSpec spec);

struct MergedGrid {
  std::vector<Rational> thresholds;
  // Per station (same order as the input), speeds/prices re-expanded onto the
  // merged grid.
  std::vector<std::vector<Rational>> speeds;
  std::vector<std::vector<Rational>> prices;
};

// The merged grid is the sorted union of every station's thresholds (and
// `network_thresholds`); each station's piecewise-constant speed and price
// functions are unchanged pointwise.
absl::StatusOr<MergedGrid> MergeThresholdGrids(
    std::span<const StationSpec> stations,
    std::span<const Rational> network_thresholds,
    const Rational& battery_capacity);

// Validates `spec`, splits charger types, merges grids and builds the
// network.
absl::StatusOr<ChargingNetwork> BuildNetwork(const NetworkSpec& spec);

absl::StatusOr<ChargingNetwork> LoadNetwork(std::string_view json_text);
absl::StatusOr<ChargingNetwork> LoadNetworkFile(const std::string& path);

NetworkSpec ToSpec(const ChargingNetwork& network);

}  // namespace evflow

#endif  // EVFLOW_NETWORK_H_
