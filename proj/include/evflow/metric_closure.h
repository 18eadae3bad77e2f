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

// Shortest paths between terminals (stations and OD nodes) and the auxiliary
// network of station copies built on top of them.

#ifndef EVFLOW_METRIC_CLOSURE_H_
#define EVFLOW_METRIC_CLOSURE_H_

#include <optional>
#include <vector>

#include "evflow/network.h"
#include "evflow/rational.h"

namespace evflow {

enum class Metric {
  kBattery,          // minimize sum of d
  kTime,             // minimize sum of ell
  kBatteryThenTime,  // lexicographic (d, ell)
  kTimeThenBattery,  // lexicographic (ell, d)
};

// Battery and time totals along one concrete path.
struct PathLength {
  Rational battery;
  Rational time;
};

class MetricClosure {
 public:
  static MetricClosure Compute(const ChargingNetwork& network, Metric metric);

  Metric metric() const { return metric_; }
  // Terminal node ids in ascending order.
  const std::vector<int>& terminals() const { return terminals_; }
  int TerminalIndex(int node) const { return terminal_index_[node]; }

  // Length of the selected shortest path from terminal `from` to any node
  // `to`; nullopt when unreachable.
  const std::optional<PathLength>& Length(int from, int to) const {
    return length_[terminal_index_[from]][to];
  }
  // Edge indices of the selected path (empty when from == to).
  std::vector<int> PathEdges(int from, int to) const;

 private:
  Metric metric_ = Metric::kBatteryThenTime;
  std::vector<int> terminals_;
  std::vector<int> terminal_index_;
  std::vector<std::vector<std::optional<PathLength>>> length_;
  std::vector<std::vector<int>> pred_edge_;
  std::vector<std::vector<int>> pred_node_;
};

struct MetricAgreementReport {
  bool holds = true;
  // First violating ordered terminal pair, when !holds.
  int from = -1;
  int to = -1;
  Rational time_along_battery_min;  // ell of the lex (d, ell) path
  Rational time_min;
  Rational battery_along_time_min;  // d of the lex (ell, d) path
  Rational battery_min;
};

// Some path between every ordered terminal pair must be minimal in both d
// and ell.
MetricAgreementReport CheckMetricAgreement(const ChargingNetwork& network);

// ---------------------------------------------------------------------------

enum class AuxKind { kCopy, kOrigin, kDestination };

struct AuxNode {
  AuxKind kind = AuxKind::kCopy;
  int node = -1;      // original network node
  int station = -1;   // kCopy
  int interval = -1;  // kCopy
  int od = -1;        // kOrigin / kDestination
  Rational lower;     // battery bounds; [L, L] at origins, [0, 0] at
  Rational upper;     // destinations
  ExtendedCost unit_cost;  // kCopy only
};

struct AuxEdge {
  int tail = -1;
  int head = -1;
  Rational battery;
  Rational time;
};

class AuxiliaryNetwork {
 public:
  // Node order: copies by (station, interval), then one origin per OD pair,
  // then one destination per OD pair.
  static AuxiliaryNetwork Build(const ChargingNetwork& network,
                                MetricClosure closure);

  const MetricClosure& closure() const { return closure_; }
  const Rational& battery_capacity() const { return capacity_; }
  int num_intervals() const { return intervals_; }

  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  const AuxNode& node(int v) const { return nodes_[v]; }
  const std::vector<AuxEdge>& edges() const { return edges_; }
  const std::vector<int>& out_edges(int v) const { return out_[v]; }
  const std::vector<int>& in_edges(int v) const { return in_[v]; }

  int Copy(int station, int interval) const {
    return station * intervals_ + interval;
  }
  int Origin(int od) const { return num_copies_ + od; }
  int Destination(int od) const { return num_copies_ + num_od_ + od; }
  int num_copies() const { return num_copies_; }
  int num_od_pairs() const { return num_od_; }

 private:
  MetricClosure closure_;
  Rational capacity_;
  int intervals_ = 0;
  int num_copies_ = 0;
  int num_od_ = 0;
  std::vector<AuxNode> nodes_;
  std::vector<AuxEdge> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

struct UnboundedPair {
  int od = -1;
  std::vector<int> path_edges;  // original-network witness with sum d <= L
};

// OD pairs whose origin reaches the destination without charging. `closure`
// must rank battery first.
std::vector<UnboundedPair> DetectUnbounded(const ChargingNetwork& network,
                                           const MetricClosure& closure);

}  // namespace evflow

#endif  // EVFLOW_METRIC_CLOSURE_H_
