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

#include "evflow/metric_closure.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <utility>

namespace evflow {
namespace {

using Key = std::pair<Rational, Rational>;

Key KeyOf(Metric metric, const PathLength& p) {
  switch (metric) {
    case Metric::kBattery:
      return {p.battery, Rational(0)};
    case Metric::kTime:
      return {p.time, Rational(0)};
    case Metric::kBatteryThenTime:
      return {p.battery, p.time};
    case Metric::kTimeThenBattery:
      return {p.time, p.battery};
  }
  return {};
}

struct Tree {
  std::vector<std::optional<PathLength>> length;
  std::vector<int> pred_edge;
  std::vector<int> pred_node;
};

Tree ShortestPathTree(const ChargingNetwork& network, Metric metric,
                      int source) {
  const int n = network.num_nodes();
  Tree tree;
  tree.length.assign(n, std::nullopt);
  tree.pred_edge.assign(n, -1);
  tree.pred_node.assign(n, -1);
  std::vector<bool> settled(n, false);
  using Item = std::pair<Key, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  tree.length[source] = PathLength{Rational(0), Rational(0)};
  heap.push({Key{0, 0}, source});
  while (!heap.empty()) {
    auto [key, u] = heap.top();
    heap.pop();
    if (settled[u]) continue;
    settled[u] = true;
    for (int e : network.out_edges(u)) {
      const Edge& edge = network.edges()[e];
      int v = edge.head;
      if (settled[v]) continue;
      PathLength cand{tree.length[u]->battery + edge.battery,
                      tree.length[u]->time + edge.time};
      Key cand_key = KeyOf(metric, cand);
      bool better = false;
      if (!tree.length[v]) {
        better = true;
      } else {
        Key old_key = KeyOf(metric, *tree.length[v]);
        if (cand_key < old_key) {
          better = true;
        } else if (cand_key == old_key) {
          const Edge& old = network.edges()[tree.pred_edge[v]];
          better = u < old.tail || (u == old.tail && e < tree.pred_edge[v]);
        }
      }
      if (better) {
        tree.length[v] = cand;
        tree.pred_edge[v] = e;
        tree.pred_node[v] = u;
        heap.push({cand_key, v});
      }
    }
  }
  return tree;
}

}  // namespace

MetricClosure MetricClosure::Compute(const ChargingNetwork& network,
                                     Metric metric) {
  MetricClosure mc;
  mc.metric_ = metric;
  std::set<int> terminals;
  for (const Station& st : network.stations()) terminals.insert(st.node);
  for (const OdPair& od : network.od_pairs()) {
    terminals.insert(od.origin);
    terminals.insert(od.destination);
  }
  mc.terminals_.assign(terminals.begin(), terminals.end());
  mc.terminal_index_.assign(network.num_nodes(), -1);
  for (size_t k = 0; k < mc.terminals_.size(); ++k) {
    mc.terminal_index_[mc.terminals_[k]] = static_cast<int>(k);
    Tree tree = ShortestPathTree(network, metric, mc.terminals_[k]);
    mc.length_.push_back(std::move(tree.length));
    mc.pred_edge_.push_back(std::move(tree.pred_edge));
    mc.pred_node_.push_back(std::move(tree.pred_node));
  }
  return mc;
}

std::vector<int> MetricClosure::PathEdges(int from, int to) const {
  const int source = terminal_index_[from];
  std::vector<int> path;
  if (!length_[source][to]) return path;
  for (int v = to; v != from;) {
    path.push_back(pred_edge_[source][v]);
    v = pred_node_[source][v];
  }
  std::reverse(path.begin(), path.end());
  return path;
}

MetricAgreementReport CheckMetricAgreement(const ChargingNetwork& network) {
  MetricClosure by_battery =
      MetricClosure::Compute(network, Metric::kBatteryThenTime);
  MetricClosure by_time =
      MetricClosure::Compute(network, Metric::kTimeThenBattery);
  MetricAgreementReport report;
  for (int from : by_battery.terminals()) {
    for (int to : by_battery.terminals()) {
      if (from == to) continue;
      const auto& b = by_battery.Length(from, to);
      const auto& t = by_time.Length(from, to);
      if (!b || !t) continue;
      if (b->time != t->time || b->battery != t->battery) {
        report.holds = false;
        report.from = from;
        report.to = to;
        report.time_along_battery_min = b->time;
        report.time_min = t->time;
        report.battery_along_time_min = t->battery;
        report.battery_min = b->battery;
        return report;
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

AuxiliaryNetwork AuxiliaryNetwork::Build(const ChargingNetwork& network,
                                         MetricClosure closure) {
  AuxiliaryNetwork aux;
  aux.closure_ = std::move(closure);
  aux.capacity_ = network.battery_capacity();
  aux.intervals_ = network.num_intervals();
  const int num_stations = static_cast<int>(network.stations().size());
  aux.num_copies_ = num_stations * aux.intervals_;
  aux.num_od_ = static_cast<int>(network.od_pairs().size());
  const ChargingCurve& curve = network.curve();
  const Rational& L = aux.capacity_;

  for (int i = 0; i < num_stations; ++i) {
    const Station& st = network.stations()[i];
    for (int j = 0; j < aux.intervals_; ++j) {
      aux.nodes_.push_back({AuxKind::kCopy, st.node, i, j, -1, curve.lower(j),
                            curve.upper(j), st.UnitCost(j)});
    }
  }
  for (int k = 0; k < aux.num_od_; ++k) {
    aux.nodes_.push_back({AuxKind::kOrigin, network.od_pairs()[k].origin, -1,
                          -1, k, L, L, std::nullopt});
  }
  for (int k = 0; k < aux.num_od_; ++k) {
    aux.nodes_.push_back({AuxKind::kDestination,
                          network.od_pairs()[k].destination, -1, -1, k,
                          Rational(0), Rational(0), std::nullopt});
  }
  aux.out_.resize(aux.nodes_.size());
  aux.in_.resize(aux.nodes_.size());

  const MetricClosure& mc = aux.closure_;
  auto add = [&](int tail, int head, const Rational& d, const Rational& ell) {
    aux.out_[tail].push_back(static_cast<int>(aux.edges_.size()));
    aux.in_[head].push_back(static_cast<int>(aux.edges_.size()));
    aux.edges_.push_back({tail, head, d, ell});
  };
  auto in_range = [&](int from, int to) -> const std::optional<PathLength>* {
    const auto& len = mc.Length(from, to);
    if (!len || len->battery > L) return nullptr;
    return &len;
  };

  for (int a = 0; a < aux.num_copies_; ++a) {
    const AuxNode& u = aux.nodes_[a];
    for (int b = 0; b < aux.num_copies_; ++b) {
      const AuxNode& v = aux.nodes_[b];
      if (u.station == v.station) {
        if (u.interval != v.interval) add(a, b, Rational(0), Rational(0));
        continue;
      }
      if (const auto* len = in_range(u.node, v.node)) {
        add(a, b, (*len)->battery, (*len)->time);
      }
    }
    for (int k = 0; k < aux.num_od_; ++k) {
      if (const auto* len =
              in_range(u.node, network.od_pairs()[k].destination)) {
        add(a, aux.Destination(k), (*len)->battery, (*len)->time);
      }
    }
  }
  for (int k = 0; k < aux.num_od_; ++k) {
    const OdPair& od = network.od_pairs()[k];
    for (int b = 0; b < aux.num_copies_; ++b) {
      if (const auto* len = in_range(od.origin, aux.nodes_[b].node)) {
        add(aux.Origin(k), b, (*len)->battery, (*len)->time);
      }
    }
    if (const auto* len = in_range(od.origin, od.destination)) {
      add(aux.Origin(k), aux.Destination(k), (*len)->battery, (*len)->time);
    }
  }
  return aux;
}

std::vector<UnboundedPair> DetectUnbounded(const ChargingNetwork& network,
                                           const MetricClosure& closure) {
  std::vector<UnboundedPair> out;
  for (int k = 0; k < static_cast<int>(network.od_pairs().size()); ++k) {
    const OdPair& od = network.od_pairs()[k];
    const auto& len = closure.Length(od.origin, od.destination);
    if (len && len->battery <= network.battery_capacity()) {
      out.push_back({k, closure.PathEdges(od.origin, od.destination)});
    }
  }
  return out;
}

}  // namespace evflow
