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

#include "evflow/charge_augment.h"

#include <algorithm>
#include <deque>
#include <set>

#include "absl/strings/str_cat.h"

namespace evflow {
namespace {

std::vector<Rational> Sorted(const std::set<Rational>& values) {
  return std::vector<Rational>(values.begin(), values.end());
}

bool Contains(const std::vector<Rational>& sorted, const Rational& value) {
  return std::binary_search(sorted.begin(), sorted.end(), value);
}

}  // namespace

LevelSets ComputeLevelSets(const AuxiliaryNetwork& aux) {
  LevelSets sets;
  sets.in.resize(aux.num_nodes());
  sets.out.resize(aux.num_nodes());
  for (int v = 0; v < aux.num_copies(); ++v) {
    const AuxNode& copy = aux.node(v);
    std::set<Rational> in = {copy.lower};
    std::set<Rational> out = {copy.upper};
    for (int e : aux.in_edges(v)) {
      const AuxEdge& edge = aux.edges()[e];
      // Origins behave as a copy whose upper bound is L.
      Rational level = aux.node(edge.tail).upper - edge.battery;
      if (level >= copy.lower && level <= copy.upper) in.insert(level);
    }
    for (int e : aux.out_edges(v)) {
      const AuxEdge& edge = aux.edges()[e];
      // Destinations behave as a copy whose lower bound is 0.
      Rational level = aux.node(edge.head).lower + edge.battery;
      if (level >= copy.lower && level <= copy.upper) out.insert(level);
    }
    sets.in[v] = Sorted(in);
    sets.out[v] = Sorted(out);
  }
  return sets;
}

AugmentedGraph AugmentedGraph::Build(const AuxiliaryNetwork& aux,
                                     const LevelSets& sets) {
  AugmentedGraph g;
  const int num_aux = aux.num_nodes();
  g.first_of_aux_.assign(num_aux, 0);
  g.count_of_aux_.assign(num_aux, 0);
  for (int v = 0; v < num_aux; ++v) {
    const AuxNode& a = aux.node(v);
    g.first_of_aux_[v] = g.num_nodes();
    if (a.kind == AuxKind::kCopy) {
      std::set<Rational> levels(sets.in[v].begin(), sets.in[v].end());
      levels.insert(sets.out[v].begin(), sets.out[v].end());
      for (const Rational& b : levels) g.nodes_.push_back({v, b});
    } else {
      g.nodes_.push_back({v, a.kind == AuxKind::kOrigin ? a.upper : a.lower});
      if (a.kind == AuxKind::kOrigin) {
        g.origin_.push_back(g.num_nodes() - 1);
      } else {
        g.destination_.push_back(g.num_nodes() - 1);
      }
    }
    g.count_of_aux_[v] = g.num_nodes() - g.first_of_aux_[v];
  }
  g.out_.resize(g.nodes_.size());
  g.in_.resize(g.nodes_.size());
  auto add = [&](AugEdge edge) {
    g.out_[edge.tail].push_back(static_cast<int>(g.edges_.size()));
    g.in_[edge.head].push_back(static_cast<int>(g.edges_.size()));
    g.edges_.push_back(std::move(edge));
  };

  for (int v = 0; v < aux.num_copies(); ++v) {
    const AuxNode& copy = aux.node(v);
    const int first = g.first_of_aux_[v];
    for (int k = 1; k < g.count_of_aux_[v]; ++k) {
      AugEdge edge;
      edge.tail = first + k - 1;
      edge.head = first + k;
      edge.type = AugEdgeType::kCharge;
      edge.lambda = g.nodes_[edge.head].battery - g.nodes_[edge.tail].battery;
      if (copy.unit_cost) edge.cost = *copy.unit_cost * edge.lambda;
      edge.copy = v;
      add(std::move(edge));
    }
    if (copy.interval + 1 < aux.num_intervals()) {
      int next = aux.Copy(copy.station, copy.interval + 1);
      AugEdge edge;
      edge.tail = *g.Find(v, copy.upper);
      edge.head = *g.Find(next, aux.node(next).lower);
      edge.type = AugEdgeType::kChain;
      edge.cost = Rational(0);
      edge.copy = v;
      add(std::move(edge));
    }
  }

  for (int e = 0; e < static_cast<int>(aux.edges().size()); ++e) {
    const AuxEdge& ae = aux.edges()[e];
    const AuxNode& from = aux.node(ae.tail);
    const AuxNode& to = aux.node(ae.head);
    if (from.kind == AuxKind::kCopy && to.kind == AuxKind::kCopy &&
        from.station == to.station) {
      continue;
    }
    if (from.kind == AuxKind::kOrigin && to.kind == AuxKind::kDestination &&
        from.od != to.od) {
      continue;
    }
    std::vector<Rational> departures =
        from.kind == AuxKind::kCopy ? sets.out[ae.tail]
                                    : std::vector<Rational>{from.upper};
    for (const Rational& b_out : departures) {
      Rational b_in = b_out - ae.battery;
      bool ok = to.kind == AuxKind::kCopy ? Contains(sets.in[ae.head], b_in)
                                          : b_in == to.lower;
      if (!ok) continue;
      AugEdge edge;
      edge.tail = *g.Find(ae.tail, b_out);
      edge.head = *g.Find(ae.head, b_in);
      edge.type = AugEdgeType::kTravel;
      edge.battery = ae.battery;
      edge.time = ae.time;
      edge.cost = ae.time;
      edge.aux_edge = e;
      add(std::move(edge));
    }
  }
  return g;
}

std::optional<int> AugmentedGraph::Find(int aux_node,
                                        const Rational& battery) const {
  auto begin = nodes_.begin() + first_of_aux_[aux_node];
  auto end = begin + count_of_aux_[aux_node];
  auto it = std::lower_bound(
      begin, end, battery,
      [](const AugNode& n, const Rational& b) { return n.battery < b; });
  if (it == end || it->battery != battery) return std::nullopt;
  return static_cast<int>(it - nodes_.begin());
}

std::vector<int> AugmentedGraph::UnreachableOdPairs() const {
  std::vector<int> out;
  for (int k = 0; k < num_od_pairs(); ++k) {
    std::vector<bool> seen(nodes_.size(), false);
    std::deque<int> queue = {origin_[k]};
    seen[origin_[k]] = true;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int e : out_[u]) {
        int v = edges_[e].head;
        if (!seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
      }
    }
    if (!seen[destination_[k]]) out.push_back(k);
  }
  return out;
}

std::string AugNodeLabel(const ChargingNetwork& network,
                         const AuxiliaryNetwork& aux, const AugNode& node) {
  const AuxNode& a = aux.node(node.aux);
  if (a.kind == AuxKind::kCopy) {
    return absl::StrCat("(", network.label(a.node), ",", a.interval + 1, ",",
                        FormatRational(node.battery), ")");
  }
  return absl::StrCat("(", network.label(a.node), ",",
                      FormatRational(node.battery), ")");
}

}  // namespace evflow
