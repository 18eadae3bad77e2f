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

// The charge-augmented network: one node per (station copy, battery level)
// reachable by an extreme charging strategy, plus (s_k, L) and (t_k, 0).
// Paths from (s_k, L) to (t_k, 0) are exactly the extreme strategies.

#ifndef EVFLOW_CHARGE_AUGMENT_H_
#define EVFLOW_CHARGE_AUGMENT_H_

#include <optional>
#include <string>
#include <vector>

#include "evflow/metric_closure.h"
#include "evflow/network.h"
#include "evflow/rational.h"

namespace evflow {

// Sorted arrival and departure levels for every copy of the auxiliary
// network (indexed by aux node; empty for OD nodes).
struct LevelSets {
  std::vector<std::vector<Rational>> in;
  std::vector<std::vector<Rational>> out;
};

LevelSets ComputeLevelSets(const AuxiliaryNetwork& aux);

enum class AugEdgeType {
  kCharge,  // type I: charge lambda inside a copy
  kChain,   // type II: top of copy j to bottom of copy j+1
  kTravel,  // type III: drive along an auxiliary edge
};

struct AugNode {
  int aux = -1;  // auxiliary node
  Rational battery;
};

struct AugEdge {
  int tail = -1;
  int head = -1;
  AugEdgeType type = AugEdgeType::kTravel;
  Rational lambda;   // charge amount (kCharge)
  Rational battery;  // d (kTravel)
  Rational time;     // ell (kTravel)
  ExtendedCost cost;  // gamma per unit of flow; nullopt = +infinity
  int copy = -1;      // aux copy of the tail (kCharge, kChain)
  int aux_edge = -1;  // kTravel
};

class AugmentedGraph {
 public:
  static AugmentedGraph Build(const AuxiliaryNetwork& aux,
                              const LevelSets& sets);

  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  const AugNode& node(int v) const { return nodes_[v]; }
  const std::vector<AugEdge>& edges() const { return edges_; }
  const std::vector<int>& out_edges(int v) const { return out_[v]; }
  const std::vector<int>& in_edges(int v) const { return in_[v]; }

  int Origin(int od) const { return origin_[od]; }
  int Destination(int od) const { return destination_[od]; }
  int num_od_pairs() const { return static_cast<int>(origin_.size()); }
  std::optional<int> Find(int aux_node, const Rational& battery) const;

  // OD pairs with no (s_k, L) to (t_k, 0) path.
  std::vector<int> UnreachableOdPairs() const;

 private:
  std::vector<AugNode> nodes_;
  std::vector<AugEdge> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<int> origin_;
  std::vector<int> destination_;
  std::vector<int> first_of_aux_;  // first augmented node of each aux node
  std::vector<int> count_of_aux_;
};

// "(i1,2,9)" for copies (interval numbered from 1), "(s,9)" for OD nodes.
std::string AugNodeLabel(const ChargingNetwork& network,
                         const AuxiliaryNetwork& aux, const AugNode& node);

}  // namespace evflow

#endif  // EVFLOW_CHARGE_AUGMENT_H_
