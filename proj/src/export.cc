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

#include "evflow/export.h"

#include <cstdio>
#include <map>
#include <sstream>

#include "absl/strings/str_cat.h"

namespace evflow {
namespace {

std::string AuxLabel(const ChargingNetwork& network,
                     const AuxiliaryNetwork& aux, int v) {
  const AuxNode& a = aux.node(v);
  switch (a.kind) {
    case AuxKind::kCopy:
      return absl::StrCat("(", network.label(a.node), ",", a.interval + 1, ")");
    case AuxKind::kOrigin:
    case AuxKind::kDestination:
      if (aux.num_od_pairs() == 1) return network.label(a.node);
      return absl::StrCat(network.label(a.node), "#", a.od);
  }
  return "";
}

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

Json Vector(const std::vector<Rational>& values, bool decimal) {
  Json out = Json::array();
  for (const Rational& v : values) out.push_back(NumberJson(v, decimal));
  return out;
}

std::string StationLabel(const ChargingNetwork& network, int station) {
  return network.label(network.stations()[station].node);
}

}  // namespace

Json NumberJson(const Rational& value, bool decimal) {
  return decimal ? FormatDecimal(value) : FormatRational(value);
}

Json CostJson(const ExtendedCost& value, bool decimal) {
  if (!value) return "inf";
  return NumberJson(*value, decimal);
}

Json AssumptionJson(const ChargingNetwork& network,
                    const MetricAgreementReport& report, bool decimal) {
  Json out;
  out["holds"] = report.holds;
  if (!report.holds) {
    out["witness"] = {
        {"from", network.label(report.from)},
        {"to", network.label(report.to)},
        {"d_min", NumberJson(report.battery_min, decimal)},
        {"d_along_ell_min", NumberJson(report.battery_along_time_min, decimal)},
        {"ell_min", NumberJson(report.time_min, decimal)},
        {"ell_along_d_min", NumberJson(report.time_along_battery_min, decimal)},
    };
  }
  return out;
}

Json AuxiliaryNetworkJson(const ChargingNetwork& network,
                          const AuxiliaryNetwork& aux, bool decimal) {
  Json out;
  out["L"] = NumberJson(aux.battery_capacity(), decimal);
  out["thresholds"] = Vector(network.curve().thresholds(), decimal);
  Json nodes = Json::array();
  Json copies = Json::array();
  for (int v = 0; v < aux.num_nodes(); ++v) {
    const AuxNode& a = aux.node(v);
    nodes.push_back(AuxLabel(network, aux, v));
    if (a.kind != AuxKind::kCopy) continue;
    copies.push_back({{"label", AuxLabel(network, aux, v)},
                      {"node", network.label(a.node)},
                      {"interval", a.interval + 1},
                      {"lower", NumberJson(a.lower, decimal)},
                      {"upper", NumberJson(a.upper, decimal)},
                      {"unit_cost", CostJson(a.unit_cost, decimal)}});
  }
  out["nodes"] = nodes;
  out["copies"] = copies;
  Json edges = Json::array();
  for (const AuxEdge& e : aux.edges()) {
    edges.push_back({{"tail", AuxLabel(network, aux, e.tail)},
                     {"head", AuxLabel(network, aux, e.head)},
                     {"d", NumberJson(e.battery, decimal)},
                     {"ell", NumberJson(e.time, decimal)}});
  }
  out["edges"] = edges;
  Json ods = Json::array();
  for (const OdPair& od : network.od_pairs()) {
    ods.push_back({{"s", network.label(od.origin)},
                   {"t", network.label(od.destination)},
                   {"demand", NumberJson(od.demand, decimal)}});
  }
  out["od_pairs"] = ods;
  return out;
}

std::string AuxiliaryNetworkDot(const ChargingNetwork& network,
                                const AuxiliaryNetwork& aux) {
  std::ostringstream out;
  out << "digraph auxiliary {\n  rankdir=LR;\n";
  for (int v = 0; v < aux.num_nodes(); ++v) {
    out << "  n" << v << " [label=" << Quote(AuxLabel(network, aux, v))
        << "];\n";
  }
  for (const AuxEdge& e : aux.edges()) {
    out << "  n" << e.tail << " -> n" << e.head << " [label="
        << Quote(absl::StrCat(FormatRational(e.battery), "/",
                              FormatRational(e.time)))
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

Json AugmentedGraphJson(const ChargingNetwork& network,
                        const AuxiliaryNetwork& aux,
                        const AugmentedGraph& graph, bool decimal) {
  Json out;
  Json nodes = Json::array();
  for (int v = 0; v < graph.num_nodes(); ++v) {
    nodes.push_back({{"id", v},
                     {"label", AugNodeLabel(network, aux, graph.node(v))},
                     {"aux", AuxLabel(network, aux, graph.node(v).aux)},
                     {"battery", NumberJson(graph.node(v).battery, decimal)}});
  }
  out["nodes"] = nodes;
  Json edges = Json::array();
  for (const AugEdge& e : graph.edges()) {
    Json j = {{"tail", e.tail}, {"head", e.head},
              {"cost", CostJson(e.cost, decimal)}};
    switch (e.type) {
      case AugEdgeType::kCharge:
        j["type"] = "charge";
        j["lambda"] = NumberJson(e.lambda, decimal);
        break;
      case AugEdgeType::kChain:
        j["type"] = "chain";
        break;
      case AugEdgeType::kTravel:
        j["type"] = "travel";
        j["d"] = NumberJson(e.battery, decimal);
        j["ell"] = NumberJson(e.time, decimal);
        break;
    }
    edges.push_back(std::move(j));
  }
  out["edges"] = edges;
  return out;
}

std::string AugmentedGraphDot(const ChargingNetwork& network,
                              const AuxiliaryNetwork& aux,
                              const AugmentedGraph& graph) {
  std::ostringstream out;
  out << "digraph augmented {\n  rankdir=LR;\n";
  for (int v = 0; v < graph.num_nodes(); ++v) {
    out << "  n" << v << " [label="
        << Quote(AugNodeLabel(network, aux, graph.node(v))) << "];\n";
  }
  for (const AugEdge& e : graph.edges()) {
    out << "  n" << e.tail << " -> n" << e.head;
    switch (e.type) {
      case AugEdgeType::kCharge:
        out << " [color=red, label="
            << Quote(FormatRational(e.lambda)) << "]";
        break;
      case AugEdgeType::kChain:
        out << " [color=gray, style=dashed]";
        break;
      case AugEdgeType::kTravel:
        out << " [color=black]";
        break;
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

Json StrategyJson(const ChargingNetwork& network,
                  const ChargingStrategy& strategy, bool decimal) {
  Json out;
  std::vector<int> nodes = strategy.Nodes(network);
  Json path = Json::array();
  std::map<std::string, Rational> charges;
  for (size_t p = 0; p < nodes.size(); ++p) {
    path.push_back(network.label(nodes[p]));
    if (!IsZero(strategy.charge[p])) {
      charges[network.label(nodes[p])] += strategy.charge[p];
    }
  }
  out["path"] = path;
  Json c = Json::object();
  for (const auto& [label, amount] : charges) {
    c[label] = NumberJson(amount, decimal);
  }
  out["charges"] = c;
  out["od"] = strategy.od;
  absl::StatusOr<StrategyCost> cost = EvaluateStrategy(network, strategy);
  if (cost.ok()) {
    out["cost"] = NumberJson(cost->total, decimal);
    out["charge_time"] = NumberJson(cost->charge_time, decimal);
    out["drive_time"] = NumberJson(cost->drive_time, decimal);
    out["money"] = NumberJson(cost->money, decimal);
    out["final_battery"] = NumberJson(cost->final_battery, decimal);
  } else {
    out["error"] = std::string(cost.status().message());
  }
  return out;
}

Json FlowSolutionJson(const ChargingNetwork& network,
                      const FlowSolution& solution, bool decimal) {
  Json out;
  out["status"] = FlowStatusName(solution.status);
  if (!solution.message.empty()) out["message"] = solution.message;
  out["iterations"] = solution.iterations;
  if (!solution.unbounded.empty()) {
    Json witnesses = Json::array();
    for (const UnboundedPair& u : solution.unbounded) {
      Json path = Json::array();
      path.push_back(network.label(network.od_pairs()[u.od].origin));
      for (int e : u.path_edges) {
        path.push_back(network.label(network.edges()[e].head));
      }
      witnesses.push_back({{"od", u.od}, {"path", path}});
    }
    out["unbounded"] = witnesses;
  }
  if (!solution.infeasible_od.empty()) {
    out["infeasible_od"] = solution.infeasible_od;
  }
  if (!solution.farkas.empty()) {
    out["farkas"] = Vector(solution.farkas, decimal);
  }
  if (solution.status == FlowStatus::kInfeasible && solution.farkas.empty()) {
    out["objective"] = NumberJson(solution.objective, decimal);
  }
  if (solution.status != FlowStatus::kOptimal) return out;

  out["objective"] = NumberJson(solution.objective, decimal);
  out["dual_objective"] = NumberJson(solution.dual_objective, decimal);
  const int J = network.num_intervals();
  Json allocation = Json::object();
  Json pi = Json::object();
  Json y = Json::object();
  for (size_t i = 0; i < network.stations().size(); ++i) {
    std::string label = StationLabel(network, static_cast<int>(i));
    Json z = Json::array();
    Json p = Json::array();
    for (int j = 0; j < J; ++j) {
      size_t c = i * J + j;
      if (c < solution.allocation.size()) {
        z.push_back(NumberJson(solution.allocation[c], decimal));
      }
      if (c < solution.pi.size()) p.push_back(NumberJson(solution.pi[c], decimal));
    }
    allocation[label] = z;
    pi[label] = p;
    if (i < solution.y.size()) y[label] = NumberJson(solution.y[i], decimal);
  }
  out["z"] = allocation;
  Json duals = {{"copy", pi}, {"station", y}};
  if (!solution.phi.empty()) duals["demand"] = Vector(solution.phi, decimal);
  if (!solution.w.empty()) {
    Json w = Json::object();
    for (size_t e = 0; e < solution.w.size(); ++e) {
      if (!network.edges()[e].capacity) continue;
      const Edge& edge = network.edges()[e];
      w[absl::StrCat(network.label(edge.tail), "->", network.label(edge.head),
                     "#", e)] = NumberJson(solution.w[e], decimal);
    }
    duals["edge"] = w;
  }
  out["duals"] = duals;
  Json strategies = Json::array();
  for (const StrategyFlow& f : solution.strategies) {
    Json s = StrategyJson(network, f.strategy, decimal);
    s["flow"] = NumberJson(f.value, decimal);
    strategies.push_back(std::move(s));
  }
  out["strategies"] = strategies;
  bool cycles = false;
  for (const auto& per_od : solution.cycle_flow) {
    for (const Rational& v : per_od) cycles = cycles || !IsZero(v);
  }
  if (cycles) out["cycle_flow_remaining"] = true;
  return out;
}

namespace {

// Shortest %g rendering of `value` that fits in 12 characters.
std::string MpsNumber(const Rational& value) {
  double v = ToDouble(value);
  char buf[64];
  for (int precision = 12; precision > 0; --precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    if (std::string(buf).size() <= 12) break;
  }
  return buf;
}

std::string Pad(const std::string& s, size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

// Fields start at columns 2, 5, 15, 25, 40 and 50.
std::string MpsLine(const std::string& f1, const std::string& f2,
                    const std::string& f3, const std::string& f4) {
  std::string line = " " + Pad(f1, 2) + " " + Pad(f2, 8) + "  " + Pad(f3, 8) +
                     "  " + f4;
  while (!line.empty() && line.back() == ' ') line.pop_back();
  return line + "\n";
}

std::string ShortName(char prefix, int index) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%c%07d", prefix, index + 1);
  return buf;
}

}  // namespace

std::string WriteMps(const LpProblem& problem, const std::string& name) {
  std::ostringstream out;
  for (int r = 0; r < problem.num_rows(); ++r) {
    out << "* " << ShortName('R', r) << " " << problem.rows[r].name << "\n";
  }
  for (int c = 0; c < problem.num_vars(); ++c) {
    out << "* " << ShortName('C', c) << " " << problem.var_names[c] << "\n";
  }
  out << "NAME          " << name.substr(0, 8) << "\n";
  if (problem.sense == Sense::kMaximize) out << "OBJSENSE\n    MAX\n";
  out << "ROWS\n";
  out << MpsLine("N", "OBJ", "", "");
  for (int r = 0; r < problem.num_rows(); ++r) {
    const char* type = problem.rows[r].type == RowType::kLessEqual    ? "L"
                       : problem.rows[r].type == RowType::kGreaterEqual ? "G"
                                                                        : "E";
    out << MpsLine(type, ShortName('R', r), "", "");
  }
  std::vector<std::vector<std::pair<int, Rational>>> columns(problem.num_vars());
  for (int r = 0; r < problem.num_rows(); ++r) {
    for (const auto& [var, coeff] : problem.rows[r].coeffs) {
      if (!IsZero(coeff)) columns[var].push_back({r, coeff});
    }
  }
  out << "COLUMNS\n";
  for (int c = 0; c < problem.num_vars(); ++c) {
    const std::string col = ShortName('C', c);
    if (!IsZero(problem.objective[c])) {
      out << MpsLine("", col, "OBJ", MpsNumber(problem.objective[c]));
    }
    for (const auto& [r, coeff] : columns[c]) {
      out << MpsLine("", col, ShortName('R', r), MpsNumber(coeff));
    }
  }
  out << "RHS\n";
  for (int r = 0; r < problem.num_rows(); ++r) {
    if (IsZero(problem.rows[r].rhs)) continue;
    out << MpsLine("", "RHS", ShortName('R', r), MpsNumber(problem.rows[r].rhs));
  }
  out << "ENDATA\n";
  return out.str();
}

}  // namespace evflow
