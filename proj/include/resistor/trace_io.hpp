#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "resistor/transform.hpp"

namespace resistor {

/*
 * Trace serialization: a line-oriented text log and a structured JSON
 * document. Rational values render as "p/q".
 */

template <class S>
nlohmann::json step_to_json(const TransformStep<S>& step) {
  nlohmann::json j;
  j["kind"] = step_kind_name(step.kind);
  j["removed_vertices"] = nlohmann::json::array();
  for (VertexId v : step.removed_vertices) j["removed_vertices"].push_back(v + 1);
  j["added_vertices"] = nlohmann::json::array();
  for (VertexId v : step.added_vertices) j["added_vertices"].push_back(v + 1);
  auto edges = [](const std::vector<StepEdge<S>>& es) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : es)
      arr.push_back({{"u", e.u + 1}, {"v", e.v + 1}, {"r", format_scalar(e.resistance)}});
    return arr;
  };
  j["removed_edges"] = edges(step.removed_edges);
  j["added_edges"] = edges(step.added_edges);
  return j;
}

template <class S>
TransformStep<S> step_from_json(const nlohmann::json& j) {
  TransformStep<S> step;
  step.kind = step_kind_from_name(j.at("kind").get<std::string>());
  for (const auto& v : j.at("removed_vertices")) step.removed_vertices.push_back(v.get<int>() - 1);
  for (const auto& v : j.at("added_vertices")) step.added_vertices.push_back(v.get<int>() - 1);
  auto edges = [](const nlohmann::json& arr) {
    std::vector<StepEdge<S>> out;
    for (const auto& e : arr)
      out.push_back({e.at("u").get<int>() - 1, e.at("v").get<int>() - 1,
                     parse_scalar<S>(e.at("r").get<std::string>())});
    return out;
  };
  step.removed_edges = edges(j.at("removed_edges"));
  step.added_edges = edges(j.at("added_edges"));
  return step;
}

template <class S>
nlohmann::json trace_to_json(const std::vector<TransformStep<S>>& trace) {
  nlohmann::json j;
  j["steps"] = nlohmann::json::array();
  for (const auto& s : trace) j["steps"].push_back(step_to_json(s));
  return j;
}

template <class S>
std::vector<TransformStep<S>> trace_from_json(const nlohmann::json& j) {
  std::vector<TransformStep<S>> out;
  for (const auto& s : j.at("steps")) out.push_back(step_from_json<S>(s));
  return out;
}

template <class S>
void write_trace_text(std::ostream& os, const std::vector<TransformStep<S>>& trace) {
  for (const auto& step : trace) {
    os << step_kind_name(step.kind);
    if (!step.removed_vertices.empty()) {
      os << " -v";
      for (VertexId v : step.removed_vertices) os << " " << v + 1;
    }
    if (!step.removed_edges.empty()) {
      os << " -e";
      for (const auto& e : step.removed_edges)
        os << " (" << e.u + 1 << "," << e.v + 1 << ";" << format_scalar(e.resistance) << ")";
    }
    if (!step.added_vertices.empty()) {
      os << " +v";
      for (VertexId v : step.added_vertices) os << " " << v + 1;
    }
    if (!step.added_edges.empty()) {
      os << " +e";
      for (const auto& e : step.added_edges)
        os << " (" << e.u + 1 << "," << e.v + 1 << ";" << format_scalar(e.resistance) << ")";
    }
    os << "\n";
  }
}

}  // namespace resistor
