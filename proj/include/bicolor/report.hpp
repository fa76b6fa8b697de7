#pragma once
// Machine-readable verification reports.  Indices in the output are 1-based.

#include <optional>
#include <string>

#include "json.hpp"

#include "bicolor/route.hpp"

namespace bicolor {

inline nlohmann::ordered_json report_json(const std::string& instance, const AltRoute& route, const RouteReport& rep) {
  nlohmann::ordered_json j;
  j["instance"] = instance;
  j["kind"] = kind_name(rep.kind);
  j["points"] = route.vertices.size();
  j["crossings"] = rep.crossings;
  j["bound"] = rep.bound ? nlohmann::ordered_json(*rep.bound) : nlohmann::ordered_json(nullptr);
  j["one_plane"] = rep.one_plane;
  j["max_edge_crossings"] = rep.max_edge_crossings;
  j["bridges_used"] = rep.bridges_used;
  j["bridges_total"] = rep.bridges_total;
  j["checks"] = {
      {"hamiltonian", rep.hamiltonian},
      {"alternating", rep.alternating},
      {"one_plane", rep.one_plane},
      {"within_bound", rep.within_bound},
  };
  auto& v = j["vertices"] = nlohmann::ordered_json::array();
  for (int x : route.vertices) v.push_back(x + 1);
  j["violations"] = rep.violations;
  j["ok"] = rep.ok();
  return j;
}

inline std::string report_text(const std::string& instance, const RouteReport& rep) {
  std::string out = instance + ": " + kind_name(rep.kind) + ", " + std::to_string(rep.crossings) + " crossings";
  if (rep.bound) out += " (bound " + std::to_string(*rep.bound) + ")";
  out += rep.one_plane ? ", 1-plane" : ", not 1-plane";
  out += ", bridges " + std::to_string(rep.bridges_used) + "/" + std::to_string(rep.bridges_total);
  out += rep.ok() ? ", ok\n" : ", FAILED\n";
  for (const auto& v : rep.violations) out += "  " + v + "\n";
  return out;
}

}  // namespace bicolor
