#pragma once

#include <string>

#include <json.hpp>

#include "circletree/form_catalog.hpp"
#include "circletree/io.hpp"
#include "circletree/version.hpp"

namespace circletree {

inline nlohmann::ordered_json form_entry_json(const FormEntry& f) {
  nlohmann::ordered_json j;
  j["id"] = f.id;
  j["points"] = f.points;
  j["edges"] = format_circle_graph(to_circle_graph(f.canonical()));
  j["period"] = f.period;
  if (!f.source.empty()) j["source"] = f.source;
  j["mirror"] = f.mirror;
  if (f.source.empty()) j["slots"] = f.slots;
  return j;
}

// The committed snapshot document: one JSON object with stable key order.
inline nlohmann::ordered_json catalog_snapshot_json() {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["kernel_version"] = kKernelVersion;
  j["prereduced"] = nlohmann::ordered_json::array();
  j["reduced"] = nlohmann::ordered_json::array();
  for (const FormEntry& f : catalog().prereduced()) j["prereduced"].push_back(form_entry_json(f));
  for (const FormEntry& f : catalog().reduced()) j["reduced"].push_back(form_entry_json(f));
  return j;
}

inline std::string catalog_snapshot_text() { return catalog_snapshot_json().dump(2) + "\n"; }

}  // namespace circletree
