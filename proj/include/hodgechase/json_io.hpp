#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "hodgechase/scenario.hpp"

namespace hodgechase {

/// JSON forms of the scenario data. Bigraded dimensions are arrays of
/// [p, q, dim] triples, rationals are strings "a/b" (or plain integers),
/// rank annotations are {"map", "component", "rank"} with "component" either
/// [p, q] or "all" and "rank" one of "injective", "surjective", "zero" or a
/// number. Unknown keys are rejected.
nlohmann::json scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const nlohmann::json& j);

nlohmann::json chain_to_json(const DegenerationChain& c);
DegenerationChain chain_from_json(const nlohmann::json& j);

/// Reads one scenario file. Malformed JSON or schema violations surface as
/// Error with the file path in the message.
Scenario load_scenario(const std::string& path);

/// Writes the catalog as one <id>.json per scenario plus chains.json.
void dump_catalog(const Catalog& cat, const std::string& dir);

/// Reads a directory written by dump_catalog. Scenario files are loaded in
/// lexicographic order; chains.json is optional.
Catalog load_catalog(const std::string& dir);

}  // namespace hodgechase
