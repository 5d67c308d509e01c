#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "boardless/game.hpp"

namespace boardless {

using Json = nlohmann::json;

Json config_to_json(const GameConfig& config);
/// Missing fields take the GameConfig defaults. Throws std::invalid_argument
/// on malformed or invalid documents.
GameConfig config_from_json(const Json& doc);

/// A config file path, or the name of a bundled game.
GameConfig load_config(const std::string& path_or_name);

/// Scripts are {"moves": [[x, y], ...]} in canonical coordinates.
Json script_to_json(const std::vector<CanonCoord>& moves);
std::vector<CanonCoord> script_from_json(const Json& doc);

Json event_to_json(const ExpansionEvent& e);
/// Board cells, chunk tables, ownership, trial and expansion history.
Json state_to_json(const GameState& st);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace boardless
