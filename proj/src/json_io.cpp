#include "boardless/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace boardless {

namespace {

std::string_view adjacency_name(Adjacency a) { return a == Adjacency::Edge ? "edge" : "vertex"; }

Adjacency parse_adjacency(const std::string& s) {
  if (s == "edge") return Adjacency::Edge;
  if (s == "vertex") return Adjacency::Vertex;
  throw std::invalid_argument("unknown adjacency: " + s);
}

std::string_view status_name(TrialStatus s) {
  switch (s) {
    case TrialStatus::InProgress: return "in-progress";
    case TrialStatus::Won: return "won";
    case TrialStatus::NoMoves: return "no-moves";
    case TrialStatus::MoveCap: return "move-cap";
  }
  return "?";
}

Json coord_json(CanonCoord c) { return Json::array({c.x, c.y}); }

}  // namespace

Json config_to_json(const GameConfig& c) {
  Json comps = Json::array();
  for (const auto& t : c.components) {
    Json j{{"owner", t.owner}};
    if (t.hand) j["hand"] = *t.hand;
    comps.push_back(j);
  }
  Json placement{{"kind", c.placement.kind == PlacementRule::Kind::AnyEmpty ? "AnyEmpty" : "AdjacentAtLeast"}};
  if (c.placement.kind == PlacementRule::Kind::AdjacentAtLeast) {
    placement["k"] = c.placement.k;
    placement["adjacency"] = adjacency_name(c.placement.adjacency);
    placement["bootstrapMoves"] = c.placement.bootstrap_moves;
  }
  Json win{{"kind", c.win.kind == WinRule::Kind::None ? "None" : "LineOfN"}};
  if (c.win.kind == WinRule::Kind::LineOfN) win["n"] = c.win.n;
  return Json{{"name", c.name},
              {"shape", to_string(c.shape)},
              {"strategy", to_string(c.strategy)},
              {"players", c.players},
              {"components", comps},
              {"initialTiles", {{"count", c.initial_tiles}, {"component", c.initial_component}}},
              {"placement", placement},
              {"win", win},
              {"moveCap", c.move_cap}};
}

GameConfig config_from_json(const Json& doc) {
  GameConfig c;
  try {
    if (!doc.is_object()) throw std::invalid_argument("config must be a JSON object");
    c.name = doc.value("name", std::string("custom"));
    c.shape = parse_shape(doc.at("shape").get<std::string>());
    if (doc.contains("strategy")) c.strategy = parse_strategy(doc["strategy"].get<std::string>());
    c.players = doc.value("players", std::uint16_t{2});
    for (const Json& t : doc.at("components")) {
      ComponentType type{t.at("owner").get<std::uint16_t>(), std::nullopt};
      if (t.contains("hand") && !t["hand"].is_null()) type.hand = t["hand"].get<std::uint32_t>();
      c.components.push_back(type);
    }
    if (doc.contains("initialTiles")) {
      c.initial_tiles = doc["initialTiles"].value("count", 0);
      c.initial_component = doc["initialTiles"].value("component", std::uint16_t{0});
    }
    if (doc.contains("placement")) {
      const Json& p = doc["placement"];
      const auto kind = p.value("kind", std::string("AnyEmpty"));
      if (kind == "AnyEmpty") {
        c.placement = {};
      } else if (kind == "AdjacentAtLeast") {
        c.placement.kind = PlacementRule::Kind::AdjacentAtLeast;
        c.placement.k = p.at("k").get<int>();
        c.placement.adjacency = parse_adjacency(p.value("adjacency", std::string("edge")));
        c.placement.bootstrap_moves = p.value("bootstrapMoves", 2);
      } else {
        throw std::invalid_argument("unknown placement rule: " + kind);
      }
    }
    if (doc.contains("win")) {
      const auto kind = doc["win"].value("kind", std::string("None"));
      if (kind == "LineOfN") {
        c.win = {WinRule::Kind::LineOfN, doc["win"].at("n").get<int>()};
      } else if (kind != "None") {
        throw std::invalid_argument("unknown win rule: " + kind);
      }
    }
    c.move_cap = doc.value("moveCap", 200);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed config: ") + e.what());
  }
  validate(c);
  return c;
}

GameConfig load_config(const std::string& path_or_name) {
  if (std::filesystem::exists(path_or_name)) return config_from_json(read_json_file(path_or_name));
  for (const auto& name : builtin_config_names()) {
    if (name == path_or_name) return builtin_config(name);
  }
  throw std::invalid_argument("no config file or bundled game named '" + path_or_name + "'");
}

Json script_to_json(const std::vector<CanonCoord>& moves) {
  Json list = Json::array();
  for (CanonCoord c : moves) list.push_back(coord_json(c));
  return Json{{"moves", list}};
}

std::vector<CanonCoord> script_from_json(const Json& doc) {
  std::vector<CanonCoord> out;
  try {
    for (const Json& m : doc.at("moves")) {
      if (!m.is_array() || m.size() != 2) throw std::invalid_argument("each move must be an [x, y] pair");
      out.push_back({m[0].get<int>(), m[1].get<int>()});
    }
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed script: ") + e.what());
  }
  return out;
}

Json event_to_json(const ExpansionEvent& e) {
  Json j{{"move", e.move_index},
         {"strategy", to_string(e.strategy)},
         {"oldCells", e.old_cells},
         {"newCells", e.new_cells},
         {"added", e.mapping.added}};
  if (e.old_dim) j["oldDim"] = *e.old_dim;
  if (e.new_dim) j["newDim"] = *e.new_dim;
  return j;
}

Json state_to_json(const GameState& st) {
  const Topology& t = st.board();
  Json cells = Json::array();
  for (CellId id = 0; id < t.cell_count(); ++id) cells.push_back(coord_json(t.coord(id)));
  Json tables = Json::array();
  for (const ChunkTable& ct : snapshot_tables(st)) {
    tables.push_back({{"container", ct.container},
                      {"empty", ct.empty},
                      {"what", ct.what},
                      {"who", ct.who},
                      {"count", ct.count},
                      {"state", ct.state},
                      {"playable", ct.playable}});
  }
  Json owned = Json::array();
  for (const OwnedRow& row : owned_report(st)) owned.push_back({{"owner", row.owner}, {"sets", row.sets}});
  Json moves = Json::array();
  for (CanonCoord c : trial_coords(st)) moves.push_back(coord_json(c));
  Json events = Json::array();
  for (const auto& e : st.events) events.push_back(event_to_json(e));
  return Json{{"shape", to_string(t.shape())},
              {"strategy", to_string(st.setup->strategy)},
              {"boardCells", t.cell_count()},
              {"occupied", st.occupied},
              {"cells", cells},
              {"tables", tables},
              {"owned", owned},
              {"trial", {{"seed", st.trial.seed}, {"status", status_name(st.trial.status)}, {"moves", moves}}},
              {"expansions", events}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace boardless
