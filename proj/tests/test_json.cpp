#include "boardless/json_io.hpp"

#include <filesystem>

#include "doctest.h"

using namespace boardless;

TEST_CASE("configs survive a JSON round trip") {
  for (const auto& name : builtin_config_names()) {
    const GameConfig c = builtin_config(name);
    CHECK(config_from_json(config_to_json(c)) == c);
    CHECK(config_from_json(Json::parse(config_to_json(c).dump())) == c);
  }
}

TEST_CASE("bundled config files match the built-in games") {
  const std::filesystem::path dir = std::filesystem::path(BOARDLESS_SOURCE_DIR) / "configs";
  for (const auto& name : builtin_config_names()) {
    CHECK(load_config((dir / (name + ".json")).string()) == builtin_config(name));
    CHECK(load_config(name) == builtin_config(name));
  }
}

TEST_CASE("config parsing fills defaults and rejects bad documents") {
  const GameConfig c = config_from_json(Json::parse(R"({"shape": "hexagon", "components": [{"owner": 1}, {"owner": 2, "hand": 4}]})"));
  CHECK(c.shape == Shape::Hexagon);
  CHECK(c.move_cap == 200);
  CHECK(c.placement.kind == PlacementRule::Kind::AnyEmpty);
  CHECK_FALSE(c.components[0].hand.has_value());
  CHECK(c.components[1].hand == 4u);

  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"components": []})")), std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"shape": "octagon", "components": []})")), std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"([1, 2])")), std::invalid_argument);
  CHECK_THROWS_AS(
      config_from_json(Json::parse(R"({"shape": "square", "components": [{"owner": 1}], "moveCap": 0})")),
      std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(Json::parse(
                      R"({"shape": "square", "components": [{"owner": 1}], "players": 1, "placement": {"kind": "Touching"}})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(load_config("/nonexistent/config.json"), std::invalid_argument);
}

TEST_CASE("scripts") {
  const std::vector<CanonCoord> moves{{0, 0}, {1, -2}, {-3, 4}};
  CHECK(script_from_json(script_to_json(moves)) == moves);
  CHECK(script_from_json(Json::parse(R"({"moves": []})")).empty());
  CHECK_THROWS_AS(script_from_json(Json::parse(R"({"moves": [[1]]})")), std::invalid_argument);
  CHECK_THROWS_AS(script_from_json(Json::parse(R"({"steps": []})")), std::invalid_argument);
}

TEST_CASE("state dump describes board, chunks and history") {
  GameState st = make_initial_state(make_setup(builtin_config("andantino-hexagon"), Strategy::ZoneMap));
  for (CanonCoord c : {CanonCoord{0, 0}, CanonCoord{1, 0}, CanonCoord{0, 1}}) play_at(st, c);
  const Json j = state_to_json(st);
  CHECK(j["boardCells"] == st.board_sites());
  CHECK(j["cells"].size() == st.board_sites());
  CHECK(j["occupied"] == 3);
  CHECK(j["trial"]["moves"] == Json::parse("[[0,0],[1,0],[0,1]]"));
  CHECK(j["expansions"].size() == st.events.size());
  CHECK(j["tables"][0]["container"] == "Board");
  CHECK(j["tables"][0]["what"].size() == 3);
}
