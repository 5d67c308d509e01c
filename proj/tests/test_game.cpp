#include "boardless/game.hpp"

#include <map>
#include <random>
#include <set>

#include "doctest.h"

using namespace boardless;

namespace {

using Stones = std::map<std::pair<int, int>, std::uint16_t>;

Stones stones_of(const GameState& st) {
  Stones out;
  const ContainerState& b = st.states[0];
  for (SiteId s = 0; s < b.site_count(); ++s) {
    if (b.what[s] != 0) out[{st.board().coord(s).x, st.board().coord(s).y}] = b.who[s];
  }
  return out;
}

// Direction scan straight over lattice coordinates.
bool line_by_scan(Shape shape, const Stones& stones, int n, std::uint16_t player) {
  std::vector<std::pair<int, int>> dirs;
  if (shape == Shape::Square) dirs = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
  if (shape == Shape::Hexagon) dirs = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
  for (const auto& [at, who] : stones) {
    if (who != player) continue;
    for (const auto& [dx, dy] : dirs) {
      int k = 1;
      while (k < n) {
        const auto it = stones.find({at.first + k * dx, at.second + k * dy});
        if (it == stones.end() || it->second != player) break;
        ++k;
      }
      if (k >= n) return true;
    }
  }
  return false;
}

GameState state_for(const GameConfig& c, Strategy s) { return make_initial_state(make_setup(c, s)); }

std::set<std::pair<int, int>> legal_coords(const GameState& st) {
  std::set<std::pair<int, int>> out;
  for (const Move& m : legal_moves(st)) out.insert({st.board().coord(m.to).x, st.board().coord(m.to).y});
  return out;
}

// Every empty cell whose occupied neighbours reach the rule's threshold.
std::set<std::pair<int, int>> legal_by_count(const GameState& st, const PlacementRule& rule) {
  const Stones stones = stones_of(st);
  const int need = required_support(rule, st.trial.moves.size(), stones.size());
  std::set<std::pair<int, int>> out;
  for (const CanonCoord c : st.board().cells()) {
    if (stones.count({c.x, c.y}) != 0) continue;
    const auto ns = rule.adjacency == Adjacency::Edge ? edge_neighbors(st.board().shape(), c)
                                                      : vertex_neighbors(st.board().shape(), c);
    int n = 0;
    for (const CanonCoord m : ns) n += stones.count({m.x, m.y}) != 0 ? 1 : 0;
    if (n >= need) out.insert({c.x, c.y});
  }
  return out;
}

}  // namespace

TEST_CASE("bundled configs validate and follow the documented rules") {
  CHECK(builtin_config_names().size() == 6);
  for (const auto& name : builtin_config_names()) {
    const GameConfig c = builtin_config(name);
    CHECK(c.name == name);
    CHECK(c.move_cap == 200);
  }
  CHECK(builtin_config("andantino-hexagon").placement.adjacency == Adjacency::Edge);
  CHECK(builtin_config("andantino-square").placement.adjacency == Adjacency::Vertex);
  CHECK(builtin_config("andantino-triangle").win.kind == WinRule::Kind::None);
  CHECK(builtin_config("freeplace-square").placement.kind == PlacementRule::Kind::AnyEmpty);
  CHECK_THROWS_AS(builtin_config("chess-square"), std::invalid_argument);
}

TEST_CASE("config validation rejects impossible settings") {
  GameConfig c = builtin_config("andantino-square");
  c.move_cap = 0;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c = builtin_config("andantino-hexagon");
  c.placement.k = 7;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c = builtin_config("andantino-triangle");
  c.win = {WinRule::Kind::LineOfN, 5};
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c = builtin_config("freeplace-square");
  c.components = {{1, std::nullopt}};
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
}

TEST_CASE("empty dim-3 square board with free placement offers 9 moves") {
  GameConfig c = builtin_config("freeplace-square");
  auto setup = std::make_shared<Setup>(*make_setup(c, Strategy::ZoneMap));
  setup->initial_dim = 3;
  const GameState st = make_initial_state(setup);
  const auto moves = legal_moves(st);
  REQUIRE(moves.size() == 9);
  for (std::size_t i = 0; i < moves.size(); ++i) CHECK(moves[i].to == i);
}

TEST_CASE("adjacency rule matches a neighbour count over coordinates") {
  for (const auto& name : {"andantino-square", "andantino-hexagon", "andantino-triangle"}) {
    const GameConfig c = builtin_config(name);
    for (Strategy s : {Strategy::Base, Strategy::ZoneMap, Strategy::PeriRe}) {
      for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        GameState st = state_for(c, s);
        std::mt19937_64 rng(seed);
        for (int i = 0; i < 30; ++i) {
          CHECK(legal_coords(st) == legal_by_count(st, c.placement));
          const auto moves = legal_moves(st);
          if (moves.empty()) break;
          play_move(st, moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)]);
        }
      }
    }
  }
}

TEST_CASE("one hex stone leaves no cell with two stone neighbours") {
  GameConfig c = builtin_config("andantino-hexagon");
  c.placement.bootstrap_moves = 0;
  GameState st = state_for(c, Strategy::ZoneMap);
  occupy_board_site(st, *st.board().find({0, 0}), 1, 1, 1);
  refresh_rules(st, 1);
  CHECK(legal_moves(st).empty());
  CHECK(legal_by_count(st, c.placement).empty());
}

TEST_CASE("bootstrap moves relax the threshold to the stones on the board") {
  const GameConfig c = builtin_config("andantino-hexagon");
  GameState st = state_for(c, Strategy::ZoneMap);
  CHECK(legal_moves(st).size() == st.board_sites());
  play_at(st, {0, 0});
  CHECK(legal_coords(st) == std::set<std::pair<int, int>>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}});
  play_at(st, {1, 0});
  CHECK(legal_coords(st) == std::set<std::pair<int, int>>{{0, 1}, {1, -1}});
}

TEST_CASE("line detection") {
  const GameConfig c = builtin_config("freeplace-square");
  GameState st = state_for(c, Strategy::ZoneMap);
  for (int i = 0; i < 4; ++i) {
    play_at(st, {i, i});
    play_at(st, {i, -1});
  }
  CHECK_FALSE(detect_line(st, 5, 1));
  CHECK(detect_line(st, 4, 1));
  CHECK(detect_line(st, 4, 2));
  play_at(st, {4, 4});
  CHECK(detect_line(st, 5, 1));
  CHECK(line_length_through(st, *st.board().find({2, 2})) == 5);
  CHECK_THROWS_AS(detect_line(st, 1, 1), std::invalid_argument);

  GameState hex = state_for(builtin_config("freeplace-hexagon"), Strategy::Base);
  for (int q = 0; q < 5; ++q) {
    play_at(hex, {q, 0});
    play_at(hex, {-q, 3});
  }
  CHECK(detect_line(hex, 5, 1));
  CHECK(detect_line(hex, 5, 2));

  GameState tri = state_for(builtin_config("freeplace-triangle"), Strategy::ZoneMap);
  CHECK_THROWS_AS(detect_line(tri, 5, 1), std::invalid_argument);
}

TEST_CASE("line detection agrees with a direction scan on random positions") {
  for (const auto& name : {"freeplace-square", "freeplace-hexagon"}) {
    const GameConfig c = builtin_config(name);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      GameState st = state_for(c, Strategy::ZoneMap);
      std::mt19937_64 rng(seed);
      for (int i = 0; i < 60; ++i) {
        const auto moves = legal_moves(st);
        play_move(st, moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)]);
        const Stones stones = stones_of(st);
        for (int n = 3; n <= 5; ++n) {
          for (std::uint16_t p = 1; p <= 2; ++p) CHECK(detect_line(st, n, p) == line_by_scan(c.shape, stones, n, p));
        }
      }
    }
  }
}

TEST_CASE("random playouts are deterministic and stay within bounds") {
  for (const auto& name : builtin_config_names()) {
    const GameConfig c = builtin_config(name);
    for (Strategy s : kAllStrategies) {
      const PlayoutResult a = random_playout(c, s, 7);
      CHECK(a == random_playout(c, s, 7));
      CHECK(a.moves >= 1);
      CHECK(a.moves <= static_cast<std::size_t>(c.move_cap));
      CHECK(a.occupied <= a.board_cells);
      if (s == Strategy::Base) CHECK(a.expansions == 0);
    }
  }
}

TEST_CASE("a won playout ends on a line through the last stone") {
  const GameConfig c = builtin_config("andantino-square");
  int wins = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    GameState st = state_for(c, Strategy::ZoneMap);
    const PlayoutResult r = run_playout(st, c, seed);
    if (r.status != TrialStatus::Won) continue;
    ++wins;
    CHECK(detect_line(st, 5, r.winner));
    CHECK(line_length_through(st, st.trial.moves.back().to) >= 5);
    GameState before = undo(st, 1);
    CHECK_FALSE(detect_line(before, 5, r.winner));
  }
  CHECK(wins > 0);
}

TEST_CASE("freeplace stops when the hands run out") {
  GameConfig c = builtin_config("freeplace-hexagon");
  c.components = {{1, 3u}, {2, 3u}};
  const PlayoutResult r = random_playout(c, Strategy::ZoneMap, 3);
  CHECK(r.moves == 6);
  CHECK(r.status == TrialStatus::NoMoves);
}

TEST_CASE("observer sees every move") {
  const GameConfig c = builtin_config("andantino-hexagon");
  GameState st = state_for(c, Strategy::PeriMap);
  std::size_t seen = 0;
  const PlayoutResult r = run_playout(st, c, 11, [&](const GameState& s) { CHECK(s.trial.moves.size() == ++seen); });
  CHECK(seen == r.moves);
}
