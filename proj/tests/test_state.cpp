#include "boardless/state.hpp"

#include <random>

#include "doctest.h"
#include "fixtures.hpp"

using namespace boardless;

using Pairs = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

TEST_CASE("container placement and removal") {
  ContainerState cs(16);
  place_on(cs, 5, 2, 1);
  CHECK_FALSE(cs.empty.test(5));
  CHECK(cs.what[5] == 2);
  CHECK(cs.who[5] == 1);
  CHECK(cs.count[5] == 1);
  CHECK(check_coherence(cs).empty());
  CHECK_THROWS_AS(place_on(cs, 5, 2, 1), IllegalMove);

  remove_from(cs, 5);
  CHECK(cs.empty.test(5));
  CHECK(cs.what[5] == 0);
  CHECK(cs.who[5] == 0);
  CHECK(cs.count[5] == 0);
  CHECK(check_coherence(cs).empty());
  CHECK_THROWS_AS(remove_from(cs, 5), IllegalMove);

  cs.playable.reset(7);
  CHECK_THROWS_AS(place_on(cs, 7, 2, 1), IllegalMove);
}

TEST_CASE("coherence checker catches broken chunks") {
  ContainerState cs(4);
  cs.what[1] = 3;
  CHECK_FALSE(check_coherence(cs).empty());
  ContainerState other(4);
  other.who[2] = 1;
  CHECK_FALSE(check_coherence(other).empty());
}

TEST_CASE("example position chunk tables") {
  const GameState st = fixtures::example_position();
  const auto tables = snapshot_tables(st);
  REQUIRE(tables.size() == 3);
  const auto& board = tables[0];
  CHECK(board.empty == std::vector<std::uint32_t>{0, 1, 4, 7, 8, 11, 12, 14});
  CHECK(board.what == Pairs{{2, 3}, {3, 2}, {5, 3}, {6, 1}, {9, 1}, {10, 2}, {13, 2}, {15, 2}});
  CHECK(board.who == Pairs{{2, 2}, {3, 1}, {5, 2}, {6, 0}, {9, 0}, {10, 1}, {13, 1}, {15, 1}});
  CHECK(board.count == Pairs{{2, 1}, {3, 1}, {5, 1}, {6, 1}, {9, 1}, {10, 1}, {13, 1}, {15, 1}});
  CHECK(board.state.empty());
  CHECK(board.playable == board.empty);

  CHECK(tables[1].what == Pairs{{0, 2}});
  CHECK(tables[1].who == Pairs{{0, 1}});
  CHECK(tables[1].count == Pairs{{0, 2}});
  CHECK(tables[2].what == Pairs{{0, 3}});
  CHECK(tables[2].who == Pairs{{0, 2}});
  CHECK(tables[2].count == Pairs{{0, 4}});

  CHECK(format_owned(owned_report(st)) == "Board [{6, 9}]\nPlayer 1 [{3, 10, 13, 15, 16}]\nPlayer 2 [{2, 5, 17}]\n");
  CHECK(st.containers[1].offset == 16);
  CHECK(st.containers[2].offset == 17);
}

TEST_CASE("empty board tables") {
  auto setup = fixtures::plain_setup(Shape::Square, Strategy::Base, 3);
  GameState st = initial_state_on(setup, std::make_shared<const Topology>(build_regular({Shape::Square, 3})));
  const auto tables = snapshot_tables(st);
  REQUIRE(tables.size() == 1);
  CHECK(tables[0].empty == std::vector<std::uint32_t>{0, 1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(tables[0].playable == tables[0].empty);
}

TEST_CASE("registry with full hands lists only hand sites") {
  auto setup = std::make_shared<Setup>();
  setup->components = {{1, 5u}, {2, 5u}};
  GameState st = initial_state_on(setup, std::make_shared<const Topology>(build_regular({Shape::Square, 3})));
  const auto rows = owned_report(st);
  CHECK(rows[1].sets == std::vector<std::vector<SiteId>>{{9}});
  CHECK(rows[2].sets == std::vector<std::vector<SiteId>>{{10}});

  apply_move(st, Move{9, 4, 1, 1, false});
  CHECK(owned_report(st)[1].sets == std::vector<std::vector<SiteId>>{{4, 9}});
  CHECK(recompute_owned(st) == st.owned);
}

TEST_CASE("registry stays coherent over random placements") {
  std::mt19937_64 rng(7);
  for (int game = 0; game < 40; ++game) {
    auto setup = std::make_shared<Setup>();
    setup->components = {{1, 30u}, {2, 30u}};
    GameState st = initial_state_on(setup, std::make_shared<const Topology>(build_regular({Shape::Hexagon, 4})));
    for (int i = 0; i < 30; ++i) {
      const auto& playable = st.states[0].playable;
      const std::size_t k = std::uniform_int_distribution<std::size_t>(0, playable.count() - 1)(rng);
      const std::uint16_t player = st.player_to_move();
      apply_move(st, Move{st.hand_site(player), static_cast<SiteId>(playable.nth(k)), player, player, false});
      REQUIRE(recompute_owned(st) == st.owned);
      for (const auto& cs : st.states) REQUIRE(check_coherence(cs).empty());
    }
  }
}

TEST_CASE("adjacency rule with bootstrap") {
  auto setup = fixtures::plain_setup(Shape::Hexagon, Strategy::Base, 3);
  setup->rule = {PlacementRule::Kind::AdjacentAtLeast, 2, Adjacency::Edge, 2};
  GameState st = initial_state_on(setup, std::make_shared<const Topology>(build_regular({Shape::Hexagon, 3})));
  CHECK(st.states[0].playable.count() == 19);
  const SiteId centre = *st.board().find({0, 0});
  apply_move(st, Move{std::nullopt, centre, 1, 1, false});
  CHECK(st.states[0].playable.count() == 6);
  apply_move(st, Move{std::nullopt, *st.board().find({1, 0}), 2, 2, false});
  // Two touching hexes share exactly two common neighbours.
  CHECK(st.states[0].playable.to_vector() ==
        std::vector<std::uint32_t>{*st.board().find({1, -1}), *st.board().find({0, 1})});
}

TEST_CASE("strategy names round-trip") {
  for (Strategy s : kAllStrategies) CHECK(parse_strategy(to_string(s)) == s);
  CHECK(parse_strategy("peri_map") == Strategy::PeriMap);
  CHECK_THROWS_AS(parse_strategy("GROW"), std::invalid_argument);
}
