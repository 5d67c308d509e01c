#pragma once

#include <memory>

#include "boardless/expansion.hpp"

namespace fixtures {

using namespace boardless;

// The 4x4 example position: two neutral tiles, player 1 on 3, 10, 13, 15 and
// player 2 on 2, 5, each having started with six chips in hand.
inline GameState example_position() {
  auto setup = std::make_shared<Setup>();
  setup->shape = Shape::Square;
  setup->strategy = Strategy::Base;
  setup->components = {{0, std::nullopt}, {1, 6u}, {2, 6u}};
  setup->rule.kind = PlacementRule::Kind::AnyEmpty;
  GameState st = initial_state_on(setup, std::make_shared<const Topology>(build_regular({Shape::Square, 4})));
  occupy_board_site(st, 6, 1, 0, 0);
  occupy_board_site(st, 9, 1, 0, 0);
  const SiteId hand1 = *st.hand_site(2);
  const SiteId hand2 = *st.hand_site(3);
  for (SiteId s : {3u, 10u, 13u, 15u}) apply_move(st, Move{hand1, s, 1, 2, false});
  for (SiteId s : {2u, 5u}) apply_move(st, Move{hand2, s, 2, 3, false});
  return st;
}

inline std::shared_ptr<Setup> plain_setup(Shape shape, Strategy strategy, int initial_dim) {
  auto setup = std::make_shared<Setup>();
  setup->shape = shape;
  setup->strategy = strategy;
  setup->components = {{1, std::nullopt}, {2, std::nullopt}};
  setup->initial_dim = initial_dim;
  return setup;
}

}  // namespace fixtures
