#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "boardless/game.hpp"

namespace boardless {

struct OracleReport {
  std::string name;
  std::size_t checks = 0;
  std::size_t failed = 0;
  /// First few failure descriptions.
  std::vector<std::string> failures;

  bool ok() const { return failed == 0; }
  void check(bool pass, const std::string& what);
};

/// Empty when chunks, registry and occupancy agree; otherwise the first problem.
std::string check_invariants(const GameState& st);

/// Empty when the mapping is injective, increasing, keeps every old cell's
/// coordinate, and together with `added` covers the new board exactly.
std::string check_mapping(const Topology& before, const Topology& after, const IndexMapping& m);

/// Empty when both states show the same board, chunks, ownership and trial.
std::string compare_states(const GameState& a, const GameState& b);

struct OccupiedCell {
  CanonCoord at;
  std::uint16_t what = 0;
  std::uint16_t who = 0;

  friend bool operator==(const OccupiedCell&, const OccupiedCell&) = default;
};

/// Occupied board cells in canonical order.
std::vector<OccupiedCell> canonical_occupied(const GameState& st);

struct VerifyOptions {
  std::size_t seeds = 100;
  std::uint64_t base_seed = 1;
  std::vector<std::string> games = builtin_config_names();
};

struct VerifyResult {
  OracleReport re_map{"re-map", 0, 0, {}};
  OracleReport cross{"cross-strategy", 0, 0, {}};
  OracleReport undo{"undo-replay", 0, 0, {}};
  OracleReport invariants{"invariants", 0, 0, {}};

  bool ok() const { return re_map.ok() && cross.ok() && undo.ok() && invariants.ok(); }
};

/// Drives one ZONE-MAP random playout per (game, seed) and replays each move
/// in lock step on the other four strategies, checking after every move that
/// RE and MAP agree, that all strategies hold the same stones (BASE until it
/// runs off its board) and that every invariant holds. Each final state is
/// then checked against undo plus replay.
VerifyResult run_oracles(const VerifyOptions& options);

std::string format_report(const VerifyResult& r);

}  // namespace boardless
