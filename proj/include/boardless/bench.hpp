#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "boardless/game.hpp"

namespace boardless {

enum class Family : std::uint8_t { Peri, Zone };
enum class Case : std::uint8_t { Worst, Best };

std::string_view to_string(Family f);
std::string_view to_string(Case c);
Family parse_family(std::string_view text);
Case parse_case(std::string_view text);

struct GrowthScenario {
  Shape shape = Shape::Square;
  Family family = Family::Peri;
  Case kase = Case::Worst;
  std::vector<CanonCoord> moves;
};

/// Deterministic placement sequence from a one-cell board.
///
/// Worst picks the cell that adds the most tiles, ties going toward the
/// bottom-right. Best picks the cell that adds the fewest, ties going to the
/// cell closest to the first one, which winds a compact spiral. The hexagonal
/// zone worst case opens with the straight run and hook of the reference
/// drawing before turning greedy. Throws std::invalid_argument unless
/// 1 <= budget <= 200.
GrowthScenario generate_scenario(Shape shape, Family family, Case kase, int budget);

/// Two players with unlimited stones placing anywhere; used for growth runs.
GameConfig growth_config(Shape shape);

struct MetricSample {
  std::size_t move_index = 0;
  Strategy strategy = Strategy::Base;
  std::size_t board_cells = 0;
  std::size_t occupied = 0;
  double unused_pct = 0.0;

  friend bool operator==(const MetricSample&, const MetricSample&) = default;
};

double unused_pct(std::size_t board_cells, std::size_t occupied);

/// Strategies plotted for a family: BASE plus the family's two migrations.
std::vector<Strategy> family_strategies(Family family);

/// One sample per move and strategy, moves numbered from 1. BASE rows stop
/// at the first move that leaves its fixed board.
std::vector<MetricSample> run_growth(const GrowthScenario& scenario, std::span<const Strategy> strategies);
std::vector<MetricSample> run_growth(const GrowthScenario& scenario);

std::string growth_csv(const std::vector<MetricSample>& samples);

struct BenchRow {
  std::string game;
  Strategy strategy = Strategy::Base;
  bool reset = true;
  double seconds = 0.0;
  std::size_t playouts = 0;
  std::size_t moves = 0;
  double playouts_per_sec = 0.0;
  double moves_per_sec = 0.0;
  std::uint64_t seed = 0;
};

/// Seed of playout `index` in a run seeded with `base`.
std::uint64_t playout_seed(std::uint64_t base, std::uint64_t index);

/// Runs whole playouts back to back until `seconds` of wall time have
/// passed; the playout in flight at expiry completes and counts. With reset
/// every playout starts from a freshly built board; without it playouts copy
/// one prebuilt initial state.
BenchRow bench_strategy(const GameConfig& config, Strategy strategy, double seconds, std::uint64_t seed,
                        bool reset = true);

std::vector<BenchRow> run_timed_bench(const GameConfig& config, std::span<const Strategy> strategies,
                                      double seconds, std::uint64_t seed, bool reset = true);

std::string bench_csv(const std::vector<BenchRow>& rows);

/// Directory for generated files: $BOARDLESS_OUT_DIR, or the working directory.
std::filesystem::path output_dir();

}  // namespace boardless
