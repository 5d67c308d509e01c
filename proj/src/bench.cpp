#include "boardless/bench.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <tuple>

#include "boardless/expansion.hpp"

namespace boardless {

std::string_view to_string(Family f) { return f == Family::Peri ? "peri" : "zone"; }
std::string_view to_string(Case c) { return c == Case::Worst ? "worst" : "best"; }

Family parse_family(std::string_view text) {
  if (text == "peri" || text == "PERI") return Family::Peri;
  if (text == "zone" || text == "ZONE") return Family::Zone;
  throw std::invalid_argument("unknown family: " + std::string(text));
}

Case parse_case(std::string_view text) {
  if (text == "worst") return Case::Worst;
  if (text == "best") return Case::Best;
  throw std::invalid_argument("unknown case: " + std::string(text));
}

GameConfig growth_config(Shape shape) {
  GameConfig c;
  c.name = "growth-" + std::string(to_string(shape));
  c.shape = shape;
  c.components = {{1, std::nullopt}, {2, std::nullopt}};
  c.move_cap = 200;
  validate(c);
  return c;
}

namespace {

std::shared_ptr<const Setup> growth_setup(Shape shape, Strategy strategy) {
  auto s = std::make_shared<Setup>(*make_setup(growth_config(shape), strategy));
  if (strategy != Strategy::Base) s->initial_dim = 1;
  return s;
}

// Squared distance to the centre of cell (0, 0), scaled to stay integral.
std::int64_t spread(Shape shape, CanonCoord c) {
  const std::int64_t x = c.x;
  const std::int64_t y = c.y;
  switch (shape) {
    case Shape::Square: return x * x + y * y;
    case Shape::Hexagon: return x * x + x * y + y * y;
    case Shape::Triangle: {
      const std::int64_t down = triangle_orient(c) == Orient::Down ? 1 : 0;
      return 3 * x * x + (3 * y + down) * (3 * y + down);
    }
  }
  return 0;
}

}  // namespace

GrowthScenario generate_scenario(Shape shape, Family family, Case kase, int budget) {
  if (budget < 1 || budget > 200) throw std::invalid_argument("move budget must be within 1..200");
  GrowthScenario sc{shape, family, kase, {}};
  GameState st = make_initial_state(growth_setup(shape, family == Family::Peri ? Strategy::PeriMap : Strategy::ZoneMap));
  std::vector<CanonCoord> opening;
  if (shape == Shape::Hexagon && family == Family::Zone && kase == Case::Worst) {
    opening = {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {3, 1}, {2, 1}};
  }
  for (int i = 0; i < budget; ++i) {
    CanonCoord pick{};
    if (static_cast<std::size_t>(i) < opening.size()) {
      pick = opening[i];
    } else {
      const Topology& t = st.board();
      const std::size_t ring = family == Family::Peri ? perimeter_added_cells(shape, t.dim().value()).added : 0;
      bool found = false;
      std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t> best;
      st.states[0].playable.for_each([&](std::size_t s) {
        const CanonCoord c = t.coord(static_cast<CellId>(s));
        const auto added = static_cast<std::int64_t>(
            family == Family::Peri ? (t.is_perimeter(static_cast<CellId>(s)) ? ring : 0) : zone_missing(t, c).size());
        // Both cases minimise the key.
        const auto key = kase == Case::Worst ? std::tuple{-added, std::int64_t{3} * c.y - c.x, std::int64_t{c.y}, std::int64_t{0}}
                                             : std::tuple{added, spread(shape, c), std::int64_t{c.y}, std::int64_t{c.x}};
        if (!found || key < best) {
          best = key;
          pick = c;
          found = true;
        }
      });
      if (!found) throw std::logic_error("growth board has no empty cell");
    }
    sc.moves.push_back(pick);
    play_at(st, pick);
  }
  return sc;
}

double unused_pct(std::size_t board_cells, std::size_t occupied) {
  if (board_cells == 0) return 0.0;
  return static_cast<double>(board_cells - occupied) / static_cast<double>(board_cells) * 100.0;
}

std::vector<Strategy> family_strategies(Family family) {
  if (family == Family::Peri) return {Strategy::Base, Strategy::PeriRe, Strategy::PeriMap};
  return {Strategy::Base, Strategy::ZoneRe, Strategy::ZoneMap};
}

std::vector<MetricSample> run_growth(const GrowthScenario& sc, std::span<const Strategy> strategies) {
  std::vector<MetricSample> out;
  for (const Strategy strategy : strategies) {
    GameState st = make_initial_state(growth_setup(sc.shape, strategy));
    for (std::size_t i = 0; i < sc.moves.size(); ++i) {
      try {
        play_at(st, sc.moves[i]);
      } catch (const OutOfBounds&) {
        if (strategy == Strategy::Base) break;
        throw;
      }
      out.push_back({i + 1, strategy, st.board_sites(), st.occupied, unused_pct(st.board_sites(), st.occupied)});
    }
  }
  return out;
}

std::vector<MetricSample> run_growth(const GrowthScenario& sc) {
  const auto strategies = family_strategies(sc.family);
  return run_growth(sc, strategies);
}

std::string growth_csv(const std::vector<MetricSample>& samples) {
  std::string out = "moveIndex,strategy,boardCells,occupiedCells,unusedPct\n";
  char pct[32];
  for (const auto& s : samples) {
    std::snprintf(pct, sizeof pct, "%.4f", s.unused_pct);
    out += std::to_string(s.move_index) + "," + std::string(to_string(s.strategy)) + "," +
           std::to_string(s.board_cells) + "," + std::to_string(s.occupied) + "," + pct + "\n";
  }
  return out;
}

std::uint64_t playout_seed(std::uint64_t base, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (std::uint64_t{words[0]} << 32) | words[1];
}

BenchRow bench_strategy(const GameConfig& config, Strategy strategy, double seconds, std::uint64_t seed, bool reset) {
  if (!(seconds > 0)) throw std::invalid_argument("bench duration must be positive");
  using Clock = std::chrono::steady_clock;
  BenchRow row{config.name, strategy, reset, 0.0, 0, 0, 0.0, 0.0, seed};
  const auto setup = make_setup(config, strategy);
  GameState prebuilt;
  if (!reset) prebuilt = make_initial_state(setup);
  const auto start = Clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };
  while (elapsed() < seconds) {
    const std::uint64_t s = playout_seed(seed, row.playouts);
    PlayoutResult r;
    if (reset) {
      GameState st = make_initial_state(setup);
      r = run_playout(st, config, s);
    } else {
      GameState st = prebuilt;
      r = run_playout(st, config, s);
    }
    ++row.playouts;
    row.moves += r.moves;
  }
  row.seconds = elapsed();
  row.playouts_per_sec = static_cast<double>(row.playouts) / row.seconds;
  row.moves_per_sec = static_cast<double>(row.moves) / row.seconds;
  return row;
}

std::vector<BenchRow> run_timed_bench(const GameConfig& config, std::span<const Strategy> strategies, double seconds,
                                      std::uint64_t seed, bool reset) {
  std::vector<BenchRow> rows;
  for (const Strategy s : strategies) rows.push_back(bench_strategy(config, s, seconds, seed, reset));
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = "game,strategy,reset,seconds,playouts,moves,playoutsPerSec,movesPerSec,seed\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%s,%s,%d,%.3f,%zu,%zu,%.2f,%.2f,%llu\n", r.game.c_str(),
                  std::string(to_string(r.strategy)).c_str(), r.reset ? 1 : 0, r.seconds, r.playouts, r.moves,
                  r.playouts_per_sec, r.moves_per_sec, static_cast<unsigned long long>(r.seed));
    out += buf;
  }
  return out;
}

std::filesystem::path output_dir() {
  if (const char* dir = std::getenv("BOARDLESS_OUT_DIR"); dir != nullptr && *dir != '\0') return dir;
  return std::filesystem::current_path();
}

}  // namespace boardless
