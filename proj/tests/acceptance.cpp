// One PASS/FAIL line per acceptance criterion; exits non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "boardless/bench.hpp"
#include "boardless/verify.hpp"
#include "fixtures.hpp"

using namespace boardless;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Closed forms restated here so the library is checked against an
// independent transcription.
std::size_t ring(Shape s, std::size_t d) {
  switch (s) {
    case Shape::Square: return 4 * (d + 2) - 4;
    case Shape::Hexagon: return 6 * (d + 1) - 6;
    case Shape::Triangle: return 3 * (((d + 3) * 2) - 1) - 6;
  }
  return 0;
}

int grow(Shape s) { return s == Shape::Square ? 2 : s == Shape::Hexagon ? 1 : 3; }

Outcome formulas() {
  Outcome o;
  for (Shape s : kAllShapes) {
    for (int d = 1; d <= 20; ++d) {
      const PerimeterGrowth g = perimeter_added_cells(s, d);
      if (g.added != ring(s, d) || g.new_dim != d + grow(s)) o.fail("closed form differs at dim " + std::to_string(d));
      if (cell_count({s, g.new_dim}) - cell_count({s, d}) != g.added) o.fail("count difference at dim " + std::to_string(d));
      const auto before = enumerate_board({s, d});
      const auto after = enumerate_board({s, g.new_dim});
      for (std::size_t id = 0; id < before.size(); ++id) {
        const std::size_t to = perimeter_map_index(s, d, board_row_of({s, d}, id), id);
        if (to >= after.size() || !(after[to] == before[id])) o.fail("map index moves a cell at dim " + std::to_string(d));
      }
    }
  }
  if (perimeter_added_cells(Shape::Square, 4).added != 20) o.fail("square ring of 20");
  if (perimeter_added_cells(Shape::Hexagon, 3).added != 18) o.fail("hexagon ring of 18");
  if (perimeter_added_cells(Shape::Triangle, 3).added != 27) o.fail("triangle ring of 27");
  if (perimeter_map_index(Shape::Square, 3, 2, 7) != 17) o.fail("square 7 -> 17");
  if (perimeter_map_index(Shape::Square, 3, 0, 0) != 6) o.fail("square 0 -> 6");
  if (perimeter_map_index(Shape::Hexagon, 3, 3, 14) != 25) o.fail("hexagon 14 -> 25");
  if (perimeter_map_index(Shape::Triangle, 3, 3, 7) != 25) o.fail("triangle 7 -> 25");
  if (o.pass) o.detail = "dims 1..20 on 3 shapes, worked examples exact";
  return o;
}

struct Checkpoint {
  Shape shape;
  Family family;
  Case kase;
  int move;
  std::size_t cells;
};

Outcome growth() {
  const std::vector<Checkpoint> points{
      {Shape::Square, Family::Peri, Case::Worst, 4, 81},      {Shape::Square, Family::Peri, Case::Worst, 25, 2601},
      {Shape::Square, Family::Peri, Case::Best, 25, 49},      {Shape::Square, Family::Zone, Case::Worst, 4, 24},
      {Shape::Square, Family::Zone, Case::Best, 4, 16},       {Shape::Hexagon, Family::Peri, Case::Worst, 4, 61},
      {Shape::Hexagon, Family::Peri, Case::Worst, 19, 1141},  {Shape::Hexagon, Family::Peri, Case::Best, 19, 37},
      {Shape::Hexagon, Family::Zone, Case::Worst, 4, 16},     {Shape::Hexagon, Family::Zone, Case::Worst, 7, 22},
      {Shape::Hexagon, Family::Zone, Case::Best, 7, 19},      {Shape::Triangle, Family::Peri, Case::Worst, 4, 169},
      {Shape::Triangle, Family::Peri, Case::Worst, 49, 21904}, {Shape::Triangle, Family::Peri, Case::Best, 49, 100},
      {Shape::Triangle, Family::Zone, Case::Worst, 5, 41},    {Shape::Triangle, Family::Zone, Case::Worst, 13, 97},
      {Shape::Triangle, Family::Zone, Case::Best, 13, 37},
  };
  Outcome o;
  for (const Checkpoint& p : points) {
    const auto rows = run_growth(generate_scenario(p.shape, p.family, p.kase, p.move));
    for (const MetricSample& r : rows) {
      if (r.move_index != static_cast<std::size_t>(p.move) || r.strategy == Strategy::Base) continue;
      if (r.board_cells != p.cells) {
        o.fail(std::string(to_string(p.shape)) + " " + std::string(to_string(p.family)) + " " +
               std::string(to_string(p.kase)) + " " + std::string(to_string(r.strategy)) + " @" +
               std::to_string(p.move) + ": " + std::to_string(r.board_cells) + " != " + std::to_string(p.cells));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(points.size()) + " checkpoints exact for RE and MAP";
  return o;
}

Outcome golden() {
  const std::string tables =
      "Board\n"
      "  empty    0, 1, 4, 7, 8, 11, 12, 14\n"
      "  what     2:3, 3:2, 5:3, 6:1, 9:1, 10:2, 13:2, 15:2\n"
      "  who      2:2, 3:1, 5:2, 6:0, 9:0, 10:1, 13:1, 15:1\n"
      "  count    2:1, 3:1, 5:1, 6:1, 9:1, 10:1, 13:1, 15:1\n"
      "  state    \n"
      "  playable 0, 1, 4, 7, 8, 11, 12, 14\n"
      "Player 1 hand\n"
      "  empty    \n"
      "  what     0:2\n"
      "  who      0:1\n"
      "  count    0:2\n"
      "  state    \n"
      "  playable \n"
      "Player 2 hand\n"
      "  empty    \n"
      "  what     0:3\n"
      "  who      0:2\n"
      "  count    0:4\n"
      "  state    \n"
      "  playable \n";
  const std::string owned = "Board [{6, 9}]\nPlayer 1 [{3, 10, 13, 15, 16}]\nPlayer 2 [{2, 5, 17}]\n";
  const GameState st = fixtures::example_position();
  Outcome o;
  if (format_tables(snapshot_tables(st)) != tables) o.fail("chunk tables differ");
  if (format_owned(owned_report(st)) != owned) o.fail("owned report differs");
  if (o.pass) o.detail = "board, both hands and ownership exact";
  return o;
}

VerifyResult oracle_run;

Outcome equivalence() {
  VerifyOptions opts;
  opts.seeds = 100;
  oracle_run = run_oracles(opts);
  Outcome o;
  for (const OracleReport* r : {&oracle_run.re_map, &oracle_run.cross, &oracle_run.undo}) {
    if (!r->ok()) o.fail(r->name + ": " + std::to_string(r->failed) + " mismatches, first: " + r->failures.front());
  }
  if (o.pass) {
    o.detail = std::to_string(opts.seeds) + " seeds x " + std::to_string(opts.games.size()) + " games, " +
               std::to_string(oracle_run.re_map.checks + oracle_run.cross.checks + oracle_run.undo.checks) +
               " comparisons";
  }
  return o;
}

Outcome invariants() {
  Outcome o;
  if (!oracle_run.invariants.ok()) {
    o.fail(std::to_string(oracle_run.invariants.failed) + " violations, first: " + oracle_run.invariants.failures.front());
  }
  // Growth runs add the unused-share bounds on scripted boards.
  std::size_t samples = 0;
  for (Shape s : kAllShapes) {
    for (Family f : {Family::Peri, Family::Zone}) {
      for (Case c : {Case::Worst, Case::Best}) {
        double last = 100.0;
        for (const MetricSample& r : run_growth(generate_scenario(s, f, c, 12))) {
          ++samples;
          if (r.unused_pct < 0.0 || r.unused_pct > 100.0) o.fail("unused share out of range");
          if (r.strategy == Strategy::Base) {
            if (r.unused_pct > last) o.fail("BASE unused share rose");
            last = r.unused_pct;
          }
        }
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(oracle_run.invariants.checks) + " per-move checks, " + std::to_string(samples) +
               " growth samples";
  }
  return o;
}

constexpr double kBenchSeconds = 10.0;
BenchRow base_reset;

Outcome throughput() {
  const GameConfig config = builtin_config("andantino-square");
  Outcome o;
  std::string detail;
  for (Strategy s : kAllStrategies) {
    const BenchRow r = bench_strategy(config, s, kBenchSeconds, 1, true);
    std::printf("  %-9s %10.2f p/s %12.1f m/s %8zu playouts in %.2f s\n", std::string(to_string(s)).c_str(),
                r.playouts_per_sec, r.moves_per_sec, r.playouts, r.seconds);
    std::fflush(stdout);
    if (s == Strategy::Base) {
      base_reset = r;
      continue;
    }
    const double ratio = r.playouts_per_sec / base_reset.playouts_per_sec;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%s %.2fx", detail.empty() ? "" : ", ", std::string(to_string(s)).c_str(), ratio);
    detail += buf;
    if (ratio < 2.0) o.fail(std::string(to_string(s)) + " only " + buf);
  }
  if (o.pass) o.detail = detail + " of BASE";
  return o;
}

Outcome reset_sanity() {
  const GameConfig config = builtin_config("andantino-square");
  const BenchRow kept = bench_strategy(config, Strategy::Base, kBenchSeconds, 1, false);
  const double ratio = static_cast<double>(kept.playouts) / static_cast<double>(base_reset.playouts);
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu playouts without reset vs %zu with reset, %.1fx", kept.playouts,
                base_reset.playouts, ratio);
  Outcome o;
  o.detail = buf;
  if (ratio < 50.0) o.fail(std::string(buf) + ", below 50x");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"formula suite", formulas},
      {"growth checkpoints", growth},
      {"golden tables", golden},
      {"equivalence oracles", equivalence},
      {"invariant sweep", invariants},
      {"throughput vs BASE", throughput},
      {"reset sanity", reset_sanity},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("criterion %zu %s: %s (%s; %.2f s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str(), since(t0));
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
