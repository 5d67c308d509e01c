#include "boardless/cli.hpp"

#include <cstdio>
#include <iostream>

#include "CLI11.hpp"

#include "boardless/bench.hpp"
#include "boardless/json_io.hpp"
#include "boardless/verify.hpp"

namespace boardless {

namespace {

template <class Parse>
CLI::Validator parses_as(std::string name, Parse parse) {
  return CLI::Validator(
      [parse](std::string& text) -> std::string {
        try {
          parse(text);
          return {};
        } catch (const std::exception& e) {
          return e.what();
        }
      },
      std::move(name));
}

void emit(const std::string& text, const std::string& out) {
  if (out == "-") {
    std::cout << text;
  } else {
    write_text_file(out, text);
    std::cerr << "wrote " << out << "\n";
  }
}

std::vector<Strategy> parse_all(const std::vector<std::string>& names) {
  std::vector<Strategy> out;
  for (const auto& n : names) out.push_back(parse_strategy(n));
  return out;
}

}  // namespace

int cli_dispatch(int argc, char** argv) {
  CLI::App app{"Boardless game engine: dynamic board growth and playout benchmarks"};
  app.require_subcommand(1);

  std::string shape = "square";
  std::string family = "peri";
  std::string kase = "worst";
  int moves = 25;
  std::string growth_out;
  std::vector<std::string> growth_strategies;
  auto* growth = app.add_subcommand("growth", "Board size and unused share along a scripted growth scenario");
  growth->add_option("--shape", shape, "square | hexagon | triangle")->check(parses_as("SHAPE", parse_shape));
  growth->add_option("--family", family, "peri | zone")->check(parses_as("FAMILY", parse_family));
  growth->add_option("--case", kase, "worst | best")->check(parses_as("CASE", parse_case));
  growth->add_option("--moves", moves, "Move budget")->check(CLI::Range(1, 200));
  growth->add_option("--strategies", growth_strategies, "Strategies to replay (default: BASE and the family)")
      ->check(parses_as("STRATEGY", parse_strategy))
      ->delimiter(',');
  growth->add_option("--out", growth_out, "CSV path, '-' for stdout (default: $BOARDLESS_OUT_DIR/growth-...csv)");

  std::string game = "andantino-square";
  std::vector<std::string> bench_strategies;
  double seconds = 10.0;
  std::uint64_t seed = 1;
  bool no_reset = false;
  std::string bench_out;
  auto* bench = app.add_subcommand("bench", "Timed random playouts per strategy");
  bench->add_option("--game", game, "Config file or bundled game name");
  bench->add_option("--strategies", bench_strategies, "Comma-separated strategies (default: all five)")
      ->check(parses_as("STRATEGY", parse_strategy))
      ->delimiter(',');
  bench->add_option("--seconds", seconds, "Wall-clock budget per strategy")->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "Base seed; playout i uses a seed derived from it and i");
  bench->add_flag("--no-reset", no_reset, "Reuse one prebuilt initial state instead of rebuilding the board");
  bench->add_option("--out", bench_out, "CSV path, '-' for stdout (default: $BOARDLESS_OUT_DIR/bench-<game>.csv)");

  std::string config_path;
  std::string script_path;
  std::string dump_path = "-";
  std::string play_strategy;
  std::string trace_path;
  auto* play = app.add_subcommand("play", "Play a scripted game and dump the final state as JSON");
  play->add_option("--config", config_path, "Config file or bundled game name")->required();
  play->add_option("--script", script_path, "JSON script {\"moves\": [[x, y], ...]}")->required()->check(CLI::ExistingFile);
  play->add_option("--dump", dump_path, "State JSON path, '-' for stdout");
  play->add_option("--strategy", play_strategy, "Override the config's strategy")
      ->check(parses_as("STRATEGY", parse_strategy));
  play->add_option("--trace", trace_path, "Expansion events as JSON lines");

  std::size_t seeds = 100;
  std::uint64_t verify_seed = 1;
  std::vector<std::string> games;
  auto* verify = app.add_subcommand("verify", "RE/MAP, cross-strategy, undo and invariant oracles");
  verify->add_option("--seeds", seeds, "Seeds per game")->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_seed, "First seed");
  verify->add_option("--games", games, "Bundled games (default: all)")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*growth) {
      const auto sc = generate_scenario(parse_shape(shape), parse_family(family), parse_case(kase), moves);
      const auto strategies = growth_strategies.empty() ? family_strategies(sc.family) : parse_all(growth_strategies);
      const auto samples = run_growth(sc, strategies);
      if (growth_out.empty()) {
        growth_out = (output_dir() / ("growth-" + shape + "-" + family + "-" + kase + ".csv")).string();
      }
      emit(growth_csv(samples), growth_out);
      return 0;
    }
    if (*bench) {
      const GameConfig config = load_config(game);
      const auto strategies = bench_strategies.empty() ? std::vector<Strategy>(std::begin(kAllStrategies), std::end(kAllStrategies))
                                                       : parse_all(bench_strategies);
      std::vector<BenchRow> rows;
      for (const Strategy s : strategies) {
        rows.push_back(bench_strategy(config, s, seconds, seed, !no_reset));
        const BenchRow& r = rows.back();
        std::printf("%-20s %-9s %10.2f p/s %12.1f m/s %8zu playouts %7.2f s\n", r.game.c_str(),
                    std::string(to_string(s)).c_str(), r.playouts_per_sec, r.moves_per_sec, r.playouts, r.seconds);
        std::fflush(stdout);
      }
      if (bench_out.empty()) bench_out = (output_dir() / ("bench-" + config.name + ".csv")).string();
      emit(bench_csv(rows), bench_out);
      return 0;
    }
    if (*play) {
      GameConfig config = load_config(config_path);
      if (!play_strategy.empty()) config.strategy = parse_strategy(play_strategy);
      const auto script = script_from_json(read_json_file(script_path));
      GameState st = make_initial_state(make_setup(config));
      for (std::size_t i = 0; i < script.size(); ++i) {
        try {
          play_at(st, script[i]);
        } catch (const IllegalMove& e) {
          throw IllegalMove("script move " + std::to_string(i + 1) + ": " + e.what());
        }
      }
      if (!trace_path.empty()) {
        std::string lines;
        for (const auto& e : st.events) lines += event_to_json(e).dump() + "\n";
        emit(lines, trace_path);
      }
      emit(state_to_json(st).dump(2) + "\n", dump_path);
      return 0;
    }
    if (*verify) {
      VerifyOptions o;
      o.seeds = seeds;
      o.base_seed = verify_seed;
      if (!games.empty()) o.games = games;
      const VerifyResult r = run_oracles(o);
      std::cout << format_report(r);
      return r.ok() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace boardless
