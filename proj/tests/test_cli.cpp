#include "boardless/cli.hpp"

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "boardless/json_io.hpp"
#include "doctest.h"

namespace {

int run(std::vector<std::string> args) {
  args.insert(args.begin(), "boardless");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return boardless::cli_dispatch(static_cast<int>(argv.size()), argv.data());
}

std::filesystem::path scratch() {
  const auto dir = std::filesystem::temp_directory_path() / "boardless-cli-test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("growth writes the CSV") {
  const auto out = scratch() / "growth.csv";
  CHECK(run({"growth", "--shape", "square", "--family", "peri", "--case", "worst", "--moves", "25", "--out",
             out.string()}) == 0);
  const std::string csv = slurp(out);
  CHECK(csv.find("25,PERI-MAP,2601,25,") != std::string::npos);
  CHECK(run({"growth", "--shape", "pentagon"}) != 0);
  CHECK(run({"growth", "--moves", "0"}) != 0);
}

TEST_CASE("bench rejects unknown strategies and runs known ones") {
  CHECK(run({"bench", "--strategies", "FOO"}) != 0);
  CHECK(run({"bench", "--game", "no-such-game", "--seconds", "0.01"}) != 0);
  const auto out = scratch() / "bench.csv";
  CHECK(run({"bench", "--game", "andantino-hexagon", "--strategies", "BASE,ZONE-MAP", "--seconds", "0.02", "--out",
             out.string()}) == 0);
  const std::string csv = slurp(out);
  CHECK(csv.find("andantino-hexagon,BASE,1,") != std::string::npos);
  CHECK(csv.find("andantino-hexagon,ZONE-MAP,1,") != std::string::npos);
}

TEST_CASE("play dumps the scripted state") {
  const auto dir = scratch();
  boardless::write_text_file(dir / "script.json", R"({"moves": [[0, 0], [1, 0], [0, 1]]})");
  const auto dump = dir / "state.json";
  CHECK(run({"play", "--config", "andantino-hexagon", "--script", (dir / "script.json").string(), "--dump",
             dump.string()}) == 0);
  const auto j = boardless::read_json_file(dump);
  CHECK(j["occupied"] == 3);
  boardless::write_text_file(dir / "bad.json", R"({"moves": [[0, 0], [5, 5]]})");
  CHECK(run({"play", "--config", "andantino-hexagon", "--script", (dir / "bad.json").string()}) != 0);
  CHECK(run({"play", "--config", "andantino-hexagon", "--script", (dir / "missing.json").string()}) != 0);
}

TEST_CASE("verify exits cleanly when the oracles pass") {
  CHECK(run({"verify", "--seeds", "1", "--games", "andantino-square"}) == 0);
  CHECK(run({"verify", "--games", "nope"}) != 0);
  CHECK(run({"frobnicate"}) != 0);
}
