#include "boardless/game.hpp"

#include <array>
#include <random>
#include <stdexcept>

namespace boardless {

void validate(const GameConfig& c) {
  auto fail = [&](const std::string& why) { throw std::invalid_argument("config '" + c.name + "': " + why); };
  if (c.move_cap < 1) fail("moveCap must be at least 1");
  if (c.players < 1) fail("at least one player is required");
  for (std::uint16_t p = 1; p <= c.players; ++p) {
    bool owns = false;
    for (const auto& t : c.components) owns = owns || t.owner == p;
    if (!owns) fail("player " + std::to_string(p) + " owns no component type");
  }
  for (const auto& t : c.components) {
    if (t.owner > c.players) fail("component owner out of range");
  }
  if (c.initial_tiles < 0) fail("initial tile count must be non-negative");
  if (c.initial_tiles > 0 && (c.initial_component == 0 || c.initial_component > c.components.size())) {
    fail("initial tiles need a valid component");
  }
  if (c.placement.kind == PlacementRule::Kind::AdjacentAtLeast) {
    const int most = c.placement.adjacency == Adjacency::Edge ? max_edge_neighbors(c.shape)
                                                              : max_vertex_neighbors(c.shape);
    if (c.placement.k < 1 || c.placement.k > most) fail("adjacency threshold outside 1.." + std::to_string(most));
    if (c.placement.bootstrap_moves < 0) fail("bootstrapMoves must be non-negative");
  }
  if (c.win.kind == WinRule::Kind::LineOfN) {
    if (c.win.n < 2) fail("line length must be at least 2");
    if (c.shape == Shape::Triangle) fail("line wins are not defined on triangular boards");
  }
}

std::vector<std::string> builtin_config_names() {
  std::vector<std::string> out;
  for (const char* game : {"andantino", "freeplace"}) {
    for (Shape s : kAllShapes) out.push_back(std::string(game) + "-" + std::string(to_string(s)));
  }
  return out;
}

GameConfig builtin_config(std::string_view name) {
  const auto dash = name.find('-');
  if (dash == std::string_view::npos) throw std::invalid_argument("unknown game: " + std::string(name));
  const std::string_view game = name.substr(0, dash);
  GameConfig c;
  c.shape = parse_shape(name.substr(dash + 1));
  c.name = std::string(game) + "-" + std::string(to_string(c.shape));
  if (game == "andantino") {
    c.components = {{1, std::nullopt}, {2, std::nullopt}};
    // Square and triangle cells touch by corners as well; with edge contact
    // only, two stones never give a third site two neighbours.
    c.placement = {PlacementRule::Kind::AdjacentAtLeast, 2,
                   c.shape == Shape::Hexagon ? Adjacency::Edge : Adjacency::Vertex, 2};
    if (c.shape != Shape::Triangle) c.win = {WinRule::Kind::LineOfN, 5};
  } else if (game == "freeplace") {
    c.components = {{1, 100u}, {2, 100u}};
    c.placement = {};
  } else {
    throw std::invalid_argument("unknown game: " + std::string(name));
  }
  validate(c);
  return c;
}

std::shared_ptr<const Setup> make_setup(const GameConfig& c, Strategy strategy) {
  auto s = std::make_shared<Setup>();
  s->shape = c.shape;
  s->strategy = strategy;
  s->players = c.players;
  s->components = c.components;
  s->initial_tiles = c.initial_tiles;
  s->initial_component = c.initial_component;
  s->rule = c.placement;
  return s;
}

std::shared_ptr<const Setup> make_setup(const GameConfig& c) { return make_setup(c, c.strategy); }

namespace {

bool hand_exhausted(const GameState& st, std::uint16_t component) {
  const auto site = st.hand_site(component);
  if (!site) return false;
  const std::size_t c = st.container_of(*site);
  return st.states[c].empty.test(*site - st.containers[c].offset);
}

// Neighbour of `from` one step along `dir`; every line axis joins cells that
// share at least a vertex, so the step is found in the adjacency list.
std::optional<CellId> step(const Topology& t, CellId from, CanonCoord dir) {
  const CanonCoord at = t.coord(from);
  const CanonCoord want{at.x + dir.x, at.y + dir.y};
  for (const CellId n : t.vertex_adjacent(from)) {
    if (t.coord(n) == want) return n;
  }
  return std::nullopt;
}

int run_length(const Topology& t, const ContainerState& b, CellId from, CanonCoord dir, std::uint16_t player) {
  int n = 0;
  for (auto c = step(t, from, dir); c && b.what[*c] != 0 && b.who[*c] == player; c = step(t, *c, dir)) ++n;
  return n;
}

}  // namespace

std::vector<Move> legal_moves(const GameState& st) {
  std::vector<Move> out;
  const std::uint16_t player = st.player_to_move();
  if (hand_exhausted(st, st.component_of(player))) return out;
  st.states[0].playable.for_each([&](std::size_t s) { out.push_back(make_move(st, static_cast<SiteId>(s))); });
  return out;
}

int line_length_through(const GameState& st, SiteId site) {
  const ContainerState& b = st.states[0];
  if (b.what[site] == 0) return 0;
  const std::uint16_t player = b.who[site];
  const Topology& t = st.board();
  const auto axes = line_axes(t.shape());
  // Runs only start at friendly neighbours, so only those directions are walked.
  std::array<int, 12> run{};
  const CanonCoord at = t.coord(site);
  for (const CellId n : t.vertex_adjacent(site)) {
    if (b.what[n] == 0 || b.who[n] != player) continue;
    const CanonCoord c = t.coord(n);
    const CanonCoord d{c.x - at.x, c.y - at.y};
    for (std::size_t a = 0; a < axes.size(); ++a) {
      if (d == axes[a]) run[2 * a] = 1 + run_length(t, b, n, d, player);
      if (d.x == -axes[a].x && d.y == -axes[a].y) run[2 * a + 1] = 1 + run_length(t, b, n, d, player);
    }
  }
  int best = 1;
  for (std::size_t a = 0; a < axes.size(); ++a) best = std::max(best, 1 + run[2 * a] + run[2 * a + 1]);
  return best;
}

bool detect_line(const GameState& st, int n, std::uint16_t player) {
  if (n < 2) throw std::invalid_argument("line length must be at least 2");
  if (st.board().shape() == Shape::Triangle) throw std::invalid_argument("line wins are not defined on triangles");
  const ContainerState& b = st.states[0];
  for (SiteId s = 0; s < b.site_count(); ++s) {
    if (b.what[s] == 0 || b.who[s] != player) continue;
    for (CanonCoord d : line_axes(st.board().shape())) {
      if (1 + run_length(st.board(), b, s, d, player) >= n) return true;
    }
  }
  return false;
}

PlayoutResult run_playout(GameState& st, const GameConfig& config, std::uint64_t seed, const MoveObserver& observer) {
  st.trial.seed = seed;
  std::mt19937_64 rng(seed);
  TrialStatus status = TrialStatus::MoveCap;
  std::uint16_t winner = 0;
  const bool lines = config.win.kind == WinRule::Kind::LineOfN;
  while (st.trial.moves.size() < static_cast<std::size_t>(config.move_cap)) {
    const std::uint16_t player = st.player_to_move();
    const std::size_t n = st.states[0].playable.count();
    if (n == 0 || hand_exhausted(st, st.component_of(player))) {
      status = TrialStatus::NoMoves;
      break;
    }
    const std::size_t k = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    play_move(st, make_move(st, static_cast<SiteId>(st.states[0].playable.nth(k))));
    if (observer) observer(st);
    if (lines && line_length_through(st, st.trial.moves.back().to) >= config.win.n) {
      status = TrialStatus::Won;
      winner = player;
      break;
    }
  }
  st.trial.status = status;
  st.trial.winner = winner;

  PlayoutResult r;
  r.moves = st.trial.moves.size();
  r.status = status;
  r.winner = winner;
  r.board_cells = st.board_sites();
  r.occupied = st.occupied;
  r.expansions = st.events.size();
  for (const auto& e : st.events) r.cells_added += e.added();
  return r;
}

PlayoutResult random_playout(const GameConfig& config, Strategy strategy, std::uint64_t seed) {
  GameState st = make_initial_state(make_setup(config, strategy));
  return run_playout(st, config, seed);
}

}  // namespace boardless
