#include "boardless/verify.hpp"

#include <array>
#include <memory>

#include "boardless/bench.hpp"
#include "boardless/expansion.hpp"

namespace boardless {

void OracleReport::check(bool pass, const std::string& what) {
  ++checks;
  if (pass) return;
  ++failed;
  if (failures.size() < 10) failures.push_back(what);
}

std::string check_invariants(const GameState& st) {
  for (std::size_t c = 0; c < st.states.size(); ++c) {
    if (st.states[c].site_count() != st.containers[c].site_count()) return "container size differs from its graph";
    if (auto why = check_coherence(st.states[c]); !why.empty()) return "container " + std::to_string(c) + ": " + why;
  }
  if (!(st.owned == recompute_owned(st))) return "owned registry differs from the chunks";
  const ContainerState& b = st.states[0];
  if (b.site_count() - b.empty.count() != st.occupied) return "occupied count is stale";
  const double pct = unused_pct(st.board_sites(), st.occupied);
  if (pct < 0.0 || pct > 100.0) return "unused share outside [0, 100]";
  return {};
}

std::string check_mapping(const Topology& before, const Topology& after, const IndexMapping& m) {
  if (m.old_to_new.size() != before.cell_count()) return "mapping does not cover the old board";
  if (m.old_to_new.size() + m.added.size() != after.cell_count()) return "mapping and added cells miss new cells";
  std::vector<char> hit(after.cell_count(), 0);
  for (CellId i = 0; i < m.old_to_new.size(); ++i) {
    const CellId j = m.old_to_new[i];
    if (j >= after.cell_count()) return "mapped index past the new board";
    if (hit[j]++ != 0) return "mapping is not injective";
    if (i > 0 && j <= m.old_to_new[i - 1]) return "mapping does not keep the traversal order";
    if (!(after.coord(j) == before.coord(i))) return "cell " + std::to_string(i) + " moved in lattice space";
  }
  for (const CellId a : m.added) {
    if (a >= after.cell_count() || hit[a]++ != 0) return "added cell collides with a mapped one";
    if (before.find(after.coord(a))) return "added cell was already on the board";
  }
  return {};
}

std::string compare_states(const GameState& a, const GameState& b) {
  if (a.board().cells() != b.board().cells()) return "boards differ";
  if (snapshot_tables(a) != snapshot_tables(b)) return "chunk tables differ";
  if (owned_report(a) != owned_report(b)) return "ownership differs";
  if (trial_coords(a) != trial_coords(b)) return "trials differ";
  return {};
}

std::vector<OccupiedCell> canonical_occupied(const GameState& st) {
  std::vector<OccupiedCell> out;
  const ContainerState& b = st.states[0];
  for (SiteId s = 0; s < b.site_count(); ++s) {
    if (b.what[s] != 0) out.push_back({st.board().coord(s), b.what[s], b.who[s]});
  }
  return out;
}

namespace {

struct Lane {
  Strategy strategy;
  GameState st;
  std::shared_ptr<const Topology> seen;
  bool live = true;
  double last_pct = 100.0;
};

std::string where(const std::string& game, std::uint64_t seed, std::size_t move, Strategy s) {
  return game + " seed " + std::to_string(seed) + " move " + std::to_string(move) + " " + std::string(to_string(s));
}

void check_lane(Lane& lane, const std::string& tag, VerifyResult& r) {
  const GameState& st = lane.st;
  const std::string why = check_invariants(st);
  r.invariants.check(why.empty(), tag + ": " + why);
  if (st.containers[0].topology != lane.seen) {
    const std::string bad = st.events.empty() ? "board changed without an event"
                                              : check_mapping(*lane.seen, st.board(), st.events.back().mapping);
    r.invariants.check(bad.empty(), tag + ": " + bad);
    lane.seen = st.containers[0].topology;
  }
  const double pct = unused_pct(st.board_sites(), st.occupied);
  if (lane.strategy == Strategy::Base) {
    r.invariants.check(pct <= lane.last_pct, tag + ": BASE unused share rose");
  }
  lane.last_pct = pct;
}

void check_undo(const GameState& st, const std::string& tag, VerifyResult& r) {
  const auto coords = trial_coords(st);
  const std::size_t n = coords.size();
  for (const std::size_t k : {std::size_t{1}, n / 2, n}) {
    if (k == 0 || k > n) continue;
    GameState back = undo(st, k);
    for (std::size_t i = n - k; i < n; ++i) play_at(back, coords[i]);
    const std::string diff = compare_states(back, st);
    r.undo.check(diff.empty(), tag + " undo " + std::to_string(k) + ": " + diff);
  }
}

void run_one(const GameConfig& config, std::uint64_t seed, VerifyResult& r) {
  std::array<Lane, 4> lanes{Lane{Strategy::Base, {}, {}}, Lane{Strategy::PeriRe, {}, {}},
                            Lane{Strategy::PeriMap, {}, {}}, Lane{Strategy::ZoneRe, {}, {}}};
  for (Lane& l : lanes) {
    l.st = make_initial_state(make_setup(config, l.strategy));
    l.seen = l.st.containers[0].topology;
  }
  Lane lead{Strategy::ZoneMap, make_initial_state(make_setup(config, Strategy::ZoneMap)), {}};
  lead.seen = lead.st.containers[0].topology;
  Lane& peri_re = lanes[1];
  Lane& peri_map = lanes[2];
  Lane& zone_re = lanes[3];

  run_playout(lead.st, config, seed, [&](const GameState& st) {
    const std::size_t move = st.trial.moves.size();
    const CanonCoord c = st.board().coord(st.trial.moves.back().to);
    for (Lane& l : lanes) {
      if (!l.live) continue;
      const std::string tag = where(config.name, seed, move, l.strategy);
      try {
        play_at(l.st, c);
      } catch (const OutOfBounds&) {
        if (l.strategy != Strategy::Base) r.cross.check(false, tag + ": cell missing from a growing board");
        l.live = false;
        continue;
      } catch (const std::exception& e) {
        r.cross.check(false, tag + ": " + e.what());
        l.live = false;
        continue;
      }
      check_lane(l, tag, r);
    }
    // `st` is lead.st.
    check_lane(lead, where(config.name, seed, move, Strategy::ZoneMap), r);

    if (peri_re.live && peri_map.live) {
      const std::string d = compare_states(peri_re.st, peri_map.st);
      r.re_map.check(d.empty(), where(config.name, seed, move, Strategy::PeriRe) + " vs MAP: " + d);
    }
    if (zone_re.live) {
      const std::string d = compare_states(zone_re.st, st);
      r.re_map.check(d.empty(), where(config.name, seed, move, Strategy::ZoneRe) + " vs MAP: " + d);
    }
    const auto occupied = canonical_occupied(st);
    for (const Lane& l : lanes) {
      if (l.live) r.cross.check(canonical_occupied(l.st) == occupied, where(config.name, seed, move, l.strategy) + ": stones differ");
    }
  });

  const std::string tag = config.name + " seed " + std::to_string(seed);
  check_undo(lead.st, tag + " ZONE-MAP", r);
  for (const Lane& l : lanes) {
    if (l.live) check_undo(l.st, tag + " " + std::string(to_string(l.strategy)), r);
  }
}

}  // namespace

VerifyResult run_oracles(const VerifyOptions& options) {
  VerifyResult r;
  for (const auto& game : options.games) {
    const GameConfig config = builtin_config(game);
    for (std::size_t i = 0; i < options.seeds; ++i) run_one(config, options.base_seed + i, r);
  }
  return r;
}

std::string format_report(const VerifyResult& r) {
  std::string out;
  for (const OracleReport* o : {&r.re_map, &r.cross, &r.undo, &r.invariants}) {
    out += (o->ok() ? "PASS " : "FAIL ") + o->name + ": " + std::to_string(o->checks) + " checks, " +
           std::to_string(o->failed) + " failed\n";
    for (const auto& f : o->failures) out += "  " + f + "\n";
  }
  return out;
}

}  // namespace boardless
