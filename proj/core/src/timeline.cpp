#include "orbitplan/timeline.hpp"

#include <algorithm>

#include "orbitplan/errors.hpp"

namespace orbitplan {

namespace {

struct PassPiece {
  UtcTime start;
  UtcTime end;
  int pass_ref;
  std::string station;
  double rate_mbps;
};

}  // namespace

void EnvelopeConfig::validate() const {
  if (eclipse_power_w >= sunlit_power_w)
    fail(Errc::bad_config, "eclipse power must be below sunlit power");
  if (sunlit_compute < 0 || sunlit_compute > 1 || eclipse_compute < 0 ||
      eclipse_compute > 1)
    fail(Errc::bad_config, "compute capacities must lie in [0, 1]");
  if (thermal_limit_w <= 0)
    fail(Errc::bad_config, "thermal limit must be positive");
}

std::vector<OrbitalWindow> build_timeline(
    const std::vector<IlluminationWindow>& illum,
    const std::vector<PassPrediction>& passes, const EnvelopeConfig& cfg) {
  cfg.validate();
  if (illum.empty())
    fail(Errc::illumination_gap, "empty illumination timeline");
  for (std::size_t i = 0; i < illum.size(); ++i) {
    if (illum[i].end <= illum[i].start)
      fail(Errc::illumination_gap, "illumination window with non-positive span");
    if (i > 0) {
      if (illum[i].start != illum[i - 1].end)
        fail(Errc::illumination_gap,
             "illumination windows must tile the horizon without gaps");
      if (illum[i].kind == illum[i - 1].kind)
        fail(Errc::illumination_gap,
             "adjacent illumination windows must alternate kind");
    }
  }
  const UtcTime horizon_start = illum.front().start;
  const UtcTime horizon_end = illum.back().end;

  // Clip passes to the horizon and resolve overlaps by earliest AOS: the
  // later pass keeps only its non-overlapping remainder.
  std::vector<const PassPrediction*> sorted;
  sorted.reserve(passes.size());
  for (const auto& p : passes) sorted.push_back(&p);
  std::sort(sorted.begin(), sorted.end(), [](const auto* a, const auto* b) {
    if (a->aos != b->aos) return a->aos < b->aos;
    return a->station_id < b->station_id;
  });

  std::vector<PassPiece> pieces;
  UtcTime frontier = horizon_start;
  for (const auto* p : sorted) {
    UtcTime start = std::max({p->aos, frontier, horizon_start});
    UtcTime end = std::min(p->los, horizon_end);
    if (end <= start) continue;
    pieces.push_back({start, end, p->id, p->station_id, p->mean_data_rate_mbps});
    frontier = std::max(frontier, end);
  }

  std::vector<OrbitalWindow> windows;
  auto emit_orbit = [&](UtcTime a, UtcTime b, IlluminationKind kind) {
    if (a.seconds_until(b) < cfg.min_orbit_window_s) return;  // dropped sliver
    OrbitalWindow w;
    w.t_start = a;
    w.t_end = b;
    const bool sunlit = kind == IlluminationKind::sunlit;
    w.power_w = sunlit ? cfg.sunlit_power_w : cfg.eclipse_power_w;
    w.compute = sunlit ? cfg.sunlit_compute : cfg.eclipse_compute;
    w.thermal_limit_w = cfg.thermal_limit_w;
    w.kind = sunlit ? WindowKind::orbit_sunlit : WindowKind::orbit_eclipse;
    windows.push_back(std::move(w));
  };
  auto emit_pass = [&](const PassPiece& piece, UtcTime a, UtcTime b,
                       IlluminationKind kind) {
    OrbitalWindow w;
    w.t_start = a;
    w.t_end = b;
    const bool sunlit = kind == IlluminationKind::sunlit;
    w.power_w = sunlit ? cfg.sunlit_power_w : cfg.eclipse_power_w;
    w.compute = sunlit ? cfg.sunlit_compute : cfg.eclipse_compute;
    w.thermal_limit_w = cfg.thermal_limit_w;
    w.comms_rate_mbps = piece.rate_mbps;
    w.station = piece.station;
    w.kind = WindowKind::pass;
    w.pass_ref = piece.pass_ref;
    windows.push_back(std::move(w));
  };

  for (const auto& seg : illum) {
    // Pass pieces clipped to this illumination segment; sub-minimum clips
    // revert to orbit time so the surrounding orbit windows merge.
    std::vector<PassPiece> local;
    for (const auto& piece : pieces) {
      const UtcTime a = std::max(piece.start, seg.start);
      const UtcTime b = std::min(piece.end, seg.end);
      if (b <= a) continue;
      if (a.seconds_until(b) < cfg.min_pass_window_s) continue;
      local.push_back({a, b, piece.pass_ref, piece.station, piece.rate_mbps});
    }

    UtcTime cursor = seg.start;
    for (const auto& piece : local) {
      emit_orbit(cursor, piece.start, seg.kind);
      emit_pass(piece, piece.start, piece.end, seg.kind);
      cursor = piece.end;
    }
    emit_orbit(cursor, seg.end, seg.kind);
  }

  for (std::size_t i = 0; i < windows.size(); ++i)
    windows[i].id = static_cast<int>(i);
  return windows;
}

}  // namespace orbitplan
