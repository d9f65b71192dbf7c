#include "orbitplan/transfer.hpp"

#include <algorithm>
#include <map>

#include "orbitplan/errors.hpp"

namespace orbitplan {

namespace {

constexpr double kTransferPowerW = 40.0;
constexpr double kTransferCompute = 0.1;
constexpr double kTransferThermalW = 15.0;
constexpr double kTransferMemoryMb = 128.0;
constexpr int kTransferMaxRetries = 3;
constexpr double kMinTransferDurationS = 5.0;

ProcessingStep make_transfer_step(const std::string& id, double planned_mb,
                                  double assumed_rate_mbps) {
  ProcessingStep s;
  s.id = id;
  s.power_w = kTransferPowerW;
  s.compute = kTransferCompute;
  s.thermal_w = kTransferThermalW;
  s.memory_mb = kTransferMemoryMb;
  s.duration_s =
      std::max(kMinTransferDurationS, planned_mb / (assumed_rate_mbps / 8.0));
  s.data_in_mb = planned_mb;
  s.data_out_mb = planned_mb;
  s.location = Location::onboard;
  s.needs_comms = true;
  s.retry_policy = RetryPolicy::retry_next_window;
  s.max_retries = kTransferMaxRetries;
  return s;
}

}  // namespace

double select_fec(double worst_ber) {
  if (worst_ber > 1e-5) return 0.5;
  if (worst_ber > 1e-7) return 0.75;
  return 0.875;
}

SecurityOverheads security_overheads(const ProcessingStep& step) {
  SecurityOverheads o;
  switch (step.encryption) {
    case Encryption::aes256: o.encryption = 0.05; break;
    case Encryption::aes128: o.encryption = 0.03; break;
    case Encryption::none: o.encryption = 0.0; break;
  }
  switch (step.integrity) {
    case Integrity::sha256: o.integrity = 0.008; break;
    case Integrity::crc32: o.integrity = 0.001; break;
    case Integrity::none: o.integrity = 0.0; break;
  }
  o.framing = 0.02;
  return o;
}

double retransmission_reserve(double worst_ber) {
  if (worst_ber > 1e-5) return 0.20;
  if (worst_ber > 1e-7) return 0.05;
  return 0.01;
}

double total_volume(double raw_mb, double fec_rate,
                    const SecurityOverheads& overheads) {
  const double parity = raw_mb * (1.0 / fec_rate - 1.0);
  return (raw_mb + parity) * (1.0 + overheads.sum());
}

AllocationResult allocate_passes(double planned_mb,
                                 const std::vector<PassPrediction>& passes,
                                 Direction direction) {
  const double kappa = direction == Direction::downlink ? 0.9 : 0.5;
  AllocationResult result;
  double remaining = planned_mb;
  for (const auto& pass : passes) {
    if (remaining <= 0.0) break;
    const double effective = pass.capacity_mb * kappa;
    if (effective <= 0.0) continue;
    const double amount = std::min(remaining, effective);
    result.allocations.push_back({pass.id, amount});
    remaining -= amount;
  }
  result.shortfall_mb = std::max(0.0, remaining);
  return result;
}

TransferInsertion insert_transfers(const Workload& w,
                                   const std::vector<PlacementDecision>& decisions,
                                   const std::vector<PassPrediction>& passes,
                                   const PlacementConfig& cfg) {
  std::map<std::string, Location> located;
  for (const auto& d : decisions) located[d.step_id] = d.location;
  for (const auto& s : w.steps)
    if (!located.count(s.id))
      fail(Errc::bad_config, "placement decision missing for step: " + s.id);

  double worst_ber = 0.0;
  for (const auto& p : passes) worst_ber = std::max(worst_ber, p.ber);

  TransferInsertion out;
  out.workload = w;
  out.workload.edges.clear();

  auto build_transfer = [&](const ProcessingStep& producer,
                            const std::string& consumer_id,
                            Direction direction) -> TransferSpec {
    if (passes.empty())
      fail(Errc::transfer_no_capacity,
           "no passes available for the boundary crossing at step " +
               producer.id);
    TransferSpec t;
    t.direction = direction;
    t.producer_id = producer.id;
    t.consumer_id = consumer_id;
    t.raw_mb = producer.data_out_mb;
    t.channel_ready = producer.channel_ready;
    t.fec_rate = select_fec(worst_ber);
    t.reserve_fraction = retransmission_reserve(worst_ber);
    if (t.channel_ready) {
      // FEC and security already applied by pipeline steps.
      t.overheads = SecurityOverheads{0.0, 0.0, 0.0};
      t.parity_mb = 0.0;
      t.total_mb = t.raw_mb;
    } else {
      t.overheads = security_overheads(producer);
      t.parity_mb = t.raw_mb * (1.0 / t.fec_rate - 1.0);
      t.total_mb = total_volume(t.raw_mb, t.fec_rate, t.overheads);
    }
    const char* tag = direction == Direction::downlink ? "downlink" : "uplink";
    t.id = std::string(tag) + ":" + producer.id +
           (consumer_id.empty() ? "" : "->" + consumer_id);
    t.step = make_transfer_step(t.id, t.planned_mb(), cfg.assumed_mean_rate_mbps);
    auto alloc = allocate_passes(t.planned_mb(), passes, direction);
    t.allocations = std::move(alloc.allocations);
    t.shortfall_mb = alloc.shortfall_mb;
    return t;
  };

  for (const auto& [from, to] : w.edges) {
    const Location lf = located.at(from);
    const Location lt = located.at(to);
    if (lf == lt) {
      out.workload.edges.emplace_back(from, to);
      continue;
    }
    const Direction direction =
        lf == Location::onboard ? Direction::downlink : Direction::uplink;
    TransferSpec t = build_transfer(*w.find(from), to, direction);
    out.workload.edges.emplace_back(from, t.step.id);
    out.workload.edges.emplace_back(t.step.id, to);
    out.workload.steps.push_back(t.step);
    out.transfers.push_back(std::move(t));
  }

  // Declared deliveries: a terminal downlink when the producer stayed
  // on-board; already on the ground otherwise.
  for (const auto& id : w.deliveries) {
    if (located.at(id) != Location::onboard) continue;
    TransferSpec t = build_transfer(*w.find(id), "", Direction::downlink);
    out.workload.edges.emplace_back(id, t.step.id);
    out.workload.steps.push_back(t.step);
    out.transfers.push_back(std::move(t));
  }

  validate(out.workload);
  return out;
}

}  // namespace orbitplan
