#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbitplan/groundlink.hpp"
#include "orbitplan/placement.hpp"
#include "orbitplan/workload.hpp"

namespace orbitplan {

enum class Direction { downlink, uplink };

struct SecurityOverheads {
  double encryption = 0;
  double integrity = 0;
  double framing = 0.02;

  double sum() const { return encryption + integrity + framing; }
};

struct PassAllocation {
  int pass_id = -1;
  double amount_mb = 0;
};

struct AllocationResult {
  std::vector<PassAllocation> allocations;
  double shortfall_mb = 0;
};

struct TransferSpec {
  std::string id;
  Direction direction = Direction::downlink;
  std::string producer_id;
  std::string consumer_id;  // empty for declared terminal deliveries
  double raw_mb = 0;
  double fec_rate = 0.75;
  double parity_mb = 0;
  SecurityOverheads overheads;
  double total_mb = 0;
  double reserve_fraction = 0;
  bool channel_ready = false;
  std::vector<PassAllocation> allocations;
  double shortfall_mb = 0;
  ProcessingStep step;  // the schedulable embodiment

  double planned_mb() const { return total_mb * (1.0 + reserve_fraction); }
};

struct TransferInsertion {
  Workload workload;  // original steps plus transfer steps, edges rewired
  std::vector<TransferSpec> transfers;
};

// Adaptive FEC code rate from worst-case channel BER.
double select_fec(double worst_ber);

// Encryption / integrity / framing expansion fractions for a producer step.
SecurityOverheads security_overheads(const ProcessingStep& step);

// Retransmission capacity head-room fraction from channel BER.
double retransmission_reserve(double worst_ber);

// Channel volume after FEC parity and security expansion.
double total_volume(double raw_mb, double fec_rate,
                    const SecurityOverheads& overheads);

// Insert a transfer step on every edge whose endpoints sit on opposite sides
// of the space-ground boundary, plus a terminal downlink for each declared
// delivery whose producer stayed on-board. FEC and reserve come from the
// worst-case BER across the available passes.
TransferInsertion insert_transfers(const Workload& w,
                                   const std::vector<PlacementDecision>& decisions,
                                   const std::vector<PassPrediction>& passes,
                                   const PlacementConfig& cfg = {});

// Greedy chronological fill; effective pass capacity is capacity * 0.9 for
// downlink, * 0.5 for uplink. Unallocated remainder is reported as shortfall.
AllocationResult allocate_passes(double planned_mb,
                                 const std::vector<PassPrediction>& passes,
                                 Direction direction);

}  // namespace orbitplan
