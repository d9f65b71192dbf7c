#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orbitplan {

enum class Location { onboard, ground, either };
enum class RetryPolicy { none, retry_same_window, retry_next_window };
enum class Encryption { none, aes128, aes256 };
enum class Integrity { none, crc32, sha256 };

struct ProcessingStep {
  std::string id;
  double power_w = 0;
  double compute = 0;  // normalized [0, 1]
  double thermal_w = 0;
  double memory_mb = 0;
  double storage_mb = 0;
  double duration_s = 0;
  double data_in_mb = 0;
  double data_out_mb = 0;
  Location location = Location::either;
  bool needs_comms = false;
  RetryPolicy retry_policy = RetryPolicy::none;
  int max_retries = 0;
  std::optional<double> checkpoint_interval_s;
  Encryption encryption = Encryption::none;
  Integrity integrity = Integrity::none;
  // Output already carries FEC/encryption applied by pipeline stages; channel
  // sizing must not apply them again.
  bool channel_ready = false;
};

struct Workload {
  std::string name;
  std::vector<ProcessingStep> steps;
  std::vector<std::pair<std::string, std::string>> edges;
  // Steps whose output must land on the ground even without a consuming
  // ground step; realized as a terminal downlink when placed on-board.
  std::vector<std::string> deliveries;
  double deadline_orbits = 8.0;

  const ProcessingStep* find(const std::string& id) const;
};

// Confirms id uniqueness, edge integrity, and acyclicity; on a cycle the
// error message lists one offending node sequence.
void validate(const Workload& w);

// Kahn's algorithm; simultaneously ready steps break ties by lexicographic id.
std::vector<std::string> topo_sort(const Workload& w);

const std::vector<std::string>& preset_names();
bool is_preset(const std::string& name);

// One of: ml-inference, split-learning, eo-qa, federated, store-forward.
Workload load_preset(const std::string& name);
std::string preset_summary(const std::string& name);

}  // namespace orbitplan
