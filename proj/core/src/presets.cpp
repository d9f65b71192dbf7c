#include <algorithm>
#include <functional>
#include <map>

#include "orbitplan/errors.hpp"
#include "orbitplan/workload.hpp"

// Preset workload catalog.
//
// Data-flow volumes at the space-ground boundary are the contract here; the
// per-step resource envelopes are chosen so that every on-board step is
// schedulable under the default envelopes (power <= 25 W so eclipse windows
// qualify, compute <= 0.6, thermal <= 15 W, durations 30-300 s).
//
//   ml-inference    capture 2000 -> preprocess 500 -> inference 10
//                   -> encrypt 10.5, delivered to ground (190:1 overall)
//   split-learning  capture 2000 -> features 50 -> 36.75 down;
//                   ground training returns 5.25 up
//   eo-qa           5000 -> QA 4500 -> cloud filter 3000 -> compress 400
//                   -> FEC 533.3 -> encrypt 560 down (channel-ready)
//   federated       local gradients sparsified to 3.7 down; global weights
//                   5.8 up; raw samples never cross the boundary
//   store-forward   receive 100 -> RS 2/3 -> 150 -> encrypt 157.5 forwarded

namespace orbitplan {

namespace {

struct StepSpec {
  std::string id;
  double p, c, th, mem, sto, dur, din, dout;
  Location loc;
};

ProcessingStep make_step(const StepSpec& s) {
  ProcessingStep step;
  step.id = s.id;
  step.power_w = s.p;
  step.compute = s.c;
  step.thermal_w = s.th;
  step.memory_mb = s.mem;
  step.storage_mb = s.sto;
  step.duration_s = s.dur;
  step.data_in_mb = s.din;
  step.data_out_mb = s.dout;
  step.location = s.loc;
  return step;
}

void chain(Workload& w) {
  for (std::size_t i = 0; i + 1 < w.steps.size(); ++i)
    w.edges.emplace_back(w.steps[i].id, w.steps[i + 1].id);
}

Workload ml_inference() {
  Workload w;
  w.name = "ml-inference";
  w.steps = {
      make_step({"capture", 12, 0.30, 5, 512, 2000, 60, 0, 2000, Location::onboard}),
      make_step({"preprocess", 18, 0.50, 8, 1024, 500, 90, 2000, 500, Location::either}),
      make_step({"inference", 22, 0.60, 12, 2048, 50, 120, 500, 10, Location::either}),
      make_step({"encrypt", 8, 0.20, 4, 128, 11, 30, 10, 10.5, Location::onboard}),
  };
  chain(w);
  auto& encrypt = w.steps.back();
  encrypt.encryption = Encryption::aes256;
  encrypt.integrity = Integrity::sha256;
  encrypt.channel_ready = true;  // output is already sealed for the channel
  w.deliveries = {"encrypt"};
  return w;
}

Workload split_learning() {
  Workload w;
  w.name = "split-learning";
  w.steps = {
      make_step({"capture", 12, 0.30, 5, 512, 2000, 60, 0, 2000, Location::onboard}),
      make_step({"frontend_extract", 20, 0.60, 10, 1536, 100, 150, 2000, 50, Location::either}),
      make_step({"quantize_features", 10, 0.30, 5, 256, 50, 45, 50, 42, Location::onboard}),
      make_step({"compress_features", 14, 0.40, 7, 256, 40, 60, 42, 36.75, Location::onboard}),
      make_step({"backend_train", 350, 1.0, 0, 16384, 10000, 1200, 36.75, 150, Location::ground}),
      make_step({"evaluate_update", 200, 1.0, 0, 8192, 500, 300, 150, 5.25, Location::ground}),
      make_step({"package_update", 50, 0.5, 0, 512, 6, 60, 5.25, 5.25, Location::ground}),
      make_step({"apply_update", 10, 0.30, 5, 256, 6, 60, 5.25, 0, Location::onboard}),
  };
  chain(w);
  // Channel policy for both boundary crossings: AES-256 + SHA-256.
  for (auto* id : {"compress_features", "package_update"}) {
    auto it = std::find_if(w.steps.begin(), w.steps.end(),
                           [&](const auto& s) { return s.id == id; });
    it->encryption = Encryption::aes256;
    it->integrity = Integrity::sha256;
  }
  return w;
}

Workload eo_qa() {
  Workload w;
  w.name = "eo-qa";
  w.steps = {
      make_step({"capture", 15, 0.35, 6, 1024, 5000, 90, 0, 5000, Location::onboard}),
      make_step({"radiometric_calibrate", 16, 0.40, 7, 1024, 5000, 120, 5000, 5000, Location::onboard}),
      make_step({"qa_filter", 18, 0.50, 8, 1024, 4500, 120, 5000, 4500, Location::either}),
      make_step({"cloud_filter", 20, 0.55, 9, 1536, 3000, 150, 4500, 3000, Location::either}),
      make_step({"compress", 22, 0.60, 12, 2048, 400, 240, 3000, 400, Location::either}),
      make_step({"fec_encode", 15, 0.40, 8, 512, 534, 120, 400, 1600.0 / 3.0, Location::onboard}),
      make_step({"encrypt", 10, 0.30, 5, 512, 560, 90, 1600.0 / 3.0, 560, Location::onboard}),
      make_step({"verify_blocks", 60, 0.8, 0, 2048, 560, 120, 560, 560, Location::ground}),
      make_step({"archive", 40, 0.5, 0, 1024, 5000, 180, 560, 560, Location::ground}),
  };
  chain(w);
  for (auto& s : w.steps) {
    if (s.id == "fec_encode") s.integrity = Integrity::crc32;
    if (s.id == "encrypt") {
      s.encryption = Encryption::aes256;
      s.channel_ready = true;  // FEC and encryption applied as pipeline steps
    }
  }
  return w;
}

Workload federated() {
  Workload w;
  w.name = "federated";
  w.steps = {
      make_step({"capture_batch", 12, 0.30, 5, 512, 2000, 90, 0, 2000, Location::onboard}),
      make_step({"preprocess_samples", 16, 0.45, 7, 1024, 1800, 120, 2000, 1800, Location::either}),
      make_step({"local_train", 24, 0.60, 14, 2048, 200, 300, 1800, 40, Location::either}),
      make_step({"sparsify_gradients", 10, 0.30, 5, 512, 4, 60, 40, 3.9, Location::either}),
      make_step({"package_update", 8, 0.20, 4, 128, 4, 45, 3.9, 3.7, Location::onboard}),
      make_step({"aggregate_updates", 80, 0.8, 0, 4096, 100, 120, 3.7, 3.7, Location::ground}),
      make_step({"fedavg_combine", 120, 1.0, 0, 8192, 100, 180, 3.7, 5.8, Location::ground}),
      make_step({"package_weights", 40, 0.5, 0, 512, 6, 60, 5.8, 5.8, Location::ground}),
      make_step({"apply_weights", 12, 0.35, 6, 512, 6, 90, 5.8, 0.1, Location::onboard}),
      make_step({"verify_model", 10, 0.30, 5, 256, 1, 60, 0.1, 0, Location::onboard}),
  };
  chain(w);
  for (auto& s : w.steps) {
    if (s.id == "package_update") {
      s.encryption = Encryption::aes256;
      s.integrity = Integrity::sha256;
      s.channel_ready = true;  // compressed + encrypted update, 3.7 MB sealed
    }
    if (s.id == "package_weights") {
      s.encryption = Encryption::aes256;
      s.integrity = Integrity::sha256;
    }
  }
  return w;
}

Workload store_forward() {
  Workload w;
  w.name = "store-forward";
  w.steps = {
      make_step({"receive", 18, 0.30, 6, 256, 100, 120, 0, 100, Location::onboard}),
      make_step({"store_buffer", 6, 0.15, 3, 128, 150, 180, 100, 100, Location::onboard}),
      make_step({"verify_crc", 8, 0.20, 4, 128, 100, 60, 100, 100, Location::onboard}),
      make_step({"rs_encode", 20, 0.55, 10, 512, 150, 240, 100, 150, Location::onboard}),
      make_step({"encrypt", 10, 0.30, 5, 256, 158, 120, 150, 157.5, Location::onboard}),
      make_step({"archive", 40, 0.5, 0, 1024, 200, 120, 157.5, 0, Location::ground}),
  };
  chain(w);
  for (auto& s : w.steps) {
    if (s.id == "receive") {
      s.needs_comms = true;  // inbound contact occupies a pass window
      s.retry_policy = RetryPolicy::retry_next_window;
      s.max_retries = 3;
    }
    if (s.id == "verify_crc") s.integrity = Integrity::crc32;
    if (s.id == "encrypt") {
      s.encryption = Encryption::aes256;
      s.channel_ready = true;  // RS 2/3 + AES already applied in the pipeline
    }
  }
  return w;
}

const std::map<std::string, std::function<Workload()>>& registry() {
  static const std::map<std::string, std::function<Workload()>> presets = {
      {"ml-inference", ml_inference},
      {"split-learning", split_learning},
      {"eo-qa", eo_qa},
      {"federated", federated},
      {"store-forward", store_forward},
  };
  return presets;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_preset(const std::string& name) { return registry().count(name) > 0; }

Workload load_preset(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end())
    fail(Errc::unknown_preset, "unknown preset: " + name);
  Workload w = it->second();
  validate(w);
  return w;
}

std::string preset_summary(const std::string& name) {
  static const std::map<std::string, std::string> summaries = {
      {"ml-inference",
       "On-board capture, preprocessing, and model inference; encrypted "
       "10.5 MB result downlinked (190:1 reduction)"},
      {"split-learning",
       "On-board feature extraction (40:1), 36.75 MB features down, ground "
       "training returns 5.25 MB weight update"},
      {"eo-qa",
       "5 GB imagery through QA, cloud filtering, compression, FEC, and "
       "encryption; 560 MB downlinked"},
      {"federated",
       "On-board training with sparsified 3.7 MB update down, 5.8 MB global "
       "weights up; raw data stays on-board"},
      {"store-forward",
       "Receive 100 MB on one pass, integrity-check, RS 2/3 encode, encrypt, "
       "forward 157.5 MB on a later pass"},
  };
  auto it = summaries.find(name);
  if (it == summaries.end()) fail(Errc::unknown_preset, "unknown preset: " + name);
  return it->second;
}

}  // namespace orbitplan
