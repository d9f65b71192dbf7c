#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "orbitplan/errors.hpp"
#include "orbitplan/plan_json.hpp"
#include "orbitplan/workload.hpp"

using namespace orbitplan;

namespace {

ProcessingStep step(const std::string& id) {
  ProcessingStep s;
  s.id = id;
  s.duration_s = 60.0;
  return s;
}

Workload chain_workload(std::initializer_list<const char*> ids) {
  Workload w;
  w.name = "test";
  const char* prev = nullptr;
  for (const char* id : ids) {
    w.steps.push_back(step(id));
    if (prev) w.edges.emplace_back(prev, id);
    prev = id;
  }
  return w;
}

}  // namespace

TEST_CASE("a simple chain validates") {
  CHECK_NOTHROW(validate(chain_workload({"a", "b", "c"})));
}

TEST_CASE("a two-cycle is rejected and both nodes are named") {
  Workload w = chain_workload({"a", "b"});
  w.edges.emplace_back("b", "a");
  try {
    validate(w);
    FAIL("expected cycle error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::workload_cycle);
    const std::string msg = e.what();
    CHECK(msg.find("a") != std::string::npos);
    CHECK(msg.find("b") != std::string::npos);
  }
}

TEST_CASE("a dangling edge is rejected") {
  Workload w = chain_workload({"a", "b"});
  w.edges.emplace_back("b", "z");
  try {
    validate(w);
    FAIL("expected dangling edge error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::workload_dangling_edge);
  }
}

TEST_CASE("duplicate ids are rejected") {
  Workload w = chain_workload({"a", "b"});
  w.steps.push_back(step("a"));
  try {
    validate(w);
    FAIL("expected duplicate id error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::workload_duplicate_id);
  }
}

TEST_CASE("topological order of a chain is forced") {
  const auto order = topo_sort(chain_workload({"a", "b", "c"}));
  CHECK(order == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("diamond resolves ties lexicographically") {
  Workload w;
  for (const char* id : {"a", "b", "c", "d"}) w.steps.push_back(step(id));
  w.edges = {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}};
  const auto order = topo_sort(w);
  CHECK(order == std::vector<std::string>{"a", "b", "c", "d"});

  // Oracle: every edge must be satisfied regardless of tie-breaking.
  std::map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  for (const auto& [from, to] : w.edges) CHECK(position[from] < position[to]);
}

TEST_CASE("empty workload sorts to an empty order") {
  Workload w;
  CHECK(topo_sort(w).empty());
}

TEST_CASE("topo_sort output is a permutation of the step ids") {
  Workload w;
  for (const char* id : {"m", "k", "z", "a", "q"}) w.steps.push_back(step(id));
  w.edges = {{"z", "a"}, {"m", "q"}};
  const auto order = topo_sort(w);
  std::set<std::string> seen(order.begin(), order.end());
  CHECK(order.size() == w.steps.size());
  CHECK(seen.size() == w.steps.size());
  for (const auto& s : w.steps) CHECK(seen.count(s.id) == 1);
}

TEST_CASE("unknown preset name is rejected") {
  try {
    load_preset("no-such-preset");
    FAIL("expected unknown preset error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unknown_preset);
  }
}

TEST_CASE("all five presets exist and validate") {
  CHECK(preset_names().size() == 5);
  for (const auto& name : preset_names()) {
    const Workload w = load_preset(name);
    CHECK_NOTHROW(validate(w));
    CHECK(w.name == name);
    CHECK(w.deadline_orbits == 8.0);
    // On-board steps must be schedulable under the default envelopes.
    for (const auto& s : w.steps) {
      if (s.location == Location::ground) continue;
      CHECK(s.power_w <= 25.0);
      CHECK(s.compute <= 0.6);
      CHECK(s.thermal_w <= 15.0);
      CHECK(s.duration_s >= 30.0);
      CHECK(s.duration_s <= 300.0);
    }
  }
}

TEST_CASE("ml-inference data-flow chain") {
  const Workload w = load_preset("ml-inference");
  REQUIRE(w.steps.size() == 4);
  const auto* capture = w.find("capture");
  const auto* preprocess = w.find("preprocess");
  const auto* inference = w.find("inference");
  const auto* encrypt = w.find("encrypt");
  REQUIRE(capture);
  REQUIRE(preprocess);
  REQUIRE(inference);
  REQUIRE(encrypt);
  CHECK(capture->data_out_mb == 2000.0);
  CHECK(preprocess->data_out_mb == doctest::Approx(500.0));   // 4:1
  CHECK(inference->data_out_mb == doctest::Approx(10.0));     // 50:1
  CHECK(encrypt->data_out_mb == doctest::Approx(10.5));       // x1.05
  // 190:1 overall reduction.
  CHECK(capture->data_out_mb / encrypt->data_out_mb ==
        doctest::Approx(190.0).epsilon(0.01));
  CHECK(w.deliveries == std::vector<std::string>{"encrypt"});
}

TEST_CASE("split-learning boundary volumes") {
  const Workload w = load_preset("split-learning");
  REQUIRE(w.steps.size() == 8);
  CHECK(w.find("frontend_extract")->data_in_mb /
            w.find("frontend_extract")->data_out_mb ==
        doctest::Approx(40.0));  // 40:1 on-board reduction
  CHECK(w.find("compress_features")->data_out_mb == doctest::Approx(36.75));
  CHECK(w.find("package_update")->data_out_mb == doctest::Approx(5.25));
  CHECK(w.find("backend_train")->location == Location::ground);
  CHECK(w.find("apply_update")->location == Location::onboard);
}

TEST_CASE("eo-qa pipeline volumes multiply out to 560 MB") {
  const Workload w = load_preset("eo-qa");
  REQUIRE(w.steps.size() == 9);
  CHECK(w.find("capture")->data_out_mb == 5000.0);
  CHECK(w.find("qa_filter")->data_out_mb == doctest::Approx(4500.0));   // -10%
  CHECK(w.find("cloud_filter")->data_out_mb == doctest::Approx(3000.0)); // -1/3
  CHECK(w.find("compress")->data_out_mb == doctest::Approx(400.0));     // 7.5:1
  CHECK(w.find("fec_encode")->data_out_mb ==
        doctest::Approx(400.0 / 0.75));                                 // rate 3/4
  CHECK(w.find("encrypt")->data_out_mb == doctest::Approx(560.0));      // x1.05
  CHECK(w.find("encrypt")->channel_ready);
}

TEST_CASE("federated keeps raw data on-board") {
  const Workload w = load_preset("federated");
  REQUIRE(w.steps.size() == 10);
  CHECK(w.find("package_update")->data_out_mb == doctest::Approx(3.7));
  CHECK(w.find("package_weights")->data_out_mb == doctest::Approx(5.8));
  // The raw training batch is consumed strictly on-board: every step that
  // sees more than 100 MB is pinned or resolves on-board by data reduction.
  for (const auto& s : w.steps)
    if (s.data_in_mb > 100.0 || s.data_out_mb > 100.0)
      CHECK(s.location != Location::ground);
}

TEST_CASE("store-forward reconstructs the forwarded volume") {
  const Workload w = load_preset("store-forward");
  REQUIRE(w.steps.size() == 6);
  CHECK(w.find("receive")->data_out_mb == 100.0);
  CHECK(w.find("receive")->needs_comms);
  CHECK(w.find("rs_encode")->data_out_mb == doctest::Approx(150.0));  // 2/3
  // Oracle: 100 * 3/2 * 1.05 = 157.5.
  CHECK(w.find("encrypt")->data_out_mb ==
        doctest::Approx(100.0 * 1.5 * 1.05));
  CHECK(w.find("archive")->location == Location::ground);
}

TEST_CASE("workload JSON round trip preserves structure") {
  const Workload w = load_preset("split-learning");
  const Workload back = workload_from_json(workload_to_json(w));
  CHECK(back.name == w.name);
  REQUIRE(back.steps.size() == w.steps.size());
  REQUIRE(back.edges.size() == w.edges.size());
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    CHECK(back.steps[i].id == w.steps[i].id);
    CHECK(back.steps[i].data_out_mb == w.steps[i].data_out_mb);
    CHECK(back.steps[i].location == w.steps[i].location);
    CHECK(back.steps[i].encryption == w.steps[i].encryption);
    CHECK(back.steps[i].channel_ready == w.steps[i].channel_ready);
  }
  CHECK(back.edges == w.edges);
  CHECK(back.deliveries == w.deliveries);
}

TEST_CASE("workload JSON parsing rejects malformed documents") {
  CHECK_THROWS_AS(workload_from_json(nlohmann::json::array()), Error);
  CHECK_THROWS_AS(workload_from_json(nlohmann::json{{"name", "x"}}), Error);
  nlohmann::json bad = {{"name", "x"},
                        {"steps", {{{"id", "a"}, {"duration_s", 60}}}},
                        {"edges", {{"a", "zz"}}}};
  CHECK_THROWS_AS(workload_from_json(bad), Error);
}
