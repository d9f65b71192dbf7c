#include "orbitplan/workload.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "orbitplan/errors.hpp"

namespace orbitplan {

const ProcessingStep* Workload::find(const std::string& id) const {
  for (const auto& s : steps)
    if (s.id == id) return &s;
  return nullptr;
}

namespace {

// DFS cycle search returning one offending node sequence.
bool find_cycle(const std::string& node,
                const std::map<std::string, std::vector<std::string>>& adj,
                std::map<std::string, int>& color,
                std::vector<std::string>& stack,
                std::vector<std::string>& cycle) {
  color[node] = 1;
  stack.push_back(node);
  auto it = adj.find(node);
  if (it != adj.end()) {
    for (const auto& next : it->second) {
      if (color[next] == 1) {
        auto from = std::find(stack.begin(), stack.end(), next);
        cycle.assign(from, stack.end());
        return true;
      }
      if (color[next] == 0 && find_cycle(next, adj, color, stack, cycle))
        return true;
    }
  }
  stack.pop_back();
  color[node] = 2;
  return false;
}

}  // namespace

void validate(const Workload& w) {
  if (w.deadline_orbits <= 0)
    fail(Errc::bad_config, "deadline_orbits must be positive");
  std::set<std::string> ids;
  for (const auto& s : w.steps) {
    if (!ids.insert(s.id).second)
      fail(Errc::workload_duplicate_id, "duplicate step id: " + s.id);
    if (s.duration_s <= 0)
      fail(Errc::bad_config, "step duration must be positive: " + s.id);
    if (s.power_w < 0 || s.thermal_w < 0 || s.memory_mb < 0 ||
        s.storage_mb < 0 || s.data_in_mb < 0 || s.data_out_mb < 0 ||
        s.compute < 0 || s.compute > 1)
      fail(Errc::bad_config, "negative or out-of-range resource field: " + s.id);
  }
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& [from, to] : w.edges) {
    if (!ids.count(from))
      fail(Errc::workload_dangling_edge, "edge references unknown step: " + from);
    if (!ids.count(to))
      fail(Errc::workload_dangling_edge, "edge references unknown step: " + to);
    adj[from].push_back(to);
  }
  for (const auto& id : w.deliveries)
    if (!ids.count(id))
      fail(Errc::workload_dangling_edge,
           "delivery references unknown step: " + id);

  std::map<std::string, int> color;
  std::vector<std::string> stack, cycle;
  for (const auto& s : w.steps) {
    if (color[s.id] == 0 && find_cycle(s.id, adj, color, stack, cycle)) {
      std::string msg = "workload contains a cycle:";
      for (const auto& n : cycle) msg += " " + n;
      fail(Errc::workload_cycle, msg);
    }
  }
}

std::vector<std::string> topo_sort(const Workload& w) {
  validate(w);

  std::map<std::string, int> indegree;
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& s : w.steps) indegree[s.id] = 0;
  for (const auto& [from, to] : w.edges) {
    adj[from].push_back(to);
    indegree[to] += 1;
  }

  // Ready set ordered lexicographically for deterministic tie-breaking.
  std::set<std::string> ready;
  for (const auto& [id, deg] : indegree)
    if (deg == 0) ready.insert(id);

  std::vector<std::string> order;
  order.reserve(w.steps.size());
  while (!ready.empty()) {
    const std::string id = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(id);
    for (const auto& next : adj[id])
      if (--indegree[next] == 0) ready.insert(next);
  }
  // validate() already rejected cycles, so every step drains.
  return order;
}

}  // namespace orbitplan
