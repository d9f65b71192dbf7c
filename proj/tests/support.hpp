#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "orbitplan/gateway.hpp"
#include "orbitplan/tle.hpp"

namespace testsupport {

inline std::string fixture_path(const std::string& name) {
  return std::string(ORBITPLAN_FIXTURES_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline orbitplan::TleRecord fixture_record(const std::string& name) {
  return orbitplan::parse_tle_text(read_fixture(name));
}

inline orbitplan::Tle fixture_tle(const std::string& name) {
  const auto rec = fixture_record(name);
  return orbitplan::parse_tle(rec.line1, rec.line2);
}

}  // namespace testsupport
