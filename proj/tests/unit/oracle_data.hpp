#pragma once

#include <json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>

namespace test_support {

// Values produced by tests/oracles/oracles.py.
inline const nlohmann::json& oracle() {
  static const nlohmann::json data = [] {
    std::ifstream in(MRHWENO_ORACLE_JSON);
    if (!in) throw std::runtime_error("cannot open " MRHWENO_ORACLE_JSON);
    return nlohmann::json::parse(in);
  }();
  return data;
}

}  // namespace test_support
