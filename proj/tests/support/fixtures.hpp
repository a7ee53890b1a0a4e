#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mnc::testing {

inline const std::vector<std::string> kFixtures = {"cat_map",     "sl4_block",      "heisenberg",
                                                   "aff1",        "identity_t2",    "permutation_t2"};

inline std::string fixture_path(const std::string& name) {
    return std::string(MNC_FIXTURE_DIR) + "/" + name + ".json";
}

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name));
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace mnc::testing
