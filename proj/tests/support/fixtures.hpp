#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "nearprim/io.hpp"

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(NEARPRIM_TEST_DATA) + "/" + name; }

inline nearprim::io::json load(const std::string& name) {
  std::ifstream in(path(name));
  std::stringstream ss;
  ss << in.rdbuf();
  return nearprim::io::parse(ss.str());
}

}  // namespace fixtures
