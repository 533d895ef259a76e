#pragma once

// Golden-file comparison. Set PDTENSOR_UPDATE_GOLDEN=1 to rewrite the files.

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace testing {

inline std::string golden_path(const std::string& name) { return std::string(PDTENSOR_GOLDEN_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// Returns the pinned contents, writing `actual` first when updating.
inline std::string golden(const std::string& name, const std::string& actual) {
  const char* update = std::getenv("PDTENSOR_UPDATE_GOLDEN");
  if (update && *update) {
    std::ofstream out(golden_path(name), std::ios::binary);
    out << actual;
  }
  return read_text(golden_path(name));
}

}  // namespace testing
