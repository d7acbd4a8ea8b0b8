#pragma once

// Example corpus compiled into the library (fans, lattices, field models).

#include <optional>
#include <string>
#include <vector>

namespace tdesc {

struct BundledFile {
  std::string name;     // e.g. "fans/dp6.json"
  std::string content;
};

const std::vector<BundledFile>& bundled_files();
std::optional<std::string> bundled_file(const std::string& name);
/// Names under a directory prefix such as "fans/".
std::vector<std::string> bundled_names(const std::string& prefix);

}  // namespace tdesc
