#include "tdesc/bundled.hpp"

namespace tdesc {

std::optional<std::string> bundled_file(const std::string& name) {
  for (const auto& f : bundled_files())
    if (f.name == name) return f.content;
  return std::nullopt;
}

std::vector<std::string> bundled_names(const std::string& prefix) {
  std::vector<std::string> out;
  for (const auto& f : bundled_files())
    if (f.name.compare(0, prefix.size(), prefix) == 0) out.push_back(f.name);
  return out;
}

}  // namespace tdesc
