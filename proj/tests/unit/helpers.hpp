#pragma once

#include "tdesc/bundled.hpp"
#include "tdesc/json_io.hpp"

#include <stdexcept>

inline tdesc::Fan bundled_fan(const std::string& stem) {
  auto text = tdesc::bundled_file("fans/" + stem + ".json");
  if (!text) throw std::runtime_error("no bundled fan " + stem);
  return tdesc::fan_from_json(tdesc::parse_json_text(*text));
}

inline tdesc::Fan make_fan(std::size_t rank, std::vector<tdesc::IntVector> rays, std::vector<tdesc::RaySet> cones) {
  tdesc::Fan f;
  f.rank = rank;
  f.rays = std::move(rays);
  f.max_cones = std::move(cones);
  return f;
}

inline tdesc::IntVector iv(std::initializer_list<long> xs) {
  tdesc::IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}
