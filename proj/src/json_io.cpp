#include "tdesc/json_io.hpp"

#include <fstream>
#include <sstream>

namespace tdesc {

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Int(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    Int x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw ParseError("not a decimal integer: " + j.get<std::string>());
    return x;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

IntVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integers, got " + j.dump());
  IntVector v;
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

IntMatrix matrix_from_json(const Json& j, std::size_t cols_if_empty) {
  if (!j.is_array()) throw ParseError("expected a matrix (array of rows)");
  std::vector<IntVector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  std::size_t cols = rows.empty() ? cols_if_empty : rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols) throw ParseError("matrix rows have different lengths");
  return IntMatrix::from_rows(rows, cols);
}

Json to_json(const Int& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Json to_json(const FGAbelianGroup& g) {
  Json out = Json::array();
  for (const auto& d : g.invariant_factors()) out.push_back(to_json(d));
  return out;
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Fan fan_from_json(const Json& j) {
  Fan f;
  const Json& rank = field(j, "rank");
  if (!rank.is_number_integer() || rank.get<long long>() <= 0) throw ParseError("rank must be a positive integer");
  f.rank = static_cast<std::size_t>(rank.get<long long>());
  for (const auto& r : field(j, "rays")) f.rays.push_back(vector_from_json(r));
  for (const auto& c : field(j, "max_cones")) {
    if (!c.is_array()) throw ParseError("max_cones entries must be arrays");
    RaySet cone;
    for (const auto& i : c) {
      if (!i.is_number_integer()) throw ParseError("cone entries must be ray indices");
      cone.push_back(i.get<int>());
    }
    std::sort(cone.begin(), cone.end());
    f.max_cones.push_back(std::move(cone));
  }
  if (j.contains("name")) f.name = j.at("name").get<std::string>();
  if (j.contains("class_basis")) {
    const Json& cb = j.at("class_basis");
    f.class_basis = matrix_from_json(cb.is_object() ? field(cb, "degrees") : cb, f.rays.size());
  }
  return f;
}

Json fan_to_json(const Fan& f) {
  Json out;
  if (!f.name.empty()) out["name"] = f.name;
  out["rank"] = f.rank;
  Json rays = Json::array();
  for (const auto& r : f.rays) rays.push_back(to_json(r));
  out["rays"] = rays;
  out["max_cones"] = f.max_cones;
  if (f.class_basis) out["class_basis"] = {{"degrees", to_json(*f.class_basis)}};
  return out;
}

GLattice glattice_from_json(const Json& j) {
  const Json& rank = field(j, "rank");
  if (!rank.is_number_integer() || rank.get<long long>() < 0) throw ParseError("rank must be a nonnegative integer");
  auto r = static_cast<std::size_t>(rank.get<long long>());
  std::vector<IntMatrix> gens;
  for (const auto& g : field(j, "generators")) {
    IntMatrix m = matrix_from_json(g, r);
    if (m.rows() != r || m.cols() != r) throw ParseError("generator has the wrong size");
    gens.push_back(std::move(m));
  }
  return GLattice::from_generators(gens, r);
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

}  // namespace tdesc
