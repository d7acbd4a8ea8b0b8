// tdesc: command-line front end for the toric descent library.

#include "tdesc/bundled.hpp"
#include "tdesc/report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

using namespace tdesc;

namespace {

enum Exit { kOk = 0, kInput = 1, kMath = 2 };

// A path, or the name of a bundled example ("dp6", "fans/dp6.json", ...).
Json load(const std::string& what, const std::string& dir) {
  if (std::filesystem::exists(what)) return read_json_file(what);
  for (const auto& name : {what, dir + what, dir + what + ".json"})
    if (auto text = bundled_file(name)) return parse_json_text(*text);
  throw ParseError("cannot read " + what);
}

struct Output {
  bool json = false;
  void emit(const Json& j, const std::function<std::string(const Json&)>& text) const {
    if (json)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << text(j);
  }
};

std::vector<IntVector> classes_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("classes")) throw ParseError("omega set: expected {\"classes\": [...]}");
  std::vector<IntVector> out;
  for (const auto& c : j.at("classes")) out.push_back(vector_from_json(c));
  return out;
}

IntVector parse_divisor(const std::string& s) {
  IntVector out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.emplace_back(item);
    } catch (const std::exception&) {
      throw ParseError("divisor: '" + item + "' is not an integer");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois descent for split projective toric varieties"};
  app.require_subcommand(1);
  Output out;
  bool text = false;
  app.add_flag("--json", out.json, "JSON output");
  app.add_flag("--text", text, "text output (default)");

  std::string fan_path, field = "real", set_path, divisor, lattice_path, example;
  std::optional<int> degree;
  std::optional<std::size_t> subgroup;

  auto* analyze = app.add_subcommand("analyze", "class group, automorphisms, Pic, omega, target and algebra");
  analyze->add_option("fan", fan_path, "fan JSON file or bundled name")->required();

  auto* forms = app.add_subcommand("forms", "twisted forms over a field model");
  forms->add_option("fan", fan_path, "fan JSON file or bundled name")->required();
  forms->add_option("--field", field, "real | finite[:n] | model.json");

  auto* lattice = app.add_subcommand("lattice", "G-lattice computations");
  lattice->require_subcommand(1);
  std::vector<CLI::App*> lattice_cmds;
  const std::pair<const char*, const char*> lattice_names[] = {
      {"cohomology", "Tate cohomology in degrees -1, 0 and 1"},
      {"flasque", "vanishing of H^-1 on all subgroups"},
      {"coflasque", "vanishing of H^1 on all subgroups"},
      {"resolve", "coflasque resolution by permutation blocks"},
      {"invertible", "invertibility with a certificate"},
      {"kernel", "kernel of the fingerprint map over a global field with cyclic decomposition groups"},
  };
  for (const auto& [name, help] : lattice_names) {
    auto* sub = lattice->add_subcommand(name, help);
    sub->add_option("lattice", lattice_path, "lattice JSON file or bundled name")->required();
    lattice_cmds.push_back(sub);
  }
  lattice_cmds[0]->add_option("--degree", degree, "-1, 0 or 1 (default: all)");
  lattice_cmds[0]->add_option("--subgroup", subgroup, "subgroup index (default: whole group)");

  auto* omega = app.add_subcommand("omega", "validate omega (canonical by default)");
  omega->add_option("fan", fan_path)->required();
  omega->add_option("--set", set_path, "omega JSON {\"classes\": [...]}");

  auto* nef = app.add_subcommand("nef", "nef cone in Cl coordinates");
  nef->add_option("fan", fan_path)->required();

  auto* h0cmd = app.add_subcommand("h0", "lattice points of a T-divisor polytope");
  h0cmd->add_option("fan", fan_path)->required();
  h0cmd->add_option("--divisor", divisor, "a1,...,ar")->required();

  auto* examples = app.add_subcommand("examples", "bundled examples");
  examples->require_subcommand(1);
  auto* list = examples->add_subcommand("list");
  auto* emit = examples->add_subcommand("emit");
  emit->add_option("name", example)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }
  if (out.json && text) {
    std::cerr << "error: --json and --text are exclusive\n";
    return kInput;
  }

  try {
    auto fan = [&] { return prepare(fan_from_json(load(fan_path, "fans/"))); };
    auto glat = [&] { return glattice_from_json(load(lattice_path, "lattices/")); };
    if (*analyze) {
      out.emit(analysis_report(fan()), analysis_text);
    } else if (*forms) {
      auto t = fan();
      out.emit(forms_report(t, parse_model(field)), forms_text);
    } else if (*lattice) {
      auto l = glat();
      Json r;
      if (*lattice_cmds[0]) r = cohomology_report(l, degree, subgroup);
      if (*lattice_cmds[1]) r = flasque_report(l);
      if (*lattice_cmds[2]) r = coflasque_report(l);
      if (*lattice_cmds[3]) r = resolution_report(l);
      if (*lattice_cmds[4]) r = invertible_report(l);
      if (*lattice_cmds[5]) r = global_kernel_report(l);
      out.emit(r, plain_text);
    } else if (*omega) {
      auto t = fan();
      std::optional<std::vector<IntVector>> classes;
      if (!set_path.empty()) classes = classes_from_json(read_json_file(set_path));
      out.emit(omega_report(t, classes), plain_text);
    } else if (*nef) {
      out.emit(nef_report(fan()), plain_text);
    } else if (*h0cmd) {
      auto t = fan();
      out.emit(h0_report(t, parse_divisor(divisor)), plain_text);
    } else if (*list) {
      Json names = Json::array();
      for (const auto& f : bundled_files()) names.push_back(f.name);
      out.emit({{"examples", names}}, [](const Json& j) {
        std::string s;
        for (const auto& n : j["examples"]) s += n.get<std::string>() + "\n";
        return s;
      });
    } else if (*emit) {
      auto text_of = bundled_file(example);
      if (!text_of) text_of = bundled_file("fans/" + example + ".json");
      if (!text_of) throw ParseError("no bundled example " + example);
      std::cout << *text_of;
      if (!text_of->empty() && text_of->back() != '\n') std::cout << "\n";
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMath;
  }
  return kOk;
}
