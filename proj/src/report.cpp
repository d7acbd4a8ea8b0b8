#include "tdesc/report.hpp"

#include <iomanip>
#include <sstream>

namespace tdesc {

namespace {

Json int_list(const std::vector<int>& xs) {
  Json out = Json::array();
  for (int x : xs) out.push_back(x);
  return out;
}

Json vectors_json(const std::vector<IntVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

Json group_json(const FGAbelianGroup& g) { return {{"invariant_factors", to_json(g)}, {"text", g.to_string()}}; }

std::string vec_text(const Json& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].is_string() ? v[i].get<std::string>() : v[i].dump();
  }
  return s + ")";
}

std::string list_text(const Json& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + vec_text(vs[i]);
  return s;
}

Json unavailable(const std::string& why) { return {{"unavailable", why}}; }

std::string why_not_descent(const ToricData& t) {
  if (!t.smooth) return "fan is not smooth";
  if (!t.complete) return "fan is not complete";
  return "fan is not projective";
}

Json verdict_json(const InvertibilityVerdict& v) {
  Json out = {{"verdict", v.proven() ? "Proven" : "Disproven"}, {"reason", v.reason}};
  if (v.proven()) out["section"] = to_json(v.section);
  if (v.witness) out["witness_subgroup"] = subgroup_json(*v.witness);
  return out;
}

Json vanishing_json(const VanishingCheck& c) {
  Json out = {{"holds", c.holds}};
  if (c.failing_subgroup) {
    out["failing_subgroup"] = subgroup_json(*c.failing_subgroup);
    out["failing_group"] = group_json(c.failing_group);
  }
  return out;
}

Json omega_section(const ToricData& t, const OmegaSet& omega) {
  auto v = validate_omega(t, omega);
  Json classes = Json::array();
  for (std::size_t i = 0; i < omega.classes.size(); ++i)
    classes.push_back({{"class", to_json(omega.classes[i])}, {"h0", to_json(omega.h0[i])}});
  Json orbits = Json::array();
  for (const auto& o : omega_orbits(omega)) orbits.push_back(int_list(o));
  Json fixed = Json::array();
  for (bool b : v.fixed_surjective) fixed.push_back(b);
  Json validation = {{"ok", v.ok()},
                     {"j_stable", v.j_stable},
                     {"globally_generated", v.globally_generated},
                     {"faithful", v.faithful},
                     {"generates_pic", v.generates_pic},
                     {"kernel_coflasque", v.kernel_coflasque},
                     {"fixed_surjective", fixed},
                     {"warnings", v.warnings}};
  if (v.kernel) validation["kernel_rank"] = v.kernel->rank;
  Json out = {{"classes", classes}, {"orbits", orbits}, {"validation", validation}};
  if (v.j_stable) {
    auto y = target_shape(omega);
    Json dims = Json::array();
    for (const auto& d : y.dims) dims.push_back(to_json(d));
    out["target"] = {{"dims", dims}, {"text", describe_target(y)}};
    auto b = algebra_shape(omega);
    Json factors = Json::array();
    for (const auto& f : b.factors)
      factors.push_back({{"degree", to_json(f.degree)}, {"center_degree", f.center_degree}, {"orbit", int_list(f.orbit)}});
    out["algebra"] = {{"factors", factors}, {"text", describe_algebra(b)}};
  }
  return out;
}

Json fingerprint_json(const Fingerprint& fp) {
  return {{"component", fp.component}, {"element", to_json(fp.element)}, {"neutral", fp.neutral},
          {"period", to_json(fp.period)}};
}

std::string fingerprint_text(const Json& fp) {
  std::string s = "c" + std::to_string(fp["component"].get<int>()) + " ";
  return s + (fp["neutral"].get<bool>() ? "neutral" : vec_text(fp["element"]));
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

// Rows of cells rendered with columns padded to their widest entry.
std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) line += (i ? "  " : "") + (i + 1 < r.size() ? pad(r[i], width[i]) : r[i]);
    out += "  " + line + "\n";
  }
  return out;
}

}  // namespace

Json subgroup_json(const Subgroup& h) { return {{"order", h.order()}, {"elements", int_list(h.elements)}}; }

Json analysis_report(const ToricData& t) {
  Json r;
  r["fan"] = {{"name", t.fan.name}, {"rank", t.fan.rank}, {"rays", t.fan.num_rays()}, {"max_cones", t.fan.max_cones.size()}};
  r["predicates"] = {{"simplicial", is_simplicial(t.fan)},
                     {"smooth", t.smooth},
                     {"complete", t.complete},
                     {"projective", t.projective}};
  Json ray_classes = Json::array();
  for (std::size_t rho = 0; rho < t.fan.num_rays(); ++rho) ray_classes.push_back(to_json(t.div.ray_class(rho)));
  r["class_group"] = {{"invariant_factors", to_json(t.div.cl_group)},
                      {"text", t.div.cl_group.to_string()},
                      {"basis", t.div.basis_note},
                      {"ray_classes", ray_classes}};
  Json weights = Json::array();
  std::size_t total = 0;
  for (std::size_t l = 0; l < t.wd.classes.size(); ++l) {
    weights.push_back({{"class", to_json(t.wd.classes[l])},
                       {"multiplicity", t.wd.multiplicity[l]},
                       {"rays", int_list(t.wd.rays_of[l])}});
    total += t.wd.multiplicity[l];
  }
  r["weights"] = weights;
  r["cox_algebra_shape"] = cox_algebra_shape(t.wd);
  Json jgens = Json::array();
  for (int g : t.j.group->generators())
    jgens.push_back({{"element", g},
                     {"cl_matrix", to_json(t.j.cl_action[static_cast<std::size_t>(g)])},
                     {"lambda_perm", int_list(t.j.lambda_perm[static_cast<std::size_t>(g)])}});
  r["groups"] = {{"W", t.w.order()}, {"W0", t.j.kernel.size()}, {"J", t.j.order()}, {"J_generators", jgens}};
  r["checks"] = {{"orders_multiply", t.w.order() == t.j.kernel.size() * t.j.order()},
                 {"multiplicities_sum_to_rays", total == t.fan.num_rays()}};

  if (t.pic && t.smooth) {
    Json pic = {{"flasque", vanishing_json(is_flasque(*t.pic))}, {"coflasque", vanishing_json(is_coflasque(*t.pic))}};
    pic["invertible"] = verdict_json(is_invertible(*t.pic));
    r["pic"] = pic;
  } else {
    r["pic"] = unavailable(t.pic ? "fan is not smooth, so Cl is not Pic" : "class group has torsion");
  }

  if (t.smooth_projective()) {
    r["nef"] = nef_report(t)["nef"];
    Json om = omega_section(t, canonical_omega(t));
    r["omega"] = {{"classes", om["classes"]}, {"orbits", om["orbits"]}, {"validation", om["validation"]}};
    r["target"] = om.contains("target") ? om["target"] : unavailable("omega is not J-stable");
    r["algebra"] = om.contains("algebra") ? om["algebra"] : unavailable("omega is not J-stable");
    r["injectivity"] = {{"text", injectivity_verdict(t).text}};
  } else {
    const std::string why = why_not_descent(t);
    for (const char* key : {"nef", "omega", "target", "algebra", "injectivity"}) r[key] = unavailable(why);
  }
  return r;
}

std::string analysis_text(const Json& r) {
  std::ostringstream os;
  const auto& fan = r["fan"];
  os << "fan " << (fan["name"].get<std::string>().empty() ? "(unnamed)" : fan["name"].get<std::string>()) << ": rank "
     << fan["rank"] << ", " << fan["rays"] << " rays, " << fan["max_cones"] << " maximal cones\n";
  const auto& p = r["predicates"];
  os << "  simplicial " << p["simplicial"] << ", smooth " << p["smooth"] << ", complete " << p["complete"]
     << ", projective " << p["projective"] << "\n";
  os << "class group   " << r["class_group"]["text"].get<std::string>() << "  [" << r["class_group"]["basis"].get<std::string>()
     << "]\n";
  os << "weights       ";
  for (const auto& w : r["weights"]) os << vec_text(w["class"]) << "x" << w["multiplicity"] << " ";
  os << "\n";
  const auto& g = r["groups"];
  os << "|W| = " << g["W"] << ", |W0| = " << g["W0"] << ", |J| = " << g["J"] << "\n";
  for (const auto& gen : g["J_generators"]) os << "  J generator " << gen["element"] << " on Cl: " << list_text(gen["cl_matrix"]) << "\n";
  const auto& pic = r["pic"];
  if (pic.contains("unavailable")) {
    os << "Pic           unavailable (" << pic["unavailable"].get<std::string>() << ")\n";
  } else {
    os << "Pic           flasque " << pic["flasque"]["holds"] << ", coflasque " << pic["coflasque"]["holds"]
       << ", invertible " << pic["invertible"]["verdict"].get<std::string>() << " ("
       << pic["invertible"]["reason"].get<std::string>() << ")\n";
  }
  if (r["omega"].contains("unavailable")) {
    os << "omega, target, algebra: unavailable (" << r["omega"]["unavailable"].get<std::string>() << ")\n";
    return os.str();
  }
  os << "nef cone      rays " << list_text(r["nef"]["rays"]) << "\n";
  os << "omega         ";
  for (const auto& c : r["omega"]["classes"]) os << vec_text(c["class"]) << "[h0=" << c["h0"] << "] ";
  os << "\n  valid " << r["omega"]["validation"]["ok"] << "\n";
  if (r["target"].contains("text")) os << "target Y      " << r["target"]["text"].get<std::string>() << "\n";
  if (r["algebra"].contains("text")) os << "algebra B     " << r["algebra"]["text"].get<std::string>() << "\n";
  os << r["injectivity"]["text"].get<std::string>() << "\n";
  return os.str();
}

Json forms_report(const ToricData& t, const GaloisModel& model) {
  FormsReport f = classify_forms(t, model);
  Json r;
  r["model"] = f.model;
  r["fan"] = t.fan.name;
  r["w_classes"] = f.w_classes.size();
  const bool real = model.kind == GaloisModel::Kind::Real;

  Json comps = Json::array();
  for (std::size_t k = 0; k < f.h2.components.size(); ++k) {
    const auto& c = f.h2.components[k];
    Json center = Json::array();
    for (const auto& o : twisted_center(model, t, c.c).orbits) center.push_back({{"orbit", int_list(o)}, {"degree", o.size()}});
    Json torus = Json::array();
    for (const auto& tf : canonical_torus_shape(model, t, c.c))
      torus.push_back({{"orbit", int_list(tf.orbit)}, {"multiplicity", tf.multiplicity}});
    Json elements = Json::array();
    for (std::size_t e = 0; e < c.orbit_reps.size(); ++e) {
      Fingerprint fp;
      fp.component = static_cast<int>(k);
      fp.element = c.orbit_reps[e];
      elements.push_back({{"element", to_json(c.orbit_reps[e])},
                          {"orbit_size", c.orbit_sizes[e]},
                          {"neutral", is_zero(c.orbit_reps[e])},
                          {"period", to_json(period(f.h2, fp))}});
    }
    comps.push_back({{"index", k},
                     {"cocycle", int_list(c.c)},
                     {"twisted_center", center},
                     {"canonical_torus", torus},
                     {"group", group_json(c.group)},
                     {"centralizer_order", c.centralizer.size()},
                     {"size", c.size()},
                     {"elements", elements}});
  }
  r["neutralization_classes"] = comps;

  Json ncl = Json::array();
  for (std::size_t i = 0; i < f.nclasses.size(); ++i) {
    const auto& n = f.nclasses[i];
    ncl.push_back({{"index", i},
                   {"w_class", n.w_class},
                   {"w_cocycle", int_list(f.w_classes[static_cast<std::size_t>(n.w_class)])},
                   {"component", n.component},
                   {"h1_element", to_json(n.h1_element)},
                   {"torus", n.torus},
                   {"fingerprint", fingerprint_json(n.fingerprint)},
                   {"variety", n.variety},
                   {"from_j", n.from_j}});
  }
  r["nclasses"] = ncl;

  std::optional<OmegaSet> omega;
  if (real && t.smooth_projective()) omega = canonical_omega(t);
  Json vars = Json::array();
  for (std::size_t v = 0; v < f.varieties.size(); ++v) {
    const auto& var = f.varieties[v];
    Json tori = Json::array();
    for (int i : var.nclasses) tori.push_back(f.nclasses[static_cast<std::size_t>(i)].torus);
    Json entry = {{"id", v}, {"fingerprint", fingerprint_json(var.fingerprint)}, {"nclasses", int_list(var.nclasses)},
                  {"tori", tori}};
    if (omega) {
      auto p = fingerprint_in_p(t, f.h2, *omega, var.fingerprint);
      Json br = Json::array();
      for (const auto& e : p.entries)
        br.push_back({{"orbit", int_list(e.orbit)}, {"field", e.field}, {"class", e.value == 0 ? "0" : "1/2"}});
      entry["brauer"] = br;
    }
    vars.push_back(entry);
  }
  r["varieties"] = vars;
  if (omega) r["omega_classes"] = vectors_json(omega->classes);
  r["notes"] = f.notes;
  return r;
}

std::string forms_text(const Json& r) {
  std::ostringstream os;
  os << "forms of " << (r["fan"].get<std::string>().empty() ? "(unnamed)" : r["fan"].get<std::string>())
     << " over the " << r["model"].get<std::string>() << " model\n";
  os << "classes in H^1(k, W): " << r["w_classes"] << "\n";
  os << "neutralization classes: " << r["neutralization_classes"].size() << "\n";
  for (const auto& c : r["neutralization_classes"]) {
    os << "  c" << c["index"] << ": cocycle " << vec_text(c["cocycle"]) << ", center degrees";
    for (const auto& o : c["twisted_center"]) os << " " << o["degree"];
    os << ", canonical torus";
    for (const auto& tf : c["canonical_torus"]) os << " F" << tf["orbit"].size() << "^" << tf["multiplicity"];
    os << ", H^2 component " << c["group"]["text"].get<std::string>() << " / centralizer -> " << c["size"]
       << " element(s)\n";
  }
  if (!r["nclasses"].empty()) {
    std::vector<std::vector<std::string>> rows{{"#", "class", "torus", "fingerprint", "variety"}};
    for (const auto& n : r["nclasses"])
      rows.push_back({std::to_string(n["index"].get<int>()), "c" + std::to_string(n["component"].get<int>()),
                      n["torus"].get<std::string>(), fingerprint_text(n["fingerprint"]),
                      std::to_string(n["variety"].get<int>())});
    os << "N-classes: " << r["nclasses"].size() << "\n" << table(rows);
  }
  os << "variety classes: " << r["varieties"].size() << "\n";
  for (const auto& v : r["varieties"]) {
    os << "  " << v["id"] << ": " << fingerprint_text(v["fingerprint"]) << ", period " << v["fingerprint"]["period"];
    if (v.contains("brauer")) {
      os << ", Brauer {";
      bool first = true;
      for (const auto& e : v["brauer"]) {
        os << (first ? "" : ", ") << "(" << e["field"].get<std::string>() << "," << e["class"].get<std::string>() << ")";
        first = false;
      }
      os << "}";
    }
    os << ", tori:";
    for (const auto& tl : v["tori"]) os << " " << tl.get<std::string>() << ";";
    os << "\n";
  }
  for (const auto& n : r["notes"]) os << "note: " << n.get<std::string>() << "\n";
  return os.str();
}

Json cohomology_report(const GLattice& l, std::optional<int> degree, std::optional<std::size_t> subgroup) {
  auto subs = subgroups(*l.group);
  Subgroup h = whole_group(*l.group);
  if (subgroup) {
    if (*subgroup >= subs.size()) throw std::invalid_argument("subgroup index out of range");
    h = subs[*subgroup];
  }
  Json r = {{"rank", l.rank}, {"group_order", l.group->order()}, {"subgroup", subgroup_json(h)}};
  Json groups = Json::array();
  std::vector<int> degrees = degree ? std::vector<int>{*degree} : std::vector<int>{-1, 0, 1};
  for (int d : degrees) {
    if (d < -1 || d > 1) throw std::invalid_argument("degree must be -1, 0 or 1");
    groups.push_back({{"degree", d}, {"group", group_json(tate_h(d, h, l))}});
  }
  r["cohomology"] = groups;
  return r;
}

Json flasque_report(const GLattice& l) { return {{"flasque", vanishing_json(is_flasque(l))}}; }
Json coflasque_report(const GLattice& l) { return {{"coflasque", vanishing_json(is_coflasque(l))}}; }

Json resolution_report(const GLattice& l) {
  auto res = coflasque_resolution(l);
  Json blocks = Json::array();
  for (const auto& b : res.blocks) {
    Json cosets = Json::array();
    for (const auto& c : b.cosets) cosets.push_back(int_list(c));
    blocks.push_back({{"subgroup", subgroup_json(b.subgroup)},
                      {"generator", to_json(b.generator)},
                      {"offset", b.offset},
                      {"cosets", cosets}});
  }
  Json qgens = Json::array();
  for (int g : res.Q.group->generators()) qgens.push_back(to_json(res.Q.act(g)));
  return {{"resolution",
           {{"blocks", blocks},
            {"permutation_rank", res.P.rank},
            {"pi", to_json(res.pi)},
            {"kernel_basis", to_json(res.q_basis)},
            {"kernel", {{"rank", res.Q.rank}, {"generators", qgens}}},
            {"kernel_coflasque", is_coflasque(res.Q).holds}}}};
}

Json invertible_report(const GLattice& l) { return {{"invertible", verdict_json(is_invertible(l))}}; }

Json global_kernel_report(const GLattice& l) {
  auto k = global_cyclic_kernel(l);
  Json wit = Json::array();
  for (const auto& m : k.witnesses) wit.push_back(to_json(m));
  return {{"global_cyclic_kernel", {{"group", group_json(k.group)}, {"witnesses", wit}}}};
}

Json omega_report(const ToricData& t, const std::optional<std::vector<IntVector>>& classes) {
  if (!t.smooth_projective()) throw std::invalid_argument("omega needs a smooth projective fan (" + why_not_descent(t) + ")");
  OmegaSet omega = classes ? make_omega(t, *classes) : canonical_omega(t);
  Json r = omega_section(t, omega);
  r["source"] = classes ? "user" : "canonical";
  return r;
}

Json nef_report(const ToricData& t) {
  if (!t.nef) throw std::invalid_argument("nef cone needs a smooth projective fan (" + why_not_descent(t) + ")");
  const auto& n = *t.nef;
  return {{"nef",
           {{"rays", vectors_json(n.cone.rays)},
            {"inequalities", vectors_json(n.cone.inequalities)},
            {"hilbert_basis", vectors_json(hilbert_basis(n.cone))}}}};
}

Json h0_report(const ToricData& t, const IntVector& divisor) {
  if (divisor.size() != t.fan.num_rays())
    throw std::invalid_argument("divisor needs " + std::to_string(t.fan.num_rays()) + " coefficients");
  Json r = {{"divisor", to_json(divisor)}, {"class", to_json(t.div.classify(divisor))}, {"h0", to_json(h0(t.fan, divisor))}};
  if (t.smooth) r["nef"] = is_nef(t.fan, divisor);
  return r;
}

std::string plain_text(const Json& r) {
  std::ostringstream os;
  auto rec = [&](auto&& self, const Json& j, const std::string& prefix) -> void {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
      const Json& v = it.value();
      if (v.is_object()) {
        self(self, v, key);
      } else if (v.is_array() && !v.empty() && v[0].is_object()) {
        for (std::size_t i = 0; i < v.size(); ++i) self(self, v[i], key + "[" + std::to_string(i) + "]");
      } else {
        os << pad(key, 28) << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  };
  rec(rec, r, "");
  return os.str();
}

}  // namespace tdesc
