#include "tdesc/toric.hpp"

#include <stdexcept>

namespace tdesc {

GLattice pic_lattice(const ClassAutGroup& j) {
  GLattice l{j.group, j.cl_action.empty() ? 0 : j.cl_action[0].rows(), j.cl_action};
  l.verify();
  return l;
}

ToricData prepare(const Fan& f) {
  auto v = validate_fan(f);
  if (!v.valid()) {
    std::string msg = "invalid fan:";
    for (const auto& s : v.violations) msg += " " + s + ";";
    throw std::invalid_argument(msg);
  }
  ToricData t;
  t.fan = f;
  t.smooth = is_smooth(f);
  t.complete = is_complete(f);
  t.projective = t.complete && is_projective(f);
  t.div = class_group(f);
  t.wd = weight_decomposition(t.div);
  t.w = fan_automorphisms(f);
  t.j = class_aut_group(t.w, t.div, t.wd);
  if (t.div.cl_group.is_free()) t.pic = pic_lattice(t.j);
  if (t.smooth_projective()) t.nef = nef_cone(f, t.div);
  return t;
}

IntVector divisor_of_class(const ToricData& t, const IntVector& cls) {
  if (t.nef) return t.nef->lift * cls;
  return class_lift(t.div) * cls;
}

}  // namespace tdesc
