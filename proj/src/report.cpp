#include "qginv/report.hpp"

#include <cstdio>
#include <cstdlib>

namespace qginv {

void canonicalize_floats(nlohmann::json& j) {
  if (j.is_object() || j.is_array()) {
    for (auto& child : j) canonicalize_floats(child);
    return;
  }
  if (j.is_number_float()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", j.get<double>());
    j = std::strtod(buf, nullptr);
  }
}

nlohmann::json meta_block(const Tolerances& tol) {
  return nlohmann::json{{"version", kVersion},
                        {"rel_tol", tol.rel_tol},
                        {"max_denominator", tol.max_denominator},
                        {"eig_threshold", tol.eig_threshold},
                        {"kac_tol", tol.kac_tol},
                        {"ratio_rel_tol", tol.ratio_rel_tol}};
}

nlohmann::json table_to_json(const InvariantTable& t) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, g] : t) j[name] = subgroup_to_json(g);
  return j;
}

std::string table_to_markdown(const InvariantTable& t, const std::string& title) {
  std::string s = "### " + title + "\n\n| invariant | generator | numeric |\n|---|---|---|\n";
  char buf[40];
  for (const auto& [name, g] : t) {
    s += "| " + name + " | " + subgroup_symbolic(g) + " | ";
    if (g.is_cyclic()) {
      std::snprintf(buf, sizeof buf, "%.12g", g.generator());
      s += buf;
    } else {
      s += g.is_full() ? "-" : "0";
    }
    s += " |\n";
  }
  return s;
}

}  // namespace qginv
