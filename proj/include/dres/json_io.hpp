#pragma once

#include <json.hpp>

#include "implicitize.hpp"
#include "text.hpp"

namespace dres {

inline nlohmann::json terms_json(const LinPoly& A) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = A.terms().rbegin(); it != A.terms().rend(); ++it)
    terms.push_back({{"var", to_string(it->first)}, {"coeff", to_string(it->second)}});
  return {{"text", to_string(A)}, {"terms", terms}, {"constant", to_string(A.constant())}};
}

inline nlohmann::json to_json(const Certificate& c) {
  nlohmann::json phi = nlohmann::json::array();
  for (const auto& f : c.perturbation.phi) phi.push_back(to_string(f));
  nlohmann::json j = {
      {"rank_S", c.rank_S},
      {"D_phi", c.D_phi},
      {"c_A", c.c_A ? nlohmann::json(*c.c_A) : nlohmann::json(nullptr)},
      {"L", c.L},
      {"rank_ML1", c.rank_ML1 ? nlohmann::json(*c.rank_ML1) : nlohmann::json(nullptr)},
      {"N", c.N},
      {"step", c.step},
      {"A_D", to_string(c.A_D)},
      {"content", to_string(c.content)},
      {"perturbation", phi},
      {"permutation", c.permutation},
      {"fallback_used", c.fallback_used},
  };
  return j;
}

inline nlohmann::json to_json(const Decision& d) {
  return {
      {"decision", d.implicit ? "implicit" : "lower_dim"},
      {"implicit_equation", d.implicit ? terms_json(d.A) : nlohmann::json(nullptr)},
      {"certificate", to_json(d.cert)},
  };
}

}  // namespace dres
