#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cmono/branch.hpp"
#include "cmono/laurent.hpp"

namespace cmono {

// Input document: branch data in Laurent or matrix mode.
//   {"p": 2, "vp": "0", "mode": "laurent",
//    "branch": [{"alpha": "1", "beta": "inf", "m": 1}, ...]}
// or
//   {"p": 2, "vp": "1", "mode": "matrix",
//    "branch": [{"m": 1}, ...], "matrix": [["inf","0",...], ...]}
// beta_0 must be "inf"; matrix rows/columns follow the point order
// alpha_0, alpha_1, beta_1, ..., alpha_h, beta_h.
struct InputDocument {
  enum class Mode { Laurent, Matrix };

  Mode mode = Mode::Laurent;
  BranchConfig config;
  std::vector<LaurentPoly> roots;  // Laurent mode: the 2h+1 finite points
  ValMatrix matrix;                // matrix mode

  // Valuation matrix for the pipeline (built from roots in Laurent mode).
  ValMatrix valuation_matrix() const;

  nlohmann::ordered_json to_json() const;
  static InputDocument from_json(const nlohmann::json& j);
  static InputDocument from_text(const std::string& text);
};

}  // namespace cmono
