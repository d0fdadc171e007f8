#include "cmono/document.hpp"

#include "cmono/errors.hpp"

namespace cmono {

ValMatrix InputDocument::valuation_matrix() const {
  if (mode == Mode::Matrix) return matrix;
  ValMatrix m = build_val_matrix(roots);
  m.infinity_marked = true;  // beta_0 = inf is part of the branch data
  return m;
}

nlohmann::ordered_json InputDocument::to_json() const {
  nlohmann::ordered_json j;
  j["p"] = config.p;
  j["vp"] = format_rational(config.vp);
  j["mode"] = mode == Mode::Laurent ? "laurent" : "matrix";
  nlohmann::ordered_json branch = nlohmann::ordered_json::array();
  for (long long i = 0; i <= config.h; ++i) {
    nlohmann::ordered_json entry;
    if (mode == Mode::Laurent) {
      entry["alpha"] = format_laurent(roots[i == 0 ? 0 : 2 * i - 1]);
      entry["beta"] = i == 0 ? "inf" : format_laurent(roots[2 * i]);
    }
    entry["m"] = config.exponents[i];
    branch.push_back(entry);
  }
  j["branch"] = branch;
  if (mode == Mode::Matrix) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < matrix.size; ++r) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (std::size_t c = 0; c < matrix.size; ++c) row.push_back(matrix.at(r, c).str());
      rows.push_back(row);
    }
    j["matrix"] = rows;
  }
  return j;
}

namespace {

template <typename T>
T get_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) fail(ErrorCode::Parse, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace

InputDocument InputDocument::from_json(const nlohmann::json& j) {
  InputDocument doc;
  doc.config.p = get_field<long long>(j, "p");
  const std::string mode = get_field<std::string>(j, "mode");
  if (mode == "laurent")
    doc.mode = Mode::Laurent;
  else if (mode == "matrix")
    doc.mode = Mode::Matrix;
  else
    fail(ErrorCode::Parse, "mode must be 'laurent' or 'matrix'");

  if (j.contains("vp")) {
    try {
      doc.config.vp = parse_rational(j.at("vp").get<std::string>());
    } catch (const nlohmann::json::exception&) {
      fail(ErrorCode::Parse, "vp must be a rational string");
    }
  }
  if (doc.mode == Mode::Laurent && doc.config.vp != 0)
    fail(ErrorCode::Parse, "Laurent mode has residue characteristic zero; vp must be 0");

  if (!j.contains("branch") || !j.at("branch").is_array() || j.at("branch").empty())
    fail(ErrorCode::Parse, "missing or empty 'branch' array");
  const auto& branch = j.at("branch");
  doc.config.h = static_cast<long long>(branch.size()) - 1;
  if (doc.config.h < 1) fail(ErrorCode::Parse, "need at least two branch pairs (h >= 1)");

  doc.config.exponents.clear();
  for (const auto& entry : branch) doc.config.exponents.push_back(get_field<long long>(entry, "m"));
  doc.config.validate();

  if (doc.mode == Mode::Laurent) {
    doc.roots.resize(doc.config.point_count());
    for (long long i = 0; i <= doc.config.h; ++i) {
      const auto& entry = branch.at(i);
      const std::string alpha = get_field<std::string>(entry, "alpha");
      const std::string beta = get_field<std::string>(entry, "beta");
      if (i == 0) {
        if (beta != "inf") fail(ErrorCode::Parse, "beta_0 must be 'inf'");
        doc.roots[0] = parse_laurent(alpha);
      } else {
        if (alpha == "inf" || beta == "inf")
          fail(ErrorCode::Parse, "only beta_0 may be infinite");
        doc.roots[2 * i - 1] = parse_laurent(alpha);
        doc.roots[2 * i] = parse_laurent(beta);
      }
    }
  } else {
    if (!j.contains("matrix") || !j.at("matrix").is_array())
      fail(ErrorCode::Parse, "matrix mode requires a 'matrix' array");
    const auto& rows = j.at("matrix");
    const std::size_t n = static_cast<std::size_t>(doc.config.point_count());
    if (rows.size() != n)
      fail(ErrorCode::Parse, "matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    doc.matrix = ValMatrix::zeros(n);
    for (std::size_t r = 0; r < n; ++r) {
      if (!rows.at(r).is_array() || rows.at(r).size() != n)
        fail(ErrorCode::Parse, "matrix row " + std::to_string(r) + " has the wrong length");
      for (std::size_t c = 0; c < n; ++c) {
        std::string cell;
        try {
          cell = rows.at(r).at(c).get<std::string>();
        } catch (const nlohmann::json::exception&) {
          fail(ErrorCode::Parse, "matrix entries must be strings ('inf' or rationals)");
        }
        doc.matrix.at(r, c) = parse_extended(cell);
      }
    }
    for (const auto& entry : branch)
      if (entry.contains("alpha") || entry.contains("beta"))
        fail(ErrorCode::Parse, "matrix mode carries no point coordinates");
  }
  return doc;
}

InputDocument InputDocument::from_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorCode::Parse, "input is not valid JSON");
  return from_json(j);
}

}  // namespace cmono
