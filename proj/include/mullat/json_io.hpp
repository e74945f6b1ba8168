#pragma once

/*! \file
 * \brief JSON wire formats: the lattice file format, the multiplicative
 *        lattice file format and report serialization. Uses ordered JSON so
 *        identical inputs serialize to byte-identical output.
 */

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "mullat/core.hpp"
#include "mullat/finite_lattice.hpp"
#include "mullat/mult_lattice.hpp"

namespace mullat {

using Json = nlohmann::ordered_json;

/// { "labels": [...], "leq": [[i, j], ...] } with the fully closed relation;
/// meet/join tables and the bounds are added on request.
inline Json lattice_to_json(const FiniteLattice& L, bool include_tables = false) {
  Json j;
  j["labels"] = L.labels();
  Json pairs = Json::array();
  for (ElementId a = 0; a < L.size(); ++a)
    for (ElementId b = 0; b < L.size(); ++b)
      if (L.leq(a, b)) pairs.push_back(Json::array({a, b}));
  j["leq"] = std::move(pairs);
  if (include_tables) {
    Json meet = Json::array(), join = Json::array();
    for (ElementId a = 0; a < L.size(); ++a) {
      Json mrow = Json::array(), jrow = Json::array();
      for (ElementId b = 0; b < L.size(); ++b) {
        mrow.push_back(L.meet(a, b));
        jrow.push_back(L.join(a, b));
      }
      meet.push_back(std::move(mrow));
      join.push_back(std::move(jrow));
    }
    j["meet"] = std::move(meet);
    j["join"] = std::move(join);
    j["bottom"] = L.bottom();
    j["top"] = L.top();
  }
  return j;
}

inline FiniteLattice lattice_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("labels") || !j.contains("leq"))
    throw Error(ErrorCode::ParseError, "lattice JSON needs \"labels\" and \"leq\"");
  std::vector<std::string> labels;
  for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
  std::vector<std::pair<ElementId, ElementId>> pairs;
  for (const auto& p : j.at("leq")) {
    if (!p.is_array() || p.size() != 2)
      throw Error(ErrorCode::ParseError, "leq entries must be [i, j] pairs");
    pairs.emplace_back(p[0].get<ElementId>(), p[1].get<ElementId>());
  }
  return FiniteLattice::build_from_leq(std::move(labels), pairs);
}

/// { "lattice": <lattice format>, "mult": [[k, ...], ...] }.
inline Json mult_lattice_to_json(const MultiplicativeLattice& M, bool include_tables = false) {
  Json j;
  j["lattice"] = lattice_to_json(M.lattice(), include_tables);
  Json rows = Json::array();
  for (ElementId a = 0; a < M.size(); ++a) {
    Json row = Json::array();
    for (ElementId b = 0; b < M.size(); ++b) row.push_back(M.mult(a, b));
    rows.push_back(std::move(row));
  }
  j["mult"] = std::move(rows);
  return j;
}

inline MultiplicativeLattice mult_lattice_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lattice") || !j.contains("mult"))
    throw Error(ErrorCode::ParseError, "multiplicative lattice JSON needs \"lattice\" and \"mult\"");
  FiniteLattice L = lattice_from_json(j.at("lattice"));
  MultTable table;
  for (const auto& row : j.at("mult")) {
    std::vector<ElementId> r;
    for (const auto& v : row) r.push_back(v.get<ElementId>());
    table.push_back(std::move(r));
  }
  return MultiplicativeLattice::attach_mult(std::move(L), table);
}

/// Reports carry element labels when a lattice is supplied, raw indices
/// otherwise.
inline Json report_to_json(const PropertyReport& r, const FiniteLattice* L = nullptr) {
  Json j;
  j["name"] = r.name;
  j["status"] = std::string(to_string(r.status));
  Json cex = Json::array();
  for (ElementId e : r.counterexample) {
    if (L && e < L->size()) cex.push_back(L->label(e));
    else cex.push_back(e);
  }
  j["counterexample"] = std::move(cex);
  j["detail"] = r.detail;
  return j;
}

}  // namespace mullat
