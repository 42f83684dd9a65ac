#include "semirep/io.hpp"

#include <fstream>
#include <istream>

#include "semirep/green.hpp"

namespace semirep {

namespace {

std::vector<std::vector<int>> intTable(const Json& j, const std::string& field) {
  if (!j.is_array()) inputError("BadInput", "field '" + field + "' must be an array of arrays");
  std::vector<std::vector<int>> out;
  for (const auto& row : j) {
    if (!row.is_array()) inputError("BadInput", "field '" + field + "' must be an array of arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        inputError("BadInput", "field '" + field + "' has a non-integer entry");
      r.push_back(v.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Semigroup parseSemigroup(std::istream& in) {
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    inputError("BadInput", e.what());
  }
  if (!doc.is_object()) inputError("BadInput", "top-level document must be an object");
  if (!doc.contains("type") || !doc["type"].is_string())
    inputError("BadInput", "missing string field 'type'");
  const std::string type = doc["type"].get<std::string>();
  if (type == "cayley") {
    if (!doc.contains("table")) inputError("BadInput", "missing field 'table'");
    return fromCayleyTable(intTable(doc["table"], "table"));
  }
  if (type == "transformations") {
    if (!doc.contains("degree") || !doc["degree"].is_number_integer())
      inputError("BadInput", "missing integer field 'degree'");
    if (!doc.contains("generators")) inputError("BadInput", "missing field 'generators'");
    return fromTransformations(doc["degree"].get<int>(),
                               intTable(doc["generators"], "generators"));
  }
  inputError("BadInput", "field 'type' must be 'cayley' or 'transformations', got '" + type + "'");
}

Semigroup parseSemigroupFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) inputError("BadInput", "cannot open '" + path + "'");
  return parseSemigroup(in);
}

Json monomialEntry(int e) {
  if (e < 0) return Json("0");
  return Json(e);
}

Json analyzeReport(const Semigroup& s, const GreenStructure& g) {
  Json out;
  out["size"] = s.n;
  out["idempotents"] = g.idempotents;

  Json jcs = Json::array();
  for (int j = 0; j < static_cast<int>(g.jClasses.size()); ++j) {
    Json item;
    item["id"] = j;
    item["elements"] = g.jClasses[static_cast<std::size_t>(j)];
    item["regular"] = static_cast<bool>(g.regular[static_cast<std::size_t>(j)]);
    jcs.push_back(std::move(item));
  }
  out["jClasses"] = std::move(jcs);

  Json edges = Json::array();
  for (auto [lo, hi] : g.jOrderEdges) edges.push_back(Json::array({lo, hi}));
  out["jOrder"] = std::move(edges);

  out["rClasses"] = g.rClasses;
  out["lClasses"] = g.lClasses;
  out["hClasses"] = g.hClasses;

  Json regs = Json::array();
  for (int j = 0; j < static_cast<int>(g.jClasses.size()); ++j) {
    if (!g.regular[static_cast<std::size_t>(j)]) continue;
    const JClassData d = jclassData(s, g, j);
    Json item;
    item["jClass"] = j;
    item["eJ"] = d.eJ;
    item["groupOrder"] = d.group.order();
    item["groupElements"] = d.group.elements;
    item["mJ"] = d.mJ();
    item["nJ"] = d.nJ();
    item["lTransversal"] = d.lTransversal;
    item["rTransversal"] = d.rTransversal;
    Json sandwich = Json::array();
    for (int b = 0; b < d.mJ(); ++b) {
      Json row = Json::array();
      for (int a = 0; a < d.nJ(); ++a) row.push_back(monomialEntry(d.sandwichAt(b, a)));
      sandwich.push_back(std::move(row));
    }
    item["sandwich"] = std::move(sandwich);
    item["idealSize"] = d.ideal.size();
    regs.push_back(std::move(item));
  }
  out["regularJClasses"] = std::move(regs);
  return out;
}

Json schutzReport(const Semigroup& s, const MonomialRep& rep) {
  Json out;
  out["jClass"] = rep.jClassId;
  out["side"] = rep.rightSide ? "right" : "left";
  out["size"] = rep.size;
  Json mats = Json::array();
  for (int x = 0; x < s.n; ++x) {
    Json item;
    item["element"] = x;
    Json rows = Json::array();
    for (int r = 0; r < rep.size; ++r) {
      Json row = Json::array();
      for (int c = 0; c < rep.size; ++c) row.push_back(monomialEntry(rep.at(x, r, c)));
      rows.push_back(std::move(row));
    }
    item["rows"] = std::move(rows);
    mats.push_back(std::move(item));
  }
  out["matrices"] = std::move(mats);
  return out;
}

}  // namespace semirep
