#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>

#include "semirep/chop.hpp"
#include "semirep/cmp.hpp"
#include "semirep/schutzenberger.hpp"
#include "semirep/semigroup.hpp"

namespace semirep {

using Json = nlohmann::ordered_json;

/// Reads one semigroup description: {"type":"cayley","table":[[...]]} or
/// {"type":"transformations","degree":d,"generators":[[...]]}.  Malformed
/// documents raise Input errors with the offending field named.
Semigroup parseSemigroup(std::istream& in);
Semigroup parseSemigroupFile(const std::string& path);

Json analyzeReport(const Semigroup& s, const GreenStructure& g);
Json schutzReport(const Semigroup& s, const MonomialRep& rep);

/// Sandwich/monomial entries serialize as the semigroup index of the group
/// element, or the string "0" for the zero symbol.
Json monomialEntry(int e);

template <class K>
Json matrixJson(const Mat<K>& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) {
      if constexpr (std::is_same_v<K, Fp>)
        row.push_back(m(i, j).value());
      else
        row.push_back(FieldOps<K>::str(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class K>
Json irrepsReport(const Semigroup& s, const Field& f,
                  const std::vector<SimpleReport<K>>& reports) {
  Json out;
  out["field"] = f.name();
  out["size"] = s.n;
  out["count"] = reports.size();
  Json simples = Json::array();
  Json byApex = Json::object();
  for (const auto& r : reports) {
    Json item;
    item["apex"] = r.apex;
    item["groupDim"] = r.groupDim;
    item["inducedDim"] = r.inducedDim;
    item["radicalDim"] = r.radicalDim;
    item["dim"] = r.simpleDim;
    item["coinducedDim"] = r.coinducedDim;
    item["minimalDim"] = r.minimalDim;
    item["isoCheck"] = r.isoCheck;
    Json actions = Json::array();
    for (const auto& a : r.simpleModule.actions) actions.push_back(matrixJson<K>(a));
    item["actions"] = std::move(actions);
    simples.push_back(std::move(item));
    const std::string key = std::to_string(r.apex);
    byApex[key] = (byApex.contains(key) ? byApex[key].get<int>() : 0) + 1;
  }
  out["simples"] = std::move(simples);
  out["countsByApex"] = std::move(byApex);
  return out;
}

template <class K>
Json chopReport(const Semigroup& s, const GreenStructure& g, const Field& f,
                const ChopResult<K>& res) {
  Json out;
  out["field"] = f.name();
  out["size"] = s.n;
  out["regularModuleDim"] = s.n;
  Json factors = Json::array();
  for (const auto& factor : res.factors) {
    Json item;
    item["dim"] = factor.dim;
    item["multiplicity"] = factor.multiplicity;
    item["nullAction"] = factor.nullAction;
    if (factor.nullAction) {
      item["apex"] = nullptr;
    } else {
      const SModule<K> m{factor.dim, f, factor.actions};
      const auto apex = apexOf<K>(m, s, g);
      if (apex)
        item["apex"] = *apex;
      else
        item["apex"] = nullptr;
    }
    factors.push_back(std::move(item));
  }
  out["factors"] = std::move(factors);
  out["distinctSimpleFactors"] = res.distinctSimpleCount();
  return out;
}

}  // namespace semirep
