#pragma once

// JSON encodings of elements, DAGs, toric classes and enriched maps.
//
//   element:      {"degree":n,"basis":"M"|"F"|"Mcyc"|"Fcyc","terms":[{"set":[..],"coeff":c}]}
//   dag:          {"vertices":[..],"arcs":[[i,j],..]}
//   toric class:  {"canonical":<dag>,"members":count}
//   enriched map: {"f":{"vertex":value,..}}
//
// Coefficients are written as JSON integers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input.

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "toric/dag.hpp"
#include "toric/enriched.hpp"
#include "toric/error.hpp"
#include "toric/integer.hpp"
#include "toric/qsym.hpp"

namespace toric {

using json = nlohmann::json;

inline json int_json(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

inline Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw ParseError("expected an integer, got " + j.dump());
}

inline json subset_json(Subset s) { return s.elements(); }

inline Subset subset_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of set elements, got " + j.dump());
  Subset s;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("set element must be an integer, got " + x.dump());
    s.insert(x.get<int>());
  }
  return s;
}

inline json coeffs_json(int degree, std::string_view basis, const Coeffs& terms) {
  json t = json::array();
  for (const auto& [e, c] : terms) t.push_back({{"set", subset_json(e)}, {"coeff", int_json(c)}});
  return {{"degree", degree}, {"basis", basis}, {"terms", std::move(t)}};
}

/// basis is "M" or "F".
inline json to_json(const QSym& a, std::string_view basis = "M") {
  if (basis == "M") return coeffs_json(a.degree(), basis, a.terms());
  if (basis == "F") return coeffs_json(a.degree(), basis, to_fundamental(a));
  throw DomainError("to_json: basis must be M or F for a quasi-symmetric element");
}

/// basis is "Mcyc", "Fcyc", or "M"/"F" for the expansion into QSym.
inline json to_json(const CQSym& a, std::string_view basis = "Mcyc") {
  if (basis == "Mcyc") return coeffs_json(a.degree(), basis, a.terms());
  if (basis == "Fcyc") return coeffs_json(a.degree(), basis, to_cyclic_fundamental(a));
  if (basis == "M" || basis == "F") return to_json(expand(a), basis);
  throw DomainError("to_json: unknown basis " + std::string(basis));
}

namespace detail {
inline Coeffs terms_from_json(const json& j) {
  if (!j.contains("terms") || !j["terms"].is_array()) throw ParseError("element needs a \"terms\" array");
  Coeffs out;
  for (const auto& t : j["terms"]) {
    if (!t.contains("set") || !t.contains("coeff")) throw ParseError("term needs \"set\" and \"coeff\"");
    add_coeff(out, subset_from_json(t["set"]), int_from_json(t["coeff"]));
  }
  return out;
}
inline int degree_from_json(const json& j) {
  if (!j.contains("degree") || !j["degree"].is_number_integer()) throw ParseError("element needs an integer \"degree\"");
  return j["degree"].get<int>();
}
inline std::string basis_from_json(const json& j) {
  if (!j.contains("basis") || !j["basis"].is_string()) throw ParseError("element needs a \"basis\" string");
  return j["basis"].get<std::string>();
}
}  // namespace detail

/// Reads an element written in the M or F basis.
inline QSym qsym_from_json(const json& j) {
  const int n = detail::degree_from_json(j);
  const std::string basis = detail::basis_from_json(j);
  const Coeffs terms = detail::terms_from_json(j);
  if (basis == "M") {
    QSym q(n);
    for (const auto& [e, c] : terms) q.add(e, c);
    return q;
  }
  if (basis == "F") return from_fundamental(n, terms);
  throw ParseError("expected basis M or F, got " + basis);
}

/// Reads an element written in the Mcyc or Fcyc basis.
inline CQSym cqsym_from_json(const json& j) {
  const int n = detail::degree_from_json(j);
  const std::string basis = detail::basis_from_json(j);
  const Coeffs terms = detail::terms_from_json(j);
  if (basis == "Mcyc") {
    CQSym q(n);
    for (const auto& [e, c] : terms) q.add(e, c);
    return q;
  }
  if (basis == "Fcyc") return from_cyclic_fundamental(n, terms);
  throw ParseError("expected basis Mcyc or Fcyc, got " + basis);
}

inline json to_json(const Dag& d) {
  json arcs = json::array();
  for (const auto& [i, j] : d.arcs()) arcs.push_back({i, j});
  return {{"vertices", d.vertices()}, {"arcs", std::move(arcs)}};
}

inline Dag dag_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("arcs"))
    throw ParseError("DAG needs \"vertices\" and \"arcs\"");
  std::vector<int> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_number_integer()) throw ParseError("vertex must be an integer, got " + v.dump());
    vertices.push_back(v.get<int>());
  }
  std::vector<Arc> arcs;
  for (const auto& a : j["arcs"]) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
      throw ParseError("arc must be a pair of integers, got " + a.dump());
    arcs.emplace_back(a[0].get<int>(), a[1].get<int>());
  }
  return Dag(std::move(vertices), std::move(arcs));
}

inline Dag read_dag_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return dag_from_json(json::parse(in));
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what(), static_cast<long>(e.byte));
  }
}

inline json to_json(const ToricClass& tc) {
  return {{"canonical", to_json(tc.canonical())}, {"members", tc.size()}};
}

inline json to_json(const EnrichedMap& f) {
  json values = json::object();
  for (const auto& [v, x] : f.entries()) values[std::to_string(v)] = x.value();
  return {{"f", std::move(values)}};
}

inline EnrichedMap enriched_from_json(const json& j) {
  if (!j.is_object() || !j.contains("f") || !j["f"].is_object()) throw ParseError("enriched map needs an \"f\" object");
  std::vector<EnrichedMap::Entry> entries;
  for (const auto& [key, val] : j["f"].items()) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ParseError("vertex key must be an integer, got \"" + key + "\"");
    }
    if (!val.is_number_integer()) throw ParseError("value must be a nonzero integer, got " + val.dump());
    entries.emplace_back(v, SignedInt(val.get<int>()));
  }
  return EnrichedMap(std::move(entries));
}

}  // namespace toric
