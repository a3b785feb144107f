#pragma once

#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "json.hpp"
#include "kef/analysis.hpp"
#include "kef/caps.hpp"

namespace kef {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "kef-report/v1";

/// The serializable summary of a GraphAnalysis (JSON schema v1).
/// Optional fields are null when a cap prevented their computation.
struct InvariantReport {
  std::string graph_id;
  int n = 0;
  int m = 0;
  std::optional<int> alpha;
  int mu = 0;
  std::optional<int> kappa;
  std::optional<int> d;
  std::optional<int> xi;
  std::optional<int> epsilon;
  std::optional<int> beta;
  std::optional<int> alpha_prime;
  std::optional<int> nucleus_size;
  std::optional<int> rho_v;
  std::optional<int> rho_e;
  std::optional<bool> is_ke;
  std::optional<bool> is_one_ke;
  std::optional<std::string> parity_class;
  std::optional<VertexSet> core;
  std::optional<VertexSet> corona;
  std::optional<VertexSet> ker;
  std::optional<VertexSet> diadem;
  std::optional<VertexSet> nucleus;
  std::optional<std::vector<Vertex>> odd_cycle;
  std::optional<VertexSet> rho_v_witnesses;
  bool complete = true;
  std::vector<std::string> skipped;
  Caps caps;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

inline InvariantReport make_report(const GraphAnalysis& a) {
  InvariantReport r;
  r.graph_id = a.graph_id;
  r.n = a.n();
  r.m = a.m();
  r.mu = a.mu.mu;
  if (a.alpha) r.alpha = a.alpha->alpha;
  if (a.ke) {
    r.kappa = a.ke->kappa;
    r.is_ke = a.ke->is_ke;
    r.is_one_ke = a.ke->is_one_ke;
  }
  if (a.omega) {
    r.core = a.core();
    r.corona = a.corona();
    r.xi = r.core->size();
  }
  if (a.landscape) {
    r.d = a.landscape->d;
    r.ker = a.landscape->ker;
    r.diadem = a.landscape->diadem;
    r.nucleus = a.landscape->nucleus;
    r.epsilon = a.landscape->epsilon();
    r.beta = a.landscape->beta();
    r.alpha_prime = a.landscape->alpha_prime;
    r.nucleus_size = a.landscape->nucleus.size();
  }
  if (a.rho) {
    r.rho_v = a.rho->rho_v;
    r.rho_e = a.rho->rho_e;
    r.rho_v_witnesses = a.rho->rho_v_witnesses;
  }
  if (a.parity) {
    r.parity_class = to_string(a.parity->kind);
    if (a.parity->cycle) r.odd_cycle = a.parity->cycle->vertices;
  }
  r.complete = a.complete();
  r.skipped = a.skipped;
  r.caps = a.caps;
  return r;
}

namespace detail {

template <typename T>
Json optional_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, VertexSet>) {
    return v->members();
  } else {
    return *v;
  }
}

template <typename T>
std::optional<T> optional_from(const Json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("report is missing key '") + key + "'");
  const Json& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  if constexpr (std::is_same_v<T, VertexSet>) {
    return VertexSet::from_members(v.get<std::vector<Vertex>>());
  } else {
    return v.get<T>();
  }
}

}  // namespace detail

inline void to_json(Json& j, const InvariantReport& r) {
  using detail::optional_json;
  j = Json::object();
  j["schema"] = kReportSchema;
  j["graph_id"] = r.graph_id;
  j["n"] = r.n;
  j["m"] = r.m;
  j["alpha"] = optional_json(r.alpha);
  j["mu"] = r.mu;
  j["kappa"] = optional_json(r.kappa);
  j["d"] = optional_json(r.d);
  j["xi"] = optional_json(r.xi);
  j["epsilon"] = optional_json(r.epsilon);
  j["beta"] = optional_json(r.beta);
  j["alpha_prime"] = optional_json(r.alpha_prime);
  j["nucleus_size"] = optional_json(r.nucleus_size);
  j["rho_v"] = optional_json(r.rho_v);
  j["rho_e"] = optional_json(r.rho_e);
  j["is_ke"] = optional_json(r.is_ke);
  j["is_one_ke"] = optional_json(r.is_one_ke);
  j["parity_class"] = optional_json(r.parity_class);
  j["core"] = optional_json(r.core);
  j["corona"] = optional_json(r.corona);
  j["ker"] = optional_json(r.ker);
  j["diadem"] = optional_json(r.diadem);
  j["nucleus"] = optional_json(r.nucleus);
  j["odd_cycle"] = optional_json(r.odd_cycle);
  j["rho_v_witnesses"] = optional_json(r.rho_v_witnesses);
  j["complete"] = r.complete;
  j["skipped"] = r.skipped;
  j["caps"] = r.caps;
}

inline void from_json(const Json& j, InvariantReport& r) {
  using detail::optional_from;
  if (j.value("schema", std::string{}) != kReportSchema) throw InputError("not a kef-report/v1 document");
  try {
    r.graph_id = j.at("graph_id").get<std::string>();
    r.n = j.at("n").get<int>();
    r.m = j.at("m").get<int>();
    r.alpha = optional_from<int>(j, "alpha");
    r.mu = j.at("mu").get<int>();
    r.kappa = optional_from<int>(j, "kappa");
    r.d = optional_from<int>(j, "d");
    r.xi = optional_from<int>(j, "xi");
    r.epsilon = optional_from<int>(j, "epsilon");
    r.beta = optional_from<int>(j, "beta");
    r.alpha_prime = optional_from<int>(j, "alpha_prime");
    r.nucleus_size = optional_from<int>(j, "nucleus_size");
    r.rho_v = optional_from<int>(j, "rho_v");
    r.rho_e = optional_from<int>(j, "rho_e");
    r.is_ke = optional_from<bool>(j, "is_ke");
    r.is_one_ke = optional_from<bool>(j, "is_one_ke");
    r.parity_class = optional_from<std::string>(j, "parity_class");
    r.core = optional_from<VertexSet>(j, "core");
    r.corona = optional_from<VertexSet>(j, "corona");
    r.ker = optional_from<VertexSet>(j, "ker");
    r.diadem = optional_from<VertexSet>(j, "diadem");
    r.nucleus = optional_from<VertexSet>(j, "nucleus");
    r.odd_cycle = optional_from<std::vector<Vertex>>(j, "odd_cycle");
    r.rho_v_witnesses = optional_from<VertexSet>(j, "rho_v_witnesses");
    r.complete = j.at("complete").get<bool>();
    r.skipped = j.at("skipped").get<std::vector<std::string>>();
    r.caps = merge_caps(Caps{}, j.at("caps"));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

inline std::string report_to_string(const InvariantReport& r) { return Json(r).dump(2) + "\n"; }

}  // namespace kef
