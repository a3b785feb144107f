#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

#include "json.hpp"
#include "kef/errors.hpp"

namespace kef {

/// Size and work limits. Every exact routine checks the relevant cap and
/// throws CapacityError instead of running unbounded.
struct Caps {
  int solver_n = 40;                       ///< max order for exact alpha
  int enumeration_n = 24;                  ///< max order for Omega / critical-set enumeration
  int matching_enumeration_n = 20;         ///< max order for all_maximum_matchings
  std::int64_t cycle_work = 20'000'000;    ///< DFS steps for odd-cycle census
  std::int64_t crit_count = 1'000'000;     ///< max enumerated sets per family

  friend bool operator==(const Caps&, const Caps&) = default;
};

inline void to_json(nlohmann::ordered_json& j, const Caps& c) {
  j = nlohmann::ordered_json{{"solver_n", c.solver_n},
                             {"enumeration_n", c.enumeration_n},
                             {"matching_enumeration_n", c.matching_enumeration_n},
                             {"cycle_work", c.cycle_work},
                             {"crit_count", c.crit_count}};
}

/// Applies the keys present in `j` on top of `base`. Unknown keys are errors.
template <typename Json>
Caps merge_caps(Caps base, const Json& j) {
  if (!j.is_object()) throw InputError("caps must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (!it.value().is_number_integer() || it.value().template get<std::int64_t>() < 0) {
      throw InputError("cap '" + key + "' must be a nonnegative integer");
    }
    const auto value = it.value().template get<std::int64_t>();
    if (key == "solver_n") {
      base.solver_n = static_cast<int>(value);
    } else if (key == "enumeration_n") {
      base.enumeration_n = static_cast<int>(value);
    } else if (key == "matching_enumeration_n") {
      base.matching_enumeration_n = static_cast<int>(value);
    } else if (key == "cycle_work") {
      base.cycle_work = value;
    } else if (key == "crit_count") {
      base.crit_count = value;
    } else {
      throw InputError("unknown cap '" + key + "'");
    }
  }
  return base;
}

inline void from_json(const nlohmann::ordered_json& j, Caps& c) { c = merge_caps(Caps{}, j); }

/// Defaults overridden by the KEF_CAPS_JSON environment variable, if set.
inline Caps caps_from_environment(Caps base = {}) {
  const char* raw = std::getenv("KEF_CAPS_JSON");
  if (raw == nullptr || *raw == '\0') return base;
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(raw);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("KEF_CAPS_JSON is not valid JSON: ") + e.what());
  }
  return merge_caps(base, parsed);
}

}  // namespace kef
