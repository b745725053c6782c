#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "billiard/deformation.hpp"
#include "billiard/diagram.hpp"
#include "billiard/invariants.hpp"
#include "billiard/symunion.hpp"

namespace billiard {

using Json = nlohmann::json;

Json params_to_json(const BilliardParams& params);
BilliardParams params_from_json(const Json& j);

// {"params": {...}, "pd": [[a,b,c,d], ...], "gauss": [...], "signs": [...]}
Json diagram_to_json(const KnotDiagram& diagram);
// Reads "pd" (with optional "signs"), or "gauss" with "signs" when no PD is given.
KnotDiagram diagram_from_json(const Json& j);

// {"det": N, "alexander": {"coeffs": [...], "min_exp": 0}, "square_root": N | null}
Json invariants_to_json(const InvariantReport& report);
InvariantReport invariants_from_json(const Json& j);

// Summary without the grid.
Json profile_to_json(const DeformationProfile& profile);

Json decomposition_to_json(const SymmetricUnionDecomposition& d);

struct CatalogEntry {
  BilliardParams params;
  bool stable_limit = false;
  InvariantReport invariants;
  std::optional<StabilityClass> stability;
  std::string tool_version = BILLIARD_VERSION;
  std::optional<std::string> timestamp;  // from SOURCE_DATE_EPOCH only
};

// Timestamp from SOURCE_DATE_EPOCH (ISO 8601 UTC), if set.
std::optional<std::string> reproducible_timestamp();

Json catalog_entry_to_json(const CatalogEntry& e);
// Appends to a JSON-lines file; an entry with the same key replaces the old
// line, an identical entry leaves the file untouched. Returns true if written.
bool append_catalog(const std::string& path, const CatalogEntry& e);

}  // namespace billiard
