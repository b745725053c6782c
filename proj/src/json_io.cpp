#include "billiard/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <vector>

#include "billiard/errors.hpp"

namespace billiard {

Json params_to_json(const BilliardParams& p) {
  Json j;
  j["geometry"] = std::string(to_string(p.geometry));
  j["s"] = p.s;
  j["n"] = p.n;
  j["m"] = p.m;
  j["phase"] = p.phase ? Json(to_string(*p.phase)) : Json(nullptr);
  if (p.geometry == Geometry::Cylinder) j["beta"] = p.beta;
  return j;
}

BilliardParams params_from_json(const Json& j) {
  BilliardParams p;
  try {
    p.geometry = parse_geometry(j.at("geometry").get<std::string>());
    p.s = j.at("s").get<int>();
    p.n = j.at("n").get<int>();
    p.m = j.at("m").get<int>();
    if (j.contains("phase") && !j["phase"].is_null()) p.phase = parse_rational(j["phase"].get<std::string>());
    if (j.contains("beta")) p.beta = j["beta"].get<double>();
  } catch (const Json::exception& e) {
    throw ParameterError(std::string("malformed params: ") + e.what());
  }
  return p;
}

Json diagram_to_json(const KnotDiagram& d) {
  Json j;
  j["params"] = d.params ? params_to_json(*d.params) : Json(nullptr);
  if (d.stable_limit) j["stable_limit"] = true;
  j["pd"] = Json::array();
  for (const auto& x : d.pd) j["pd"].push_back({x[0], x[1], x[2], x[3]});
  j["gauss"] = d.gauss;
  std::vector<int> signs;
  for (const auto& c : d.crossings) signs.push_back(c.sign);
  j["signs"] = signs;
  return j;
}

KnotDiagram diagram_from_json(const Json& j) {
  try {
    std::vector<int> signs;
    if (j.contains("signs")) signs = j["signs"].get<std::vector<int>>();
    KnotDiagram d;
    if (j.contains("pd")) {
      d = diagram_from_pd(j["pd"].get<std::vector<std::array<int, 4>>>(), signs);
    } else if (j.contains("gauss")) {
      d = diagram_from_gauss(j["gauss"].get<std::vector<int>>(), signs);
    } else {
      throw ParameterError("diagram JSON needs a \"pd\" or \"gauss\" field");
    }
    if (j.contains("params") && !j["params"].is_null()) d.params = params_from_json(j["params"]);
    d.stable_limit = j.value("stable_limit", false);
    return d;
  } catch (const Json::exception& e) {
    throw ParameterError(std::string("malformed diagram JSON: ") + e.what());
  }
}

Json invariants_to_json(const InvariantReport& r) {
  Json j;
  j["det"] = r.determinant;
  j["alexander"] = {{"coeffs", r.alexander.coeffs()}, {"min_exp", r.alexander.min_exp()}};
  j["square_root"] = r.square_root ? Json(*r.square_root) : Json(nullptr);
  return j;
}

InvariantReport invariants_from_json(const Json& j) {
  const auto& a = j.at("alexander");
  return invariant_report(LaurentPolynomial(a.at("coeffs").get<std::vector<std::int64_t>>(), a.at("min_exp").get<int>()));
}

Json profile_to_json(const DeformationProfile& p) {
  Json j;
  j["params"] = params_to_json(p.params);
  j["classification"] = std::string(to_string(p.classification));
  j["grid_classification"] = std::string(to_string(p.grid_classification));
  j["grid_size"] = p.grid.size();
  j["crossings"] = p.combinatorics.size();
  j["distinct_curves"] = p.distinct_curves;
  j["limit_signs"] = p.limit_signs;
  j["sign_changes"] = p.sign_changes;
  Json comb = Json::array();
  for (const auto& c : p.combinatorics) comb.push_back({c.k, c.k_prime, c.l});
  j["combinatorics"] = comb;
  if (p.positively_enlaced) j["positively_enlaced"] = *p.positively_enlaced;
  return j;
}

Json decomposition_to_json(const SymmetricUnionDecomposition& d) {
  Json j;
  j["diagram"] = diagram_to_json(d.diagram);
  j["axis_crossings"] = d.axis_crossings;
  j["mirror_pairing"] = d.mirror_pairing;
  j["partial"] = diagram_to_json(d.partial);
  j["partial_origin"] = d.partial_origin;
  j["experimental"] = d.experimental;
  return j;
}

std::optional<std::string> reproducible_timestamp() {
  const char* epoch = std::getenv("SOURCE_DATE_EPOCH");
  if (!epoch || !*epoch) return std::nullopt;
  char* end = nullptr;
  const long long secs = std::strtoll(epoch, &end, 10);
  if (*end != '\0' || secs < 0) return std::nullopt;
  const std::time_t t = static_cast<std::time_t>(secs);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return std::string(buf);
}

namespace {

Json catalog_key(const Json& entry) { return {entry.at("params"), entry.value("stable_limit", false)}; }

}  // namespace

Json catalog_entry_to_json(const CatalogEntry& e) {
  Json j;
  j["params"] = params_to_json(e.params);
  j["stable_limit"] = e.stable_limit;
  j["invariants"] = invariants_to_json(e.invariants);
  j["stability"] = e.stability ? Json(std::string(to_string(*e.stability))) : Json(nullptr);
  j["tool_version"] = e.tool_version;
  if (e.timestamp) j["timestamp"] = *e.timestamp;
  return j;
}

bool append_catalog(const std::string& path, const CatalogEntry& e) {
  const Json entry = catalog_entry_to_json(e);
  const Json key = catalog_key(entry);
  std::vector<std::string> lines;
  bool replaced = false;
  {
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      Json old;
      try {
        old = Json::parse(line);
      } catch (const Json::exception&) {
        lines.push_back(line);
        continue;
      }
      if (!replaced && old.contains("params") && catalog_key(old) == key) {
        if (old == entry) return false;
        lines.push_back(entry.dump());
        replaced = true;
        continue;
      }
      lines.push_back(line);
    }
  }
  if (!replaced) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open catalog " + path);
    out << entry.dump() << '\n';
    return true;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write catalog " + tmp);
    for (const auto& l : lines) out << l << '\n';
  }
  std::filesystem::rename(tmp, path);
  return true;
}

}  // namespace billiard
