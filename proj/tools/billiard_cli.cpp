#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "billiard/deformation.hpp"
#include "billiard/errors.hpp"
#include "billiard/invariants.hpp"
#include "billiard/json_io.hpp"
#include "billiard/symunion.hpp"

using namespace billiard;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitInternal = 3;

struct CurveArgs {
  std::string geometry;
  int s = 0, n = 0, m = 0;
  std::string phase;
  double beta = 0.0;  // 0: default for the geometry
  bool stable = false;

  void add(CLI::App* cmd, bool with_geometry = true) {
    if (with_geometry) cmd->add_option("geometry", geometry, "cylinder | flat-torus | cube")->required();
    cmd->add_option("s", s, "strings / rotations")->required();
    cmd->add_option("n", n, "reflections, first transverse direction")->required();
    cmd->add_option("m", m, "reflections, height direction")->required();
    cmd->add_option("--phase", phase, "phase as p/q in [0,1)");
    cmd->add_option("--beta", beta, "cylinder slice angle in (0, 2pi]");
    cmd->add_flag("--stable", stable, "cylinder only: the beta -> 0+ limit diagram");
  }

  BilliardParams params() const {
    BilliardParams p;
    p.geometry = parse_geometry(geometry);
    p.s = s;
    p.n = n;
    p.m = m;
    if (!phase.empty()) p.phase = parse_rational(phase);
    if (p.geometry == Geometry::Cylinder) p.beta = beta > 0.0 ? beta : default_cylinder_beta(s, n);
    return p;
  }

  KnotDiagram diagram() const {
    const BilliardParams p = params();
    if (stable) {
      if (p.geometry != Geometry::Cylinder) throw ParameterError("--stable applies to cylinder knots only");
      return build_stable_diagram(s, n, m);
    }
    return build_diagram(p);
  }
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ParameterError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string pd_text(const KnotDiagram& d) {
  std::ostringstream out;
  out << "PD[";
  for (std::size_t i = 0; i < d.pd.size(); ++i) {
    const auto& x = d.pd[i];
    out << (i ? ", " : "") << "X[" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ']';
  }
  out << ']';
  return out.str();
}

std::string gauss_text(const KnotDiagram& d) {
  std::ostringstream out;
  for (std::size_t i = 0; i < d.gauss.size(); ++i) out << (i ? " " : "") << d.gauss[i];
  out << "\nsigns:";
  for (const auto& c : d.crossings) out << ' ' << (c.sign > 0 ? "+1" : "-1");
  return out.str();
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot open output file " + path);
  body(out);
}

// "a..b", "a-b" or "a"; b < a gives an empty range.
std::pair<int, int> parse_range(const std::string& text) {
  auto to_int = [&](const std::string& part) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      return v;
    } catch (const std::exception&) {
      throw ParameterError("malformed range '" + text + "' (expected a..b)");
    }
  };
  auto pos = text.find("..");
  std::size_t width = 2;
  if (pos == std::string::npos) {
    pos = text.find('-', 1);
    width = 1;
  }
  if (pos == std::string::npos) {
    const int v = to_int(text);
    return {v, v};
  }
  return {to_int(text.substr(0, pos)), to_int(text.substr(pos + width))};
}

struct CensusRow {
  int m = 0;
  DeformationProfile profile;
  std::optional<InvariantReport> invariants;
  std::string error;
};

int run_census(int s, int n, const std::string& range, int grid, int jobs, const std::string& catalog) {
  const auto [lo, hi] = parse_range(range);
  std::vector<CensusRow> rows;
  for (int m = lo; m <= hi; ++m) rows.push_back({m, {}, std::nullopt, {}});
  BilliardParams check;
  check.geometry = Geometry::Cylinder;
  check.s = s;
  check.n = n;
  check.m = 1;
  validate(check);

  const bool want_invariants = !catalog.empty();
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      auto& row = rows[i];
      try {
        row.profile = classify_stability(s, n, row.m, grid);
        if (want_invariants) {
          BilliardParams p = check;
          p.m = row.m;
          row.invariants = compute_invariants(build_diagram(p));
        }
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    }
  };
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(rows.size())));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::map<StabilityClass, std::vector<int>> lists;
  bool failed = false;
  std::cout << "m\tclass\tgrid_class\tdistinct_curves\tsign_changes_max\tlimit_zero\n";
  for (const auto& row : rows) {
    if (!row.error.empty()) {
      std::cout << row.m << "\terror\t" << row.error << '\n';
      failed = true;
      continue;
    }
    const auto& p = row.profile;
    const int max_changes = p.sign_changes.empty() ? 0 : *std::max_element(p.sign_changes.begin(), p.sign_changes.end());
    std::cout << row.m << '\t' << to_string(p.classification) << '\t' << to_string(p.grid_classification) << '\t'
              << p.distinct_curves << '\t' << max_changes << '\t' << (p.vanishes_at_limit() ? "yes" : "no") << '\n';
    lists[p.classification].push_back(row.m);
  }
  for (const auto& [cls, ms] : lists) {
    std::cout << "# " << to_string(cls) << ":";
    for (int m : ms) std::cout << ' ' << m;
    std::cout << '\n';
  }
  if (want_invariants) {
    for (const auto& row : rows) {
      if (!row.error.empty()) continue;
      CatalogEntry e;
      e.params = row.profile.params;
      e.params.phase.reset();
      e.invariants = *row.invariants;
      e.stability = row.profile.classification;
      e.timestamp = reproducible_timestamp();
      append_catalog(catalog, e);
    }
  }
  return failed ? kExitInternal : 0;
}

int report_error(const std::exception& e, int code) {
  std::cerr << "error: " << e.what() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Billiard knot diagrams, invariants and deformation analysis"};
  app.set_version_flag("--version", std::string(BILLIARD_VERSION));
  app.require_subcommand(1);

  std::string out_path, format;

  CurveArgs gen_args;
  auto* gen = app.add_subcommand("generate", "build a billiard knot diagram");
  gen_args.add(gen);
  gen->add_option("--format", format, "pd | gauss | json")->check(CLI::IsMember({"pd", "gauss", "json"}));
  gen->add_option("--out", out_path, "output file (default stdout)");

  CurveArgs inv_args;
  std::string diagram_file, catalog;
  auto* inv = app.add_subcommand("invariants", "determinant and Alexander polynomial");
  inv->add_option("geometry", inv_args.geometry, "cylinder | flat-torus | cube");
  inv->add_option("s", inv_args.s);
  inv->add_option("n", inv_args.n);
  inv->add_option("m", inv_args.m);
  inv->add_option("--phase", inv_args.phase, "phase as p/q in [0,1)");
  inv->add_option("--beta", inv_args.beta, "cylinder slice angle");
  inv->add_flag("--stable", inv_args.stable, "cylinder only: the beta -> 0+ limit diagram");
  inv->add_option("--diagram", diagram_file, "PD JSON file instead of curve parameters");
  inv->add_option("--catalog", catalog, "JSON-lines catalog to append to");
  inv->add_option("--out", out_path, "output file (default stdout)");

  int ds = 0, dn = 0, dm = 0, grid = kDefaultGridSize;
  std::string csv_path, svg_path;
  auto* deform = app.add_subcommand("deform", "deformation graph and stability of Z(s,n,m)");
  deform->add_option("s", ds)->required();
  deform->add_option("n", dn)->required();
  deform->add_option("m", dm)->required();
  deform->add_option("--grid", grid, "number of beta samples")->check(CLI::Range(2, 1 << 20));
  deform->add_option("--csv", csv_path, "write the deformation graph as CSV");
  deform->add_option("--svg", svg_path, "write the deformation graph as SVG");
  deform->add_option("--format", format, "json | csv | svg for --out / stdout")->check(CLI::IsMember({"json", "csv", "svg"}));
  deform->add_option("--out", out_path, "output file for --format");
  deform->add_option("--catalog", catalog, "JSON-lines catalog to append to");

  int cs = 0, cn = 0, jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string range;
  auto* census = app.add_subcommand("census", "stability classification for a range of m");
  census->add_option("s", cs)->required();
  census->add_option("n", cn)->required();
  census->add_option("m_range", range, "a..b")->required();
  census->add_option("--grid", grid, "number of beta samples")->check(CLI::Range(2, 1 << 20));
  census->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  census->add_option("--catalog", catalog, "JSON-lines catalog to append to");

  std::string family;
  int us = 0, un = 0, um = 0;
  auto* decompose = app.add_subcommand("decompose", "symmetric union structure of R(s,n,m) or T(2s,n,m)");
  decompose->add_option("family", family, "R | T")->required()->check(CLI::IsMember({"R", "T", "cube", "flat-torus"}));
  decompose->add_option("s", us, "s for R; the even string count for T")->required();
  decompose->add_option("n", un)->required();
  decompose->add_option("m", um)->required();
  decompose->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*gen) {
      const KnotDiagram d = gen_args.diagram();
      check_structure(d);
      Output out(out_path);
      if (format == "pd")
        out.stream() << pd_text(d) << '\n';
      else if (format == "gauss")
        out.stream() << gauss_text(d) << '\n';
      else
        out.stream() << diagram_to_json(d).dump(2) << '\n';
      return 0;
    }

    if (*inv) {
      KnotDiagram d;
      if (!diagram_file.empty()) {
        std::ifstream in(diagram_file);
        if (!in) throw ParameterError("cannot read " + diagram_file);
        Json j;
        try {
          j = Json::parse(in);
        } catch (const Json::exception& e) {
          throw ParameterError(std::string("malformed JSON: ") + e.what());
        }
        d = diagram_from_json(j);
      } else {
        if (inv_args.geometry.empty() || inv_args.s < 1)
          throw ParameterError("give curve parameters (geometry s n m) or --diagram FILE");
        d = inv_args.diagram();
      }
      const InvariantReport r = compute_invariants(d);
      Output out(out_path);
      out.stream() << invariants_to_json(r).dump() << '\n';
      if (!catalog.empty() && d.params) {
        CatalogEntry e;
        e.params = *d.params;
        e.stable_limit = d.stable_limit;
        e.invariants = r;
        e.timestamp = reproducible_timestamp();
        append_catalog(catalog, e);
      }
      return 0;
    }

    if (*deform) {
      const DeformationProfile p = deformation_graph(ds, dn, dm, grid);
      std::cout << to_string(p.classification) << '\n';
      std::cout << "crossings=" << p.combinatorics.size() << " distinct_curves=" << p.distinct_curves
                << " grid_class=" << to_string(p.grid_classification)
                << " limit_zero=" << (p.vanishes_at_limit() ? "yes" : "no");
      if (p.positively_enlaced) std::cout << " enlaced=" << (*p.positively_enlaced ? "positive" : "negative");
      std::cout << '\n';
      if (!csv_path.empty()) write_file(csv_path, [&](std::ostream& o) { write_deformation_csv(p, o); });
      if (!svg_path.empty()) write_file(svg_path, [&](std::ostream& o) { write_deformation_svg(p, o); });
      if (!format.empty() || !out_path.empty()) {
        Output out(out_path);
        if (format == "csv")
          write_deformation_csv(p, out.stream());
        else if (format == "svg")
          write_deformation_svg(p, out.stream());
        else
          out.stream() << profile_to_json(p).dump(2) << '\n';
      }
      if (!catalog.empty()) {
        CatalogEntry e;
        e.params = p.params;
        e.params.phase.reset();
        e.invariants = compute_invariants(build_diagram(e.params));
        e.stability = p.classification;
        e.timestamp = reproducible_timestamp();
        append_catalog(catalog, e);
      }
      return 0;
    }

    if (*census) return run_census(cs, cn, range, grid, jobs, catalog);

    if (*decompose) {
      const bool is_r = family == "R" || family == "cube";
      const SymmetricUnionDecomposition u = is_r ? decompose_R(us, un, um) : decompose_T(us, un, um);
      Json j = decomposition_to_json(u);
      const std::int64_t det = determinant(u.diagram);
      const std::int64_t partial_det = determinant(u.partial);
      j["det"] = det;
      j["partial_det"] = partial_det;
      j["det_is_partial_square"] = det == partial_det * partial_det;
      j["partial_alexander"] = alexander_polynomial(u.partial).to_string();
      Output out(out_path);
      out.stream() << j.dump(2) << '\n';
      return 0;
    }
  } catch (const ParameterError& e) {
    return report_error(e, kExitInvalid);
  } catch (const DomainError& e) {
    return report_error(e, kExitInvalid);
  } catch (const NoValidPhaseError& e) {
    return report_error(e, kExitInvalid);
  } catch (const UnsupportedLinkError& e) {
    return report_error(e, kExitInvalid);
  } catch (const std::exception& e) {
    return report_error(e, kExitInternal);
  }
  return 0;
}
