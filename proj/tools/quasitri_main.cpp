// quasitri: verification CLI for lattice gauge-transformation conditions on
// Poisson and quantum matrix groups. Loads catalog instances or JSON inputs,
// runs the named residual checks and emits deterministic reports.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "quasitri/catalog.hpp"
#include "quasitri/frt.hpp"
#include "quasitri/io.hpp"
#include "quasitri/poisson.hpp"
#include "quasitri/report.hpp"

namespace {

using namespace quasitri;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Options {
  std::string input;
  std::string catalog;
  double q = 2.0;
  double tolerance = kDefaultTol;
  int samples = 20;
  std::uint64_t seed = 0;
  std::string report = "text";
  std::string out;
};

std::string read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string inputs_digest(const std::string& check, const Options& opt) {
  std::ostringstream os;
  os << check << "|";
  if (!opt.input.empty())
    os << "file:" << read_file_bytes(opt.input);
  else
    os << "catalog:" << opt.catalog;
  os << "|q=" << format_double(opt.q) << "|tol=" << format_double(opt.tolerance)
     << "|samples=" << opt.samples << "|seed=" << opt.seed;
  return to_hex(fnv1a64(os.str()));
}

CheckReport make_report(const std::string& check, const Options& opt) {
  CheckReport report;
  report.check_name = check;
  report.inputs_digest = inputs_digest(check, opt);
  report.seed = opt.seed;
  report.tolerance = opt.tolerance;
  return report;
}

void require_source(const Options& opt) {
  if (opt.input.empty() && opt.catalog.empty())
    throw InputError("either --input or --catalog is required for this check");
  if (!opt.input.empty() && !opt.catalog.empty())
    throw InputError("--input and --catalog are mutually exclusive");
}

std::filesystem::path base_dir(const Options& opt) {
  return std::filesystem::path(opt.input).parent_path();
}

// ---- input resolution ------------------------------------------------------

struct TensorProblem {
  AlgebraPtr algebra;
  CoefTensor2 tensor;
};

TensorProblem load_tensor_problem(const Options& opt, const std::string& catalog_key) {
  require_source(opt);
  if (!opt.catalog.empty()) {
    const CatalogEntry entry = catalog_entry(opt.catalog);
    return {entry.algebra, entry.tensor(catalog_key)};
  }
  const json j = load_json_file(opt.input);
  if (!j.is_object()) throw InputError("input: expected an object with algebra and tensor");
  AlgebraPtr alg = resolve_algebra(j.at("algebra"), base_dir(opt));
  for (const char* key : {"tensor", "w", "s", "r"})
    if (j.contains(key)) return {alg, parse_tensor(j.at(key), alg)};
  throw InputError("input: no tensor found (expected key \"tensor\")");
}

TwoLinkSpec load_two_link(const Options& opt) {
  require_source(opt);
  if (!opt.catalog.empty()) {
    const CatalogEntry entry = catalog_entry(opt.catalog);
    const CoefTensor2& w = entry.tensor("w");
    return TwoLinkSpec::constant(entry.tensor("r"), w * cplx(-1.0, 0.0));
  }
  return parse_two_link_spec(load_json_file(opt.input), base_dir(opt));
}

CoefTensor2 load_r_tensor(const Options& opt, bool require_antisym) {
  require_source(opt);
  if (!opt.catalog.empty()) return catalog_entry(opt.catalog).tensor("r");
  const json j = load_json_file(opt.input);
  if (!j.is_object() || !j.contains("algebra") || !j.contains("r"))
    throw InputError("input: expected fields algebra, r");
  AlgebraPtr alg = resolve_algebra(j.at("algebra"), base_dir(opt));
  CoefTensor2 r = parse_tensor(j.at("r"), alg);
  if (require_antisym && !r.is_antisymmetric()) throw InputError("input: r must be antisymmetric");
  return r;
}

RMat load_rmat(const Options& opt, RConvention want) {
  require_source(opt);
  RMat r;
  if (!opt.catalog.empty()) {
    const CatalogEntry entry = catalog_entry(opt.catalog);
    if (!entry.rmatrix_family)
      throw InputError("catalog entry '" + opt.catalog + "' has no R-matrix family");
    Mat m = (*entry.rmatrix_family)(opt.q);
    Eigen::Index n = 1;
    while (n * n < m.rows()) ++n;
    r = RMat(n, std::move(m), RConvention::kPlain);
  } else {
    r = parse_rmat(load_json_file(opt.input));
  }
  if (r.convention == want) return r;
  return want == RConvention::kHat ? hat_from_plain(r) : plain_from_hat(r);
}

// ---- checks ----------------------------------------------------------------

CheckReport check_cybe(const Options& opt) {
  const TensorProblem p = load_tensor_problem(opt, "w");
  CheckReport report = make_report("cybe", opt);
  report.add_residual("cybe_max_coeff", cybe(p.tensor).max_abs_coeff());
  report.add_info("tensor_imag_max", p.tensor.max_imag_coeff());
  return report;
}

CheckReport check_invariance(const Options& opt) {
  const TensorProblem p = load_tensor_problem(opt, "s");
  CheckReport report = make_report("invariance", opt);
  report.add_residual("ad_invariance_residual", ad_invariance_residual(p.tensor));
  return report;
}

CheckReport check_jacobi(const Options& opt) {
  const TwoLinkSpec spec = load_two_link(opt);
  CheckReport report = make_report("jacobi", opt);
  report.add_residual("jacobi_residual", jacobi_residual(spec, opt.samples, opt.seed));
  return report;
}

CheckReport check_poisson_map(const Options& opt, const std::string& variant) {
  CheckReport report = make_report("poisson-map " + variant, opt);
  if (variant == "one-link") {
    const CoefTensor2 r = load_r_tensor(opt, /*require_antisym=*/true);
    report.add_residual("map_residual", one_link_residual(r, opt.samples, opt.seed));
  } else if (variant == "two-link") {
    const TwoLinkSpec spec = load_two_link(opt);
    const PhiCheckReport phi = phi_condition_check(spec, opt.samples, opt.seed, opt.tolerance);
    report.add_residual("cocycle_residual", phi.max_cocycle_residual);
    report.add_residual("map_residual", phi.max_map_residual);
  } else {
    const TwoLinkSpec spec = load_two_link(opt);
    report.add_residual("multiplication_residual",
                        multiplication_residual(spec, opt.samples, opt.seed));
  }
  return report;
}

CheckReport check_pushforward(const Options& opt) {
  const CoefTensor2 r = load_r_tensor(opt, /*require_antisym=*/false);
  CheckReport report = make_report("pushforward", opt);
  report.add_residual("pushforward_residual",
                      pushforward_formula_check(r, opt.samples, opt.seed));
  return report;
}

CheckReport check_ybe(const Options& opt) {
  const RMat r = load_rmat(opt, RConvention::kPlain);
  CheckReport report = make_report("ybe", opt);
  report.add_residual("qybe_residual", qybe_residual(r));
  return report;
}

CheckReport check_braiding(const Options& opt) {
  const RMat rhat = load_rmat(opt, RConvention::kHat);
  CheckReport report = make_report("braiding", opt);
  report.add_residual("braid_residual", braid_residual(rhat));
  return report;
}

CheckReport check_star(const Options& opt) {
  const RMat rhat = load_rmat(opt, RConvention::kHat);
  const StarReport star = star_report(rhat, opt.tolerance);
  CheckReport report = make_report("star", opt);
  report.add_residual("self_adjoint_residual", star.self_adjoint_residual);
  report.add_info("unitary_residual", star.unitary_residual);
  report.add_info("involutive_residual", star.involutive_residual);
  report.add_info("unitary", star.unitary ? 1.0 : 0.0);
  report.add_info("involutive", star.involutive ? 1.0 : 0.0);
  return report;
}

CheckReport check_semiclassical(const Options& opt) {
  if (opt.catalog != "su2-standard")
    throw InputError("check semiclassical requires --catalog su2-standard (the catalog family)");
  const CatalogEntry entry = catalog_entry(opt.catalog);
  const Su2SemiclassicalReference ref = su2_semiclassical_reference();
  const SemiclassicalResult got = semiclassical_w(*entry.rmatrix_family, entry.algebra);
  CheckReport report = make_report("semiclassical", opt);
  report.add_residual("first_order_vs_reference", max_abs(Mat(got.first_order - ref.first_order)));
  report.add_residual("r_vs_reference", max_abs(Mat(got.r.coeffs - ref.r.coeffs)));
  report.add_residual("s_vs_reference", max_abs(Mat(got.s.coeffs - ref.s.coeffs)));
  report.add_info("expansion_residual", got.expansion_residual);
  report.add_info("s_imag_max", got.s_imag_max);
  report.add_info("cybe_w_max_coeff", cybe(got.w).max_abs_coeff());
  return report;
}

CheckReport check_homomorphism(const Options& opt, ordered_json* certificates) {
  const RMat rhat = load_rmat(opt, RConvention::kHat);
  const HomomorphismResult res = homomorphism_residual(rhat, opt.tolerance);
  CheckReport report = make_report("homomorphism", opt);
  report.add_residual("homomorphism_residual", res.max_distance);
  report.add_info("braid_residual", res.braid_residual);
  if (certificates) {
    ordered_json all = ordered_json::array();
    for (std::size_t d = 0; d < res.defects.size(); ++d) {
      ordered_json one;
      one["defect"] = d;
      one["distance"] = res.defects[d].distance;
      ordered_json entries = ordered_json::array();
      for (const CertificateEntry& e : res.defects[d].certificate) {
        ordered_json je;
        je["family"] = e.rel_family == GenFamily::kV ? "v" : "w";
        je["relation"] = e.rel_index;
        je["left"] = to_string(e.left);
        je["right"] = to_string(e.right);
        je["coeff"] = ordered_json::array({e.coeff.real(), e.coeff.imag()});
        entries.push_back(std::move(je));
      }
      one["certificate"] = std::move(entries);
      all.push_back(std::move(one));
    }
    *certificates = std::move(all);
  }
  return report;
}

CheckReport check_consistency(const Options& opt) {
  const RMat rhat = load_rmat(opt, RConvention::kHat);
  CheckReport report = make_report("consistency", opt);
  report.add_residual("straightening_consistency", straightening_consistency(rhat));
  return report;
}

int emit_entry(const std::string& name, const Options& opt) {
  const CatalogEntry entry = catalog_entry(name);
  const ordered_json j = entry_to_json(entry, opt.q);
  if (!opt.out.empty()) {
    std::ofstream out(opt.out);
    if (!out) throw InputError("cannot write '" + opt.out + "'");
    out << j.dump(2) << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return kExitPass;
}

int deliver(const CheckReport& report, const Options& opt, const ordered_json* certificates) {
  std::string payload;
  if (opt.report == "json") {
    ordered_json j = report.to_json();
    if (certificates) j["certificates"] = *certificates;
    payload = j.dump(2) + "\n";
  } else {
    payload = report.to_text();
  }
  if (!opt.out.empty()) {
    std::ofstream out(opt.out);
    if (!out) throw InputError("cannot write '" + opt.out + "'");
    out << payload;
  } else {
    std::cout << payload;
  }
  return report.pass() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasitri: residual checks for gauge-compatible Poisson and quantum groups"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  Options opt;
  std::string emit_name;
  app.add_option("--input", opt.input, "JSON input file");
  app.add_option("--catalog", opt.catalog, "built-in instance (su2-standard, sl2-real)");
  app.add_option("--q", opt.q, "deformation parameter for catalog R-matrix families");
  app.add_option("--tolerance", opt.tolerance, "pass/fail tolerance on residuals");
  app.add_option("--samples", opt.samples, "number of random sample points")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "master RNG seed");
  app.add_option("--report", opt.report, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", opt.out, "write the report to a file instead of stdout");
  app.add_option("--emit", emit_name, "dump a catalog entry as JSON and exit");

  CLI::App* check = app.add_subcommand("check", "run a named check suite");
  check->require_subcommand(0, 1);
  check->fallthrough();

  std::string pm_variant;
  for (const char* name : {"cybe", "invariance", "jacobi", "poisson-map", "pushforward", "ybe",
                           "star", "semiclassical", "braiding", "homomorphism", "consistency"}) {
    CLI::App* sub = check->add_subcommand(name);
    sub->fallthrough();
    if (std::string(name) == "poisson-map") {
      sub->add_option("variant", pm_variant, "one-link | two-link | compose")
          ->required()
          ->check(CLI::IsMember({"one-link", "two-link", "compose"}));
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      app.exit(e);
      return kExitPass;
    }
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (!emit_name.empty()) return emit_entry(emit_name, opt);

    if (!check->parsed() || check->get_subcommands().empty()) {
      std::cerr << "error: expected a check subcommand (see --help)\n";
      return kExitInput;
    }
    const std::string which = check->get_subcommands().front()->get_name();

    ordered_json certificates;
    std::optional<CheckReport> report;
    if (which == "cybe") report = check_cybe(opt);
    else if (which == "invariance") report = check_invariance(opt);
    else if (which == "jacobi") report = check_jacobi(opt);
    else if (which == "poisson-map") report = check_poisson_map(opt, pm_variant);
    else if (which == "pushforward") report = check_pushforward(opt);
    else if (which == "ybe") report = check_ybe(opt);
    else if (which == "star") report = check_star(opt);
    else if (which == "semiclassical") report = check_semiclassical(opt);
    else if (which == "braiding") report = check_braiding(opt);
    else if (which == "homomorphism")
      report = check_homomorphism(opt, opt.report == "json" ? &certificates : nullptr);
    else if (which == "consistency") report = check_consistency(opt);
    else {
      std::cerr << "error: unknown check '" << which << "'\n";
      return kExitInput;
    }

    return deliver(*report, opt,
                   which == "homomorphism" && opt.report == "json" ? &certificates : nullptr);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NumericsError& e) {
    std::cerr << "numerics error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
