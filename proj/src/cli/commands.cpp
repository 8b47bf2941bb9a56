#include "zgap/cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "zgap/cli/report.hpp"
#include "zgap/errors.hpp"
#include "zgap/exact/big_rational.hpp"
#include "zgap/exact/sparse_poly.hpp"
#include "zgap/field/quad_field.hpp"
#include "zgap/functional/amplifier.hpp"
#include "zgap/functional/gap_functional.hpp"
#include "zgap/functional/shifted.hpp"
#include "zgap/mc/mc_oracle.hpp"
#include "zgap/mc/rng.hpp"
#include "zgap/opt/optimize.hpp"

#ifndef ZGAP_VERSION
#define ZGAP_VERSION "0.0.0"
#endif

namespace zgap::cli {
namespace {

using functional::AmplifierConfig;
using functional::GapFunctional;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raw flag values shared by all commands. Each command registers the subset
/// it accepts, so anything else is rejected by the parser.
struct Flags {
  std::string theta = "1/4";
  unsigned r = 1;
  std::optional<unsigned> degree;
  std::string coeffs;
  double nu = functional::kReferenceNu;
  std::optional<double> kappa;
  std::string nu_range = "0,4";
  double nu_tol = 1e-8;
  double nu_step = opt::kNuGridStep;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = mc::kDefaultSeed;
  double fd_step = 1e-2;
  long discriminant = 0;
  long prime_cut = 100000;
  std::string euler = "second";
  double height = 1e6;
  unsigned k = 1;
  std::string thetas = "0,1/8,1/4";
  std::string rs = "1";
  std::string degrees = "0,1,2,3,4";
  std::string format;
  std::string out;
  unsigned threads = 1;
  std::string config;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto a = item.find_first_not_of(" \t");
    const auto b = item.find_last_not_of(" \t");
    if (a == std::string::npos) throw UsageError("empty entry in list '" + text + "'");
    items.push_back(item.substr(a, b - a + 1));
  }
  if (items.empty()) throw UsageError("empty list");
  return items;
}

double parse_double(const std::string& text) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || !std::isfinite(v)) {
    throw UsageError("not a finite number: '" + text + "'");
  }
  return v;
}

unsigned parse_unsigned(const std::string& text) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || text.front() == '-' || v > 1000) {
    throw UsageError("not a small non-negative integer: '" + text + "'");
  }
  return static_cast<unsigned>(v);
}

BigRational parse_theta(const std::string& text) {
  BigRational theta;
  try {
    theta = parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("theta must be an exact rational p/q, got '" + text + "'");
  }
  if (theta < 0 || theta > BigRational(1, 4)) throw UsageError("theta must be in [0, 1/4]");
  return theta;
}

std::vector<double> parse_coeffs(const std::string& text) {
  std::vector<double> b;
  for (const auto& item : split_list(text)) b.push_back(parse_double(item));
  return b;
}

opt::NuRange parse_nu_range(const std::string& text) {
  const auto items = split_list(text);
  if (items.size() != 2) throw UsageError("nu-range must be lo,hi");
  const opt::NuRange range{parse_double(items[0]), parse_double(items[1])};
  if (!(range.lo < range.hi)) throw UsageError("nu-range needs lo < hi");
  return range;
}

AmplifierConfig amplifier_from(const Flags& f, std::optional<unsigned> implied_degree = {}) {
  AmplifierConfig config;
  config.theta = parse_theta(f.theta);
  config.r = f.r;
  if (f.degree && implied_degree && *f.degree != *implied_degree) {
    throw UsageError("degree " + std::to_string(*f.degree) + " does not match " +
                     std::to_string(*implied_degree + 1) + " coefficients");
  }
  config.degree = f.degree.value_or(implied_degree.value_or(4));
  config.validate();
  return config;
}

/// Coefficients from --coeffs, or the reference vector.
std::vector<double> coefficients_from(const Flags& f) {
  auto b = f.coeffs.empty() ? functional::reference_coefficients() : parse_coeffs(f.coeffs);
  functional::require_nonzero(b);
  return b;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

ReportMeta make_meta(std::chrono::steady_clock::time_point start) {
  ReportMeta meta;
  meta.runtime_ms = elapsed_ms(start);
  meta.version = ZGAP_VERSION;
  return meta;
}

Format format_of(const Flags& f, Format fallback) {
  return f.format.empty() ? fallback : parse_format(f.format);
}

// Flag registration, one helper per flag so descriptions stay identical.

void add_theta(CLI::App* c, Flags& f) {
  c->add_option("--theta", f.theta, "amplifier length exponent; exact rational p/q in [0, 1/4]")
      ->capture_default_str();
}
void add_r(CLI::App* c, Flags& f) {
  c->add_option("--r", f.r, "divisor order r; integer in [1, 4]")
      ->check(CLI::Range(1u, 4u))
      ->capture_default_str();
}
void add_degree(CLI::App* c, Flags& f) {
  c->add_option("--degree", f.degree, "degree d of P; integer in [0, 12]")
      ->check(CLI::Range(0u, 12u));
}
void add_coeffs(CLI::App* c, Flags& f) {
  c->add_option("--coeffs", f.coeffs,
                "coefficients b0,...,bd of P; comma list of reals (default: reference P)");
}
void add_nu(CLI::App* c, Flags& f) {
  c->add_option("--nu", f.nu, "shift parameter nu; real")->capture_default_str();
}
void add_nu_range(CLI::App* c, Flags& f) {
  c->add_option("--nu-range", f.nu_range, "search interval for nu; lo,hi with lo < hi")
      ->capture_default_str();
}
void add_nu_tol(CLI::App* c, Flags& f) {
  c->add_option("--nu-tol", f.nu_tol, "golden-section tolerance in nu; real in [1e-12, 1e-1]")
      ->check(CLI::Range(1e-12, 1e-1))
      ->capture_default_str();
}
void add_samples(CLI::App* c, Flags& f) {
  c->add_option("--samples", f.samples, "Monte Carlo sample count; integer >= 1000")
      ->check(CLI::Range(std::uint64_t{mc::kMinSamples}, std::uint64_t{1} << 40))
      ->capture_default_str();
}
void add_seed(CLI::App* c, Flags& f) {
  c->add_option("--seed", f.seed, "random seed; unsigned 64-bit integer")->capture_default_str();
}
void add_threads(CLI::App* c, Flags& f) {
  c->add_option("--threads", f.threads, "worker threads; integer in [1, 256]")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
}
void add_output(CLI::App* c, Flags& f, const std::string& formats) {
  c->add_option("--format", f.format, "report format; one of " + formats);
  c->add_option("--out", f.out, "report path (default: standard output)");
}
void add_config(CLI::App* c, Flags& f) {
  c->add_option("--config", f.config,
                "flat key=value file of flag values; flags on the command line win");
}

// Commands.

int cmd_reproduce(const Flags& f, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const auto config = functional::reference_config();
  const auto functional = functional::assemble(config);
  ReportRecord rec{config.theta, config.r, config.degree, {}, {}};
  rec.result = functional::evaluate_h(functional, functional::reference_coefficients(),
                                      functional::kReferenceNu, functional::kReferenceKappa);
  const std::vector<ReportRecord> records{rec};
  emit_report(records, make_meta(start), format_of(f, Format::json), f.out, out);
  return kExitOk;
}

int cmd_optimize(const Flags& f, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const auto config = amplifier_from(f);
  const auto range = parse_nu_range(f.nu_range);
  const auto functional = functional::assemble(config);
  ReportRecord rec{config.theta, config.r, config.degree, {}, {}};
  rec.result = opt::optimize(functional, range, f.nu_tol);
  const std::vector<ReportRecord> records{rec};
  emit_report(records, make_meta(start), format_of(f, Format::json), f.out, out);
  return kExitOk;
}

int cmd_scan(const Flags& f, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<BigRational> thetas;
  for (const auto& t : split_list(f.thetas)) thetas.push_back(parse_theta(t));
  std::vector<unsigned> rs, degrees;
  for (const auto& r : split_list(f.rs)) {
    rs.push_back(parse_unsigned(r));
    if (rs.back() < 1 || rs.back() > 4) throw UsageError("r must be in [1, 4]");
  }
  for (const auto& d : split_list(f.degrees)) {
    degrees.push_back(parse_unsigned(d));
    if (degrees.back() > 12) throw UsageError("degree must be in [0, 12]");
  }
  const auto range = parse_nu_range(f.nu_range);
  auto progress = [&err](const opt::ScanRow& row, std::size_t completed, std::size_t total) {
    err << "[" << completed << "/" << total << "] theta=" << to_string(row.theta)
        << " r=" << row.r << " degree=" << row.degree;
    if (row.result) {
      err << " kappa=" << format_real(row.result->kappa);
    } else {
      err << " error: " << row.error;
    }
    err << "\n";
  };
  const auto rows = opt::scan(thetas, rs, degrees, range, f.nu_tol, f.threads, progress);
  std::vector<ReportRecord> records;
  for (const auto& row : rows) {
    records.push_back({row.theta, row.r, row.degree, row.result, row.error});
  }
  emit_report(records, make_meta(start), format_of(f, Format::csv), f.out, out);
  return kExitOk;
}

int cmd_eval(const Flags& f, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const auto b = coefficients_from(f);
  const auto config = amplifier_from(f, static_cast<unsigned>(b.size() - 1));
  const auto functional = functional::assemble(config);
  ReportRecord rec{config.theta, config.r, config.degree, {}, {}};
  if (f.kappa) {
    if (!(*f.kappa > 0)) throw UsageError("kappa must be positive");
    rec.result = functional::evaluate_h(functional, b, f.nu, *f.kappa);
  } else {
    const auto probe = functional::evaluate_h(functional, b, f.nu, 1.0);
    rec.result = functional::evaluate_h(functional, b, f.nu, probe.kappa);
    rec.result->kappa_input.reset();
    rec.result->h = 1.0;
  }
  const std::vector<ReportRecord> records{rec};
  emit_report(records, make_meta(start), format_of(f, Format::json), f.out, out);
  return kExitOk;
}

int cmd_curve(const Flags& f, std::ostream& out) {
  const auto config = amplifier_from(f);
  const auto range = parse_nu_range(f.nu_range);
  if (!(f.nu_step > 0)) throw UsageError("nu-step must be positive");
  const auto functional = functional::assemble(config);
  const auto points = opt::kappa_curve(functional, range, f.nu_step);
  std::ostringstream os;
  if (format_of(f, Format::csv) == Format::csv) {
    os << "nu,kappa\n";
    for (const auto& p : points) os << format_real(p.nu) << ',' << format_real(p.kappa) << '\n';
  } else {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& p : points) j.push_back({{"nu", json_real(p.nu)}, {"kappa", json_real(p.kappa)}});
    os << j.dump(2) << '\n';
  }
  write_output(os.str(), f.out, out);
  return kExitOk;
}

struct CheckLine {
  std::string name;
  double exact = 0.0;
  double estimate = 0.0;
  double std_error = 0.0;
  double deviation = 0.0;  // standard errors; relative residual for the operator
  double tolerance = 0.0;
  bool pass = false;
};

int cmd_mc_check(const Flags& f, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const auto b = coefficients_from(f);
  const auto config = amplifier_from(f, static_cast<unsigned>(b.size() - 1));
  if (!(f.fd_step >= 1e-3 && f.fd_step <= 1e-1)) throw UsageError("fd-step must be in [1e-3, 1e-1]");
  const auto functional = functional::assemble(config);
  const double exact_c0 = functional::quadratic_form(functional.c0, b);
  const double exact_c1 =
      functional::quadratic_form(functional.c1_matrix(from_double(f.nu)), b);

  std::vector<CheckLine> lines;
  auto mc_line = [&](std::string name, double exact, const mc::McEstimate& e) {
    const double dev = e.std_error > 0 ? std::abs(e.mean - exact) / e.std_error
                                       : (e.mean == exact ? 0.0 : INFINITY);
    lines.push_back({std::move(name), exact, e.mean, e.std_error, dev, 3.0, dev <= 3.0});
  };
  mc_line("c0", exact_c0, mc::mc_estimate(mc::C0Target{}, config, b, f.samples, f.seed, f.threads));
  mc_line("c1", exact_c1,
          mc::mc_estimate(mc::C1Target{f.nu}, config, b, f.samples, f.seed, f.threads));
  mc_line("shifted", exact_c0,
          functional::shifted_c(config, b, functional::Shifts{}, f.samples, f.seed, f.threads));
  const auto op = mc::operator_identity_check(config, b, f.nu, f.fd_step, f.samples, f.seed, f.threads);
  // Agreement: within the 1e-2 residual budget, or statistically consistent
  // when the sample count is too small to resolve that budget.
  const double op_z = op.fd_std_error > 0 ? std::abs(op.fd_value - op.exact_c1) / op.fd_std_error
                                          : INFINITY;
  lines.push_back({"operator", op.exact_c1, op.fd_value, op.fd_std_error, op.residual, 1e-2,
                   op.residual <= 1e-2 || op_z <= 3.0});

  bool all_pass = true;
  for (const auto& l : lines) all_pass = all_pass && l.pass;

  std::ostringstream os;
  if (format_of(f, Format::json) == Format::csv) {
    os << "check,exact,estimate,std_error,deviation,tolerance,pass\n";
    for (const auto& l : lines) {
      os << l.name << ',' << format_real(l.exact) << ',' << format_real(l.estimate) << ','
         << format_real(l.std_error) << ',' << format_real(l.deviation) << ','
         << format_real(l.tolerance) << ',' << (l.pass ? "true" : "false") << '\n';
    }
  } else {
    nlohmann::ordered_json j;
    j["theta"] = to_string(config.theta);
    j["r"] = config.r;
    j["degree"] = config.degree;
    j["coeffs"] = nlohmann::ordered_json::array();
    for (double v : b) j["coeffs"].push_back(json_real(v));
    j["nu"] = json_real(f.nu);
    j["fd_step"] = json_real(f.fd_step);
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& l : lines) {
      j["checks"].push_back({{"name", l.name},
                             {"exact", json_real(l.exact)},
                             {"estimate", json_real(l.estimate)},
                             {"std_error", json_real(l.std_error)},
                             {"deviation", json_real(l.deviation)},
                             {"tolerance", json_real(l.tolerance)},
                             {"pass", l.pass}});
    }
    j["operator_certified"] = op.certified;
    j["pass"] = all_pass;
    j["meta"] = {{"seed", f.seed},
                 {"samples", f.samples},
                 {"runtime_ms", json_real(elapsed_ms(start))},
                 {"version", ZGAP_VERSION}};
    os << j.dump(2) << '\n';
  }
  write_output(os.str(), f.out, out);
  return all_pass ? kExitOk : kExitOracle;
}

int cmd_field(const Flags& f, std::ostream& out, std::ostream& err) {
  const long D = f.discriminant;
  if (D == 0) throw UsageError("discriminant must be non-zero");
  if (f.prime_cut < 0) throw UsageError("prime-cut must be >= 0");
  if (!(f.height >= 2)) throw UsageError("height must be >= 2");
  field::EulerRenormalization scheme;
  if (f.euler == "first") {
    scheme = field::EulerRenormalization::first_order;
  } else if (f.euler == "second") {
    scheme = field::EulerRenormalization::second_order;
  } else {
    throw UsageError("euler must be first or second");
  }

  nlohmann::ordered_json j;
  j["discriminant"] = D;
  j["q"] = field::modulus_q(D);
  const bool fundamental = field::is_fundamental_discriminant(D);
  j["fundamental"] = fundamental;
  if (!fundamental) {
    err << "warning: " << D << " is not a fundamental discriminant; character data omitted\n";
  } else {
    const auto params = field::make_field(D);
    j["real"] = params.real;
    std::vector<int> chi;
    for (long n = 1; n <= params.modulus; ++n) chi.push_back(field::kronecker_chi(D, n));
    j["chi"] = chi;
    j["L1"] = json_real(field::dirichlet_L1(D));
    j["A_r"] = {{"r", f.r},
                {"prime_cut", f.prime_cut},
                {"euler", f.euler},
                {"value", json_real(field::arithmetic_factor(D, f.r, f.prime_cut, scheme))}};
  }
  const auto stats = field::density_stats(f.height, D);
  j["density"] = {{"height", json_real(f.height)},
                  {"log_height", json_real(stats.log_height)},
                  {"zero_count_main", json_real(stats.zero_count_main)},
                  {"avg_gap", json_real(stats.avg_gap)}};

  std::ostringstream os;
  if (format_of(f, Format::json) == Format::csv) {
    os << "key,value\n";
    for (const auto& [key, value] : j.items()) {
      if (value.is_object()) {
        for (const auto& [sub, v] : value.items()) {
          os << key << '.' << sub << ',' << (v.is_string() ? v.get<std::string>() : v.dump())
             << '\n';
        }
      } else if (value.is_array()) {
        os << key << ',';
        for (std::size_t i = 0; i < value.size(); ++i) os << (i ? ";" : "") << value[i].dump();
        os << '\n';
      } else {
        os << key << ',' << value.dump() << '\n';
      }
    }
  } else {
    os << j.dump(2) << '\n';
  }
  write_output(os.str(), f.out, out);
  return kExitOk;
}

int cmd_conjecture(const Flags& f, std::ostream& out) {
  const auto ratio = functional::hall_conjecture_ratio(f.k);
  std::ostringstream os;
  if (f.format == "json") {
    nlohmann::ordered_json j{{"k", f.k}, {"ratio", to_string(ratio)}, {"value", json_real(ratio.get_d())}};
    os << j.dump(2) << '\n';
  } else if (f.format.empty() || f.format == "text") {
    os << to_string(ratio) << '\n';
  } else {
    throw UsageError("format must be text or json");
  }
  write_output(os.str(), f.out, out);
  return kExitOk;
}

struct Cli {
  CLI::App app{"Zero-gap functional toolkit for Dedekind zeta-functions of quadratic fields",
               "zgap"};
  Flags flags;
  CLI::App* reproduce = nullptr;
  CLI::App* optimize = nullptr;
  CLI::App* scan = nullptr;
  CLI::App* eval = nullptr;
  CLI::App* curve = nullptr;
  CLI::App* mc_check = nullptr;
  CLI::App* field = nullptr;
  CLI::App* conjecture = nullptr;

  Cli() {
    app.set_version_flag("--version", ZGAP_VERSION);
    app.require_subcommand(1);
    app.get_formatter()->column_width(34);
    Flags& f = flags;

    reproduce = app.add_subcommand(
        "reproduce", "evaluate h for the reference amplifier at nu = 1.2773, kappa = 2.866");
    add_output(reproduce, f, "json|csv");
    add_config(reproduce, f);

    optimize = app.add_subcommand("optimize", "maximize kappa over P and nu");
    add_theta(optimize, f);
    add_r(optimize, f);
    add_degree(optimize, f);
    add_nu_range(optimize, f);
    add_nu_tol(optimize, f);
    add_output(optimize, f, "json|csv");
    add_config(optimize, f);

    scan = app.add_subcommand("scan", "optimize over a theta x r x degree grid");
    scan->add_option("--thetas", f.thetas, "comma list of exact rationals in [0, 1/4]")
        ->capture_default_str();
    scan->add_option("--rs", f.rs, "comma list of integers in [1, 4]")->capture_default_str();
    scan->add_option("--degrees", f.degrees, "comma list of integers in [0, 12]")
        ->capture_default_str();
    add_nu_range(scan, f);
    add_nu_tol(scan, f);
    add_threads(scan, f);
    add_output(scan, f, "csv|json");
    add_config(scan, f);

    eval = app.add_subcommand("eval", "evaluate c0, c1 and h for given P, nu, kappa");
    add_theta(eval, f);
    add_r(eval, f);
    add_degree(eval, f);
    add_coeffs(eval, f);
    add_nu(eval, f);
    eval->add_option("--kappa", f.kappa, "gap multiple kappa; real > 0 (default: implied kappa)");
    add_output(eval, f, "json|csv");
    add_config(eval, f);

    curve = app.add_subcommand("curve", "optimal kappa as a function of nu");
    add_theta(curve, f);
    add_r(curve, f);
    add_degree(curve, f);
    add_nu_range(curve, f);
    curve->add_option("--nu-step", f.nu_step, "grid step in nu; real > 0")->capture_default_str();
    add_output(curve, f, "csv|json");
    add_config(curve, f);

    mc_check = app.add_subcommand(
        "mc-check", "compare exact c0, c1, shifted c and the operator identity with Monte Carlo");
    add_theta(mc_check, f);
    add_r(mc_check, f);
    add_degree(mc_check, f);
    add_coeffs(mc_check, f);
    add_nu(mc_check, f);
    add_samples(mc_check, f);
    add_seed(mc_check, f);
    mc_check->add_option("--fd-step", f.fd_step, "finite-difference step; real in [1e-3, 1e-1]")
        ->capture_default_str();
    add_threads(mc_check, f);
    add_output(mc_check, f, "json|csv");
    add_config(mc_check, f);

    field = app.add_subcommand("field", "constants of the quadratic field of discriminant D");
    field->add_option("--discriminant", f.discriminant, "discriminant D; non-zero integer")
        ->required();
    add_r(field, f);
    field->add_option("--prime-cut", f.prime_cut, "Euler product cut; integer >= 0")
        ->capture_default_str();
    field->add_option("--euler", f.euler, "tail renormalization; first|second")
        ->capture_default_str();
    field->add_option("--height", f.height, "height T for density statistics; real >= 2")
        ->capture_default_str();
    add_output(field, f, "json|csv");
    add_config(field, f);

    conjecture = app.add_subcommand("conjecture", "conditional gap ratio (4k^2-1)/(4k^4)");
    conjecture->add_option("--k", f.k, "integer k >= 1")->check(CLI::Range(1u, 1000u))
        ->capture_default_str();
    conjecture->add_option("--format", f.format, "output format; text|json");
    conjecture->add_option("--out", f.out, "report path (default: standard output)");
    add_config(conjecture, f);
  }
};

/// Appends key=value pairs from a --config file for keys not already given.
std::vector<std::string> merge_config(std::span<const std::string> args) {
  std::vector<std::string> merged(args.begin(), args.end());
  std::string path;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    if (merged[i] == "--config" && i + 1 < merged.size()) path = merged[i + 1];
    if (merged[i].rfind("--config=", 0) == 0) path = merged[i].substr(9);
  }
  if (path.empty()) return merged;
  std::ifstream file(path);
  if (!file) throw UsageError("cannot read config file '" + path + "'");
  auto given = [&merged](const std::string& flag) {
    for (const auto& a : merged) {
      if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    }
    return false;
  };
  std::string line;
  std::vector<std::string> extra;
  int lineno = 0;
  while (std::getline(file, line)) {
    ++lineno;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || key == "config") {
      throw UsageError(path + ":" + std::to_string(lineno) + ": invalid key");
    }
    if (!given("--" + key)) {
      extra.push_back("--" + key);
      extra.push_back(value);
    }
  }
  merged.insert(merged.end(), extra.begin(), extra.end());
  return merged;
}

}  // namespace

std::string help_text() {
  Cli cli;
  return cli.app.help("", CLI::AppFormatMode::All);
}

int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Cli cli;
  try {
    const auto merged = merge_config(args);
    std::vector<const char*> argv{"zgap"};
    for (const auto& a : merged) argv.push_back(a.c_str());
    try {
      cli.app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      const auto subs = cli.app.get_subcommands();
      out << (subs.empty() ? help_text() : subs.front()->help());
      return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
      out << help_text();
      return kExitOk;
    } catch (const CLI::CallForVersion&) {
      out << ZGAP_VERSION << "\n";
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }

    const Flags& f = cli.flags;
    if (cli.reproduce->parsed()) return cmd_reproduce(f, out);
    if (cli.optimize->parsed()) return cmd_optimize(f, out);
    if (cli.scan->parsed()) return cmd_scan(f, out, err);
    if (cli.eval->parsed()) return cmd_eval(f, out);
    if (cli.curve->parsed()) return cmd_curve(f, out);
    if (cli.mc_check->parsed()) return cmd_mc_check(f, out);
    if (cli.field->parsed()) return cmd_field(f, out, err);
    if (cli.conjecture->parsed()) return cmd_conjecture(f, out);
    err << "error: no command given\n";
    return kExitUsage;
  } catch (const NumericalContractError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const exact::DegreeGuardError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OutputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace zgap::cli
