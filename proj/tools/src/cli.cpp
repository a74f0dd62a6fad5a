#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "report.hpp"
#include "rsdensity/analytic.hpp"
#include "rsdensity/density.hpp"
#include "rsdensity/error.hpp"
#include "rsdensity/family_io.hpp"
#include "rsdensity/powersum.hpp"
#include "rsdensity/primes.hpp"
#include "rsdensity/ranksel.hpp"

namespace rsd::cli {

namespace {

struct Globals {
  std::string out_path;
  std::string format = "json";
  std::uint64_t seed = 0;
  int K = kDefaultTruncation;
};

struct Result {
  Document doc;
  bool assertion_ok = true;
  std::string raw;  // preformatted JSON text (family output), bypasses doc
};

// ---------------------------------------------------------------- parsing

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError(what + ": '" + s + "' is not a number");
  }
}

// "re,im" or "re".
Complex parse_complex(const std::string& s, const std::string& what) {
  const auto parts = split(s, ',');
  if (parts.size() == 1) return {parse_double(parts[0], what), 0.0};
  if (parts.size() == 2) return {parse_double(parts[0], what), parse_double(parts[1], what)};
  throw InputError(what + ": expected RE,IM");
}

std::vector<std::int64_t> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<std::int64_t> out;
  for (const auto& part : split(s, ',')) {
    try {
      std::size_t used = 0;
      const auto v = std::stoll(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError(what + ": '" + part + "' is not an integer");
    }
  }
  return out;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
}

Family load_valid_family(const std::string& path) {
  auto family = load_family(path);
  const auto violations = validate(family);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw InputError("invalid family '" + path + "': " + v.rep_id + " at " + v.place + ": " + v.detail + " (" +
                     std::to_string(violations.size()) + " violation(s); run `validate` for the full list)");
  }
  return family;
}

std::vector<Complex> load_list(const std::string& path) { return complex_list_from_json(read_text_file(path)); }

// Entry i of a flat list is the value at m = i + 1.
std::map<std::uint64_t, Complex> load_dirichlet(const std::string& path) {
  std::map<std::uint64_t, Complex> out;
  const auto values = load_list(path);
  for (std::size_t i = 0; i < values.size(); ++i) out[i + 1] = values[i];
  return out;
}

SmoothKernel make_kernel(const std::string& name, Complex exponent) {
  if (name == "gauss") return SmoothKernel::gauss_power(exponent);
  if (exponent.imag() != 0.0) throw InputError("sqrtexp kernel takes a real exponent B");
  return SmoothKernel::sqrt_exp_power(exponent.real());
}

// ---------------------------------------------------------------- output

void write_atomically(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw InputError("cannot write '" + tmp.string() + "'");
    f << text;
    if (!f.flush()) throw InputError("cannot write '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw InputError("cannot move output into '" + path + "': " + ec.message());
  }
}

std::string render(const Result& r, const std::string& format) {
  if (!r.raw.empty()) {
    if (format != "json") throw InputError("this subcommand only emits JSON");
    return r.raw;
  }
  if (format == "csv") {
    if (!r.doc.table) throw InputError("this subcommand has no CSV form");
    return r.doc.table->to_csv();
  }
  return r.doc.json.dump(2) + "\n";
}

// ---------------------------------------------------------------- commands

struct ValidateOpts {
  std::string family;
};

Result cmd_validate(const ValidateOpts& o) {
  const auto family = load_family(o.family);
  const auto violations = validate(family);
  return {violations_document(family, violations), violations.empty(), {}};
}

struct CoeffOpts {
  std::string family;
  std::uint64_t m = 1;
  std::string pair;
};

Result cmd_rs_coeff(const CoeffOpts& o, const Globals& g) {
  if (o.m < 1) throw InputError("--m must be >= 1");
  const auto family = load_valid_family(o.family);
  if (o.pair.empty()) return {matrix_document(family, rs_matrix(family, o.m, g.K)), true, {}};

  const auto ids = split(o.pair, ',');
  if (ids.size() != 2) throw InputError("--pair expects ID,ID");
  auto find = [&](const std::string& id) -> const Representation& {
    for (const auto& rep : family.reps)
      if (rep.id == id) return rep;
    throw InputError("no representation with id '" + id + "'");
  };
  const auto value = rs_coefficient(RSPair{find(ids[0]), find(ids[1])}, o.m, g.K);
  Document d;
  d.json["m"] = o.m;
  d.json["pair"] = Json::array({ids[0], ids[1]});
  d.json["coefficient"] = complex_json(value);
  d.table = Table{{"m", "a", "b", "coefficient"},
                  {{std::to_string(o.m), cell(ids[0]), cell(ids[1]), cell(value)}}};
  return {d, true, {}};
}

struct PsdOpts {
  std::string family;
  std::uint64_t prime = 2;
  int kmax = 6;
  double tol = 1e-9;
};

Result cmd_rs_psd(const PsdOpts& o, const Globals& g) {
  require_prime(o.prime);
  if (o.kmax < 0 || o.kmax > g.K) throw InputError("--kmax must lie in [0, K=" + std::to_string(g.K) + "]");
  if (!std::isfinite(o.tol)) throw InputError("--tol must be finite");
  const auto family = load_valid_family(o.family);
  const auto series = rs_family_series(family, o.prime, g.K);

  Document d;
  d.json["prime"] = o.prime;
  d.json["kmax"] = o.kmax;
  d.json["tol"] = o.tol;
  d.json["family_size"] = family.size();
  Json degrees = Json::array();
  Table t{{"k", "min_eigenvalue", "trace", "pass"}, {}};
  bool all = true;
  for (int k = 0; k <= o.kmax; ++k) {
    const auto r = psd_check(series, k, o.tol);
    all = all && r.pass;
    degrees.push_back(Json{{"k", k}, {"min_eigenvalue", r.min_eigenvalue}, {"trace", r.trace}, {"pass", r.pass}});
    t.rows.push_back({std::to_string(k), cell(r.min_eigenvalue), cell(r.trace), cell(r.pass)});
  }
  d.json["degrees"] = std::move(degrees);
  d.json["pass"] = all;
  d.table = std::move(t);
  return {d, all, {}};
}

struct LowerBoundOpts {
  std::string family;
  std::uint64_t prime = 2;
  int k = 1;
  std::string weights;
};

Result cmd_rs_lowerbound(const LowerBoundOpts& o, const Globals& g) {
  require_prime(o.prime);
  const auto family = load_valid_family(o.family);
  const auto w = load_list(o.weights);
  const auto r = explicit_lower_bound(family, w, o.prime, o.k, g.K);
  Document d;
  d.json["prime"] = o.prime;
  d.json["k"] = o.k;
  d.json["lhs"] = r.lhs;
  d.json["lhs_imag"] = r.lhs_imag;
  d.json["rhs"] = r.rhs;
  d.json["slack"] = r.slack;
  d.json["holds"] = r.holds();
  d.table = Table{{"prime", "k", "lhs", "lhs_imag", "rhs", "slack", "holds"},
                  {{std::to_string(o.prime), std::to_string(o.k), cell(r.lhs), cell(r.lhs_imag), cell(r.rhs),
                    cell(r.slack), cell(r.holds())}}};
  return {d, r.holds(), {}};
}

struct TripleSumOpts {
  std::string family;
  std::string u;
  std::string beta;
  std::string weights;
  double M = 1.0;
};

Result cmd_rs_triplesum(const TripleSumOpts& o, const Globals& g) {
  const auto family = load_valid_family(o.family);
  const auto u = load_dirichlet(o.u);
  const auto beta = load_list(o.beta);
  const auto F = family.size();
  ComplexMatrix w(F, 1.0);
  if (!o.weights.empty()) {
    const auto rows = complex_matrix_from_json(read_text_file(o.weights));
    if (rows.size() != F || rows.front().size() != F) {
      throw InputError("--weights must be a " + std::to_string(F) + "x" + std::to_string(F) + " matrix");
    }
    for (std::size_t i = 0; i < F; ++i)
      for (std::size_t j = 0; j < F; ++j) w(i, j) = rows[i][j];
  }
  const auto r = rs_triple_sum(family, w, u, beta, o.M, g.K);
  Document d;
  d.json["M"] = o.M;
  d.json["value"] = complex_json(r.value);
  d.json["reference_bound"] = r.reference_bound;
  d.table = Table{{"M", "value", "reference_bound"}, {{cell(o.M), cell(r.value), cell(r.reference_bound)}}};
  return {d, true, {}};
}

struct ExponentOpts {
  int n = 2;
  double theta = 0.25;
  std::string base = "total";
};

Result cmd_density_exponent(const ExponentOpts& o) {
  return {exponent_document(exponent_report(o.n, o.theta), o.base), true, {}};
}

struct CrossoverOpts {
  int n = 3;
};

Result cmd_density_crossover(const CrossoverOpts& o) {
  const double c = crossover_theta(o.n);
  Document d;
  d.json["n"] = o.n;
  d.json["crossover"] = c;
  d.json["exponent_at_crossover"] = exponent_lfn(o.n, c);
  d.json["pointwise_threshold"] = pointwise_threshold(o.n);
  d.table = Table{{"n", "crossover", "exponent_at_crossover", "pointwise_threshold"},
                  {{std::to_string(o.n), cell(c), cell(exponent_lfn(o.n, c)), cell(pointwise_threshold(o.n))}}};
  return {d, true, {}};
}

struct AmplifiedOpts {
  int n = 2;
  double theta = 0.25;
  double q = 1.0;
};

Result cmd_density_amplified(const AmplifiedOpts& o) {
  return {amplified_document(amplified_exponents(o.n, o.theta, o.q)), true, {}};
}

struct SimulateOpts {
  std::string family;
  bool finite = false;
  bool infty = false;
  std::uint64_t prime = 2;
  std::int64_t k0 = -1;
  std::int64_t ell = 1;
  double theta = 0.25;
  std::string weights;
};

Result cmd_density_simulate(const SimulateOpts& o, const Globals& g) {
  if (o.finite == o.infty) throw InputError("choose exactly one of --finite and --infty");
  const auto family = load_valid_family(o.family);
  ChainReport report;
  if (o.finite) {
    require_prime(o.prime);
    const auto k0 = o.k0 >= 0 ? o.k0 : select_k0(family, o.prime, g.K);
    const auto w = o.weights.empty() ? std::vector<Complex>(family.size(), 1.0) : load_list(o.weights);
    report = simulate_chain_finite(family, o.prime, k0, w, g.K);
  } else {
    report = simulate_chain_infty(family, o.ell, o.theta);
  }
  return {chain_document(report), report.ok, {}};
}

struct MellinOpts {
  std::string kernel = "gauss";
  std::string exponent = "0";
  std::string s;
};

Result cmd_analytic_mellin(const MellinOpts& o) {
  const auto kernel = make_kernel(o.kernel, parse_complex(o.exponent, "--exponent"));
  const auto s = parse_complex(o.s, "--s");
  const auto value = mellin_kernel(kernel, s);
  Document d;
  d.json["kernel"] = o.kernel;
  d.json["exponent"] = complex_json(kernel.exponent);
  d.json["s"] = complex_json(s);
  d.json["value"] = complex_json(value);
  d.table = Table{{"kernel", "exponent", "s", "value"},
                  {{o.kernel, cell(kernel.exponent), cell(s), cell(value)}}};
  return {d, true, {}};
}

struct SmoothSumOpts {
  std::string coeffs;
  double M = 1.0;
  std::string kernel = "gauss";
  std::string exponent = "0";
  bool direct = false;
  bool contour = false;
  ContourSpec spec;
};

Result cmd_analytic_smoothsum(const SmoothSumOpts& o) {
  if (o.direct == o.contour) throw InputError("choose exactly one of --direct and --contour");
  const auto kernel = make_kernel(o.kernel, parse_complex(o.exponent, "--exponent"));
  const auto coeffs = load_dirichlet(o.coeffs);
  Document d;
  d.json["M"] = o.M;
  d.json["kernel"] = o.kernel;
  d.json["exponent"] = complex_json(kernel.exponent);
  d.json["method"] = o.direct ? "direct" : "contour";
  if (o.direct) {
    const auto v = smooth_sum_direct(coeffs, o.M, kernel);
    d.json["value"] = complex_json(v);
    d.table = Table{{"M", "method", "value"}, {{cell(o.M), "direct", cell(v)}}};
  } else {
    const auto r = smooth_sum_contour_detailed(coeffs, o.M, kernel, o.spec);
    d.json["sigma"] = o.spec.sigma;
    d.json["T"] = o.spec.T;
    d.json["step"] = o.spec.step;
    d.json["value"] = complex_json(r.value);
    d.json["error_estimate"] = r.error_estimate;
    d.table = Table{{"M", "method", "value", "error_estimate"},
                    {{cell(o.M), "contour", cell(r.value), cell(r.error_estimate)}}};
  }
  return {d, true, {}};
}

struct TuranOpts {
  std::string z;
  std::int64_t M = 1;
  bool sweep = false;
  std::int64_t N = 1;
  std::int64_t trials = 1000;
  std::string m_range;
};

Result cmd_turan(const TuranOpts& o, const Globals& g) {
  if (o.sweep) {
    if (!o.z.empty()) throw InputError("--sweep and --z are exclusive");
    const auto range = o.m_range.empty() ? default_turan_m_range() : parse_int_list(o.m_range, "--M-range");
    return {sweep_document(turan_sweep(o.N, range, o.trials, g.seed)), true, {}};
  }
  if (o.z.empty()) throw InputError("need --z Z.json (or --sweep)");
  const PowerSumInstance inst{load_list(o.z), o.M};
  const auto best = turan_lhs(inst);
  const double ratio = turan_ratio(inst);
  Document d;
  d.json["M"] = inst.M;
  d.json["N"] = inst.N();
  d.json["k_star"] = best.k_star;
  d.json["value"] = best.value;
  d.json["ratio"] = ratio;
  d.table = Table{{"M", "N", "k_star", "value", "ratio"},
                  {{cell(inst.M), cell(inst.N()), cell(best.k_star), cell(best.value), cell(ratio)}}};
  return {d, true, {}};
}

struct SampleOpts {
  int n = 2;
  int size = 4;
  double theta = 0.25;
  std::string places;
  std::string ramified;
  std::string tempered;
};

std::vector<std::uint64_t> prime_list(const std::string& s, const std::string& what) {
  std::vector<std::uint64_t> out;
  if (s.empty()) return out;
  for (auto v : parse_int_list(s, what)) {
    if (v < 2) throw InputError(what + ": " + std::to_string(v) + " is not prime");
    out.push_back(static_cast<std::uint64_t>(v));
  }
  return out;
}

Result cmd_sample(const SampleOpts& o, const Globals& g) {
  SampleOptions opts;
  opts.n = o.n;
  opts.size = o.size;
  opts.theta_floor = o.theta;
  opts.seed = g.seed;
  if (!o.places.empty()) {
    for (const auto& part : split(o.places, ',')) {
      if (part == "inf") {
        opts.places.push_back(Place::infinity());
      } else {
        for (auto p : prime_list(part, "--places")) opts.places.push_back(Place::prime(p));
      }
    }
  }
  opts.ramified_primes = prime_list(o.ramified, "--ramified");
  opts.tempered_primes = prime_list(o.tempered, "--tempered");
  Result r;
  r.raw = family_to_json(sample_family(opts));
  return r;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Globals g;
  CLI::App app{"Rankin-Selberg coefficients, nonnegative-definite families and density-bound numerics"};
  app.name("rsdensity");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--out", g.out_path, "Write the result to this file (atomically) instead of stdout");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", g.seed, "Seed for every random draw (mt19937_64, see docs/file_formats.md)");
  app.add_option("--K", g.K, "Truncation degree of local power series in p^{-s}")->check(CLI::Range(1, 64));

  ValidateOpts validate_o;
  auto* validate_cmd = app.add_subcommand(
      "validate", "Check a family file: parameter counts, unitarity {mu} = {-conj mu}, Re mu < 1/2, segment data");
  validate_cmd->add_option("--family", validate_o.family, "Family JSON file")->required();

  auto* rs = app.add_subcommand("rs", "Rankin-Selberg L(s, pi x pi'~): coefficients and their quadratic forms");
  rs->require_subcommand(1);

  CoeffOpts coeff_o;
  auto* coeff_cmd = rs->add_subcommand(
      "coeff", "Dirichlet coefficients a_{pi_i x pi_j~}(m): the full family matrix or one pair");
  coeff_cmd->add_option("--family", coeff_o.family, "Family JSON file")->required();
  coeff_cmd->add_option("--m", coeff_o.m, "Dirichlet index m >= 1")->required();
  coeff_cmd->add_option("--pair", coeff_o.pair, "ID,ID: single coefficient for this ordered pair");

  PsdOpts psd_o;
  auto* psd_cmd = rs->add_subcommand(
      "psd", "Nonnegative definiteness of the coefficient matrices [a_{pi_i x pi_j~}(p^k)] for k = 0..kmax");
  psd_cmd->add_option("--family", psd_o.family, "Family JSON file")->required();
  psd_cmd->add_option("--prime", psd_o.prime, "Prime p")->required();
  psd_cmd->add_option("--kmax", psd_o.kmax, "Largest exponent k (<= K)")->required();
  psd_cmd->add_option("--tol", psd_o.tol, "Pass iff min eigenvalue >= -tol * max(1, trace); tol < 0 demands definiteness")->required();

  LowerBoundOpts lb_o;
  auto* lb_cmd = rs->add_subcommand(
      "lowerbound",
      "Prime-power lower bound sum w_i conj(w_j) a_{pi_i x pi_j~}(p^k) >= (1/k) |sum w_i P_k(pi_i)|^2");
  lb_cmd->add_option("--family", lb_o.family, "Family JSON file")->required();
  lb_cmd->add_option("--prime", lb_o.prime, "Prime p, unramified for every member")->required();
  lb_cmd->add_option("--k", lb_o.k, "Exponent k >= 1")->required();
  lb_cmd->add_option("--weights", lb_o.weights, "JSON list of [re, im] weights w_i")->required();

  TripleSumOpts ts_o;
  auto* ts_cmd = rs->add_subcommand(
      "triplesum", "Triple sum sum_{i,j} w_ij sum_m u_m a_{pi_i x pi_j~}(m) (M/m)^{beta_i + conj beta_j}");
  ts_cmd->add_option("--family", ts_o.family, "Family JSON file")->required();
  ts_cmd->add_option("--u", ts_o.u, "JSON list of [re, im]; entry i is u at m = i+1")->required();
  ts_cmd->add_option("--beta", ts_o.beta, "JSON list of [re, im], one beta per member")->required();
  ts_cmd->add_option("--M", ts_o.M, "Length M > 0")->required();
  ts_cmd->add_option("--weights", ts_o.weights, "JSON F x F matrix of [re, im] weights (default all ones)");

  auto* density = app.add_subcommand("density", "Exponents of density bounds and the lower-bound chains");
  density->require_subcommand(1);

  ExponentOpts exp_o;
  auto* exp_cmd = density->add_subcommand(
      "exponent",
      "Density exponents at theta: n(1-2theta)/(2theta), (1-2theta)/(4theta), n-1-4theta, n-4theta");
  exp_cmd->add_option("--n", exp_o.n, "Rank n >= 2")->required();
  exp_cmd->add_option("--theta", exp_o.theta, "theta in (0, 1/2)")->required();
  exp_cmd->add_option("--base", exp_o.base, "Primary exponent: total conductor or Rankin-Selberg conductor")
      ->check(CLI::IsMember({"total", "rs"}));

  CrossoverOpts cross_o;
  auto* cross_cmd = density->add_subcommand(
      "crossover", "Crossover theta* = (n - sqrt((n-2)n))/4 where n(1-2theta)/(2theta) = n - 4theta");
  cross_cmd->add_option("--n", cross_o.n, "Rank n >= 3")->required();

  AmplifiedOpts amp_o;
  auto* amp_cmd = density->add_subcommand(
      "amplified", "Exponents of (C_RS q^{n^2}) and (C_RS q^{n^2-1}) under amplification by twists of modulus q");
  amp_cmd->add_option("--n", amp_o.n, "Rank n >= 2")->required();
  amp_cmd->add_option("--theta", amp_o.theta, "theta in (0, 1/2)")->required();
  amp_cmd->add_option("--q", amp_o.q, "Twist modulus q >= 1")->required();

  SimulateOpts sim_o;
  auto* sim_cmd = density->add_subcommand(
      "simulate",
      "Lower-bound chain: S(p^k) over k0+1..k0+n at a prime, or the archimedean sum S >= ell^{2 theta}");
  sim_cmd->add_option("--family", sim_o.family, "Family JSON file")->required();
  auto* finite_flag = sim_cmd->add_flag("--finite", sim_o.finite, "Chain at a finite prime");
  auto* infty_flag = sim_cmd->add_flag("--infty", sim_o.infty, "Chain at the archimedean place");
  finite_flag->excludes(infty_flag);
  sim_cmd->add_option("--prime", sim_o.prime, "Prime p (--finite)");
  sim_cmd->add_option("--k0", sim_o.k0, "Window start k0 (--finite; default round(log_p(|F| sqrt(C_RS))))");
  sim_cmd->add_option("--weights", sim_o.weights, "JSON list of unit-modulus weights (--finite; default all ones)");
  sim_cmd->add_option("--ell", sim_o.ell, "Index ell >= 1 (--infty)");
  sim_cmd->add_option("--theta", sim_o.theta, "theta with every beta_pi >= theta (--infty)");

  auto* analytic = app.add_subcommand("analytic", "Gamma-factor numerics and Mellin transforms of smooth kernels");
  analytic->require_subcommand(1);

  MellinOpts mellin_o;
  auto* mellin_cmd = analytic->add_subcommand(
      "mellin", "Mellin transform Phi~(s): (1/2) Gamma((s+beta)/2) or 2 Gamma(2(s+B))");
  mellin_cmd->add_option("--kernel", mellin_o.kernel, "gauss: x^beta e^{-x^2}; sqrtexp: x^B e^{-sqrt x}")
      ->required()
      ->check(CLI::IsMember({"gauss", "sqrtexp"}));
  mellin_cmd->add_option("--exponent", mellin_o.exponent, "Kernel exponent RE,IM");
  mellin_cmd->add_option("--s", mellin_o.s, "Point s as RE,IM")->required();

  SmoothSumOpts ss_o;
  auto* ss_cmd = analytic->add_subcommand(
      "smoothsum", "Smoothed sum sum_m Phi(m/M) a(m), directly or by Mellin inversion on Re s = sigma");
  ss_cmd->add_option("--coeffs", ss_o.coeffs, "JSON list of [re, im]; entry i is a(m) at m = i+1")->required();
  ss_cmd->add_option("--M", ss_o.M, "Scale M > 0")->required();
  ss_cmd->add_option("--kernel", ss_o.kernel, "gauss or sqrtexp")->required()->check(
      CLI::IsMember({"gauss", "sqrtexp"}));
  ss_cmd->add_option("--exponent", ss_o.exponent, "Kernel exponent RE,IM");
  auto* direct_flag = ss_cmd->add_flag("--direct", ss_o.direct, "Direct summation");
  auto* contour_flag = ss_cmd->add_flag("--contour", ss_o.contour, "Trapezoid rule on the vertical line");
  direct_flag->excludes(contour_flag);
  ss_cmd->add_option("--sigma", ss_o.spec.sigma, "Line Re s = sigma (>= 2)");
  ss_cmd->add_option("--T", ss_o.spec.T, "Truncation height T");
  ss_cmd->add_option("--step", ss_o.spec.step, "Quadrature step (<= T/100)");

  TuranOpts turan_o;
  auto* turan_cmd = app.add_subcommand(
      "turan", "Turan power sums: max_{M<k<=M+N} |sum_j z_j^k| against M^{-N} max_j |z_j|^k");
  turan_cmd->add_option("--z", turan_o.z, "JSON list of [re, im] values z_j");
  turan_cmd->add_option("--M", turan_o.M, "Window offset M >= 1");
  turan_cmd->add_flag("--sweep", turan_o.sweep, "Random sweep; minimum ratio per (N, M)");
  turan_cmd->add_option("--N", turan_o.N, "Number of terms (--sweep)");
  turan_cmd->add_option("--trials", turan_o.trials, "Instances per M (--sweep)");
  turan_cmd->add_option("--M-range", turan_o.m_range, "Comma-separated M values (--sweep; default 1,2,4,...,64)");

  SampleOpts sample_o;
  auto* sample_cmd = app.add_subcommand(
      "sample", "Seeded synthetic family of unitary cuspidal data with max |Re mu| >= theta at chosen places");
  sample_cmd->add_option("--n", sample_o.n, "Rank n >= 2")->required();
  sample_cmd->add_option("--size", sample_o.size, "Family size |F| >= 1")->required();
  sample_cmd->add_option("--theta", sample_o.theta, "Floor for max |Re mu| at the chosen places");
  sample_cmd->add_option("--places", sample_o.places, "Comma-separated places: primes and/or inf");
  sample_cmd->add_option("--ramified", sample_o.ramified, "Comma-separated primes carrying segment data");
  sample_cmd->add_option("--tempered", sample_o.tempered, "Comma-separated primes with tempered Satake data");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    Result result;
    if (validate_cmd->parsed()) {
      result = cmd_validate(validate_o);
    } else if (coeff_cmd->parsed()) {
      result = cmd_rs_coeff(coeff_o, g);
    } else if (psd_cmd->parsed()) {
      result = cmd_rs_psd(psd_o, g);
    } else if (lb_cmd->parsed()) {
      result = cmd_rs_lowerbound(lb_o, g);
    } else if (ts_cmd->parsed()) {
      result = cmd_rs_triplesum(ts_o, g);
    } else if (exp_cmd->parsed()) {
      result = cmd_density_exponent(exp_o);
    } else if (cross_cmd->parsed()) {
      result = cmd_density_crossover(cross_o);
    } else if (amp_cmd->parsed()) {
      result = cmd_density_amplified(amp_o);
    } else if (sim_cmd->parsed()) {
      result = cmd_density_simulate(sim_o, g);
    } else if (mellin_cmd->parsed()) {
      result = cmd_analytic_mellin(mellin_o);
    } else if (ss_cmd->parsed()) {
      result = cmd_analytic_smoothsum(ss_o);
    } else if (turan_cmd->parsed()) {
      result = cmd_turan(turan_o, g);
    } else if (sample_cmd->parsed()) {
      result = cmd_sample(sample_o, g);
    } else {
      err << "no subcommand given\n";
      return kExitInput;
    }

    const auto text = render(result, g.format);
    if (g.out_path.empty()) {
      out << text;
      out.flush();
    } else {
      write_atomically(g.out_path, text);
    }
    if (validate_cmd->parsed() && !result.assertion_ok) return kExitInput;
    if (!result.assertion_ok) {
      err << "check failed beyond tolerance\n";
      return kExitAssertion;
    }
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace rsd::cli
