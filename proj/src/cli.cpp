#include "rde/cli.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "rde/report.hpp"
#include "rde/sweep.hpp"

namespace rde {

namespace {

struct Globals {
  std::string mode = "exact";
  double tol = 1e-10;
  std::string seed;
  std::string params;
};

struct SolveArgs {
  std::int64_t n = 100;
  std::string format = "csv";
};

struct StabilityArgs {
  std::string pq;
  std::vector<double> deltas{1e-1, 1e-2, 1e-3, 1e-4, 0.0};
  std::int64_t n_max = 10000;
};

struct BifurcateArgs {
  std::string a_min, a_max, step = "0.005", b;
  std::int64_t iters = 400;
  std::int64_t keep_from = 350;
  unsigned threads = 0;
  std::string csv_path, svg_path;
  std::optional<double> y_min, y_max;
};

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  const auto last = s.find_last_not_of(" \t\r");
  return first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
}

template <Scalar T>
std::pair<T, T> parse_pair(const std::string& text, const char* what) {
  const auto comma = text.find(',');
  if (text.empty()) throw Error(Errc::InvalidArgument, std::string("--") + what + " is required");
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
    throw Error(Errc::ParseError, std::string("--") + what + " expects two comma-separated values");
  return {parse_scalar<T>(trim(text.substr(0, comma))), parse_scalar<T>(trim(text.substr(comma + 1)))};
}

template <Scalar T>
Params<T> read_params(const Globals& g) {
  auto [a, b] = parse_pair<T>(g.params, "params");
  Params<T> p{a, b};
  validate_params(p);
  return p;
}

template <Scalar T>
SeedPair<T> read_seed(const Globals& g) {
  auto [x, y] = parse_pair<T>(g.seed, "seed");
  return {x, y};
}

template <Scalar T>
int cmd_solve(const Globals& g, const SolveArgs& s, std::ostream& out) {
  const Orbit<T> orbit = iterate(read_params<T>(g), read_seed<T>(g), s.n);
  if (s.format == "json")
    out << orbit_json(orbit).dump(2) << '\n';
  else
    write_orbit_csv(out, orbit);
  return 0;
}

template <Scalar T>
int cmd_classify(const Globals& g, std::ostream& out) {
  const Params<T> params = read_params<T>(g);
  const SeedPair<T> seed = read_seed<T>(g);
  const Behavior<T> behavior = classify(params, seed, ClassifyOptions{g.tol});
  out << classify_report(params, seed, behavior).dump(2) << '\n';
  return behavior.kind == BehaviorClass::NotAdmissible ? 1 : 0;
}

template <Scalar T>
int cmd_limit(const Globals& g, std::ostream& out) {
  const Params<T> params = read_params<T>(g);
  const SeedPair<T> seed = read_seed<T>(g);
  detail::require_admissible(params, seed);
  const LimitCertificate c = limit_periodic_point(to_float(params), to_float(seed), g.tol);
  Json j{{"p", c.point.p}, {"q", c.point.q}, {"err", c.point.error_bound}, {"certificate", to_json(c)}};
  out << j.dump(2) << '\n';
  return 0;
}

template <Scalar T>
int cmd_admissible(const Globals& g, std::ostream& out) {
  const AdmissibilityVerdict v = check_admissible(read_params<T>(g), read_seed<T>(g));
  out << to_string(v) << '\n';
  return v.admissible() ? 0 : 1;
}

template <Scalar T>
int cmd_stability(const Globals& g, const StabilityArgs& s, std::ostream& out) {
  const Params<T> params = read_params<T>(g);
  Json j{{"zero", to_json(zero_stability(params))}};

  std::optional<std::pair<T, T>> pq;
  if (!s.pq.empty()) {
    pq = parse_pair<T>(s.pq, "pq");
  } else if (!g.seed.empty()) {
    const SeedPair<T> seed = read_seed<T>(g);
    const Behavior<T> behavior = classify(params, seed, ClassifyOptions{g.tol});
    if (behavior.kind == BehaviorClass::ExactlyTwoPeriodic)
      pq = std::pair<T, T>{behavior.cycle[0], behavior.cycle[1]};
    else if (behavior.limit)
      // The certified limit is a float; check it against the float model.
      j["periodic"] = to_json(periodic_stability(to_float(params), behavior.limit->point.p,
                                                 behavior.limit->point.q, std::max(g.tol, 1e-9)));
  }
  if (pq) j["periodic"] = to_json(periodic_stability(params, pq->first, pq->second, std::max(g.tol, 1e-9)));
  if (j.contains("periodic")) {
    const double p = j["periodic"]["p"], q = j["periodic"]["q"];
    const double a = to_double(params.a);
    if (a != 0.0 && std::fabs(a) < 1.0)
      j["probe"] = to_json(periodic_stability_probe(to_float(params), p, q, s.deltas, s.n_max));
  }
  out << j.dump(2) << '\n';
  return 0;
}

int cmd_bifurcate(const Globals& g, const BifurcateArgs& s, std::ostream& out) {
  if (s.a_min.empty() || s.a_max.empty() || s.b.empty())
    throw Error(Errc::InvalidArgument, "bifurcate needs --a-min, --a-max and --b");
  SweepConfig cfg;
  cfg.a_min = parse_scalar<Rational>(s.a_min);
  cfg.a_max = parse_scalar<Rational>(s.a_max);
  cfg.step = parse_scalar<Rational>(s.step);
  cfg.b = parse_scalar<Rational>(s.b);
  cfg.seed = read_seed<Rational>(g);
  cfg.iters = s.iters;
  cfg.keep_from = s.keep_from;
  cfg.threads = s.threads;
  const auto samples = sweep(cfg);

  if (s.csv_path.empty() || s.csv_path == "-") {
    emit_csv(out, samples);
  } else {
    std::ofstream file(s.csv_path, std::ios::binary);
    if (!file) throw Error(Errc::IoError, "cannot open " + s.csv_path);
    emit_csv(file, samples);
  }
  if (!s.svg_path.empty()) {
    std::ofstream file(s.svg_path, std::ios::binary);
    if (!file) throw Error(Errc::IoError, "cannot open " + s.svg_path);
    PlotOptions opts;
    opts.y_min = s.y_min;
    opts.y_max = s.y_max;
    emit_svg(file, samples, opts);
  }
  return 0;
}

// key=value lines; '#' starts a comment. Keys name long flags.
std::vector<std::string> config_args(const std::string& path, const std::vector<std::string>& given) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot read config file " + path);
  std::set<std::string> present;
  for (const auto& arg : given) {
    if (arg.rfind("--", 0) == 0) present.insert(arg.substr(2, arg.find('=') - 2));
  }
  std::vector<std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(Errc::ParseError, path + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    if (key == "config") throw Error(Errc::ParseError, "config files cannot nest");
    if (!present.count(key)) out.push_back("--" + key + "=" + trim(line.substr(eq + 1)));
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals g;
  SolveArgs solve_args;
  StabilityArgs stab_args;
  BifurcateArgs bif;
  std::string config_path;

  CLI::App app{"Solver and classifier for x_{n+1} = x_{n-1} / (a + b x_n x_{n-1})", "rde"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--mode", g.mode, "Arithmetic: exact (rationals) or float (binary64)")
      ->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tol", g.tol, "Target error for limits")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Initial data x_-1,x_0");
  app.add_option("--params", g.params, "Coefficients a,b");
  app.add_option("--config", config_path, "key=value file mirroring the flags (flags win)");

  auto* solve = app.add_subcommand("solve", "Iterate the orbit (CSV or JSON)");
  solve->add_option("-n,--n", solve_args.n, "Last index")->check(CLI::NonNegativeNumber);
  solve->add_option("--format", solve_args.format)->check(CLI::IsMember({"csv", "json"}));

  auto* cls = app.add_subcommand("classify", "Asymptotic classification as a JSON report");
  auto* lim = app.add_subcommand("limit", "Certified 2-periodic limit (p, q, err) for 0 < |a| < 1");
  auto* adm = app.add_subcommand("admissible", "Admissibility verdict");

  auto* stab = app.add_subcommand("stability", "Zero stability and a periodic-point probe");
  stab->add_option("--pq", stab_args.pq, "Periodic point p,q (otherwise derived from --seed)");
  stab->add_option("--deltas", stab_args.deltas, "Perturbations for the probe")->delimiter(',');
  stab->add_option("--n-max", stab_args.n_max, "Probe orbit length")->check(CLI::PositiveNumber);

  auto* bifurcate = app.add_subcommand("bifurcate", "Parameter sweep over a (CSV, optional SVG)");
  bifurcate->add_option("--a-min", bif.a_min);
  bifurcate->add_option("--a-max", bif.a_max);
  bifurcate->add_option("--step", bif.step);
  bifurcate->add_option("--b", bif.b);
  bifurcate->add_option("--iters", bif.iters)->check(CLI::PositiveNumber);
  bifurcate->add_option("--keep-from", bif.keep_from)->check(CLI::NonNegativeNumber);
  bifurcate->add_option("--threads", bif.threads, "Worker threads (0 = all cores)");
  bifurcate->add_option("--out", bif.csv_path, "CSV path (default stdout)");
  bifurcate->add_option("--svg", bif.svg_path, "Also write an SVG plot");
  bifurcate->add_option("--y-min", bif.y_min, "Clip the plot below");
  bifurcate->add_option("--y-max", bif.y_max, "Clip the plot above");

  std::vector<std::string> argv = args;
  try {
    for (std::size_t i = 0; i < argv.size(); ++i) {
      if (argv[i] == "--config" && i + 1 < argv.size()) config_path = argv[i + 1];
      else if (argv[i].rfind("--config=", 0) == 0) config_path = argv[i].substr(9);
    }
    if (!config_path.empty()) {
      const auto extra = config_args(config_path, argv);
      argv.insert(argv.end(), extra.begin(), extra.end());
    }
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  const bool exact = g.mode == "exact";
  try {
    if (solve->parsed())
      return exact ? cmd_solve<Rational>(g, solve_args, out) : cmd_solve<double>(g, solve_args, out);
    if (cls->parsed()) return exact ? cmd_classify<Rational>(g, out) : cmd_classify<double>(g, out);
    if (lim->parsed()) return exact ? cmd_limit<Rational>(g, out) : cmd_limit<double>(g, out);
    if (adm->parsed()) return exact ? cmd_admissible<Rational>(g, out) : cmd_admissible<double>(g, out);
    if (stab->parsed())
      return exact ? cmd_stability<Rational>(g, stab_args, out) : cmd_stability<double>(g, stab_args, out);
    if (bifurcate->parsed()) return cmd_bifurcate(g, bif, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (!is_domain_error(e.code())) {
      err << '\n' << app.help();
      return 2;
    }
    return 1;
  }
  return 2;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace rde
