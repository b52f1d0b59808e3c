// ffsync: command-line front end for the finite-field synchronization library.
#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ffsync/admissibility.hpp"
#include "ffsync/dynamics.hpp"
#include "ffsync/error.hpp"
#include "ffsync/generators.hpp"
#include "ffsync/io.hpp"

namespace {

using namespace ffsync;

struct Options {
  // check / transform / simulate
  std::string e_path;
  std::string t_path;
  // gain / simulate
  std::string a_path;
  std::string b_path;
  std::string k_path;
  bool all_gains = false;
  // gen / enumerate / stats
  std::size_t n = 2;
  std::uint32_t p = 3;
  std::string method;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  bool dedup = false;
  bool strict_perm = false;
  std::size_t max_attempts = 1'000'000;
  std::string set;
  std::uint64_t budget = 10'000'000;
  bool count_only = false;
  bool approx = false;
  std::vector<std::string> sweep;
  std::optional<std::string> formula;
  // simulate
  std::string mode;
  std::string x0;
  std::optional<std::size_t> kmax;
  std::string out = "-";
};

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  auto number = [&](std::string_view s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw Error(Errc::InvalidArgument, "range must look like LO:HI, got '" + text + "'");
    }
    return v;
  };
  if (colon == std::string::npos) throw Error(Errc::InvalidArgument, "range must look like LO:HI, got '" + text + "'");
  const std::string_view view(text);
  return {number(view.substr(0, colon)), number(view.substr(colon + 1))};
}

int run_check(const Options& o) {
  std::cout << format_report(check_admissible(read_matrix_file(o.e_path)));
  return 0;
}

int run_gen(const Options& o) {
  static const std::map<std::string, GenMethod> methods{{"sar", GenMethod::Sar},
                                                        {"tf-upper", GenMethod::TfUpper},
                                                        {"tf-lower", GenMethod::TfLower},
                                                        {"stabilizer", GenMethod::Stabilizer}};
  GenConfig cfg;
  cfg.n = o.n;
  cfg.field = Field(o.p);
  cfg.seed = o.seed;
  cfg.max_attempts = o.max_attempts;
  cfg.method = methods.at(o.method);
  cfg.strict_permutation = o.strict_perm;

  Rng rng(o.seed);
  std::vector<Matrix> out;
  out.reserve(o.count);
  for (std::size_t i = 0; i < o.count; ++i) out.push_back(generate(cfg, rng));
  if (o.dedup) out = coset_representatives(out);
  std::cout << format_matrix_records(out);
  return 0;
}

int run_enumerate(const Options& o) {
  const auto sets = enumerate_sets(o.n, Field(o.p), o.budget);
  const std::map<std::string, const std::vector<Matrix>*> by_name{
      {"mrs", &sets.m_rs},         {"grs", &sets.g_rs},
      {"grs-nonperm", &sets.g_rs_nonperm}, {"urs", &sets.u_rs_upper},
      {"urs-lower", &sets.u_rs_lower},     {"perm", &sets.perms}};
  const auto& chosen = *by_name.at(o.set);
  if (!o.count_only) {
    std::cout << format_matrix_records(chosen);
    if (!chosen.empty()) std::cout << '\n';
  }
  std::cout << "count=" << chosen.size() << '\n';
  return 0;
}

int run_stats(const Options& o) {
  if (o.sweep.empty()) {
    std::cout << format_cardinalities(cardinalities(o.n, Field(o.p)), o.approx);
    return 0;
  }
  const auto [nmin, nmax] = parse_range(o.sweep[0]);
  const auto [pmin, pmax] = parse_range(o.sweep[1]);
  if (pmax >= (1ULL << 31)) throw Error(Errc::Unsupported, "prime range must stay below 2^31");
  std::optional<std::string_view> formula;
  if (o.formula) formula = *o.formula;
  std::cout << format_sweep(nmin, nmax, static_cast<std::uint32_t>(pmin),
                            static_cast<std::uint32_t>(pmax), formula, o.approx);
  return 0;
}

int run_transform(const Options& o) {
  std::cout << format_matrix(similar_transform(read_matrix_file(o.e_path), read_matrix_file(o.t_path)));
  return 0;
}

int run_gain(const Options& o) {
  const auto a = read_matrix_file(o.a_path);
  const auto b = read_matrix_file(o.b_path);
  const auto verdict = staircase(a, b).verdict;
  if (o.all_gains) {
    const auto gains = nilpotent_gains(a, b);
    std::cout << format_matrix_records(gains);
    if (!gains.empty()) std::cout << '\n';
    std::cout << "count=" << gains.size() << '\n' << format_verdict(verdict);
    return 0;
  }
  if (!verdict.stabilizable) {
    std::cout << format_verdict(verdict);
    throw Error(Errc::NotStabilizable, verdict.reason);
  }
  std::cout << format_matrix(stabilizing_gain(a, b)) << format_verdict(verdict);
  return 0;
}

std::string join(const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

int run_simulate(const Options& o) {
  const auto e = read_matrix_file(o.e_path);
  const auto x0 = parse_vector(o.x0, e.field());

  SimulationTrace trace;
  if (o.mode == "scalar") {
    trace = simulate_scalar(e, x0, o.kmax.value_or(e.rows() + 2));
  } else {
    if (o.a_path.empty() || o.b_path.empty()) {
      throw Error(Errc::InvalidArgument, "lti mode needs -A and -B");
    }
    AgentSystem sys{read_matrix_file(o.a_path), read_matrix_file(o.b_path), std::nullopt};
    sys.k = o.k_path.empty() ? stabilizing_gain(sys.a, sys.b) : read_matrix_file(o.k_path);
    trace = simulate_lti(e, sys, x0, o.kmax);
  }

  // Summary goes to stderr when the CSV occupies stdout.
  std::ostream* summary = &std::cout;
  if (o.out == "-") {
    write_trace_csv(std::cout, trace);
    summary = &std::cerr;
  } else {
    std::ofstream file(o.out);
    if (!file) throw Error(Errc::InvalidArgument, "cannot write " + o.out);
    write_trace_csv(file, trace);
  }
  *summary << "sync_step=" << (trace.sync_step ? std::to_string(*trace.sync_step) : "none") << '\n'
           << "alpha=" << (trace.alpha.empty() ? "none" : join(trace.alpha.back())) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact finite-field consensus and synchronization toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ffsync 0.1.0");
  Options o;

  auto* check = app.add_subcommand("check", "Admissibility report for a graph matrix");
  check->add_option("E", o.e_path, "Graph matrix file")->required()->check(CLI::ExistingFile);

  auto* gen = app.add_subcommand("gen", "Generate row-stochastic invertible transforms");
  gen->add_option("--method", o.method, "Generator")
      ->required()
      ->check(CLI::IsMember({"sar", "tf-upper", "tf-lower", "stabilizer"}));
  gen->add_option("--n", o.n, "Dimension")->required()->check(CLI::Range(1, 64));
  gen->add_option("--p", o.p, "Prime modulus")->required();
  gen->add_option("--count", o.count, "Number of matrices")->capture_default_str();
  gen->add_option("--seed", o.seed, "RNG seed")->required();
  gen->add_flag("--dedup-cosets", o.dedup, "Keep one representative per column-permutation coset");
  gen->add_flag("--strict-perm", o.strict_perm, "SAR: reject only permutation matrices");
  gen->add_option("--max-attempts", o.max_attempts, "SAR attempt budget per matrix")->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "Exhaustively list a matrix set");
  enumerate->add_option("--n", o.n, "Dimension")->required()->check(CLI::Range(1, 16));
  enumerate->add_option("--p", o.p, "Prime modulus")->required();
  enumerate->add_option("--set", o.set, "Set to list")
      ->required()
      ->check(CLI::IsMember({"mrs", "grs", "grs-nonperm", "urs", "urs-lower", "perm"}));
  enumerate->add_option("--budget", o.budget, "Maximum candidates")->capture_default_str();
  enumerate->add_flag("--count-only", o.count_only, "Print only the count");

  auto* stats = app.add_subcommand("stats", "Closed-form cardinalities");
  stats->add_option("--n", o.n, "Dimension")->check(CLI::Range(1, 4096));
  stats->add_option("--p", o.p, "Prime modulus");
  stats->add_flag("--approx", o.approx, "Also print delta as a decimal");
  stats->add_option("--sweep", o.sweep, "NMIN:NMAX PMIN:PMAX")->expected(2);
  stats->add_option("--formula", o.formula, "Restrict the sweep to one formula")
      ->check(CLI::IsMember({"m_all", "gl", "m_rs", "g_rs", "u_rs", "perms", "delta"}));

  auto* transform = app.add_subcommand("transform", "Similarity transform T^-1 E T");
  transform->add_option("-E", o.e_path, "Graph matrix file")->required()->check(CLI::ExistingFile);
  transform->add_option("-T", o.t_path, "Transform file")->required()->check(CLI::ExistingFile);

  auto* gain = app.add_subcommand("gain", "Deadbeat gain K with A - BK nilpotent");
  gain->add_option("-A", o.a_path, "State matrix file")->required()->check(CLI::ExistingFile);
  gain->add_option("-B", o.b_path, "Input matrix file")->required()->check(CLI::ExistingFile);
  gain->add_flag("--all", o.all_gains, "List every nilpotent-placing gain");

  auto* simulate = app.add_subcommand("simulate", "Iterate the network and emit a trace CSV");
  simulate->add_option("--mode", o.mode, "scalar or lti")
      ->required()
      ->check(CLI::IsMember({"scalar", "lti"}));
  simulate->add_option("-E", o.e_path, "Graph matrix file")->required()->check(CLI::ExistingFile);
  simulate->add_option("-A", o.a_path, "State matrix file")->check(CLI::ExistingFile);
  simulate->add_option("-B", o.b_path, "Input matrix file")->check(CLI::ExistingFile);
  simulate->add_option("-K", o.k_path, "Gain file (default: synthesized)")->check(CLI::ExistingFile);
  simulate->add_option("--x0", o.x0, "Initial stacked state, e.g. 1,2,2,1")->required();
  simulate->add_option("--kmax", o.kmax, "Last step (default N+2 scalar, N*n+2 lti)");
  simulate->add_option("--out", o.out, "Trace CSV path, '-' for stdout")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return run_check(o);
    if (*gen) return run_gen(o);
    if (*enumerate) return run_enumerate(o);
    if (*stats) return run_stats(o);
    if (*transform) return run_transform(o);
    if (*gain) return run_gain(o);
    if (*simulate) return run_simulate(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.token() << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << '\n';
    return 3;
  }
  return 1;
}
