// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "ffsync/admissibility.hpp"
#include "ffsync/dynamics.hpp"
#include "ffsync/error.hpp"
#include "ffsync/generators.hpp"
#include "ffsync/io.hpp"
#include "oracle.hpp"

using namespace ffsync;

namespace {

// Wall-clock limits per criterion, in seconds.
constexpr double kLimitReplication = 1.0;
constexpr double kLimitFormulas = 120.0;
constexpr double kLimitConsensus = 60.0;
constexpr double kLimitSimilarity = 1.0;
constexpr double kLimitSynchronization = 5.0;
constexpr double kLimitGainOracle = 30.0;
constexpr double kLimitEquivalence = 10.0;
constexpr double kLimitSarRate = 5.0;
constexpr double kLimitSweep = 1.0;

// Statistical tolerance on the SAR acceptance frequency.
constexpr double kSarTolerance = 0.05;
constexpr int kSarAttempts = 10'000;

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = "failed: " + what;
    }
  }
};

using Key = std::vector<Residue>;
Key key(const Matrix& m) { return Key(m.entries().begin(), m.entries().end()); }

std::vector<Matrix> admissible_set(const Field& f, std::size_t n) {
  std::vector<Matrix> out;
  oracle::for_each_matrix(f, n, n, [&](const Matrix& e) {
    if (check_admissible(e).admissible) out.push_back(e);
  });
  return out;
}

Outcome replication() {
  Outcome o;
  const Field f3(3);
  const auto sets = enumerate_sets(2, f3);
  const auto card = cardinalities(2, f3);
  o.expect(sets.m_rs.size() == 9 && card.m_rs == 9, "|M^RS| = 9");
  o.expect(sets.g_rs.size() == 6 && card.g_rs == 6, "|G^RS| = 6");
  o.expect(sets.g_rs_nonperm.size() == 4, "4 non-permutation transforms");
  o.expect(coset_representatives(sets.g_rs_nonperm).size() == 2, "2 coset representatives");
  o.expect(card.delta == BigRational(4, 9), "delta = 4/9");

  GenConfig cfg;
  cfg.n = 2;
  cfg.field = f3;
  cfg.method = GenMethod::Sar;
  Rng rng(1);
  std::set<Key> drawn;
  for (int i = 0; i < 500; ++i) drawn.insert(key(generate(cfg, rng)));
  std::set<Key> targets;
  for (const auto& t : sets.g_rs_nonperm) targets.insert(key(t));
  o.expect(drawn == targets, "500 SAR draws cover exactly the 4 targets");

  cfg.method = GenMethod::TfUpper;
  o.expect(generate(cfg, rng) == Matrix::from_rows(f3, {{2, 2}, {0, 1}}), "upper TF = [2 2; 0 1]");
  cfg.method = GenMethod::TfLower;
  o.expect(generate(cfg, rng) == Matrix::from_rows(f3, {{1, 0}, {2, 2}}), "lower TF = [1 0; 2 2]");
  if (o.ok) o.detail = "9/6/4/2, delta=4/9, SAR covered 4 of 4, TF upper and lower exact";
  return o;
}

Outcome formulas() {
  Outcome o;
  for (auto [n, p] : {std::pair<std::size_t, std::uint32_t>{2, 2}, {2, 3}, {2, 5}, {3, 2}, {3, 3}}) {
    const Field f(p);
    const auto sets = enumerate_sets(n, f);
    const auto card = cardinalities(n, f);
    const std::string at = " at N=" + std::to_string(n) + " p=" + std::to_string(p);
    o.expect(card.gl == count_invertible(n, f), "|GL|" + at);
    o.expect(card.m_rs == sets.m_rs.size(), "|M^RS|" + at);
    o.expect(card.g_rs == sets.g_rs.size(), "|G^RS|" + at);
    o.expect(card.u_rs == sets.u_rs_upper.size() && card.u_rs == sets.u_rs_lower.size(), "|U^RS|" + at);
    o.expect(card.perms == sets.perms.size(), "permutation count" + at);
    o.expect(card.delta_numerator == sets.g_rs_nonperm.size(), "delta numerator" + at);
  }
  if (o.ok) o.detail = "5 (N,p) pairs, 6 counts each, exact";
  return o;
}

Outcome consensus() {
  Outcome o;
  std::size_t graphs = 0, states = 0;
  for (auto [n, p] : {std::pair<std::size_t, std::uint32_t>{2, 3}, {2, 5}, {3, 2}}) {
    const Field f(p);
    for (const auto& e : admissible_set(f, n)) {
      ++graphs;
      const auto rep = check_admissible(e);
      const Residue scale = f.inv(rep.p_dot_one);
      oracle::for_each_vector(f, n, [&](const Vector& x0) {
        ++states;
        const Residue alpha = f.mul(dot(f, *rep.left_eigvec, x0), scale);
        Vector x = x0;
        for (std::size_t k = 0; k < n; ++k) x = mul(e, x);
        o.expect(x == Vector(n, alpha), "x(N) = alpha*1");
        o.expect(mul(e, x) == x, "x(N+1) = x(N)");
      });
    }
  }
  if (o.ok) o.detail = std::to_string(graphs) + " admissible E, " + std::to_string(states) + " initial states";
  return o;
}

Outcome similarity() {
  Outcome o;
  const Field f3(3);
  const auto group = enumerate_sets(2, f3).g_rs;
  // Orbit of the seed under conjugation by G^RS.
  std::map<Key, Matrix> orbit;
  const auto seed = seed_admissible(2, f3);
  orbit.emplace(key(seed), seed);
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& [k, e] : std::map<Key, Matrix>(orbit))
      for (const auto& t : group) grew |= orbit.emplace(key(similar_transform(e, t)), similar_transform(e, t)).second;
  }
  std::size_t checks = 0;
  for (const auto& [k, e] : orbit) {
    for (const auto& t : group) {
      ++checks;
      o.expect(check_admissible(similar_transform(e, t)).admissible, "T^-1 E T admissible");
    }
  }
  const auto all = admissible_set(f3, 2);
  o.expect(orbit.size() == all.size(), "orbit equals every admissible 2x2 matrix");
  if (o.ok) {
    o.detail = "orbit size " + std::to_string(orbit.size()) + " (all admissible 2x2 over GF(3); 4 is unattainable), " +
               std::to_string(checks) + " transforms admissible";
  }
  return o;
}

Outcome synchronization() {
  Outcome o;
  const Field f3(3);
  const auto e = Matrix::from_rows(f3, {{0, 1}, {0, 1}});
  const auto a = Matrix::from_rows(f3, {{0, 1}, {1, 0}});
  const auto b = Matrix::from_rows(f3, {{0}, {1}});
  const auto k = stabilizing_gain(a, b);
  o.expect(k == Matrix::from_rows(f3, {{1, 0}}), "K = [1 0]");
  const auto closed = a - b * k;
  o.expect(is_zero(closed * closed), "(A - BK)^2 = 0");

  const AgentSystem sys{a, b, k};
  o.expect(verify_closed_loop_spectrum(e, sys), "closed-loop spectrum check");
  o.expect(char_poly(closed_loop(e, sys)).coeffs == Vector{1, 0, 2, 0, 0}, "P = (l^2 + 2) l^2");

  std::size_t worst = 0, runs = 0;
  oracle::for_each_vector(f3, 4, [&](const Vector& x0) {
    ++runs;
    const auto tr = simulate_lti(e, sys, x0);
    o.expect(tr.sync_step.has_value() && *tr.sync_step <= 4, "sync by k = N*n");
    o.expect(tr.alpha_recursion_ok, "alpha(k+1) = A alpha(k)");
    if (tr.sync_step) worst = std::max(worst, *tr.sync_step);
  });
  o.expect(worst <= 2, "observed bound k <= 2");
  if (o.ok) o.detail = std::to_string(runs) + " initial states, max sync step " + std::to_string(worst);
  return o;
}

Outcome gain_oracle() {
  Outcome o;
  std::size_t controllable = 0, singletons = 0;
  for (std::uint32_t p : {2U, 3U}) {
    const Field f(p);
    oracle::for_each_matrix(f, 2, 2, [&](const Matrix& a) {
      oracle::for_each_matrix(f, 2, 1, [&](const Matrix& b) {
        if (staircase(a, b).verdict.controllable_dim != 2) return;
        ++controllable;
        const auto brute = oracle::brute_gains(a, b);
        const auto k = stabilizing_gain(a, b);
        o.expect(std::find(brute.begin(), brute.end(), k) != brute.end(), "K in brute-force set");
        singletons += brute.size() == 1;
      });
    });
  }
  o.expect(singletons == controllable, "brute-force set is a singleton");
  if (o.ok) {
    o.detail = std::to_string(controllable) + " controllable pairs, " + std::to_string(singletons) +
               " with a unique nilpotent gain";
  }
  return o;
}

Outcome equivalence() {
  Outcome o;
  std::size_t pairs = 0, equal = 0;
  for (auto [n, p] : {std::pair<std::size_t, std::uint32_t>{2, 3}, {3, 2}}) {
    const auto g = enumerate_sets(n, Field(p)).g_rs;
    for (const auto& x : g)
      for (const auto& y : g) {
        ++pairs;
        const bool naive = perm_equiv_naive(x, y);
        o.expect(naive == perm_equiv_lex(x, y), "agreement on G^RS pairs");
        equal += naive;
      }
  }
  const Field f7(7);
  Rng rng(2718);
  for (int i = 0; i < 1000; ++i) {
    ++pairs;
    const auto x = oracle::random_matrix(f7, 5, 5, rng);
    // Every other pair is a column-permuted copy so both outcomes are exercised.
    const auto y = (i % 2) ? x * oracle::random_permutation(f7, 5, rng) : oracle::random_matrix(f7, 5, 5, rng);
    const bool naive = perm_equiv_naive(x, y);
    o.expect(naive == perm_equiv_lex(x, y), "agreement on random N=5 p=7 pairs");
    equal += naive;
  }
  if (o.ok) o.detail = std::to_string(pairs) + " pairs, " + std::to_string(equal) + " equivalent";
  return o;
}

Outcome sar_rate() {
  Outcome o;
  std::ostringstream msg;
  const char* sep = "";
  for (auto [n, p] : {std::pair<std::size_t, std::uint32_t>{2, 3}, {3, 3}}) {
    const Field f(p);
    const auto delta = cardinalities(n, f).delta;
    const double expected = static_cast<double>(delta);
    Rng rng(1000 + n);
    int hits = 0;
    for (int i = 0; i < kSarAttempts; ++i) hits += sar_attempt(n, f, rng).has_value();
    const double rate = static_cast<double>(hits) / kSarAttempts;
    o.expect(std::abs(rate - expected) <= kSarTolerance, "rate within tolerance at N=" + std::to_string(n));
    msg << sep << "(" << n << "," << p << ") " << rate << " vs " << format_rational(delta);
    sep = "; ";
  }
  if (o.ok) o.detail = msg.str();
  return o;
}

// Reads `N,p,value` rows back into exact rationals.
std::map<std::pair<std::size_t, std::uint32_t>, BigRational> read_sweep(const std::string& csv) {
  std::map<std::pair<std::size_t, std::uint32_t>, BigRational> out;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string n, p, value;
    std::getline(row, n, ',');
    std::getline(row, p, ',');
    std::getline(row, value);
    const auto slash = value.find('/');
    const BigRational v = slash == std::string::npos
                              ? BigRational(BigInt(value))
                              : BigRational(BigInt(value.substr(0, slash)), BigInt(value.substr(slash + 1)));
    out[{std::stoul(n), static_cast<std::uint32_t>(std::stoul(p))}] = v;
  }
  return out;
}

Outcome sweep() {
  Outcome o;
  const auto delta = read_sweep(format_sweep(2, 6, 2, 11, "delta"));
  const auto u_rs = read_sweep(format_sweep(2, 6, 2, 11, "u_rs"));
  const std::uint32_t primes[] = {2, 3, 5, 7, 11};
  o.expect(delta.size() == 25 && u_rs.size() == 25, "25 sweep points");
  std::size_t comparisons = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::size_t i = 0; i + 1 < 5; ++i) {
      const auto lo = std::pair{n, primes[i]};
      const auto hi = std::pair{n, primes[i + 1]};
      o.expect(delta.at(hi) > delta.at(lo), "delta increasing in p");
      o.expect(u_rs.at(hi) > u_rs.at(lo), "|U^RS| increasing in p");
      comparisons += 2;
    }
  }
  for (auto p : primes) {
    for (std::size_t n = 2; n < 6; ++n) {
      o.expect(u_rs.at({n + 1, p}) > u_rs.at({n, p}), "|U^RS| increasing in N");
      ++comparisons;
    }
  }
  if (o.ok) o.detail = std::to_string(comparisons) + " strict monotonicity comparisons";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "worked example N=2 p=3", kLimitReplication, replication},
      {2, "closed forms vs enumeration", kLimitFormulas, formulas},
      {3, "scalar consensus in N steps", kLimitConsensus, consensus},
      {4, "similarity preserves admissibility", kLimitSimilarity, similarity},
      {5, "LTI synchronization example", kLimitSynchronization, synchronization},
      {6, "deadbeat gain vs exhaustive search", kLimitGainOracle, gain_oracle},
      {7, "naive vs lexicographic equivalence", kLimitEquivalence, equivalence},
      {8, "SAR acceptance rate", kLimitSarRate, sar_rate},
      {9, "cardinality sweep monotonicity", kLimitSweep, sweep},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const Error& e) {
      out = {false, "error " + std::string(e.token()) + ": " + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit) out.expect(false, "exceeded time limit");
    failures += !out.ok;
    std::printf("%s %d %s (%.3fs, limit %.0fs): %s\n", out.ok ? "PASS" : "FAIL", c.id, c.name, secs, c.limit,
                out.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
