#include "conirr/fuzz.hpp"

#include <optional>
#include <random>
#include <stdexcept>
#include <thread>

#include "conirr/linalg.hpp"

namespace conirr {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
  return splitmix64(seed ^ splitmix64(trial));
}

namespace {


PolyhedralCone random_cone(Index n, const FuzzBounds& bounds, std::mt19937_64& rng) {
  std::uniform_int_distribution<Index> count(1, bounds.max_generators);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (;;) {
    RationalMatrix g(n, count(rng));
    for (Index j = 0; j < g.cols(); ++j)
      for (Index i = 0; i < n; ++i) g(i, j) = entry(rng);
    try {
      return PolyhedralCone(g);
    } catch (const EmptyGenerators&) {
    } catch (const UnpointedCone&) {
    }
  }
}

// Columns of A are either arbitrary small integer vectors or signed sums of
// extremal rays; the latter make quasipositive corners common.
RationalMatrix random_factor(const PolyhedralCone& cone, Index m, std::mt19937_64& rng) {
  const RationalMatrix& rays = cone.extremal_rays();
  const Index n = cone.ambient_dim();
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<Index> pick(0, rays.cols() - 1);
  std::bernoulli_distribution structured(0.5);
  std::bernoulli_distribution two(0.5);
  std::bernoulli_distribution negative(0.5);
  RationalMatrix a(n, m);
  for (Index j = 0; j < m; ++j) {
    if (structured(rng)) {
      RationalVector col = rays.col(pick(rng));
      if (two(rng)) col += rays.col(pick(rng));
      a.col(j) = negative(rng) ? RationalVector(-col) : col;
    } else {
      for (Index i = 0; i < n; ++i) a(i, j) = entry(rng);
    }
  }
  return a;
}

// Per-entry signs drawn from {-, 0, +} with weights (0.35, 0.3, 0.35)
// conditioned on the corner being quasipositive. The entries are independent,
// so this is the whole-pattern rejection sampler's conditional law.
SignPattern admissible_pattern(const RationalMatrix& a, const PolyhedralCone& cone,
                               std::mt19937_64& rng) {
  const Index m = a.cols();
  const Index n = a.rows();
  Eigen::MatrixXi s(m, n);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j) {
      const bool plus = is_K_quasipositive(corner_product(a, {i, j, 1}), cone).has_value();
      const bool minus = is_K_quasipositive(corner_product(a, {i, j, -1}), cone).has_value();
      const double wp = plus ? 0.35 : 0.0;
      const double wm = minus ? 0.35 : 0.0;
      const double x = u(rng) * (wp + wm + 0.3);
      s(i, j) = x < wp ? 1 : x < wp + wm ? -1 : 0;
    }
  return SignPattern(std::move(s));
}

struct TrialOutcome {
  std::optional<Verdict> verdict;
  std::optional<bool> oracle_irreducible;
  std::optional<std::string> violation;
};

TrialOutcome run_trial(const ProblemInstance& inst) {
  TrialOutcome out;
  try {
    const AnalysisReport r = analyze(inst, {.run_oracle = true});
    out.verdict = r.verdict;
    if (r.oracle) out.oracle_irreducible = r.oracle->irreducible;
  } catch (const SoundnessViolation& e) {
    out.verdict = e.report().verdict;
    if (e.report().oracle) out.oracle_irreducible = e.report().oracle->irreducible;
    out.violation = e.what();
  }
  return out;
}

}  // namespace

ProblemInstance random_instance(std::uint64_t seed, const FuzzBounds& bounds) {
  if (bounds.max_dim < 1 || bounds.max_dim > 4 || bounds.max_generators < 1 || bounds.max_generators > 6)
    throw std::invalid_argument("fuzz bounds must satisfy 1 <= max_dim <= 4 and 1 <= max_generators <= 6");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Index> dim(1, bounds.max_dim);
  const Index n = dim(rng);
  PolyhedralCone cone = random_cone(n, bounds, rng);
  const Index m = dim(rng);
  RationalMatrix a = random_factor(cone, m, rng);
  SignPattern btilde = admissible_pattern(a, cone, rng);
  RationalMatrix b = sample_member(btilde, QualitativeClass::Q0, rng, 0.2);
  return ProblemInstance{std::move(cone), std::move(a), std::move(btilde), std::move(b)};
}

FuzzStats fuzz_agreement(const FuzzOptions& options) {
  const std::size_t injected = options.injected.size();
  const std::size_t total = injected + options.trials;
  std::vector<TrialOutcome> outcomes(total);

  auto work = [&](std::size_t t) {
    if (t < injected) {
      outcomes[t] = run_trial(options.injected[t]);
      return;
    }
    const ProblemInstance inst = random_instance(trial_seed(options.seed, t - injected), options.bounds);
    if (!family_quasipositive(inst.a, inst.btilde, inst.cone).holds) {
      outcomes[t].violation = "generator produced a pattern with a non-quasipositive corner";
      return;
    }
    outcomes[t] = run_trial(inst);
  };

  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    for (std::size_t t = 0; t < total; ++t) work(t);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t t = w; t < total; t += jobs) work(t);
      });
    for (auto& th : pool) th.join();
  }

  FuzzStats stats;
  stats.trials = total;
  for (std::size_t t = 0; t < total; ++t) {
    const TrialOutcome& o = outcomes[t];
    if (o.verdict) {
      ++stats.verdicts[*o.verdict];
      if (t < injected) stats.injected_verdicts.push_back(*o.verdict);
    }
    if (o.oracle_irreducible) {
      ++(*o.oracle_irreducible ? stats.oracle_irreducible : stats.oracle_reducible);
      if (o.verdict == Verdict::Inconclusive && *o.oracle_irreducible)
        ++stats.inconclusive_but_irreducible;
    }
    if (o.violation) stats.violations.push_back({t, *o.violation});
  }
  if (!stats.violations.empty()) throw FuzzSoundnessViolation(std::move(stats));
  return stats;
}

}  // namespace conirr
