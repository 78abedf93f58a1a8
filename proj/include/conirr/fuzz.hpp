#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "conirr/analyzer.hpp"

namespace conirr {

struct FuzzBounds {
  Index max_dim = 3;         ///< ambient dimension n and column count m are drawn from 1..max_dim
  Index max_generators = 4;  ///< generator count drawn from 1..max_generators
};

struct FuzzOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 0;
  FuzzBounds bounds;
  unsigned jobs = 1;
  /// Replayed (with the oracle) before the random trials. Each needs a concrete B.
  std::vector<ProblemInstance> injected;
};

struct FuzzViolation {
  std::size_t trial = 0;  ///< position among injected + random trials
  std::string message;
};

struct FuzzStats {
  std::size_t trials = 0;
  std::map<Verdict, std::size_t> verdicts;
  std::size_t oracle_irreducible = 0;
  std::size_t oracle_reducible = 0;
  /// Inconclusive verdicts whose product the oracle nevertheless found irreducible.
  std::size_t inconclusive_but_irreducible = 0;
  std::vector<Verdict> injected_verdicts;
  std::vector<FuzzViolation> violations;
};

/// Thrown by fuzz_agreement when any trial disagrees with the oracle.
class FuzzSoundnessViolation : public std::logic_error {
 public:
  explicit FuzzSoundnessViolation(FuzzStats stats)
      : std::logic_error(std::to_string(stats.violations.size()) + " soundness violation(s); first: " +
                         stats.violations.front().message),
        stats_(std::move(stats)) {}
  const FuzzStats& stats() const { return stats_; }

 private:
  FuzzStats stats_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Seed of random trial `trial` in a run seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial);

/// One random trial: a pointed cone, A, a sign pattern whose whole Q0 class
/// yields quasipositive products, and a concrete B in that class. Bounds must
/// satisfy max_dim <= 4 and max_generators <= 6 (std::invalid_argument).
ProblemInstance random_instance(std::uint64_t seed, const FuzzBounds& bounds);

/// Differential check of the criterion against the face oracle. Deterministic
/// for a fixed seed regardless of `jobs`.
FuzzStats fuzz_agreement(const FuzzOptions& options);

}  // namespace conirr
