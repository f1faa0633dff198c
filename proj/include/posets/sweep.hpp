#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "posets/poset.hpp"

namespace posets {
namespace sweep {

/// Serial is the reference path; Parallel shards the enumeration across
/// OpenMP threads and must produce the same report.
enum class ExecMode { Serial, Parallel };

struct SweepReport {
  std::string check;
  int max_n = 0;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::string first_violation;  // deterministic: smallest enumeration index
  double seconds = 0.0;

  bool passed() const { return violations == 0; }
};

/// A kernel inspects one poset and reports a violation message, or nothing.
/// Thrown exceptions are recorded as violations.
using Kernel = std::function<std::optional<std::string>(const Poset&)>;

/// Runs `kernel` on every labeled poset with 0 <= size <= max_n. The
/// parallel path shards over the size-(n-1) parents of each size-n
/// generation and merges results by enumeration index, so both modes return
/// identical reports.
SweepReport run_poset_sweep(const std::string& name, int max_n, ExecMode mode, int jobs,
                            const Kernel& kernel);

// The acceptance campaigns.
SweepReport ali_equivalence_sweep(int max_n, ExecMode mode, int jobs = 0);
SweepReport nacli_equivalence_sweep(int max_n, ExecMode mode, int jobs = 0);
SweepReport ali_behavior_sweep(int max_n, ExecMode mode, int jobs = 0);
SweepReport nacli_behavior_sweep(int max_n, ExecMode mode, int jobs = 0);

/// Lift-based counterexample fixtures: each leg builds an adversarial host
/// for one obstruction and asks the oracle to certify that the stronger
/// embedding kind is gone while the weaker one survives.
struct FixtureReport {
  std::string name;
  bool pass = false;
  std::string detail;
};
std::vector<FixtureReport> fixture_checks();

/// Enumeration counts against the pinned labeled-poset numbers.
SweepReport count_check(int max_n);

struct ComplexityReport {
  double median_small_ms = 0.0;
  double median_large_ms = 0.0;
  double ratio = 0.0;
  bool pass = false;
};
/// Times find_based21 on random hosts of 256 and 512 elements; the median
/// ratio must stay within the cubic envelope (8) plus slack.
ComplexityReport complexity_check(int seeds = 20);

/// Random inverse-duality spot checks on the automaton attributes and the
/// ended finders.
SweepReport duality_check(int count, int max_n, std::uint64_t seed, ExecMode mode,
                          int jobs = 0);

/// Deterministic random poset: a hidden linear order plus Bernoulli edges,
/// transitively closed. `density` < 0 draws a density from the seed.
Poset random_poset(int n, std::uint64_t seed, double density = -1.0);

}  // namespace sweep
}  // namespace posets
