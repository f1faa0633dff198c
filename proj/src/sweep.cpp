#include "posets/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "posets/finders.hpp"
#include "posets/io.hpp"
#include "posets/levels.hpp"
#include "posets/oracle.hpp"
#include "posets/recognition.hpp"

namespace posets {
namespace sweep {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Violation {
  int n = 0;
  std::uint64_t base = 0;
  std::uint64_t child = 0;
  std::string message;
};

bool earlier(const Violation& a, const Violation& b) {
  if (a.n != b.n) return a.n < b.n;
  if (a.base != b.base) return a.base < b.base;
  return a.child < b.child;
}

std::string describe(const Poset& p, const std::string& message) {
  std::ostringstream out;
  out << message << " on poset {" << to_text(p) << "}";
  std::string s = out.str();
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

std::optional<std::string> run_kernel(const Kernel& kernel, const Poset& p) {
  try {
    return kernel(p);
  } catch (const std::exception& e) {
    return describe(p, std::string("exception: ") + e.what());
  }
}

}  // namespace

SweepReport run_poset_sweep(const std::string& name, int max_n, ExecMode mode, int jobs,
                            const Kernel& kernel) {
  SweepReport report;
  report.check = name;
  report.max_n = max_n;
  const auto start = Clock::now();

  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::optional<Violation> first;

  auto note = [&](std::optional<Violation>& slot, const Violation& v) {
    if (!slot || earlier(v, *slot)) slot = v;
  };

  for (int n = 0; n <= max_n; ++n) {
    if (n == 0) {
      ++checked;
      if (auto msg = run_kernel(kernel, Poset())) {
        ++violations;
        note(first, Violation{0, 0, 0, *msg});
      }
      continue;
    }
    const auto& bases = detail::compact_posets(n - 1);
    const std::int64_t base_count = static_cast<std::int64_t>(bases.size());

#ifdef _OPENMP
    if (mode == ExecMode::Parallel) {
      if (jobs > 0) omp_set_num_threads(jobs);
      std::uint64_t n_checked = 0;
      std::uint64_t n_violations = 0;
      std::optional<Violation> n_first;
#pragma omp parallel
      {
        std::uint64_t local_checked = 0;
        std::uint64_t local_violations = 0;
        std::optional<Violation> local_first;
#pragma omp for schedule(dynamic, 8)
        for (std::int64_t b = 0; b < base_count; ++b) {
          std::uint64_t child = 0;
          detail::extend(bases[static_cast<std::size_t>(b)],
                         [&](const detail::CompactPoset& cp) {
                           ++local_checked;
                           if (auto msg = run_kernel(kernel, detail::to_poset(cp))) {
                             ++local_violations;
                             const Violation v{n, static_cast<std::uint64_t>(b), child, *msg};
                             if (!local_first || earlier(v, *local_first)) local_first = v;
                           }
                           ++child;
                         });
        }
#pragma omp critical
        {
          n_checked += local_checked;
          n_violations += local_violations;
          if (local_first) note(n_first, *local_first);
        }
      }
      checked += n_checked;
      violations += n_violations;
      if (n_first) note(first, *n_first);
      continue;
    }
#else
    (void)jobs;
    (void)mode;
#endif

    for (std::int64_t b = 0; b < base_count; ++b) {
      std::uint64_t child = 0;
      detail::extend(bases[static_cast<std::size_t>(b)], [&](const detail::CompactPoset& cp) {
        ++checked;
        if (auto msg = run_kernel(kernel, detail::to_poset(cp))) {
          ++violations;
          note(first, Violation{n, static_cast<std::uint64_t>(b), child, *msg});
        }
        ++child;
      });
    }
  }

  report.checked = checked;
  report.violations = violations;
  if (first) report.first_violation = first->message;
  report.seconds = seconds_since(start);
  return report;
}

// ---------------------------------------------------------------------------
// Equivalence campaigns
// ---------------------------------------------------------------------------

SweepReport ali_equivalence_sweep(int max_n, ExecMode mode, int jobs) {
  return run_poset_sweep("ali-equivalence", max_n, mode, jobs,
                         [](const Poset& p) -> std::optional<std::string> {
                           const bool forbidden = is_ali_finite(p).member;
                           const bool structural = structural_class(p).has_value();
                           const bool grouped = automaton_is_ali(p, TreeVariant::Grouped);
                           const bool binary = automaton_is_ali(p, TreeVariant::Binary);
                           if (forbidden == structural && forbidden == grouped &&
                               forbidden == binary) {
                             return std::nullopt;
                           }
                           std::ostringstream msg;
                           msg << "ali routes disagree: forbidden=" << forbidden
                               << " structural=" << structural << " grouped=" << grouped
                               << " binary=" << binary;
                           return describe(p, msg.str());
                         });
}

SweepReport nacli_equivalence_sweep(int max_n, ExecMode mode, int jobs) {
  return run_poset_sweep("nacli-equivalence", max_n, mode, jobs,
                         [](const Poset& p) -> std::optional<std::string> {
                           const bool forbidden = is_nacli_finite(p).member;
                           const bool structural = nacli_structure(p).has_value();
                           const bool grouped = automaton_is_nacli(p, TreeVariant::Grouped);
                           const bool binary = automaton_is_nacli(p, TreeVariant::Binary);
                           if (forbidden == structural && forbidden == grouped &&
                               forbidden == binary) {
                             return std::nullopt;
                           }
                           std::ostringstream msg;
                           msg << "nacli routes disagree: forbidden=" << forbidden
                               << " structural=" << structural << " grouped=" << grouped
                               << " binary=" << binary;
                           return describe(p, msg.str());
                         });
}

// ---------------------------------------------------------------------------
// Behavior campaigns: finder vs oracle
// ---------------------------------------------------------------------------

namespace {

struct SpecData {
  PatternSpec spec;
  Poset pattern;
  LevelDecomposition ld;
};

std::vector<SpecData> make_spec_data(const std::vector<PatternSpec>& specs) {
  std::vector<SpecData> out;
  out.reserve(specs.size());
  for (const auto& spec : specs) {
    Poset pattern = pattern_poset(spec);
    LevelDecomposition ld = level_decomposition(pattern);
    out.push_back(SpecData{spec, std::move(pattern), std::move(ld)});
  }
  return out;
}

std::vector<PatternSpec> ali_specs_up_to(int max_size) {
  std::vector<PatternSpec> specs;
  for (int s = 1; s <= max_size; ++s) specs.push_back(PatternSpec::make_chain(s));
  for (int s = 1; s <= 2; ++s) {
    if (s + 1 <= max_size) specs.push_back(PatternSpec::chain_plus_point(s));
  }
  for (int k = 3; k <= max_size; ++k) specs.push_back(PatternSpec::based11(k));
  for (int k = 4; k <= max_size; ++k) specs.push_back(PatternSpec::based21(k));
  return specs;
}

std::vector<PatternSpec> nacli_specs_up_to(int max_size) {
  std::vector<PatternSpec> specs;
  for (int s = 1; s <= max_size; ++s) {
    for (int r = 0; s + r <= max_size; ++r) specs.push_back(PatternSpec::nacli(s, r));
  }
  return specs;
}

std::optional<Embedding> dispatch_ali_finder(const SpecData& sd, const LevelDecomposition& ld,
                                             const SlcTable& slc) {
  switch (sd.spec.kind) {
    case PatternSpec::Kind::Chain: return find_chain(ld, sd.spec.chain);
    case PatternSpec::Kind::ChainPlusPoint: return find_chain_plus_point(ld, sd.spec.chain);
    case PatternSpec::Kind::Based11Chain: return find_based11(ld, slc, sd.spec.total);
    case PatternSpec::Kind::Based21Chain: return find_based21(ld, slc, sd.spec.total);
    default: throw std::logic_error("not an ali pattern family");
  }
}

}  // namespace

SweepReport ali_behavior_sweep(int max_n, ExecMode mode, int jobs) {
  const auto specs = make_spec_data(ali_specs_up_to(max_n));
  return run_poset_sweep(
      "ali-behavior", max_n, mode, jobs,
      [&specs](const Poset& host) -> std::optional<std::string> {
        const LevelDecomposition ld = level_decomposition(host);
        const SlcTable slc = compute_slc(host, ld);
        for (const auto& sd : specs) {
          if (sd.pattern.size() > host.size()) continue;
          const auto emb = dispatch_ali_finder(sd, ld, slc);
          if (emb) {
            // The finder's own embedding must already be level-induced.
            if (emb->kind < EmbeddingKind::LevelInduced) {
              return describe(host, sd.spec.to_string() +
                                        ": finder returned a merely induced embedding");
            }
          } else if (oracle_exists(sd.pattern, sd.ld, host, ld, EmbeddingKind::Induced)) {
            return describe(host, sd.spec.to_string() +
                                      ": induced copy exists but the finder missed it");
          }
        }
        return std::nullopt;
      });
}

SweepReport nacli_behavior_sweep(int max_n, ExecMode mode, int jobs) {
  const auto specs = make_spec_data(nacli_specs_up_to(max_n));
  return run_poset_sweep(
      "nacli-behavior", max_n, mode, jobs,
      [&specs](const Poset& host) -> std::optional<std::string> {
        const LevelDecomposition ld = level_decomposition(host);
        for (const auto& sd : specs) {
          if (sd.pattern.size() > host.size()) continue;
          const auto emb = find_nacli(ld, sd.spec.chain, sd.spec.antichain);
          if (emb) {
            if (emb->kind != EmbeddingKind::ConsecutiveLevelInduced) {
              return describe(host, sd.spec.to_string() +
                                        ": finder result is not consecutive level-induced");
            }
          } else if (oracle_exists(sd.pattern, sd.ld, host, ld,
                                   EmbeddingKind::LevelInduced)) {
            return describe(host, sd.spec.to_string() +
                                      ": level-induced copy exists but find_nacli missed it");
          }
        }
        return std::nullopt;
      });
}

// ---------------------------------------------------------------------------
// Fixture checks
// ---------------------------------------------------------------------------

namespace {

struct LiftOutcome {
  bool weak_present = false;
  bool strong_absent = false;
  bool ok() const { return weak_present && strong_absent; }
};

LiftOutcome lift_outcome(const Poset& fixture, const Poset& host, EmbeddingKind weak,
                         EmbeddingKind strong) {
  LiftOutcome o;
  o.weak_present = oracle_exists(fixture, host, weak);
  o.strong_absent = !oracle_exists(fixture, host, strong);
  return o;
}

FixtureReport ali_fixture_leg(const std::string& name, const Poset& fixture) {
  const LiftOutcome via_width2 =
      lift_outcome(fixture, lift_width2(fixture), EmbeddingKind::Induced,
                   EmbeddingKind::LevelInduced);
  const LiftOutcome via_scatter =
      lift_outcome(fixture, lift_scatter(fixture), EmbeddingKind::Induced,
                   EmbeddingKind::LevelInduced);
  FixtureReport r;
  r.name = name;
  r.pass = via_width2.ok() || via_scatter.ok();
  std::ostringstream d;
  d << "width2(induced=" << via_width2.weak_present
    << ", level_absent=" << via_width2.strong_absent << ") scatter(induced="
    << via_scatter.weak_present << ", level_absent=" << via_scatter.strong_absent << ")";
  r.detail = d.str();
  return r;
}

FixtureReport nacli_fixture_leg(const std::string& name, const Poset& fixture) {
  const LiftOutcome o = lift_outcome(fixture, lift_gap(fixture), EmbeddingKind::LevelInduced,
                                     EmbeddingKind::ConsecutiveLevelInduced);
  FixtureReport r;
  r.name = name;
  r.pass = o.ok();
  std::ostringstream d;
  d << "gap(level=" << o.weak_present << ", consecutive_absent=" << o.strong_absent << ")";
  r.detail = d.str();
  return r;
}

}  // namespace

std::vector<FixtureReport> fixture_checks() {
  std::vector<FixtureReport> out;
  out.push_back(ali_fixture_leg("antichain3", forbidden_pattern(ForbiddenTag::Antichain3)));
  out.push_back(ali_fixture_leg("obs1", forbidden_pattern(ForbiddenTag::Obs1)));
  out.push_back(
      ali_fixture_leg("chain3_plus_point", forbidden_pattern(ForbiddenTag::Chain3PlusPoint)));
  out.push_back(nacli_fixture_leg("obs2", forbidden_pattern(ForbiddenTag::Obs2)));
  out.push_back(nacli_fixture_leg("obs3", forbidden_pattern(ForbiddenTag::Obs3)));
  return out;
}

// ---------------------------------------------------------------------------
// Counts, complexity, duality
// ---------------------------------------------------------------------------

SweepReport count_check(int max_n) {
  static const std::uint64_t expected[] = {1, 1, 3, 19, 219, 4231, 130023, 6129859};
  SweepReport report;
  report.check = "counts";
  report.max_n = max_n;
  const auto start = Clock::now();
  for (int n = 0; n <= max_n && n <= 7; ++n) {
    const std::uint64_t got = count_posets(n);
    ++report.checked;
    if (got != expected[n]) {
      ++report.violations;
      if (report.first_violation.empty()) {
        std::ostringstream msg;
        msg << "count(" << n << ") = " << got << ", expected " << expected[n];
        report.first_violation = msg.str();
      }
    }
  }
  report.seconds = seconds_since(start);
  return report;
}

ComplexityReport complexity_check(int seeds) {
  auto median_ms = [&](int n) {
    std::vector<double> times;
    for (int s = 0; s < seeds; ++s) {
      const Poset host = random_poset(n, 0x9e3779b9u + static_cast<std::uint64_t>(s) * 11400714819323198485ull + static_cast<std::uint64_t>(n),
                                      8.0 / n);
      const auto t0 = Clock::now();
      (void)find_based21(host, 8);
      times.push_back(seconds_since(t0) * 1000.0);
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
  };
  ComplexityReport r;
  r.median_small_ms = median_ms(256);
  r.median_large_ms = median_ms(512);
  r.ratio = r.median_large_ms / r.median_small_ms;
  r.pass = r.ratio <= 12.0;
  return r;
}

SweepReport duality_check(int count, int max_n, std::uint64_t seed, ExecMode mode, int jobs) {
  SweepReport report;
  report.check = "duality";
  report.max_n = max_n;
  const auto start = Clock::now();

  std::uint64_t violations = 0;
  std::string first;
#ifdef _OPENMP
  if (jobs > 0 && mode == ExecMode::Parallel) omp_set_num_threads(jobs);
#pragma omp parallel for schedule(dynamic, 16) if (mode == ExecMode::Parallel)
#endif
  for (int i = 0; i < count; ++i) {
    const int n = 1 + static_cast<int>(static_cast<std::uint64_t>(i) % static_cast<std::uint64_t>(max_n));
    const Poset p = random_poset(n, seed + static_cast<std::uint64_t>(i));
    const Poset inv = inverse(p);
    std::ostringstream bad;
    const NodeAttributes a = root_attributes(p, TreeVariant::Grouped);
    const NodeAttributes b = root_attributes(inv, TreeVariant::Grouped);
    if (a.bAliInverse != b.bAli || a.bAli != b.bAliInverse) bad << "bAli/bAliInverse mismatch;";
    if (a.bAli11BasedChain != b.bAli11EndedChain || a.bAli21BasedChain != b.bAli21EndedChain ||
        a.bAli11EndedChain != b.bAli11BasedChain || a.bAli21EndedChain != b.bAli21BasedChain) {
      bad << "based/ended mismatch;";
    }
    for (int variant : {11, 21}) {
      for (int k = variant == 11 ? 3 : 4; k <= (variant == 11 ? 4 : 5); ++k) {
        const bool ended = find_ended(p, k, variant).has_value();
        const bool based = variant == 11 ? find_based11(inv, k).has_value()
                                         : find_based21(inv, k).has_value();
        if (ended != based) bad << "find_ended/find_based " << variant << ":" << k << " mismatch;";
      }
    }
    if (bad.str().empty()) continue;
#ifdef _OPENMP
#pragma omp critical
#endif
    {
      ++violations;
      const std::string msg = describe(p, "seed " + std::to_string(seed + static_cast<std::uint64_t>(i)) + ": " + bad.str());
      if (first.empty()) first = msg;
    }
  }

  report.checked = static_cast<std::uint64_t>(count);
  report.violations = violations;
  report.first_violation = first;
  report.seconds = seconds_since(start);
  return report;
}

Poset random_poset(int n, std::uint64_t seed, double density) {
  std::mt19937_64 rng(seed);
  double p = density;
  if (p < 0) p = std::uniform_real_distribution<double>(0.02, 0.5)(rng);
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::string> ids;
  ids.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ids.push_back("x" + std::to_string(i));
  std::bernoulli_distribution edge(std::min(1.0, std::max(0.0, p)));
  std::vector<std::pair<std::string, std::string>> rel;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (edge(rng)) {
        rel.emplace_back(ids[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])],
                         ids[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])]);
      }
    }
  }
  return Poset::from_relations(std::move(ids), rel);
}

}  // namespace sweep
}  // namespace posets
