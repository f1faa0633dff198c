#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "posets/finders.hpp"
#include "posets/io.hpp"
#include "posets/oracle.hpp"
#include "posets/recognition.hpp"
#include "posets/sweep.hpp"
#include "support/naive_checks.hpp"

using namespace posets;
using sweep::ExecMode;
using sweep::Kernel;
using sweep::run_poset_sweep;
using sweep::SweepReport;

namespace {

bool all_comparable(const Poset& p) {
  for (int i = 0; i < p.size(); ++i) {
    for (int j = i + 1; j < p.size(); ++j) {
      if (!p.comparable(i, j)) return false;
    }
  }
  return true;
}

bool attrs_equal(const NodeAttributes& a, const NodeAttributes& b) {
  return a.bLeaf == b.bLeaf && a.bChain == b.bChain &&
         a.iHeight1_2_More == b.iHeight1_2_More && a.iLongestChain == b.iLongestChain &&
         a.bAli == b.bAli && a.bAliInverse == b.bAliInverse &&
         a.bDisjointAli == b.bDisjointAli && a.bAli11BasedChain == b.bAli11BasedChain &&
         a.bAli21BasedChain == b.bAli21BasedChain && a.bAli11EndedChain == b.bAli11EndedChain &&
         a.bAli21EndedChain == b.bAli21EndedChain && a.bAntichain == b.bAntichain &&
         a.bNacli == b.bNacli;
}

std::optional<std::string> check_semantics(const Poset& p) {
  if (p.empty()) return std::nullopt;
  std::ostringstream bad;

  const MDTree tree = modular_decomposition(p);
  if (evaluate(tree) != p) bad << "tree does not evaluate back;";

  const NodeAttributes g = compute_attributes(tree, TreeVariant::Grouped).attributes.attrs;
  const NodeAttributes b = compute_attributes(tree, TreeVariant::Binary).attributes.attrs;
  if (!attrs_equal(g, b)) bad << "grouped/binary attributes disagree;";

  const LevelDecomposition ld = level_decomposition(p);
  if (g.bChain != all_comparable(p)) bad << "bChain;";
  if (g.iLongestChain != ld.height()) bad << "iLongestChain;";
  if (g.iHeight1_2_More != std::min<long long>(3, g.iLongestChain)) bad << "iHeight;";
  if (g.bAntichain != (p.relation_count() == 0)) bad << "bAntichain;";

  const Poset inv = inverse(p);
  const bool ali = is_ali_finite(p).member;
  const bool ali_inv = is_ali_finite(inv).member;
  const bool nacli = is_nacli_finite(p).member;
  if (g.bAli != ali) bad << "bAli;";
  if (g.bAliInverse != ali_inv) bad << "bAliInverse;";
  if (g.bNacli != nacli) bad << "bNacli;";

  const auto sc = structural_class(p);
  const auto sc_inv = structural_class(inv);
  const bool disjoint_ali =
      sc && (sc->kind == StructuralClass::Kind::Antichain2 ||
             sc->kind == StructuralClass::Kind::ChainPlusPoint);
  if (g.bDisjointAli != disjoint_ali) bad << "bDisjointAli;";
  if (g.bAli11BasedChain != (sc && sc->kind == StructuralClass::Kind::Based11Chain)) {
    bad << "bAli11BasedChain;";
  }
  if (g.bAli21BasedChain != (sc && sc->kind == StructuralClass::Kind::Based21Chain)) {
    bad << "bAli21BasedChain;";
  }
  if (g.bAli11EndedChain != (sc_inv && sc_inv->kind == StructuralClass::Kind::Based11Chain)) {
    bad << "bAli11EndedChain;";
  }
  if (g.bAli21EndedChain != (sc_inv && sc_inv->kind == StructuralClass::Kind::Based21Chain)) {
    bad << "bAli21EndedChain;";
  }

  // Attribute duality against the inverse order's decomposition.
  const NodeAttributes gi = root_attributes(inv, TreeVariant::Grouped);
  if (g.bAliInverse != gi.bAli || g.bAli != gi.bAliInverse) bad << "inverse duality;";
  if (g.bAli11BasedChain != gi.bAli11EndedChain || g.bAli21BasedChain != gi.bAli21EndedChain) {
    bad << "based/ended duality;";
  }

  // Ali orders are nacli exactly when they are not based chains.
  if (ali) {
    const bool based = sc && (sc->kind == StructuralClass::Kind::Based11Chain ||
                              sc->kind == StructuralClass::Kind::Based21Chain);
    if (nacli != !based) bad << "ali/nacli subsumption;";
  }

  // The cover relation closes back to the full order.
  {
    const int n = p.size();
    std::vector<std::uint8_t> lt(static_cast<std::size_t>(n) * n, 0);
    for (const auto& [x, y] : covers(p)) {
      lt[static_cast<std::size_t>(p.index(x)) * n + p.index(y)] = 1;
    }
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        if (!lt[static_cast<std::size_t>(i) * n + k]) continue;
        for (int j = 0; j < n; ++j) {
          if (lt[static_cast<std::size_t>(k) * n + j]) lt[static_cast<std::size_t>(i) * n + j] = 1;
        }
      }
    }
    if (lt != p.matrix()) bad << "covers closure;";
  }

  if (bad.str().empty()) return std::nullopt;
  return bad.str();
}

// Both finite formulations of the consecutive criterion, plus the collapse
// of the one-directional level criterion, over every injective map from
// every induced subposet.
std::optional<std::string> check_criteria(const Poset& host) {
  const auto host_levels = naive::levels(host);
  std::string failure;
  for (unsigned mask = 1; mask < (1u << host.size()) && failure.empty(); ++mask) {
    std::vector<std::string> subset;
    for (int i = 0; i < host.size(); ++i) {
      if ((mask >> i) & 1u) subset.push_back(host.id(i));
    }
    const Poset pattern = induced(host, subset);
    const auto pat_levels = naive::levels(pattern);
    naive::for_each_injective_map(
        pattern.size(), host.size(), [&](const std::vector<int>& assignment) {
          if (!failure.empty()) return;
          const int k = pattern.size();
          bool induced_ok = true;
          for (int i = 0; i < k && induced_ok; ++i) {
            for (int j = 0; j < k && induced_ok; ++j) {
              if (pattern.relation(i, j) !=
                  host.relation(assignment[static_cast<std::size_t>(i)],
                                assignment[static_cast<std::size_t>(j)])) {
                induced_ok = false;
              }
            }
          }
          if (!induced_ok) return;
          bool eq_both = true, eq_fwd = true, gap_eq = true, plus1 = true, strict = true;
          for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
              const int pi = pat_levels[static_cast<std::size_t>(i)];
              const int pj = pat_levels[static_cast<std::size_t>(j)];
              const int hi = host_levels[static_cast<std::size_t>(assignment[static_cast<std::size_t>(i)])];
              const int hj = host_levels[static_cast<std::size_t>(assignment[static_cast<std::size_t>(j)])];
              if ((pi == pj) != (hi == hj)) eq_both = false;
              if (pi == pj && hi != hj) eq_fwd = false;
              if (std::abs(pi - pj) != std::abs(hi - hj)) gap_eq = false;
              if ((pi + 1 == pj) != (hi + 1 == hj)) plus1 = false;
              if ((pi < pj) != (hi < hj)) strict = false;
            }
          }
          // Gap form vs two-condition form of the consecutive criterion.
          if ((eq_both && gap_eq) != (eq_both && plus1)) {
            failure = "consecutive criteria disagree";
            return;
          }
          // One-directional level criterion collapses to the full one.
          if (eq_fwd && (!eq_both || !strict)) {
            failure = "one-directional level criterion did not collapse";
          }
        });
  }
  if (failure.empty()) return std::nullopt;
  return failure;
}

std::optional<std::string> check_generators(const Poset& p) {
  if (p.empty()) return std::nullopt;
  std::ostringstream bad;
  const Poset obs1 = forbidden_pattern(ForbiddenTag::Obs1);
  const Poset obs2 = forbidden_pattern(ForbiddenTag::Obs2);
  const Poset obs3 = forbidden_pattern(ForbiddenTag::Obs3);
  const Poset anti3 = forbidden_pattern(ForbiddenTag::Antichain3);

  const Poset w2 = lift_width2(p);
  if (!oracle_exists(p, w2, EmbeddingKind::Induced)) bad << "width2 lost the input;";
  {
    const auto ld = level_decomposition(w2);
    for (const auto& level : ld.levels()) {
      if (level.size() > 2) bad << "width2 level too wide;";
    }
  }
  if (oracle_exists(obs1, w2, EmbeddingKind::LevelInduced)) bad << "width2 obs1 survived;";
  if (oracle_exists(anti3, w2, EmbeddingKind::LevelInduced)) bad << "width2 antichain3 survived;";

  const Poset sc = lift_scatter(p);
  if (!oracle_exists(p, sc, EmbeddingKind::Induced)) bad << "scatter lost the input;";
  if (oracle_exists(obs2, sc, EmbeddingKind::LevelInduced)) bad << "scatter obs2 survived;";
  {
    // Original elements all land on distinct levels.
    const auto ld = level_decomposition(sc);
    std::vector<int> seen;
    for (const auto& id : p.elements()) seen.push_back(ld.level(id));
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      bad << "scatter shares a level;";
    }
  }

  const Poset gp = lift_gap(p);
  if (!oracle_exists(p, gp, EmbeddingKind::LevelInduced)) bad << "gap lift not level-induced;";
  const bool has_obstruction = naive::embedding_exists(obs2, p, EmbeddingKind::Induced) ||
                               naive::embedding_exists(obs3, p, EmbeddingKind::Induced);
  if (has_obstruction && oracle_exists(p, gp, EmbeddingKind::ConsecutiveLevelInduced)) {
    bad << "gap lift left a consecutive copy;";
  }
  if (bad.str().empty()) return std::nullopt;
  return bad.str();
}

}  // namespace

TEST_CASE("attribute semantics, dualities and tree evaluation, all posets up to 6") {
  const SweepReport r =
      run_poset_sweep("semantics", 6, ExecMode::Parallel, 0, check_semantics);
  CHECK(r.checked == 134497);
  CHECK_MESSAGE(r.violations == 0, r.first_violation);
}

TEST_CASE("consecutive-criterion forms agree over every map, hosts up to 5") {
  const SweepReport r = run_poset_sweep("criteria", 5, ExecMode::Parallel, 0, check_criteria);
  CHECK_MESSAGE(r.violations == 0, r.first_violation);
}

TEST_CASE("generator contracts, exhaustively up to 4") {
  const SweepReport r = run_poset_sweep("generators", 4, ExecMode::Parallel, 0, check_generators);
  CHECK_MESSAGE(r.violations == 0, r.first_violation);
}

TEST_CASE("generator contracts, sampled 5-element posets") {
  int index = 0;
  int failures = 0;
  std::string first;
  PosetEnumeration(5).for_each([&](const Poset& p) {
    if (index++ % 29 != 0) return;
    if (const auto msg = check_generators(p)) {
      ++failures;
      if (first.empty()) first = *msg;
    }
  });
  CHECK_MESSAGE(failures == 0, first);
}

TEST_CASE("finder completeness on sampled 8-element hosts") {
  // The exhaustive sweeps stop at 7 elements; at 8 the space (431,723,379
  // labeled posets) is sampled randomly instead.
  std::vector<PatternSpec> ali_specs;
  for (int s = 1; s <= 8; ++s) ali_specs.push_back(PatternSpec::make_chain(s));
  for (int s = 1; s <= 2; ++s) ali_specs.push_back(PatternSpec::chain_plus_point(s));
  for (int k = 3; k <= 8; ++k) ali_specs.push_back(PatternSpec::based11(k));
  for (int k = 4; k <= 8; ++k) ali_specs.push_back(PatternSpec::based21(k));
  std::vector<PatternSpec> nacli_specs;
  for (int s = 1; s <= 8; ++s) {
    for (int r = 0; s + r <= 8; ++r) nacli_specs.push_back(PatternSpec::nacli(s, r));
  }

  int failures = 0;
  std::string first;
  for (std::uint64_t seed = 0; seed < 4000; ++seed) {
    const Poset host = sweep::random_poset(8, seed * 1315423911ull + 17);
    const LevelDecomposition ld = level_decomposition(host);
    const SlcTable slc = compute_slc(host, ld);
    for (const auto& spec : ali_specs) {
      std::optional<Embedding> emb;
      switch (spec.kind) {
        case PatternSpec::Kind::Chain: emb = find_chain(ld, spec.chain); break;
        case PatternSpec::Kind::ChainPlusPoint: emb = find_chain_plus_point(ld, spec.chain); break;
        case PatternSpec::Kind::Based11Chain: emb = find_based11(ld, slc, spec.total); break;
        default: emb = find_based21(ld, slc, spec.total); break;
      }
      const bool ok = emb ? emb->kind >= EmbeddingKind::LevelInduced
                          : !oracle_exists(pattern_poset(spec), host, EmbeddingKind::Induced);
      if (!ok) {
        ++failures;
        if (first.empty()) first = spec.to_string() + " on seed " + std::to_string(seed);
      }
    }
    for (const auto& spec : nacli_specs) {
      const auto emb = find_nacli(ld, spec.chain, spec.antichain);
      const bool ok = emb ? emb->kind == EmbeddingKind::ConsecutiveLevelInduced
                          : !oracle_exists(pattern_poset(spec), host,
                                           EmbeddingKind::LevelInduced);
      if (!ok) {
        ++failures;
        if (first.empty()) first = spec.to_string() + " on seed " + std::to_string(seed);
      }
    }
  }
  CHECK_MESSAGE(failures == 0, first);
}
