#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posets/levels.hpp"
#include "posets/poset.hpp"

namespace posets {

/// Parameterized description of the pattern families the finders handle.
///
/// Chain(s)               c0 < ... < c_{s-1}
/// ChainPlusPoint(s)      a chain of s in {1,2} plus an incomparable "z"
/// Based11Chain(k)        {a0, a1} incomparable, below a chain of k-2
/// Based21Chain(k)        {b0 < b1, z} below a chain of k-3
/// Ended11/21Chain(k)     the inverses of the based classes
/// NacliChainAntichain(s,r) chain of s, plus r elements "y1".."yr"
///                        incomparable to everything
struct PatternSpec {
  enum class Kind {
    Chain,
    ChainPlusPoint,
    Based11Chain,
    Based21Chain,
    Ended11Chain,
    Ended21Chain,
    NacliChainAntichain,
  };

  Kind kind;
  int chain = 0;      // chain size (Chain, ChainPlusPoint, NacliChainAntichain)
  int total = 0;      // total element count (based/ended families)
  int antichain = 0;  // extra antichain elements (NacliChainAntichain)

  static PatternSpec make_chain(int s);
  static PatternSpec chain_plus_point(int s);
  static PatternSpec based11(int k);
  static PatternSpec based21(int k);
  static PatternSpec ended11(int k);
  static PatternSpec ended21(int k);
  static PatternSpec nacli(int s, int r);

  /// Parses "chain:5", "chainpoint:2", "based11:6", "based21:7",
  /// "ended11:6", "ended21:7", "nacli:3+4".
  static PatternSpec parse(const std::string& text);

  std::string to_string() const;
  int total_size() const;
  bool is_ali_pattern() const;
};

/// The pattern family member as a poset, with the ids documented above.
Poset pattern_poset(const PatternSpec& spec);

/// Longest chain starting at each element (the element included), with a
/// reference to a successor realizing it. Computed from the last level down;
/// ties go to the canonically first successor.
struct SlcTable {
  std::vector<int> slc;       // by element index
  std::vector<int> succ_ref;  // -1 when slc == 1
};

SlcTable compute_slc(const Poset& p, const LevelDecomposition& ld);

/// All finders return the canonically first embedding their search order
/// produces, or nothing. Overloads taking a LevelDecomposition (and SlcTable)
/// let callers reuse per-host work; the short forms compute them.
std::optional<Embedding> find_chain(const LevelDecomposition& ld, int s);
std::optional<Embedding> find_chain(const Poset& p, int s);

/// s must be 1 or 2; taller chain-plus-point patterns are rejected because
/// the level-walk guarantee does not extend to them.
std::optional<Embedding> find_chain_plus_point(const LevelDecomposition& ld, int s);
std::optional<Embedding> find_chain_plus_point(const Poset& p, int s);

std::optional<Embedding> find_based11(const LevelDecomposition& ld, const SlcTable& slc, int k);
std::optional<Embedding> find_based11(const Poset& p, int k);

std::optional<Embedding> find_based21(const LevelDecomposition& ld, const SlcTable& slc, int k);
std::optional<Embedding> find_based21(const Poset& p, int k);

/// Runs the based finder on the inverse order and re-maps the result.
/// variant is 11 or 21.
std::optional<Embedding> find_ended(const Poset& p, int k, int variant);

std::optional<Embedding> find_nacli(const LevelDecomposition& ld, int s, int r);
std::optional<Embedding> find_nacli(const Poset& p, int s, int r);

/// Dispatch on a PatternSpec (CLI entry point).
std::optional<Embedding> find_pattern(const Poset& host, const PatternSpec& spec);

}  // namespace posets
