#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "posets/levels.hpp"
#include "posets/poset.hpp"

namespace posets {

/// Exhaustive search for an embedding of `pattern` into `host` classifying
/// at least at `kind`, pruned by per-pair order-function (and level)
/// compatibility. Returns the canonically first map: smallest image of the
/// first pattern element, then of the second, and so on. This is the ground
/// truth the finders are validated against.
std::optional<Embedding> oracle_find(const Poset& pattern, const Poset& host,
                                     EmbeddingKind kind);
std::optional<Embedding> oracle_find(const Poset& pattern, const LevelDecomposition& pattern_ld,
                                     const Poset& host, const LevelDecomposition& host_ld,
                                     EmbeddingKind kind);

/// Decision form of oracle_find. Free to search in any order, so absence
/// proofs are cheaper than producing the canonical witness.
bool oracle_exists(const Poset& pattern, const Poset& host, EmbeddingKind kind);
bool oracle_exists(const Poset& pattern, const LevelDecomposition& pattern_ld,
                   const Poset& host, const LevelDecomposition& host_ld, EmbeddingKind kind);

/// All labeled posets on n elements (ids "a", "b", ...), each exactly once,
/// generated by extending every (n-1)-element poset with every compatible
/// down-set/up-set pair for the new element. Guarded at n <= 7.
class PosetEnumeration {
public:
  explicit PosetEnumeration(int n);
  int n() const { return n_; }
  void for_each(const std::function<void(const Poset&)>& fn) const;
  std::uint64_t count() const;

private:
  int n_;
};

PosetEnumeration enumerate_posets(int n);
std::uint64_t count_posets(int n);

// ---------------------------------------------------------------------------
// Lifting constructions: adversarial hosts for the recognizers and finders.
// Added elements get fresh ids; the input's elements keep theirs.
// ---------------------------------------------------------------------------

/// Embeds the input into a host of level-width at most 2 by threading a full
/// chain through it: every input element lands on its own level. The host
/// never contains a level-induced copy of two disjoint comparable pairs.
Poset lift_width2(const Poset& p_prime);

/// Hangs a private chain of length i below the i-th element of a
/// level-respecting ordering. Every input element lands on its own level and
/// the host has no level-induced copy of one-element-below-two.
Poset lift_scatter(const Poset& p_prime);

/// Hangs a private chain of length gamma * level(x) below each element x,
/// spreading consecutive input levels gamma apart. The input stays
/// level-induced; with gamma above the input's height, no consecutive
/// level-induced copy of an input containing one-below-two or one-above-two
/// survives.
Poset lift_gap(const Poset& p_prime, int gamma);
Poset lift_gap(const Poset& p_prime);  // gamma = |elements| + 1

/// One shared chain of length gamma * height; the element at level l sits
/// above the first gamma * l chain elements. gamma >= 2.
Poset lift_single_chain(const Poset& p_prime, int gamma);

namespace detail {

/// Bit-packed poset on up to 8 elements; bit (i*8 + j) set means i < j.
struct CompactPoset {
  int n = 0;
  std::uint64_t lt = 0;
  bool less(int i, int j) const { return (lt >> (i * 8 + j)) & 1u; }
};

/// All one-element extensions of `base`, in a fixed order.
void extend(const CompactPoset& base, const std::function<void(const CompactPoset&)>& fn);

/// Memoized full enumerations, usable up to n = 6.
const std::vector<CompactPoset>& compact_posets(int n);

Poset to_poset(const CompactPoset& cp);

}  // namespace detail

}  // namespace posets
