#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "posets/levels.hpp"
#include "posets/poset.hpp"

namespace posets {

// ---------------------------------------------------------------------------
// Forbidden patterns
// ---------------------------------------------------------------------------

/// The five fixed obstruction patterns used by the recognizers:
///   Obs1            {a<b, c<d}            two disjoint comparable pairs
///   Obs2            {a<b, a<c}            one element below two incomparable
///   Obs3            {a>b, a>c}            one element above two incomparable
///   Antichain3      three mutually incomparable elements
///   Chain3PlusPoint a chain of height 3 plus an element incomparable to it
enum class ForbiddenTag { Obs1, Obs2, Obs3, Antichain3, Chain3PlusPoint };

const char* to_string(ForbiddenTag tag);
Poset forbidden_pattern(ForbiddenTag tag);

/// First induced occurrence of the pattern under canonical element order,
/// verified and classified before being returned.
std::optional<Embedding> find_forbidden(const Poset& p, ForbiddenTag tag);

// ---------------------------------------------------------------------------
// Structural classes
// ---------------------------------------------------------------------------

/// The classes an ali order can take, with the witnessing partition.
struct StructuralClass {
  enum class Kind { Chain, Antichain2, ChainPlusPoint, Based11Chain, Based21Chain };
  Kind kind;
  std::vector<std::string> base_chain;      // Chain: all; ChainPlusPoint/Based21: the 1-2 chain
  std::vector<std::string> base_antichain;  // Antichain2/Based11: the pair; the lone point otherwise
  std::vector<std::string> top_chain;       // composed chain of the based classes
};

const char* to_string(StructuralClass::Kind kind);

/// Matches p against the ali classes: a chain, an antichain of size 2, a
/// chain of height at most 2 plus an incomparable element, a (1,1)-based
/// chain (two incomparable elements below a chain), or a (2,1)-based chain
/// (a 2-chain plus an incomparable element, below a chain).
std::optional<StructuralClass> structural_class(const Poset& p);

/// Rebuilds the poset a structural class describes, on `reference`'s element
/// order. Used to validate certificates.
Poset rebuild(const StructuralClass& sc, const Poset& reference);

/// Partition of a nacli order into a chain and a disjoint antichain.
struct NacliStructure {
  std::vector<std::string> chain;  // bottom to top; empty for pure antichains
  std::vector<std::string> antichain;
};

std::optional<NacliStructure> nacli_structure(const Poset& p);
Poset rebuild(const NacliStructure& ns, const Poset& reference);

struct ForbiddenWitness {
  ForbiddenTag tag;
  Embedding embedding;
};

using Certificate = std::variant<StructuralClass, NacliStructure, ForbiddenWitness>;

struct RecognitionResult {
  bool member;
  Certificate certificate;
};

/// Forbidden-pattern route: p is ali iff none of Obs1, Obs2, Antichain3,
/// Chain3PlusPoint occurs as an induced suborder. Returns the structural
/// class on acceptance, the first forbidden witness otherwise. The empty
/// poset is accepted.
RecognitionResult is_ali_finite(const Poset& p);

/// p is nacli iff none of Obs1, Obs2, Obs3 occurs. Returns the
/// chain/antichain partition on acceptance; the structural route is used to
/// cross-validate the forbidden-pattern route.
RecognitionResult is_nacli_finite(const Poset& p);

// ---------------------------------------------------------------------------
// Modular decomposition and the bottom-up automaton
// ---------------------------------------------------------------------------

struct MDNode {
  enum class Kind { Leaf, Sum, Series, Prime };
  Kind kind = Kind::Leaf;
  int element = -1;                  // leaf payload (index into the poset)
  std::vector<MDNode> children;
  std::vector<int> elements;         // element indices this node covers, ascending
  std::vector<std::uint8_t> quotient;  // prime only: k*k strict-order matrix over children
};

/// Grouped canonical form: no Sum child of a Sum node, no Series child of a
/// Series node; leaves biject with the poset elements.
struct MDTree {
  Poset poset;
  MDNode root;
};

/// Naive recursive splitter: connected components of the comparability graph
/// give Sum nodes, the maximal ordered partition with every earlier block
/// entirely below every later block gives Series nodes, and remaining nodes
/// are Prime over their maximal proper modules. Requires a nonempty poset.
MDTree modular_decomposition(const Poset& p);

/// Rebuilds the poset the tree denotes (sum/composition semantics, primes
/// via quotient substitution).
Poset evaluate(const MDTree& t);

struct NodeAttributes {
  bool bLeaf = false;
  bool bChain = false;
  int iHeight1_2_More = 1;   // 1, 2, or 3 meaning "3 or more"
  long long iLongestChain = 1;
  bool bAli = false;
  bool bAliInverse = false;
  bool bDisjointAli = false;
  bool bAli11BasedChain = false;
  bool bAli21BasedChain = false;
  bool bAli11EndedChain = false;
  bool bAli21EndedChain = false;
  bool bAntichain = false;   // alias: nacli of height 1
  bool bNacli = false;
};

enum class TreeVariant { Grouped, Binary };

/// Attributes for every node, mirroring the evaluated tree's shape. For the
/// binary variant the grouped tree is first rewritten by left-folding each
/// node's children, and `tree` holds that rewritten shape.
struct AttributeTree {
  NodeAttributes attrs;
  std::vector<AttributeTree> children;
};

struct AttributeResult {
  MDNode tree;  // the tree the attributes were evaluated on
  AttributeTree attributes;
};

AttributeResult compute_attributes(const MDTree& t, TreeVariant variant);

/// Root attributes of p's decomposition. Throws on the empty poset.
NodeAttributes root_attributes(const Poset& p, TreeVariant variant);

/// Automaton route of the two recognizers; the empty poset is accepted.
bool automaton_is_ali(const Poset& p, TreeVariant variant);
bool automaton_is_nacli(const Poset& p, TreeVariant variant);

}  // namespace posets
