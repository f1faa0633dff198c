#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posets/poset.hpp"

namespace posets {

/// Level decomposition of a finite poset.
///
/// level(x) = 0 when nothing is below x, otherwise 1 + max level of the
/// elements below x. The height (number of levels) equals the number of
/// elements of a maximum chain. pred_ref(x) points to an element one level
/// down that is below x; ties are broken "last overwrite wins" with elements
/// processed in canonical (declaration) order, which pins every walk the
/// finders make.
class LevelDecomposition {
public:
  LevelDecomposition(Poset p, std::vector<int> level, std::vector<std::vector<int>> levels,
                     std::vector<int> pred)
      : poset_(std::move(p)), level_(std::move(level)), levels_(std::move(levels)),
        pred_(std::move(pred)) {}

  const Poset& poset() const { return poset_; }
  int height() const { return static_cast<int>(levels_.size()); }
  int level(int i) const { return level_[static_cast<std::size_t>(i)]; }
  int level(const std::string& id) const { return level(poset_.index_checked(id)); }
  const std::vector<std::vector<int>>& levels() const { return levels_; }

  /// -1 when level(i) == 0.
  int pred_ref(int i) const { return pred_[static_cast<std::size_t>(i)]; }
  std::optional<std::string> pred_ref(const std::string& id) const;

private:
  Poset poset_;
  std::vector<int> level_;
  std::vector<std::vector<int>> levels_;
  std::vector<int> pred_;
};

LevelDecomposition level_decomposition(const Poset& p);

/// |level(x) - level(y)|. Symmetric; zero iff x and y share a level.
int gap(const LevelDecomposition& ld, const std::string& x, const std::string& y);

/// Maximum pairwise gap of a set of at least two elements.
int set_gap(const LevelDecomposition& ld, const std::vector<std::string>& xs);

/// The three suborder strengths, ordered: every consecutive level-induced
/// suborder is level-induced, every level-induced suborder is induced.
enum class EmbeddingKind { Induced = 0, LevelInduced = 1, ConsecutiveLevelInduced = 2 };

const char* to_string(EmbeddingKind kind);
std::optional<EmbeddingKind> embedding_kind_from_string(std::string_view name);

/// Pattern element id -> host element id, listed in pattern element order.
using ElementMap = std::vector<std::pair<std::string, std::string>>;

struct ClassifyResult {
  /// Strongest kind the map satisfies; empty when the map is not even an
  /// induced embedding.
  std::optional<EmbeddingKind> kind;
  /// On rejection, a pattern pair whose order function is not preserved.
  std::optional<std::pair<std::string, std::string>> witness;

  bool accepted() const { return kind.has_value(); }
  bool at_least(EmbeddingKind k) const { return kind && *kind >= k; }
};

/// Classifies an injective total map from pattern elements into host
/// elements.
///
/// Induced: the order function is preserved exactly. LevelInduced: in
/// addition, two pattern elements share a pattern level iff their images
/// share a host level. ConsecutiveLevelInduced: in addition, every pairwise
/// level gap is preserved. The gap-equality test is cross-checked against
/// the equivalent two-condition form (level equality both ways, plus the
/// +1-level relation both ways); a disagreement would be an internal error.
///
/// Throws ParseError on unknown ids and std::invalid_argument on maps that
/// are not total or not injective.
ClassifyResult classify_embedding(const Poset& pattern, const Poset& host,
                                  const ElementMap& map);
ClassifyResult classify_embedding(const Poset& pattern, const LevelDecomposition& pattern_ld,
                                  const Poset& host, const LevelDecomposition& host_ld,
                                  const ElementMap& map);

/// A verified embedding. `kind` is exactly the strongest kind
/// classify_embedding reports for the stored map.
struct Embedding {
  Poset pattern;
  Poset host;
  ElementMap map;
  EmbeddingKind kind;

  std::vector<std::string> image() const;
};

/// Classifies and wraps; throws std::logic_error if the map is rejected.
Embedding make_embedding(Poset pattern, Poset host, ElementMap map);
Embedding make_embedding(Poset pattern, const LevelDecomposition& pattern_ld, Poset host,
                         const LevelDecomposition& host_ld, ElementMap map);

}  // namespace posets
