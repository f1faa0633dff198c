#include "posets/levels.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace posets {

LevelDecomposition level_decomposition(const Poset& p) {
  const int n = p.size();
  std::vector<int> level(static_cast<std::size_t>(n), -1);
  std::vector<int> pred(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> levels;

  // Peel minimal elements round by round. below_count[y] tracks how many
  // not-yet-peeled elements are below y.
  std::vector<int> below_count(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (p.less(i, j)) ++below_count[static_cast<std::size_t>(j)];
    }
  }
  int remaining = n;
  int current = 0;
  while (remaining > 0) {
    std::vector<int> this_level;
    for (int i = 0; i < n; ++i) {
      if (level[static_cast<std::size_t>(i)] < 0 && below_count[static_cast<std::size_t>(i)] == 0) {
        this_level.push_back(i);
      }
    }
    // Selected elements overwrite the reference of everything above them;
    // the last overwrite an element sees comes from its previous level.
    for (int x : this_level) {
      level[static_cast<std::size_t>(x)] = current;
      for (int y = 0; y < n; ++y) {
        if (p.less(x, y)) pred[static_cast<std::size_t>(y)] = x;
      }
    }
    for (int x : this_level) {
      for (int y = 0; y < n; ++y) {
        if (p.less(x, y)) --below_count[static_cast<std::size_t>(y)];
      }
    }
    remaining -= static_cast<int>(this_level.size());
    levels.push_back(std::move(this_level));
    ++current;
  }
  return LevelDecomposition(p, std::move(level), std::move(levels), std::move(pred));
}

std::optional<std::string> LevelDecomposition::pred_ref(const std::string& id) const {
  const int i = pred_ref(poset_.index_checked(id));
  if (i < 0) return std::nullopt;
  return poset_.id(i);
}

int gap(const LevelDecomposition& ld, const std::string& x, const std::string& y) {
  return std::abs(ld.level(x) - ld.level(y));
}

int set_gap(const LevelDecomposition& ld, const std::vector<std::string>& xs) {
  if (xs.size() < 2) throw std::invalid_argument("set_gap needs at least two elements");
  int lo = ld.level(xs.front());
  int hi = lo;
  for (const auto& x : xs) {
    const int l = ld.level(x);
    lo = std::min(lo, l);
    hi = std::max(hi, l);
  }
  return hi - lo;
}

const char* to_string(EmbeddingKind kind) {
  switch (kind) {
    case EmbeddingKind::Induced: return "induced";
    case EmbeddingKind::LevelInduced: return "level_induced";
    case EmbeddingKind::ConsecutiveLevelInduced: return "consecutive_level_induced";
  }
  return "?";
}

std::optional<EmbeddingKind> embedding_kind_from_string(std::string_view name) {
  if (name == "induced") return EmbeddingKind::Induced;
  if (name == "level" || name == "level_induced") return EmbeddingKind::LevelInduced;
  if (name == "consecutive" || name == "consecutive_level_induced") {
    return EmbeddingKind::ConsecutiveLevelInduced;
  }
  return std::nullopt;
}

ClassifyResult classify_embedding(const Poset& pattern, const Poset& host,
                                  const ElementMap& map) {
  const LevelDecomposition pattern_ld = level_decomposition(pattern);
  const LevelDecomposition host_ld = level_decomposition(host);
  return classify_embedding(pattern, pattern_ld, host, host_ld, map);
}

ClassifyResult classify_embedding(const Poset& pattern, const LevelDecomposition& pattern_ld,
                                  const Poset& host, const LevelDecomposition& host_ld,
                                  const ElementMap& map) {
  const int k = pattern.size();
  if (static_cast<int>(map.size()) != k) {
    throw std::invalid_argument("map must assign every pattern element exactly once");
  }
  std::vector<int> image(static_cast<std::size_t>(k), -1);
  std::vector<char> used(static_cast<std::size_t>(host.size()), 0);
  for (const auto& [px, hx] : map) {
    const int pi = pattern.index_checked(px);
    const int hi = host.index_checked(hx);
    if (image[static_cast<std::size_t>(pi)] >= 0) {
      throw std::invalid_argument("map assigns pattern element twice: " + px);
    }
    if (used[static_cast<std::size_t>(hi)]) {
      throw std::invalid_argument("map is not injective at host element " + hx);
    }
    image[static_cast<std::size_t>(pi)] = hi;
    used[static_cast<std::size_t>(hi)] = 1;
  }

  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const int mi = image[static_cast<std::size_t>(i)];
      const int mj = image[static_cast<std::size_t>(j)];
      if (pattern.less(i, j) != host.less(mi, mj) || pattern.less(j, i) != host.less(mj, mi)) {
        return ClassifyResult{std::nullopt, std::make_pair(pattern.id(i), pattern.id(j))};
      }
    }
  }

  bool level_ok = true;
  for (int i = 0; i < k && level_ok; ++i) {
    for (int j = i + 1; j < k && level_ok; ++j) {
      const bool pat_eq = pattern_ld.level(i) == pattern_ld.level(j);
      const bool host_eq = host_ld.level(image[static_cast<std::size_t>(i)]) ==
                           host_ld.level(image[static_cast<std::size_t>(j)]);
      if (pat_eq != host_eq) level_ok = false;
    }
  }
  if (!level_ok) return ClassifyResult{EmbeddingKind::Induced, std::nullopt};

  bool gaps_equal = true;
  bool two_condition = true;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const int pi = pattern_ld.level(i);
      const int pj = pattern_ld.level(j);
      const int hi = host_ld.level(image[static_cast<std::size_t>(i)]);
      const int hj = host_ld.level(image[static_cast<std::size_t>(j)]);
      if (std::abs(pi - pj) != std::abs(hi - hj)) gaps_equal = false;
      if ((pi + 1 == pj) != (hi + 1 == hj) || (pj + 1 == pi) != (hj + 1 == hi)) {
        two_condition = false;
      }
    }
  }
  if (gaps_equal != two_condition) {
    throw std::logic_error("consecutive criteria disagree; classification is broken");
  }
  return ClassifyResult{gaps_equal ? EmbeddingKind::ConsecutiveLevelInduced
                                   : EmbeddingKind::LevelInduced,
                        std::nullopt};
}

std::vector<std::string> Embedding::image() const {
  std::vector<std::string> out;
  out.reserve(map.size());
  for (const auto& [pat, h] : map) out.push_back(h);
  return out;
}

Embedding make_embedding(Poset pattern, Poset host, ElementMap map) {
  const ClassifyResult r = classify_embedding(pattern, host, map);
  if (!r.accepted()) throw std::logic_error("map is not an induced embedding");
  return Embedding{std::move(pattern), std::move(host), std::move(map), *r.kind};
}

Embedding make_embedding(Poset pattern, const LevelDecomposition& pattern_ld, Poset host,
                         const LevelDecomposition& host_ld, ElementMap map) {
  const ClassifyResult r = classify_embedding(pattern, pattern_ld, host, host_ld, map);
  if (!r.accepted()) throw std::logic_error("map is not an induced embedding");
  return Embedding{std::move(pattern), std::move(host), std::move(map), *r.kind};
}

}  // namespace posets
