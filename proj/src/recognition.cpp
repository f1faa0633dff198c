#include "posets/recognition.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace posets {

// ---------------------------------------------------------------------------
// Forbidden patterns
// ---------------------------------------------------------------------------

const char* to_string(ForbiddenTag tag) {
  switch (tag) {
    case ForbiddenTag::Obs1: return "obs1";
    case ForbiddenTag::Obs2: return "obs2";
    case ForbiddenTag::Obs3: return "obs3";
    case ForbiddenTag::Antichain3: return "antichain3";
    case ForbiddenTag::Chain3PlusPoint: return "chain3_plus_point";
  }
  return "?";
}

Poset forbidden_pattern(ForbiddenTag tag) {
  switch (tag) {
    case ForbiddenTag::Obs1:
      return Poset::from_relations({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    case ForbiddenTag::Obs2:
      return Poset::from_relations({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
    case ForbiddenTag::Obs3:
      return Poset::from_relations({"a", "b", "c"}, {{"b", "a"}, {"c", "a"}});
    case ForbiddenTag::Antichain3:
      return Poset::from_relations({"a", "b", "c"}, {});
    case ForbiddenTag::Chain3PlusPoint:
      return Poset::from_relations({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}});
  }
  throw std::invalid_argument("bad tag");
}

namespace {

Embedding wrap_witness(const Poset& p, ForbiddenTag tag, const std::vector<int>& image) {
  const Poset pattern = forbidden_pattern(tag);
  ElementMap map;
  for (std::size_t i = 0; i < image.size(); ++i) {
    map.emplace_back(pattern.id(static_cast<int>(i)), p.id(image[i]));
  }
  return make_embedding(pattern, p, std::move(map));
}

bool incomp(const Poset& p, int i, int j) { return !p.less(i, j) && !p.less(j, i); }

// Each scan iterates in canonical element order and stops at the first hit,
// so witnesses are reproducible.
std::optional<std::vector<int>> scan_obs1(const Poset& p) {
  const int n = p.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!p.less(x, y)) continue;
      for (int u = 0; u < n; ++u) {
        if (u == x || u == y || !incomp(p, x, u) || !incomp(p, y, u)) continue;
        for (int v = 0; v < n; ++v) {
          if (v == x || v == y || v == u) continue;
          if (p.less(u, v) && incomp(p, x, v) && incomp(p, y, v)) {
            return std::vector<int>{x, y, u, v};
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<int>> scan_obs2(const Poset& p, bool below) {
  const int n = p.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!(below ? p.less(x, y) : p.less(y, x))) continue;
      for (int z = 0; z < n; ++z) {
        if (z == y) continue;
        if ((below ? p.less(x, z) : p.less(z, x)) && incomp(p, y, z)) {
          return std::vector<int>{x, y, z};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<int>> scan_antichain3(const Poset& p) {
  const int n = p.size();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (!incomp(p, x, y)) continue;
      for (int z = y + 1; z < n; ++z) {
        if (incomp(p, x, z) && incomp(p, y, z)) return std::vector<int>{x, y, z};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<int>> scan_chain3_plus_point(const Poset& p) {
  const int n = p.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!p.less(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (!p.less(y, z)) continue;
        for (int w = 0; w < n; ++w) {
          if (w == x || w == y || w == z) continue;
          if (incomp(p, w, x) && incomp(p, w, y) && incomp(p, w, z)) {
            return std::vector<int>{x, y, z, w};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Embedding> find_forbidden(const Poset& p, ForbiddenTag tag) {
  std::optional<std::vector<int>> image;
  switch (tag) {
    case ForbiddenTag::Obs1: image = scan_obs1(p); break;
    case ForbiddenTag::Obs2: image = scan_obs2(p, true); break;
    case ForbiddenTag::Obs3: image = scan_obs2(p, false); break;
    case ForbiddenTag::Antichain3: image = scan_antichain3(p); break;
    case ForbiddenTag::Chain3PlusPoint: image = scan_chain3_plus_point(p); break;
  }
  if (!image) return std::nullopt;
  return wrap_witness(p, tag, *image);
}

// ---------------------------------------------------------------------------
// Structural classes
// ---------------------------------------------------------------------------

const char* to_string(StructuralClass::Kind kind) {
  switch (kind) {
    case StructuralClass::Kind::Chain: return "chain";
    case StructuralClass::Kind::Antichain2: return "antichain2";
    case StructuralClass::Kind::ChainPlusPoint: return "chain_plus_point";
    case StructuralClass::Kind::Based11Chain: return "based11_chain";
    case StructuralClass::Kind::Based21Chain: return "based21_chain";
  }
  return "?";
}

namespace {

std::vector<std::string> sorted_by_level(const Poset& p, const std::vector<int>& members) {
  // Within a chain, level order is the chain order.
  std::vector<int> sorted = members;
  std::sort(sorted.begin(), sorted.end(), [&](int a, int b) {
    if (p.less(a, b)) return true;
    if (p.less(b, a)) return false;
    return a < b;
  });
  std::vector<std::string> ids;
  ids.reserve(sorted.size());
  for (int i : sorted) ids.push_back(p.id(i));
  return ids;
}

bool is_total_order(const Poset& p, const std::vector<int>& members) {
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (!p.comparable(members[a], members[b])) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<StructuralClass> structural_class(const Poset& p) {
  const int n = p.size();
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;

  if (is_total_order(p, all)) {
    return StructuralClass{StructuralClass::Kind::Chain, sorted_by_level(p, all), {}, {}};
  }
  if (n == 2) {
    // Not a chain, so the two elements are incomparable.
    return StructuralClass{StructuralClass::Kind::Antichain2, {}, p.elements(), {}};
  }
  if (n == 3) {
    // Chain of height 2 plus an incomparable element?
    for (int z = 0; z < 3; ++z) {
      const int a = z == 0 ? 1 : 0;
      const int b = z == 2 ? 1 : 2;
      if (incomp(p, z, a) && incomp(p, z, b) && p.comparable(a, b)) {
        return StructuralClass{StructuralClass::Kind::ChainPlusPoint,
                               sorted_by_level(p, {a, b}),
                               {p.id(z)},
                               {}};
      }
    }
  }

  // Based classes: the elements comparable to everything else form the top
  // chain; the rest must shape a 2-antichain or a 2-chain plus a point, all
  // of it below every top element.
  std::vector<int> top;
  std::vector<int> base;
  for (int i = 0; i < n; ++i) {
    bool universal = true;
    for (int j = 0; j < n && universal; ++j) {
      if (i != j && !p.comparable(i, j)) universal = false;
    }
    (universal ? top : base).push_back(i);
  }
  if (top.empty() || !is_total_order(p, top)) return std::nullopt;
  for (int b : base) {
    for (int t : top) {
      if (!p.less(b, t)) return std::nullopt;
    }
  }
  if (base.size() == 2 && incomp(p, base[0], base[1])) {
    return StructuralClass{StructuralClass::Kind::Based11Chain,
                           {},
                           {p.id(base[0]), p.id(base[1])},
                           sorted_by_level(p, top)};
  }
  if (base.size() == 3) {
    for (std::size_t zi = 0; zi < 3; ++zi) {
      const int z = base[zi];
      const int a = base[zi == 0 ? 1 : 0];
      const int b = base[zi == 2 ? 1 : 2];
      if (incomp(p, z, a) && incomp(p, z, b) && p.comparable(a, b)) {
        return StructuralClass{StructuralClass::Kind::Based21Chain,
                               sorted_by_level(p, {a, b}),
                               {p.id(z)},
                               sorted_by_level(p, top)};
      }
    }
  }
  return std::nullopt;
}

namespace {

Poset rebuild_parts(const Poset& reference, const std::vector<std::vector<std::string>>& chains,
                    const std::vector<std::string>& loose,
                    const std::vector<std::string>& top_chain) {
  // Chains contribute their successive relations; everything is below every
  // top-chain element; loose elements carry no other relations.
  std::vector<std::pair<std::string, std::string>> rel;
  std::vector<std::string> lower;
  for (const auto& chain : chains) {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) rel.emplace_back(chain[i], chain[i + 1]);
    lower.insert(lower.end(), chain.begin(), chain.end());
  }
  lower.insert(lower.end(), loose.begin(), loose.end());
  for (std::size_t i = 0; i + 1 < top_chain.size(); ++i) {
    rel.emplace_back(top_chain[i], top_chain[i + 1]);
  }
  if (!top_chain.empty()) {
    for (const auto& x : lower) rel.emplace_back(x, top_chain.front());
  }
  return Poset::from_relations(reference.elements(), rel);
}

}  // namespace

Poset rebuild(const StructuralClass& sc, const Poset& reference) {
  switch (sc.kind) {
    case StructuralClass::Kind::Chain:
      return rebuild_parts(reference, {sc.base_chain}, {}, {});
    case StructuralClass::Kind::Antichain2:
      return rebuild_parts(reference, {}, sc.base_antichain, {});
    case StructuralClass::Kind::ChainPlusPoint:
      return rebuild_parts(reference, {sc.base_chain}, sc.base_antichain, {});
    case StructuralClass::Kind::Based11Chain:
      return rebuild_parts(reference, {}, sc.base_antichain, sc.top_chain);
    case StructuralClass::Kind::Based21Chain:
      return rebuild_parts(reference, {sc.base_chain}, sc.base_antichain, sc.top_chain);
  }
  throw std::logic_error("bad structural class");
}

std::optional<NacliStructure> nacli_structure(const Poset& p) {
  const int n = p.size();
  // Comparability components: a nacli order has at most one component of
  // size >= 2 and that component must be a total order.
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int comp_count = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[static_cast<std::size_t>(start)] >= 0) continue;
    std::vector<int> stack{start};
    comp[static_cast<std::size_t>(start)] = comp_count;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < n; ++y) {
        if (comp[static_cast<std::size_t>(y)] < 0 && p.comparable(x, y)) {
          comp[static_cast<std::size_t>(y)] = comp_count;
          stack.push_back(y);
        }
      }
    }
    ++comp_count;
  }
  std::vector<std::vector<int>> members(static_cast<std::size_t>(comp_count));
  for (int i = 0; i < n; ++i) members[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])].push_back(i);

  NacliStructure ns;
  bool chain_taken = false;
  for (const auto& m : members) {
    if (m.size() == 1) {
      ns.antichain.push_back(p.id(m.front()));
    } else {
      if (chain_taken || !is_total_order(p, m)) return std::nullopt;
      chain_taken = true;
      ns.chain = sorted_by_level(p, m);
    }
  }
  return ns;
}

Poset rebuild(const NacliStructure& ns, const Poset& reference) {
  return rebuild_parts(reference, {ns.chain}, ns.antichain, {});
}

RecognitionResult is_ali_finite(const Poset& p) {
  static const ForbiddenTag tags[] = {ForbiddenTag::Obs1, ForbiddenTag::Obs2,
                                      ForbiddenTag::Antichain3, ForbiddenTag::Chain3PlusPoint};
  for (ForbiddenTag tag : tags) {
    if (auto emb = find_forbidden(p, tag)) {
      return RecognitionResult{false, ForbiddenWitness{tag, std::move(*emb)}};
    }
  }
  auto sc = structural_class(p);
  if (!sc) throw std::logic_error("obstruction-free order with no structural class");
  return RecognitionResult{true, std::move(*sc)};
}

RecognitionResult is_nacli_finite(const Poset& p) {
  static const ForbiddenTag tags[] = {ForbiddenTag::Obs1, ForbiddenTag::Obs2,
                                      ForbiddenTag::Obs3};
  std::optional<ForbiddenWitness> witness;
  for (ForbiddenTag tag : tags) {
    if (auto emb = find_forbidden(p, tag)) {
      witness = ForbiddenWitness{tag, std::move(*emb)};
      break;
    }
  }
  auto ns = nacli_structure(p);
  if (witness.has_value() == ns.has_value()) {
    throw std::logic_error("forbidden-pattern and structural nacli checks disagree");
  }
  if (witness) return RecognitionResult{false, std::move(*witness)};
  return RecognitionResult{true, std::move(*ns)};
}

// ---------------------------------------------------------------------------
// Modular decomposition
// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<int>> comparability_components(const Poset& p,
                                                       const std::vector<int>& subset) {
  std::vector<std::vector<int>> result;
  std::vector<char> seen(subset.size(), 0);
  for (std::size_t s = 0; s < subset.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    std::vector<int> component;
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      component.push_back(subset[a]);
      for (std::size_t b = 0; b < subset.size(); ++b) {
        if (!seen[b] && p.comparable(subset[a], subset[b])) {
          seen[b] = 1;
          stack.push_back(b);
        }
      }
    }
    std::sort(component.begin(), component.end());
    result.push_back(std::move(component));
  }
  return result;
}

// Levels restricted to a subset (peeling, as in the full decomposition).
std::vector<std::vector<int>> subset_levels(const Poset& p, const std::vector<int>& subset) {
  std::vector<std::vector<int>> levels;
  std::vector<char> done(subset.size(), 0);
  std::size_t remaining = subset.size();
  while (remaining > 0) {
    std::vector<std::size_t> current;
    for (std::size_t a = 0; a < subset.size(); ++a) {
      if (done[a]) continue;
      bool minimal = true;
      for (std::size_t b = 0; b < subset.size() && minimal; ++b) {
        if (!done[b] && p.less(subset[b], subset[a])) minimal = false;
      }
      if (minimal) current.push_back(a);
    }
    std::vector<int> level;
    for (std::size_t a : current) {
      done[a] = 1;
      level.push_back(subset[a]);
    }
    remaining -= current.size();
    levels.push_back(std::move(level));
  }
  return levels;
}

// Blocks of the maximal ordered partition: cut between consecutive levels
// whenever everything at or below the boundary is below everything above it.
std::vector<std::vector<int>> series_blocks(const Poset& p, const std::vector<int>& subset) {
  const auto levels = subset_levels(p, subset);
  std::vector<std::vector<int>> blocks;
  std::vector<int> current;
  for (std::size_t l = 0; l < levels.size(); ++l) {
    current.insert(current.end(), levels[l].begin(), levels[l].end());
    if (l + 1 == levels.size()) {
      std::sort(current.begin(), current.end());
      blocks.push_back(std::move(current));
      current.clear();
      continue;
    }
    bool cut = true;
    for (int x : current) {
      if (!cut) break;
      for (std::size_t l2 = l + 1; l2 < levels.size() && cut; ++l2) {
        for (int y : levels[l2]) {
          if (!p.less(x, y)) {
            cut = false;
            break;
          }
        }
      }
    }
    if (cut) {
      std::sort(current.begin(), current.end());
      blocks.push_back(std::move(current));
      current.clear();
    }
  }
  return blocks;
}

// Maximal module that contains x and avoids w, by refinement: repeatedly
// keep only x's class under the order function of each outside element.
std::vector<int> max_module_avoiding(const Poset& p, const std::vector<int>& subset, int x,
                                     int w) {
  std::vector<int> inside;
  for (int e : subset) {
    if (e != w) inside.push_back(e);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int z : subset) {
      if (std::find(inside.begin(), inside.end(), z) != inside.end()) continue;
      std::vector<int> kept;
      for (int e : inside) {
        if (p.relation(z, e) == p.relation(z, x)) kept.push_back(e);
      }
      if (kept.size() != inside.size()) {
        inside = std::move(kept);
        changed = true;
      }
    }
  }
  return inside;
}

std::vector<std::vector<int>> maximal_proper_modules(const Poset& p,
                                                     const std::vector<int>& subset) {
  std::vector<std::vector<int>> parts;
  std::vector<char> covered_flag;
  std::vector<int> uncovered = subset;
  while (!uncovered.empty()) {
    const int x = uncovered.front();
    std::vector<int> best{x};
    for (int w : subset) {
      if (w == x) continue;
      auto m = max_module_avoiding(p, subset, x, w);
      if (m.size() > best.size()) best = std::move(m);
    }
    std::sort(best.begin(), best.end());
    parts.push_back(best);
    std::vector<int> next;
    for (int e : uncovered) {
      if (!std::binary_search(best.begin(), best.end(), e)) next.push_back(e);
    }
    uncovered = std::move(next);
  }
  return parts;
}

MDNode decompose(const Poset& p, std::vector<int> subset) {
  MDNode node;
  node.elements = subset;
  if (subset.size() == 1) {
    node.kind = MDNode::Kind::Leaf;
    node.element = subset.front();
    return node;
  }

  auto components = comparability_components(p, subset);
  if (components.size() > 1) {
    node.kind = MDNode::Kind::Sum;
    for (auto& c : components) node.children.push_back(decompose(p, std::move(c)));
    return node;
  }

  auto blocks = series_blocks(p, subset);
  if (blocks.size() > 1) {
    node.kind = MDNode::Kind::Series;
    for (auto& b : blocks) node.children.push_back(decompose(p, std::move(b)));
    return node;
  }

  node.kind = MDNode::Kind::Prime;
  auto parts = maximal_proper_modules(p, subset);
  std::size_t covered = 0;
  for (const auto& part : parts) covered += part.size();
  if (parts.size() < 2 || covered != subset.size()) {
    throw std::logic_error("prime split failed to partition the node");
  }
  const std::size_t k = parts.size();
  node.quotient.assign(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j && p.less(parts[i].front(), parts[j].front())) node.quotient[i * k + j] = 1;
    }
  }
  for (auto& part : parts) node.children.push_back(decompose(p, std::move(part)));
  return node;
}

}  // namespace

MDTree modular_decomposition(const Poset& p) {
  if (p.empty()) throw std::invalid_argument("modular decomposition needs a nonempty poset");
  std::vector<int> all(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) all[static_cast<std::size_t>(i)] = i;
  return MDTree{p, decompose(p, std::move(all))};
}

namespace {

void fill_relations(const MDNode& node, const Poset& p,
                    std::vector<std::uint8_t>& lt, int n) {
  switch (node.kind) {
    case MDNode::Kind::Leaf:
      return;
    case MDNode::Kind::Sum:
      for (const auto& c : node.children) fill_relations(c, p, lt, n);
      return;
    case MDNode::Kind::Series:
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        fill_relations(node.children[i], p, lt, n);
        for (std::size_t j = i + 1; j < node.children.size(); ++j) {
          for (int x : node.children[i].elements) {
            for (int y : node.children[j].elements) {
              lt[static_cast<std::size_t>(x) * n + y] = 1;
            }
          }
        }
      }
      return;
    case MDNode::Kind::Prime: {
      const std::size_t k = node.children.size();
      for (std::size_t i = 0; i < k; ++i) {
        fill_relations(node.children[i], p, lt, n);
        for (std::size_t j = 0; j < k; ++j) {
          if (!node.quotient[i * k + j]) continue;
          for (int x : node.children[i].elements) {
            for (int y : node.children[j].elements) {
              lt[static_cast<std::size_t>(x) * n + y] = 1;
            }
          }
        }
      }
      return;
    }
  }
}

}  // namespace

Poset evaluate(const MDTree& t) {
  const int n = t.poset.size();
  std::vector<std::uint8_t> lt(static_cast<std::size_t>(n) * n, 0);
  fill_relations(t.root, t.poset, lt, n);
  return Poset::from_closed_matrix(t.poset.elements(), std::move(lt));
}

// ---------------------------------------------------------------------------
// Attribute automaton
// ---------------------------------------------------------------------------

namespace {

MDNode binarize(const MDNode& node) {
  MDNode out;
  out.kind = node.kind;
  out.element = node.element;
  out.elements = node.elements;
  out.quotient = node.quotient;
  if (node.kind == MDNode::Kind::Leaf) return out;
  if (node.kind == MDNode::Kind::Prime) {
    for (const auto& c : node.children) out.children.push_back(binarize(c));
    return out;
  }
  // Left fold: ((c1 o c2) o c3) ...
  MDNode acc = binarize(node.children.front());
  for (std::size_t i = 1; i < node.children.size(); ++i) {
    MDNode parent;
    parent.kind = node.kind;
    parent.elements = acc.elements;
    MDNode rhs = binarize(node.children[i]);
    parent.elements.insert(parent.elements.end(), rhs.elements.begin(), rhs.elements.end());
    std::sort(parent.elements.begin(), parent.elements.end());
    parent.children.push_back(std::move(acc));
    parent.children.push_back(std::move(rhs));
    acc = std::move(parent);
  }
  return acc;
}

int longest_chain_in(const Poset& p, const std::vector<int>& subset) {
  return static_cast<int>(subset_levels(p, subset).size());
}

NodeAttributes combine_sum(const std::vector<NodeAttributes>& cs, TreeVariant variant) {
  NodeAttributes a;
  a.bChain = false;
  a.iLongestChain = 0;
  for (const auto& c : cs) a.iLongestChain = std::max(a.iLongestChain, c.iLongestChain);
  int h = 1;
  for (const auto& c : cs) h = std::max(h, c.iHeight1_2_More);
  a.iHeight1_2_More = h;

  // Exactly two parts, one a chain of height 1 or 2, the other a leaf.
  auto chain_plus_leaf = [&](const NodeAttributes& u, const NodeAttributes& v) {
    return u.bChain && u.iHeight1_2_More <= 2 && v.bLeaf;
  };
  a.bAli = cs.size() == 2 && (chain_plus_leaf(cs[0], cs[1]) || chain_plus_leaf(cs[1], cs[0]));
  a.bAliInverse = a.bAli;
  a.bDisjointAli = a.bAli;

  a.bAntichain = true;
  for (const auto& c : cs) a.bAntichain = a.bAntichain && c.bAntichain;

  // All parts antichains, except maybe one chain (grouped) or one chain or
  // nacli part (binary).
  int exceptions = 0;
  bool exceptions_ok = true;
  for (const auto& c : cs) {
    if (c.bAntichain) continue;
    ++exceptions;
    const bool allowed =
        variant == TreeVariant::Grouped ? c.bChain : (c.bChain || c.bNacli);
    if (!allowed) exceptions_ok = false;
  }
  a.bNacli = exceptions_ok && exceptions <= 1;
  return a;
}

NodeAttributes combine_series(const std::vector<NodeAttributes>& cs, TreeVariant variant) {
  NodeAttributes a;
  a.bChain = true;
  for (const auto& c : cs) a.bChain = a.bChain && c.bChain;
  a.iLongestChain = 0;
  for (const auto& c : cs) a.iLongestChain += c.iLongestChain;
  int sum = 0;
  for (const auto& c : cs) sum += c.iHeight1_2_More;
  a.iHeight1_2_More = std::min(3, sum);

  a.bAli = cs.front().bAli;
  a.bAliInverse = cs.back().bAliInverse;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i > 0 && !cs[i].bChain) a.bAli = false;
    if (i + 1 < cs.size() && !cs[i].bChain) a.bAliInverse = false;
  }
  a.bDisjointAli = false;

  const bool rest_chain_after_first = [&] {
    for (std::size_t i = 1; i < cs.size(); ++i) {
      if (!cs[i].bChain) return false;
    }
    return true;
  }();
  const bool rest_chain_before_last = [&] {
    for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
      if (!cs[i].bChain) return false;
    }
    return true;
  }();
  const NodeAttributes& first = cs.front();
  const NodeAttributes& last = cs.back();
  if (variant == TreeVariant::Grouped) {
    a.bAli11BasedChain = first.bDisjointAli && first.iHeight1_2_More == 1 && rest_chain_after_first;
    a.bAli21BasedChain = first.bDisjointAli && first.iHeight1_2_More == 2 && rest_chain_after_first;
    a.bAli11EndedChain = last.bDisjointAli && last.iHeight1_2_More == 1 && rest_chain_before_last;
    a.bAli21EndedChain = last.bDisjointAli && last.iHeight1_2_More == 2 && rest_chain_before_last;
  } else {
    a.bAli11BasedChain =
        (first.bAli11BasedChain || (first.bDisjointAli && first.iHeight1_2_More == 1)) &&
        last.bChain;
    a.bAli21BasedChain =
        (first.bAli21BasedChain || (first.bDisjointAli && first.iHeight1_2_More == 2)) &&
        last.bChain;
    a.bAli11EndedChain =
        (last.bAli11EndedChain || (last.bDisjointAli && last.iHeight1_2_More == 1)) &&
        first.bChain;
    a.bAli21EndedChain =
        (last.bAli21EndedChain || (last.bDisjointAli && last.iHeight1_2_More == 2)) &&
        first.bChain;
  }

  a.bAntichain = false;
  a.bNacli = a.bChain;
  return a;
}

AttributeTree eval_attrs(const MDNode& node, const Poset& p, TreeVariant variant) {
  AttributeTree out;
  switch (node.kind) {
    case MDNode::Kind::Leaf: {
      NodeAttributes a;
      a.bLeaf = true;
      a.bChain = true;
      a.iHeight1_2_More = 1;
      a.iLongestChain = 1;
      a.bAli = true;
      a.bAliInverse = true;
      a.bDisjointAli = false;
      a.bAntichain = true;
      a.bNacli = true;
      out.attrs = a;
      return out;
    }
    case MDNode::Kind::Prime: {
      NodeAttributes a;
      // Prime modules cannot occur inside the recognized classes; only the
      // chain-length attribute stays informative.
      a.iLongestChain = longest_chain_in(p, node.elements);
      a.iHeight1_2_More = static_cast<int>(std::min<long long>(3, a.iLongestChain));
      out.attrs = a;
      for (const auto& c : node.children) out.children.push_back(eval_attrs(c, p, variant));
      return out;
    }
    case MDNode::Kind::Sum:
    case MDNode::Kind::Series: {
      std::vector<NodeAttributes> cs;
      for (const auto& c : node.children) {
        out.children.push_back(eval_attrs(c, p, variant));
        cs.push_back(out.children.back().attrs);
      }
      out.attrs = node.kind == MDNode::Kind::Sum ? combine_sum(cs, variant)
                                                 : combine_series(cs, variant);
      return out;
    }
  }
  throw std::logic_error("bad node kind");
}

}  // namespace

AttributeResult compute_attributes(const MDTree& t, TreeVariant variant) {
  AttributeResult result;
  result.tree = variant == TreeVariant::Binary ? binarize(t.root) : t.root;
  result.attributes = eval_attrs(result.tree, t.poset, variant);
  return result;
}

NodeAttributes root_attributes(const Poset& p, TreeVariant variant) {
  return compute_attributes(modular_decomposition(p), variant).attributes.attrs;
}

bool automaton_is_ali(const Poset& p, TreeVariant variant) {
  if (p.empty()) return true;
  return root_attributes(p, variant).bAli;
}

bool automaton_is_nacli(const Poset& p, TreeVariant variant) {
  if (p.empty()) return true;
  return root_attributes(p, variant).bNacli;
}

}  // namespace posets
