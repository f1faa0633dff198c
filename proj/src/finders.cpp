#include "posets/finders.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace posets {

namespace {

[[noreturn]] void bad_parameter(const std::string& what) { throw std::invalid_argument(what); }

}  // namespace

PatternSpec PatternSpec::make_chain(int s) {
  if (s < 1) bad_parameter("chain size must be positive");
  return PatternSpec{Kind::Chain, s, s, 0};
}

PatternSpec PatternSpec::chain_plus_point(int s) {
  if (s < 1 || s > 2) bad_parameter("chain-plus-point chain size must be 1 or 2");
  return PatternSpec{Kind::ChainPlusPoint, s, s + 1, 1};
}

PatternSpec PatternSpec::based11(int k) {
  if (k < 3) bad_parameter("a (1,1)-based chain has at least 3 elements");
  return PatternSpec{Kind::Based11Chain, k - 2, k, 0};
}

PatternSpec PatternSpec::based21(int k) {
  if (k < 4) bad_parameter("a (2,1)-based chain has at least 4 elements");
  return PatternSpec{Kind::Based21Chain, k - 3, k, 0};
}

PatternSpec PatternSpec::ended11(int k) {
  if (k < 3) bad_parameter("a (1,1)-ended chain has at least 3 elements");
  return PatternSpec{Kind::Ended11Chain, k - 2, k, 0};
}

PatternSpec PatternSpec::ended21(int k) {
  if (k < 4) bad_parameter("a (2,1)-ended chain has at least 4 elements");
  return PatternSpec{Kind::Ended21Chain, k - 3, k, 0};
}

PatternSpec PatternSpec::nacli(int s, int r) {
  if (s < 1) bad_parameter("nacli chain size must be positive");
  if (r < 0) bad_parameter("nacli antichain size must be nonnegative");
  return PatternSpec{Kind::NacliChainAntichain, s, s + r, r};
}

PatternSpec PatternSpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) bad_parameter("pattern spec needs a ':' parameter");
  const std::string name = text.substr(0, colon);
  const std::string args = text.substr(colon + 1);
  auto to_int = [](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      bad_parameter("bad pattern parameter: " + s);
    }
  };
  if (name == "chain") return make_chain(to_int(args));
  if (name == "chainpoint") return chain_plus_point(to_int(args));
  if (name == "based11") return based11(to_int(args));
  if (name == "based21") return based21(to_int(args));
  if (name == "ended11") return ended11(to_int(args));
  if (name == "ended21") return ended21(to_int(args));
  if (name == "nacli") {
    const auto plus = args.find('+');
    if (plus == std::string::npos) bad_parameter("nacli pattern is \"nacli:S+R\"");
    return nacli(to_int(args.substr(0, plus)), to_int(args.substr(plus + 1)));
  }
  bad_parameter("unknown pattern family: " + name);
}

std::string PatternSpec::to_string() const {
  switch (kind) {
    case Kind::Chain: return "chain:" + std::to_string(chain);
    case Kind::ChainPlusPoint: return "chainpoint:" + std::to_string(chain);
    case Kind::Based11Chain: return "based11:" + std::to_string(total);
    case Kind::Based21Chain: return "based21:" + std::to_string(total);
    case Kind::Ended11Chain: return "ended11:" + std::to_string(total);
    case Kind::Ended21Chain: return "ended21:" + std::to_string(total);
    case Kind::NacliChainAntichain:
      return "nacli:" + std::to_string(chain) + "+" + std::to_string(antichain);
  }
  return "?";
}

int PatternSpec::total_size() const { return total; }

bool PatternSpec::is_ali_pattern() const {
  switch (kind) {
    case Kind::Chain:
    case Kind::ChainPlusPoint:
    case Kind::Based11Chain:
    case Kind::Based21Chain:
      return true;
    default:
      return false;
  }
}

namespace {

std::vector<std::string> numbered(const std::string& prefix, int count, int from = 0) {
  std::vector<std::string> ids;
  ids.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) ids.push_back(prefix + std::to_string(from + i));
  return ids;
}

}  // namespace

Poset pattern_poset(const PatternSpec& spec) {
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> rel;
  auto add_chain = [&](const std::vector<std::string>& chain) {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) rel.emplace_back(chain[i], chain[i + 1]);
  };
  switch (spec.kind) {
    case PatternSpec::Kind::Chain: {
      ids = numbered("c", spec.chain);
      add_chain(ids);
      break;
    }
    case PatternSpec::Kind::ChainPlusPoint: {
      ids = numbered("c", spec.chain);
      add_chain(ids);
      ids.push_back("z");
      break;
    }
    case PatternSpec::Kind::Based11Chain: {
      ids = {"a0", "a1"};
      const auto chain = numbered("c", spec.total - 2);
      add_chain(chain);
      rel.emplace_back("a0", chain.front());
      rel.emplace_back("a1", chain.front());
      ids.insert(ids.end(), chain.begin(), chain.end());
      break;
    }
    case PatternSpec::Kind::Based21Chain: {
      ids = {"b0", "b1", "z"};
      rel.emplace_back("b0", "b1");
      const auto chain = numbered("c", spec.total - 3);
      add_chain(chain);
      rel.emplace_back("b1", chain.front());
      rel.emplace_back("z", chain.front());
      ids.insert(ids.end(), chain.begin(), chain.end());
      break;
    }
    case PatternSpec::Kind::Ended11Chain: {
      const auto chain = numbered("c", spec.total - 2);
      add_chain(chain);
      ids = chain;
      ids.push_back("a0");
      ids.push_back("a1");
      rel.emplace_back(chain.back(), "a0");
      rel.emplace_back(chain.back(), "a1");
      break;
    }
    case PatternSpec::Kind::Ended21Chain: {
      const auto chain = numbered("c", spec.total - 3);
      add_chain(chain);
      ids = chain;
      ids.push_back("b0");
      ids.push_back("b1");
      ids.push_back("z");
      rel.emplace_back("b0", "b1");
      rel.emplace_back(chain.back(), "b0");
      rel.emplace_back(chain.back(), "z");
      break;
    }
    case PatternSpec::Kind::NacliChainAntichain: {
      ids = numbered("c", spec.chain);
      add_chain(ids);
      const auto extra = numbered("y", spec.antichain, 1);
      ids.insert(ids.end(), extra.begin(), extra.end());
      break;
    }
  }
  return Poset::from_relations(std::move(ids), rel);
}

// ---------------------------------------------------------------------------
// Shared pattern cache: finders classify every result against the pattern,
// so keep the pattern poset and its decomposition around for the small sizes
// the sweeps hammer on.
// ---------------------------------------------------------------------------

namespace {

struct PatternData {
  Poset poset;
  LevelDecomposition ld;
};

std::shared_ptr<const PatternData> make_pattern_data(const PatternSpec& spec) {
  Poset p = pattern_poset(spec);
  LevelDecomposition ld = level_decomposition(p);
  return std::make_shared<const PatternData>(PatternData{std::move(p), std::move(ld)});
}

std::shared_ptr<const PatternData> cached_pattern(const PatternSpec& spec) {
  if (spec.total_size() > 16) return make_pattern_data(spec);
  struct Key {
    PatternSpec::Kind kind;
    int chain, antichain;
    bool operator<(const Key& o) const {
      if (kind != o.kind) return kind < o.kind;
      if (chain != o.chain) return chain < o.chain;
      return antichain < o.antichain;
    }
  };
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const PatternData>> cache;
  const Key key{spec.kind, spec.chain, spec.antichain};
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make_pattern_data(spec)).first;
  return it->second;
}

// Walks pred_ref s-1 times down from x; returns bottom..x.
std::vector<int> pred_walk(const LevelDecomposition& ld, int x, int s) {
  std::vector<int> chain(static_cast<std::size_t>(s));
  int cur = x;
  for (int i = s - 1; i >= 0; --i) {
    chain[static_cast<std::size_t>(i)] = cur;
    cur = ld.pred_ref(cur);
  }
  return chain;
}

std::vector<int> succ_walk(const SlcTable& slc, int x, int steps) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(steps));
  int cur = x;
  for (int i = 0; i < steps; ++i) {
    cur = slc.succ_ref[static_cast<std::size_t>(cur)];
    out.push_back(cur);
  }
  return out;
}

Embedding finish(const PatternSpec& spec, const LevelDecomposition& host_ld,
                 const std::vector<int>& image, EmbeddingKind expected_at_least) {
  const auto pattern = cached_pattern(spec);
  const Poset& host = host_ld.poset();
  ElementMap map;
  map.reserve(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    map.emplace_back(pattern->poset.id(static_cast<int>(i)), host.id(image[i]));
  }
  Embedding emb = make_embedding(pattern->poset, pattern->ld, host, host_ld, std::move(map));
  if (emb.kind < expected_at_least) {
    throw std::logic_error("finder produced a weaker embedding than its family admits");
  }
  return emb;
}

}  // namespace

SlcTable compute_slc(const Poset& p, const LevelDecomposition& ld) {
  const int n = p.size();
  SlcTable table;
  table.slc.assign(static_cast<std::size_t>(n), 1);
  table.succ_ref.assign(static_cast<std::size_t>(n), -1);
  for (int l = ld.height() - 1; l >= 0; --l) {
    for (int x : ld.levels()[static_cast<std::size_t>(l)]) {
      int best = 0;
      int ref = -1;
      for (int y = 0; y < n; ++y) {
        if (p.less(x, y) && table.slc[static_cast<std::size_t>(y)] > best) {
          best = table.slc[static_cast<std::size_t>(y)];
          ref = y;
        }
      }
      table.slc[static_cast<std::size_t>(x)] = best + 1;
      table.succ_ref[static_cast<std::size_t>(x)] = ref;
    }
  }
  return table;
}

std::optional<Embedding> find_chain(const LevelDecomposition& ld, int s) {
  const PatternSpec spec = PatternSpec::make_chain(s);
  if (ld.height() < s) return std::nullopt;
  const int x = ld.levels()[static_cast<std::size_t>(s - 1)].front();
  return finish(spec, ld, pred_walk(ld, x, s), EmbeddingKind::ConsecutiveLevelInduced);
}

std::optional<Embedding> find_chain(const Poset& p, int s) {
  return find_chain(level_decomposition(p), s);
}

std::optional<Embedding> find_chain_plus_point(const LevelDecomposition& ld, int s) {
  const PatternSpec spec = PatternSpec::chain_plus_point(s);
  const Poset& p = ld.poset();
  for (int l = s - 1; l < ld.height(); ++l) {
    for (int x : ld.levels()[static_cast<std::size_t>(l)]) {
      for (int y : ld.levels()[static_cast<std::size_t>(l - s + 1)]) {
        if (y == x || p.comparable(x, y)) continue;
        std::vector<int> image = pred_walk(ld, x, s);
        image.push_back(y);
        return finish(spec, ld, image, EmbeddingKind::ConsecutiveLevelInduced);
      }
    }
  }
  return std::nullopt;
}

std::optional<Embedding> find_chain_plus_point(const Poset& p, int s) {
  return find_chain_plus_point(level_decomposition(p), s);
}

std::optional<Embedding> find_based11(const LevelDecomposition& ld, const SlcTable& slc, int k) {
  const PatternSpec spec = PatternSpec::based11(k);
  const Poset& p = ld.poset();
  for (int x = 0; x < p.size(); ++x) {
    if (slc.slc[static_cast<std::size_t>(x)] < k - 2) continue;
    // Scan the levels below x, lowest first, for two elements under x.
    for (int l = 0; l < ld.level(x); ++l) {
      int first = -1;
      for (int z : ld.levels()[static_cast<std::size_t>(l)]) {
        if (!p.less(z, x)) continue;
        if (first < 0) {
          first = z;
          continue;
        }
        std::vector<int> image{first, z, x};
        const auto tops = succ_walk(slc, x, k - 3);
        image.insert(image.end(), tops.begin(), tops.end());
        return finish(spec, ld, image, EmbeddingKind::LevelInduced);
      }
    }
  }
  return std::nullopt;
}

std::optional<Embedding> find_based11(const Poset& p, int k) {
  const LevelDecomposition ld = level_decomposition(p);
  return find_based11(ld, compute_slc(p, ld), k);
}

std::optional<Embedding> find_based21(const LevelDecomposition& ld, const SlcTable& slc, int k) {
  const PatternSpec spec = PatternSpec::based21(k);
  const Poset& p = ld.poset();
  for (int x = 0; x < p.size(); ++x) {
    if (slc.slc[static_cast<std::size_t>(x)] < k - 3) continue;
    for (int y = 0; y < p.size(); ++y) {
      if (!p.less(y, x)) continue;
      // Classify each level below y: an element under y, and an element
      // under x that is incomparable with y, found in one level, complete
      // the base.
      for (int l = 0; l < ld.level(y); ++l) {
        int in_class1 = -1;
        int in_class2 = -1;
        for (int z : ld.levels()[static_cast<std::size_t>(l)]) {
          if (p.less(z, y)) {
            if (in_class1 < 0) in_class1 = z;
          } else if (p.less(z, x) && !p.less(y, z)) {
            if (in_class2 < 0) in_class2 = z;
          }
          if (in_class1 >= 0 && in_class2 >= 0) {
            std::vector<int> image{in_class1, y, in_class2, x};
            const auto tops = succ_walk(slc, x, k - 4);
            image.insert(image.end(), tops.begin(), tops.end());
            return finish(spec, ld, image, EmbeddingKind::LevelInduced);
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Embedding> find_based21(const Poset& p, int k) {
  const LevelDecomposition ld = level_decomposition(p);
  return find_based21(ld, compute_slc(p, ld), k);
}

std::optional<Embedding> find_ended(const Poset& p, int k, int variant) {
  if (variant != 11 && variant != 21) bad_parameter("ended variant must be 11 or 21");
  const Poset inv = inverse(p);
  const LevelDecomposition inv_ld = level_decomposition(inv);
  const SlcTable inv_slc = compute_slc(inv, inv_ld);
  const auto based = variant == 11 ? find_based11(inv_ld, inv_slc, k)
                                   : find_based21(inv_ld, inv_slc, k);
  if (!based) return std::nullopt;

  const PatternSpec spec = variant == 11 ? PatternSpec::ended11(k) : PatternSpec::ended21(k);
  const auto pattern = cached_pattern(spec);
  auto based_image = [&](const std::string& id) {
    for (const auto& [pat, host] : based->map) {
      if (pat == id) return host;
    }
    throw std::logic_error("based embedding misses element " + id);
  };

  // The ended pattern is the inverse of the based one: the chain flips end
  // for end, the antichain part stays.
  ElementMap map;
  const int chain_len = variant == 11 ? k - 2 : k - 3;
  for (int j = 0; j < chain_len; ++j) {
    map.emplace_back("c" + std::to_string(j),
                     based_image("c" + std::to_string(chain_len - 1 - j)));
  }
  if (variant == 11) {
    map.emplace_back("a0", based_image("a0"));
    map.emplace_back("a1", based_image("a1"));
  } else {
    map.emplace_back("b0", based_image("b1"));
    map.emplace_back("b1", based_image("b0"));
    map.emplace_back("z", based_image("z"));
  }
  // Reorder into pattern element order.
  ElementMap ordered;
  for (const auto& id : pattern->poset.elements()) {
    for (auto& entry : map) {
      if (entry.first == id) ordered.push_back(entry);
    }
  }
  return make_embedding(pattern->poset, pattern->ld, p, level_decomposition(p),
                        std::move(ordered));
}

std::optional<Embedding> find_nacli(const LevelDecomposition& ld, int s, int r) {
  const PatternSpec spec = PatternSpec::nacli(s, r);
  if (r == 0) {
    if (ld.height() < s) return std::nullopt;
    const int x = ld.levels()[static_cast<std::size_t>(s - 1)].front();
    return finish(spec, ld, pred_walk(ld, x, s), EmbeddingKind::ConsecutiveLevelInduced);
  }
  const Poset& p = ld.poset();
  for (int l = s - 1; l < ld.height(); ++l) {
    for (int x : ld.levels()[static_cast<std::size_t>(l)]) {
      std::vector<int> mates;
      for (int y : ld.levels()[static_cast<std::size_t>(l - s + 1)]) {
        if (y == x || p.comparable(x, y)) continue;
        mates.push_back(y);
        if (static_cast<int>(mates.size()) == r) break;
      }
      if (static_cast<int>(mates.size()) < r) continue;
      std::vector<int> image = pred_walk(ld, x, s);
      image.insert(image.end(), mates.begin(), mates.end());
      return finish(spec, ld, image, EmbeddingKind::ConsecutiveLevelInduced);
    }
  }
  return std::nullopt;
}

std::optional<Embedding> find_nacli(const Poset& p, int s, int r) {
  return find_nacli(level_decomposition(p), s, r);
}

std::optional<Embedding> find_pattern(const Poset& host, const PatternSpec& spec) {
  switch (spec.kind) {
    case PatternSpec::Kind::Chain: return find_chain(host, spec.chain);
    case PatternSpec::Kind::ChainPlusPoint: return find_chain_plus_point(host, spec.chain);
    case PatternSpec::Kind::Based11Chain: return find_based11(host, spec.total);
    case PatternSpec::Kind::Based21Chain: return find_based21(host, spec.total);
    case PatternSpec::Kind::Ended11Chain: return find_ended(host, spec.total, 11);
    case PatternSpec::Kind::Ended21Chain: return find_ended(host, spec.total, 21);
    case PatternSpec::Kind::NacliChainAntichain: return find_nacli(host, spec.chain, spec.antichain);
  }
  throw std::logic_error("bad pattern kind");
}

}  // namespace posets
