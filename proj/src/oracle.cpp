#include "posets/oracle.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace posets {

// ---------------------------------------------------------------------------
// Embedding search
// ---------------------------------------------------------------------------

namespace {

struct SearchContext {
  const Poset* pattern;
  const Poset* host;
  const LevelDecomposition* pattern_ld;
  const LevelDecomposition* host_ld;
  EmbeddingKind kind;
  std::vector<int> order;       // pattern elements, assignment order
  std::vector<int> assignment;  // by pattern index, -1 unassigned
  std::vector<char> used;       // by host index
};

bool pair_ok(const SearchContext& c, int pi, int pj, int hi, int hj) {
  if (c.pattern->less(pi, pj) != c.host->less(hi, hj)) return false;
  if (c.pattern->less(pj, pi) != c.host->less(hj, hi)) return false;
  if (c.kind == EmbeddingKind::LevelInduced) {
    const bool peq = c.pattern_ld->level(pi) == c.pattern_ld->level(pj);
    const bool heq = c.host_ld->level(hi) == c.host_ld->level(hj);
    if (peq != heq) return false;
  } else if (c.kind == EmbeddingKind::ConsecutiveLevelInduced) {
    if (std::abs(c.pattern_ld->level(pi) - c.pattern_ld->level(pj)) !=
        std::abs(c.host_ld->level(hi) - c.host_ld->level(hj))) {
      return false;
    }
  }
  return true;
}

bool search(SearchContext& c, std::size_t depth) {
  if (depth == c.order.size()) return true;
  const int pi = c.order[depth];
  for (int h = 0; h < c.host->size(); ++h) {
    if (c.used[static_cast<std::size_t>(h)]) continue;
    bool ok = true;
    for (std::size_t d = 0; d < depth && ok; ++d) {
      const int pj = c.order[d];
      ok = pair_ok(c, pj, pi, c.assignment[static_cast<std::size_t>(pj)], h);
    }
    if (!ok) continue;
    c.assignment[static_cast<std::size_t>(pi)] = h;
    c.used[static_cast<std::size_t>(h)] = 1;
    if (search(c, depth + 1)) return true;
    c.used[static_cast<std::size_t>(h)] = 0;
    c.assignment[static_cast<std::size_t>(pi)] = -1;
  }
  return false;
}

bool run_search(const Poset& pattern, const LevelDecomposition& pattern_ld, const Poset& host,
                const LevelDecomposition& host_ld, EmbeddingKind kind, bool canonical,
                std::vector<int>* out_assignment) {
  const int k = pattern.size();
  if (k > host.size()) return false;
  if (pattern_ld.height() > host_ld.height()) return false;  // chains must fit

  SearchContext c;
  c.pattern = &pattern;
  c.host = &host;
  c.pattern_ld = &pattern_ld;
  c.host_ld = &host_ld;
  c.kind = kind;
  c.order.resize(static_cast<std::size_t>(k));
  std::iota(c.order.begin(), c.order.end(), 0);
  if (!canonical) {
    // Most-constrained first: elements with many comparabilities prune best.
    std::vector<int> degree(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        if (pattern.comparable(i, j)) ++degree[static_cast<std::size_t>(i)];
      }
    }
    std::stable_sort(c.order.begin(), c.order.end(),
                     [&](int a, int b) { return degree[static_cast<std::size_t>(a)] >
                                                degree[static_cast<std::size_t>(b)]; });
  }
  c.assignment.assign(static_cast<std::size_t>(k), -1);
  c.used.assign(static_cast<std::size_t>(host.size()), 0);
  if (!search(c, 0)) return false;
  if (out_assignment) *out_assignment = std::move(c.assignment);
  return true;
}

}  // namespace

bool oracle_exists(const Poset& pattern, const LevelDecomposition& pattern_ld,
                   const Poset& host, const LevelDecomposition& host_ld, EmbeddingKind kind) {
  return run_search(pattern, pattern_ld, host, host_ld, kind, false, nullptr);
}

bool oracle_exists(const Poset& pattern, const Poset& host, EmbeddingKind kind) {
  return oracle_exists(pattern, level_decomposition(pattern), host, level_decomposition(host),
                       kind);
}

std::optional<Embedding> oracle_find(const Poset& pattern, const LevelDecomposition& pattern_ld,
                                     const Poset& host, const LevelDecomposition& host_ld,
                                     EmbeddingKind kind) {
  if (!run_search(pattern, pattern_ld, host, host_ld, kind, false, nullptr)) return std::nullopt;
  std::vector<int> assignment;
  if (!run_search(pattern, pattern_ld, host, host_ld, kind, true, &assignment)) {
    throw std::logic_error("embedding existence and canonical search disagree");
  }
  ElementMap map;
  map.reserve(assignment.size());
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    map.emplace_back(pattern.id(static_cast<int>(i)), host.id(assignment[i]));
  }
  return make_embedding(pattern, pattern_ld, host, host_ld, std::move(map));
}

std::optional<Embedding> oracle_find(const Poset& pattern, const Poset& host,
                                     EmbeddingKind kind) {
  return oracle_find(pattern, level_decomposition(pattern), host, level_decomposition(host),
                     kind);
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

namespace detail {

void extend(const CompactPoset& base, const std::function<void(const CompactPoset&)>& fn) {
  const int k = base.n;
  const unsigned full = (1u << k) - 1u;
  std::array<unsigned, 8> below{};  // below[i]: elements under i
  std::array<unsigned, 8> above{};
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (base.less(j, i)) below[static_cast<std::size_t>(i)] |= 1u << j;
      if (base.less(i, j)) above[static_cast<std::size_t>(i)] |= 1u << j;
    }
  }
  std::array<unsigned, 64 + 1> downs{};
  std::array<unsigned, 64 + 1> ups{};
  std::size_t n_downs = 0;
  std::size_t n_ups = 0;
  for (unsigned m = 0; m <= full; ++m) {
    bool down_ok = true;
    bool up_ok = true;
    for (int i = 0; i < k; ++i) {
      if (!((m >> i) & 1u)) continue;
      if (below[static_cast<std::size_t>(i)] & ~m) down_ok = false;
      if (above[static_cast<std::size_t>(i)] & ~m) up_ok = false;
    }
    if (down_ok) downs[n_downs++] = m;
    if (up_ok) ups[n_ups++] = m;
  }
  // New element at index k: D below it, U above it; D x U must already be
  // comparable so the extension stays transitively closed.
  for (std::size_t di = 0; di < n_downs; ++di) {
    const unsigned d = downs[di];
    for (std::size_t ui = 0; ui < n_ups; ++ui) {
      const unsigned u = ups[ui];
      if (d & u) continue;
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        if ((d >> i) & 1u) ok = (u & ~above[static_cast<std::size_t>(i)]) == 0;
      }
      if (!ok) continue;
      CompactPoset child;
      child.n = k + 1;
      child.lt = base.lt;
      for (int i = 0; i < k; ++i) {
        if ((d >> i) & 1u) child.lt |= 1ull << (i * 8 + k);
        if ((u >> i) & 1u) child.lt |= 1ull << (k * 8 + i);
      }
      fn(child);
    }
  }
}

const std::vector<CompactPoset>& compact_posets(int n) {
  if (n < 0 || n > 6) throw std::invalid_argument("compact_posets supports 0 <= n <= 6");
  static std::mutex mutex;
  static std::array<std::vector<CompactPoset>, 7> cache;
  static std::array<bool, 7> ready{};
  std::lock_guard<std::mutex> lock(mutex);
  for (int m = 0; m <= n; ++m) {
    if (ready[static_cast<std::size_t>(m)]) continue;
    std::vector<CompactPoset> out;
    if (m == 0) {
      out.push_back(CompactPoset{});
    } else {
      for (const auto& base : cache[static_cast<std::size_t>(m - 1)]) {
        extend(base, [&](const CompactPoset& child) { out.push_back(child); });
      }
    }
    cache[static_cast<std::size_t>(m)] = std::move(out);
    ready[static_cast<std::size_t>(m)] = true;
  }
  return cache[static_cast<std::size_t>(n)];
}

Poset to_poset(const CompactPoset& cp) {
  std::vector<std::string> ids;
  ids.reserve(static_cast<std::size_t>(cp.n));
  for (int i = 0; i < cp.n; ++i) ids.emplace_back(1, static_cast<char>('a' + i));
  std::vector<std::uint8_t> lt(static_cast<std::size_t>(cp.n) * cp.n, 0);
  for (int i = 0; i < cp.n; ++i) {
    for (int j = 0; j < cp.n; ++j) {
      if (cp.less(i, j)) lt[static_cast<std::size_t>(i) * cp.n + j] = 1;
    }
  }
  return Poset::from_closed_matrix(std::move(ids), std::move(lt));
}

}  // namespace detail

PosetEnumeration::PosetEnumeration(int n) : n_(n) {
  if (n < 0 || n > 7) {
    throw std::invalid_argument("poset enumeration is guarded at 0 <= n <= 7");
  }
}

void PosetEnumeration::for_each(const std::function<void(const Poset&)>& fn) const {
  if (n_ == 0) {
    fn(Poset());
    return;
  }
  for (const auto& base : detail::compact_posets(n_ - 1)) {
    detail::extend(base, [&](const detail::CompactPoset& child) { fn(detail::to_poset(child)); });
  }
}

std::uint64_t PosetEnumeration::count() const {
  if (n_ == 0) return 1;
  std::uint64_t total = 0;
  for (const auto& base : detail::compact_posets(n_ - 1)) {
    detail::extend(base, [&](const detail::CompactPoset&) { ++total; });
  }
  return total;
}

PosetEnumeration enumerate_posets(int n) { return PosetEnumeration(n); }

std::uint64_t count_posets(int n) { return PosetEnumeration(n).count(); }

// ---------------------------------------------------------------------------
// Lifts
// ---------------------------------------------------------------------------

namespace {

std::string fresh_name(std::string candidate, const std::vector<std::string>& taken) {
  auto clashes = [&](const std::string& s) {
    return std::find(taken.begin(), taken.end(), s) != taken.end();
  };
  while (clashes(candidate)) candidate += "_";
  return candidate;
}

// Level-respecting order: stable sort by level keeps declaration order
// within a level.
std::vector<int> level_respecting_order(const LevelDecomposition& ld) {
  std::vector<int> order(static_cast<std::size_t>(ld.poset().size()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return ld.level(a) < ld.level(b); });
  return order;
}

void require_nonempty(const Poset& p) {
  if (p.empty()) throw std::invalid_argument("lift needs a nonempty input");
}

}  // namespace

Poset lift_width2(const Poset& p_prime) {
  require_nonempty(p_prime);
  const LevelDecomposition ld = level_decomposition(p_prime);
  const std::vector<int> f = level_respecting_order(ld);
  const int n = p_prime.size();

  std::vector<std::string> ids = p_prime.elements();
  std::vector<std::string> chain_ids;
  for (int i = 0; i < n; ++i) {
    chain_ids.push_back(fresh_name("w" + std::to_string(i), ids));
    ids.push_back(chain_ids.back());
  }
  std::vector<std::pair<std::string, std::string>> rel;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (p_prime.less(i, j)) rel.emplace_back(p_prime.id(i), p_prime.id(j));
    }
  }
  for (int i = 0; i + 1 < n; ++i) rel.emplace_back(chain_ids[static_cast<std::size_t>(i)],
                                                   chain_ids[static_cast<std::size_t>(i + 1)]);
  // w_{j-1} below the j-th element of the level order; closure supplies the
  // earlier chain elements and everything above.
  for (int j = 1; j < n; ++j) {
    rel.emplace_back(chain_ids[static_cast<std::size_t>(j - 1)],
                     p_prime.id(f[static_cast<std::size_t>(j)]));
  }
  return Poset::from_relations(std::move(ids), rel);
}

namespace {

Poset lift_with_private_chains(const Poset& p_prime, const std::vector<int>& chain_lengths) {
  const int n = p_prime.size();
  std::vector<std::string> ids = p_prime.elements();
  std::vector<std::pair<std::string, std::string>> rel;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (p_prime.less(i, j)) rel.emplace_back(p_prime.id(i), p_prime.id(j));
    }
  }
  for (int e = 0; e < n; ++e) {
    const int len = chain_lengths[static_cast<std::size_t>(e)];
    std::string prev;
    for (int j = 0; j < len; ++j) {
      std::string name =
          fresh_name("s" + std::to_string(e) + "_" + std::to_string(j), ids);
      ids.push_back(name);
      if (j > 0) rel.emplace_back(prev, name);
      prev = std::move(name);
    }
    if (len > 0) rel.emplace_back(prev, p_prime.id(e));
  }
  return Poset::from_relations(std::move(ids), rel);
}

}  // namespace

Poset lift_scatter(const Poset& p_prime) {
  require_nonempty(p_prime);
  const LevelDecomposition ld = level_decomposition(p_prime);
  const std::vector<int> f = level_respecting_order(ld);
  std::vector<int> lengths(static_cast<std::size_t>(p_prime.size()), 0);
  for (int pos = 0; pos < p_prime.size(); ++pos) {
    lengths[static_cast<std::size_t>(f[static_cast<std::size_t>(pos)])] = pos;
  }
  return lift_with_private_chains(p_prime, lengths);
}

Poset lift_gap(const Poset& p_prime, int gamma) {
  require_nonempty(p_prime);
  if (gamma < 1) throw std::invalid_argument("gap lift needs gamma >= 1");
  const LevelDecomposition ld = level_decomposition(p_prime);
  std::vector<int> lengths(static_cast<std::size_t>(p_prime.size()), 0);
  for (int e = 0; e < p_prime.size(); ++e) {
    lengths[static_cast<std::size_t>(e)] = gamma * ld.level(e);
  }
  return lift_with_private_chains(p_prime, lengths);
}

Poset lift_gap(const Poset& p_prime) { return lift_gap(p_prime, p_prime.size() + 1); }

Poset lift_single_chain(const Poset& p_prime, int gamma) {
  require_nonempty(p_prime);
  if (gamma < 2) throw std::invalid_argument("single-chain lift needs gamma >= 2");
  const LevelDecomposition ld = level_decomposition(p_prime);
  const int height = ld.height();
  const int chain_len = gamma * height;

  std::vector<std::string> ids = p_prime.elements();
  std::vector<std::string> chain_ids;
  for (int j = 0; j < chain_len; ++j) {
    chain_ids.push_back(fresh_name("g" + std::to_string(j), ids));
    ids.push_back(chain_ids.back());
  }
  std::vector<std::pair<std::string, std::string>> rel;
  for (int i = 0; i < p_prime.size(); ++i) {
    for (int j = 0; j < p_prime.size(); ++j) {
      if (p_prime.less(i, j)) rel.emplace_back(p_prime.id(i), p_prime.id(j));
    }
  }
  for (int j = 0; j + 1 < chain_len; ++j) {
    rel.emplace_back(chain_ids[static_cast<std::size_t>(j)],
                     chain_ids[static_cast<std::size_t>(j + 1)]);
  }
  for (int e = 0; e < p_prime.size(); ++e) {
    const int l = ld.level(e);
    if (l > 0) {
      rel.emplace_back(chain_ids[static_cast<std::size_t>(gamma * l - 1)], p_prime.id(e));
    }
  }
  return Poset::from_relations(std::move(ids), rel);
}

}  // namespace posets
