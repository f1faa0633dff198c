#include "posets/poset.hpp"

#include <algorithm>
#include <cassert>

namespace posets {

namespace {

std::shared_ptr<const Poset::Data> empty_data() {
  static const auto data = std::make_shared<Poset::Data>();
  return data;
}

// Classical cubic reachability closure on a dense matrix.
void close_transitively(std::vector<std::uint8_t>& lt, int n) {
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!lt[static_cast<std::size_t>(i) * n + k]) continue;
      const std::size_t row_k = static_cast<std::size_t>(k) * n;
      const std::size_t row_i = static_cast<std::size_t>(i) * n;
      for (int j = 0; j < n; ++j) {
        if (lt[row_k + j]) lt[row_i + j] = 1;
      }
    }
  }
}

}  // namespace

Poset::Poset() : data_(empty_data()) {}

Poset Poset::from_relations(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& less_than) {
  auto data = std::make_shared<Data>();
  data->ids = std::move(elements);
  const int n = static_cast<int>(data->ids.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (data->ids[static_cast<std::size_t>(i)] == data->ids[static_cast<std::size_t>(j)]) {
        throw ParseError(ParseError::Kind::DuplicateElement,
                         "duplicate element id: " + data->ids[static_cast<std::size_t>(i)]);
      }
    }
  }
  data->lt.assign(static_cast<std::size_t>(n) * n, 0);
  Poset p(data);
  for (const auto& [x, y] : less_than) {
    const int xi = p.index_checked(x);
    const int yi = p.index_checked(y);
    if (xi == yi) {
      throw ParseError(ParseError::Kind::Cycle, "relation " + x + " < " + x + " is reflexive");
    }
    data->lt[static_cast<std::size_t>(xi) * n + yi] = 1;
  }
  close_transitively(data->lt, n);
  for (int i = 0; i < n; ++i) {
    if (data->lt[static_cast<std::size_t>(i) * n + i]) {
      throw ParseError(ParseError::Kind::Cycle,
                       "relations form a cycle through element " +
                           data->ids[static_cast<std::size_t>(i)]);
    }
  }
  return p;
}

Poset Poset::from_closed_matrix(std::vector<std::string> elements,
                                std::vector<std::uint8_t> lt) {
  auto data = std::make_shared<Data>();
  assert(lt.size() == elements.size() * elements.size());
#ifndef NDEBUG
  const std::size_t n = elements.size();
  for (std::size_t i = 0; i < n; ++i) {
    assert(!lt[i * n + i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (!lt[i * n + j]) continue;
      assert(!lt[j * n + i]);
      for (std::size_t k = 0; k < n; ++k) {
        if (lt[j * n + k]) assert(lt[i * n + k]);
      }
    }
  }
#endif
  data->ids = std::move(elements);
  data->lt = std::move(lt);
  return Poset(std::move(data));
}

int Poset::index(const std::string& id) const {
  const auto& ids = data_->ids;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] == id) return static_cast<int>(i);
  }
  return -1;
}

int Poset::index_checked(const std::string& id) const {
  const int i = index(id);
  if (i < 0) throw ParseError(ParseError::Kind::UnknownElement, "unknown element id: " + id);
  return i;
}

bool Poset::less(const std::string& x, const std::string& y) const {
  return less(index_checked(x), index_checked(y));
}

OrderRel Poset::relation(int i, int j) const {
  if (i == j) return OrderRel::Equal;
  if (less(i, j)) return OrderRel::Less;
  if (less(j, i)) return OrderRel::Greater;
  return OrderRel::Incomparable;
}

int Poset::relation_count() const {
  int count = 0;
  for (std::uint8_t v : data_->lt) count += v != 0;
  return count;
}

bool Poset::operator==(const Poset& other) const {
  return data_ == other.data_ ||
         (data_->ids == other.data_->ids && data_->lt == other.data_->lt);
}

Poset inverse(const Poset& p) {
  const int n = p.size();
  std::vector<std::uint8_t> lt(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (p.less(i, j)) lt[static_cast<std::size_t>(j) * n + i] = 1;
    }
  }
  return Poset::from_closed_matrix(p.elements(), std::move(lt));
}

Poset induced(const Poset& p, const std::vector<std::string>& subset) {
  std::vector<int> picked;
  picked.reserve(subset.size());
  for (const auto& id : subset) picked.push_back(p.index_checked(id));
  std::sort(picked.begin(), picked.end());
  picked.erase(std::unique(picked.begin(), picked.end()), picked.end());

  const int m = static_cast<int>(picked.size());
  std::vector<std::string> ids;
  ids.reserve(picked.size());
  for (int i : picked) ids.push_back(p.id(i));
  std::vector<std::uint8_t> lt(static_cast<std::size_t>(m) * m, 0);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (p.less(picked[static_cast<std::size_t>(a)], picked[static_cast<std::size_t>(b)])) {
        lt[static_cast<std::size_t>(a) * m + b] = 1;
      }
    }
  }
  return Poset::from_closed_matrix(std::move(ids), std::move(lt));
}

namespace {

Poset combine(const std::vector<Poset>& parts, bool compose) {
  std::vector<std::string> ids;
  std::vector<int> offsets;
  int total = 0;
  for (std::size_t part = 0; part < parts.size(); ++part) {
    offsets.push_back(total);
    total += parts[part].size();
    const std::string prefix = std::to_string(part) + ".";
    for (const auto& id : parts[part].elements()) ids.push_back(prefix + id);
  }
  std::vector<std::uint8_t> lt(static_cast<std::size_t>(total) * total, 0);
  for (std::size_t part = 0; part < parts.size(); ++part) {
    const Poset& q = parts[part];
    const int off = offsets[part];
    for (int i = 0; i < q.size(); ++i) {
      for (int j = 0; j < q.size(); ++j) {
        if (q.less(i, j)) lt[static_cast<std::size_t>(off + i) * total + (off + j)] = 1;
      }
    }
    if (compose) {
      for (std::size_t later = part + 1; later < parts.size(); ++later) {
        for (int i = 0; i < q.size(); ++i) {
          for (int j = 0; j < parts[later].size(); ++j) {
            lt[static_cast<std::size_t>(off + i) * total + (offsets[later] + j)] = 1;
          }
        }
      }
    }
  }
  return Poset::from_closed_matrix(std::move(ids), std::move(lt));
}

}  // namespace

Poset disjoint_sum(const std::vector<Poset>& parts) { return combine(parts, false); }

Poset order_composition(const std::vector<Poset>& parts) { return combine(parts, true); }

std::vector<std::pair<std::string, std::string>> covers(const Poset& p) {
  std::vector<std::pair<std::string, std::string>> result;
  const int n = p.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!p.less(i, j)) continue;
      bool direct = true;
      for (int k = 0; k < n && direct; ++k) {
        if (p.less(i, k) && p.less(k, j)) direct = false;
      }
      if (direct) result.emplace_back(p.id(i), p.id(j));
    }
  }
  return result;
}

Poset chain_poset(const std::vector<std::string>& ids) {
  std::vector<std::pair<std::string, std::string>> rel;
  for (std::size_t i = 0; i + 1 < ids.size(); ++i) rel.emplace_back(ids[i], ids[i + 1]);
  return Poset::from_relations(ids, rel);
}

Poset antichain_poset(const std::vector<std::string>& ids) {
  return Poset::from_relations(ids, {});
}

}  // namespace posets
