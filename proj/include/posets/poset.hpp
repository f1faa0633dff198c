#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace posets {

/// Relation between two elements of a partial order.
enum class OrderRel : std::uint8_t { Equal, Less, Greater, Incomparable };

/// Error raised while building a poset from external input.
class ParseError : public std::runtime_error {
public:
  enum class Kind { Syntax, Cycle, DuplicateElement, UnknownElement };

  ParseError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

/// A finite strict partial order over named elements.
///
/// The relation is stored transitively closed as a dense boolean matrix
/// indexed by element position. Values are immutable after construction and
/// cheap to copy (shared internal state), so they can be used freely across
/// threads.
class Poset {
public:
  Poset();  // the empty poset

  /// Builds a poset from declared strict relations. The transitive closure
  /// is applied; element order is the declaration order.
  ///
  /// Throws ParseError on duplicate element ids, relation endpoints that are
  /// not declared elements, or relations whose closure would create a cycle.
  static Poset from_relations(
      std::vector<std::string> elements,
      const std::vector<std::pair<std::string, std::string>>& less_than);

  /// Trusted constructor for an already transitively closed matrix.
  /// `lt` is row-major, size n*n, lt[i*n+j] != 0 meaning element i < j.
  static Poset from_closed_matrix(std::vector<std::string> elements,
                                  std::vector<std::uint8_t> lt);

  int size() const { return static_cast<int>(data_->ids.size()); }
  bool empty() const { return data_->ids.empty(); }
  const std::vector<std::string>& elements() const { return data_->ids; }
  const std::string& id(int i) const { return data_->ids[static_cast<std::size_t>(i)]; }

  /// Position of `id`, or -1 when absent. Linear scan; element counts are
  /// desk-scale by design.
  int index(const std::string& id) const;
  int index_checked(const std::string& id) const;  // throws ParseError(UnknownElement)

  bool less(int i, int j) const {
    return data_->lt[static_cast<std::size_t>(i) * data_->ids.size() +
                     static_cast<std::size_t>(j)] != 0;
  }
  bool less(const std::string& x, const std::string& y) const;
  bool comparable(int i, int j) const { return less(i, j) || less(j, i); }
  OrderRel relation(int i, int j) const;

  const std::vector<std::uint8_t>& matrix() const { return data_->lt; }

  /// Number of comparable pairs (x, y) with x < y.
  int relation_count() const;

  bool operator==(const Poset& other) const;
  bool operator!=(const Poset& other) const { return !(*this == other); }

  struct Data {
    std::vector<std::string> ids;
    std::vector<std::uint8_t> lt;
  };

private:
  explicit Poset(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// Same elements, reversed relation.
Poset inverse(const Poset& p);

/// Restriction to a subset of the elements, original order preserved.
/// Throws ParseError(UnknownElement) on ids not in `p`.
Poset induced(const Poset& p, const std::vector<std::string>& subset);

/// Disjoint union. Element ids are namespaced by part index ("0.a", "1.a")
/// so parts can never capture each other's names.
Poset disjoint_sum(const std::vector<Poset>& parts);

/// Ordered composition: every element of part i is below every element of
/// part j for i < j. Ids namespaced as in disjoint_sum.
Poset order_composition(const std::vector<Poset>& parts);

/// Cover pairs (x, y): x < y with no z strictly between.
std::vector<std::pair<std::string, std::string>> covers(const Poset& p);

// Convenience builders used throughout the tests and the CLI.
Poset chain_poset(const std::vector<std::string>& ids);
Poset antichain_poset(const std::vector<std::string>& ids);

}  // namespace posets
