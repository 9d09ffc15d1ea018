#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "homaff/error.hpp"
#include "homaff/permutation.hpp"

namespace homaff {

/// A finite quandle given by its multiplication table.
///
/// Construction through `from_table` scans, in lexicographic order,
/// idempotence (a*a = a), bijectivity of each row L_a, and left
/// self-distributivity a*(b*c) = (a*b)*(a*c); the first witness found is
/// reported in a QuandleError. Instances are immutable.
class Quandle {
 public:
  static Quandle from_table(const std::vector<std::vector<Element>>& rows);

  /// Skips the O(n^3) axiom scan. Only for tables that are quandles by
  /// construction; the table must still be a square array of valid entries.
  static Quandle from_trusted_table(std::size_t n, std::vector<Element> flat);

  std::size_t size() const noexcept { return n_; }

  Element operator()(Element a, Element b) const { return table_[a * n_ + b]; }
  std::span<const Element> row(Element a) const {
    return {table_.data() + a * n_, n_};
  }
  std::span<const Element> flat_table() const noexcept { return table_; }

  /// The unique y with a*y = c.
  Element left_divide(Element a, Element c) const;

  /// L_a : b -> a*b.
  Permutation left_translation(Element a) const;

  bool operator==(const Quandle&) const = default;

 private:
  Quandle(std::size_t n, std::vector<Element> flat)
      : n_(n), table_(std::move(flat)) {}

  std::size_t n_ = 0;
  std::vector<Element> table_;
};

/// A partition of {0, ..., n-1} into nonempty blocks.
///
/// Canonical form: each block sorted ascending, blocks sorted by their
/// minimum element; block i is labelled i.
class Partition {
 public:
  /// Throws QuandleError(InvalidPartition) unless blocks are nonempty,
  /// disjoint, and cover {0, ..., n-1}.
  static Partition from_blocks(std::size_t n,
                               std::vector<std::vector<Element>> blocks);

  /// Block label per element; labels need not be contiguous.
  static Partition from_labels(std::span<const std::size_t> labels);

  static Partition discrete(std::size_t n);

  std::size_t size() const noexcept { return block_of_.size(); }
  std::size_t num_blocks() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<Element>>& blocks() const noexcept {
    return blocks_;
  }
  const std::vector<Element>& block(std::size_t i) const { return blocks_[i]; }
  std::size_t block_of(Element x) const { return block_of_[x]; }

  std::vector<std::size_t> block_sizes() const;

  bool operator==(const Partition&) const = default;

 private:
  Partition() = default;

  std::vector<std::vector<Element>> blocks_;
  std::vector<std::size_t> block_of_;
};

/// Quandle on the blocks of `congruence`, [a]*[b] = [a*b], block i of the
/// canonical partition becoming element i. Throws
/// QuandleError(NotACongruence) with witness (a, a', b, b').
Quandle quotient(const Quandle& q, const Partition& congruence);

/// The subquandle induced on `subset`, relabelled in ascending order.
/// Throws QuandleError(Malformed) if `subset` is not closed under *.
Quandle induced_subquandle(const Quandle& q, std::span<const Element> subset);

/// Isomorphism search by backtracking with product propagation. Returns
/// the image of each element of `lhs` in `rhs`, or nullopt.
std::optional<std::vector<Element>> is_isomorphic(const Quandle& lhs,
                                                  const Quandle& rhs);

/// Relabels q through the bijection `relabel` (x -> relabel[x]).
Quandle relabeled(const Quandle& q, std::span<const Element> relabel);

}  // namespace homaff
