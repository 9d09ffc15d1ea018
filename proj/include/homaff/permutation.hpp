#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "homaff/error.hpp"

namespace homaff {

/// A bijection of {0, ..., n-1}, stored as its image sequence.
///
/// Maps act on the left: `(a * b)(x) == a(b(x))`.
class Permutation {
 public:
  Permutation() = default;

  /// Throws PermError(NotBijective) unless `images` is a bijection.
  explicit Permutation(std::vector<Element> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Element operator()(Element x) const { return images_[x]; }
  std::span<const Element> images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  std::size_t fixed_points() const noexcept;

  /// Cycle lengths, sorted ascending.
  std::vector<std::size_t> cycle_type() const;

  /// Conjugation `y x y^-1`, written x^y.
  Permutation conjugated_by(const Permutation& y) const;

  friend Permutation operator*(const Permutation& lhs, const Permutation& rhs);
  bool operator==(const Permutation&) const = default;

  std::size_t hash() const noexcept;

 private:
  struct Trusted {};
  Permutation(Trusted, std::vector<Element> images)
      : images_(std::move(images)) {}

  std::vector<Element> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    return p.hash();
  }
};

/// A finite permutation group, materialized element by element.
///
/// Elements are kept in discovery order of a breadth-first closure that
/// starts at the identity and scans generators in input order, so
/// `elements()[0]` is always the identity.
class PermGroup {
 public:
  /// Throws PermError(DegreeMismatch) if a generator has another degree.
  static PermGroup closure(std::size_t degree,
                           std::span<const Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& generators() const noexcept {
    return generators_;
  }
  const std::vector<Permutation>& elements() const noexcept {
    return elements_;
  }

  bool contains(const Permutation& p) const { return index_.contains(p); }
  std::optional<std::size_t> index_of(const Permutation& p) const;

 private:
  PermGroup() = default;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
};

/// All generator pairs commute.
bool is_abelian(const PermGroup& group);

/// No non-identity element fixes a point.
bool is_semiregular(const PermGroup& group);

}  // namespace homaff
