#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "homaff/error.hpp"

namespace homaff {

/// A finite abelian group whose elements are the indices 0..order()-1.
///
/// The operations come from an implementation object, so concrete groups
/// (products of cyclic groups) and abstract ones (built by the cover
/// construction) share one interface. Copies share the implementation.
class AbelianGroup {
 public:
  class Impl {
   public:
    virtual ~Impl() = default;
    virtual std::size_t order() const = 0;
    virtual Element add(Element a, Element b) const = 0;
    virtual Element neg(Element a) const = 0;
    virtual Element zero() const { return 0; }
    virtual std::string label(Element a) const { return std::to_string(a); }
    /// Moduli when the group is a concrete cyclic product.
    virtual const std::vector<std::uint32_t>* moduli() const { return nullptr; }
  };

  explicit AbelianGroup(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}

  /// Z_{m1} x ... x Z_{mr}; elements in mixed-radix order with the first
  /// coordinate most significant, so the zero tuple is element 0.
  /// Throws GroupError(EmptyModuli) or GroupError(InvalidModulus).
  static AbelianGroup cyclic_product(std::vector<std::uint32_t> moduli);

  std::size_t order() const { return impl_->order(); }
  Element add(Element a, Element b) const { return impl_->add(a, b); }
  Element neg(Element a) const { return impl_->neg(a); }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element zero() const { return impl_->zero(); }
  std::string label(Element a) const { return impl_->label(a); }

  /// Empty for abstract groups.
  std::vector<std::uint32_t> moduli() const;
  bool is_cyclic_product() const { return impl_->moduli() != nullptr; }

  /// Coordinates of a cyclic-product element, and back.
  std::vector<std::uint32_t> coordinates(Element a) const;
  Element from_coordinates(std::span<const std::uint32_t> coords) const;

  /// Same moduli in the same order (concrete groups only).
  bool same_presentation(const AbelianGroup& other) const;

  /// Verifies identity, inverses, commutativity and associativity; returns
  /// a description of the first failure. Associativity is checked against
  /// a generating set, which is exact: the elements g with (xg)y = x(gy)
  /// for all x, y form a closed subset.
  std::optional<std::string> check_axioms() const;

  /// Smallest-first greedy generating set.
  std::vector<Element> generating_set() const;

  /// Subgroup generated by `gens`, as a sorted element list.
  std::vector<Element> subgroup_generated(std::span<const Element> gens) const;

 private:
  std::shared_ptr<const Impl> impl_;
};

/// Checks that `map` (indexed by elements of `from`) is a homomorphism into
/// `to`; returns the first (a, b) with map(a+b) != map(a)+map(b), or a
/// one-element witness for an out-of-range image.
std::optional<std::vector<Element>> homomorphism_violation(
    const AbelianGroup& from, const AbelianGroup& to,
    std::span<const Element> map);

/// An automorphism of an abelian group, stored as its element map.
class GroupAutomorphism {
 public:
  /// Throws GroupError(SizeMismatch | NotBijective | NotAdditive).
  static GroupAutomorphism validate(const AbelianGroup& group,
                                    std::vector<Element> map);

  static GroupAutomorphism identity(const AbelianGroup& group);

  /// x -> u*x on a single cyclic factor Z_m.
  static GroupAutomorphism multiplication(const AbelianGroup& group,
                                          std::int64_t unit);

  Element operator()(Element a) const { return map_[a]; }
  std::span<const Element> map() const noexcept { return map_; }
  std::size_t size() const noexcept { return map_.size(); }

 private:
  explicit GroupAutomorphism(std::vector<Element> map) : map_(std::move(map)) {}

  std::vector<Element> map_;
};

}  // namespace homaff
