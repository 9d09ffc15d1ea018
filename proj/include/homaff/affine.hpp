#pragma once

#include <optional>
#include <span>
#include <vector>

#include "homaff/abelian_group.hpp"
#include "homaff/quandle.hpp"

namespace homaff {

/// Aff(A, f): the quandle a*b = (1-f)(a) + f(b) on the elements of A.
struct AffineQuandle {
  AbelianGroup group;
  GroupAutomorphism f;
  Quandle quandle;
};

AffineQuandle make_affine(const AbelianGroup& group, const GroupAutomorphism& f);

/// Im(1-f) = {a - f(a)}, sorted.
std::vector<Element> image_of_one_minus_f(const AbelianGroup& group,
                                          const GroupAutomorphism& f);

/// Smallest superset of `seed` closed under * and left division.
std::vector<Element> subquandle_closure(const Quandle& q,
                                        std::span<const Element> seed);

/// Every abelian group of order n up to isomorphism, as cyclic products of
/// prime powers.
std::vector<AbelianGroup> abelian_groups_of_order(std::size_t n);

/// Every automorphism of a cyclic-product group, by brute force over the
/// images of the standard generators. Only sensible for tiny groups.
std::vector<GroupAutomorphism> all_automorphisms(const AbelianGroup& group);

/// Searches all Aff(A, f) with |A| = |Q| for one isomorphic to Q. Returns
/// nullopt when none exists; brute force, so keep |Q| small.
std::optional<AffineQuandle> find_affine_representation(const Quandle& q);

}  // namespace homaff
