#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "homaff/abelian_group.hpp"
#include "homaff/affine.hpp"
#include "homaff/permutation.hpp"
#include "homaff/quandle.hpp"

namespace homaff {

/// Decides whether Q is a homomorphic image of an affine quandle: with
/// e = 0 and D = {L_x L_e^-1 : x in Q}, every pair of D must commute and
/// compose back into D.
bool is_homim_of_affine(const Quandle& q);

/// Dis(Q) in closure order (alpha_0 = 1) together with the data the cover
/// construction indexes by it, for e = 0.
class DisplacementTable {
 public:
  explicit DisplacementTable(const Quandle& q);

  Element e() const noexcept { return 0; }
  std::size_t size() const noexcept { return group_.order(); }
  const Permutation& alpha(std::size_t i) const { return group_.elements()[i]; }
  std::size_t index_of(const Permutation& p) const;

  /// Index i with alpha_i alpha_j = alpha_{mul(i, j)}.
  std::size_t mul(std::size_t i, std::size_t j) const { return mul_[i * size() + j]; }

  /// Index i with L_x L_e^-1 = alpha_i.
  std::size_t block_of(Element x) const { return block_of_[x]; }

  /// The x with L_x L_e^-1 = alpha_i, ascending (so e leads block 0).
  const std::vector<Element>& members(std::size_t i) const { return members_[i]; }

  bool abelian() const noexcept { return abelian_; }
  /// Every element of Dis(Q) is some L_x L_e^-1.
  bool tiny() const noexcept;

 private:
  PermGroup group_;
  std::vector<std::size_t> mul_;
  std::vector<std::size_t> block_of_;
  std::vector<std::vector<Element>> members_;
  bool abelian_ = true;
};

/// A multiset of elements meeting every Cayley-kernel block exactly kappa
/// times. Entry t = i*kappa + j sits in the block of alpha_i (closure
/// order of Dis(Q)) and carries nu(t) = j in Z_kappa; entry 0 is e = 0.
struct Multitransversal {
  std::vector<Element> entries;
  std::size_t kappa = 0;
  std::size_t blocks = 0;

  std::size_t size() const noexcept { return entries.size(); }
  std::size_t block_index(std::size_t t) const { return t / kappa; }
  std::size_t nu(std::size_t t) const { return t % kappa; }
};

/// The multitransversal that takes every element (cycling short blocks).
/// Throws CoverError(NotHomImage).
Multitransversal simple_multitransversal(const Quandle& q);

/// Greedy selection of one element per orbit that keeps the heaviest
/// Cayley-kernel block light, padded to a multitransversal. e's orbit is
/// served by e itself. Throws CoverError(NotHomImage).
Multitransversal optimized_multitransversal(const Quandle& q);

/// Throws CoverError(InvalidMultitransversal) unless T has the layout above
/// and meets every orbit.
void validate_multitransversal(const Quandle& q, const DisplacementTable& dis,
                               const Multitransversal& t);

/// The abelian group (T, (+)): T_{i k + j} (+) T_{i' k + j'} =
/// T_{i'' k + (j + j') mod k} where alpha_i'' = alpha_i alpha_i'.
/// Throws CoverError(OplusUndefined) when Dis(Q) is not abelian and tiny.
AbelianGroup build_oplus(const Quandle& q, const Multitransversal& t);

struct CoverResult {
  Multitransversal transversal;
  std::size_t dis_order = 0;
  /// Element u of A is the pair (alpha_{u / |T|}, T_{u % |T|}).
  AbelianGroup group;
  GroupAutomorphism f;
  std::vector<Element> psi;
  AffineQuandle cover;

  std::size_t alpha_index(Element u) const { return u / transversal.size(); }
  std::size_t t_index(Element u) const { return u % transversal.size(); }
  bool psi_bijective() const;
};

/// Builds A = Dis(Q) x (T, (+)), f(alpha, a) = (L_e alpha L_x(a)^-1, a) and
/// psi(alpha, a) = alpha(x(a)), then runs verify_cover. Throws
/// CoverError(NotHomImage) for bad input and
/// CoverError(InternalAssertionFailure) if any construction invariant fails.
CoverResult build_cover(const Quandle& q, const Multitransversal& t);

struct CoverReport {
  bool passed = true;
  std::string failure;
  std::vector<Element> witness;
};

/// Exhaustive check that A is an abelian group, f an automorphism, the
/// cover table is Aff(A, f), and psi a surjective homomorphism onto Q.
CoverReport verify_cover(const CoverResult& r, const Quandle& q);

}  // namespace homaff
