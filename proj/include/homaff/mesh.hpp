#pragma once

#include <cstddef>
#include <vector>

#include "homaff/abelian_group.hpp"
#include "homaff/quandle.hpp"

namespace homaff {

/// Unvalidated mesh data over the index set 0..k-1.
///
/// `phi[i][j]` maps elements of groups[i] to elements of groups[j]; an
/// empty vector stands for the zero map. `c[i][j]` is an element of
/// groups[j].
struct MeshData {
  std::vector<AbelianGroup> groups;
  std::vector<std::vector<std::vector<Element>>> phi;
  std::vector<std::vector<Element>> c;
};

/// A validated affine mesh (A_i; phi_ij; c_ij):
///   (M1) 1 - phi_ii is an automorphism of A_i,
///   (M2) c_ii = 0,
///   (M3) phi_jk phi_ij = phi_j'k phi_ij' for all i, j, j', k,
///   (M4) phi_jk(c_ij) = phi_kk(c_ik - c_jk) for all i, j, k.
class AffineMesh {
 public:
  /// Throws MeshError naming the first witness: Malformed, then
  /// NotAHomomorphism(i, j), then M1..M4 in that order.
  static AffineMesh validate(MeshData data);

  std::size_t size() const noexcept { return groups_.size(); }
  const AbelianGroup& group(std::size_t i) const { return groups_[i]; }
  const std::vector<AbelianGroup>& groups() const noexcept { return groups_; }
  Element phi(std::size_t i, std::size_t j, Element a) const {
    return phi_[i][j][a];
  }
  const std::vector<Element>& phi_map(std::size_t i, std::size_t j) const {
    return phi_[i][j];
  }
  Element c(std::size_t i, std::size_t j) const { return c_[i][j]; }

  /// Position of A_i's first element in the disjoint union.
  std::size_t offset(std::size_t i) const { return offsets_[i]; }
  std::size_t total_size() const noexcept { return offsets_.back(); }
  /// Fiber index of a disjoint-union element.
  std::size_t fiber_of(Element x) const;

 private:
  AffineMesh() = default;

  std::vector<AbelianGroup> groups_;
  std::vector<std::vector<std::vector<Element>>> phi_;
  std::vector<std::vector<Element>> c_;
  std::vector<std::size_t> offsets_;
};

/// Every A_j is generated by the c_ij and the images phi_ij(a).
bool is_indecomposable(const AffineMesh& mesh);

/// The sum: a*b = c_ij + phi_ij(a) + (1 - phi_jj)(b) for a in A_i, b in A_j,
/// on A_0, then A_1, ... each in its group's element order.
Quandle mesh_sum(const AffineMesh& mesh);

/// X = {(phi_ij(a) + c_ij)_j : i, a in A_i} is a coset of a subgroup of the
/// product of the A_j, tested as: -h + X is a subgroup for one h in X.
bool coset_criterion(const AffineMesh& mesh);

/// Syntactic test for the shape A_i = A, phi_ij = 1 - psi (psi an
/// automorphism), c_ij = d_i - d_j.
bool semiregular_extension_form(const AffineMesh& mesh);

/// The worst-case family: k copies of Z2 then n-k copies of Z1, zero
/// homomorphisms, constants with the 2^k distinct vectors of Z2^k as the
/// first 2^k rows (diagonal kept zero, zero vector as late as possible)
/// and zero rows below. Throws MeshError(InvalidParams) unless 2^k < n.
AffineMesh generate_max_mesh(std::size_t n, std::size_t k);

}  // namespace homaff
