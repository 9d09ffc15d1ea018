#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "homaff/affine.hpp"
#include "homaff/mesh.hpp"
#include "homaff/quandle.hpp"

namespace homaff::testing {

/// x*y = y on n elements.
Quandle projection(std::size_t n);

/// Aff(Z_m, u): a*b = (1-u)a + ub mod m.
Quandle affine_cyclic(std::uint32_t m, std::int64_t u);

/// Conjugation quandle on the transpositions (12), (13), (23) of S3.
Quandle s3_transpositions();

/// Conjugation quandle on the six transpositions of S4; not medial.
Quandle s4_transpositions();

/// Mesh with zero homomorphisms over cyclic groups Z_{m_i}.
AffineMesh zero_phi_mesh(const std::vector<std::uint32_t>& moduli,
                         const std::vector<std::vector<Element>>& c);

/// The three meshes of the worked example: (Z2,Z2,Z2) with rows
/// (0,0,1),(0,0,1),(1,1,0); (Z3,Z3) with rows (0,1),(1,0); (Z2,Z1) with
/// rows (0,0),(1,0).
AffineMesh example_mesh(int which);

/// Calls `visit` for every mesh that passes validation with at most
/// `max_indices` indices over the groups Z1, Z2, Z3, Z4, Z2xZ2. Group
/// tuples are taken in nondecreasing order of that list, which covers every
/// mesh up to relabelling of the index set.
void for_each_mesh(std::size_t max_indices,
                   const std::function<void(const AffineMesh&)>& visit);

struct CorpusEntry {
  std::string name;
  Quandle quandle;
  std::optional<AffineMesh> mesh;
};

/// Streams the mesh sums of for_each_mesh(max_indices), then Aff(Z_m, u)
/// for m <= 12 and gcd(u, m) = 1.
void for_each_corpus_entry(std::size_t max_indices,
                           const std::function<void(const CorpusEntry&)>& visit);

/// Keeps the first entry of every isomorphism class it is offered.
class IsoDeduper {
 public:
  /// True if the entry was new.
  bool insert(const CorpusEntry& entry);
  const std::vector<CorpusEntry>& entries() const noexcept { return entries_; }

  /// Isomorphism invariant used for bucketing.
  static std::vector<std::size_t> key(const Quandle& q);

 private:
  std::vector<CorpusEntry> entries_;
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets_;
};

/// The corpus restricted to meshes with at most two indices, materialized.
const std::vector<CorpusEntry>& small_corpus();
const std::vector<CorpusEntry>& small_corpus_up_to_iso();

}  // namespace homaff::testing
