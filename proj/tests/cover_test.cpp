#include <gtest/gtest.h>

#include <algorithm>

#include "homaff/cover.hpp"
#include "homaff/displacement.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace homaff;
using homaff::testing::affine_cyclic;
using homaff::testing::example_mesh;
using homaff::testing::projection;

namespace {

std::vector<std::size_t> element_orders(const AbelianGroup& g) {
  std::vector<std::size_t> out;
  for (Element a = 0; a < g.order(); ++a) {
    std::size_t k = 1;
    for (Element s = a; s != g.zero(); s = g.add(s, a)) ++k;
    out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Homim, WorkedExamples) {
  EXPECT_TRUE(is_homim_of_affine(projection(4)));
  EXPECT_TRUE(is_homim_of_affine(affine_cyclic(8, 5)));
  EXPECT_TRUE(is_homim_of_affine(mesh_sum(example_mesh(1))));
  EXPECT_FALSE(is_homim_of_affine(mesh_sum(example_mesh(2))));
  EXPECT_TRUE(is_homim_of_affine(mesh_sum(example_mesh(3))));
  EXPECT_TRUE(is_homim_of_affine(homaff::testing::s3_transpositions()));
}

TEST(Homim, NonMedialIsRejected) {
  const auto q = homaff::testing::s4_transpositions();
  EXPECT_FALSE(is_medial(q));
  EXPECT_FALSE(is_homim_of_affine(q));
  EXPECT_THROW(optimized_multitransversal(q), CoverError);
}

TEST(DisplacementTable, Structure) {
  const DisplacementTable d(mesh_sum(example_mesh(1)));
  EXPECT_EQ(d.size(), 2u);
  EXPECT_TRUE(d.alpha(0).is_identity());
  EXPECT_TRUE(d.abelian());
  EXPECT_TRUE(d.tiny());
  EXPECT_EQ(d.members(0), (std::vector<Element>{0, 1, 2, 3}));
  EXPECT_EQ(d.members(1), (std::vector<Element>{4, 5}));
  EXPECT_THROW(d.index_of(Permutation::identity(5)), CoverError);
}

TEST(Multitransversal, SimpleLayout) {
  const auto t = simple_multitransversal(mesh_sum(example_mesh(1)));
  EXPECT_EQ(t.blocks, 2u);
  EXPECT_EQ(t.kappa, 4u);
  EXPECT_EQ(t.size(), 8u);
  EXPECT_EQ(t.entries[0], 0u);
  EXPECT_EQ(t.block_index(5), 1u);
  EXPECT_EQ(t.nu(5), 1u);

  const auto a8 = simple_multitransversal(affine_cyclic(8, 5));
  EXPECT_EQ(a8.kappa, 4u);
  EXPECT_EQ(a8.size(), 8u);
}

TEST(Multitransversal, OptimizedExamples) {
  EXPECT_EQ(optimized_multitransversal(mesh_sum(example_mesh(1))).size(), 4u);
  EXPECT_EQ(optimized_multitransversal(mesh_sum(example_mesh(1))).kappa, 2u);
  EXPECT_EQ(optimized_multitransversal(mesh_sum(generate_max_mesh(4, 1))).size(), 6u);
  EXPECT_EQ(optimized_multitransversal(mesh_sum(example_mesh(3))).kappa, 1u);
  EXPECT_THROW(optimized_multitransversal(mesh_sum(example_mesh(2))), CoverError);
  EXPECT_THROW(simple_multitransversal(mesh_sum(example_mesh(2))), CoverError);
}

TEST(Multitransversal, ValidationRejectsBadLayouts) {
  const auto q = mesh_sum(example_mesh(1));
  const DisplacementTable d(q);
  auto t = optimized_multitransversal(q);
  EXPECT_NO_THROW(validate_multitransversal(q, d, t));

  auto wrong_block = t;
  std::swap(wrong_block.entries[0], wrong_block.entries.back());
  EXPECT_THROW(validate_multitransversal(q, d, wrong_block), CoverError);

  // Only elements of the orbit {0,1}: misses the other orbits.
  Multitransversal narrow{{0, 1, 4, 4}, 2, 2};
  EXPECT_THROW(validate_multitransversal(q, d, narrow), CoverError);
}

TEST(Oplus, SimpleTransversalOfFirstExample) {
  const auto q = mesh_sum(example_mesh(1));
  const auto g = build_oplus(q, simple_multitransversal(q));
  EXPECT_FALSE(g.check_axioms());
  EXPECT_EQ(element_orders(g), (std::vector<std::size_t>{1, 2, 2, 2, 4, 4, 4, 4}));
}

TEST(Cover, FirstExampleSimpleAndOptimized) {
  const auto q = mesh_sum(example_mesh(1));
  const auto simple = build_cover(q, simple_multitransversal(q));
  EXPECT_EQ(simple.dis_order, 2u);
  EXPECT_EQ(simple.group.order(), 16u);
  EXPECT_TRUE(verify_cover(simple, q).passed);

  const auto opt = build_cover(q, optimized_multitransversal(q));
  EXPECT_EQ(opt.group.order(), 8u);
  EXPECT_TRUE(verify_cover(opt, q).passed);
  EXPECT_FALSE(opt.psi_bijective());
}

TEST(Cover, ProjectionIsItsOwnCover) {
  const auto q = projection(3);
  const auto t = optimized_multitransversal(q);
  EXPECT_EQ(t.kappa, 3u);
  const auto r = build_cover(q, t);
  EXPECT_EQ(r.group.order(), 3u);
  for (Element u = 0; u < 3; ++u) EXPECT_EQ(r.f(u), u);
  EXPECT_TRUE(r.psi_bijective());
  EXPECT_TRUE(is_isomorphic(r.cover.quandle, q));
}

TEST(Cover, ThirdExampleOptimized) {
  const auto q = mesh_sum(example_mesh(3));
  const auto r = build_cover(q, optimized_multitransversal(q));
  EXPECT_EQ(r.group.order(), 4u);
  EXPECT_TRUE(verify_cover(r, q).passed);
}

TEST(Cover, VerifierCatchesCorruption) {
  const auto q = mesh_sum(example_mesh(1));
  auto r = build_cover(q, optimized_multitransversal(q));
  auto bad_psi = r;
  bad_psi.psi.assign(bad_psi.psi.size(), 0);
  EXPECT_FALSE(verify_cover(bad_psi, q).passed);

  auto swapped = r;
  std::swap(swapped.psi[0], swapped.psi[1]);
  if (swapped.psi != r.psi) EXPECT_FALSE(verify_cover(swapped, q).passed);
}

TEST(Cover, RejectsNonImages) {
  const auto q = mesh_sum(example_mesh(2));
  try {
    build_cover(q, Multitransversal{{0, 3}, 1, 2});
    FAIL();
  } catch (const CoverError& e) {
    EXPECT_EQ(e.kind(), CoverErrorKind::NotHomImage);
  }
}

TEST(Cover, AgreesWithSurjectionSearchOnSmallQuandles) {
  // Negative verdicts are confirmed by searching every affine quandle of
  // order up to 8 for a surjection onto Q.
  const auto affine = homaff::testing::affine_quandles_up_to(8);
  for (const auto& entry : homaff::testing::small_corpus_up_to_iso()) {
    const auto& q = entry.quandle;
    if (q.size() > 4) continue;
    const bool verdict = is_homim_of_affine(q);
    if (verdict) {
      const auto r = build_cover(q, optimized_multitransversal(q));
      ASSERT_TRUE(verify_cover(r, q).passed) << entry.name;
      ASSERT_TRUE(homaff::testing::find_surjective_homomorphism(r.cover.quandle, q))
          << entry.name;
    } else {
      for (const auto& a : affine)
        ASSERT_FALSE(homaff::testing::find_surjective_homomorphism(a, q)) << entry.name;
    }
  }
}
