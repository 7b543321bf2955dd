#include "trifree/coloring.hpp"
#include "trifree/graph.hpp"
#include "trifree/uniform.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace trifree;

namespace {

const std::shared_ptr<const AnchoredShape>& anchored(const char* name) { return catalog_entry(name).anchored; }

}  // namespace

TEST(Uniform, BaseLevelProbe) {
  // E(1/2) = [3/4, 11/12] x [5/12, 7/12]; the probe runs to x = 1.
  const UniformLevel level = build_uniform(1, Rat(1, 2), anchored("frame"));
  ASSERT_EQ(level.family.size(), 1u);
  ASSERT_EQ(level.probes.size(), 1u);
  EXPECT_EQ(level.probes[0].rect, Rect(Rat(3, 4), 1, Rat(5, 12), Rat(7, 12)));
  EXPECT_EQ(level.probes[0].root, Rect(Rat(3, 4), Rat(11, 12), Rat(5, 12), Rat(7, 12)));
  EXPECT_EQ(level.probes[0].pierced, std::vector<std::size_t>{0});
}

TEST(Uniform, HomothetsWithExactProbeAspect) {
  const Rat eps(1, 2);
  const std::size_t sizes[] = {1, 3, 13};
  for (int k = 1; k <= 3; ++k) {
    const UniformLevel level = build_uniform(k, eps, anchored("frame"));
    EXPECT_EQ(level.family.size(), sizes[k - 1]);
    for (const auto& c : level.family) EXPECT_EQ(c.transform().sx(), c.transform().sy());
    for (const auto& p : level.probes) {
      EXPECT_EQ(p.rect.width(), (Rat(1) + eps) * p.rect.height());
      EXPECT_TRUE(p.root.is_square());
    }
    EXPECT_TRUE(check_probes(level.family, level.probes, {true, eps}).empty());
  }
}

TEST(Uniform, RecordsParametersPerLevel) {
  const UniformLevel level = build_uniform(3, Rat(1, 2), anchored("frame"));
  // One entry for level 3, plus one for each of its two level-2 parts.
  ASSERT_EQ(level.params.size(), 3u);
  for (const auto& p : level.params) {
    EXPECT_EQ(p.m, p.epsilon / 8 * p.s_min);
    EXPECT_EQ(p.epsilon1, Rat(2) * p.m / p.s_max);
    EXPECT_LE(p.epsilon1, p.epsilon / 2);
    EXPECT_EQ(p.outer_epsilon, p.epsilon * p.t / (Rat(2) * p.side));
  }
  EXPECT_EQ(level.params.back().k, 3);
  EXPECT_EQ(level.params.back().epsilon, Rat(1, 2));
  EXPECT_EQ(std::count_if(level.params.begin(), level.params.end(), [](const UniformParams& p) { return p.k == 2; }),
            2);
  // The inner recursion runs at epsilon / 8.
  EXPECT_EQ(level.params.front().epsilon, Rat(1, 16));
}

TEST(Uniform, DiagonalPlacementChecks) {
  const UniformLevel level = build_uniform(3, Rat(1, 2), anchored("mirrored-l"));
  ASSERT_FALSE(diagonal_checks(level).empty());
  for (const auto& d : diagonal_checks(level)) EXPECT_TRUE(d.ok()) << "k " << d.k << " probe " << d.probe;
  for (const auto& a : level.audits) EXPECT_TRUE(a.holds()) << to_string(a.law) << " level " << a.level;
}

TEST(Uniform, AugmentedFamiliesAreTriangleFreeAndNeedKPlusOneColors) {
  for (int k = 1; k <= 2; ++k) {
    const UniformLevel level = build_uniform(k, Rat(1, 2), anchored("frame"));
    const auto augmented = augment_uniform(level);
    ASSERT_EQ(augmented.size(), level.family.size() + level.probes.size());
    for (const auto& c : augmented) EXPECT_TRUE(c.transform().is_homothety());
    for (const auto& a : uniform_augmentation_audit(level, augmented)) EXPECT_TRUE(a.holds());
    const Graph g = intersection_graph(augmented);
    EXPECT_TRUE(is_triangle_free(g));
    EXPECT_EQ(chromatic_number(g).lower, k + 1);
  }
}

TEST(Uniform, OtherEpsilons) {
  for (const Rat& eps : {Rat(1, 3), Rat(3, 4)}) {
    const UniformLevel level = build_uniform(2, eps, anchored("frame"));
    EXPECT_TRUE(check_probes(level.family, level.probes, {true, eps}).empty()) << eps;
  }
}

TEST(Uniform, CarveProbe) {
  // Square [0,1]^2 at distance 1/4 from x = 5/4 with eps = 1/2: a = 1,
  // d = 1/4, height (a + d)/(1 + eps) = 5/6.
  const Probe p = carve_probe(Rect(0, 1, 0, 1), Rat(1, 2), Rect(-1, Rat(5, 4), -1, 2));
  EXPECT_EQ(p.rect.x_hi, Rat(5, 4));
  EXPECT_EQ(p.rect.width(), Rat(3, 2) * p.rect.height());
  EXPECT_EQ(p.rect.height(), Rat(5, 6));
  EXPECT_TRUE(p.root.is_square());
  EXPECT_TRUE(rect_within(p.root, Rect(0, 1, 0, 1)));
  EXPECT_THROW(carve_probe(Rect(0, 1, 0, 2), Rat(1, 2), Rect(0, 2, 0, 2)), std::invalid_argument);
  EXPECT_THROW(carve_probe(Rect(0, 1, 0, 1), Rat(1, 2), Rect(0, 3, 0, 2)), std::invalid_argument);
}

TEST(Uniform, RejectsBadInput) {
  EXPECT_THROW(build_uniform(0, Rat(1, 2), anchored("frame")), std::invalid_argument);
  EXPECT_THROW(build_uniform(2, Rat(0), anchored("frame")), std::invalid_argument);
  EXPECT_THROW(build_uniform(2, Rat(1), anchored("frame")), std::invalid_argument);
  EXPECT_THROW(build_uniform(2, Rat(1, 2), nullptr), std::invalid_argument);
}
