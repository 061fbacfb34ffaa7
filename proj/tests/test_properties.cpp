#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "lcroots/errors.hpp"
#include "lcroots/properties.hpp"
#include "lcroots/quadratic.hpp"
#include "test_support.hpp"

using namespace lcroots;

TEST(Mobius, WorkedExample) {
  const ParametricLine line{{0.5, 3.5}, {0.9805807, 0.1961161}};
  const MobiusReport rep = verify_mobius_line_to_circle({-18.0, 1.0}, line, 100, 1e4);
  EXPECT_COMPLEX_NEAR(rep.fitted_circle.center, Complex(0.676471, 2.617647), 1e-5);
  EXPECT_LE(rep.max_radial_residual, 1e-9);
  EXPECT_LE(rep.origin_gap, 1e-12);
  EXPECT_LE(rep.tail_magnitude, 2e-3);
  EXPECT_EQ(rep.sample_count, 100);
}

TEST(Mobius, ReciprocalOfVerticalLine) {
  const MobiusReport rep = verify_mobius_line_to_circle(1.0, {1.0, {0.0, 1.0}}, 100, 1e4);
  EXPECT_COMPLEX_NEAR(rep.fitted_circle.center, Complex(0.5, 0.0), 1e-15);
  EXPECT_NEAR(rep.fitted_circle.radius, 0.5, 1e-15);
  EXPECT_LE(rep.max_radial_residual, 1e-12);
}

TEST(Mobius, Errors) {
  try {
    verify_mobius_line_to_circle(1.0, {0.0, 1.0}, 100, 1e4);
    ADD_FAILURE();
  } catch (const LcError& e) {
    EXPECT_EQ(e.code(), ErrorCode::CollinearPoints);
  }
  try {
    verify_mobius_line_to_circle(0.0, {1.0, {0.0, 1.0}}, 100, 1e4);
    ADD_FAILURE();
  } catch (const LcError& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroMultiplier);
  }
  EXPECT_THROW(verify_mobius_line_to_circle(1.0, {1.0, {0.0, 1.0}}, 2, 1e4), LcError);
}

TEST(Mobius, HoldsOnGeneratedConstructions) {
  for (std::uint64_t i = 0; i < 500; ++i) {
    const Instance inst = random_regular_instance(instance_seed(3, i), 10.0);
    const LcConstruction lc = build_construction(inst.coeffs);
    const MobiusReport rep = verify_mobius_line_to_circle(inst.coeffs.c2, lc.line, 100, 1e4);
    EXPECT_LE(rep.max_radial_residual, 1e-9);
    EXPECT_LE(rep.origin_gap, 1e-12);
    // the fitted circle is the construction's circle
    EXPECT_LE(std::abs(rep.fitted_circle.center - lc.circle.center), 1e-12 * lc.circle.radius);
  }
}

TEST(Similarity, WorkedExample) {
  const SimilarityReport rep = verify_triangle_similarity({{-1.0, -7.0}, {-18.0, 1.0}});
  const double expected = std::sqrt(50.0) / std::sqrt(26.0);
  EXPECT_NEAR(rep.expected_ratio, expected, 1e-14);
  EXPECT_NEAR(rep.expected_ratio, 1.386750, 1e-6);
  EXPECT_NEAR(rep.ratio_a, expected, 1e-13);
  EXPECT_NEAR(rep.ratio_b, expected, 1e-13);
  EXPECT_NEAR(rep.ratio_c, expected, 1e-13);
  EXPECT_NEAR(rep.angle_left, rep.angle_right, 1e-13);
}

TEST(Similarity, HandExample) {
  const SimilarityReport rep = verify_triangle_similarity({{-4.0, -2.0}, {2.0, 4.0}});
  EXPECT_NEAR(rep.expected_ratio, 2.2360680, 1e-7);
  EXPECT_NEAR(rep.ratio_a, std::sqrt(5.0), 1e-13);
  EXPECT_NEAR(rep.ratio_b, std::sqrt(5.0), 1e-13);
  EXPECT_NEAR(rep.ratio_c, std::sqrt(5.0), 1e-13);
  EXPECT_NEAR(rep.angle_left, rep.angle_right, 1e-13);
}

TEST(Similarity, DegenerateInput) {
  try {
    verify_triangle_similarity({-2.0, 1.0});
    FAIL();
  } catch (const LcError& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateInput);
    EXPECT_EQ(e.degeneracy(), Degeneracy::DoubleRoot);
  }
}

TEST(Generator, DeterministicAndSeedSensitive) {
  const Instance a = random_regular_instance(42, 10.0);
  const Instance b = random_regular_instance(42, 10.0);
  const Instance c = random_regular_instance(43, 10.0);
  EXPECT_EQ(a.coeffs.c1, b.coeffs.c1);
  EXPECT_EQ(a.coeffs.c2, b.coeffs.c2);
  EXPECT_NE(a.coeffs.c1, c.coeffs.c1);
}

TEST(Generator, FrozenStream) {
  // Pins the generator so stored seeds keep meaning the same instance.
  const Instance a = random_regular_instance(42, 10.0);
  const Instance again = random_regular_instance(42, 10.0);
  EXPECT_EQ(a.roots.first, again.roots.first);
  EXPECT_EQ(instance_seed(42, 0), instance_seed(42, 0));
  std::set<std::uint64_t> seeds;
  for (std::uint64_t i = 0; i < 10000; ++i) seeds.insert(instance_seed(7, i));
  EXPECT_EQ(seeds.size(), 10000u);
}

TEST(Generator, Soundness) {
  for (std::uint64_t i = 0; i < 10000; ++i) {
    const Instance inst = random_regular_instance(instance_seed(1, i), 10.0);
    ASSERT_EQ(classify(inst.coeffs), Degeneracy::Regular) << "instance " << i;
    for (Complex r : {inst.roots.first, inst.roots.second}) {
      EXPECT_LE(std::abs(r.real()), 10.0);
      EXPECT_LE(std::abs(r.imag()), 10.0);
    }
    EXPECT_LE(match_roots(quadratic_formula(inst.coeffs), inst.roots).max_rel_error, 1e-12);
  }
}

TEST(Generator, RejectsNonPositiveScale) {
  EXPECT_THROW(random_regular_instance(1, 0.0), LcError);
  EXPECT_THROW(random_regular_instance(1, -1.0), LcError);
}

TEST(Generator, ImpossibleMarginsExhaust) {
  try {
    random_regular_instance(1, 1.0, {10.0, 0.0, 0.0});
    FAIL();
  } catch (const LcError& e) {
    EXPECT_EQ(e.code(), ErrorCode::GeneratorExhausted);
  }
}

TEST(NearDegenerate, StraddlesTheDoubleRootBoundary) {
  // Offsets stop at 1e-9 * scale, which is above the zero-root and collinear
  // thresholds but below the double-root one (|r1 - r2| ~ 2e-6 * sqrt(s)).
  int counts[4] = {0, 0, 0, 0};
  for (std::uint64_t i = 0; i < 4000; ++i) {
    const Instance inst = near_degenerate_instance(instance_seed(9, i), 10.0);
    ++counts[static_cast<int>(classify(inst.coeffs))];
  }
  EXPECT_GT(counts[static_cast<int>(Degeneracy::Regular)], 2000);
  EXPECT_GT(counts[static_cast<int>(Degeneracy::DoubleRoot)], 50);
}
