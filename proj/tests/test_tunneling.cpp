#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dsw/errors.hpp"
#include "dsw/isolated.hpp"
#include "dsw/pipeline.hpp"
#include "dsw/tunneling.hpp"
#include "oracles.hpp"

using namespace dsw;

TEST(Tunneling, GroundFixedPointOfTheExample) {
  const double a = 18.1379936423;
  const FixedPointResult fp = solve_r0(Parity::Ground, a, a, 2.59700181808);
  EXPECT_NEAR(fp.r0, 18.1379936637, 1e-9);
  EXPECT_NEAR(fp.p_small / 4.57099905795e-16, 1.0, 1e-9);
  EXPECT_LE(fp.iterations, 4);
}

TEST(Tunneling, DecoupledLimitPicksTheExtremeA) {
  const FixedPointResult g = solve_r0(Parity::Ground, 5.0, 7.0, 0.0);
  const FixedPointResult e = solve_r0(Parity::Excited, 5.0, 7.0, 0.0);
  EXPECT_EQ(g.r0, 7.0);
  EXPECT_EQ(g.p_small, 0.0);
  EXPECT_EQ(e.r0, 5.0);
  EXPECT_EQ(e.p_small, 0.0);
}

TEST(Tunneling, FixedPointMatchesDampedIteration) {
  // 30-digit reference for a_left = 5, a_right = 6, P = 1.
  const FixedPointResult fp = solve_r0(Parity::Ground, 5.0, 6.0, 1.0);
  EXPECT_NEAR(fp.r0, 6.0000061440991025391, 1e-12);
  EXPECT_NEAR(fp.p_small, 6.1441368524928835363e-6, 1e-17);
  const double damped = test::damped_fixed_point(
      [](double r) { return 5.5 + std::sqrt(0.25 + std::exp(-2.0 * r)); }, 5.0);
  EXPECT_NEAR(fp.r0, damped, 1e-12);
}

TEST(Tunneling, FixedPointResidualVanishes) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(2.0, 20.0);
  for (int i = 0; i < 20; ++i) {
    const double al = u(rng), ar = u(rng), pc = 0.1 * u(rng);
    for (Parity parity : {Parity::Ground, Parity::Excited}) {
      const FixedPointResult fp = solve_r0(parity, al, ar, pc);
      const double sign = parity == Parity::Ground ? 1.0 : -1.0;
      const double rhs =
          0.5 * (al + ar) + sign * std::sqrt(0.25 * (ar - al) * (ar - al) + fp.p_small);
      EXPECT_NEAR(fp.r0 - rhs, 0.0, 1e-12);
      EXPECT_NEAR(fp.p_small / (pc * std::exp(-2.0 * fp.r0)), 1.0, 1e-10);
      if (parity == Parity::Ground) {
        EXPECT_GE(fp.r0, std::max(al, ar) - 1e-12);
      } else {
        EXPECT_LE(fp.r0, std::min(al, ar) + 1e-12);
      }
    }
  }
}

TEST(Tunneling, ExcitedFixedPointCanCollapse) {
  EXPECT_THROW(solve_r0(Parity::Excited, 0.1, 0.1, 100.0), ExcitedBelowZero);
}

TEST(Tunneling, ExampleSplitting) {
  const Approximation ap = approximate(worked_example_spec());
  const double e_bar = 0.25;
  // The reference dE is the closed form in the ground-state p; the level pair
  // also carries the excited fixed point, whose p differs by a factor exp(4 sqrt(p)).
  EXPECT_NEAR(symmetric_half_splitting(ap.right.a_coef, ap.reduced.k_0, ap.ground.p_small) /
                  1.76810307565e-9,
              1.0, 1e-9);
  EXPECT_NEAR(ap.split.delta_e / 1.76810307565e-9, 1.0, 1e-6);
  EXPECT_NEAR(ap.split.e0 / e_bar, 0.999999992928, 1e-11);
  EXPECT_NEAR(ap.split.e1 / e_bar, 1.000000007072, 1e-11);
  EXPECT_NEAR(std::sqrt(ap.ground.p_small) / 2.13798948967e-8, 1.0, 1e-9);
  EXPECT_NEAR((ap.split.e1 - ap.split.e0) / (2.0 * ap.split.delta_e), 1.0, 1e-6);
  EXPECT_NEAR(ap.split.delta_e /
                  symmetric_half_splitting(ap.right.a_coef, ap.reduced.k_0, ap.ground.p_small),
              1.0, 1e-6);
  EXPECT_EQ(ap.ground.z_asym, 0.0);
  EXPECT_DOUBLE_EQ(ap.ground.prob_left, 0.5);
  EXPECT_DOUBLE_EQ(ap.ground.prob_right, 0.5);
}

TEST(Tunneling, CoupledSolutionInvariants) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 10; ++i) {
    const WellSpec s = test::random_spec(rng, {10.0, 22.0, 5.0, false});
    const Approximation ap = approximate(s);
    for (const CoupledSolution* c : {&ap.ground, &ap.excited}) {
      EXPECT_NEAR((c->r_left + c->r_right) / c->r0, 1.0, 1e-12);
      EXPECT_NEAR(c->prob_left + c->prob_right, 1.0, 1e-12);
      const double binding = c->energy - std::min(s.v_m2, s.v_2);
      EXPECT_LE(std::abs(c->energy_left_estimate - c->energy_right_estimate), 1e-6 * binding);
    }
    EXPECT_GT(ap.split.e1, ap.split.e0);
    // Ground and excited localisation are reciprocal up to the p vs p~ difference,
    // which shifts the product by about 4 sqrt(p) z.
    const double ground = ap.ground.prob_left / ap.ground.prob_right;
    const double excited = ap.excited.prob_left / ap.excited.prob_right;
    const double slack = 5.0 * std::sqrt(ap.ground.p_small) * std::abs(ap.ground.z_asym);
    EXPECT_NEAR(ground * excited, 1.0, slack + 1e-12);
  }
}

TEST(Tunneling, CoefficientRatioIdentities) {
  const Approximation sym = approximate(worked_example_spec());
  EXPECT_NEAR(coefficient_ratio(Parity::Ground, sym.ground, sym.left, sym.right), 1.0, 1e-12);

  std::mt19937_64 rng(23);
  for (int i = 0; i < 5; ++i) {
    WellSpec s = test::random_spec(rng);
    s.v_m4 += 0.002 * (i + 1);  // make the wells differ in shape too
    const Approximation ap = approximate(s);
    const auto& l = ap.left;
    const auto& r = ap.right;
    const double factor = (r.s_inner * r.s_inner * l.b_coef * l.c_coef) /
                          (l.s_inner * l.s_inner * r.b_coef * r.c_coef);
    const double product = coefficient_ratio(Parity::Ground, ap.ground, l, r) *
                           coefficient_ratio(Parity::Excited, ap.excited, l, r);
    const double slack = 5.0 * std::sqrt(ap.ground.p_small) * std::abs(ap.ground.z_asym);
    EXPECT_NEAR(product / (factor * factor), 1.0, slack + 1e-12);
    const double ground = coefficient_ratio(Parity::Ground, ap.ground, l, r);
    EXPECT_NEAR(ground / (factor * ap.ground.prob_left / ap.ground.prob_right), 1.0, 1e-12);
  }
}

TEST(Tunneling, SplittingDecaysWithBarrierWidth) {
  // dE ~ a exp(-a) with a = kappa_0 w_0, so a step d in w_0 also scales the
  // prefactor by 1 + d / w_0; a small relative step isolates the exponential.
  WellSpec s = worked_example_spec();
  for (int i = 0; i < 4; ++i) {
    const Approximation before = approximate(s);
    const double delta = 5e-4 * s.w_0;
    s.w_0 += delta;
    const Approximation after = approximate(s);
    EXPECT_LT(after.split.delta_e, before.split.delta_e);
    const double kappa_0 = std::sqrt(2.0 * s.mass * (s.v_0 - before.split.e_bar)) / s.hbar;
    const double ratio = after.split.delta_e / before.split.delta_e;
    EXPECT_NEAR(ratio / std::exp(-kappa_0 * delta), 1.0, 1e-3);
    s.w_0 *= 1.5;
  }
}

TEST(Tunneling, ThinBarrierViolatesTheAssumption) {
  WellSpec s = worked_example_spec();
  s.w_0 = s.w_2 / 10.0;
  bool refused = false;
  try {
    approximate(s);
  } catch (const AssumptionViolated&) {
    refused = true;
  } catch (const ExcitedBelowZero&) {
    refused = true;
  }
  EXPECT_TRUE(refused);
}
