#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "eigres/errors.hpp"
#include "eigres/harness.hpp"
#include "eigres/report.hpp"

using namespace eigres;

namespace {

OutputRecord as_record(const ExperimentResult& r) {
  OutputRecord o;
  o.rows = r.table;
  o.fit = r.fit;
  o.checks = r.checks;
  o.notes = r.notes;
  return o;
}

}  // namespace

TEST(Fit, ExactPowerLaw) {
  std::vector<std::pair<double, double>> pts;
  for (double x : {2.0, 4.0, 8.0}) pts.emplace_back(x, 3 * std::pow(x, 0.25));
  const auto fit = fit_power_law(pts);
  EXPECT_NEAR(fit.exponent, 0.25, 1e-14);
  EXPECT_NEAR(fit.r_squared, 1.0, 1e-14);
  EXPECT_NEAR(std::exp(fit.log_intercept), 3.0, 1e-13);
  ASSERT_EQ(fit.residuals.size(), 3u);
}

TEST(Fit, ConstantData) {
  std::vector<std::pair<double, double>> pts;
  for (int x = 1; x <= 10; ++x) pts.emplace_back(x, 7.0);
  EXPECT_NEAR(fit_power_law(pts).exponent, 0.0, 1e-15);
}

TEST(Fit, NoisyQuarterLaw) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> noise(-0.01, 0.01);
  std::vector<std::pair<double, double>> pts;
  for (int k = 6; k <= 11; ++k) {
    const double x = std::ldexp(1.0, k);
    pts.emplace_back(x, 2.0 * std::pow(x, 0.25) * (1.0 + noise(rng)));
  }
  EXPECT_NEAR(fit_power_law(pts).exponent, 0.25, 0.01);
}

TEST(Fit, RejectsBadInput) {
  std::vector<std::pair<double, double>> two{{1, 1}, {2, 2}};
  EXPECT_THROW(fit_power_law(two), DomainError);
  std::vector<std::pair<double, double>> zero{{1, 1}, {2, 0}, {3, 3}};
  EXPECT_THROW(fit_power_law(zero), DomainError);
  std::vector<std::pair<double, double>> neg{{-1, 1}, {2, 2}, {3, 3}};
  EXPECT_THROW(fit_power_law(neg), DomainError);
}

TEST(Ids, ParseAndPrint) {
  EXPECT_EQ(parse_experiment_id("E4"), ExperimentId::E4);
  EXPECT_EQ(parse_experiment_id("e2"), ExperimentId::E2);
  EXPECT_EQ(to_string(ExperimentId::E6), "E6");
  EXPECT_THROW(parse_experiment_id("E7"), DomainError);
}

TEST(Grid, PowersOfTwo) {
  ExperimentConfig c = default_config(ExperimentId::E1);
  c.grid_min = 64;
  c.grid_max = 300;
  EXPECT_EQ(degree_grid(c), (std::vector<int>{64, 128, 256}));
  c.grid_min = 48;
  EXPECT_THROW(degree_grid(c), DomainError);
  c.grid_min = 512;
  EXPECT_THROW(degree_grid(c), DomainError);
}

TEST(Experiments, E1SmallGrid) {
  ExperimentConfig c = default_config(ExperimentId::E1);
  c.grid_min = 64;
  c.grid_max = 256;
  const auto r = run_experiment(c);
  ASSERT_EQ(r.table.rows.size(), 3u);
  const auto exact_col = 2;
  double prev = 0.0;
  for (const auto& row : r.table.rows) {
    const double v = std::get<double>(row[exact_col]);
    EXPECT_GT(v, prev);
    prev = v;
  }
  ASSERT_TRUE(r.fit);
  EXPECT_NEAR(r.fit->exponent, 0.25, 0.05);
}

TEST(Experiments, E2Grid) {
  const auto r = run_experiment(default_config(ExperimentId::E2));
  ASSERT_TRUE(r.fit);
  EXPECT_NEAR(r.fit->exponent, 0.5, 0.05);
  EXPECT_TRUE(r.passed());
}

TEST(Experiments, E6Values) {
  const auto r = run_experiment(default_config(ExperimentId::E6));
  EXPECT_TRUE(r.passed());
  const auto& cols = r.table.columns;
  const auto abs_col = std::find(cols.begin(), cols.end(), "abs") - cols.begin();
  const auto kind_col = std::find(cols.begin(), cols.end(), "kind") - cols.begin();
  int matched = 0;
  for (const auto& row : r.table.rows) {
    const double v = std::get<double>(row[abs_col]);
    if (std::get<std::string>(row[kind_col]) == "matched") {
      ++matched;
      EXPECT_NEAR(v, 5.0, 1e-10);
    } else {
      EXPECT_LT(v, 1e-12);
    }
  }
  EXPECT_EQ(matched, 1);
}

TEST(Experiments, Deterministic) {
  for (ExperimentId id : {ExperimentId::E1, ExperimentId::E5}) {
    ExperimentConfig c = default_config(id);
    c.grid_max = c.grid_min * 8;
    EXPECT_EQ(to_csv(as_record(run_experiment(c))), to_csv(as_record(run_experiment(c))));
  }
}

TEST(Experiments, SeedChangesProbeTarget) {
  ExperimentConfig a = default_config(ExperimentId::E5);
  ExperimentConfig b = a;
  b.seed = a.seed + 1;
  const auto pa = draw_probe_target(a), pb = draw_probe_target(b);
  EXPECT_NE(pa.point.phi, pb.point.phi);
  EXPECT_DOUBLE_EQ(draw_probe_target(a).point.theta, pa.point.theta);
}

TEST(Experiments, ProbeTargetHasPrescribedAngle) {
  const ExperimentConfig c = default_config(ExperimentId::E5);
  const auto t = draw_probe_target(c);
  EXPECT_NEAR(distance_rate(c.curve, t.point, t.stationary_s), c.c, 1e-9);
  EXPECT_LE(std::abs(t.stationary_s - c.window->center), c.window->halfwidth / 4 + 1e-15);
}

TEST(Experiments, TolHalvingIsStable) {
  ExperimentConfig c = default_config(ExperimentId::E1);
  c.grid_min = 64;
  c.grid_max = 256;
  const double e1 = run_experiment(c).fit->exponent;
  c.tol /= 2;
  const double e2 = run_experiment(c).fit->exponent;
  EXPECT_LE(std::abs(e1 - e2), 1e-3);
}
