#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>

#include "mrhweno/driver.hpp"
#include "mrhweno/harness.hpp"
#include "mrhweno/problems.hpp"

using namespace mrhweno;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST(ErrorNorms, IdenticalFieldsGiveZero) {
  const Grid1D g = build_grid(0.0, 2.0, 8);
  MomentField1D f(1, 8);
  std::vector<StateVec> ref(8, StateVec{});
  for (int i = 0; i < 8; ++i) f.u(0, i) = ref[i][0] = 0.1 * i;
  const ErrorNorms e = error_norms(f, g, ref);
  EXPECT_EQ(e.l1, 0.0);
  EXPECT_EQ(e.linf, 0.0);
}

TEST(ErrorNorms, SingleCellOffset) {
  const int n = 20;
  const double delta = 0.3;
  const Grid1D g = build_grid(-1.0, 1.0, n);
  MomentField1D f(3, n);
  std::vector<StateVec> ref(n, StateVec{});
  f.u(1, 7) = delta;
  EXPECT_EQ(error_norms(f, g, ref, 0).linf, 0.0);
  const ErrorNorms e = error_norms(f, g, ref, 1);
  EXPECT_NEAR(e.l1, delta / n, 1e-16);
  EXPECT_EQ(e.linf, delta);

  const Grid2D g2 = build_grid(0.0, 2.0, 0.0, 1.0, 10, 5);
  MomentField2D f2(1, 10, 5);
  std::vector<StateVec> ref2(50, StateVec{});
  ref2[3 + 10 * 2][0] = -delta;
  const ErrorNorms e2 = error_norms(f2, g2, ref2);
  EXPECT_NEAR(e2.l1, delta / 50.0, 1e-16);
  EXPECT_EQ(e2.linf, delta);
  EXPECT_THROW(error_norms(f, g, std::vector<StateVec>(n - 1)), ConfigError);
}

TEST(ConvergenceTable, ObservedOrders) {
  const std::vector<int> n = {10, 20, 40};
  const std::vector<ErrorNorms> e = {{1.0, 2.0}, {1.0 / 32.0, 0.5}, {1.0 / 1024.0, 0.125}};
  const auto rows = convergence_table(n, e);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_TRUE(std::isnan(rows[0].l1_order));
  EXPECT_NEAR(rows[1].l1_order, 5.0, 1e-14);
  EXPECT_NEAR(rows[2].l1_order, 5.0, 1e-14);
  EXPECT_NEAR(rows[2].linf_order, 2.0, 1e-14);
  const std::string text = format_table(rows, 2);
  EXPECT_NE(text.find("40x40"), std::string::npos);
  EXPECT_NE(text.find("5.00"), std::string::npos);
  EXPECT_THROW(convergence_table({10}, {}), ConfigError);
}

TEST(ConvergenceTable, ExactInitialDataHasZeroError) {
  const ProblemSpec s = make_problem("burgers1d");
  const Grid1D g = make_grid_1d(s, 40);
  const MomentField1D f = init_moments(s, g);
  const ErrorNorms e = error_norms(f, g, reference_averages(s, g, 0.0));
  EXPECT_LT(e.l1, 1e-15);
  EXPECT_LT(e.linf, 1e-15);
}

TEST(Dumps, OneDimensionalRows) {
  const Grid1D g = build_grid(0.0, 1.0, 4);
  MomentField1D f(3, 4);
  const Euler1D e;
  for (int i = 0; i < 4; ++i) {
    const auto s = e.conserved(1.0 + 0.1 * i, 0.5, 0.0, 2.0 / 3.0 + i);
    for (int k = 0; k < 3; ++k) f.u(k, i) = s[k];
    f.v(0, i) = 1.0 / 3.0;
  }
  const std::string path = temp_path("mrhweno_dump1d.dat");
  dump_solution(f, g, 1.4, {0, 1, 0, 0}, path);
  const auto rows = read_columns(path);
  ASSERT_EQ(rows.size(), 4u);
  for (int i = 0; i < 4; ++i) {
    ASSERT_EQ(rows[i].size(), 11u);
    EXPECT_EQ(rows[i][0], g.center(i));
    EXPECT_EQ(rows[i][1], f.u(0, i));
    EXPECT_EQ(rows[i][3], f.u(2, i));
    EXPECT_EQ(rows[i][4], 1.0 / 3.0);
    EXPECT_NEAR(rows[i][8], 0.5, 1e-15);
    EXPECT_NEAR(rows[i][9], 2.0 / 3.0 + i, 1e-14);
    EXPECT_EQ(rows[i][10], i == 1 ? 1.0 : 0.0);
  }
  std::filesystem::remove(path);
}

TEST(Dumps, TwoDimensionalRowsAndObstacle) {
  const Grid2D g = build_grid(0.0, 3.0, 0.0, 1.0, 6, 4);
  MomentField2D f(1, 6, 4);
  for (int j = 0; j < 4; ++j) {
    for (int i = 0; i < 6; ++i) f.u(0, f.cell(i, j)) = i + 10 * j;
  }
  std::vector<char> fluid(24, 1);
  fluid[5] = 0;
  const std::string path = temp_path("mrhweno_dump2d.dat");
  dump_solution(f, g, 1.4, {}, fluid, path);
  const auto rows = read_columns(path);
  ASSERT_EQ(rows.size(), 24u);
  EXPECT_EQ(rows[7][0], g.xc(1));
  EXPECT_EQ(rows[7][1], g.yc(1));
  EXPECT_EQ(rows[7][2], 11.0);
  EXPECT_EQ(rows[5].back(), -1.0);
  EXPECT_EQ(rows[6].back(), 0.0);
  std::filesystem::remove(path);
}

TEST(Dumps, FullPrecisionRoundTrip) {
  const std::vector<ConvergenceRow> rows = {{40, 1.0 / 3.0, std::nan(""), std::sqrt(2.0), std::nan("")},
                                            {80, std::exp(-20.0), 5.123456789012345, 1e-300, 0.1}};
  const std::string path = temp_path("mrhweno_table.dat");
  write_text(path, format_table(rows, 1, true));
  const auto cols = read_columns(path);
  ASSERT_EQ(cols.size(), 2u);
  ASSERT_EQ(cols[1].size(), 5u);
  EXPECT_EQ(cols[1][1], std::exp(-20.0));
  EXPECT_EQ(cols[1][2], 5.123456789012345);
  EXPECT_EQ(cols[1][3], 1e-300);
  EXPECT_EQ(cols[0][1], 1.0 / 3.0);
  std::filesystem::remove(path);
}

TEST(Dumps, TroubledLog) {
  const std::string path = temp_path("mrhweno_troubled.dat");
  dump_troubled({{1, 0.01, 5, 0}, {2, 0.02, 6, 0}}, 1, path);
  const auto rows = read_columns(path);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1][0], 2.0);
  EXPECT_EQ(rows[1][2], 6.0);
  std::filesystem::remove(path);
}

TEST(Driver, BurgersCoarseRunError) {
  const ProblemSpec s = make_problem("burgers1d");
  RunRequest req;
  req.nx = 40;
  req.options.accuracy = true;
  const RunOutput out = run_problem(s, req);
  EXPECT_NEAR(out.t_final, s.t_final, 1e-15);
  EXPECT_NEAR(out.result.t, s.t_final, 1e-14);
  const ErrorNorms e = reference_errors(s, out);
  EXPECT_GT(e.l1, 1.23e-7);
  EXPECT_LT(e.l1, 1.23e-5);
  EXPECT_LE(out.result.max_troubled_fraction, 0.1);
}

TEST(Driver, NoReferenceThrows) {
  const ProblemSpec s = make_problem("forward-step");
  RunRequest req;
  req.nx = 15;
  req.ny = 5;
  req.t_final = 1e-3;
  const RunOutput out = run_problem(s, req);
  EXPECT_TRUE(out.bounds.finite);
  EXPECT_NEAR(out.bounds.rho_min, 1.4, 1e-3);
  EXPECT_THROW(reference_errors(s, out), ConfigError);
}
