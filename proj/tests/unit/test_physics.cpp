#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mrhweno/physics.hpp"
#include "mrhweno/riemann.hpp"
#include "oracle_data.hpp"

using namespace mrhweno;

namespace {

struct RandomStates {
  std::mt19937_64 rng{2024};
  std::uniform_real_distribution<double> rho{0.1, 10.0};
  std::uniform_real_distribution<double> vel{-5.0, 5.0};
  std::uniform_real_distribution<double> p{0.1, 10.0};

  Euler1D::State one_d(const Euler1D& e) { return e.conserved(rho(rng), vel(rng), 0.0, p(rng)); }
  Euler2D::State two_d(const Euler2D& e) {
    return e.conserved(rho(rng), vel(rng), vel(rng), p(rng));
  }
};

}  // namespace

TEST(Euler, EquationOfState) {
  const Euler1D e;
  const Primitive q = e.primitives({1.0, 0.0, 2.5});
  EXPECT_NEAR(q.p, 1.0, 1e-15);
  EXPECT_NEAR(q.c, std::sqrt(1.4), 1e-15);
  const auto lax = e.conserved(0.445, 0.698, 0.0, 3.528);
  EXPECT_NEAR(lax[1], 0.445 * 0.698, 1e-15);
  EXPECT_NEAR(e.primitives(lax).p, 3.528, 1e-14);
  const auto blast = e.conserved(1.0, 0.0, 0.0, 1e3);
  const Primitive b = e.primitives(blast);
  EXPECT_NEAR(b.p, 1e3, 1e-12 * 1e3);
  EXPECT_NEAR(e.conserved(b.rho, b.u, 0.0, b.p)[2], blast[2], 1e-12 * blast[2]);
}

TEST(Euler, InadmissibleStatesThrow) {
  const Euler1D e;
  EXPECT_THROW(e.primitives({-1.0, 0.0, 1.0}), AdmissibilityError);
  EXPECT_THROW(e.primitives({1.0, 3.0, 1.0}), AdmissibilityError);
  EXPECT_THROW(e.primitives({std::nan(""), 0.0, 1.0}), AdmissibilityError);
}

TEST(Euler, PhysicalFluxes) {
  const Euler1D e1;
  const auto f = e1.flux({1.0, 0.0, 2.5});
  EXPECT_NEAR(f[0], 0.0, 1e-15);
  EXPECT_NEAR(f[1], 1.0, 1e-15);
  EXPECT_NEAR(f[2], 0.0, 1e-15);
  const Euler2D e2;
  const Euler2D::State s{1.0, 1.0, 0.0, 3.0};
  const double p = 0.4 * (3.0 - 0.5);
  const auto g = e2.flux(s, 1);
  EXPECT_NEAR(g[0], 0.0, 1e-15);
  EXPECT_NEAR(g[1], 0.0, 1e-15);
  EXPECT_NEAR(g[2], p, 1e-15);
  EXPECT_NEAR(g[3], 0.0, 1e-15);
  const Burgers1D b;
  EXPECT_EQ(b.flux({2.0})[0], 2.0);
}

TEST(Euler, WaveSpeeds) {
  const Euler1D e;
  EXPECT_NEAR(e.wave_speed({1.0, 0.0, 2.5}), std::sqrt(1.4), 1e-15);
  const Burgers1D b;
  EXPECT_EQ(std::max(b.wave_speed({-0.5}), b.wave_speed({1.5})), 1.5);
  const auto l = e.conserved(0.445, 0.698, 0.0, 3.528);
  const auto r = e.conserved(0.5, 0.0, 0.0, 0.571);
  const double expected = std::max(0.698 + std::sqrt(1.4 * 3.528 / 0.445), std::sqrt(1.4 * 0.571 / 0.5));
  EXPECT_NEAR(std::max(e.wave_speed(l), e.wave_speed(r)), expected, 1e-14);
}

TEST(Eigensystem, LeftRightInverseAndEigenpairs) {
  RandomStates rs;
  const Euler2D e2;
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = rs.two_d(e2);
    for (int dir = 0; dir < 2; ++dir) {
      const auto es = e2.eigensystem(s, dir);
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
          double lr = 0.0;
          for (int k = 0; k < 4; ++k) lr += es.left[a][k] * es.right[k][b];
          EXPECT_NEAR(lr, a == b ? 1.0 : 0.0, 1e-12);
        }
      }
      // A r = lambda r via a central difference of the flux along r.
      const Primitive q = e2.primitives(s);
      const double un = dir == 0 ? q.u : q.v;
      const std::array<double, 4> lambda = {un - q.c, un, un, un + q.c};
      for (int col = 0; col < 4; ++col) {
        const double h = 1e-6;
        Euler2D::State sp = s;
        Euler2D::State sm = s;
        for (int k = 0; k < 4; ++k) {
          sp[k] += h * es.right[k][col];
          sm[k] -= h * es.right[k][col];
        }
        const auto fp = e2.flux(sp, dir);
        const auto fm = e2.flux(sm, dir);
        for (int k = 0; k < 4; ++k) {
          const double ar = (fp[k] - fm[k]) / (2.0 * h);
          EXPECT_NEAR(ar, lambda[col] * es.right[k][col], 1e-6 * (1.0 + std::abs(ar)));
        }
      }
    }
  }
}

TEST(HLLC, ConsistencyOnRandomStates) {
  RandomStates rs;
  const Euler1D e1;
  const Euler2D e2;
  for (int trial = 0; trial < 100; ++trial) {
    const auto s1 = rs.one_d(e1);
    const auto f1 = hllc_flux(e1, s1, s1);
    const auto g1 = e1.flux(s1);
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(f1[k], g1[k], 1e-12 * (1.0 + std::abs(g1[k])));
    const auto s2 = rs.two_d(e2);
    for (int dir = 0; dir < 2; ++dir) {
      const auto f2 = hllc_flux(e2, s2, s2, dir);
      const auto g2 = e2.flux(s2, dir);
      for (int k = 0; k < 4; ++k) EXPECT_NEAR(f2[k], g2[k], 1e-12 * (1.0 + std::abs(g2[k])));
    }
  }
}

TEST(HLLC, WaveOrderingOnRandomPairs) {
  RandomStates rs;
  const Euler1D e;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto l = rs.one_d(e);
    const auto r = rs.one_d(e);
    HLLCWaves w;
    EXPECT_NO_THROW(hllc_flux(e, l, r, 0, &w));
    EXPECT_LE(w.s_left, w.s_star);
    EXPECT_LE(w.s_star, w.s_right);
  }
}

TEST(HLLC, SupersonicUpwindBranch) {
  const Euler1D e;
  const auto l = e.conserved(1.0, 10.0, 0.0, 1.0);
  const auto r = e.conserved(0.9, 9.5, 0.0, 1.1);
  const auto f = hllc_flux(e, l, r);
  const auto fl = e.flux(l);
  for (int k = 0; k < 3; ++k) EXPECT_DOUBLE_EQ(f[k], fl[k]);
  const auto fr = e.flux(e.conserved(1.0, -10.0, 0.0, 1.0));
  const auto g = hllc_flux(e, e.conserved(0.9, -9.5, 0.0, 1.1), e.conserved(1.0, -10.0, 0.0, 1.0));
  for (int k = 0; k < 3; ++k) EXPECT_DOUBLE_EQ(g[k], fr[k]);
}

TEST(HLLC, SodFluxMatchesIndependentOracle) {
  const auto& o = test_support::oracle()["hllc_sod"];
  const Euler1D e;
  const auto l = e.conserved(1.0, 0.0, 0.0, 1.0);
  const auto r = e.conserved(0.125, 0.0, 0.0, 0.1);
  HLLCWaves w;
  const auto f = hllc_flux(e, l, r, 0, &w);
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(f[k], o["flux"][k].get<double>(), 1e-12);
  EXPECT_NEAR(w.s_left, o["s_left"].get<double>(), 1e-12);
  EXPECT_NEAR(w.s_star, o["s_star"].get<double>(), 1e-12);
  EXPECT_NEAR(w.s_right, o["s_right"].get<double>(), 1e-12);
  // 2D with the pair along y and a passive tangential velocity.
  const Euler2D e2;
  const auto f2 = hllc_flux(e2, e2.conserved(1.0, 0.0, 0.0, 1.0), e2.conserved(0.125, 0.0, 0.0, 0.1), 1);
  EXPECT_NEAR(f2[0], o["flux"][0].get<double>(), 1e-12);
  EXPECT_NEAR(f2[2], o["flux"][1].get<double>(), 1e-12);
  EXPECT_NEAR(f2[1], 0.0, 1e-15);
  EXPECT_NEAR(f2[3], o["flux"][2].get<double>(), 1e-12);
}

TEST(HLLC, MirrorSymmetry) {
  RandomStates rs;
  const Euler1D e;
  for (int trial = 0; trial < 100; ++trial) {
    const auto l = rs.one_d(e);
    const auto r = rs.one_d(e);
    const auto f = hllc_flux(e, l, r);
    const auto g = hllc_flux(e, Euler1D::State{r[0], -r[1], r[2]}, Euler1D::State{l[0], -l[1], l[2]});
    EXPECT_NEAR(f[0], -g[0], 1e-12 * (1.0 + std::abs(f[0])));
    EXPECT_NEAR(f[1], g[1], 1e-12 * (1.0 + std::abs(f[1])));
    EXPECT_NEAR(f[2], -g[2], 1e-12 * (1.0 + std::abs(f[2])));
  }
}

TEST(LLF, BurgersArithmetic) {
  const Burgers1D b;
  EXPECT_DOUBLE_EQ(numerical_flux(b, Vec<1>{1.0}, Vec<1>{-1.0}, 0)[0], 1.5);
  EXPECT_DOUBLE_EQ(numerical_flux(b, Vec<1>{0.0}, Vec<1>{1.0}, 0)[0], -0.25);
  EXPECT_DOUBLE_EQ(numerical_flux(b, Vec<1>{0.7}, Vec<1>{0.7}, 0)[0], 0.245);
}
