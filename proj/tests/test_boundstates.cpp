#include <doctest.h>

#include <cmath>

#include "epcont/boundstates.hpp"
#include "epcont/oracle.hpp"

using namespace epcont;

namespace {
const ModelParams canonical{1.0, 3.0, 1.0};
}

TEST_CASE("reference values of psi_B and chi_B") {
  const Model m(canonical);
  // high-precision evaluation of the closed forms
  CHECK(std::abs(psi_b(m, 0.0)) < 1e-14);
  CHECK(chi_b(m, 0.0) == doctest::Approx(1.49071198499985979).epsilon(1e-12));
  CHECK(psi_b(m, 0.58) == doctest::Approx(-2.2086017596356893).epsilon(1e-10));
  CHECK(psi_b(m, 3.35) == doctest::Approx(0.26129665507386424).epsilon(1e-10));
  CHECK(psi_b(m, 6.85) == doctest::Approx(-0.06146242742588939).epsilon(1e-10));
  CHECK(chi_b(m, 1.0) == doctest::Approx(-0.494777350469335).epsilon(1e-10));
}

TEST_CASE("parity under the continuation to -q") {
  const Model m({0.6, 1.4, 0.8});
  for (double r : {0.2, 1.9, 7.5}) {
    CHECK(psi_b(m, r, Branch::minus) == doctest::Approx(psi_b(m, r)));
    CHECK(chi_b(m, r, Branch::minus) == doctest::Approx(-chi_b(m, r)));
  }
}

TEST_CASE("chi_B+- split") {
  const Model m(canonical);
  const double r = 2.2;
  const double g0 = m.frame().g0;
  CHECK(std::abs(chi_b_pm(m, r, Branch::plus) - Complex(chi_b(m, r), -g0 * psi_b(m, r))) < 1e-14);
  CHECK(std::abs(chi_b_pm(m, r, Branch::minus) - Complex(chi_b(m, r), g0 * psi_b(m, r))) < 1e-14);
}

TEST_CASE("Jordan chain holds to difference accuracy") {
  for (const ModelParams& p : {canonical, ModelParams{-0.8, 2.1, 1.4}}) {
    const ChainResiduals c = jordan_chain_residuals(Model(p), 0.5, 30.0);
    CHECK(c.res1 / c.psi_scale < 1e-7);
    CHECK(c.res2 / std::max(c.psi_scale, c.chi_scale) < 1e-7);
  }
}

TEST_CASE("psi_B decays like 1/r^2") {
  const Model m(canonical);
  double tail = 0.0;
  for (double r = 300.0; r < 400.0; r += 0.01) tail += psi_b(m, r) * psi_b(m, r) * 0.01;
  CHECK(tail < 1e-6);
  double peak = 0.0;
  for (double r = 300.0; r < 310.0; r += 0.01) peak = std::max(peak, std::abs(psi_b(m, r)) * r * r);
  CHECK(peak < 10.0);
}

TEST_CASE("Jordan block algebra is exact") {
  const ModelParams p{0.3, 1.1, 1.7};
  const Eigen::Matrix2d h = jordan_block(p);
  CHECK(h(0, 0) == p.q * p.q);
  CHECK(h(0, 1) == 0.0);
  CHECK(h(1, 0) == 2.0 * p.q);
  CHECK(h(1, 1) == p.q * p.q);
  const Eigen::Matrix2d n = h - p.q * p.q * Eigen::Matrix2d::Identity();
  CHECK((n * n).isZero(0.0));
  const Eigen::Matrix2d eta = eta_metric();
  CHECK(Eigen::Matrix2d(eta * h * eta) == Eigen::Matrix2d(h.transpose()));
  CHECK(Eigen::Matrix2d(eta * eta) == Eigen::Matrix2d::Identity());
}

TEST_CASE("doublet spans an invariant subspace") {
  const Model m(canonical);
  const RadialGrid grid = grid_with_spacing(0.5, 30.0, 1e-3);
  const JordanDoublet d = make_doublet(m, grid.points());
  CHECK(d.q == 1.0);
  CHECK(d.h_block == jordan_block(canonical));
  double scale = 0.0;
  for (std::size_t i = 0; i < d.grid.size(); ++i) scale = std::max({scale, std::abs(d.psi_b[i]), std::abs(d.chi_b[i])});
  CHECK(invariant_subspace_residual(m, d) / scale < 1e-7);
}
