#include <doctest.h>

#include <cmath>
#include <vector>

#include "epcont/boundstates.hpp"
#include "epcont/evolution.hpp"
#include "epcont/oracle.hpp"
#include "epcont/scattering.hpp"

using namespace epcont;

namespace {
const ModelParams canonical{1.0, 3.0, 1.0};
}

TEST_CASE("doublet propagator") {
  const ModelParams p{0.2, 1.0, 1.3};
  const DoubletState a = doublet_propagator(p, 0.4);
  const DoubletState b = doublet_propagator(p, 1.1);
  const DoubletState ab = doublet_propagator(p, 1.5);
  CHECK((a.c_matrix * b.c_matrix - ab.c_matrix).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((doublet_propagator(p, 0.0).c_matrix - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() == 0.0);
  // dC/dt = -i H_B C
  const double h = 1e-5;
  const Eigen::Matrix2cd d =
      (doublet_propagator(p, 0.4 + h).c_matrix - doublet_propagator(p, 0.4 - h).c_matrix) / (2 * h);
  const Eigen::Matrix2cd rhs = Complex(0, -1) * jordan_block(p).cast<Complex>() * a.c_matrix;
  CHECK((d - rhs).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("closed-form doublet evolution") {
  const Model m(canonical);
  const std::vector<double> grid{0.5, 1.0, 3.0};
  const EvolvedDoublet e = evolve_doublet(m, grid, 0.8);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Complex phase = std::polar(1.0, -0.8);
    CHECK(std::abs(e.psi[i] - phase * psi_b(m, grid[i])) < 1e-15);
    CHECK(std::abs(e.chi[i] - phase * (chi_b(m, grid[i]) - Complex(0, 1.6) * psi_b(m, grid[i]))) < 1e-14);
  }
}

TEST_CASE("Simpson weights and norms") {
  const std::vector<double> w = simpson_weights(5, 0.25);
  double integral = 0.0;
  for (std::size_t i = 0; i < 5; ++i) integral += w[i] * std::pow(0.25 * i, 3);
  CHECK(integral == doctest::Approx(0.25));
  CHECK_THROWS_AS(simpson_weights(4, 0.1), std::invalid_argument);
  CHECK(l2_norm(std::vector<double>{1.0, 1.0, 1.0}, 0.5) == doctest::Approx(1.0));
  CHECK(l2_norm(std::vector<Complex>{Complex(0, 1), Complex(0, 1)}, 4.0) == doctest::Approx(2.0));
}

TEST_CASE("Gaussian packet") {
  const Wavepacket p = gaussian_packet(1.0, 0.25, 100);
  CHECK(p.k_grid.size() % 4 == 1);
  CHECK(p.k_grid.front() > 0.0);
  const double h = p.k_grid[1] - p.k_grid[0];
  const std::vector<double> w = simpson_weights(p.k_grid.size(), h);
  double n2 = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) n2 += w[i] * std::norm(p.coeffs[i]);
  CHECK(n2 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(gaussian_packet(1.0, 0.0, 9), std::invalid_argument);
}

TEST_CASE("packet propagation") {
  const Model m(canonical);
  const Wavepacket packet = gaussian_packet(1.5, 0.3, 41);
  const std::vector<double> r{0.5, 2.0, 5.0};
  const PacketPropagator prop(m, packet, r);
  // direct sum at t = 0.7
  const double h = packet.k_grid[1] - packet.k_grid[0];
  const std::vector<double> w = simpson_weights(packet.k_grid.size(), h);
  const std::vector<Complex> at = prop.at(0.7);
  for (std::size_t j = 0; j < r.size(); ++j) {
    Complex acc{};
    for (std::size_t i = 0; i < w.size(); ++i) {
      const double k = packet.k_grid[i];
      acc += w[i] * packet.coeffs[i] * std::polar(1.0, -k * k * 0.7) * psi_regular(m, k, r[j]);
    }
    CHECK(std::abs(at[j] - acc) < 1e-12 * (1.0 + std::abs(acc)));
  }
  PacketDiagnostics diag;
  const std::vector<Complex> one = propagate_packet(m, packet, r, 0.7, &diag);
  CHECK(std::abs(one[1] - at[1]) == 0.0);
  CHECK(diag.resolution_change >= 0.0);
  CHECK(diag.under_resolved == (diag.resolution_change > 1e-4));
}

TEST_CASE("the chi norm grows linearly at rate 2q |psi_B|") {
  const Model m(canonical);
  const RadialGrid grid = grid_with_spacing(0.0, 400.0, 0.01);
  const std::vector<double> r = grid.points();
  const double n40 = l2_norm(evolve_doublet(m, r, 40.0).chi, grid.h());
  const double n50 = l2_norm(evolve_doublet(m, r, 50.0).chi, grid.h());
  const double psi = l2_norm(evolve_doublet(m, r, 0.0).psi, grid.h());
  CHECK((n50 - n40) / 10.0 == doctest::Approx(2.0 * psi).epsilon(1e-3));
}
