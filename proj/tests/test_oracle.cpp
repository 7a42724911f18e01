#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "epcont/jost.hpp"
#include "epcont/oracle.hpp"

using namespace epcont;

TEST_CASE("radial grid") {
  const RadialGrid g{0.0, 2.0, 11};
  CHECK(g.h() == doctest::Approx(0.2));
  CHECK(g.points().back() == doctest::Approx(2.0));
  CHECK_NOTHROW(g.check());
  CHECK_THROWS_AS((RadialGrid{1.0, 0.5, 11}.check()), std::invalid_argument);
  CHECK_THROWS_AS((RadialGrid{0.0, 1.0, 3}.check()), std::invalid_argument);
  const RadialGrid s = grid_with_spacing(0.0, 1.0, 0.03);
  CHECK(s.h() <= 0.03);
  CHECK(s.r_max == 1.0);
}

TEST_CASE("five-point second derivative") {
  const RadialGrid g{0.0, 1.0, 101};
  std::vector<double> f;
  for (double r : g.points()) f.push_back(std::sin(3.0 * r));
  const std::vector<double> d2 = fd_second_derivative(f, g.h());
  REQUIRE(d2.size() == f.size() - 4);
  for (std::size_t i = 0; i < d2.size(); ++i) CHECK(d2[i] == doctest::Approx(-9.0 * f[i + 2]).epsilon(1e-6));
  // quartics are differentiated exactly
  std::vector<double> p;
  for (double r : g.points()) p.push_back(r * r * r * r);
  const std::vector<double> dp = fd_second_derivative(p, g.h());
  for (std::size_t i = 0; i < dp.size(); ++i) {
    const double r = g.at(i + 2);
    CHECK(dp[i] == doctest::Approx(12.0 * r * r).epsilon(1e-9));
  }
}

TEST_CASE("Crank-Nicolson phase of a discrete eigenmode") {
  // Free box with hard walls: sin(n pi r / L) is an exact eigenvector of
  // the three-point Laplacian with eigenvalue (2 - 2 cos(n pi h / L)) / h^2.
  const double length = 1.0;
  const std::size_t n = 201;
  const double h = length / (n - 1);
  const double dt = 1e-3;
  const int mode = 3;
  std::vector<Complex> psi(n);
  for (std::size_t i = 0; i < n; ++i) psi[i] = std::sin(mode * std::numbers::pi * i * h / length);
  const std::vector<double> pot(n, 0.0);
  const double lambda = (2.0 - 2.0 * std::cos(mode * std::numbers::pi * h / length)) / (h * h);
  const std::size_t steps = 50;
  const std::vector<Complex> out = crank_nicolson_evolve(psi, pot, h, dt, steps);
  const Complex per_step = (1.0 - Complex(0, 0.5 * dt * lambda)) / (1.0 + Complex(0, 0.5 * dt * lambda));
  const Complex total = std::pow(per_step, static_cast<double>(steps));
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(out[i] - total * psi[i]));
  CHECK(worst < 1e-10);
}

TEST_CASE("Crank-Nicolson conserves the norm with hard walls") {
  const std::size_t n = 301;
  const double h = 0.05;
  std::vector<Complex> psi(n);
  std::vector<double> pot(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = i * h;
    psi[i] = std::exp(-(r - 7.0) * (r - 7.0)) * std::polar(1.0, 2.0 * r);
    pot[i] = 3.0 * std::sin(r);
  }
  psi.front() = psi.back() = 0.0;
  auto norm = [&](const std::vector<Complex>& v) {
    double a = 0.0;
    for (const Complex& c : v) a += std::norm(c);
    return a;
  };
  const std::vector<Complex> out = crank_nicolson_evolve(psi, pot, h, 0.01, 300);
  CHECK(norm(out) == doctest::Approx(norm(psi)).epsilon(1e-12));
}

TEST_CASE("inward integration of the free equation") {
  // V = 0: the outgoing solution is e^{ikr} itself
  const double k = 1.3;
  const RadialGrid grid{0.5, 20.0, 201};
  JostOracleOptions o;
  o.r_far = 25.0;
  o.window = 20.0;
  const std::vector<Complex> y = integrate_jost([](double) { return 0.0; }, k, grid, o);
  const Complex c = y[0] / std::polar(1.0, k * grid.at(0));
  for (std::size_t i = 0; i < grid.n; ++i) {
    CHECK(std::abs(y[i] / std::polar(1.0, k * grid.at(i)) - c) < 1e-8 * std::abs(c));
  }
}

TEST_CASE("inward integration matches the closed-form Jost solution") {
  const Model m({1.0, 3.0, 1.0});
  const double k = 0.7;
  const RadialGrid grid{0.5, 30.0, 301};
  const std::vector<Complex> y = integrate_jost(m, k, grid);
  const Complex c = y[0] / jost_normalized(m, k, grid.at(0), Branch::plus);
  for (std::size_t i = 0; i < grid.n; i += 10) {
    CHECK(std::abs(y[i] / jost_normalized(m, k, grid.at(i), Branch::plus) / c - 1.0) < 1e-5);
  }
  CHECK_THROWS(integrate_jost(m, 1.0, grid));
}

TEST_CASE("the right-hand side budget is enforced") {
  const RadialGrid grid{0.5, 5.0, 21};
  JostOracleOptions o;
  o.max_rhs_evals = 100;
  CHECK_THROWS_AS(integrate_jost([](double) { return 0.0; }, 1.0, grid, o), StiffnessFailure);
}
