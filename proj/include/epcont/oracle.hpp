#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "epcont/model.hpp"

namespace epcont {

class Model;

class StiffnessFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SolverFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Uniform grid r_i = r_min + i h, i = 0..n-1, with h = (r_max - r_min)/(n-1).
struct RadialGrid {
  double r_min = 0.0;
  double r_max = 1.0;
  std::size_t n = 9;

  double h() const { return (r_max - r_min) / static_cast<double>(n - 1); }
  double at(std::size_t i) const { return r_min + static_cast<double>(i) * h(); }
  std::vector<double> points() const;
  /// Throws std::invalid_argument unless r_min >= 0, r_max > r_min, n >= 9.
  void check() const;
};

/// Grid with spacing at most h covering [r_min, r_max].
RadialGrid grid_with_spacing(double r_min, double r_max, double h);

/// Five-point fourth-order central second derivative. The two samples at
/// each end are dropped: out[i] approximates f''(r_{i+2}).
std::vector<double> fd_second_derivative(std::span<const double> samples, double h);
std::vector<Complex> fd_second_derivative(std::span<const Complex> samples, double h);

/// -f'' + (V - E) f at the interior samples (two dropped at each end).
std::vector<double> schrodinger_residual(std::span<const double> f, std::span<const double> potential,
                                         double energy, double h);
std::vector<Complex> schrodinger_residual(std::span<const Complex> f, std::span<const double> potential,
                                          double energy, double h);

/// Values held at the two end nodes before and after a step.
struct DirichletData {
  Complex left_old{};
  Complex left_new{};
  Complex right_old{};
  Complex right_new{};
};

/// One Cayley step (1 + i dt H/2) psi_new = (1 - i dt H/2) psi_old with the
/// three-point Laplacian, H = -d^2/dr^2 + V. The end nodes carry Dirichlet
/// data; zero data is a hard wall.
std::vector<Complex> crank_nicolson_step(std::span<const Complex> state, std::span<const double> potential,
                                         double dt, double h, const DirichletData& boundary = {});

/// Boundary values (r_min, r_max) at time t.
using BoundaryFn = std::function<std::pair<Complex, Complex>(double t)>;

/// steps Cayley steps from t0. Without a boundary function both ends are
/// hard walls.
std::vector<Complex> crank_nicolson_evolve(std::vector<Complex> state, std::span<const double> potential,
                                           double h, double dt, std::size_t steps, double t0 = 0.0,
                                           const BoundaryFn& boundary = {});

struct JostOracleOptions {
  double r_far = 0.0;           // start of the averaging window; 0 picks a default
  double window = 0.0;          // window length; 0 picks a default
  double rtol = 1e-10;
  double atol = 1e-12;
  std::size_t max_rhs_evals = 50'000'000;
};

/// Outgoing solution of -y'' + V y = k^2 y sampled on grid, up to an overall
/// constant.
///
/// The equation is integrated inward with an adaptive Dormand-Prince 5(4)
/// pair. Starting from a single radius with data (e^{ikR}, ik e^{ikR})
/// leaves an incoming admixture of order 1/R, so the data are imposed at
/// every point of a window [r_far, r_far + window] and the resulting
/// solutions are averaged with Hann weights. Throws StiffnessFailure when
/// the right-hand side count exceeds max_rhs_evals.
std::vector<Complex> integrate_jost(const std::function<double(double)>& potential, double k,
                                    const RadialGrid& grid, const JostOracleOptions& options);

/// Same with V = V[4] and window defaults chosen from k and q.
std::vector<Complex> integrate_jost(const Model& m, double k, const RadialGrid& grid,
                                    JostOracleOptions options = {});

}  // namespace epcont
