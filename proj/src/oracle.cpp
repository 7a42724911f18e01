#include "epcont/oracle.hpp"

#include <algorithm>
#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <numbers>

#include "epcont/potential.hpp"

namespace epcont {

std::vector<double> RadialGrid::points() const {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = at(i);
  return out;
}

void RadialGrid::check() const {
  if (!(r_min >= 0.0) || !(r_max > r_min) || n < 9) {
    throw std::invalid_argument("RadialGrid needs 0 <= r_min < r_max and at least 9 points");
  }
}

RadialGrid grid_with_spacing(double r_min, double r_max, double h) {
  const auto n = static_cast<std::size_t>(std::ceil((r_max - r_min) / h)) + 1;
  return RadialGrid{r_min, r_max, std::max<std::size_t>(n, 9)};
}

namespace {

template <class T>
std::vector<T> second_derivative(std::span<const T> f, double h) {
  if (f.size() < 5) return {};
  std::vector<T> out(f.size() - 4);
  const double s = 1.0 / (12.0 * h * h);
  for (std::size_t i = 2; i + 2 < f.size(); ++i) {
    out[i - 2] = (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) * s;
  }
  return out;
}

template <class T>
std::vector<T> residual(std::span<const T> f, std::span<const double> potential, double energy, double h) {
  std::vector<T> d2 = second_derivative(f, h);
  for (std::size_t i = 0; i < d2.size(); ++i) d2[i] = -d2[i] + (potential[i + 2] - energy) * f[i + 2];
  return d2;
}

}  // namespace

std::vector<double> fd_second_derivative(std::span<const double> samples, double h) {
  return second_derivative(samples, h);
}

std::vector<Complex> fd_second_derivative(std::span<const Complex> samples, double h) {
  return second_derivative(samples, h);
}

std::vector<double> schrodinger_residual(std::span<const double> f, std::span<const double> potential,
                                         double energy, double h) {
  return residual(f, potential, energy, h);
}

std::vector<Complex> schrodinger_residual(std::span<const Complex> f, std::span<const double> potential,
                                          double energy, double h) {
  return residual(f, potential, energy, h);
}

std::vector<Complex> crank_nicolson_step(std::span<const Complex> state, std::span<const double> potential,
                                         double dt, double h, const DirichletData& boundary) {
  const std::size_t n = state.size();
  if (n < 3 || potential.size() != n) throw SolverFailure("state and potential sizes disagree");
  const std::size_t m = n - 2;
  const Complex half(0.0, 0.5 * dt);
  const double inv_h2 = 1.0 / (h * h);
  const Complex off = -half * inv_h2;

  std::vector<Complex> rhs(m);
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t i = j + 1;
    const Complex left = i == 1 ? boundary.left_old : state[i - 1];
    const Complex right = i == n - 2 ? boundary.right_old : state[i + 1];
    const Complex h_psi = (-left + 2.0 * state[i] - right) * inv_h2 + potential[i] * state[i];
    rhs[j] = state[i] - half * h_psi;
  }
  rhs.front() -= off * boundary.left_new;
  rhs.back() -= off * boundary.right_new;

  // Thomas sweep on the constant-off-diagonal system.
  std::vector<Complex> c_prime(m);
  Complex pivot = 1.0 + half * (2.0 * inv_h2 + potential[1]);
  if (std::abs(pivot) == 0.0) throw SolverFailure("zero pivot in tridiagonal solve");
  c_prime[0] = off / pivot;
  rhs[0] /= pivot;
  for (std::size_t j = 1; j < m; ++j) {
    const Complex diag = 1.0 + half * (2.0 * inv_h2 + potential[j + 1]);
    pivot = diag - off * c_prime[j - 1];
    if (std::abs(pivot) == 0.0) throw SolverFailure("zero pivot in tridiagonal solve");
    c_prime[j] = off / pivot;
    rhs[j] = (rhs[j] - off * rhs[j - 1]) / pivot;
  }
  for (std::size_t j = m - 1; j-- > 0;) rhs[j] -= c_prime[j] * rhs[j + 1];

  std::vector<Complex> out(n);
  out.front() = boundary.left_new;
  out.back() = boundary.right_new;
  std::copy(rhs.begin(), rhs.end(), out.begin() + 1);
  return out;
}

std::vector<Complex> crank_nicolson_evolve(std::vector<Complex> state, std::span<const double> potential,
                                           double h, double dt, std::size_t steps, double t0,
                                           const BoundaryFn& boundary) {
  auto ends = [&](double t) {
    return boundary ? boundary(t) : std::pair<Complex, Complex>{};
  };
  auto old_ends = ends(t0);
  for (std::size_t s = 0; s < steps; ++s) {
    const auto new_ends = ends(t0 + static_cast<double>(s + 1) * dt);
    const DirichletData data{old_ends.first, new_ends.first, old_ends.second, new_ends.second};
    state = crank_nicolson_step(state, potential, dt, h, data);
    old_ends = new_ends;
  }
  return state;
}

namespace {

using State = std::array<double, 4>;  // y1, y1', y2, y2'

struct RadialSystem {
  const std::function<double(double)>* potential;
  double k2;
  std::size_t* evals;
  std::size_t budget;

  void operator()(const State& y, State& dy, double r) const {
    if (++*evals > budget) throw StiffnessFailure("Jost integration exceeded its step budget");
    const double g = (*potential)(r) - k2;
    dy[0] = y[1];
    dy[1] = g * y[0];
    dy[2] = y[3];
    dy[3] = g * y[2];
  }
};

}  // namespace

std::vector<Complex> integrate_jost(const std::function<double(double)>& potential, double k,
                                    const RadialGrid& grid, const JostOracleOptions& options) {
  grid.check();
  if (!(k > 0.0)) throw std::invalid_argument("integrate_jost needs k > 0");
  const double window = options.window > 0.0 ? options.window : 100.0 / k;
  const double spacing = std::min(std::numbers::pi / (8.0 * k), window / 64.0);
  const double r_far = std::max(options.r_far, grid.r_max + spacing);
  const auto n_window = static_cast<std::size_t>(std::ceil(window / spacing)) + 1;

  // Descending times: window points first, then the output grid.
  std::vector<double> times;
  times.reserve(n_window + grid.n);
  for (std::size_t j = 0; j < n_window; ++j) {
    times.push_back(r_far + window - window * static_cast<double>(j) / static_cast<double>(n_window - 1));
  }
  for (std::size_t i = grid.n; i-- > 0;) {
    times.push_back(grid.at(i));
  }

  Complex coef_a{};
  Complex coef_b{};
  double weight_sum = 0.0;
  std::vector<State> out_states(grid.n);
  std::size_t index = 0;
  std::size_t grid_index = grid.n;

  auto observer = [&](const State& y, double r) {
    if (index < n_window) {
      const double w = std::pow(std::sin(std::numbers::pi * static_cast<double>(index) /
                                         static_cast<double>(n_window - 1)),
                                2);
      if (w > 0.0) {
        const Complex e = std::polar(1.0, k * r);
        const Complex de = Complex(0.0, k) * e;
        const double det = y[0] * y[3] - y[2] * y[1];
        coef_a += w * (e * y[3] - de * y[2]) / det;
        coef_b += w * (de * y[0] - e * y[1]) / det;
        weight_sum += w;
      }
    } else {
      out_states[--grid_index] = y;
    }
    ++index;
  };

  std::size_t evals = 0;
  RadialSystem system{&potential, k * k, &evals, options.max_rhs_evals};
  State y{1.0, 0.0, 0.0, 1.0};
  namespace odeint = boost::numeric::odeint;
  auto stepper = odeint::make_dense_output(options.atol, options.rtol, odeint::runge_kutta_dopri5<State>());
  odeint::integrate_times(stepper, system, y, times.begin(), times.end(), -spacing, observer);

  coef_a /= weight_sum;
  coef_b /= weight_sum;
  std::vector<Complex> out(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) out[i] = coef_a * out_states[i][0] + coef_b * out_states[i][2];
  return out;
}

std::vector<Complex> integrate_jost(const Model& m, double k, const RadialGrid& grid, JostOracleOptions options) {
  const double q = m.q();
  if (std::abs(k - q) <= 1e-6) throw std::invalid_argument("integrate_jost needs |k - q| > 1e-6");
  if (options.r_far <= 0.0) options.r_far = std::max(60.0 / q, grid.r_max);
  if (options.window <= 0.0) options.window = std::min(1e5, 100.0 / std::min(k, std::abs(k - q)));
  const std::function<double(double)> v = [&m](double r) { return m.v4(r); };
  return integrate_jost(v, k, grid, options);
}

}  // namespace epcont
