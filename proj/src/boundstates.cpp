#include "epcont/boundstates.hpp"

#include <cmath>
#include <stdexcept>

#include "epcont/oracle.hpp"

namespace epcont {

double psi_b(const Model& m, double r, Branch point) {
  const PhaseFrame& f = m.frame(point);
  const double q = f.q;
  const double th = f.theta(r);
  const double g = f.gamma(r);
  const double s = std::sin(th);
  const double c = std::cos(th);
  const double bracket = -2.0 * q * q * g * g * c + (q * g + q * q * f.g1) * s + s * s * c;
  return 24.0 * q * q / m.w1(r) * bracket;
}

double chi_b(const Model& m, double r, Branch point) {
  const PhaseFrame& f = m.frame(point);
  const double q = f.q;
  const double q3 = q * q * q;
  const double th = f.theta(r);
  const double g = f.gamma(r);
  const double s = std::sin(th);
  const double c = std::cos(th);
  const double bracket = -2.0 * q3 * g * g * g * s - 3.0 * q * q * g * g * c + 3.0 * q * g * s * s * s -
                         f.g2 * q3 * s + 3.0 * f.g1 * g * q3 * c + 3.0 * s * s * c;
  return 8.0 * q / m.w1(r) * bracket;
}

Complex chi_b_pm(const Model& m, double r, Branch sign, Branch point) {
  const double s = sign == Branch::plus ? 1.0 : -1.0;
  return {chi_b(m, r, point), -s * m.frame(point).g0 * psi_b(m, r, point)};
}

Eigen::Matrix2d jordan_block(const ModelParams& p) {
  const double q = p.q;
  Eigen::Matrix2d h;
  h << q * q, 0.0, 2.0 * q, q * q;
  return h;
}

Eigen::Matrix2d eta_metric() {
  Eigen::Matrix2d e;
  e << 0.0, 1.0, 1.0, 0.0;
  return e;
}

ChainResiduals jordan_chain_residuals(const Model& m, double r_min, double r_max, double h) {
  if (r_min < 4.0 * h) throw std::invalid_argument("chain residuals need r_min >= 4h");
  const RadialGrid grid = grid_with_spacing(r_min - 2.0 * h, r_max + 2.0 * h, h);
  const double step = grid.h();
  std::vector<double> psi(grid.n), chi(grid.n), pot(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) {
    const double r = grid.at(i);
    psi[i] = psi_b(m, r);
    chi[i] = chi_b(m, r);
    pot[i] = m.v4(r);
  }
  const double q = m.q();
  const std::vector<double> h_psi = schrodinger_residual(psi, pot, q * q, step);
  const std::vector<double> h_chi = schrodinger_residual(chi, pot, q * q, step);
  ChainResiduals out;
  for (std::size_t i = 0; i < h_psi.size(); ++i) {
    out.res1 = std::max(out.res1, std::abs(h_psi[i]));
    out.res2 = std::max(out.res2, std::abs(h_chi[i] - 2.0 * q * psi[i + 2]));
    out.psi_scale = std::max(out.psi_scale, std::abs(psi[i + 2]));
    out.chi_scale = std::max(out.chi_scale, std::abs(chi[i + 2]));
  }
  return out;
}

JordanDoublet make_doublet(const Model& m, const std::vector<double>& grid) {
  JordanDoublet d;
  d.q = m.q();
  d.grid = grid;
  d.psi_b.reserve(grid.size());
  d.chi_b.reserve(grid.size());
  for (double r : grid) {
    d.psi_b.push_back(psi_b(m, r));
    d.chi_b.push_back(chi_b(m, r));
  }
  d.h_block = jordan_block(m.params());
  return d;
}

double invariant_subspace_residual(const Model& m, const JordanDoublet& d) {
  if (d.grid.size() < 5) throw std::invalid_argument("doublet grid too short");
  const double h = d.grid[1] - d.grid[0];
  std::vector<double> pot(d.grid.size());
  for (std::size_t i = 0; i < d.grid.size(); ++i) pot[i] = m.v4(d.grid[i]);
  const std::vector<double> h_psi = schrodinger_residual(d.psi_b, pot, 0.0, h);
  const std::vector<double> h_chi = schrodinger_residual(d.chi_b, pot, 0.0, h);
  double worst = 0.0;
  for (std::size_t i = 0; i < h_psi.size(); ++i) {
    const Eigen::Vector2d psi_vec(d.psi_b[i + 2], d.chi_b[i + 2]);
    const Eigen::Vector2d expected = d.h_block * psi_vec;
    worst = std::max(worst, std::abs(h_psi[i] - expected(0)));
    worst = std::max(worst, std::abs(h_chi[i] - expected(1)));
  }
  return worst;
}

}  // namespace epcont
