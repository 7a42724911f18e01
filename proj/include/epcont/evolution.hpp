#pragma once

#include <Eigen/Dense>
#include <vector>

#include "epcont/potential.hpp"

namespace epcont {

/// C(q,t) = exp(-i H_B t) = e^{-i q^2 t} [[1, 0], [-2iqt, 1]].
struct DoubletState {
  double t = 0.0;
  Eigen::Matrix2cd c_matrix;
};

DoubletState doublet_propagator(const ModelParams& p, double t);

/// Closed-form evolution of psi_B and chi_B sampled on grid:
/// psi(t) = e^{-iq^2 t} psi_B, chi(t) = e^{-iq^2 t} (chi_B - 2iqt psi_B).
struct EvolvedDoublet {
  std::vector<Complex> psi;
  std::vector<Complex> chi;
};

EvolvedDoublet evolve_doublet(const Model& m, const std::vector<double>& grid, double t);

/// Superposition of regular solutions with weights C(k) on a uniform k grid
/// with an odd number of points (composite Simpson).
struct Wavepacket {
  std::vector<double> k_grid;
  std::vector<Complex> coeffs;
  double t0 = 0.0;
};

/// C(k) = exp(-(k - k0)^2 / (2 sigma^2)) on k in (0, k0 + width sigma],
/// scaled so that sum |C|^2 dk = 1. n_k is rounded up to 4m + 1 so the grid
/// and its every-other-point subgrid both support Simpson's rule.
Wavepacket gaussian_packet(double k0, double sigma, std::size_t n_k, double width = 6.0);

/// Composite Simpson weights for n (odd) points spaced h.
std::vector<double> simpson_weights(std::size_t n, double h);

/// Trapezoid L2 norm of samples on a uniform grid.
double l2_norm(const std::vector<Complex>& samples, double h);
double l2_norm(const std::vector<double>& samples, double h);

/// psi_s(k, r) tabulated once for a packet and an r grid; propagation to any
/// t is then a weighted sum over k.
class PacketPropagator {
 public:
  PacketPropagator(const Model& m, Wavepacket packet, std::vector<double> r_grid);

  /// Psi_r(r, t) = sum_k w_k C(k) e^{-ik^2 (t - t0)} psi_s(k, r).
  std::vector<Complex> at(double t) const;

  /// Relative L2 change between the full k grid and its every-other-point
  /// subgrid at time t.
  double resolution_change(double t) const;

  const std::vector<double>& r_grid() const { return r_grid_; }

 private:
  std::vector<Complex> sum(double t, std::size_t stride) const;

  Wavepacket packet_;
  std::vector<double> r_grid_;
  std::vector<std::vector<Complex>> table_;  // table_[k index][r index]
};

struct PacketDiagnostics {
  double resolution_change = 0.0;
  bool under_resolved = false;  // resolution_change > 1e-4
};

/// One-shot form of PacketPropagator.
std::vector<Complex> propagate_packet(const Model& m, const Wavepacket& packet, const std::vector<double>& r_grid,
                                      double t, PacketDiagnostics* diagnostics = nullptr);

}  // namespace epcont
