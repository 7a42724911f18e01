#include "epcont/evolution.hpp"

#include <cmath>
#include <stdexcept>

#include "epcont/boundstates.hpp"
#include "epcont/parallel.hpp"
#include "epcont/scattering.hpp"

namespace epcont {

DoubletState doublet_propagator(const ModelParams& p, double t) {
  const Complex phase = std::polar(1.0, -p.q * p.q * t);
  DoubletState s;
  s.t = t;
  s.c_matrix << phase, 0.0, phase * Complex(0.0, -2.0 * p.q * t), phase;
  return s;
}

EvolvedDoublet evolve_doublet(const Model& m, const std::vector<double>& grid, double t) {
  const double q = m.q();
  const Complex phase = std::polar(1.0, -q * q * t);
  const Complex mix(0.0, -2.0 * q * t);
  EvolvedDoublet out;
  out.psi.reserve(grid.size());
  out.chi.reserve(grid.size());
  for (double r : grid) {
    const double psi = psi_b(m, r);
    const double chi = chi_b(m, r);
    out.psi.push_back(phase * psi);
    out.chi.push_back(phase * (chi + mix * psi));
  }
  return out;
}

std::vector<double> simpson_weights(std::size_t n, double h) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("Simpson's rule needs an odd number of points >= 3");
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = (i == 0 || i == n - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
  for (double& x : w) x *= h / 3.0;
  return w;
}

Wavepacket gaussian_packet(double k0, double sigma, std::size_t n_k, double width) {
  if (!(sigma > 0.0) || !(k0 > 0.0)) throw std::invalid_argument("gaussian_packet needs k0 > 0 and sigma > 0");
  const std::size_t n = ((std::max<std::size_t>(n_k, 5) + 2) / 4) * 4 + 1;
  const double k_hi = k0 + width * sigma;
  const double k_lo = std::max(k0 - width * sigma, 1e-3 * k0);
  Wavepacket packet;
  packet.k_grid.resize(n);
  packet.coeffs.resize(n);
  const double h = (k_hi - k_lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double k = k_lo + h * static_cast<double>(i);
    packet.k_grid[i] = k;
    packet.coeffs[i] = std::exp(-(k - k0) * (k - k0) / (2.0 * sigma * sigma));
  }
  const std::vector<double> w = simpson_weights(n, h);
  double norm2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) norm2 += w[i] * std::norm(packet.coeffs[i]);
  for (Complex& c : packet.coeffs) c /= std::sqrt(norm2);
  return packet;
}

double l2_norm(const std::vector<Complex>& samples, double h) {
  if (samples.size() < 2) return 0.0;
  double acc = 0.5 * (std::norm(samples.front()) + std::norm(samples.back()));
  for (std::size_t i = 1; i + 1 < samples.size(); ++i) acc += std::norm(samples[i]);
  return std::sqrt(acc * h);
}

double l2_norm(const std::vector<double>& samples, double h) {
  if (samples.size() < 2) return 0.0;
  double acc = 0.5 * (samples.front() * samples.front() + samples.back() * samples.back());
  for (std::size_t i = 1; i + 1 < samples.size(); ++i) acc += samples[i] * samples[i];
  return std::sqrt(acc * h);
}

PacketPropagator::PacketPropagator(const Model& m, Wavepacket packet, std::vector<double> r_grid)
    : packet_(std::move(packet)), r_grid_(std::move(r_grid)) {
  const std::size_t n = packet_.k_grid.size();
  if (n < 5 || n % 4 != 1) throw std::invalid_argument("packet k grid must have 4m + 1 points");
  table_.assign(n, {});
  parallel_for(n, [&](std::size_t i) {
    std::vector<Complex> row(r_grid_.size());
    for (std::size_t j = 0; j < r_grid_.size(); ++j) row[j] = psi_regular(m, packet_.k_grid[i], r_grid_[j]);
    table_[i] = std::move(row);
  });
}

std::vector<Complex> PacketPropagator::sum(double t, std::size_t stride) const {
  const std::size_t n = (packet_.k_grid.size() - 1) / stride + 1;
  const double h = (packet_.k_grid[1] - packet_.k_grid[0]) * static_cast<double>(stride);
  const std::vector<double> w = simpson_weights(n, h);
  std::vector<Complex> out(r_grid_.size());
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t i = a * stride;
    const double k = packet_.k_grid[i];
    const Complex c = w[a] * packet_.coeffs[i] * std::polar(1.0, -k * k * (t - packet_.t0));
    const std::vector<Complex>& row = table_[i];
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += c * row[j];
  }
  return out;
}

std::vector<Complex> PacketPropagator::at(double t) const { return sum(t, 1); }

double PacketPropagator::resolution_change(double t) const {
  const std::vector<Complex> fine = sum(t, 1);
  const std::vector<Complex> coarse = sum(t, 2);
  double diff = 0.0;
  double norm = 0.0;
  for (std::size_t j = 0; j < fine.size(); ++j) {
    diff += std::norm(fine[j] - coarse[j]);
    norm += std::norm(fine[j]);
  }
  return norm > 0.0 ? std::sqrt(diff / norm) : 0.0;
}

std::vector<Complex> propagate_packet(const Model& m, const Wavepacket& packet, const std::vector<double>& r_grid,
                                      double t, PacketDiagnostics* diagnostics) {
  const PacketPropagator prop(m, packet, r_grid);
  if (diagnostics) {
    diagnostics->resolution_change = prop.resolution_change(t);
    diagnostics->under_resolved = diagnostics->resolution_change > 1e-4;
  }
  return prop.at(t);
}

}  // namespace epcont
