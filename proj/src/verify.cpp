#include "epcont/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "epcont/boundstates.hpp"
#include "epcont/csv.hpp"
#include "epcont/evolution.hpp"
#include "epcont/jost.hpp"
#include "epcont/oracle.hpp"
#include "epcont/parallel.hpp"
#include "epcont/scattering.hpp"
#include "epcont/tables.hpp"

namespace epcont {

namespace {

constexpr double pi = std::numbers::pi;
const ModelParams canonical{1.0, 3.0, 1.0};
constexpr double k_factors[] = {0.3, 0.7, 1.5, 3.0};

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(3) << x;
  return os.str();
}

std::vector<double> log_space(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(n - 1));
  }
  return out;
}

template <class F>
double max_rel_residual(const Model& m, double energy, double r_lo, double r_hi, double h, F&& f) {
  const RadialGrid grid = grid_with_spacing(r_lo - 2.0 * h, r_hi + 2.0 * h, h);
  const double step = grid.h();
  std::vector<Complex> samples(grid.n);
  std::vector<double> pot(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) {
    samples[i] = f(grid.at(i));
    pot[i] = m.v4(grid.at(i));
  }
  const std::vector<Complex> res = schrodinger_residual(samples, pot, energy, step);
  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < res.size(); ++i) {
    worst = std::max(worst, std::abs(res[i]));
    scale = std::max(scale, std::abs(samples[i + 2]));
  }
  return worst / scale;
}

Complex fd_first(const std::function<Complex(double)>& f, double r, double h) {
  return (f(r - 2.0 * h) - 8.0 * f(r - h) + 8.0 * f(r + h) - f(r + 2.0 * h)) / (12.0 * h);
}

// First `count` interior local extrema of samples (r > 0): position and value.
std::vector<std::pair<double, double>> first_extrema(const std::vector<double>& r, const std::vector<double>& y,
                                                     std::size_t count) {
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 1; i + 1 < y.size() && out.size() < count; ++i) {
    if ((y[i] - y[i - 1]) * (y[i + 1] - y[i]) < 0.0) out.emplace_back(r[i], y[i]);
  }
  return out;
}

CheckResult make(int id, std::string name, double measured, double tolerance, bool pass, std::string detail) {
  CheckResult c;
  c.id = id;
  c.name = std::move(name);
  c.measured = measured;
  c.tolerance = tolerance;
  c.pass = pass;
  c.detail = std::move(detail);
  return c;
}

// 1. ODE residuals of f+-, psi_s, psi_B, chi_B.
CheckResult criterion_residuals(const SuiteOptions& o) {
  const std::vector<ModelParams> params = draw_valid_params(o.seed, 20);
  std::vector<double> worst(params.size(), 0.0);
  parallel_for(params.size(), [&](std::size_t i) {
    const Model m(params[i]);
    const double q = m.q();
    const double h = 1e-3;
    double w = 0.0;
    for (double f : k_factors) {
      const double k = f * q;
      w = std::max(w, max_rel_residual(m, k * k, 0.5, 30.0, h,
                                       [&](double r) { return jost_unnormalized(m, k, r, Branch::plus); }));
      w = std::max(w, max_rel_residual(m, k * k, 0.5, 30.0, h,
                                       [&](double r) { return jost_unnormalized(m, k, r, Branch::minus); }));
      w = std::max(w, max_rel_residual(m, k * k, 0.5, 30.0, h, [&](double r) { return psi_regular(m, k, r); }));
    }
    const ChainResiduals c = jordan_chain_residuals(m, 0.5, 30.0, h);
    w = std::max(w, c.res1 / c.psi_scale);
    w = std::max(w, c.res2 / std::max(c.chi_scale, c.psi_scale));
    worst[i] = w;
  });
  const double measured = *std::max_element(worst.begin(), worst.end());
  const double tol = 1e-6;
  return make(1, "Schrodinger residuals (f+-, psi_s, psi_B, chi_B)", measured, tol, measured <= tol,
              "20 parameter sets x k in {0.3,0.7,1.5,3}q, r in [0.5,30], h=1e-3");
}

// 2. Inward ODE integration against the closed-form F+.
CheckResult criterion_oracle(const SuiteOptions& o) {
  const std::vector<ModelParams> params = draw_valid_params(o.seed + 1, 10);
  std::vector<double> flat(params.size(), 0.0);
  parallel_for(params.size(), [&](std::size_t i) {
    const Model m(params[i]);
    const double q = m.q();
    const double k = k_factors[i % 4] * q;
    const double r_max = 60.0 / q;
    const RadialGrid grid{0.5, r_max, 1201};
    const std::vector<Complex> y = integrate_jost(m, k, grid);
    std::vector<Complex> ratio;
    for (std::size_t j = 0; j < grid.n; ++j) {
      const double r = grid.at(j);
      if (r > 0.5 * r_max) break;
      ratio.push_back(y[j] / jost_normalized(m, k, r, Branch::plus));
    }
    Complex mean{};
    for (const Complex& c : ratio) mean += c;
    mean /= static_cast<double>(ratio.size());
    double worst = 0.0;
    for (const Complex& c : ratio) worst = std::max(worst, std::abs(c / mean - 1.0));
    flat[i] = worst;
  });
  const double measured = *std::max_element(flat.begin(), flat.end());
  const double tol = 1e-5;
  return make(2, "ODE oracle vs closed-form F+ (ratio flatness)", measured, tol, measured <= tol,
              "10 (params, k) pairs, r in [0.5, r_max/2], r_max = 60/q");
}

// 3. Wronskian identity and coalescence order.
CheckResult criterion_wronskian(const SuiteOptions& o) {
  std::vector<ModelParams> params = draw_valid_params(o.seed + 2, 4);
  params.insert(params.begin(), canonical);
  double worst = 0.0;
  for (const ModelParams& p : params) {
    const Model m(p);
    const double q = p.q;
    for (double f : {0.2, 0.5, 0.8, 1.2, 1.5, 2.0, 3.0}) {
      const double k = f * q;
      const Complex closed = wronskian_closed(p, k);
      for (double r : {1.0, 5.0, 10.0, 20.0}) {
        auto fp = [&](double x) { return jost_unnormalized(m, k, x, Branch::plus); };
        auto fm = [&](double x) { return jost_unnormalized(m, k, x, Branch::minus); };
        const double h = 1e-3;
        const Complex w = fp(r) * fd_first(fm, r, h) - fm(r) * fd_first(fp, r, h);
        worst = std::max(worst, std::abs(w - closed) / std::abs(closed));
      }
    }
  }
  const Model m(canonical);
  std::vector<double> xs, ys;
  for (double e : log_space(1e-3, 1e-1, 13)) {
    for (double s : {1.0, -1.0}) {
      xs.push_back(e);
      ys.push_back(std::abs(wronskian_at(m, canonical.q + s * e, 1.0)));
    }
  }
  const double slope = log_log_slope(xs, ys);
  const bool pass = worst <= 1e-7 && std::abs(slope - 4.0) <= 0.05;
  return make(3, "Wronskian identity and coalescence slope", worst, 1e-7, pass,
              "coalescence slope " + fmt(slope) + " (target 4.0 +- 0.05), fit on k = q +- e, e in [1e-3, 1e-1]");
}

// 4. Quartic expansion about k = q, and its continuation to k = -q.
CheckResult criterion_expansion(const SuiteOptions& o) {
  std::vector<ModelParams> params = draw_valid_params(o.seed + 3, 10);
  params.insert(params.begin(), canonical);
  double recon = 0.0;
  double sym = 0.0;
  double closed = 0.0;
  for (const ModelParams& p : params) {
    const Model m(p);
    for (double r : {0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 30.0}) {
      const ExpansionCoeffs c = expansion_coeffs(p, r);
      const ExpansionCoeffs cm = expansion_coeffs(p, r, Branch::minus);
      for (const ExpansionCoeffs* e : {&c, &cm}) {
        for (double d : {-2.0, -1.5, -1.0, -0.5, -0.1, 0.1, 0.5, 1.0, 1.5, 2.0}) {
          const double k = e->k_point + d * p.q;
          for (Branch s : {Branch::plus, Branch::minus}) {
            const Complex w = reduced_wronskian(p, k, r, s);
            // w itself can vanish (canonical r = 0, k = -q), so the error is
            // measured against the sum of the term moduli.
            double scale = 0.0;
            for (std::size_t l = 0; l < 5; ++l) scale += e->scale[l] * std::pow(std::abs(d * p.q), static_cast<int>(l));
            recon = std::max(recon, std::abs(reconstruct(*e, k, s) - w) / std::max(std::abs(w), scale));
          }
        }
      }
      for (std::size_t l = 0; l < 5; ++l) {
        const double sign = l % 2 == 0 ? 1.0 : -1.0;
        sym = std::max(sym, std::abs(cm.plus[l] - sign * c.minus[l]) / c.scale[l]);
        sym = std::max(sym, std::abs(cm.minus[l] - sign * c.plus[l]) / c.scale[l]);
      }
      const LowOrderCoeffs lo = low_order_coeffs(m, r);
      closed = std::max(closed, std::abs(lo.w0 - c.plus[0]) / c.scale[0]);
      closed = std::max(closed, std::abs(lo.w1_plus - c.plus[1]) / c.scale[1]);
      closed = std::max(closed, std::abs(lo.w2_minus - c.minus[2]) / c.scale[2]);
    }
  }
  const double measured = std::max(recon, sym);
  const double tol = 1e-8;
  return make(4, "Quartic expansion exactness and -q continuation", measured, tol, measured <= tol,
              "reconstruction " + fmt(recon) + ", w_l+-(-q) = (-1)^l w_l-+(q) " + fmt(sym) +
                  ", closed-form w0..w2 " + fmt(closed));
}

// 5. Vanishing of the three lowest orders.
CheckResult criterion_zeta(const SuiteOptions& o) {
  const std::vector<ModelParams> params = draw_valid_params(o.seed + 4, 200);
  std::mt19937_64 rng(o.seed + 5);
  std::uniform_real_distribution<double> radius(0.0, 30.0);
  double worst = 0.0;
  for (const ModelParams& p : params) {
    const double r = radius(rng);
    for (int n = 0; n < 3; ++n) {
      const ZetaValue z = zeta(p, r, n);
      worst = std::max(worst, std::abs(z.value) / z.scale);
    }
  }
  const double tol = 1e-9;
  return make(5, "zeta_0, zeta_1, zeta_2 cancellations", worst, tol, worst <= tol, "200 random (params, r) draws");
}

// 6. psi_s at the exceptional point, its approach, and the psi_is residue.
CheckResult criterion_exceptional_point(const SuiteOptions&) {
  const Model m(canonical);
  const double q = canonical.q;

  double at_q = 0.0;
  PsiBranch used = PsiBranch::generic;
  for (double r = 0.0; r <= 30.0; r += 0.01) at_q = std::max(at_q, std::abs(psi_regular(m, q, r, &used)));
  const bool zero_ok = at_q == 0.0 && used == PsiBranch::series;

  std::vector<double> es = log_space(1e-3, 1e-1, 9);
  std::vector<double> peaks;
  for (double e : es) {
    double peak = 0.0;
    for (double r = 0.5; r <= 30.0; r += 0.01) peak = std::max(peak, std::abs(psi_regular_generic(m, q + e, r)));
    peaks.push_back(peak);
  }
  const double slope = log_log_slope(es, peaks);
  const bool slope_ok = std::abs(slope - 1.0) <= 0.05;

  double diff = 0.0;
  double diff_phase = 0.0;
  double scale = 0.0;
  const Complex phase = std::polar(1.0, m.frame().delta);
  for (double r = 0.5; r <= 30.0; r += 0.5) {
    auto g = [&](double e) { return e * e * psi_irregular(m, q + e, r); };
    const double h = 1e-2;
    const Complex a = g(h), b = g(h / 2), c = g(h / 4);
    const Complex r1 = 2.0 * b - a, r2 = 2.0 * c - b;
    const Complex limit = (4.0 * r2 - r1) / 3.0;
    const double psi = psi_b(m, r);
    diff = std::max(diff, std::abs(limit - psi));
    diff_phase = std::max(diff_phase, std::abs(limit - phase * psi));
    scale = std::max(scale, std::abs(psi));
  }
  const double residue = diff / scale;
  const bool residue_ok = residue <= 1e-4;
  return make(6, "Exceptional point: psi_s(q)=0, approach slope, psi_is residue", std::abs(slope - 1.0), 0.05,
              zero_ok && slope_ok && residue_ok,
              std::string("psi_s(q,r)=0 ") + (zero_ok ? "yes" : "no") + "; slope " + fmt(slope) +
                  " (target 1.0 +- 0.05, generic branch); residue vs psi_B " + fmt(residue) + " (tol 1e-4), vs psi_B e^{i delta} " +
                  fmt(diff_phase / scale));
}

// 7. Unimodularity, continuity through q, phase shift consistency.
CheckResult criterion_s_matrix(const SuiteOptions& o) {
  std::vector<ModelParams> params = draw_valid_params(o.seed + 6, 5);
  params.insert(params.begin(), canonical);
  double unimod = 0.0;
  double phase = 0.0;
  double origin = 0.0;
  for (const ModelParams& p : params) {
    std::vector<double> ks;
    for (int i = 0; i <= 4000; ++i) ks.push_back(1e-3 * p.q * i);
    const std::vector<double> delta = big_delta_curve(p, ks);
    origin = std::max(origin, std::abs(delta.front()));
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const Complex s = s_matrix(p, ks[i]);
      unimod = std::max(unimod, std::abs(std::abs(s) - 1.0));
      phase = std::max(phase, std::abs(std::polar(1.0, 2.0 * delta[i]) - s));
    }
  }
  std::vector<double> steps;
  Complex prev = s_matrix(canonical, canonical.q - 0.01);
  for (int i = 1; i <= 200; ++i) {
    const Complex s = s_matrix(canonical, canonical.q - 0.01 + 1e-4 * i);
    steps.push_back(std::abs(s - prev));
    prev = s;
  }
  std::vector<double> sorted = steps;
  std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
  const double jump_ratio = *std::max_element(steps.begin(), steps.end()) / sorted[sorted.size() / 2];
  const bool pass = unimod <= 1e-12 && phase <= 1e-10 && origin == 0.0 && jump_ratio <= 2.0;
  return make(7, "S-matrix unimodular, continuous at q, S = exp(2i Delta)", unimod, 1e-12, pass,
              "|exp(2i Delta) - S| " + fmt(phase) + " (tol 1e-10); Delta(0) = " + fmt(origin) +
                  "; max/median step through q on 1e-4 grid " + fmt(jump_ratio) + " (tol 2)");
}

// 8. Jordan block algebra and the invariant doublet.
CheckResult criterion_jordan(const SuiteOptions& o) {
  std::vector<ModelParams> params = draw_valid_params(o.seed + 7, 5);
  params.insert(params.begin(), canonical);
  bool exact = true;
  double worst = 0.0;
  for (const ModelParams& p : params) {
    const Eigen::Matrix2d hb = jordan_block(p);
    Eigen::Matrix2d expected;
    expected << p.q * p.q, 0.0, 2.0 * p.q, p.q * p.q;
    const Eigen::Matrix2d n = hb - p.q * p.q * Eigen::Matrix2d::Identity();
    const Eigen::Matrix2d eta = eta_metric();
    exact = exact && hb == expected && (n * n).isZero(0.0) && !n.isZero(0.0) &&
            Eigen::Matrix2d(eta * hb * eta) == Eigen::Matrix2d(hb.transpose());
    const Model m(p);
    const RadialGrid grid = grid_with_spacing(0.5 - 2e-3, 30.0 + 2e-3, 1e-3);
    const JordanDoublet d = make_doublet(m, grid.points());
    double scale = 0.0;
    for (std::size_t i = 0; i < d.grid.size(); ++i) {
      scale = std::max({scale, std::abs(d.psi_b[i]), std::abs(d.chi_b[i])});
    }
    worst = std::max(worst, invariant_subspace_residual(m, d) / scale);
  }
  const double tol = 1e-6;
  return make(8, "Jordan block and invariant doublet", worst, tol, exact && worst <= tol,
              std::string("exact identities ") + (exact ? "hold" : "fail") + "; 6 parameter sets");
}

// 9. Time evolution against Crank-Nicolson and the packet norm.
CheckResult criterion_evolution(const SuiteOptions&) {
  const Model m(canonical);
  const double q = canonical.q;
  const RadialGrid grid = grid_with_spacing(0.0, 60.0, 0.005);
  const std::vector<double> rs = grid.points();
  const double h = grid.h();
  const double dt = 1e-3;
  std::vector<double> pot(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) pot[i] = m.v4(rs[i]);
  const EvolvedDoublet start = evolve_doublet(m, rs, 0.0);
  auto edge = [&](bool chi) {
    return [&m, &rs, chi](double t) {
      const EvolvedDoublet e = evolve_doublet(m, {rs.front(), rs.back()}, t);
      const std::vector<Complex>& v = chi ? e.chi : e.psi;
      return std::pair<Complex, Complex>{v[0], v[1]};
    };
  };

  const std::vector<Complex> psi_t = crank_nicolson_evolve(start.psi, pot, h, dt, 1000, 0.0, edge(false));
  Complex ov{};
  for (std::size_t i = 0; i < rs.size(); ++i) ov += std::conj(start.psi[i]) * psi_t[i];
  const double overlap = std::abs(ov * h) / std::norm(l2_norm(start.psi, h));

  double chi_err = 0.0;
  std::vector<Complex> chi = start.chi;
  double t_now = 0.0;
  for (double t : {0.5, 1.0, 2.0}) {
    const auto steps = static_cast<std::size_t>(std::llround((t - t_now) / dt));
    chi = crank_nicolson_evolve(chi, pot, h, dt, steps, t_now, edge(true));
    t_now = t;
    const EvolvedDoublet closed = evolve_doublet(m, rs, t);
    std::vector<Complex> d(rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i) d[i] = chi[i] - closed.chi[i];
    chi_err = std::max(chi_err, l2_norm(d, h) / l2_norm(closed.chi, h));
  }

  const RadialGrid packet_grid = grid_with_spacing(0.0, 400.0, 0.05);
  const PacketPropagator prop(m, gaussian_packet(q, 0.25 * q, 801), packet_grid.points());
  const double n0 = l2_norm(prop.at(0.0), packet_grid.h());
  double drift = 0.0;
  double resolution = 0.0;
  for (double t = 0.5; t <= 10.0 + 1e-9; t += 0.5) {
    drift = std::max(drift, std::abs(l2_norm(prop.at(t), packet_grid.h()) / n0 - 1.0));
  }
  resolution = prop.resolution_change(10.0);

  const bool pass = overlap >= 1.0 - 1e-4 && chi_err <= 1e-3 && drift <= 1e-3;
  return make(9, "Evolution: CN vs closed-form doublet, packet norm", drift, 1e-3, pass,
              "psi_B overlap at t=1 " + fmt(overlap) + " (>= 1-1e-4); chi_B rel L2 " + fmt(chi_err) +
                  " (<= 1e-3); packet on r in [0,400], k-grid halving change " + fmt(resolution));
}

// 10. Figure data and their shapes.
CheckResult criterion_figures(const SuiteOptions& o) {
  namespace fs = std::filesystem;
  const Model m(canonical);
  fs::create_directories(o.figure_dir);
  const fs::path dir(o.figure_dir);
  const CsvTable fig1 = potential_table(m, 30.0, 3001);
  const CsvTable fig23 = boundstates_table(m, 30.0, 3001);
  const CsvTable fig45 = scattering_r_table(m, 1.5, 30.0, 3001);
  const CsvTable fig6 = scattering_k_table(m, 0.0, 4.0, 4001);
  write_csv_file((dir / "fig1_potential.csv").string(), fig1);
  write_csv_file((dir / "fig2_3_boundstates.csv").string(), fig23);
  write_csv_file((dir / "fig4_5_scattering_k1.5.csv").string(), fig45);
  write_csv_file((dir / "fig6_phase_shift.csv").string(), fig6);

  bool files_ok = true;
  for (const char* name : {"fig1_potential.csv", "fig2_3_boundstates.csv", "fig4_5_scattering_k1.5.csv",
                           "fig6_phase_shift.csv"}) {
    std::ifstream in(dir / name);
    std::string line;
    std::size_t data = 0;
    while (std::getline(in, line)) {
      if (!line.empty() && line[0] != '#') ++data;
    }
    files_ok = files_ok && data > 1000;
  }

  auto column = [](const CsvTable& t, std::size_t c) {
    std::vector<double> out;
    for (const auto& row : t.rows) out.push_back(std::get<double>(row[c]));
    return out;
  };
  auto pattern_ok = [](const std::vector<std::pair<double, double>>& ext, const std::vector<double>& at) {
    if (ext.size() < 3) return false;
    const double signs[3] = {-1.0, 1.0, -1.0};
    for (std::size_t i = 0; i < 3; ++i) {
      if (ext[i].second * signs[i] <= 0.0 || std::abs(ext[i].first - at[i]) > 0.05) return false;
    }
    return true;
  };
  const std::vector<double> r = column(fig1, 0);
  const bool v4_ok = pattern_ok(first_extrema(r, column(fig1, 1), 3), {0.49, 1.27, 3.07});
  const bool psi_ok = pattern_ok(first_extrema(r, column(fig23, 1), 3), {0.58, 3.35, 6.85});

  const std::vector<double> delta = column(fig6, 3);
  double max_step = 0.0;
  for (std::size_t i = 1; i < delta.size(); ++i) max_step = std::max(max_step, std::abs(delta[i] - delta[i - 1]));
  const double far = std::abs(big_delta(canonical, 1e4));
  const bool delta_ok = delta.front() == 0.0 && max_step <= 0.01 && far <= 1e-3;

  const bool pass = files_ok && v4_ok && psi_ok && delta_ok;
  std::string detail = std::string("files ") + (files_ok ? "ok" : "missing") + "; V4 extrema (-,+,-) " +
                       (v4_ok ? "ok" : "wrong") + "; psi_B extrema (-,+,-) " + (psi_ok ? "ok" : "wrong") +
                       "; Delta max step " + fmt(max_step) + ", Delta(0) = " + fmt(delta.front()) +
                       ", |Delta(1e4)| mod pi " + fmt(far) + "; written to " + o.figure_dir;
  return make(10, "Figure data and shape checks", pass ? 0.0 : 1.0, 0.0, pass, detail);
}

using Criterion = CheckResult (*)(const SuiteOptions&);
constexpr Criterion criteria[] = {criterion_residuals,  criterion_oracle,   criterion_wronskian,
                                  criterion_expansion,  criterion_zeta,     criterion_exceptional_point,
                                  criterion_s_matrix,   criterion_jordan,   criterion_evolution,
                                  criterion_figures};

template <class F>
CheckResult timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult c = f();
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return c;
}

}  // namespace

std::vector<ModelParams> draw_valid_params(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> alpha(-2.0, 2.0);
  std::uniform_real_distribution<double> beta(-5.0, 5.0);
  std::uniform_real_distribution<double> q(0.3, 2.0);
  std::vector<ModelParams> out;
  while (out.size() < count) {
    const ModelParams p{alpha(rng), beta(rng), q(rng)};
    if (std::abs(p.beta) < 0.05) continue;
    if (validate_no_singularity(p).ok) out.push_back(p);
  }
  return out;
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = std::min(x.size(), y.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(std::abs(x[i]));
    const double ly = std::log(std::abs(y[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double dn = static_cast<double>(n);
  return (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
}

std::vector<CheckResult> run_acceptance(const SuiteOptions& options, std::optional<int> only) {
  std::vector<CheckResult> out;
  for (int id = 1; id <= 10; ++id) {
    if (only && *only != id) continue;
    try {
      out.push_back(timed([&] { return criteria[id - 1](options); }));
    } catch (const std::exception& e) {
      out.push_back(make(id, "criterion " + std::to_string(id), 0.0, 0.0, false, std::string("threw: ") + e.what()));
    }
  }
  return out;
}

std::vector<CheckResult> run_invariants(const ModelParams& p, const SuiteOptions& options) {
  std::vector<CheckResult> out;
  const Model m(p);
  const double q = p.q;
  auto add = [&](std::string name, double measured, double tol, std::string detail = {}) {
    out.push_back(make(static_cast<int>(out.size()) + 1, std::move(name), measured, tol, measured <= tol,
                       std::move(detail)));
  };

  // potential
  const auto [t, d, aq] = derived(p);
  add("W1(q,0) = 12 beta^2 / D^2", std::abs(m.w1(0.0) - 12.0 * p.beta * p.beta / (d * d)) / m.w1(0.0), 1e-14);
  double w1_min = INFINITY;
  for (double r = 0.0; r <= 100.0; r += 0.01) w1_min = std::min(w1_min, m.w1(r));
  add("W1 > 0 on [0, 100]", w1_min > 0.0 ? 0.0 : 1.0, 0.0, "min W1 = " + fmt(w1_min));
  double deriv = 0.0;
  for (double r = 0.5; r <= 30.0; r += 0.37) {
    const double hs = 1e-3;
    auto fd = [&](double h) { return (m.w1(r - 2 * h) - 8 * m.w1(r - h) + 8 * m.w1(r + h) - m.w1(r + 2 * h)) / (12 * h); };
    const double rich = (16.0 * fd(hs / 2) - fd(hs)) / 15.0;
    if (std::abs(m.w1_prime(r)) > 1e-6) deriv = std::max(deriv, std::abs(rich - m.w1_prime(r)) / std::abs(m.w1_prime(r)));
  }
  add("exact W1' vs Richardson differences", deriv, 1e-8);
  double compact = 0.0;
  for (double r = 0.0; r <= 50.0; r += 0.1) compact = std::max(compact, std::abs(w1_compact(p, r) - m.w1(r)) / m.w1(r));
  add("W1 explicit vs compact form", compact, 1e-10);

  // jost
  // w(k,0) vanishes at k = q for some parameters, so differences are taken
  // relative to the largest |w(k,0)| on the grid.
  double origin = 0.0;
  double origin_scale = 0.0;
  for (double k = 0.1 * q; k <= 4.0 * q; k += 0.1 * q) {
    origin_scale = std::max(origin_scale, std::hypot(u_at_origin(p, k), v_at_origin(p, k)));
    origin = std::max({origin, std::abs(u(p, k, 0.0) - u_at_origin(p, k)), std::abs(v(p, k, 0.0) - v_at_origin(p, k))});
  }
  origin /= origin_scale;
  add("u(k,0), v(k,0) two paths", origin, 1e-10);
  double wr = 0.0;
  for (double f : {0.3, 0.7, 1.5, 3.0}) {
    const Complex c = wronskian_closed(p, f * q);
    for (double r : {1.0, 5.0, 10.0, 20.0}) wr = std::max(wr, std::abs(wronskian_at(m, f * q, r) - c) / std::abs(c));
  }
  add("Wronskian r-independent and closed form", wr, 1e-7);

  // boundstates
  const ChainResiduals c = jordan_chain_residuals(m, 0.5, 30.0);
  add("Jordan chain residuals", std::max(c.res1 / c.psi_scale, c.res2 / std::max(c.psi_scale, c.chi_scale)), 1e-6);
  auto tail = [&](double r_end) {
    double acc = 0.0;
    const double h = 1e-3;
    for (double r = 0.0; r < r_end; r += h) acc += 0.5 * h * (std::pow(psi_b(m, r), 2) + std::pow(psi_b(m, r + h), 2));
    return acc;
  };
  const double i100 = tail(100.0 / q);
  const double i200 = tail(200.0 / q);
  add("psi_B square integrable (tail)", std::abs(i200 - i100) / i200, 1e-4);

  // scattering
  // S(-k) from the origin polynomial evaluated at -k, away from its zeros.
  const std::array<Complex, 5> poly = origin_polynomial(p);
  double unit = 0.0, conj_sym = 0.0;
  for (double k = 0.0; k <= 4.0 * q; k += 1e-3 * q) {
    const Complex s = s_matrix(p, k);
    unit = std::max(unit, std::abs(std::abs(s) - 1.0));
    Complex wm{}, wp{};
    double size = 0.0;
    for (std::size_t j = 5; j-- > 0;) {
      wp = wp * (-k) + poly[j];
      wm = wm * (-k) + std::conj(poly[j]);
      size += std::abs(poly[j]) * std::pow(k, static_cast<int>(j));
    }
    if (std::abs(wp) > 1e-6 * size) conj_sym = std::max(conj_sym, std::abs(wm / wp - std::conj(s)));
  }
  add("|S| = 1", unit, 1e-12);
  add("S(-k) = conj S(k)", conj_sym, 1e-10);
  double zmax = 0.0;
  for (double r = 0.0; r <= 30.0; r += 0.25) {
    for (int n = 0; n < 3; ++n) {
      const ZetaValue z = zeta(p, r, n);
      zmax = std::max(zmax, std::abs(z.value) / z.scale);
    }
  }
  add("zeta_0..2 = 0", zmax, 1e-9);
  double overlap = 0.0;
  const double es = eps_switch(p);
  for (double f : {1.0, 2.0, 5.0, 10.0}) {
    for (double s : {1.0, -1.0}) {
      const double k = q + s * f * es;
      double diff = 0.0, scale = 0.0;
      for (double r = 0.5; r <= 30.0; r += 0.1) {
        diff = std::max(diff, std::abs(psi_regular_generic(m, k, r) - psi_regular_series(m, k, r)));
        scale = std::max(scale, std::abs(psi_regular_generic(m, k, r)));
      }
      overlap = std::max(overlap, diff / scale);
    }
  }
  add("psi_s generic vs series on the overlap annulus", overlap, 1e-6);
  // A surviving pole would grow like 1/e; bounded means the largest |h+|
  // over e = 1e-2 .. 1e-4 stays within a factor 2 of its value at 1e-2.
  // Closer in, the subtraction of the poles loses digits like eps/e^2.
  double bounded = 0.0;
  {
    double ref = 0.0, peak = 0.0;
    for (double r : {0.5, 2.0, 7.0, 15.0}) {
      ref = std::max(ref, std::abs(jost_singular_decomposition(m, q + 1e-2 * q, r, Branch::plus).regular));
      for (double e : {1e-3, 1e-4}) {
        peak = std::max(peak, std::abs(jost_singular_decomposition(m, q + e * q, r, Branch::plus).regular));
      }
    }
    bounded = peak / ref;
  }
  add("h+(k,r) bounded as k -> q", bounded, 2.0);

  // evolution
  const DoubletState a = doublet_propagator(p, 0.7);
  const DoubletState b = doublet_propagator(p, 1.9);
  const DoubletState ab = doublet_propagator(p, 2.6);
  add("C(q,t1) C(q,t2) = C(q,t1+t2)", (a.c_matrix * b.c_matrix - ab.c_matrix).cwiseAbs().maxCoeff(), 1e-12);
  const RadialGrid grid = grid_with_spacing(0.0, 400.0 / q, 0.01 / q);
  const std::vector<double> rs = grid.points();
  std::vector<double> ts, norms;
  for (double time = 5.0; time <= 50.0; time += 5.0) {
    ts.push_back(time);
    norms.push_back(l2_norm(evolve_doublet(m, rs, time).chi, grid.h()));
  }
  const double slope = (norms.back() - norms[norms.size() - 2]) / (ts.back() - ts[ts.size() - 2]);
  const EvolvedDoublet d0 = evolve_doublet(m, rs, 0.0);
  const double target = 2.0 * q * l2_norm(d0.psi, grid.h());
  add("norm chi(t) slope -> 2q |psi_B|", std::abs(slope - target) / target, 0.02);

  // seeded property draws
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit_draw(0.0, 1.0);
  double prop_w = 0.0, prop_z = 0.0, prop_s = 0.0;
  for (const ModelParams& pp : draw_valid_params(options.seed, 20)) {
    const Model mm(pp);
    const double k = pp.q * (0.1 + 2.9 * unit_draw(rng));
    const double r = 30.0 * unit_draw(rng);
    if (std::abs(k - pp.q) > 1e-3 * pp.q) {
      prop_w = std::max(prop_w, std::abs(wronskian_at(mm, k, r) - wronskian_closed(pp, k)) /
                                    std::abs(wronskian_closed(pp, k)));
    }
    for (int n = 0; n < 3; ++n) {
      const ZetaValue z = zeta(pp, r, n);
      prop_z = std::max(prop_z, std::abs(z.value) / z.scale);
    }
    prop_s = std::max(prop_s, std::abs(std::abs(s_matrix(pp, k)) - 1.0));
  }
  const std::string seed_note = "20 draws, seed " + std::to_string(options.seed);
  add("property: Wronskian closed form", prop_w, 1e-7, seed_note);
  add("property: zeta_0..2 = 0", prop_z, 1e-9, seed_note);
  add("property: |S| = 1", prop_s, 1e-12, seed_note);
  return out;
}

void print_results(std::ostream& out, const std::vector<CheckResult>& results) {
  for (const CheckResult& c : results) {
    out << (c.pass ? "PASS" : "FAIL") << "  [" << std::setw(2) << c.id << "] " << c.name << ": measured "
        << fmt(c.measured) << " tol " << fmt(c.tolerance);
    if (!c.detail.empty()) out << " | " << c.detail;
    if (c.seconds > 0.0) out << " (" << std::fixed << std::setprecision(1) << c.seconds << " s)" << std::defaultfloat;
    out << '\n';
  }
}

}  // namespace epcont
