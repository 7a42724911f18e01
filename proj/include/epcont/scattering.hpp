#pragma once

#include <array>
#include <span>
#include <vector>

#include "epcont/potential.hpp"

namespace epcont {

enum class PsiBranch { generic, series };

const char* to_string(PsiBranch branch);

/// Half-width of the window around k = q where psi_s switches to the
/// series form: 0.02 q.
double eps_switch(const ModelParams& p);

/// w+(k,0) as a polynomial in k with complex coefficients (index = power).
std::array<Complex, 5> origin_polynomial(const ModelParams& p);

/// S(k) = w-(k,0)/w+(k,0).
///
/// u and v are real polynomials in k, so a real zero k0 of w+(., 0) is also
/// a zero of w-(., 0) and cancels. Near such a zero both are divided by
/// (k - k0) before taking the ratio. Throws SpectralSingularity when the
/// zero cannot be removed.
Complex s_matrix(const ModelParams& p, double k);

/// Phase shift on the principal branch (-pi/2, pi/2]; S = exp(2 i Delta).
double big_delta(const ModelParams& p, double k);

/// Delta on an ascending grid of k >= 0, made continuous by adding
/// multiples of pi, starting from Delta(0) = 0. If the grid does not start
/// at 0 the phase is followed from 0 on a fine walk first.
std::vector<double> big_delta_curve(const ModelParams& p, std::span<const double> k_grid);

/// Coefficients of w+-(k,r) = e^{-+i theta(r)} sum_l w_l+- (k - k_P)^l at
/// k_P = q (point plus) or k_P = -q (point minus, with the odd extension of
/// delta). Exact Taylor coefficients of the quartic in k.
struct ExpansionCoeffs {
  double k_point = 0.0;
  double r = 0.0;
  double theta = 0.0;  // theta(r) of the chosen point
  std::array<Complex, 5> plus{};
  std::array<Complex, 5> minus{};
  std::array<double, 5> scale{};  // sum of the moduli of the terms behind w_l (same for both signs)

  const std::array<Complex, 5>& of(Branch sign) const { return sign == Branch::plus ? plus : minus; }
};

ExpansionCoeffs expansion_coeffs(const ModelParams& p, double r, Branch point = Branch::plus);

/// e^{-+i theta(r)} sum_l w_l+- (k - k_P)^l.
Complex reconstruct(const ExpansionCoeffs& c, double k, Branch sign);

/// Closed forms of the three lowest coefficients at k = q, written with
/// psi_B, chi_B, W1 and the phase data; second path for expansion_coeffs.
struct LowOrderCoeffs {
  double w0 = 0.0;
  Complex w1_plus, w1_minus, w2_plus, w2_minus;
};

LowOrderCoeffs low_order_coeffs(const Model& m, double r);

/// Order-n coefficient (n = 0, 1, 2) of
/// P0+(e) Pr-(e) e^{-i e r} - c.c. with e = k - q, where
/// P0+ = sum w_l+(q,0) e^l and Pr- = sum w_m-(q,r) e^m.
struct ZetaValue {
  Complex value;
  double scale = 0.0;  // same sum with every term replaced by its modulus scale
};

ZetaValue zeta(const ModelParams& p, double r, int order);

/// Regular solution psi_s = (i/2)[F- - S F+]. Uses the series form inside
/// |k - q| < eps_switch and the direct form outside.
Complex psi_regular(const Model& m, double k, double r, PsiBranch* used = nullptr);
Complex psi_regular_generic(const Model& m, double k, double r);
Complex psi_regular_series(const Model& m, double k, double r);

/// Irregular solution psi_is = (1/2)[F- + S F+]. Throws ExceptionalPoint
/// at k = q.
Complex psi_irregular(const Model& m, double k, double r);

/// F+-(k,r) split into its poles at k = q and k = -q and a remainder.
/// The remainder is formed by subtraction, so it loses about
/// log10(1/(k - q)^2) digits near the pole.
struct SingularDecomposition {
  Complex double_pole_q;   // psi_B(q) e^{-+i delta} / (k - q)^2
  Complex simple_pole_q;   // chi_B+-(q) e^{-+i delta} / (k - q)
  Complex double_pole_mq;  // psi_B(-q) e^{+-i delta} / (k + q)^2
  Complex simple_pole_mq;  // chi_B+-(-q) e^{+-i delta} / (k + q)
  Complex regular;         // h+-(k,r)

  Complex sum() const { return double_pole_q + simple_pole_q + double_pole_mq + simple_pole_mq + regular; }
};

SingularDecomposition jost_singular_decomposition(const Model& m, double k, double r, Branch sign);

struct ScatteringRecord {
  double k = 0.0;
  Complex s_value;
  double big_delta = 0.0;
  std::vector<double> r;
  std::vector<Complex> psi_s;
  std::vector<Complex> psi_is;  // empty at k = q
  PsiBranch branch = PsiBranch::generic;
};

ScatteringRecord scattering_record(const Model& m, double k, const std::vector<double>& r_grid);

}  // namespace epcont
