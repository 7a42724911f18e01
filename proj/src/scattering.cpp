#include "epcont/scattering.hpp"

#include <cmath>
#include <numbers>

#include "epcont/boundstates.hpp"
#include "epcont/jost.hpp"

namespace epcont {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double binomial[5][5] = {
    {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};

Complex poly_eval(const std::array<Complex, 5>& c, Complex k) {
  Complex acc{};
  for (std::size_t j = 5; j-- > 0;) acc = acc * k + c[j];
  return acc;
}

double poly_scale(const std::array<Complex, 5>& c, double k) {
  double acc = 0.0;
  for (std::size_t j = 5; j-- > 0;) acc = acc * std::abs(k) + std::abs(c[j]);
  return acc;
}

// w+-(., r) as a polynomial in k (index = power).
std::array<Complex, 5> k_polynomial(const ModelParams& p, double r, Branch sign) {
  const KPoly up = u_poly(p, r);
  const KPoly vp = v_poly(p, r);
  const double s = sign == Branch::plus ? 1.0 : -1.0;
  std::array<Complex, 5> out;
  for (std::size_t j = 0; j < 5; ++j) out[j] = Complex(up.c[j], s * vp.c[j]);
  return out;
}

// Value of w+(k,0) with a real zero divided out when k sits next to one.
// Returns the (possibly deflated) value; its argument is the one of
// w+(k,0) up to a multiple of pi.
Complex deflated_origin_value(const ModelParams& p, double k) {
  const std::array<Complex, 5> c = origin_polynomial(p);
  const Complex w = poly_eval(c, k);
  const double scale = poly_scale(c, k);
  if (std::abs(w) > 1e-6 * scale) return w;

  std::array<Complex, 4> dc;
  for (std::size_t j = 1; j < 5; ++j) dc[j - 1] = static_cast<double>(j) * c[j];
  Complex k0 = k;
  for (int it = 0; it < 60; ++it) {
    Complex d{};
    for (std::size_t j = 4; j-- > 0;) d = d * k0 + dc[j];
    if (std::abs(d) == 0.0) break;
    const Complex step = poly_eval(c, k0) / d;
    k0 -= step;
    if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(k0))) break;
  }
  const bool real_zero = std::abs(k0.imag()) < 1e-8 * std::max(1.0, std::abs(k0));
  if (real_zero) {
    const double z = k0.real();
    std::array<Complex, 5> quotient{};
    quotient[3] = c[4];
    for (std::size_t j = 3; j-- > 0;) quotient[j] = c[j + 1] + z * quotient[j + 1];
    const Complex qv = poly_eval(quotient, k);
    if (std::abs(qv) > 1e-12 * poly_scale(quotient, k)) return qv;
  }
  if (std::abs(w) > 1e-12 * scale) return w;
  throw SpectralSingularity("w+(k,0) vanishes at real k = " + std::to_string(k));
}

double principal(double angle) {
  // reduce to (-pi/2, pi/2]
  double a = std::remainder(angle, pi);
  if (a <= -pi / 2) a += pi;
  return a;
}

// e^{-i x} - sum_{n<m} (-i x)^n / n!
Complex exp_remainder(int m, double x) {
  if (m <= 0) return std::polar(1.0, -x);
  if (std::abs(x) > 2.0) {
    Complex acc = std::polar(1.0, -x);
    Complex term = 1.0;
    for (int n = 0; n < m; ++n) {
      acc -= term;
      term *= Complex(0.0, -x) / static_cast<double>(n + 1);
    }
    return acc;
  }
  Complex term = 1.0;
  for (int n = 1; n <= m; ++n) term *= Complex(0.0, -x) / static_cast<double>(n);
  Complex acc{};
  for (int n = m; n < m + 60; ++n) {
    acc += term;
    if (std::abs(term) <= 1e-18 * std::abs(acc)) break;
    term *= Complex(0.0, -x) / static_cast<double>(n + 1);
  }
  return acc;
}

// Coefficients of P0+(e) Pr-(e), e = k - q, degree 8.
std::array<Complex, 9> product_coeffs(const ModelParams& p, double r, std::array<double, 9>* moduli = nullptr) {
  const ExpansionCoeffs at0 = expansion_coeffs(p, 0.0);
  const ExpansionCoeffs atr = expansion_coeffs(p, r);
  std::array<Complex, 9> out{};
  if (moduli) moduli->fill(0.0);
  for (std::size_t l = 0; l < 5; ++l) {
    for (std::size_t m = 0; m < 5; ++m) {
      out[l + m] += at0.plus[l] * atr.minus[m];
      if (moduli) (*moduli)[l + m] += at0.scale[l] * atr.scale[m];
    }
  }
  return out;
}

}  // namespace

const char* to_string(PsiBranch branch) { return branch == PsiBranch::generic ? "generic" : "series"; }

double eps_switch(const ModelParams& p) { return 0.02 * p.q; }

std::array<Complex, 5> origin_polynomial(const ModelParams& p) { return k_polynomial(p, 0.0, Branch::plus); }

Complex s_matrix(const ModelParams& p, double k) {
  const Complex w = deflated_origin_value(p, k);
  return std::conj(w) / w;
}

double big_delta(const ModelParams& p, double k) { return principal(-std::arg(deflated_origin_value(p, k))); }

std::vector<double> big_delta_curve(const ModelParams& p, std::span<const double> k_grid) {
  std::vector<double> out;
  out.reserve(k_grid.size());
  double prev_k = 0.0;
  double prev = principal(big_delta(p, 0.0));
  auto follow = [&](double k) {
    const double a = big_delta(p, k);
    const double n = std::round((prev - a) / pi);
    prev = a + n * pi;
    prev_k = k;
    return prev;
  };
  if (!k_grid.empty() && k_grid.front() > 0.0) {
    const double step = 1e-3 * p.q;
    for (double k = step; k < k_grid.front(); k += step) follow(k);
  }
  for (double k : k_grid) {
    if (k < prev_k) throw std::invalid_argument("big_delta_curve needs an ascending grid");
    out.push_back(follow(k));
  }
  return out;
}

ExpansionCoeffs expansion_coeffs(const ModelParams& p, double r, Branch point) {
  const PhaseFrame f = phase_frame(p, point);
  ExpansionCoeffs out;
  out.k_point = f.q;
  out.r = r;
  out.theta = f.theta(r);
  for (Branch sign : {Branch::plus, Branch::minus}) {
    const std::array<Complex, 5> c = k_polynomial(p, r, sign);
    const double s = sign == Branch::plus ? 1.0 : -1.0;
    const Complex phase = std::polar(1.0, s * out.theta);
    std::array<Complex, 5>& dst = sign == Branch::plus ? out.plus : out.minus;
    for (std::size_t l = 0; l < 5; ++l) {
      Complex acc{};
      double scale = 0.0;
      for (std::size_t j = l; j < 5; ++j) {
        const double w = binomial[j][l] * std::pow(f.q, static_cast<int>(j - l));
        acc += w * c[j];
        scale += std::abs(w * c[j]);
      }
      dst[l] = phase * acc;
      out.scale[l] = scale;
    }
  }
  return out;
}

Complex reconstruct(const ExpansionCoeffs& c, double k, Branch sign) {
  const std::array<Complex, 5>& w = c.of(sign);
  const double e = k - c.k_point;
  Complex acc{};
  for (std::size_t l = 5; l-- > 0;) acc = acc * e + w[l];
  const double s = sign == Branch::plus ? 1.0 : -1.0;
  return std::polar(1.0, -s * c.theta) * acc;
}

LowOrderCoeffs low_order_coeffs(const Model& m, double r) {
  const PhaseFrame& f = m.frame();
  const double q = f.q;
  const double w1 = m.w1(r);
  const double psi = psi_b(m, r);
  const double chi = chi_b(m, r);
  const double g = f.gamma(r);
  const double s = std::sin(f.theta(r));
  const double c = std::cos(f.theta(r));
  const double q2 = q * q;
  const double q4 = q2 * q2;

  LowOrderCoeffs out;
  out.w0 = 4.0 * q2 * w1 * psi;
  const double w1_re = 4.0 * q * w1 * (psi + q * chi);
  const double w1_im = 4.0 * q * w1 * q * g * psi;
  out.w1_plus = {w1_re, -w1_im};
  out.w1_minus = {w1_re, w1_im};
  const double brace = 4.0 * q4 * g * g * g * g - 3.0 * q2 * g * g - 3.0 * q4 * f.g1 * f.g1 + 2.0 * q4 * g * f.g2 +
                       3.0 * s * s * c * c;
  const double w2_re = -2.0 * w1 * psi * c * c + 6.0 * q * w1 * chi + 16.0 * q2 * brace * c;
  const double w2_im = 2.0 * w1 * ((2.0 * q * g + q2 * f.g1) * psi + 2.0 * q2 * g * chi);
  out.w2_plus = {w2_re, -w2_im};
  out.w2_minus = {w2_re, w2_im};
  return out;
}

ZetaValue zeta(const ModelParams& p, double r, int order) {
  if (order < 0 || order > 2) throw std::invalid_argument("zeta order must be 0, 1 or 2");
  std::array<double, 9> moduli;
  const std::array<Complex, 9> prod = product_coeffs(p, r, &moduli);
  ZetaValue out;
  Complex c{};
  double factorial = 1.0;
  for (int j = order; j >= 0; --j) {
    const int n = order - j;  // power of (-i r)
    if (n > 0) factorial *= n;
    const Complex e = std::pow(Complex(0.0, -r), n) / factorial;
    c += prod[j] * e;
    out.scale += moduli[j] * std::pow(r, n) / factorial;
  }
  out.value = c - std::conj(c);
  out.scale *= 2.0;
  return out;
}

Complex psi_regular_generic(const Model& m, double k, double r) {
  const ModelParams& p = m.params();
  const double n = k * k - p.q * p.q;
  const Complex s = s_matrix(p, k);
  const Complex wp = reduced_wronskian(p, k, r, Branch::plus) * std::polar(1.0, k * r);
  const Complex wm = reduced_wronskian(p, k, r, Branch::minus) * std::polar(1.0, -k * r);
  return Complex(0.0, 0.5) * (wm - s * wp) / (n * n * m.w1(r));
}

// Im[P0+ Pr- e^{-i e r}] has no e^0, e^1, e^2 terms; each remaining term is
// written with the matching remainder of the exponential so no low orders
// are formed and cancelled.
Complex psi_regular_series(const Model& m, double k, double r) {
  const ModelParams& p = m.params();
  const double e = k - p.q;
  if (e == 0.0) return {0.0, 0.0};
  const std::array<Complex, 9> prod = product_coeffs(p, r);
  const double x = e * r;
  double numerator = 0.0;
  double power = 1.0;
  for (int j = 0; j < 9; ++j) {
    numerator += (prod[j] * exp_remainder(3 - j, x)).imag() * power;
    power *= e;
  }
  // numerator carries e^3; divide by e^2 here
  numerator /= e * e;
  const ExpansionCoeffs at0 = expansion_coeffs(p, 0.0);
  Complex p0{};
  for (std::size_t l = 5; l-- > 0;) p0 = p0 * e + at0.plus[l];
  const double kq = k + p.q;
  return -std::polar(1.0, m.frame().delta) * numerator / (kq * kq * m.w1(r) * p0);
}

Complex psi_regular(const Model& m, double k, double r, PsiBranch* used) {
  const bool series = std::abs(k - m.q()) < eps_switch(m.params());
  if (used) *used = series ? PsiBranch::series : PsiBranch::generic;
  return series ? psi_regular_series(m, k, r) : psi_regular_generic(m, k, r);
}

Complex psi_irregular(const Model& m, double k, double r) {
  const ModelParams& p = m.params();
  if (at_exceptional_point(p, k)) throw ExceptionalPoint("psi_is has a double pole at k = q");
  const double n = k * k - p.q * p.q;
  const Complex s = s_matrix(p, k);
  const Complex wp = reduced_wronskian(p, k, r, Branch::plus) * std::polar(1.0, k * r);
  const Complex wm = reduced_wronskian(p, k, r, Branch::minus) * std::polar(1.0, -k * r);
  return 0.5 * (wm + s * wp) / (n * n * m.w1(r));
}

SingularDecomposition jost_singular_decomposition(const Model& m, double k, double r, Branch sign) {
  const double s = sign == Branch::plus ? 1.0 : -1.0;
  SingularDecomposition out;
  for (Branch point : {Branch::plus, Branch::minus}) {
    const PhaseFrame& f = m.frame(point);
    const double e = k - f.q;
    const Complex phase = std::polar(1.0, -s * f.delta);
    const Complex dbl = psi_b(m, r, point) * phase / (e * e);
    const Complex sgl = chi_b_pm(m, r, sign, point) * phase / e;
    if (point == Branch::plus) {
      out.double_pole_q = dbl;
      out.simple_pole_q = sgl;
    } else {
      out.double_pole_mq = dbl;
      out.simple_pole_mq = sgl;
    }
  }
  out.regular = jost_normalized(m, k, r, sign) - out.double_pole_q - out.simple_pole_q - out.double_pole_mq -
                out.simple_pole_mq;
  return out;
}

ScatteringRecord scattering_record(const Model& m, double k, const std::vector<double>& r_grid) {
  ScatteringRecord rec;
  rec.k = k;
  rec.s_value = s_matrix(m.params(), k);
  rec.big_delta = big_delta(m.params(), k);
  rec.r = r_grid;
  rec.psi_s.reserve(r_grid.size());
  const bool pole = at_exceptional_point(m.params(), k);
  for (double r : r_grid) {
    rec.psi_s.push_back(psi_regular(m, k, r, &rec.branch));
    if (!pole) rec.psi_is.push_back(psi_irregular(m, k, r));
  }
  return rec;
}

}  // namespace epcont
