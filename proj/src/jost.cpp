#include "epcont/jost.hpp"

#include <cmath>

namespace epcont {

namespace {

// Coefficient patterns (index = power of k) of the k-dependent prefactors.
struct Patterns {
  KPoly a;    // k^4 + 6 q^2 k^2 + q^4
  KPoly b;    // k^4 - 4 q^2 k^2 - q^4
  KPoly c;    // k^4 - q^4
  KPoly kk;   // (k^2 - q^2)^2
  KPoly kp;   // q k (k^2 + q^2)
  KPoly km;   // q k (k^2 - q^2)
  KPoly k3;   // q k^3
  KPoly k1;   // q^3 k
};

Patterns patterns(double q) {
  const double q2 = q * q;
  const double q4 = q2 * q2;
  Patterns s;
  s.a.c = {q4, 0.0, 6.0 * q2, 0.0, 1.0};
  s.b.c = {-q4, 0.0, -4.0 * q2, 0.0, 1.0};
  s.c.c = {-q4, 0.0, 0.0, 0.0, 1.0};
  s.kk.c = {q4, 0.0, -2.0 * q2, 0.0, 1.0};
  s.kp.c = {0.0, q2 * q, 0.0, q, 0.0};
  s.km.c = {0.0, -q2 * q, 0.0, q, 0.0};
  s.k3.c = {0.0, 0.0, 0.0, q, 0.0};
  s.k1.c = {0.0, q2 * q, 0.0, 0.0, 0.0};
  return s;
}

// Polynomial in k with coefficients depending on a (possibly complex) r.
template <class T>
struct KPolyT {
  std::array<T, 5> c{};

  void add(const KPoly& pattern, const T& factor) {
    for (std::size_t j = 0; j < 5; ++j) c[j] += pattern.c[j] * factor;
  }
};

template <class T>
struct RadialParts {
  T x;   // q r
  T p2;  // x^2 + 2 aq/D x
  T p3;  // x^3 + 3 aq/D x^2 + 3 aq^2/D^2 x
  T p4;  // x^4 + 4 aq/D x^3 + 6 aq^2/D^2 x^2 + 3 aq^3/D^2 x
  T cos_2qr, sin_2qr, cos_2theta, sin_2theta;
  T quartic_u;  // X sin^2 2qr + 4 T sin 2qr cos 2qr
  T quartic_v;  // X sin 2qr cos 2qr - 4 T sin^2 2qr
};

template <class T>
RadialParts<T> radial_parts(const ModelParams& p, const T& r) {
  using std::cos;
  using std::sin;
  const auto [t, d, aq] = derived(p);
  const double d2 = d * d;
  const double two_delta = 2.0 * std::atan(t);
  RadialParts<T> s;
  s.x = p.q * r;
  const T& x = s.x;
  s.p2 = x * x + 2.0 * aq / d * x;
  s.p3 = x * x * x + 3.0 * aq / d * x * x + 3.0 * aq * aq / d2 * x;
  s.p4 = x * x * x * x + 4.0 * aq / d * x * x * x + 6.0 * aq * aq / d2 * x * x + 3.0 * aq * aq * aq / d2 * x;
  s.cos_2qr = cos(2.0 * x);
  s.sin_2qr = sin(2.0 * x);
  s.cos_2theta = cos(2.0 * x + two_delta);
  s.sin_2theta = sin(2.0 * x + two_delta);
  const double big_x = (1.0 - 6.0 * t * t + t * t * t * t) / d2;
  const double big_t = t * (1.0 - t * t) / d2;
  s.quartic_u = big_x * s.sin_2qr * s.sin_2qr + 4.0 * big_t * s.sin_2qr * s.cos_2qr;
  s.quartic_v = big_x * s.sin_2qr * s.cos_2qr - 4.0 * big_t * s.sin_2qr * s.sin_2qr;
  return s;
}

template <class T>
KPolyT<T> u_group_t(const ModelParams& p, UGroup group, const T& r) {
  const auto [t, d, aq] = derived(p);
  const double b = p.beta;
  const double d2 = d * d;
  const Patterns pat = patterns(p.q);
  const RadialParts<T> s = radial_parts(p, r);
  KPolyT<T> out;
  switch (group) {
    case UGroup::constant:
      out.add(pat.a, T(12.0 * b * (b - 2.0 * aq) / d2));
      break;
    case UGroup::cos_2qr:
      out.add(pat.b, 24.0 * b * aq / d2 * s.cos_2qr);
      break;
    case UGroup::radial_quartic:
      out.add(pat.kk, 16.0 * s.p4);
      break;
    case UGroup::radial_quadratic:
      out.add(pat.a, -12.0 * s.p2);
      break;
    case UGroup::cos_2theta:
      out.add(pat.b, 24.0 * s.p2 * s.cos_2theta);
      out.add(pat.c, -48.0 * aq * aq * t / d2 * s.x * s.cos_2theta);
      break;
    case UGroup::sin_2theta:
      out.add(pat.c, 16.0 * s.p3 * s.sin_2theta);
      out.add(pat.b, -12.0 * s.x * s.sin_2theta);
      break;
    case UGroup::sin_2qr:
      out.add(pat.c, 24.0 * aq * aq * aq / d2 * s.sin_2qr);
      out.add(pat.b, -12.0 * aq * (1.0 + aq * aq - b * b) / d2 * s.sin_2qr);
      break;
    case UGroup::harmonic_4qr:
      out.add(pat.a, 3.0 * s.quartic_u);
      break;
  }
  return out;
}

template <class T>
KPolyT<T> v_group_t(const ModelParams& p, VGroup group, const T& r) {
  const auto [t, d, aq] = derived(p);
  const double b = p.beta;
  const double q = p.q;
  const double d2 = d * d;
  const Patterns pat = patterns(q);
  const RadialParts<T> s = radial_parts(p, r);
  KPolyT<T> out;
  switch (group) {
    case VGroup::constant: {
      // 24 q k beta / D^2 [(beta^2 - 4 beta aq - 1)(k^2 + q^2) + aq^2 (q^2 + 5 k^2)]
      out.add(pat.kp, T(24.0 * b / d2 * (b * b - 4.0 * b * aq - 1.0)));
      out.add(pat.k1, T(24.0 * b / d2 * aq * aq));
      out.add(pat.k3, T(24.0 * b / d2 * 5.0 * aq * aq));
      break;
    }
    case VGroup::cos_2qr:
      out.add(pat.kp, 24.0 * b * (b * b - 4.0 * b * aq + aq * aq + 1.0) / d2 * s.cos_2qr);
      out.add(pat.k3, 96.0 * b * aq * aq / d2 * s.cos_2qr);
      break;
    case VGroup::radial:
      out.add(pat.km, 64.0 * s.p3);
      out.add(pat.kp, -24.0 * s.x);
      break;
    case VGroup::cos_2theta:
      out.add(pat.km, 32.0 * s.p3 * s.cos_2theta);
      out.add(pat.kp, 24.0 * s.x * s.cos_2theta);
      break;
    case VGroup::sin_2theta:
      out.add(pat.k1, 96.0 * s.p2 * s.sin_2theta);
      out.add(pat.km, 96.0 * aq * aq * t / d2 * s.x * s.sin_2theta);
      break;
    case VGroup::sin_2qr:
      out.add(pat.kp, 12.0 * (t * t * t * t + 4.0 * b * aq - 1.0) / d2 * s.sin_2qr);
      out.add(pat.km, -48.0 * aq * aq / d2 * s.sin_2qr);
      break;
    case VGroup::harmonic_4qr:
      out.add(pat.kp, 12.0 * s.quartic_v);
      break;
  }
  return out;
}

KPoly real_part(const KPolyT<double>& in) {
  KPoly out;
  out.c = in.c;
  return out;
}

constexpr double complex_step = 1e-30;

KPoly imag_over_step(const KPolyT<Complex>& in, double step) {
  KPoly out;
  for (std::size_t j = 0; j < 5; ++j) out.c[j] = in.c[j].imag() / step;
  return out;
}

template <class T>
KPolyT<T> u_sum(const ModelParams& p, const T& r) {
  KPolyT<T> out;
  for (UGroup g : all_u_groups) {
    const KPolyT<T> part = u_group_t(p, g, r);
    for (std::size_t j = 0; j < 5; ++j) out.c[j] += part.c[j];
  }
  return out;
}

template <class T>
KPolyT<T> v_sum(const ModelParams& p, const T& r) {
  KPolyT<T> out;
  for (VGroup g : all_v_groups) {
    const KPolyT<T> part = v_group_t(p, g, r);
    for (std::size_t j = 0; j < 5; ++j) out.c[j] += part.c[j];
  }
  return out;
}

double step_for(double r) { return complex_step * std::max(1.0, std::abs(r)); }

}  // namespace

double KPoly::operator()(double k) const {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * k + *it;
  return acc;
}

KPoly& KPoly::operator+=(const KPoly& other) {
  for (std::size_t j = 0; j < 5; ++j) c[j] += other.c[j];
  return *this;
}

KPoly& KPoly::operator*=(double factor) {
  for (double& x : c) x *= factor;
  return *this;
}

KPoly u_group(const ModelParams& p, UGroup group, double r) { return real_part(u_group_t(p, group, r)); }
KPoly v_group(const ModelParams& p, VGroup group, double r) { return real_part(v_group_t(p, group, r)); }

KPoly u_poly(const ModelParams& p, double r) { return real_part(u_sum(p, r)); }
KPoly v_poly(const ModelParams& p, double r) { return real_part(v_sum(p, r)); }

KPoly u_poly_dr(const ModelParams& p, double r) {
  const double h = step_for(r);
  return imag_over_step(u_sum(p, Complex(r, h)), h);
}

KPoly v_poly_dr(const ModelParams& p, double r) {
  const double h = step_for(r);
  return imag_over_step(v_sum(p, Complex(r, h)), h);
}

double u(const ModelParams& p, double k, double r) { return u_poly(p, r)(k); }
double v(const ModelParams& p, double k, double r) { return v_poly(p, r)(k); }

double u_at_origin(const ModelParams& p, double k) {
  const auto [t, d, aq] = derived(p);
  const double b = p.beta;
  const double q2 = p.q * p.q;
  const double k2 = k * k;
  return 12.0 * b / (d * d) * (b * k2 * k2 + (6.0 * b - 20.0 * aq) * k2 * q2 + (b - 4.0 * aq) * q2 * q2);
}

double v_at_origin(const ModelParams& p, double k) {
  const auto [t, d, aq] = derived(p);
  const double b = p.beta;
  const double q2 = p.q * p.q;
  return 48.0 * b * p.q * k / (d * d) *
         ((b * b - 4.0 * b * aq + 5.0 * aq * aq) * k * k + (b * b - 4.0 * b * aq + aq * aq) * q2);
}

bool at_exceptional_point(const ModelParams& p, double k) {
  const double tol = 1e-12 * std::max(1.0, p.q);
  return std::abs(k - p.q) < tol || std::abs(k + p.q) < tol;
}

Complex reduced_wronskian(const ModelParams& p, double k, double r, Branch sign) {
  if (k < 0.0) {
    return reduced_wronskian(p, -k, r, sign == Branch::plus ? Branch::minus : Branch::plus);
  }
  const double s = sign == Branch::plus ? 1.0 : -1.0;
  return {u(p, k, r), s * v(p, k, r)};
}

Complex reduced_wronskian_dr(const ModelParams& p, double k, double r, Branch sign) {
  if (k < 0.0) {
    return reduced_wronskian_dr(p, -k, r, sign == Branch::plus ? Branch::minus : Branch::plus);
  }
  const double s = sign == Branch::plus ? 1.0 : -1.0;
  return {u_poly_dr(p, r)(k), s * v_poly_dr(p, r)(k)};
}

Complex jost_unnormalized(const Model& m, double k, double r, Branch sign) {
  const double s = sign == Branch::plus ? 1.0 : -1.0;
  return reduced_wronskian(m.params(), k, r, sign) * std::polar(1.0, s * k * r) / m.w1(r);
}

Complex jost_unnormalized_dr(const Model& m, double k, double r, Branch sign) {
  const double s = sign == Branch::plus ? 1.0 : -1.0;
  const Complex w = reduced_wronskian(m.params(), k, r, sign);
  const Complex dw = reduced_wronskian_dr(m.params(), k, r, sign);
  const double w1 = m.w1(r);
  const Complex phase = std::polar(1.0, s * k * r);
  return ((dw + Complex(0.0, s * k) * w) / w1 - w * m.w1_prime(r) / (w1 * w1)) * phase;
}

Complex jost_normalized(const Model& m, double k, double r, Branch sign) {
  if (at_exceptional_point(m.params(), k)) {
    throw ExceptionalPoint("F(k,r) has a double pole at k = +-q");
  }
  const double n = k * k - m.q() * m.q();
  return jost_unnormalized(m, k, r, sign) / (n * n);
}

Complex wronskian_closed(const ModelParams& p, double k) {
  const double a = std::pow(k + p.q, 4);
  const double b = std::pow(k - p.q, 4);
  return {0.0, -2.0 * k * a * b};
}

Complex wronskian_at(const Model& m, double k, double r) {
  const Complex fp = jost_unnormalized(m, k, r, Branch::plus);
  const Complex fm = jost_unnormalized(m, k, r, Branch::minus);
  const Complex dfp = jost_unnormalized_dr(m, k, r, Branch::plus);
  const Complex dfm = jost_unnormalized_dr(m, k, r, Branch::minus);
  return fp * dfm - fm * dfp;
}

}  // namespace epcont
