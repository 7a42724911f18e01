#pragma once

#include <array>

#include "epcont/potential.hpp"

namespace epcont {

/// Polynomial in k of degree <= 4, stored as coefficients of k^0..k^4.
///
/// u(k,r) only has even powers and v(k,r) only odd powers, so at fixed r
/// each of them is one of these.
struct KPoly {
  std::array<double, 5> c{};

  double operator()(double k) const;
  KPoly& operator+=(const KPoly& other);
  KPoly& operator*=(double factor);
};

/// Term groups of u(k,r), in the order they are printed.
enum class UGroup {
  constant,          // 12 A beta (beta - 2 aq) / D^2
  cos_2qr,           // 24 B beta aq / D^2 cos 2qr
  radial_quartic,    // 16 (k^2 - q^2)^2 [(qr)^4 + ...]
  radial_quadratic,  // -12 A [(qr)^2 + 2 aq/D qr]
  cos_2theta,        // cos 2(qr + delta)
  sin_2theta,        // sin 2(qr + delta)
  sin_2qr,           // sin 2qr
  harmonic_4qr,      // 3 A [X sin^2 2qr + 4 T sin 2qr cos 2qr]
};

/// Term groups of v(k,r), in the order they are printed.
enum class VGroup {
  constant,
  cos_2qr,
  radial,
  cos_2theta,
  sin_2theta,
  sin_2qr,
  harmonic_4qr,
};

inline constexpr std::array<UGroup, 8> all_u_groups{
    UGroup::constant,   UGroup::cos_2qr,    UGroup::radial_quartic, UGroup::radial_quadratic,
    UGroup::cos_2theta, UGroup::sin_2theta, UGroup::sin_2qr,        UGroup::harmonic_4qr};

inline constexpr std::array<VGroup, 7> all_v_groups{
    VGroup::constant,   VGroup::cos_2qr, VGroup::radial,      VGroup::cos_2theta,
    VGroup::sin_2theta, VGroup::sin_2qr, VGroup::harmonic_4qr};

/// One term group at fixed r, as a polynomial in k.
KPoly u_group(const ModelParams& p, UGroup group, double r);
KPoly v_group(const ModelParams& p, VGroup group, double r);

/// Sum of all groups: u(., r) and v(., r) as polynomials in k.
KPoly u_poly(const ModelParams& p, double r);
KPoly v_poly(const ModelParams& p, double r);

/// Exact r-derivatives of u_poly and v_poly (complex-step evaluation).
KPoly u_poly_dr(const ModelParams& p, double r);
KPoly v_poly_dr(const ModelParams& p, double r);

double u(const ModelParams& p, double k, double r);
double v(const ModelParams& p, double k, double r);

/// Closed forms of u(k,0) and v(k,0); second path for the r = 0 values.
double u_at_origin(const ModelParams& p, double k);
double v_at_origin(const ModelParams& p, double k);

/// True when |k - q| or |k + q| is below 1e-12 max(1, q).
bool at_exceptional_point(const ModelParams& p, double k);

/// w+-(k,r) = u +- i v. Negative k is served by w+-(k,r) = w-+(-k,r).
Complex reduced_wronskian(const ModelParams& p, double k, double r, Branch sign);
Complex reduced_wronskian_dr(const ModelParams& p, double k, double r, Branch sign);

/// f+-(k,r) = w+-(k,r) e^{+-ikr} / W1(q,r).
Complex jost_unnormalized(const Model& m, double k, double r, Branch sign);
Complex jost_unnormalized_dr(const Model& m, double k, double r, Branch sign);

/// F+-(k,r) = f+-(k,r) / (k^2 - q^2)^2. Throws ExceptionalPoint at k = +-q.
Complex jost_normalized(const Model& m, double k, double r, Branch sign);

/// W(f+, f-) = -2ik (k+q)^4 (k-q)^4.
Complex wronskian_closed(const ModelParams& p, double k);

/// f+ (f-)' - f- (f+)' from the closed-form Jost solutions and their exact
/// r-derivatives at one radius.
Complex wronskian_at(const Model& m, double k, double r);

}  // namespace epcont
