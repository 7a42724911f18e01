#include "epcont/potential.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace epcont {

namespace {

using Kind = TrigPoly::Kind;

// coeff * (q r)^n * kind(freq r + phase)
void add_qr(TrigPoly& poly, const ModelParams& p, double coeff, int n, Kind kind = Kind::constant,
            double freq = 0.0, double phase = 0.0) {
  poly.add(coeff * std::pow(p.q, n), n, kind, freq, phase);
}

}  // namespace

TrigPoly build_w1(const ModelParams& p) {
  const auto [t, d, aq] = derived(p);
  const double b = p.beta;
  const double d2 = d * d;
  const double two_q = 2.0 * p.q;
  const double two_delta = 2.0 * std::atan(t);

  TrigPoly w;
  add_qr(w, p, 12.0 * b * b / d2, 0);
  add_qr(w, p, 24.0 * b * aq / d2, 0, Kind::cosine, two_q);
  add_qr(w, p, -24.0 * b * aq / d2, 0);
  add_qr(w, p, 12.0 * aq * (aq * aq + b * b - 1.0) / d2, 0, Kind::sine, two_q);

  add_qr(w, p, 16.0, 4);
  add_qr(w, p, 16.0 * 4.0 * aq / d, 3);
  add_qr(w, p, 16.0 * 6.0 * aq * aq / d2, 2);
  add_qr(w, p, 16.0 * 3.0 * aq * aq * aq / d2, 1);

  add_qr(w, p, -12.0, 2);
  add_qr(w, p, -12.0 * 2.0 * aq / d, 1);

  add_qr(w, p, 24.0, 2, Kind::cosine, two_q, two_delta);
  add_qr(w, p, 24.0 * 2.0 * aq * (1.0 - b * t) / d2, 1, Kind::cosine, two_q, two_delta);

  add_qr(w, p, 16.0, 3, Kind::sine, two_q, two_delta);
  add_qr(w, p, 16.0 * 3.0 * aq / d, 2, Kind::sine, two_q, two_delta);
  add_qr(w, p, 16.0 * 3.0 * aq * aq / d2 - 12.0, 1, Kind::sine, two_q, two_delta);

  // 3 [X sin^2 2qr + 4 T sin 2qr cos 2qr], folded onto the 4qr harmonic
  const double x = (1.0 - 6.0 * t * t + t * t * t * t) / d2;
  const double tt = t * (1.0 - t * t) / d2;
  add_qr(w, p, 1.5 * x, 0);
  add_qr(w, p, -1.5 * x, 0, Kind::cosine, 2.0 * two_q);
  add_qr(w, p, 6.0 * tt, 0, Kind::sine, 2.0 * two_q);
  return w;
}

double w1_compact(const ModelParams& p, double r) {
  const PhaseFrame f = phase_frame(p);
  const double q = f.q;
  const double qg = q * f.gamma(r);
  const double q2g1 = q * q * f.g1;
  const double q3g2 = q * q * q * f.g2;
  const double th2 = 2.0 * f.theta(r);
  const double s2 = std::sin(th2);
  return 16.0 * std::pow(qg, 4) - 12.0 * qg * qg + 8.0 * q3g2 * qg - 12.0 * q2g1 * q2g1 +
         24.0 * (q2g1 * qg + qg * qg) * std::cos(th2) + 3.0 * s2 * s2 +
         (16.0 * qg * qg * qg - 12.0 * qg - 12.0 * q2g1 - 4.0 * q3g2) * s2;
}

SingularityReport validate_no_singularity(const ModelParams& p) {
  if (!std::isfinite(p.alpha) || !std::isfinite(p.beta) || !(p.q > 0.0) || !std::isfinite(p.q)) {
    return SingularityReport{false, 0.0};
  }
  const auto [t, d, aq] = derived(p);
  if (!(12.0 * p.beta * p.beta / (d * d) > 0.0)) return SingularityReport{false, 0.0};

  const TrigPoly w = build_w1(p);
  const double step = std::min(0.01, std::numbers::pi / (20.0 * p.q));
  const double r_end = 200.0 / p.q;
  double r_prev = 0.0;
  for (long i = 1; r_prev < r_end; ++i) {
    const double r = static_cast<double>(i) * step;
    const double wr = w(r);
    if (wr <= 0.0) {
      double lo = r_prev;
      double hi = r;
      while (hi - lo > 1e-12 * std::max(1.0, hi)) {
        const double mid = 0.5 * (lo + hi);
        (w(mid) > 0.0 ? lo : hi) = mid;
      }
      return SingularityReport{false, hi};
    }
    r_prev = r;
  }
  return SingularityReport{true, 0.0};
}

Model::Model(const ModelParams& p)
    : params_(p), derived_(derived(p)), plus_(phase_frame(p, Branch::plus)), minus_(phase_frame(p, Branch::minus)) {
  check_params(p);
  const SingularityReport report = validate_no_singularity(p);
  if (!report.ok) {
    std::ostringstream os;
    os.precision(17);
    os << "W1(q,r) vanishes at r = " << report.r_star << " (" << describe(p) << "): V[4] would be singular";
    throw InvalidModel(os.str());
  }
  w1_ = build_w1(p);
  w1_d1_ = w1_.derivative();
  w1_d2_ = w1_d1_.derivative();
}

double Model::v4(double r) const {
  const double w = w1_(r);
  const double w1p = w1_d1_(r);
  const double w2p = w1_d2_(r);
  return -2.0 * (w2p * w - w1p * w1p) / (w * w);
}

}  // namespace epcont
