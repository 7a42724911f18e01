#pragma once

#include <optional>

#include "epcont/model.hpp"
#include "epcont/trig_poly.hpp"

namespace epcont {

/// W1(q,r) as a TrigPoly, written out in powers of (q r) and harmonics of
/// 2qr, 2(qr + delta) and 4qr. Valid for any finite parameters.
TrigPoly build_w1(const ModelParams& p);

/// W1 evaluated from the compact form in terms of theta, gamma and
/// gamma_0..2. Second evaluation path, used to cross-check build_w1.
double w1_compact(const ModelParams& p, double r);

/// Location of the first non-positive value of W1 on r >= 0, if any.
struct SingularityReport {
  bool ok = true;
  double r_star = 0.0;  // first r with W1(q,r) <= 0 when !ok
};

/// Checks W1(q,0) > 0, then scans r in [0, 200/q] with step
/// min(0.01, pi/(20q)) and bisects the first sign change. Beyond the scan
/// the (qr)^4 term dominates.
SingularityReport validate_no_singularity(const ModelParams& p);

/// One H[4] with its Wronskian W1 and exact r-derivatives. Immutable.
///
/// Construction validates the parameters and throws InvalidModel when
/// V[4] would be singular.
class Model {
 public:
  explicit Model(const ModelParams& p);

  const ModelParams& params() const { return params_; }
  double q() const { return params_.q; }
  const Derived& consts() const { return derived_; }
  const PhaseFrame& frame(Branch branch = Branch::plus) const {
    return branch == Branch::plus ? plus_ : minus_;
  }

  double w1(double r) const { return w1_(r); }
  double w1_prime(double r) const { return w1_d1_(r); }
  double w1_second(double r) const { return w1_d2_(r); }

  /// V[4](r) = -2 (W1'' W1 - W1'^2) / W1^2, seeded from V0 = 0.
  double v4(double r) const;

  const TrigPoly& w1_poly() const { return w1_; }

 private:
  ModelParams params_;
  Derived derived_;
  PhaseFrame plus_;
  PhaseFrame minus_;
  TrigPoly w1_;
  TrigPoly w1_d1_;
  TrigPoly w1_d2_;
};

inline double w1(const Model& m, double r) { return m.w1(r); }
inline double potential_v4(const Model& m, double r) { return m.v4(r); }

}  // namespace epcont
