#include "epcont/model.hpp"

#include <cmath>
#include <sstream>

namespace epcont {

void check_params(const ModelParams& p) {
  if (!std::isfinite(p.alpha) || !std::isfinite(p.beta) || !std::isfinite(p.q)) {
    throw InvalidModel("model parameters must be finite");
  }
  if (!(p.q > 0.0)) throw InvalidModel("q must be positive");
  if (p.beta == 0.0) throw InvalidModel("beta = 0 gives W1(q,0) = 0: V[4] is singular at r = 0");
}

double delta(const ModelParams& p, double q_arg) { return std::atan(p.alpha * q_arg - p.beta); }

Gammas gammas(const ModelParams& p) {
  const double t = p.alpha * p.q - p.beta;
  const double d = 1.0 + t * t;
  const double a = p.alpha;
  return Gammas{
      a / d,
      -2.0 * a * a * t / (d * d),
      -2.0 * a * a * a * (1.0 - 3.0 * t * t) / (d * d * d),
  };
}

PhaseFrame phase_frame(const ModelParams& p, Branch branch) {
  const Gammas g = gammas(p);
  const double dl = delta(p, p.q);
  if (branch == Branch::plus) return PhaseFrame{p.q, dl, g.g0, g.g1, g.g2};
  return PhaseFrame{-p.q, -dl, g.g0, -g.g1, g.g2};
}

Derived derived(const ModelParams& p) {
  const double t = p.alpha * p.q - p.beta;
  return Derived{t, 1.0 + t * t, p.alpha * p.q};
}

std::string describe(const ModelParams& p) {
  std::ostringstream os;
  os.precision(17);
  os << "alpha=" << p.alpha << " beta=" << p.beta << " q=" << p.q;
  return os.str();
}

}  // namespace epcont
