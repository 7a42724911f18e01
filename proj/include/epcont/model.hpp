#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace epcont {

/// Complex wavefunction amplitude. Units: hbar = 1, 2m = 1, E = k^2.
using Complex = std::complex<double>;

/// The triple (alpha, beta, q) that fixes one Hamiltonian H[4].
///
/// The phase of the transformation function sin(q r + delta(q)) is
/// delta(q) = arctan(alpha q - beta); q is the wave number of the
/// exceptional point. A plain aggregate: validity is checked by
/// check_params() and validate_no_singularity().
struct ModelParams {
  double alpha = 1.0;
  double beta = 3.0;
  double q = 1.0;
};

class InvalidModel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised where a formula has its (double) pole at k = +-q.
class ExceptionalPoint : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised on a real zero of the Jost function w+(k,0) that cannot be removed.
class SpectralSingularity : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Throws InvalidModel unless q > 0, beta != 0 and all fields are finite.
void check_params(const ModelParams& p);

/// delta(q_arg) = arctan(alpha q_arg - beta), principal branch.
double delta(const ModelParams& p, double q_arg);

/// First three q-derivatives of delta at p.q.
struct Gammas {
  double g0 = 0.0;
  double g1 = 0.0;
  double g2 = 0.0;
};

Gammas gammas(const ModelParams& p);

enum class Branch { plus, minus };

/// Phase data of the transformation function at k = +q, or at the continued
/// point -q where delta is extended as an odd function of q.
///
/// Under the odd extension q -> -q, delta -> -delta, gamma_0 and gamma_2 are
/// even and gamma_1 is odd; theta(r) = q r + delta flips sign and
/// gamma(r) = r + gamma_0 is unchanged.
struct PhaseFrame {
  double q = 0.0;
  double delta = 0.0;
  double g0 = 0.0;
  double g1 = 0.0;
  double g2 = 0.0;

  double theta(double r) const { return q * r + delta; }
  double gamma(double r) const { return r + g0; }
};

PhaseFrame phase_frame(const ModelParams& p, Branch branch = Branch::plus);

/// Frequently used combinations of the parameters.
struct Derived {
  double t = 0.0;      // alpha q - beta = tan(delta)
  double denom = 1.0;  // 1 + t^2
  double aq = 0.0;     // alpha q
};

Derived derived(const ModelParams& p);

std::string describe(const ModelParams& p);

}  // namespace epcont
