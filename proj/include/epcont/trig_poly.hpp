#pragma once

#include <vector>

namespace epcont {

/// Sum of terms c * r^m * {1, cos, sin}(a r + phi).
///
/// Terms sharing (a, phi) are stored together as a pair of polynomials in r
/// multiplying cos and sin, so evaluation costs one sincos per harmonic and
/// differentiation is exact.
class TrigPoly {
 public:
  enum class Kind { constant, cosine, sine };

  struct Term {
    double coeff = 0.0;
    int power = 0;
    Kind kind = Kind::constant;
    double freq = 0.0;
    double phase = 0.0;
  };

  TrigPoly() = default;

  void add(const Term& term);
  void add(double coeff, int power, Kind kind = Kind::constant, double freq = 0.0, double phase = 0.0) {
    add(Term{coeff, power, kind, freq, phase});
  }

  double operator()(double r) const;

  TrigPoly derivative() const;

  /// Flattened view of the nonzero terms.
  std::vector<Term> terms() const;

  bool empty() const { return harmonics_.empty(); }

  TrigPoly& operator+=(const TrigPoly& other);
  TrigPoly& operator*=(double factor);

 private:
  struct Harmonic {
    double freq = 0.0;
    double phase = 0.0;
    std::vector<double> cos_poly;  // coefficient of r^m cos(freq r + phase)
    std::vector<double> sin_poly;
  };

  Harmonic& harmonic(double freq, double phase);

  std::vector<Harmonic> harmonics_;
};

}  // namespace epcont
