#include <doctest.h>

#include <cmath>

#include "epcont/potential.hpp"

using namespace epcont;

namespace {

const ModelParams canonical{1.0, 3.0, 1.0};

// -2 (ln W1)'' by Richardson-extrapolated central differences of the
// compact form of W1.
double v4_from_compact(const ModelParams& p, double r) {
  auto lw = [&](double x) { return std::log(w1_compact(p, x)); };
  auto d2 = [&](double h) { return (lw(r + h) - 2.0 * lw(r) + lw(r - h)) / (h * h); };
  const double h = 1e-3;
  return -2.0 * (4.0 * d2(h / 2) - d2(h)) / 3.0;
}

}  // namespace

TEST_CASE("W1 at the origin") {
  const Model m(canonical);
  // 12 beta^2 / (1 + (alpha q - beta)^2)^2 = 108 / 25
  CHECK(m.w1(0.0) == doctest::Approx(4.32).epsilon(1e-15));
  const ModelParams p{-0.4, 1.7, 0.6};
  const double t = p.alpha * p.q - p.beta;
  CHECK(Model(p).w1(0.0) == doctest::Approx(12 * p.beta * p.beta / ((1 + t * t) * (1 + t * t))).epsilon(1e-14));
}

TEST_CASE("explicit and compact W1 agree") {
  for (const ModelParams& p : {canonical, ModelParams{-1.2, 2.5, 0.4}, ModelParams{0.3, 4.0, 1.9}}) {
    const Model m(p);
    for (double r = 0.0; r <= 40.0; r += 0.37) {
      CHECK(m.w1(r) == doctest::Approx(w1_compact(p, r)).epsilon(1e-11));
    }
  }
}

TEST_CASE("exact derivatives of W1") {
  const Model m(canonical);
  for (double r : {0.3, 1.1, 4.0, 12.5}) {
    const double h = 1e-4;
    CHECK(m.w1_prime(r) == doctest::Approx((m.w1(r + h) - m.w1(r - h)) / (2 * h)).epsilon(1e-7));
    CHECK(m.w1_second(r) == doctest::Approx((m.w1_prime(r + h) - m.w1_prime(r - h)) / (2 * h)).epsilon(1e-7));
  }
}

TEST_CASE("V4 against -2 (ln W1)'' of the compact form") {
  const Model m(canonical);
  for (double r : {0.05, 0.49, 1.27, 3.07, 8.0, 20.0}) {
    CHECK(m.v4(r) == doctest::Approx(v4_from_compact(canonical, r)).epsilon(1e-6));
  }
}

TEST_CASE("V4 reference values at the canonical parameters") {
  const Model m(canonical);
  // high-precision evaluation of the same closed form
  CHECK(m.v4(0.0) == doctest::Approx(19.555555555555557).epsilon(1e-12));
  CHECK(m.v4(0.49) == doctest::Approx(-9.141408677902918).epsilon(1e-10));
  CHECK(m.v4(1.27) == doctest::Approx(4.430064995889904).epsilon(1e-10));
  CHECK(m.v4(3.07) == doctest::Approx(-2.5334652438589282).epsilon(1e-10));
  CHECK(potential_v4(m, 4.51) == doctest::Approx(1.725394438805133).epsilon(1e-10));
}

TEST_CASE("V4 decays like the von Neumann-Wigner tail") {
  const Model m(canonical);
  // |V4| r stays bounded and V4 -> 0
  double worst = 0.0;
  for (double r = 200.0; r <= 400.0; r += 0.1) worst = std::max(worst, std::abs(m.v4(r)) * r);
  CHECK(worst < 20.0);
  CHECK(std::abs(m.v4(1e4)) < 1e-2);
}

TEST_CASE("singular parameter sets are rejected") {
  CHECK(validate_no_singularity(canonical).ok);
  const ModelParams bad{1.3696, -2.3021, 0.3008};
  const SingularityReport rep = validate_no_singularity(bad);
  CHECK_FALSE(rep.ok);
  CHECK(rep.r_star > 0.0);
  CHECK(std::abs(w1_compact(bad, rep.r_star)) < 1e-9 * w1_compact(bad, 0.0));
  CHECK(w1_compact(bad, rep.r_star + 0.01) < 0.0);
  CHECK_THROWS_AS(Model{bad}, InvalidModel);
  CHECK_THROWS_AS(Model(ModelParams{1.0, 0.0, 1.0}), InvalidModel);
}
