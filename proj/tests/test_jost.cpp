#include <doctest.h>

#include <cmath>

#include "epcont/jost.hpp"

using namespace epcont;

namespace {
const ModelParams canonical{1.0, 3.0, 1.0};
}

TEST_CASE("u and v at the origin, by hand") {
  // u(2,0) = 12*3*[3*16 + (18-20)*4 + (3-4)]/25, v(2,0) = 48*3*2*[(9-12+5)*4 + (9-12+1)]/25
  CHECK(u(canonical, 2.0, 0.0) == doctest::Approx(56.16).epsilon(1e-13));
  CHECK(v(canonical, 2.0, 0.0) == doctest::Approx(69.12).epsilon(1e-13));
  CHECK(u_at_origin(canonical, 2.0) == doctest::Approx(56.16).epsilon(1e-14));
  CHECK(v_at_origin(canonical, 2.0) == doctest::Approx(69.12).epsilon(1e-14));
}

TEST_CASE("origin closed forms agree with the full groups") {
  for (const ModelParams& p : {canonical, ModelParams{-1.1, 0.8, 0.7}, ModelParams{-0.4, 1.7, 0.6}}) {
    for (double k : {0.1, 0.6, 1.3, 2.9}) {
      const double scale = std::hypot(u_at_origin(p, k), v_at_origin(p, k)) + 1.0;
      CHECK(std::abs(u(p, k, 0.0) - u_at_origin(p, k)) < 1e-12 * scale);
      CHECK(std::abs(v(p, k, 0.0) - v_at_origin(p, k)) < 1e-12 * scale);
    }
  }
}

TEST_CASE("u is even and v is odd in k") {
  for (double r : {0.0, 0.7, 5.0}) {
    const KPoly pu = u_poly(canonical, r);
    const KPoly pv = v_poly(canonical, r);
    for (int j : {1, 3}) CHECK(std::abs(pu.c[j]) <= 1e-12 * (std::abs(pu.c[0]) + std::abs(pu.c[4])));
    for (int j : {0, 2, 4}) CHECK(std::abs(pv.c[j]) <= 1e-12 * (std::abs(pv.c[1]) + std::abs(pv.c[3])));
    CHECK(u(canonical, -1.7, r) == doctest::Approx(u(canonical, 1.7, r)));
    CHECK(v(canonical, -1.7, r) == doctest::Approx(-v(canonical, 1.7, r)));
  }
}

TEST_CASE("groups sum to the polynomials") {
  const double r = 2.3;
  KPoly su, sv;
  for (UGroup g : all_u_groups) su += u_group(canonical, g, r);
  for (VGroup g : all_v_groups) sv += v_group(canonical, g, r);
  for (double k : {0.5, 1.5}) {
    CHECK(su(k) == doctest::Approx(u(canonical, k, r)));
    CHECK(sv(k) == doctest::Approx(v(canonical, k, r)));
  }
}

TEST_CASE("large-r asymptotics of the reduced Wronskians") {
  const double k = 1.8, r = 2e4;
  const double lead = 16.0 * std::pow(k * k - 1.0, 2) * std::pow(r, 4);
  CHECK(u(canonical, k, r) / lead == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("f- is the conjugate of f+") {
  const Model m(canonical);
  for (double k : {0.3, 2.2}) {
    for (double r : {0.0, 1.4, 9.0}) {
      const Complex a = jost_unnormalized(m, k, r, Branch::plus);
      const Complex b = jost_unnormalized(m, k, r, Branch::minus);
      CHECK(std::abs(b - std::conj(a)) <= 1e-14 * std::abs(a));
    }
  }
}

TEST_CASE("exact r-derivatives against differences") {
  const Model m(canonical);
  const double k = 1.3, h = 1e-5;
  for (double r : {0.5, 3.0, 11.0}) {
    const Complex fd = (jost_unnormalized(m, k, r + h, Branch::plus) - jost_unnormalized(m, k, r - h, Branch::plus)) /
                       (2 * h);
    const Complex ex = jost_unnormalized_dr(m, k, r, Branch::plus);
    CHECK(std::abs(fd - ex) <= 1e-7 * std::abs(ex));
  }
}

TEST_CASE("Wronskian closed form") {
  // -2ik (k+q)^4 (k-q)^4 at k = 2, q = 1
  CHECK(std::abs(wronskian_closed(canonical, 2.0) - Complex(0.0, -324.0)) < 1e-12);
  const Model m(canonical);
  for (double k : {0.4, 2.0, 3.3}) {
    for (double r : {0.5, 6.0, 25.0}) {
      const Complex w = wronskian_at(m, k, r);
      CHECK(std::abs(w - wronskian_closed(canonical, k)) <= 1e-9 * std::abs(wronskian_closed(canonical, k)));
    }
  }
}

TEST_CASE("normalized Jost functions have a double pole at the exceptional points") {
  const Model m(canonical);
  CHECK(at_exceptional_point(canonical, 1.0));
  CHECK(at_exceptional_point(canonical, -1.0));
  CHECK_FALSE(at_exceptional_point(canonical, 1.0 + 1e-9));
  CHECK_THROWS_AS(jost_normalized(m, 1.0, 2.0, Branch::plus), ExceptionalPoint);
  CHECK_THROWS_AS(jost_normalized(m, -1.0, 2.0, Branch::minus), ExceptionalPoint);
  // unit flux: F+ e^{-ikr} - 1 falls off like 1/r
  const double k = 0.9;
  auto dev = [&](double r) { return std::abs(jost_normalized(m, k, r, Branch::plus) * std::polar(1.0, -k * r) - 1.0); };
  CHECK(dev(5e4) < 1e-3);
  CHECK(dev(5e4) * 5e4 == doctest::Approx(dev(5e3) * 5e3).epsilon(0.2));
}
