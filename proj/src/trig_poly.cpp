#include "epcont/trig_poly.hpp"

#include <cmath>

namespace epcont {

namespace {

double horner(const std::vector<double>& poly, double r) {
  double acc = 0.0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * r + *it;
  return acc;
}

void accumulate(std::vector<double>& poly, int power, double coeff) {
  if (poly.size() <= static_cast<std::size_t>(power)) poly.resize(power + 1, 0.0);
  poly[power] += coeff;
}

std::vector<double> differentiate(const std::vector<double>& poly) {
  if (poly.size() <= 1) return {};
  std::vector<double> out(poly.size() - 1);
  for (std::size_t m = 1; m < poly.size(); ++m) out[m - 1] = static_cast<double>(m) * poly[m];
  return out;
}

}  // namespace

TrigPoly::Harmonic& TrigPoly::harmonic(double freq, double phase) {
  for (auto& h : harmonics_) {
    if (h.freq == freq && h.phase == phase) return h;
  }
  harmonics_.push_back(Harmonic{freq, phase, {}, {}});
  return harmonics_.back();
}

void TrigPoly::add(const Term& term) {
  if (term.coeff == 0.0) return;
  switch (term.kind) {
    case Kind::constant:
      accumulate(harmonic(0.0, 0.0).cos_poly, term.power, term.coeff);
      break;
    case Kind::cosine:
      if (term.freq == 0.0) {
        accumulate(harmonic(0.0, 0.0).cos_poly, term.power, term.coeff * std::cos(term.phase));
      } else {
        accumulate(harmonic(term.freq, term.phase).cos_poly, term.power, term.coeff);
      }
      break;
    case Kind::sine:
      if (term.freq == 0.0) {
        accumulate(harmonic(0.0, 0.0).cos_poly, term.power, term.coeff * std::sin(term.phase));
      } else {
        accumulate(harmonic(term.freq, term.phase).sin_poly, term.power, term.coeff);
      }
      break;
  }
}

double TrigPoly::operator()(double r) const {
  double sum = 0.0;
  for (const auto& h : harmonics_) {
    if (h.freq == 0.0) {
      sum += horner(h.cos_poly, r);
      continue;
    }
    const double arg = h.freq * r + h.phase;
    if (!h.cos_poly.empty()) sum += horner(h.cos_poly, r) * std::cos(arg);
    if (!h.sin_poly.empty()) sum += horner(h.sin_poly, r) * std::sin(arg);
  }
  return sum;
}

// d/dr [P cos + Q sin] = (P' + a Q) cos + (Q' - a P) sin
TrigPoly TrigPoly::derivative() const {
  TrigPoly out;
  for (const auto& h : harmonics_) {
    Harmonic d{h.freq, h.phase, differentiate(h.cos_poly), differentiate(h.sin_poly)};
    if (h.freq != 0.0) {
      for (std::size_t m = 0; m < h.sin_poly.size(); ++m) accumulate(d.cos_poly, static_cast<int>(m), h.freq * h.sin_poly[m]);
      for (std::size_t m = 0; m < h.cos_poly.size(); ++m) accumulate(d.sin_poly, static_cast<int>(m), -h.freq * h.cos_poly[m]);
    }
    if (!d.cos_poly.empty() || !d.sin_poly.empty()) out.harmonics_.push_back(std::move(d));
  }
  return out;
}

std::vector<TrigPoly::Term> TrigPoly::terms() const {
  std::vector<Term> out;
  for (const auto& h : harmonics_) {
    for (std::size_t m = 0; m < h.cos_poly.size(); ++m) {
      if (h.cos_poly[m] == 0.0) continue;
      const Kind kind = h.freq == 0.0 ? Kind::constant : Kind::cosine;
      out.push_back(Term{h.cos_poly[m], static_cast<int>(m), kind, h.freq, h.phase});
    }
    for (std::size_t m = 0; m < h.sin_poly.size(); ++m) {
      if (h.sin_poly[m] == 0.0) continue;
      out.push_back(Term{h.sin_poly[m], static_cast<int>(m), Kind::sine, h.freq, h.phase});
    }
  }
  return out;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& other) {
  for (const auto& term : other.terms()) add(term);
  return *this;
}

TrigPoly& TrigPoly::operator*=(double factor) {
  for (auto& h : harmonics_) {
    for (auto& c : h.cos_poly) c *= factor;
    for (auto& c : h.sin_poly) c *= factor;
  }
  return *this;
}

}  // namespace epcont
