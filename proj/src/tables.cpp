#include "epcont/tables.hpp"

#include <cmath>
#include <limits>

#include "epcont/boundstates.hpp"
#include "epcont/evolution.hpp"
#include "epcont/jost.hpp"
#include "epcont/oracle.hpp"
#include "epcont/scattering.hpp"

namespace epcont {

namespace {

double spaced(double lo, double hi, std::size_t i, std::size_t n) {
  return n <= 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

CsvTable with_header(const Model& m, std::string_view command, std::vector<std::string> columns) {
  CsvTable t;
  t.comments = provenance(m.params(), command);
  t.columns = std::move(columns);
  return t;
}

Complex overlap(const std::vector<Complex>& a, const std::vector<Complex>& b, double h) {
  Complex acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc * h;
}

}  // namespace

CsvTable potential_table(const Model& m, double r_max, std::size_t n) {
  CsvTable t = with_header(m, "potential", {"r", "V4", "W1"});
  for (std::size_t i = 0; i < n; ++i) {
    const double r = spaced(0.0, r_max, i, n);
    t.rows.push_back({r, m.v4(r), m.w1(r)});
  }
  return t;
}

CsvTable boundstates_table(const Model& m, double r_max, std::size_t n) {
  CsvTable t = with_header(m, "boundstates", {"r", "psi_B", "chi_B"});
  for (std::size_t i = 0; i < n; ++i) {
    const double r = spaced(0.0, r_max, i, n);
    t.rows.push_back({r, psi_b(m, r), chi_b(m, r)});
  }
  return t;
}

CsvTable scattering_r_table(const Model& m, double k, double r_max, std::size_t n) {
  CsvTable t = with_header(m, "scattering", {"r", "Re(psi_s)", "Im(psi_s)", "Re(psi_is)", "Im(psi_is)"});
  t.comments.push_back("k=" + format_double(k));
  const bool pole = at_exceptional_point(m.params(), k);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 0; i < n; ++i) {
    const double r = spaced(0.0, r_max, i, n);
    const Complex s = psi_regular(m, k, r);
    const Complex is = pole ? Complex(nan, nan) : psi_irregular(m, k, r);
    t.rows.push_back({r, s.real(), s.imag(), is.real(), is.imag()});
  }
  return t;
}

CsvTable scattering_k_table(const Model& m, double k_min, double k_max, std::size_t n) {
  CsvTable t = with_header(m, "scattering", {"k", "Re(S)", "Im(S)", "Delta", "branch", "abs_S_minus_1"});
  std::vector<double> ks(n);
  for (std::size_t i = 0; i < n; ++i) ks[i] = spaced(k_min, k_max, i, n);
  const std::vector<double> delta = big_delta_curve(m.params(), ks);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex s = s_matrix(m.params(), ks[i]);
    const bool series = std::abs(ks[i] - m.q()) < eps_switch(m.params());
    t.rows.push_back({ks[i], s.real(), s.imag(), delta[i], std::string(to_string(series ? PsiBranch::series : PsiBranch::generic)),
                      std::abs(s) - 1.0});
  }
  return t;
}

CsvTable evolve_table(const Model& m, const EvolveOptions& o) {
  std::vector<std::string> columns{"t", "norm_regular", "norm_chi", "overlap_psiB"};
  if (o.with_oracle) {
    columns.push_back("norm_chi_cn");
    columns.push_back("overlap_psiB_cn");
  }
  CsvTable t = with_header(m, "evolve", std::move(columns));
  const double q = m.q();

  // Regular packet centred on the exceptional point.
  const double packet_r_max = o.packet_r_max > 0.0 ? o.packet_r_max : 200.0 / q;
  const RadialGrid packet_grid = grid_with_spacing(0.0, packet_r_max, 0.05 / std::max(1.0, q));
  const Wavepacket packet = gaussian_packet(q, o.packet_sigma * q, 801);
  const PacketPropagator prop(m, packet, packet_grid.points());

  // Doublet on the Crank-Nicolson grid.
  const double r_max = o.r_max > 0.0 ? o.r_max : 60.0 / q;
  const RadialGrid grid = grid_with_spacing(0.0, r_max, o.h);
  const std::vector<double> rs = grid.points();
  const double h = grid.h();
  const EvolvedDoublet start = evolve_doublet(m, rs, 0.0);
  const double psi_norm2 = std::norm(l2_norm(start.psi, h));
  std::vector<double> pot(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) pot[i] = m.v4(rs[i]);

  auto edge = [&](double t, bool chi) {
    const EvolvedDoublet e = evolve_doublet(m, {rs.front(), rs.back()}, t);
    const std::vector<Complex>& v = chi ? e.chi : e.psi;
    return std::pair<Complex, Complex>{v[0], v[1]};
  };
  std::vector<Complex> psi_cn = start.psi;
  std::vector<Complex> chi_cn = start.chi;
  double t_cn = 0.0;

  for (std::size_t i = 0; i < o.n_t; ++i) {
    const double time = spaced(0.0, o.t_max, i, o.n_t);
    const EvolvedDoublet d = evolve_doublet(m, rs, time);
    const double norm_regular = l2_norm(prop.at(time), packet_grid.h());
    const double ov = std::abs(overlap(start.psi, d.psi, h)) / psi_norm2;
    std::vector<CsvCell> row{time, norm_regular, l2_norm(d.chi, h), ov};
    if (o.with_oracle) {
      const auto steps = static_cast<std::size_t>(std::llround((time - t_cn) / o.dt));
      psi_cn = crank_nicolson_evolve(psi_cn, pot, h, o.dt, steps, t_cn, [&](double tt) { return edge(tt, false); });
      chi_cn = crank_nicolson_evolve(chi_cn, pot, h, o.dt, steps, t_cn, [&](double tt) { return edge(tt, true); });
      t_cn += static_cast<double>(steps) * o.dt;
      row.push_back(l2_norm(chi_cn, h));
      row.push_back(std::abs(overlap(start.psi, psi_cn, h)) / psi_norm2);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace epcont
