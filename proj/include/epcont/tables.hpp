#pragma once

#include <cstddef>

#include "epcont/csv.hpp"
#include "epcont/potential.hpp"

namespace epcont {

/// r, V4, W1 on n points of [0, r_max].
CsvTable potential_table(const Model& m, double r_max, std::size_t n);

/// r, psi_B, chi_B on n points of [0, r_max].
CsvTable boundstates_table(const Model& m, double r_max, std::size_t n);

/// r, Re/Im psi_s, Re/Im psi_is at fixed k. psi_is is written as nan at
/// k = q.
CsvTable scattering_r_table(const Model& m, double k, double r_max, std::size_t n);

/// k, Re/Im S, continuous Delta, branch and |S| - 1 on n points of
/// [k_min, k_max].
CsvTable scattering_k_table(const Model& m, double k_min, double k_max, std::size_t n);

struct EvolveOptions {
  double t_max = 2.0;
  std::size_t n_t = 21;
  double r_max = 0.0;   // 0 picks 60/q
  double h = 0.005;     // Crank-Nicolson spacing
  double dt = 1e-3;     // Crank-Nicolson step
  bool with_oracle = true;
  double packet_sigma = 0.25;
  double packet_r_max = 0.0;  // 0 picks 200/q
};

/// t, norm_regular, norm_chi, overlap_psiB from the closed forms, followed by
/// norm_chi_cn and overlap_psiB_cn from Crank-Nicolson runs of the same
/// initial states when with_oracle is set.
CsvTable evolve_table(const Model& m, const EvolveOptions& options);

}  // namespace epcont
