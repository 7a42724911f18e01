#pragma once

#include <Eigen/Dense>
#include <vector>

#include "epcont/potential.hpp"

namespace epcont {

/// Bound state in the continuum at E = q^2.
///
/// `point` selects k = +q or the continued point k = -q (odd extension of
/// delta); psi_B is even under the continuation and chi_B odd.
double psi_b(const Model& m, double r, Branch point = Branch::plus);

/// Generalized eigenfunction: H chi_B = q^2 chi_B + 2q psi_B.
double chi_b(const Model& m, double r, Branch point = Branch::plus);

/// chi_B+- = chi_B -+ i gamma_0 psi_B.
Complex chi_b_pm(const Model& m, double r, Branch sign, Branch point = Branch::plus);

/// H_B(q) = [[q^2, 0], [2q, q^2]].
Eigen::Matrix2d jordan_block(const ModelParams& p);

/// eta = [[0, 1], [1, 0]], with eta H_B eta = H_B^T.
Eigen::Matrix2d eta_metric();

struct ChainResiduals {
  double res1 = 0.0;       // max |H psi_B - q^2 psi_B|
  double res2 = 0.0;       // max |H chi_B - q^2 chi_B - 2q psi_B|
  double psi_scale = 0.0;  // max |psi_B| on the grid
  double chi_scale = 0.0;  // max |chi_B| on the grid
};

/// Both chain equations checked with five-point second differences on
/// [r_min, r_max] at spacing h (ends of the stencil dropped).
ChainResiduals jordan_chain_residuals(const Model& m, double r_min, double r_max, double h = 1e-3);

/// Sampled (psi_B, chi_B) with the block that represents H on their span.
struct JordanDoublet {
  double q = 0.0;
  std::vector<double> grid;
  std::vector<double> psi_b;
  std::vector<double> chi_b;
  Eigen::Matrix2d h_block;
};

JordanDoublet make_doublet(const Model& m, const std::vector<double>& grid);

/// max over the interior of |H Psi_B - H_B Psi_B| for Psi_B = (psi_B, chi_B),
/// with H applied by five-point differences on a uniform grid.
double invariant_subspace_residual(const Model& m, const JordanDoublet& doublet);

}  // namespace epcont
