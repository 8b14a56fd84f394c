#pragma once

#include "gcnn/mesh.hpp"

#include <Eigen/SparseCore>

namespace gcnn {

// Positive semidefinite cotangent stiffness matrix: off-diagonal entries are
// -(cot(alpha) + cot(beta))/2 over the angles opposite each edge (one term
// for boundary edges), diagonal entries make rows sum to zero.
using StiffnessMatrix = Eigen::SparseMatrix<double>;

StiffnessMatrix cotangent_matrix(const Mesh& mesh);

// K smallest eigenpairs of S phi = lambda A phi with A = diag(vertex areas).
// Eigenfunctions are A-orthonormal columns, eigenvalues ascending, and each
// column's first nonzero component is positive.
struct Eigensystem {
  Eigen::VectorXd eigenvalues;    // length K, ascending, >= 0
  Eigen::MatrixXd eigenfunctions; // N x K
  VertexAreas mass;

  int count() const { return static_cast<int>(eigenvalues.size()); }
  int vertex_count() const {
    return static_cast<int>(eigenfunctions.rows());
  }
};

struct EigensystemOptions {
  // Meshes at or below this size use a dense symmetric solve; larger ones a
  // shift-invert Lanczos iteration on the diagonally scaled operator.
  int dense_threshold = 2048;
  double residual_tol = 1e-10;
  int max_lanczos_factor = 6;  // subspace cap as a multiple of K
};

Eigensystem eigensystem(const StiffnessMatrix& S, const VertexAreas& areas,
                        int k, const EigensystemOptions& options = {});

// Truncated-spectrum heat kernel sum_k exp(-t lambda_k) phi_k(i) phi_k(j).
double heat_kernel(const Eigensystem& eig, double t, int i, int j);

enum class DescriptorProvenance { Hks, Wks, GeoVec, Net };

// N x Q per-vertex feature matrix; row i belongs to mesh vertex i.
struct DescriptorField {
  Eigen::MatrixXd values;
  DescriptorProvenance provenance = DescriptorProvenance::Net;

  int dimension() const { return static_cast<int>(values.cols()); }
};

// Heat kernel signature: column q is sum_k exp(-t_q lambda_k) phi_k^2.
DescriptorField hks(const Eigensystem& eig, const Eigen::VectorXd& times);

// Wave kernel signature with log-Gaussian band-pass filters
// exp(-(log(nu_q) - log(lambda_k))^2 / (2 sigma^2)); the zero eigenvalue is
// skipped.
DescriptorField wks(const Eigensystem& eig, const Eigen::VectorXd& energies,
                    double sigma);

// Conventional grids: HKS times log-spaced over [4 ln 10 / lambda_K,
// 4 ln 10 / lambda_2]; WKS log-energies uniform over [log lambda_2,
// log lambda_K] with sigma = 7x the grid spacing.
Eigen::VectorXd default_hks_times(const Eigensystem& eig, int q);
struct WksGrid {
  Eigen::VectorXd energies;
  double sigma = 0.0;
};
WksGrid default_wks_energies(const Eigensystem& eig, int q);

}  // namespace gcnn
