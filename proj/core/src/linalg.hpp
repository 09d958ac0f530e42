#ifndef GEOPHASE_SRC_LINALG_HPP
#define GEOPHASE_SRC_LINALG_HPP

#include <Eigen/Dense>

namespace geophase::detail {

struct HermitianEig {
    Eigen::VectorXd values;   // ascending
    Eigen::MatrixXcd vectors; // columns
};

// Dense Hermitian eigendecomposition; LAPACKE zheevd when available,
// Eigen::SelfAdjointEigenSolver otherwise.
HermitianEig hermitian_eig(const Eigen::MatrixXcd& m);

}  // namespace geophase::detail

#endif
