#include "linalg.hpp"

#include <stdexcept>

#if defined(GEOPHASE_HAVE_LAPACKE)
#include <complex>
#define lapack_complex_double std::complex<double>
#define lapack_complex_float std::complex<float>
#include <lapacke.h>
#endif

namespace geophase::detail {

HermitianEig hermitian_eig(const Eigen::MatrixXcd& m) {
    const auto n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("hermitian_eig: matrix must be square");
#if defined(GEOPHASE_HAVE_LAPACKE)
    if (n > 64) {
        HermitianEig out;
        out.vectors = m;
        out.values.resize(n);
        const lapack_int info = LAPACKE_zheevd(
            LAPACK_COL_MAJOR, 'V', 'L', static_cast<lapack_int>(n), out.vectors.data(),
            static_cast<lapack_int>(n), out.values.data());
        if (info == 0) return out;
        // fall through to Eigen on failure
    }
#endif
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian eigendecomposition failed");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace geophase::detail
