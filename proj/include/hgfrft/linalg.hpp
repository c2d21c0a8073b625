#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Core>

#include "hgfrft/errors.hpp"

namespace hgfrft {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

namespace linalg {

/// Default cap on either dimension of a Kronecker product.
inline constexpr Index kDefaultMaxDim = 16384;

/// Eigen-decomposition A = Q diag(lambda) Q^H of a normal matrix.
///
/// Columns of `q` are orthonormal. Eigenvalues are sorted by real part then
/// imaginary part; equal eigenvalues are ordered by their phase-normalized
/// eigenvectors (largest-magnitude component made real-positive), compared
/// lexicographically after rounding.
struct SpectralDecomposition {
    ComplexMatrix q;
    ComplexVector lambda;

    Index size() const { return lambda.size(); }
    ComplexMatrix reconstruct() const;
};

/// Decomposes a normal matrix. Hermitian input takes the self-adjoint solver,
/// everything else goes through the complex Schur form (diagonal for normal A).
/// Throws NotNormal when ||AA^H - A^H A||_max > 1e-8 ||A||_max^2.
SpectralDecomposition eig_normal(const ComplexMatrix& a);

/// log|z| + i arg z with arg in (-pi, pi]. Values within 1e-12 of the negative
/// real axis are snapped onto it so the branch is always +pi there.
Complex principal_log(Complex z);

/// Q diag(lambda^beta) Q^H with lambda^beta = exp(beta * principal_log(lambda)).
ComplexMatrix frac_power(const SpectralDecomposition& dec, double beta);

/// Block matrix whose (i, j) block is a(i, j) * b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, Index max_dim = kDefaultMaxDim);

/// Moore-Penrose pseudo-inverse; singular values below rtol * sigma_max are dropped.
ComplexMatrix pinv(const ComplexMatrix& a, double rtol = 1e-12);

/// Smallest of the min(rows, cols) singular values; 0 for an empty matrix.
double sigma_min(const ComplexMatrix& a);

/// Spectral norm (largest singular value).
double norm2(const ComplexMatrix& a);

/// Largest absolute entry.
double max_abs(const ComplexMatrix& a);

/// ||A^H A - I||_max over the columns of `a`.
double orthonormality_residual(const ComplexMatrix& a);

bool all_finite(const ComplexMatrix& a);

}  // namespace linalg
}  // namespace hgfrft
