#include "hgfrft/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace hgfrft {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ZeroEigenvalue: return "ZeroEigenvalue";
    case ErrorCode::DimensionOverflow: return "DimensionOverflow";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::UnstableSpeed: return "UnstableSpeed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::CyclicShiftInvalid: return "CyclicShiftInvalid";
    case ErrorCode::DirectedInput: return "DirectedInput";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

namespace linalg {
namespace {

constexpr double kClusterTol = 1e-9;
constexpr double kAxisSnapTol = 1e-12;
constexpr double kVectorRounding = 1e8;

// Rotates a column so its first largest-magnitude component is real positive.
void normalize_phase(Eigen::Ref<ComplexVector> v)
{
    double peak = 0.0;
    for (Index k = 0; k < v.size(); ++k) {
        peak = std::max(peak, std::abs(v[k]));
    }
    if (peak == 0.0) {
        return;
    }
    for (Index k = 0; k < v.size(); ++k) {
        if (std::abs(v[k]) >= peak * (1.0 - 1e-9)) {
            v *= std::conj(v[k]) / std::abs(v[k]);
            v[k] = Complex(std::abs(v[k]), 0.0);
            return;
        }
    }
}

double round_component(double x)
{
    double r = std::round(x * kVectorRounding) / kVectorRounding;
    return r == 0.0 ? 0.0 : r;  // folds -0.0
}

// Lexicographic comparison of two columns after rounding; returns <0, 0, >0.
int compare_rounded(const ComplexVector& a, const ComplexVector& b)
{
    for (Index k = 0; k < a.size(); ++k) {
        const double ar = round_component(a[k].real());
        const double br = round_component(b[k].real());
        if (ar != br) {
            return ar < br ? -1 : 1;
        }
        const double ai = round_component(a[k].imag());
        const double bi = round_component(b[k].imag());
        if (ai != bi) {
            return ai < bi ? -1 : 1;
        }
    }
    return 0;
}

// Groups eigenvalues closer than kClusterTol (transitively) and returns a
// cluster id per eigenvalue.
std::vector<Index> cluster_ids(const ComplexVector& lambda)
{
    const Index n = lambda.size();
    std::vector<Index> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), Index{0});
    auto find = [&](Index x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            if (std::abs(lambda[i] - lambda[j]) <= kClusterTol) {
                const Index ri = find(i);
                const Index rj = find(j);
                if (ri != rj) {
                    parent[std::max(ri, rj)] = std::min(ri, rj);
                }
            }
        }
    }
    std::vector<Index> ids(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
        ids[i] = find(i);
    }
    return ids;
}

// Modified Gram-Schmidt, two passes, over the given columns of q.
void reorthonormalize(ComplexMatrix& q, const std::vector<Index>& cols)
{
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t a = 0; a < cols.size(); ++a) {
            for (std::size_t b = 0; b < a; ++b) {
                const Complex proj = q.col(cols[b]).dot(q.col(cols[a]));
                q.col(cols[a]) -= proj * q.col(cols[b]);
            }
            const double nrm = q.col(cols[a]).norm();
            if (nrm > 0.0) {
                q.col(cols[a]) /= nrm;
            }
        }
    }
}

void canonicalize(SpectralDecomposition& dec)
{
    const Index n = dec.size();
    const auto ids = cluster_ids(dec.lambda);

    std::vector<std::vector<Index>> members(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
        members[ids[i]].push_back(i);
    }
    for (const auto& group : members) {
        if (group.empty()) {
            continue;
        }
        Complex mean{0.0, 0.0};
        for (Index i : group) {
            mean += dec.lambda[i];
        }
        mean /= static_cast<double>(group.size());
        if (std::abs(mean.imag()) <= kAxisSnapTol) {
            mean.imag(0.0);
        }
        if (std::abs(mean.real()) <= kAxisSnapTol) {
            mean.real(0.0);
        }
        for (Index i : group) {
            dec.lambda[i] = mean;
        }
        if (group.size() > 1) {
            reorthonormalize(dec.q, group);
        }
    }
    for (Index i = 0; i < n; ++i) {
        normalize_phase(dec.q.col(i));
    }

    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    std::vector<ComplexVector> cols;
    cols.reserve(order.size());
    for (Index i = 0; i < n; ++i) {
        cols.emplace_back(dec.q.col(i));
    }
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
        const Complex la = dec.lambda[a];
        const Complex lb = dec.lambda[b];
        if (la.real() != lb.real()) {
            return la.real() < lb.real();
        }
        if (la.imag() != lb.imag()) {
            return la.imag() < lb.imag();
        }
        return compare_rounded(cols[a], cols[b]) < 0;
    });

    SpectralDecomposition sorted;
    sorted.q.resize(n, n);
    sorted.lambda.resize(n);
    for (Index k = 0; k < n; ++k) {
        sorted.q.col(k) = cols[order[k]];
        sorted.lambda[k] = dec.lambda[order[k]];
    }
    dec = std::move(sorted);
}

}  // namespace

ComplexMatrix SpectralDecomposition::reconstruct() const
{
    return q * lambda.asDiagonal() * q.adjoint();
}

SpectralDecomposition eig_normal(const ComplexMatrix& a)
{
    if (a.rows() != a.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "eig_normal needs a square matrix");
    }
    if (!all_finite(a)) {
        throw Error(ErrorCode::InvalidArgument, "eig_normal input has non-finite entries");
    }
    const double scale = max_abs(a);
    const ComplexMatrix ah = a.adjoint();
    const double commutator = max_abs(a * ah - ah * a);
    if (commutator > 1e-8 * scale * scale) {
        throw Error(ErrorCode::NotNormal,
                    "commutator residual " + std::to_string(commutator) + " exceeds tolerance");
    }

    SpectralDecomposition dec;
    if (max_abs(a - ah) <= 1e-14 * std::max(1.0, scale)) {
        const ComplexMatrix herm = (a + ah) * 0.5;
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm);
        if (solver.info() != Eigen::Success) {
            throw Error(ErrorCode::NoConvergence, "self-adjoint eigensolver failed");
        }
        dec.q = solver.eigenvectors();
        dec.lambda = solver.eigenvalues().cast<Complex>();
    } else {
        Eigen::ComplexSchur<ComplexMatrix> schur(a);
        if (schur.info() != Eigen::Success) {
            throw Error(ErrorCode::NoConvergence, "complex Schur iteration failed");
        }
        dec.q = schur.matrixU();
        dec.lambda = schur.matrixT().diagonal();
    }
    canonicalize(dec);
    return dec;
}

Complex principal_log(Complex z)
{
    if (z == Complex(0.0, 0.0)) {
        throw Error(ErrorCode::ZeroEigenvalue, "logarithm of zero");
    }
    if (z.real() < 0.0 && std::abs(z.imag()) <= kAxisSnapTol) {
        return {std::log(-z.real()), M_PI};
    }
    // std::arg returns values in [-pi, pi]; -pi only arises for a negative
    // real with imaginary part -0.0, which the branch above already caught.
    return {std::log(std::abs(z)), std::arg(z)};
}

ComplexMatrix frac_power(const SpectralDecomposition& dec, double beta)
{
    const Index n = dec.size();
    if (beta == 0.0) {
        return ComplexMatrix::Identity(n, n);
    }
    double peak = 0.0;
    for (Index i = 0; i < n; ++i) {
        peak = std::max(peak, std::abs(dec.lambda[i]));
    }
    for (Index i = 0; i < n; ++i) {
        if (std::abs(dec.lambda[i]) <= 1e-14 * std::max(1.0, peak)) {
            throw Error(ErrorCode::ZeroEigenvalue,
                        "eigenvalue " + std::to_string(i) + " is numerically zero");
        }
    }
    ComplexVector powered(n);
    for (Index i = 0; i < n; ++i) {
        powered[i] = std::exp(beta * principal_log(dec.lambda[i]));
    }
    return dec.q * powered.asDiagonal() * dec.q.adjoint();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, Index max_dim)
{
    const Index rows = a.rows() * b.rows();
    const Index cols = a.cols() * b.cols();
    if (rows > max_dim || cols > max_dim) {
        throw Error(ErrorCode::DimensionOverflow,
                    "kron result " + std::to_string(rows) + "x" + std::to_string(cols) +
                        " exceeds cap " + std::to_string(max_dim));
    }
    ComplexMatrix out(rows, cols);
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix pinv(const ComplexMatrix& a, double rtol)
{
    if (!(rtol > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "pinv rtol must be positive");
    }
    if (a.size() == 0) {
        return ComplexMatrix(a.cols(), a.rows());
    }
    Eigen::BDCSVD<ComplexMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.info() != Eigen::Success) {
        throw Error(ErrorCode::NoConvergence, "SVD failed");
    }
    const RealVector& sv = svd.singularValues();
    const double cutoff = rtol * (sv.size() > 0 ? sv[0] : 0.0);
    RealVector inv = RealVector::Zero(sv.size());
    for (Index i = 0; i < sv.size(); ++i) {
        if (sv[i] > cutoff && sv[i] > 0.0) {
            inv[i] = 1.0 / sv[i];
        }
    }
    return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

double sigma_min(const ComplexMatrix& a)
{
    if (a.size() == 0) {
        return 0.0;
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(a);
    const RealVector& sv = svd.singularValues();
    return sv[sv.size() - 1];
}

double norm2(const ComplexMatrix& a)
{
    if (a.size() == 0) {
        return 0.0;
    }
    Eigen::BDCSVD<ComplexMatrix> svd(a);
    return svd.singularValues()[0];
}

double max_abs(const ComplexMatrix& a)
{
    return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

double orthonormality_residual(const ComplexMatrix& a)
{
    return max_abs(a.adjoint() * a - ComplexMatrix::Identity(a.cols(), a.cols()));
}

bool all_finite(const ComplexMatrix& a)
{
    return a.allFinite();
}

}  // namespace linalg
}  // namespace hgfrft
