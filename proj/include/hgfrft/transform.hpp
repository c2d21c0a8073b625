#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>

#include "hgfrft/graph.hpp"
#include "hgfrft/linalg.hpp"

namespace hgfrft {

class OperatorFamily;

/// A fractional power F^order of a family's unitary base transform.
struct FractionalOperator {
    std::shared_ptr<const OperatorFamily> family;
    double order = 0.0;
    std::shared_ptr<const ComplexMatrix> matrix;

    const ComplexMatrix& mat() const { return *matrix; }
    Index dim() const { return matrix->rows(); }
    /// The same family at order -order (the synthesis operator).
    FractionalOperator inverse() const;
};

/// Order-1 unitary transform with its spectral decomposition. Powers are
/// cached per order (rounded to 1e-12); the cache takes concurrent readers
/// and serialized writers.
class OperatorFamily : public std::enable_shared_from_this<OperatorFamily> {
public:
    /// `frequencies` labels the spectral index (graph eigenvalues for a GFT,
    /// angular frequencies for the DFT).
    static std::shared_ptr<const OperatorFamily> create(ComplexMatrix base, RealVector frequencies,
                                                        std::string name);

    const ComplexMatrix& base() const { return base_; }
    const linalg::SpectralDecomposition& decomposition() const { return dec_; }
    const RealVector& frequencies() const { return frequencies_; }
    const std::string& name() const { return name_; }
    Index dim() const { return base_.rows(); }

    FractionalOperator at_order(double order) const;
    std::size_t cached_orders() const;

private:
    OperatorFamily(ComplexMatrix base, RealVector frequencies, std::string name);

    ComplexMatrix base_;
    linalg::SpectralDecomposition dec_;
    RealVector frequencies_;
    std::string name_;

    mutable std::shared_mutex cache_mutex_;
    mutable std::map<long long, std::shared_ptr<const ComplexMatrix>> cache_;
};

using OperatorFamilyPtr = std::shared_ptr<const OperatorFamily>;

/// Graph Fourier transform: base = Q^H for the shift's eigenvector matrix Q,
/// frequencies = shift eigenvalues (real parts) in the same order.
OperatorFamilyPtr gft_operator(const Graph& g, ShiftKind kind);

/// Unitary m-point DFT, base(k, l) = exp(-2 pi i k l / m) / sqrt(m);
/// frequencies are 2 pi k / m.
OperatorFamilyPtr dft_operator(Index m);

FractionalOperator at_order(const OperatorFamilyPtr& family, double order);

/// m x n samples, x(i, j) = f(sample i, vertex j). Vectorization is
/// Hilbert-major: vec(x)[i * n + j] = x(i, j).
struct JointSignal {
    ComplexMatrix x;

    Index m() const { return x.rows(); }
    Index n() const { return x.cols(); }
    ComplexVector vec() const;
    static JointSignal from_vec(Index m, Index n, const ComplexVector& v);
    static JointSignal zeros(Index m, Index n) { return {ComplexMatrix::Zero(m, n)}; }
};

struct JointSpectrum {
    ComplexMatrix coeff;
    double alpha = 0.0;
    double beta = 0.0;

    Index m() const { return coeff.rows(); }
    Index n() const { return coeff.cols(); }
    ComplexVector vec() const { return JointSignal{coeff}.vec(); }
};

JointSpectrum hgfrft(const JointSignal& sig, const FractionalOperator& op_h, const FractionalOperator& op_g);

/// Applies the operators at -alpha/-beta; throws OrderMismatch unless they
/// negate the spectrum's orders.
JointSignal inverse_hgfrft(const JointSpectrum& spec, const FractionalOperator& op_h_neg,
                           const FractionalOperator& op_g_neg);

/// Hilbert-side transform of every vertex's series: result = F_H^alpha x.
JointSignal partial_h(const JointSignal& sig, const FractionalOperator& op_h);

/// Graph-side transform of every sample: result = x (F_G^beta)^T.
JointSignal partial_g(const JointSignal& sig, const FractionalOperator& op_g);

/// Column k of kron(F_H^-alpha, F_G^-beta) as a joint signal: the synthesis
/// vector for spectral pair (k / n, k % n).
JointSignal basis_column(const FractionalOperator& op_h, const FractionalOperator& op_g, Index k);

/// kron(F_H^alpha, F_G^beta), acting on Hilbert-major vectors.
ComplexMatrix analysis_matrix(const FractionalOperator& op_h, const FractionalOperator& op_g);

/// kron(F_H^-alpha, F_G^-beta); its columns are the joint basis vectors.
ComplexMatrix synthesis_matrix(const FractionalOperator& op_h, const FractionalOperator& op_g);

}  // namespace hgfrft
