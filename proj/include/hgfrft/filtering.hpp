#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hgfrft/transform.hpp"

namespace hgfrft {

/// Finite set of joint spectral index pairs (Hilbert index, graph index),
/// kept sorted and deduplicated.
class FrequencyRegion {
public:
    using Pair = std::pair<Index, Index>;

    FrequencyRegion() = default;
    /// Throws IndexOutOfRange if any pair falls outside [0, m) x [0, n).
    FrequencyRegion(std::vector<Pair> pairs, Index m, Index n);

    static FrequencyRegion full(Index m, Index n);
    /// Pairs from Hilbert-major flat indices k -> (k / n, k % n).
    static FrequencyRegion from_flat(const std::vector<Index>& flat, Index m, Index n);

    const std::vector<Pair>& pairs() const { return pairs_; }
    Index m() const { return m_; }
    Index n() const { return n_; }
    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }
    bool contains(Index i, Index j) const;
    /// Flat indices i * n + j in ascending order.
    std::vector<Index> flat() const;

    friend bool operator==(const FrequencyRegion&, const FrequencyRegion&) = default;

private:
    std::vector<Pair> pairs_;
    Index m_ = 0;
    Index n_ = 0;
};

/// Index pairs whose eigenvalue labels fall inside a value rectangle, with the
/// Hilbert side compared through its reciprocal: |1 / hilbert[i]| <= hilbert_bound
/// and |graph[j]| <= graph_bound. Zero Hilbert labels map to +inf and are excluded.
FrequencyRegion region_from_bounds(const RealVector& hilbert_values, const RealVector& graph_values,
                                   double hilbert_bound, double graph_bound);

/// Linear operator on Hilbert-major vectorized joint signals.
struct LinearFilter {
    ComplexMatrix mat;

    JointSignal apply(const JointSignal& sig) const;
};

/// All (i, j) with |coeff(i, j)| > tol. Default tol is 1e-10 * max |coeff|.
FrequencyRegion frequency_range(const JointSpectrum& spec, std::optional<double> tol = std::nullopt);

/// Inverse transform of the pointwise product of both spectra.
JointSignal convolve(const JointSignal& g, const JointSignal& f, const FractionalOperator& op_h,
                     const FractionalOperator& op_g);

/// Keeps the spectral coefficients inside `region` and synthesizes.
JointSignal bandpass(const JointSignal& f, const FrequencyRegion& region, const FractionalOperator& op_h,
                     const FractionalOperator& op_g);

/// Matrix of the bandpass projection: S diag(delta_K) S^-1 with S the synthesis matrix.
LinearFilter bandpass_filter(const FrequencyRegion& region, const FractionalOperator& op_h,
                             const FractionalOperator& op_g);

/// Matrix of f -> g * f.
LinearFilter convolution_filter(const JointSignal& g, const FractionalOperator& op_h,
                                const FractionalOperator& op_g);

/// Shift operator with the family's synthesis vectors (columns of F^-order)
/// as eigenvectors: F^-order diag(values) F^order.
ComplexMatrix basis_shift(const FractionalOperator& op, const RealVector& values);

struct CommutationResult {
    bool commutes;
    double residual;
};

/// residual = ||op L - L op||_max.
CommutationResult commutes_with(const LinearFilter& l, const ComplexMatrix& op, double tol);

/// True iff L commutes with both B (x) I and I (x) A.
bool is_shift_invariant(const LinearFilter& l, const ComplexMatrix& op_b, const ComplexMatrix& op_a, double tol);

/// True iff L commutes with B (x) A.
bool is_weakly_shift_invariant(const LinearFilter& l, const ComplexMatrix& op_b, const ComplexMatrix& op_a,
                               double tol);

}  // namespace hgfrft
