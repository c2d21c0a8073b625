#include "hgfrft/filtering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hgfrft {

FrequencyRegion::FrequencyRegion(std::vector<Pair> pairs, Index m, Index n)
    : pairs_(std::move(pairs)), m_(m), n_(n)
{
    for (const auto& [i, j] : pairs_) {
        if (i < 0 || j < 0 || i >= m_ || j >= n_) {
            throw Error(ErrorCode::IndexOutOfRange,
                        "pair (" + std::to_string(i) + "," + std::to_string(j) + ") outside region grid");
        }
    }
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

FrequencyRegion FrequencyRegion::full(Index m, Index n)
{
    std::vector<Pair> all;
    all.reserve(static_cast<std::size_t>(m * n));
    for (Index i = 0; i < m; ++i) {
        for (Index j = 0; j < n; ++j) {
            all.emplace_back(i, j);
        }
    }
    return FrequencyRegion(std::move(all), m, n);
}

FrequencyRegion FrequencyRegion::from_flat(const std::vector<Index>& flat, Index m, Index n)
{
    std::vector<Pair> pairs;
    pairs.reserve(flat.size());
    for (Index k : flat) {
        if (k < 0 || k >= m * n) {
            throw Error(ErrorCode::IndexOutOfRange, "flat index " + std::to_string(k) + " outside grid");
        }
        pairs.emplace_back(k / n, k % n);
    }
    return FrequencyRegion(std::move(pairs), m, n);
}

bool FrequencyRegion::contains(Index i, Index j) const
{
    return std::binary_search(pairs_.begin(), pairs_.end(), Pair{i, j});
}

std::vector<Index> FrequencyRegion::flat() const
{
    std::vector<Index> out;
    out.reserve(pairs_.size());
    for (const auto& [i, j] : pairs_) {
        out.push_back(i * n_ + j);
    }
    return out;  // lexicographic pairs are already ascending flat indices
}

FrequencyRegion region_from_bounds(const RealVector& hilbert_values, const RealVector& graph_values,
                                   double hilbert_bound, double graph_bound)
{
    std::vector<FrequencyRegion::Pair> pairs;
    for (Index i = 0; i < hilbert_values.size(); ++i) {
        const double inv = hilbert_values[i] == 0.0 ? std::numeric_limits<double>::infinity()
                                                    : std::abs(1.0 / hilbert_values[i]);
        if (!(inv <= hilbert_bound)) {
            continue;
        }
        for (Index j = 0; j < graph_values.size(); ++j) {
            if (std::abs(graph_values[j]) <= graph_bound) {
                pairs.emplace_back(i, j);
            }
        }
    }
    return FrequencyRegion(std::move(pairs), hilbert_values.size(), graph_values.size());
}

JointSignal LinearFilter::apply(const JointSignal& sig) const
{
    if (mat.cols() != sig.x.size()) {
        throw Error(ErrorCode::DimensionMismatch, "filter size differs from signal length");
    }
    return JointSignal::from_vec(sig.m(), sig.n(), mat * sig.vec());
}

FrequencyRegion frequency_range(const JointSpectrum& spec, std::optional<double> tol)
{
    const double peak = linalg::max_abs(spec.coeff);
    const double cut = tol.value_or(1e-10 * peak);
    if (cut < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "tolerance must be non-negative");
    }
    std::vector<FrequencyRegion::Pair> pairs;
    for (Index i = 0; i < spec.m(); ++i) {
        for (Index j = 0; j < spec.n(); ++j) {
            if (std::abs(spec.coeff(i, j)) > cut) {
                pairs.emplace_back(i, j);
            }
        }
    }
    return FrequencyRegion(std::move(pairs), spec.m(), spec.n());
}

JointSignal convolve(const JointSignal& g, const JointSignal& f, const FractionalOperator& op_h,
                     const FractionalOperator& op_g)
{
    if (g.m() != f.m() || g.n() != f.n()) {
        throw Error(ErrorCode::DimensionMismatch, "convolution operands differ in shape");
    }
    const JointSpectrum gs = hgfrft(g, op_h, op_g);
    JointSpectrum fs = hgfrft(f, op_h, op_g);
    fs.coeff = fs.coeff.cwiseProduct(gs.coeff);
    return inverse_hgfrft(fs, op_h.inverse(), op_g.inverse());
}

JointSignal bandpass(const JointSignal& f, const FrequencyRegion& region, const FractionalOperator& op_h,
                     const FractionalOperator& op_g)
{
    if (region.m() != f.m() || region.n() != f.n()) {
        if (!region.empty()) {
            throw Error(ErrorCode::IndexOutOfRange, "region grid differs from signal shape");
        }
    }
    JointSpectrum spec = hgfrft(f, op_h, op_g);
    ComplexMatrix kept = ComplexMatrix::Zero(spec.m(), spec.n());
    for (const auto& [i, j] : region.pairs()) {
        kept(i, j) = spec.coeff(i, j);
    }
    spec.coeff = std::move(kept);
    return inverse_hgfrft(spec, op_h.inverse(), op_g.inverse());
}

LinearFilter bandpass_filter(const FrequencyRegion& region, const FractionalOperator& op_h,
                             const FractionalOperator& op_g)
{
    const Index n = op_g.dim();
    if (region.m() != op_h.dim() || region.n() != n) {
        throw Error(ErrorCode::IndexOutOfRange, "region grid differs from operator sizes");
    }
    const ComplexMatrix syn = synthesis_matrix(op_h, op_g);
    const ComplexMatrix ana = analysis_matrix(op_h, op_g);
    ComplexVector delta = ComplexVector::Zero(syn.cols());
    for (Index k : region.flat()) {
        delta[k] = 1.0;
    }
    return {syn * delta.asDiagonal() * ana};
}

LinearFilter convolution_filter(const JointSignal& g, const FractionalOperator& op_h,
                                const FractionalOperator& op_g)
{
    const ComplexVector gs = hgfrft(g, op_h, op_g).vec();
    return {synthesis_matrix(op_h, op_g) * gs.asDiagonal() * analysis_matrix(op_h, op_g)};
}

ComplexMatrix basis_shift(const FractionalOperator& op, const RealVector& values)
{
    if (values.size() != op.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "need one eigenvalue per basis vector");
    }
    return op.inverse().mat() * values.cast<Complex>().asDiagonal() * op.mat();
}

CommutationResult commutes_with(const LinearFilter& l, const ComplexMatrix& op, double tol)
{
    if (l.mat.rows() != l.mat.cols() || op.rows() != op.cols() || op.rows() != l.mat.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "commutator needs equal square matrices");
    }
    const double residual = linalg::max_abs(op * l.mat - l.mat * op);
    return {residual <= tol, residual};
}

bool is_shift_invariant(const LinearFilter& l, const ComplexMatrix& op_b, const ComplexMatrix& op_a, double tol)
{
    if (op_b.rows() * op_a.rows() != l.mat.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "filter size differs from m*n");
    }
    const auto ib = ComplexMatrix::Identity(op_b.rows(), op_b.rows());
    const auto ia = ComplexMatrix::Identity(op_a.rows(), op_a.rows());
    return commutes_with(l, linalg::kron(op_b, ia), tol).commutes &&
           commutes_with(l, linalg::kron(ib, op_a), tol).commutes;
}

bool is_weakly_shift_invariant(const LinearFilter& l, const ComplexMatrix& op_b, const ComplexMatrix& op_a,
                               double tol)
{
    return commutes_with(l, linalg::kron(op_b, op_a), tol).commutes;
}

}  // namespace hgfrft
