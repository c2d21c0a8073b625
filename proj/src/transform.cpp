#include "hgfrft/transform.hpp"

#include <cmath>
#include <mutex>
#include <numbers>

namespace hgfrft {
namespace {

long long order_key(double order)
{
    return std::llround(order * 1e12);
}

void require_dims(const JointSignal& sig, const FractionalOperator& op_h, const FractionalOperator& op_g)
{
    if (op_h.dim() != sig.m() || op_g.dim() != sig.n()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "signal is " + std::to_string(sig.m()) + "x" + std::to_string(sig.n()) +
                        " but operators are " + std::to_string(op_h.dim()) + " and " +
                        std::to_string(op_g.dim()));
    }
}

}  // namespace

FractionalOperator FractionalOperator::inverse() const
{
    return family->at_order(-order);
}

OperatorFamily::OperatorFamily(ComplexMatrix base, RealVector frequencies, std::string name)
    : base_(std::move(base)), frequencies_(std::move(frequencies)), name_(std::move(name))
{
    if (base_.rows() != base_.cols() || base_.rows() == 0) {
        throw Error(ErrorCode::DimensionMismatch, "base transform must be square and non-empty");
    }
    if (linalg::orthonormality_residual(base_) > 1e-9) {
        throw Error(ErrorCode::InvalidArgument, "base transform is not unitary");
    }
    if (frequencies_.size() != base_.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "frequency labels do not match transform size");
    }
    dec_ = linalg::eig_normal(base_);
}

std::shared_ptr<const OperatorFamily> OperatorFamily::create(ComplexMatrix base, RealVector frequencies,
                                                             std::string name)
{
    return std::shared_ptr<const OperatorFamily>(
        new OperatorFamily(std::move(base), std::move(frequencies), std::move(name)));
}

FractionalOperator OperatorFamily::at_order(double order) const
{
    const long long key = order_key(order);
    {
        std::shared_lock lock(cache_mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) {
            return {shared_from_this(), order, it->second};
        }
    }
    std::shared_ptr<const ComplexMatrix> mat;
    if (order == 1.0) {
        mat = std::make_shared<const ComplexMatrix>(base_);
    } else {
        mat = std::make_shared<const ComplexMatrix>(linalg::frac_power(dec_, order));
    }
    std::unique_lock lock(cache_mutex_);
    auto [it, inserted] = cache_.emplace(key, std::move(mat));
    return {shared_from_this(), order, it->second};
}

std::size_t OperatorFamily::cached_orders() const
{
    std::shared_lock lock(cache_mutex_);
    return cache_.size();
}

OperatorFamilyPtr gft_operator(const Graph& g, ShiftKind kind)
{
    const auto dec = linalg::eig_normal(shift_matrix(g, kind));
    return OperatorFamily::create(dec.q.adjoint(), dec.lambda.real(),
                                  "gft/" + std::string(to_string(kind)));
}

OperatorFamilyPtr dft_operator(Index m)
{
    if (m < 2) {
        throw Error(ErrorCode::InvalidArgument, "DFT size must be >= 2");
    }
    ComplexMatrix base(m, m);
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    for (Index k = 0; k < m; ++k) {
        for (Index l = 0; l < m; ++l) {
            // Reduce k*l mod m first so large sizes keep full phase accuracy.
            const double phase = -2.0 * std::numbers::pi * static_cast<double>((k * l) % m) / static_cast<double>(m);
            base(k, l) = std::polar(scale, phase);
        }
    }
    RealVector freq(m);
    for (Index k = 0; k < m; ++k) {
        freq[k] = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
    }
    return OperatorFamily::create(std::move(base), std::move(freq), "dft");
}

FractionalOperator at_order(const OperatorFamilyPtr& family, double order)
{
    return family->at_order(order);
}

ComplexVector JointSignal::vec() const
{
    ComplexVector v(x.size());
    for (Index i = 0; i < m(); ++i) {
        for (Index j = 0; j < n(); ++j) {
            v[i * n() + j] = x(i, j);
        }
    }
    return v;
}

JointSignal JointSignal::from_vec(Index m, Index n, const ComplexVector& v)
{
    if (v.size() != m * n) {
        throw Error(ErrorCode::DimensionMismatch, "vector length does not match m*n");
    }
    JointSignal s{ComplexMatrix(m, n)};
    for (Index i = 0; i < m; ++i) {
        for (Index j = 0; j < n; ++j) {
            s.x(i, j) = v[i * n + j];
        }
    }
    return s;
}

JointSpectrum hgfrft(const JointSignal& sig, const FractionalOperator& op_h, const FractionalOperator& op_g)
{
    require_dims(sig, op_h, op_g);
    JointSpectrum out{op_h.mat() * sig.x * op_g.mat().transpose(), op_h.order, op_g.order};
#ifndef NDEBUG
    if (sig.x.size() <= 256) {
        const ComplexVector via_kron = analysis_matrix(op_h, op_g) * sig.vec();
        const double gap = (via_kron - out.vec()).cwiseAbs().maxCoeff();
        if (gap > 1e-10 * std::max(1.0, via_kron.cwiseAbs().maxCoeff())) {
            throw Error(ErrorCode::InvalidArgument, "matrix and Kronecker forms disagree");
        }
    }
#endif
    return out;
}

JointSignal inverse_hgfrft(const JointSpectrum& spec, const FractionalOperator& op_h_neg,
                           const FractionalOperator& op_g_neg)
{
    constexpr double kOrderTol = 1e-12;
    if (std::abs(op_h_neg.order + spec.alpha) > kOrderTol ||
        std::abs(op_g_neg.order + spec.beta) > kOrderTol) {
        throw Error(ErrorCode::OrderMismatch, "inverse needs orders (-alpha, -beta) of the spectrum");
    }
    JointSignal as_signal{spec.coeff};
    require_dims(as_signal, op_h_neg, op_g_neg);
    return {op_h_neg.mat() * spec.coeff * op_g_neg.mat().transpose()};
}

JointSignal partial_h(const JointSignal& sig, const FractionalOperator& op_h)
{
    if (op_h.dim() != sig.m()) {
        throw Error(ErrorCode::DimensionMismatch, "Hilbert operator size differs from m");
    }
    return {op_h.mat() * sig.x};
}

JointSignal partial_g(const JointSignal& sig, const FractionalOperator& op_g)
{
    if (op_g.dim() != sig.n()) {
        throw Error(ErrorCode::DimensionMismatch, "graph operator size differs from n");
    }
    return {sig.x * op_g.mat().transpose()};
}

JointSignal basis_column(const FractionalOperator& op_h, const FractionalOperator& op_g, Index k)
{
    const Index m = op_h.dim();
    const Index n = op_g.dim();
    if (k < 0 || k >= m * n) {
        throw Error(ErrorCode::IndexOutOfRange, "basis index " + std::to_string(k) + " outside [0, m*n)");
    }
    const FractionalOperator syn_h = op_h.inverse();
    const FractionalOperator syn_g = op_g.inverse();
    return {syn_h.mat().col(k / n) * syn_g.mat().col(k % n).transpose()};
}

ComplexMatrix analysis_matrix(const FractionalOperator& op_h, const FractionalOperator& op_g)
{
    return linalg::kron(op_h.mat(), op_g.mat());
}

ComplexMatrix synthesis_matrix(const FractionalOperator& op_h, const FractionalOperator& op_g)
{
    return linalg::kron(op_h.inverse().mat(), op_g.inverse().mat());
}

}  // namespace hgfrft
