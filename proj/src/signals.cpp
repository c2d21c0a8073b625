#include "hgfrft/signals.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

namespace hgfrft {

void ChirpSpec::validate() const
{
    if (!(duration > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "chirp duration must be positive");
    }
    if (samples < 2) {
        throw Error(ErrorCode::InvalidArgument, "chirp needs at least two samples");
    }
    if (f0 < 0.0 || b0 < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "chirp f0 and bandwidth must be non-negative");
    }
}

JointSignal chirp_field(const ChirpSpec& spec, Index n)
{
    spec.validate();
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgument, "chirp field needs at least one vertex");
    }
    JointSignal out{ComplexMatrix(spec.samples, n)};
    const double dt = spec.duration / static_cast<double>(spec.samples);
    for (Index j = 0; j < n; ++j) {
        const Index label = j + 1;
        const double f = spec.start_frequency(label);
        const double mu = spec.rate(label);
        for (Index k = 0; k < spec.samples; ++k) {
            const double t = static_cast<double>(k) * dt;
            // Phase in cycles, wrapped before scaling to keep precision at high k.
            double cycles = f * t + 0.5 * mu * t * t;
            cycles -= std::floor(cycles);
            out.x(k, j) = std::polar(1.0, 2.0 * std::numbers::pi * cycles);
        }
    }
    return out;
}

JointSignal synthesize_bandlimited(const std::map<Index, Complex>& coeffs, const FractionalOperator& op_h,
                                   const FractionalOperator& op_g)
{
    JointSignal out = JointSignal::zeros(op_h.dim(), op_g.dim());
    for (const auto& [k, c] : coeffs) {
        out.x += c * basis_column(op_h, op_g, k).x;
    }
    return out;
}

ComplexVector gaussian_noise(Index length, double sigma, std::uint64_t seed)
{
    if (sigma < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "noise sigma must be non-negative");
    }
    ComplexVector out = ComplexVector::Zero(length);
    if (sigma == 0.0) {
        return out;
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, sigma / std::sqrt(2.0));
    for (Index k = 0; k < length; ++k) {
        const double re = normal(rng);
        const double im = normal(rng);
        out[k] = {re, im};
    }
    return out;
}

JointSignal add_gaussian_noise(const JointSignal& sig, double sigma, std::uint64_t seed)
{
    const ComplexVector noise = gaussian_noise(sig.x.size(), sigma, seed);
    return JointSignal::from_vec(sig.m(), sig.n(), sig.vec() + noise);
}

RealVector hilbert_frequencies(Index m)
{
    RealVector w(m);
    for (Index k = 0; k < m; ++k) {
        w[k] = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
    }
    return w;
}

JointSpectrum initial_spectrum(const ComplexVector& f0, const FractionalOperator& op_g, Index m, double alpha)
{
    if (f0.size() != op_g.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "initial state length differs from graph size");
    }
    const ComplexVector g = op_g.mat() * f0;
    JointSpectrum y{ComplexMatrix(m, g.size()), alpha, op_g.order};
    for (Index k = 0; k < m; ++k) {
        y.coeff.row(k) = g.transpose();
    }
    return y;
}

Complex heat_factor(double lambda, double omega, double s, Index horizon, Index m)
{
    const Complex a = (1.0 - s * lambda) * std::polar(1.0, -omega);
    const double norm = 1.0 / std::sqrt(static_cast<double>(m));
    if (std::abs(a - 1.0) < 1e-12) {
        return norm * static_cast<double>(horizon);
    }
    return norm * (std::pow(a, static_cast<double>(horizon)) - 1.0) / (a - 1.0);
}

Complex wave_factor(double lambda, double omega, double s, Index horizon)
{
    const double x = std::clamp(1.0 - s * lambda / 2.0, -1.0, 1.0);
    const double theta = std::acos(x);
    Complex sum{0.0, 0.0};
    for (Index t = 0; t < horizon; ++t) {
        const double td = static_cast<double>(t);
        sum += std::cos(td * theta) * std::polar(1.0, -omega * td);
    }
    return sum;
}

namespace {

void require_axes(const JointSpectrum& y, const RealVector& lambda, const RealVector& omega)
{
    if (lambda.size() != y.n() || omega.size() != y.m()) {
        throw Error(ErrorCode::DimensionMismatch, "eigenvalue/frequency vectors do not match spectrum shape");
    }
}

}  // namespace

JointSpectrum heat_spectral_solution(const JointSpectrum& y, const RealVector& lambda, const RealVector& omega,
                                     double s, Index horizon)
{
    require_axes(y, lambda, omega);
    JointSpectrum out = y;
    for (Index k = 0; k < y.m(); ++k) {
        for (Index l = 0; l < y.n(); ++l) {
            out.coeff(k, l) *= heat_factor(lambda[l], omega[k], s, horizon, y.m());
        }
    }
    return out;
}

JointSpectrum wave_spectral_solution(const JointSpectrum& y, const RealVector& lambda, const RealVector& omega,
                                     double s, Index horizon)
{
    require_axes(y, lambda, omega);
    const double lmax = lambda.size() > 0 ? lambda.maxCoeff() : 0.0;
    if (lmax > 0.0 && s >= 4.0 / lmax) {
        throw Error(ErrorCode::UnstableSpeed,
                    "wave speed " + std::to_string(s) + " >= 4/lambda_max = " + std::to_string(4.0 / lmax));
    }
    JointSpectrum out = y;
    for (Index k = 0; k < y.m(); ++k) {
        for (Index l = 0; l < y.n(); ++l) {
            out.coeff(k, l) *= wave_factor(lambda[l], omega[k], s, horizon);
        }
    }
    return out;
}

std::vector<std::pair<double, double>> energy_compactness(const JointSpectrum& spec,
                                                          const std::vector<double>& percentiles)
{
    const ComplexVector c = spec.vec();
    const auto total = static_cast<std::size_t>(c.size());
    std::vector<Index> order(total);
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Index a, Index b) { return std::abs(c[a]) < std::abs(c[b]); });
    // Running dropped energy by count, accumulated in ascending magnitude.
    std::vector<double> dropped(total + 1, 0.0);
    for (std::size_t k = 0; k < total; ++k) {
        dropped[k + 1] = dropped[k] + std::norm(c[order[k]]);
    }
    const double energy = dropped[total];

    std::vector<std::pair<double, double>> curve;
    curve.reserve(percentiles.size());
    for (double p : percentiles) {
        if (!(p >= 0.0 && p <= 100.0)) {
            throw Error(ErrorCode::InvalidArgument, "percentile outside [0, 100]");
        }
        const auto count = std::min(total, static_cast<std::size_t>(std::floor(p * static_cast<double>(total) / 100.0 + 1e-9)));
        const double err = energy > 0.0 ? std::sqrt(std::min(dropped[count], energy) / energy) : 0.0;
        curve.emplace_back(p, std::clamp(err, 0.0, 1.0));
    }
    return curve;
}

double peak_to_energy(const ComplexVector& v)
{
    const double nrm = v.norm();
    return nrm == 0.0 ? 0.0 : v.cwiseAbs().maxCoeff() / nrm;
}

}  // namespace hgfrft
