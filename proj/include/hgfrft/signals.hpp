#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "hgfrft/transform.hpp"

namespace hgfrft {

/// Linear chirps on every vertex. Vertex column j carries label i = j + 1,
/// with start frequency f0 + df * i and bandwidth b0 + db * i swept over
/// `duration` seconds.
struct ChirpSpec {
    double f0 = 50.0;
    double b0 = 150.0;
    double duration = 0.2;
    Index samples = 200;
    double df = 5.0;
    double db = 10.0;

    void validate() const;
    double start_frequency(Index label) const { return f0 + df * static_cast<double>(label); }
    double bandwidth(Index label) const { return b0 + db * static_cast<double>(label); }
    double rate(Index label) const { return bandwidth(label) / duration; }
};

/// x(k, j) = exp(2 pi i (f_{0,l} t_k + mu_l t_k^2 / 2)), t_k = k duration / samples, l = j + 1.
JointSignal chirp_field(const ChirpSpec& spec, Index n);

/// Sum of c_k times basis_column(k).
JointSignal synthesize_bandlimited(const std::map<Index, Complex>& coeffs, const FractionalOperator& op_h,
                                   const FractionalOperator& op_g);

/// Adds circular complex Gaussian noise, re and im each N(0, sigma^2 / 2).
JointSignal add_gaussian_noise(const JointSignal& sig, double sigma, std::uint64_t seed);

/// Complex Gaussian vector with the same per-entry law as add_gaussian_noise.
ComplexVector gaussian_noise(Index length, double sigma, std::uint64_t seed);

/// omega_k = 2 pi k / m.
RealVector hilbert_frequencies(Index m);

/// Y(k, l) = (F_G^beta f0)(l) for every Hilbert index k: the graph spectrum
/// of the initial state, repeated along the Hilbert axis.
JointSpectrum initial_spectrum(const ComplexVector& f0, const FractionalOperator& op_g, Index m, double alpha);

/// Heat response factor (1/sqrt(m)) (a^T - 1)/(a - 1), a = (1 - s lambda) e^{-i omega}.
/// Equals T/sqrt(m) when |a - 1| < 1e-12.
Complex heat_factor(double lambda, double omega, double s, Index horizon, Index m);

/// Wave response factor sum_{t<T} cos(t acos(1 - s lambda / 2)) e^{-i omega t}.
Complex wave_factor(double lambda, double omega, double s, Index horizon);

/// Multiplies coefficient (k, l) by heat_factor(lambda[l], omega[k], ...).
JointSpectrum heat_spectral_solution(const JointSpectrum& y, const RealVector& lambda, const RealVector& omega,
                                     double s, Index horizon);

/// Throws UnstableSpeed when s >= 4 / max(lambda).
JointSpectrum wave_spectral_solution(const JointSpectrum& y, const RealVector& lambda, const RealVector& omega,
                                     double s, Index horizon);

/// For each percentile p, discards the floor(p N / 100) smallest-magnitude
/// coefficients and reports ||dropped||_F / ||spec||_F.
std::vector<std::pair<double, double>> energy_compactness(const JointSpectrum& spec,
                                                          const std::vector<double>& percentiles);

/// max_k |v_k| / ||v||_2; 0 for the zero vector.
double peak_to_energy(const ComplexVector& v);

}  // namespace hgfrft
