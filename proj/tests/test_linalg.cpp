#include <doctest.h>

#include <cmath>
#include <numbers>

#include "support.hpp"

using namespace hgfrft;
using namespace hgfrft::linalg;
using hgfrft::testing::max_diff;

namespace {

ComplexMatrix dft4()
{
    ComplexMatrix f(4, 4);
    for (int k = 0; k < 4; ++k) {
        for (int l = 0; l < 4; ++l) {
            f(k, l) = std::polar(0.5, -2.0 * std::numbers::pi * ((k * l) % 4) / 4.0);
        }
    }
    return f;
}

}  // namespace

TEST_CASE("eig_normal matches the closed-form ring Laplacian spectrum")
{
    const Eigen::MatrixXd l = shift_matrix(cycle_graph(4), ShiftKind::Laplacian).real();
    const auto dec = eig_normal(l.cast<Complex>());
    const double expected[] = {0.0, 2.0, 2.0, 4.0};
    for (int k = 0; k < 4; ++k) {
        CHECK(std::abs(dec.lambda[k] - expected[k]) < 1e-12);
    }
    CHECK(orthonormality_residual(dec.q) < 1e-12);
    CHECK(max_diff(dec.reconstruct(), l.cast<Complex>()) < 1e-12);
}

TEST_CASE("path Laplacian eigenvalues are 2 - 2 cos(pi k / n)")
{
    for (Index n = 2; n <= 9; ++n) {
        const auto dec = eig_normal(shift_matrix(path_graph(n), ShiftKind::Laplacian));
        for (Index k = 0; k < n; ++k) {
            const double want = 2.0 - 2.0 * std::cos(std::numbers::pi * static_cast<double>(k) / n);
            CHECK(std::abs(dec.lambda[k] - want) < 1e-12);
        }
    }
}

TEST_CASE("eig_normal handles unitary and random normal matrices")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Index n = 2 + trial % 5;
        const ComplexMatrix a = testing::random_normal(n, rng);
        const auto dec = eig_normal(a);
        CHECK(orthonormality_residual(dec.q) < 1e-10);
        CHECK(max_diff(dec.reconstruct(), a) < 1e-10);
        for (Index k = 1; k < n; ++k) {
            const bool ordered = dec.lambda[k - 1].real() < dec.lambda[k].real() ||
                                 (dec.lambda[k - 1].real() == dec.lambda[k].real() &&
                                  dec.lambda[k - 1].imag() <= dec.lambda[k].imag());
            CHECK(ordered);
        }
    }
    const auto f = eig_normal(dft4());
    CHECK(max_diff(f.reconstruct(), dft4()) < 1e-12);
}

TEST_CASE("eig_normal rejects non-normal input")
{
    ComplexMatrix jordan(2, 2);
    jordan << 1.0, 1.0, 0.0, 1.0;
    CHECK_THROWS_AS(eig_normal(jordan), Error);
    try {
        eig_normal(jordan);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotNormal);
    }
}

TEST_CASE("eig_normal is deterministic under a degenerate spectrum")
{
    const ComplexMatrix l = shift_matrix(cycle_graph(6), ShiftKind::Laplacian);
    const auto a = eig_normal(l);
    const auto b = eig_normal(l);
    CHECK(a.q == b.q);
    CHECK(a.lambda == b.lambda);
    for (Index k = 0; k < a.size(); ++k) {
        // First entry within rounding of the peak magnitude carries the phase.
        const double peak = a.q.col(k).cwiseAbs().maxCoeff();
        Index big = 0;
        while (std::abs(a.q(big, k)) < peak * (1.0 - 1e-9)) ++big;
        CHECK(std::abs(a.q(big, k).imag()) < 1e-14);
        CHECK(a.q(big, k).real() > 0.0);
    }
}

TEST_CASE("principal_log branch choices")
{
    CHECK(principal_log(Complex(-1.0, 0.0)) == Complex(0.0, std::numbers::pi));
    CHECK(principal_log(Complex(-1.0, -0.0)).imag() == std::numbers::pi);
    CHECK(principal_log(Complex(-2.0, 1e-13)).imag() == std::numbers::pi);
    CHECK(std::abs(principal_log(Complex(0.0, 1.0)) - Complex(0.0, std::numbers::pi / 2)) < 1e-15);
    CHECK(principal_log(Complex(1.0, 0.0)) == Complex(0.0, 0.0));
    CHECK_THROWS_AS(principal_log(Complex(0.0, 0.0)), Error);
}

TEST_CASE("frac_power oracles")
{
    const auto dec = eig_normal(dft4());
    CHECK(frac_power(dec, 0.0) == ComplexMatrix::Identity(4, 4));
    CHECK(max_diff(frac_power(dec, 1.0), dft4()) < 1e-12);
    const ComplexMatrix half = frac_power(dec, 0.5);
    CHECK(max_diff(half * half, dft4()) < 1e-10);
    CHECK(max_diff(frac_power(dec, 4.0), ComplexMatrix::Identity(4, 4)) < 1e-12);
    CHECK(max_diff(frac_power(dec, -1.0), dft4().adjoint()) < 1e-12);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ord(-2.0, 2.0);
    for (int trial = 0; trial < 30; ++trial) {
        const auto d = eig_normal(testing::random_normal(2 + trial % 5, rng));
        const double a = ord(rng);
        const double b = ord(rng);
        CHECK(max_diff(frac_power(d, a) * frac_power(d, b), frac_power(d, a + b)) < 1e-9);
    }
}

TEST_CASE("frac_power of a singular matrix")
{
    const auto dec = eig_normal(shift_matrix(path_graph(3), ShiftKind::Laplacian));
    CHECK(frac_power(dec, 0.0) == ComplexMatrix::Identity(3, 3));
    try {
        frac_power(dec, 0.5);
        FAIL("expected ZeroEigenvalue");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroEigenvalue);
    }
}

TEST_CASE("kron follows the block definition")
{
    std::mt19937_64 rng(2);
    const ComplexMatrix a = testing::random_complex(2, 3, rng);
    const ComplexMatrix b = testing::random_complex(4, 2, rng);
    const ComplexMatrix k = kron(a, b);
    REQUIRE(k.rows() == 8);
    REQUIRE(k.cols() == 6);
    for (Index i = 0; i < 2; ++i) {
        for (Index j = 0; j < 3; ++j) {
            CHECK(max_diff(k.block(i * 4, j * 2, 4, 2), a(i, j) * b) == 0.0);
        }
    }
    try {
        kron(ComplexMatrix::Identity(10, 10), ComplexMatrix::Identity(10, 10), 99);
        FAIL("expected DimensionOverflow");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DimensionOverflow);
    }
}

TEST_CASE("pinv satisfies the Penrose conditions")
{
    std::mt19937_64 rng(9);
    const ComplexMatrix a = testing::random_complex(6, 3, rng) * testing::random_complex(3, 4, rng);
    const ComplexMatrix p = pinv(a);
    CHECK(max_diff(a * p * a, a) < 1e-10);
    CHECK(max_diff(p * a * p, p) < 1e-10);
    CHECK(max_diff((a * p).adjoint(), a * p) < 1e-10);
    CHECK(max_diff((p * a).adjoint(), p * a) < 1e-10);
}

TEST_CASE("sigma_min and norms")
{
    ComplexMatrix d = ComplexMatrix::Zero(3, 2);
    d(0, 0) = 3.0;
    d(1, 1) = Complex(0.0, -0.5);
    CHECK(sigma_min(d) == doctest::Approx(0.5));
    CHECK(norm2(d) == doctest::Approx(3.0));
    CHECK(max_abs(d) == doctest::Approx(3.0));
    CHECK(all_finite(d));
    d(2, 0) = std::nan("");
    CHECK_FALSE(all_finite(d));
}
