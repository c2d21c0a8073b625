#include <doctest.h>

#include "hgfrft/filtering.hpp"
#include "support.hpp"

using namespace hgfrft;
using testing::max_diff;

namespace {

struct Setup {
    OperatorFamilyPtr fh = gft_operator(path_graph(4), ShiftKind::Laplacian);
    OperatorFamilyPtr fg = gft_operator(cycle_graph(4), ShiftKind::Laplacian);
    FractionalOperator h = fh->at_order(0.7);
    FractionalOperator g = fg->at_order(0.5);
};

JointSignal synth(const ComplexMatrix& spectrum, const Setup& s)
{
    return inverse_hgfrft({spectrum, s.h.order, s.g.order}, s.h.inverse(), s.g.inverse());
}

}  // namespace

TEST_CASE("FrequencyRegion normalizes its pairs")
{
    const FrequencyRegion r({{1, 2}, {0, 3}, {1, 2}}, 2, 4);
    CHECK(r.size() == 2);
    CHECK(r.pairs().front() == FrequencyRegion::Pair{0, 3});
    CHECK(r.contains(1, 2));
    CHECK_FALSE(r.contains(0, 0));
    CHECK(r.flat() == std::vector<Index>{3, 6});
    CHECK(FrequencyRegion::from_flat({6, 3}, 2, 4) == r);
    CHECK(FrequencyRegion::full(2, 3).size() == 6);
    CHECK_THROWS_AS(FrequencyRegion({{2, 0}}, 2, 4), Error);
    CHECK_THROWS_AS(FrequencyRegion({{0, -1}}, 2, 4), Error);
}

TEST_CASE("frequency_range")
{
    Setup s;
    CHECK(frequency_range({ComplexMatrix::Zero(4, 4), 0, 0}).empty());
    ComplexMatrix imp = ComplexMatrix::Zero(4, 4);
    imp(1, 2) = 3.0;
    CHECK(frequency_range({imp, 0, 0}) == FrequencyRegion({{1, 2}}, 4, 4));

    ComplexMatrix y = ComplexMatrix::Zero(4, 4);
    y(0, 0) = 1.0;
    y(0, 1) = 0.5;
    y(0, 2) = 2.0;
    const JointSignal f = synth(y, s);
    CHECK(frequency_range(hgfrft::hgfrft(f, s.h, s.g)) == FrequencyRegion::from_flat({0, 1, 2}, 4, 4));
}

TEST_CASE("region_from_bounds compares the reciprocal Hilbert label")
{
    RealVector hv(3);
    hv << 0.0, 0.5, 4.0;
    RealVector gv(3);
    gv << -1.0, 0.2, 3.0;
    const FrequencyRegion r = region_from_bounds(hv, gv, 1.0, 1.0);
    CHECK(r == FrequencyRegion({{2, 0}, {2, 1}}, 3, 3));
}

TEST_CASE("bandpass is an orthogonal projection")
{
    Setup s;
    std::mt19937_64 rng(31);
    const JointSignal f{testing::random_complex(4, 4, rng)};
    CHECK(max_diff(bandpass(f, FrequencyRegion::full(4, 4), s.h, s.g).x, f.x) < 1e-10);
    CHECK(bandpass(f, FrequencyRegion({}, 4, 4), s.h, s.g).x.cwiseAbs().maxCoeff() < 1e-15);

    const FrequencyRegion k({{0, 1}, {2, 3}, {3, 0}, {1, 1}}, 4, 4);
    const JointSignal once = bandpass(f, k, s.h, s.g);
    CHECK(max_diff(bandpass(once, k, s.h, s.g).x, once.x) < 1e-10);
    const ComplexMatrix p = bandpass_filter(k, s.h, s.g).mat;
    CHECK(max_diff(p * p, p) < 1e-10);
    CHECK(max_diff(p, p.adjoint()) < 1e-9);
    CHECK(max_diff(p * f.vec(), once.vec()) < 1e-10);
}

TEST_CASE("convolution")
{
    Setup s;
    std::mt19937_64 rng(37);
    const JointSignal f{testing::random_complex(4, 4, rng)};
    const JointSignal h{testing::random_complex(4, 4, rng)};
    const JointSignal kernel{testing::random_complex(4, 4, rng)};

    const JointSignal delta = synth(ComplexMatrix::Ones(4, 4), s);
    CHECK(max_diff(convolve(delta, f, s.h, s.g).x, f.x) < 1e-10);

    const Complex c(1.5, -0.5);
    const JointSignal col = basis_column(s.h, s.g, 5);
    const JointSignal scaled{c * col.x};
    CHECK(max_diff(convolve(scaled, scaled, s.h, s.g).x, c * c * col.x) < 1e-10);

    const JointSignal lhs = convolve(kernel, JointSignal{c * f.x + h.x}, s.h, s.g);
    const ComplexMatrix rhs = c * convolve(kernel, f, s.h, s.g).x + convolve(kernel, h, s.h, s.g).x;
    CHECK(max_diff(lhs.x, rhs) < 1e-9);

    // Basis vectors are eigenvectors with eigenvalue equal to the kernel's coefficient.
    const ComplexMatrix gy = hgfrft::hgfrft(kernel, s.h, s.g).coeff;
    for (Index k = 0; k < 16; ++k) {
        const JointSignal b = basis_column(s.h, s.g, k);
        CHECK(max_diff(convolve(kernel, b, s.h, s.g).x, gy(k / 4, k % 4) * b.x) < 1e-9);
    }
    CHECK(max_diff(convolution_filter(kernel, s.h, s.g).mat * f.vec(), convolve(kernel, f, s.h, s.g).vec()) < 1e-10);
    CHECK_THROWS_AS(convolve(JointSignal{testing::random_complex(3, 4, rng)}, f, s.h, s.g), Error);
}

TEST_CASE("finite bandpass equals convolution with the indicator kernel")
{
    Setup s;
    std::mt19937_64 rng(41);
    const JointSignal f{testing::random_complex(4, 4, rng)};
    const FrequencyRegion k({{0, 0}, {1, 3}, {3, 2}}, 4, 4);
    ComplexMatrix indicator = ComplexMatrix::Zero(4, 4);
    for (const auto& [i, j] : k.pairs()) indicator(i, j) = 1.0;
    const JointSignal g = synth(indicator, s);
    CHECK(max_diff(convolve(g, f, s.h, s.g).x, bandpass(f, k, s.h, s.g).x) < 1e-9);
}

TEST_CASE("shift invariance")
{
    Setup s;
    RealVector vb(4);
    vb << 0.3, 1.1, 2.0, 3.7;
    RealVector va(4);
    va << -1.0, 0.4, 0.9, 2.5;
    const ComplexMatrix b = basis_shift(s.h, vb);
    const ComplexMatrix a = basis_shift(s.g, va);
    const ComplexMatrix i4 = ComplexMatrix::Identity(4, 4);

    const LinearFilter identity{ComplexMatrix::Identity(16, 16)};
    CHECK(commutes_with(identity, linalg::kron(b, a), 1e-12).commutes);

    const LinearFilter p = bandpass_filter(FrequencyRegion({{0, 1}, {2, 2}}, 4, 4), s.h, s.g);
    const auto cb = commutes_with(p, linalg::kron(b, i4), 1e-9);
    const auto ca = commutes_with(p, linalg::kron(i4, a), 1e-9);
    CHECK(cb.commutes);
    CHECK(ca.commutes);
    CHECK(cb.residual <= 1e-9);
    CHECK(is_shift_invariant(p, b, a, 1e-9));
    CHECK(is_weakly_shift_invariant(p, b, a, 1e-9));

    std::mt19937_64 rng(43);
    const LinearFilter noise{testing::random_complex(16, 16, rng)};
    CHECK_FALSE(commutes_with(noise, linalg::kron(b, a), 1e-6).commutes);

    // Diagonal in the joint basis: shift invariant.
    const ComplexMatrix syn = synthesis_matrix(s.h, s.g);
    const ComplexVector diag = testing::random_complex(16, 1, rng);
    const LinearFilter diag_l{syn * diag.asDiagonal() * syn.adjoint()};
    CHECK(is_shift_invariant(diag_l, b, a, 1e-9));

    // Swapping two basis vectors from different eigenspaces breaks invariance.
    Eigen::PermutationMatrix<Eigen::Dynamic> perm(16);
    perm.setIdentity();
    perm.applyTranspositionOnTheRight(0, 5);
    const LinearFilter mix{syn * perm * syn.adjoint()};
    CHECK_FALSE(is_shift_invariant(mix, b, a, 1e-6));
    CHECK_THROWS_AS(commutes_with(identity, i4, 1e-9), Error);
}

TEST_CASE("weakly shift invariant self-adjoint filter is shift invariant")
{
    Setup s;
    RealVector vb(4);
    vb << 1.0, 2.0, 3.0, 5.0;
    RealVector va(4);
    va << 1.1, 2.3, 4.7, 7.9;
    const ComplexMatrix b = basis_shift(s.h, vb);
    const ComplexMatrix a = basis_shift(s.g, va);
    // Distinct products vb_i * va_j make B (x) A nondegenerate, so any Hermitian
    // polynomial in it commutes with both factors.
    const ComplexMatrix ba = linalg::kron(b, a);
    const ComplexMatrix l = ba + ba.adjoint() + 0.5 * ba * ba.adjoint();
    const LinearFilter filt{l};
    CHECK(max_diff(l, l.adjoint()) < 1e-12);
    CHECK(is_weakly_shift_invariant(filt, b, a, 1e-8));
    CHECK(is_shift_invariant(filt, b, a, 1e-8));
}
