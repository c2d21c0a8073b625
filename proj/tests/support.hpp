#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include <Eigen/QR>

#include "hgfrft/graph.hpp"
#include "hgfrft/linalg.hpp"

namespace hgfrft::testing {

inline ComplexMatrix random_complex(Index rows, Index cols, std::mt19937_64& rng)
{
    std::normal_distribution<double> nd(0.0, 1.0);
    ComplexMatrix a(rows, cols);
    for (Index j = 0; j < cols; ++j) {
        for (Index i = 0; i < rows; ++i) {
            const double re = nd(rng);
            a(i, j) = Complex(re, nd(rng));
        }
    }
    return a;
}

inline ComplexMatrix random_unitary(Index n, std::mt19937_64& rng)
{
    Eigen::HouseholderQR<ComplexMatrix> qr(random_complex(n, n, rng));
    return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

/// Orthonormal columns (rows x cols).
inline ComplexMatrix random_orthonormal(Index rows, Index cols, std::mt19937_64& rng)
{
    Eigen::HouseholderQR<ComplexMatrix> qr(random_complex(rows, cols, rng));
    return qr.householderQ() * ComplexMatrix::Identity(rows, cols);
}

/// Q diag(lambda) Q^H with eigenvalues bounded away from zero.
inline ComplexMatrix random_normal(Index n, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> mag(0.5, 2.0);
    std::uniform_real_distribution<double> ang(-3.0, 3.0);
    ComplexVector lambda(n);
    for (Index k = 0; k < n; ++k) {
        lambda[k] = std::polar(mag(rng), ang(rng));
    }
    const ComplexMatrix q = random_unitary(n, rng);
    return q * lambda.asDiagonal() * q.adjoint();
}

/// Connected undirected graph: random spanning tree plus extra edges, weights in [0.5, 2].
inline Graph random_graph(Index n, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> wd(0.5, 2.0);
    std::bernoulli_distribution extra(0.4);
    std::vector<Edge> edges;
    std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
    for (Index v = 1; v < n; ++v) {
        std::uniform_int_distribution<Index> pick(0, v - 1);
        const Index u = pick(rng);
        edges.push_back({u, v, wd(rng)});
        used[u][v] = used[v][u] = true;
    }
    for (Index u = 0; u < n; ++u) {
        for (Index v = u + 1; v < n; ++v) {
            if (!used[u][v] && extra(rng)) {
                edges.push_back({u, v, wd(rng)});
            }
        }
    }
    return Graph(n, std::move(edges));
}

inline double max_diff(const ComplexMatrix& a, const ComplexMatrix& b)
{
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace hgfrft::testing
