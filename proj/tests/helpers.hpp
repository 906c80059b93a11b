#pragma once
#include <random>

#include "entclone/linalg.hpp"

// shared helpers for the test binaries: seeded random matrices and comparisons

namespace testutil {

using entclone::ComplexMatrix;
using entclone::cplx;

inline std::mt19937_64 make_rng(std::uint64_t seed = 12345) { return std::mt19937_64(seed); }

inline ComplexMatrix random_matrix(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = cplx(g(rng), g(rng));
    return m;
}

inline ComplexMatrix random_hermitian(int n, std::mt19937_64& rng) {
    ComplexMatrix x = random_matrix(n, n, rng);
    ComplexMatrix h(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h(i, j) = 0.5 * (x(i, j) + std::conj(x(j, i)));
    return h;
}

// random full-rank density operator built as X X^dag / Tr
inline ComplexMatrix random_density(int n, std::mt19937_64& rng) {
    ComplexMatrix x = random_matrix(n, n, rng);
    ComplexMatrix rho = x * x.adjoint();
    rho *= cplx(1.0 / rho.trace().real(), 0.0);
    return rho;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).max_abs();
}

}  // namespace testutil
