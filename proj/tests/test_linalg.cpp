#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "entclone/linalg.hpp"
#include "helpers.hpp"

using namespace entclone;
using testutil::max_abs_diff;

namespace {

ComplexMatrix sigma_y() {
    ComplexMatrix s(2, 2);
    s(0, 1) = cplx(0.0, -1.0);
    s(1, 0) = cplx(0.0, 1.0);
    return s;
}

ComplexMatrix bell_phi_plus() {  // (|00> + |11>)/sqrt(2) as a density operator
    ComplexMatrix v(4, 1);
    v(0, 0) = v(3, 0) = 1.0 / std::sqrt(2.0);
    return v * v.adjoint();
}

}  // namespace

TEST_CASE("kron basics") {
    ComplexMatrix i2 = ComplexMatrix::identity(2);
    CHECK(max_abs_diff(kron(i2, i2), ComplexMatrix::identity(4)) == 0.0);

    ComplexMatrix yy = kron(sigma_y(), sigma_y());
    CHECK(max_abs_diff(yy * yy, ComplexMatrix::identity(4)) < 1e-15);

    ComplexMatrix p0(2, 2), p1(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    ComplexMatrix p01 = kron(p0, p1);  // projector onto composite index 1
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(p01(i, j) == ((i == 1 && j == 1) ? cplx(1.0) : cplx(0.0)));
}

TEST_CASE("kron trace is multiplicative") {
    auto rng = testutil::make_rng(1);
    for (int t = 0; t < 20; ++t) {
        ComplexMatrix a = testutil::random_matrix(4, 4, rng);
        ComplexMatrix b = testutil::random_matrix(4, 4, rng);
        CHECK(std::abs(kron(a, b).trace() - a.trace() * b.trace()) < 1e-12);
    }
}

TEST_CASE("partial_trace of a product factorizes") {
    auto rng = testutil::make_rng(2);
    ComplexMatrix rho = testutil::random_density(4, rng);
    ComplexMatrix sig = testutil::random_matrix(4, 4, rng);
    ComplexMatrix full = kron(rho, sig);
    ComplexMatrix red = partial_trace(full, {1, 2});
    CHECK(max_abs_diff(red, sig.trace() * rho) < 1e-12);
    // trace preserved under reduction
    CHECK(std::abs(partial_trace(full, {3, 4}).trace() - full.trace()) < 1e-12);
}

TEST_CASE("partial_trace of a Bell state is maximally mixed") {
    ComplexMatrix red = partial_trace(bell_phi_plus(), {1});
    CHECK(max_abs_diff(red, cplx(0.5) * ComplexMatrix::identity(2)) < 1e-15);
}

TEST_CASE("partial_trace rejects bad qubit labels") {
    ComplexMatrix m = ComplexMatrix::identity(4);
    CHECK_THROWS_AS(partial_trace(m, {3}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(m, {}), std::invalid_argument);
}

TEST_CASE("partial_transpose on a product transposes one factor") {
    auto rng = testutil::make_rng(3);
    ComplexMatrix a = testutil::random_matrix(4, 4, rng);
    ComplexMatrix b = testutil::random_matrix(4, 4, rng);
    ComplexMatrix pt = partial_transpose(kron(a, b), {3, 4});
    CHECK(max_abs_diff(pt, kron(a, b.transpose())) < 1e-14);
    // involution
    CHECK(max_abs_diff(partial_transpose(pt, {3, 4}), kron(a, b)) == 0.0);
}

TEST_CASE("partial_transpose of a Bell state has eigenvalues {1/2,1/2,1/2,-1/2}") {
    EigenSystem es = herm_eig(partial_transpose(bell_phi_plus(), {2}));
    REQUIRE(es.values.size() == 4);
    CHECK(es.values[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(es.values[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(es.values[2] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(es.values[3] == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("partial_trace commutes with partial_transpose on the traced-out pair") {
    auto rng = testutil::make_rng(4);
    ComplexMatrix rho = testutil::random_density(16, rng);
    ComplexMatrix lhs = partial_trace(partial_transpose(rho, {3, 4}), {1, 2});
    ComplexMatrix rhs = partial_trace(rho, {1, 2});
    CHECK(max_abs_diff(lhs, rhs) < 1e-12);
}

TEST_CASE("herm_eig on small known spectra") {
    ComplexMatrix d(3, 3);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    d(2, 2) = 2.0;
    EigenSystem es = herm_eig(d);
    CHECK(es.values[0] == doctest::Approx(3.0));
    CHECK(es.values[1] == doctest::Approx(2.0));
    CHECK(es.values[2] == doctest::Approx(1.0));

    EigenSystem ey = herm_eig(sigma_y());
    CHECK(ey.values[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ey.values[1] == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("herm_eig residual, trace and unitarity on random matrices") {
    auto rng = testutil::make_rng(5);
    for (int t = 0; t < 100; ++t) {
        ComplexMatrix h = testutil::random_hermitian(16, rng);
        EigenSystem es = herm_eig(h);

        double sum = 0.0;
        for (double v : es.values) sum += v;
        CHECK(std::abs(sum - h.trace().real()) < 1e-10);

        ComplexMatrix lam(16, 16);
        for (int i = 0; i < 16; ++i) lam(i, i) = es.values[i];
        double resid = (h * es.vectors - es.vectors * lam).frobenius_norm();
        CHECK(resid <= 1e-10 * h.frobenius_norm());
        CHECK(max_abs_diff(es.vectors.adjoint() * es.vectors, ComplexMatrix::identity(16)) < 1e-12);
    }
}

TEST_CASE("herm_eig rejects non-Hermitian input") {
    ComplexMatrix m(2, 2);
    m(0, 1) = 1.0;  // strictly upper triangular
    CHECK_THROWS_AS(herm_eig(m), std::invalid_argument);
}

TEST_CASE("psd_sqrt on fixed points and scalings") {
    ComplexMatrix i4 = ComplexMatrix::identity(4);
    CHECK(max_abs_diff(psd_sqrt(i4), i4) < 1e-13);

    ComplexMatrix v(4, 1);
    v(1, 0) = 1.0;
    ComplexMatrix p = v * v.adjoint();
    CHECK(max_abs_diff(psd_sqrt(cplx(4.0) * p), cplx(2.0) * p) < 1e-13);
    CHECK(max_abs_diff(psd_sqrt(p), p) < 1e-13);  // pure state is idempotent
}

TEST_CASE("psd_sqrt squares back to the input") {
    auto rng = testutil::make_rng(6);
    for (int t = 0; t < 25; ++t) {
        ComplexMatrix x = testutil::random_matrix(8, 8, rng);
        ComplexMatrix psd = x * x.adjoint();
        ComplexMatrix r = psd_sqrt(psd);
        CHECK((r * r - psd).frobenius_norm() < 1e-9 * std::max(1.0, psd.frobenius_norm()));
        CHECK(r.is_hermitian(1e-10));
    }
}

TEST_CASE("psd_sqrt rejects indefinite input") {
    ComplexMatrix m(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -0.5;
    CHECK_THROWS_AS(psd_sqrt(m), std::invalid_argument);
}

TEST_CASE("complete_isometry extends to a unitary and keeps the input columns") {
    const int n = 64, k = 4;
    ComplexMatrix v(n, k);
    for (int j = 0; j < k; ++j) v(j, j) = 1.0;  // first 4 canonical basis vectors
    ComplexMatrix u = complete_isometry(v);
    CHECK((u.adjoint() * u - ComplexMatrix::identity(n)).frobenius_norm() < 1e-9);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) CHECK(u(i, j) == v(i, j));

    // a generic isometry built from a random unitary's first 4 columns
    auto rng = testutil::make_rng(7);
    EigenSystem es = herm_eig(testutil::random_hermitian(n, rng));
    ComplexMatrix w(n, k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) w(i, j) = es.vectors(i, j);
    ComplexMatrix uw = complete_isometry(w);
    CHECK((uw.adjoint() * uw - ComplexMatrix::identity(n)).frobenius_norm() < 1e-9);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) CHECK(uw(i, j) == w(i, j));
}

TEST_CASE("complete_isometry rejects non-orthonormal columns") {
    ComplexMatrix v(4, 2);
    v(0, 0) = 1.0;
    v(0, 1) = 1.0;  // duplicate column
    CHECK_THROWS_AS(complete_isometry(v), std::invalid_argument);
}
