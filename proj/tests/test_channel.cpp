#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "entclone/channel.hpp"
#include "entclone/cloner.hpp"
#include "entclone/linalg.hpp"
#include "helpers.hpp"

using namespace entclone;
using namespace entclone::channel;
using cloner::EntanglementClass;

namespace {

constexpr double kRoot2Inv = 0.70710678118654752440;

ComplexMatrix canonical_density(const EntanglementClass& cls) {
    const ComplexMatrix psi = cloner::canonical_state(cls);
    return psi * psi.adjoint();
}

ComplexMatrix random_pure4(std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    ComplexMatrix psi(4, 1);
    for (int i = 0; i < 4; ++i) psi(i, 0) = {normal(rng), normal(rng)};
    const double n = psi.frobenius_norm();
    psi *= cplx(1.0 / n);
    return psi * psi.adjoint();
}

double operator_norm(const ComplexMatrix& m) {
    return std::sqrt(herm_eig(m.adjoint() * m).values.front());
}

}  // namespace

TEST_CASE("generator is Hermitian with the projector spectrum") {
    for (double alpha : {0.0, 0.3, kRoot2Inv}) {
        const EntanglementClass cls(alpha);
        const ComplexMatrix k = k_operator(cls);
        CAPTURE(alpha);
        CHECK((k - k.adjoint()).max_abs() < 1e-14);

        const cloner::ClonerParams p = cloner::optimal_params(cls);
        auto eig = herm_eig(k);
        std::vector<double> expected(9, std::sqrt(p.a[1].real()));
        expected.push_back(std::sqrt(p.a[16].real()));
        expected.insert(expected.end(), 6, 0.0);
        std::sort(expected.begin(), expected.end(), std::greater<>());
        for (int i = 0; i < 16; ++i) CHECK(eig.values[i] == doctest::Approx(expected[i]).epsilon(1e-12));
    }
}

TEST_CASE("kraus operators are complete and rebuild the optimal output") {
    for (double alpha : {0.0, 0.3, kRoot2Inv}) {
        const EntanglementClass cls(alpha);
        const KrausSet ks = kraus_set(cls);
        CAPTURE(alpha);

        ComplexMatrix total(4, 4);
        for (const auto& op : ks.operators) total += op.adjoint() * op;
        CHECK(testutil::max_abs_diff(total, ComplexMatrix::identity(4)) < 1e-12);

        const ComplexMatrix out = apply_channel(ks, canonical_density(cls));
        const cloner::OutputState direct =
            cloner::assemble_blocks(cls, cloner::optimal_params(cls));
        CHECK((out - direct.rho).frobenius_norm() < 1e-12);
    }
}

TEST_CASE("channel output equals the sandwich with the mixed ancilla pair") {
    const EntanglementClass cls(0.35);
    const KrausSet ks = kraus_set(cls);
    const ComplexMatrix k = k_operator(cls);
    auto rng = testutil::make_rng();
    for (int round = 0; round < 5; ++round) {
        const ComplexMatrix rho = random_pure4(rng);
        const ComplexMatrix sandwich =
            k * kron(rho, 0.25 * ComplexMatrix::identity(4)) * k.adjoint();
        CHECK((apply_channel(ks, rho) - sandwich).frobenius_norm() < 1e-12);
    }
}

TEST_CASE("channel preserves trace and is linear") {
    const EntanglementClass cls(0.3);
    const KrausSet ks = kraus_set(cls);
    auto rng = testutil::make_rng();
    for (int round = 0; round < 20; ++round) {
        const ComplexMatrix rho = random_pure4(rng);
        CHECK(apply_channel(ks, rho).trace().real() == doctest::Approx(1.0).epsilon(1e-12));
    }
    const ComplexMatrix r1 = testutil::random_density(4, rng);
    const ComplexMatrix r2 = testutil::random_density(4, rng);
    const ComplexMatrix mixed = apply_channel(ks, 0.5 * r1 + 0.5 * r2);
    const ComplexMatrix split =
        0.5 * apply_channel(ks, r1) + 0.5 * apply_channel(ks, r2);
    CHECK((mixed - split).frobenius_norm() < 1e-12);
}

TEST_CASE("channel rejects non-density inputs") {
    const KrausSet ks = kraus_set(EntanglementClass(0.3));
    auto rng = testutil::make_rng();
    CHECK_THROWS_AS(apply_channel(ks, testutil::random_matrix(4, 4, rng)),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_channel(ks, 2.0 * testutil::random_density(4, rng)),
                    std::invalid_argument);
    ComplexMatrix indefinite(4, 4);
    indefinite(0, 0) = 1.2;
    indefinite(1, 1) = -0.2;
    CHECK_THROWS_AS(apply_channel(ks, indefinite), std::invalid_argument);
    CHECK_THROWS_AS(apply_channel(ks, ComplexMatrix::identity(2)), std::invalid_argument);
}

TEST_CASE("channel fidelity follows the closed-form peak") {
    for (int i = 0; i <= 20; ++i) {
        const EntanglementClass cls(kRoot2Inv * i / 20);
        const ComplexMatrix out = apply_channel(kraus_set(cls), canonical_density(cls));
        const cloner::OutputState wrapped{out, cls.alpha(), cloner::optimal_params(cls)};
        CAPTURE(cls.alpha());
        CHECK(std::abs(cloner::fidelity_direct(wrapped) - cloner::f_max(cls)) < 1e-10);
    }
}

TEST_CASE("dilation is isometric and extends to the right unitary") {
    const EntanglementClass cls(0.5);
    const Dilation dil = dilation(cls);
    REQUIRE(dil.isometry.rows() == 64);
    CHECK(testutil::max_abs_diff(dil.isometry.adjoint() * dil.isometry,
                                 ComplexMatrix::identity(4)) < 1e-10);
    CHECK(testutil::max_abs_diff(dil.unitary.adjoint() * dil.unitary,
                                 ComplexMatrix::identity(64)) < 1e-9);

    // the unitary routes embedded inputs |psi>_12 x |0000> through the isometry
    for (int k = 0; k < 4; ++k)
        for (int r = 0; r < 64; ++r)
            CHECK(dil.unitary(r, 16 * k) == dil.isometry(r, k));

    // scalar products survive
    auto rng = testutil::make_rng();
    const ComplexMatrix a = testutil::random_matrix(4, 1, rng);
    const ComplexMatrix b = testutil::random_matrix(4, 1, rng);
    const cplx direct = (a.adjoint() * b)(0, 0);
    const cplx lifted = ((dil.isometry * a).adjoint() * (dil.isometry * b))(0, 0);
    CHECK(std::abs(direct - lifted) < 1e-10);
}

TEST_CASE("measure-and-discard dilation reproduces the kraus channel") {
    auto rng = testutil::make_rng();
    for (double alpha : {0.0, 0.3, kRoot2Inv}) {
        const EntanglementClass cls(alpha);
        const KrausSet ks = kraus_set(cls);
        const Dilation dil = dilation(cls);
        CAPTURE(alpha);
        const ComplexMatrix canon = canonical_density(cls);
        CHECK((apply_dilation(dil, canon) - apply_channel(ks, canon)).frobenius_norm() <
              1e-12);
        for (int round = 0; round < 4; ++round) {
            const ComplexMatrix rho = random_pure4(rng);
            CHECK((apply_dilation(dil, rho) - apply_channel(ks, rho)).frobenius_norm() <
                  1e-12);
        }
    }
}

TEST_CASE("the constructed channel is covariant") {
    const EntanglementClass cls(0.3);
    const ComplexMatrix id2 = ComplexMatrix::identity(2);
    CHECK(covariance_defect(cls, id2, id2) == 0.0);

    // quarter-turn about the y axis composed with itself: |u> -> |d> -> -|u>
    ComplexMatrix flip(2, 2);
    flip(0, 1) = -1.0;
    flip(1, 0) = 1.0;
    CHECK(covariance_defect(cls, flip, flip) < 1e-10);

    auto rng = testutil::make_rng();
    for (double alpha : {0.0, 0.3, kRoot2Inv}) {
        const EntanglementClass c(alpha);
        for (int round = 0; round < 30; ++round) {
            CAPTURE(alpha);
            CHECK(covariance_defect(c, haar_su2(rng), haar_su2(rng)) < 1e-10);
        }
    }
}

TEST_CASE("haar samples are special unitaries with vanishing mean") {
    auto rng = testutil::make_rng();
    for (int round = 0; round < 50; ++round) {
        const ComplexMatrix u = haar_su2(rng);
        CHECK(testutil::max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(2)) < 1e-14);
        const cplx det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
        CHECK(std::abs(det - cplx(1.0)) < 1e-14);
    }
    ComplexMatrix mean(2, 2);
    for (int i = 0; i < 100000; ++i) mean += haar_su2(rng);
    mean *= cplx(1.0 / 100000.0);
    CHECK(operator_norm(mean) <= 0.02);
}

TEST_CASE("twirl fixes the covariant channel and averages others") {
    const EntanglementClass cls(0.3);
    const ComplexMatrix rho = canonical_density(cls);
    const ChannelMap opt = optimal_channel(cls);

    // a single identity sample is the raw channel
    const ComplexMatrix id2 = ComplexMatrix::identity(2);
    CHECK((twirl_with_samples(opt, {{id2, id2}}, rho) - opt(rho)).frobenius_norm() <
          1e-14);

    // covariant fixed point: every sample already equals the output
    const ComplexMatrix averaged = twirl(opt, 1000, rho);
    CHECK((averaged - opt(rho)).frobenius_norm() < 5.0 / std::sqrt(1000.0));

    // determinism for a fixed seed
    const ComplexMatrix again = twirl(opt, 1000, rho);
    CHECK(testutil::max_abs_diff(averaged, again) == 0.0);

    CHECK_THROWS_AS(twirl(opt, 0, rho), std::invalid_argument);
}

TEST_CASE("twirling a non-covariant map suppresses its defect") {
    // constant map onto |uuuu><uuuu|: maximally non-covariant
    const ChannelMap stubborn = [](const ComplexMatrix& rho) {
        ComplexMatrix out(16, 16);
        out(0, 0) = rho.trace();
        return out;
    };
    const EntanglementClass cls(0.3);
    const ComplexMatrix rho = canonical_density(cls);

    auto rng = testutil::make_rng(777);
    const ComplexMatrix u1 = haar_su2(rng), u2 = haar_su2(rng);
    const double raw = map_covariance_defect(stubborn, u1, u2, rho);
    CHECK(raw > 0.1);

    auto twirled = [&](int n) {
        return map_covariance_defect(
            [&](const ComplexMatrix& r) { return twirl(stubborn, n, r, 2024); }, u1, u2,
            rho);
    };
    const double coarse = twirled(50);
    const double fine = twirled(5000);
    CHECK(coarse < raw);
    CHECK(fine < 0.5 * coarse);  // statistical error falls off with the sample count
}

TEST_CASE("choi matrix is positive semidefinite with total trace four") {
    for (int i = 0; i <= 10; ++i) {
        const EntanglementClass cls(kRoot2Inv * i / 10);
        const ComplexMatrix choi = choi_matrix(kraus_set(cls));
        CAPTURE(cls.alpha());
        REQUIRE(choi.rows() == 64);
        CHECK(choi.is_hermitian());
        CHECK(choi.trace().real() == doctest::Approx(4.0).epsilon(1e-12));
        CHECK(herm_eig(choi).values.back() >= -1e-10);
    }
}
