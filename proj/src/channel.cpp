#include "entclone/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "entclone/angular.hpp"

namespace entclone::channel {

namespace {

void require_unitary(const ComplexMatrix& u, const char* name) {
    if (u.rows() != 2 || u.cols() != 2)
        throw std::invalid_argument(std::string(name) + " must be 2x2");
    if ((u.adjoint() * u - ComplexMatrix::identity(2)).max_abs() > 1e-12)
        throw std::invalid_argument(std::string(name) + " is not unitary");
}

void require_density(const ComplexMatrix& rho) {
    if (rho.rows() != 4 || rho.cols() != 4)
        throw std::invalid_argument("input state must be 4x4");
    if (!rho.is_hermitian(1e-10)) throw std::invalid_argument("input state not Hermitian");
    if (std::abs(rho.trace() - cplx(1.0)) > 1e-10)
        throw std::invalid_argument("input state trace differs from one");
    if (herm_eig(rho).values.back() < -1e-10)
        throw std::invalid_argument("input state has a negative eigenvalue");
}

// embedding |psi>_12 -> |psi>_12 x |ij>_34 as a 16x4 zero-one matrix
ComplexMatrix ancilla_embedding(int i, int j) {
    ComplexMatrix e(16, 4);
    for (int b1 = 0; b1 < 2; ++b1)
        for (int b2 = 0; b2 < 2; ++b2) e(8 * b1 + 4 * b2 + 2 * i + j, 2 * b1 + b2) = 1.0;
    return e;
}

}  // namespace

ComplexMatrix k_operator(const cloner::EntanglementClass& cls) {
    const cloner::ClonerParams p = cloner::optimal_params(cls);
    const ComplexMatrix ps13 =
        angular::tensor_op({angular::Pair::P13, 0, 0, 0, 0});
    const ComplexMatrix ps24 =
        angular::tensor_op({angular::Pair::P24, 0, 0, 0, 0});
    const ComplexMatrix id = ComplexMatrix::identity(16);
    const ComplexMatrix pt13 = id - ps13;
    const ComplexMatrix pt24 = id - ps24;
    return std::sqrt(p.a[1].real()) * (pt13 * pt24) +
           std::sqrt(p.a[16].real()) * (ps13 * ps24);
}

KrausSet kraus_set(const cloner::EntanglementClass& cls) {
    const ComplexMatrix k = k_operator(cls);
    KrausSet ks{{ComplexMatrix(16, 4), ComplexMatrix(16, 4), ComplexMatrix(16, 4),
                 ComplexMatrix(16, 4)},
                cls.alpha()};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            ks.operators[2 * i + j] = 0.5 * (k * ancilla_embedding(i, j));
    return ks;
}

ComplexMatrix apply_channel(const KrausSet& ks, const ComplexMatrix& rho_in) {
    require_density(rho_in);
    ComplexMatrix out(16, 16);
    for (const ComplexMatrix& op : ks.operators) out += op * rho_in * op.adjoint();
    return out;
}

ChannelMap optimal_channel(const cloner::EntanglementClass& cls) {
    return [ks = kraus_set(cls)](const ComplexMatrix& rho) {
        return apply_channel(ks, rho);
    };
}

Dilation dilation(const cloner::EntanglementClass& cls) {
    const KrausSet ks = kraus_set(cls);
    // stack the Kraus actions, tagging each with its ancilla pair on the two
    // extra qubits (least significant bits of the six-qubit index)
    ComplexMatrix v(64, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const ComplexMatrix& op = ks.operators[2 * i + j];
            for (int r = 0; r < 16; ++r)
                for (int c = 0; c < 4; ++c) v(4 * r + 2 * i + j, c) += op(r, c);
        }
    if ((v.adjoint() * v - ComplexMatrix::identity(4)).max_abs() > 1e-10)
        throw std::logic_error("dilation columns fail to be isometric");

    // complete to a unitary, then permute columns so that the embedded
    // inputs |psi>_12 x |0000> (support on indices 16 k) hit the isometry
    const ComplexMatrix u0 = complete_isometry(v);
    ComplexMatrix unitary(64, 64);
    int spare = 4;
    for (int col = 0; col < 64; ++col) {
        const int source = (col % 16 == 0) ? col / 16 : spare++;
        for (int r = 0; r < 64; ++r) unitary(r, col) = u0(r, source);
    }
    return {v, unitary};
}

ComplexMatrix apply_dilation(const Dilation& dil, const ComplexMatrix& rho_in) {
    require_density(rho_in);
    ComplexMatrix anc(16, 16);
    anc(0, 0) = 1.0;  // all four ancilla qubits start in |0>
    const ComplexMatrix evolved =
        dil.unitary * kron(rho_in, anc) * dil.unitary.adjoint();

    // non-selective measurement of the last two qubits in the computational
    // basis: project onto each outcome and sum
    ComplexMatrix measured(64, 64);
    for (int outcome = 0; outcome < 4; ++outcome) {
        ComplexMatrix pick(4, 4);
        pick(outcome, outcome) = 1.0;
        const ComplexMatrix proj = kron(ComplexMatrix::identity(16), pick);
        measured += proj * evolved * proj;
    }
    return partial_trace(measured, {1, 2, 3, 4});
}

double map_covariance_defect(const ChannelMap& map, const ComplexMatrix& u1,
                             const ComplexMatrix& u2, const ComplexMatrix& rho_in) {
    require_unitary(u1, "u1");
    require_unitary(u2, "u2");
    const ComplexMatrix u12 = kron(u1, u2);
    const ComplexMatrix rotated_in = map(u12 * rho_in * u12.adjoint());
    const ComplexMatrix big = kron(u12, u12);
    const ComplexMatrix rotated_out = big * map(rho_in) * big.adjoint();
    return (rotated_in - rotated_out).frobenius_norm();
}

double covariance_defect(const cloner::EntanglementClass& cls, const ComplexMatrix& u1,
                         const ComplexMatrix& u2) {
    const ComplexMatrix psi = cloner::canonical_state(cls);
    return map_covariance_defect(optimal_channel(cls), u1, u2, psi * psi.adjoint());
}

ComplexMatrix haar_su2(std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    double w, x, y, z, n2;
    do {
        w = normal(rng);
        x = normal(rng);
        y = normal(rng);
        z = normal(rng);
        n2 = w * w + x * x + y * y + z * z;
    } while (n2 < 1e-12);
    const double n = std::sqrt(n2);
    w /= n;
    x /= n;
    y /= n;
    z /= n;
    ComplexMatrix u(2, 2);
    u(0, 0) = cplx(w, x);
    u(0, 1) = cplx(y, z);
    u(1, 0) = cplx(-y, z);
    u(1, 1) = cplx(w, -x);
    return u;
}

ComplexMatrix twirl_with_samples(
    const ChannelMap& map,
    const std::vector<std::pair<ComplexMatrix, ComplexMatrix>>& samples,
    const ComplexMatrix& rho_in) {
    if (samples.empty()) throw std::invalid_argument("need at least one sample");
    // compensated summation keeps the average independent of magnitudes
    ComplexMatrix sum(16, 16), comp(16, 16);
    for (const auto& [u1, u2] : samples) {
        const ComplexMatrix u12 = kron(u1, u2);
        const ComplexMatrix big = kron(u12, u12);
        const ComplexMatrix term =
            big.adjoint() * map(u12 * rho_in * u12.adjoint()) * big;
        for (int r = 0; r < 16; ++r)
            for (int c = 0; c < 16; ++c) {
                const cplx y = term(r, c) - comp(r, c);
                const cplx t = sum(r, c) + y;
                comp(r, c) = (t - sum(r, c)) - y;
                sum(r, c) = t;
            }
    }
    return (1.0 / static_cast<double>(samples.size())) * sum;
}

ComplexMatrix twirl(const ChannelMap& map, int n_samples, const ComplexMatrix& rho_in,
                    std::uint64_t seed) {
    if (n_samples < 1) throw std::invalid_argument("need at least one sample");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<ComplexMatrix, ComplexMatrix>> samples;
    samples.reserve(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        ComplexMatrix u1 = haar_su2(rng);
        ComplexMatrix u2 = haar_su2(rng);
        samples.emplace_back(std::move(u1), std::move(u2));
    }
    return twirl_with_samples(map, samples, rho_in);
}

ComplexMatrix choi_matrix(const KrausSet& ks) {
    // each Kraus operator contributes one rank-one term built from the
    // vector with components |k> x (op |k>)
    ComplexMatrix choi(64, 64);
    for (const ComplexMatrix& op : ks.operators) {
        ComplexMatrix vec(64, 1);
        for (int k = 0; k < 4; ++k)
            for (int r = 0; r < 16; ++r) vec(16 * k + r, 0) = op(r, k);
        choi += vec * vec.adjoint();
    }
    return choi;
}

}  // namespace entclone::channel
