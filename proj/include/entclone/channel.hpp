#pragma once
#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "entclone/cloner.hpp"
#include "entclone/linalg.hpp"

// the optimal copying map as a deterministic quantum operation: Kraus set,
// six-qubit unitary dilation with algebraic non-selective ancilla
// measurement, covariance diagnostics, and the Haar twirl

namespace entclone::channel {

// four 16x4 operators mapping two-qubit inputs to four-qubit outputs
struct KrausSet {
    std::array<ComplexMatrix, 4> operators;
    double alpha;
};

// isometric extension of the channel and its unitary completion; the unitary
// agrees with the isometry on inputs of the form |psi> x |0000>
struct Dilation {
    ComplexMatrix isometry;  // 64x4
    ComplexMatrix unitary;   // 64x64
};

// a channel as a map from 4x4 inputs to 16x16 outputs
using ChannelMap = std::function<ComplexMatrix(const ComplexMatrix&)>;

// Hermitian generator sqrt(a1) P_T13 P_T24 + sqrt(a16) P_S13 P_S24 built
// from the optimal parameters of the class
ComplexMatrix k_operator(const cloner::EntanglementClass& cls);

// Kraus operators (K/2)(|psi> x |ij>), one per ancilla basis state
KrausSet kraus_set(const cloner::EntanglementClass& cls);

// sum of Kraus conjugations; throws when rho_in is not a density operator
ComplexMatrix apply_channel(const KrausSet& ks, const ComplexMatrix& rho_in);

// the channel map of the optimal cloner for a class
ChannelMap optimal_channel(const cloner::EntanglementClass& cls);

// column-wise isometry on the four basis inputs, completed to a unitary;
// throws when the isometry residual indicates a normalization bug
Dilation dilation(const cloner::EntanglementClass& cls);

// unitary evolution, non-selective measurement of the two ancilla qubits,
// and discarding them; must reproduce apply_channel
ComplexMatrix apply_dilation(const Dilation& dil, const ComplexMatrix& rho_in);

// Frobenius distance between map(u rho u^dag) and the locally rotated
// map(rho), with the output rotated by u1 x u2 x u1 x u2
double map_covariance_defect(const ChannelMap& map, const ComplexMatrix& u1,
                             const ComplexMatrix& u2, const ComplexMatrix& rho_in);

// the same defect for the optimal channel on its canonical input
double covariance_defect(const cloner::EntanglementClass& cls, const ComplexMatrix& u1,
                         const ComplexMatrix& u2);

// Haar-distributed special unitary from a uniform unit quaternion
ComplexMatrix haar_su2(std::mt19937_64& rng);

// group average over explicit local rotation pairs (u1, u2)
ComplexMatrix twirl_with_samples(
    const ChannelMap& map,
    const std::vector<std::pair<ComplexMatrix, ComplexMatrix>>& samples,
    const ComplexMatrix& rho_in);

// Monte-Carlo twirl over Haar-random pairs, deterministic for a fixed seed
ComplexMatrix twirl(const ChannelMap& map, int n_samples, const ComplexMatrix& rho_in,
                    std::uint64_t seed = 12345);

// 64-dimensional Choi matrix (input factor major); positive semidefinite
// exactly when the channel is completely positive
ComplexMatrix choi_matrix(const KrausSet& ks);

}  // namespace entclone::channel
